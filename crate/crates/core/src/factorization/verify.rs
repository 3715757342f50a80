use crate::brace::{
    fix, ideals, is_ideal, is_left_ideal, is_meta_trivial, is_simple, is_strong_left_ideal,
    is_trivial_subbrace, ker_lambda, right_nilpotency_class, socle, star_product, sub_brace, SkewBrace,
};
use crate::report::{Check, Report};
use crate::subset::Subset;

use super::{circ_set, sum_set, Factorization, FactorizationError};

fn require_trivial_trivial(f: &Factorization) -> Result<(), FactorizationError> {
    if !f.is_trivial_trivial() {
        return Err(FactorizationError::PreconditionViolated(
            "both factors must be trivial sub-braces".into(),
        ));
    }
    Ok(())
}

fn require_strong_b(f: &Factorization) -> Result<(), FactorizationError> {
    require_trivial_trivial(f)?;
    if !f.b_strong {
        return Err(FactorizationError::PreconditionViolated("B must be a strong left ideal".into()));
    }
    Ok(())
}

fn first_outside(s: &Subset, full: &Subset) -> Vec<usize> {
    full.iter().find(|&x| !s.contains(x)).into_iter().collect()
}

/// `A = B + C = C + B = B ∘ C = C ∘ B` as raw sets.
pub fn check_product_sets(a: &SkewBrace, f: &Factorization) -> Check {
    let full = Subset::full(a.order());
    let sets = [
        ("B+C", sum_set(a, &f.b, &f.c)),
        ("C+B", sum_set(a, &f.c, &f.b)),
        ("B∘C", circ_set(a, &f.b, &f.c)),
        ("C∘B", circ_set(a, &f.c, &f.b)),
    ];
    for (name, s) in sets {
        if !s.is_full() {
            return Check::fail("product_sets_cover", first_outside(&s, &full), format!("{name} misses an element"));
        }
    }
    Check::pass("product_sets_cover")
}

/// For trivial factors `B`, `C`, with `b, β ∈ B` and `c, γ ∈ C`:
/// `λ_{β∘γ} = λ_{γ∘β}`; `(c+b)∘β − β = c + b + c∗β`;
/// `b∘c∘b′∘c′ = b∘c − c∘b = b + λ_b(c) − λ_c(b) − c ∈ Ker λ`.
pub fn verify_lemma_calculations(a: &SkewBrace, f: &Factorization) -> Result<Report, FactorizationError> {
    require_trivial_trivial(f)?;
    let mut r = Report::new();

    let lambda_commute = || {
        for beta in f.b.iter() {
            for gamma in f.c.iter() {
                if a.lambda(a.circ(beta, gamma)) != a.lambda(a.circ(gamma, beta)) {
                    return Err((vec![beta, gamma], "λ_{β∘γ} ≠ λ_{γ∘β}".to_string()));
                }
            }
        }
        Ok(())
    };
    r.push(Check::from_result("lambda_of_products_commute", lambda_commute()));

    let shifted = || {
        for c in f.c.iter() {
            for b in f.b.iter() {
                for beta in f.b.iter() {
                    let lhs = a.sub(a.circ(a.add(c, b), beta), beta);
                    let rhs = a.add(a.add(c, b), a.star(c, beta));
                    if lhs != rhs {
                        return Err((vec![c, b, beta], "(c+b)∘β − β ≠ c + b + c∗β".to_string()));
                    }
                }
            }
        }
        Ok(())
    };
    r.push(Check::from_result("shifted_product_identity", shifted()));

    let ker = ker_lambda(a);
    let commutator = || {
        for b in f.b.iter() {
            for c in f.c.iter() {
                let bc = a.circ(b, c);
                let cb = a.circ(c, b);
                let x = a.circ(a.circ(bc, a.circ_inverse(b)), a.circ_inverse(c));
                let y = a.sub(bc, cb);
                let z = a.sub(a.sub(a.add(b, a.lambda(b).apply(c)), a.lambda(c).apply(b)), c);
                if x != y || y != z {
                    return Err((vec![b, c], "commutator expressions disagree".to_string()));
                }
                if !ker.contains(x) {
                    return Err((vec![b, c], "b∘c∘b′∘c′ is not in Ker λ".to_string()));
                }
            }
        }
        Ok(())
    };
    r.push(Check::from_result("commutator_in_ker_lambda", commutator()));
    Ok(r)
}

fn class_at_most(a: &SkewBrace, bound: usize) -> Check {
    let name = format!("right_class_at_most_{bound}");
    match right_nilpotency_class(a) {
        Some(m) if m <= bound => Check::pass(name).with_detail(format!("class {m}")),
        Some(m) => Check::fail(name, Vec::new(), format!("class {m}")),
        None => Check::fail(name, Vec::new(), "not right nilpotent"),
    }
}

fn check_strong_trivial(a: &SkewBrace, name: &str, s: &Subset) -> Check {
    if !is_strong_left_ideal(a, s) {
        return Check::fail(name, s.elements().to_vec(), "not a strong left ideal");
    }
    if !is_trivial_subbrace(a, s) {
        return Check::fail(name, s.elements().to_vec(), "not a trivial sub-brace");
    }
    Check::pass(name)
}

/// Trivial factors: `B∗C` and `C∗B` are strong left ideals and trivial,
/// `A^(2) = B∗C + C∗B`, and `A^(2)` is meta-trivial. With both factors
/// strong also: right class ≤ 3, `A` meta-trivial and, for `A ≠ 0`, not simple.
pub fn verify_ito(a: &SkewBrace, f: &Factorization) -> Result<Report, FactorizationError> {
    require_trivial_trivial(f)?;
    let full = Subset::full(a.order());
    let bc = star_product(a, &f.b, &f.c);
    let cb = star_product(a, &f.c, &f.b);
    let a2 = star_product(a, &full, &full);
    let mut r = Report::new();
    r.push(check_strong_trivial(a, "b_star_c_strong_trivial", &bc));
    r.push(check_strong_trivial(a, "c_star_b_strong_trivial", &cb));
    let sum = sum_set(a, &bc, &cb);
    r.push(if sum == a2 {
        Check::pass("square_is_sum_of_star_products")
    } else {
        let w = a2.iter().chain(sum.iter()).find(|&x| a2.contains(x) != sum.contains(x));
        Check::fail("square_is_sum_of_star_products", w.into_iter().collect(), "A^(2) ≠ B∗C + C∗B")
    });
    let square = sub_brace(a, &a2).expect("A^(2) is an ideal");
    r.push(if is_meta_trivial(&square) {
        Check::pass("square_meta_trivial")
    } else {
        Check::fail("square_meta_trivial", a2.elements().to_vec(), "A^(2) is not meta-trivial")
    });
    if f.b_strong && f.c_strong {
        r.push(class_at_most(a, 3));
        r.push(if is_meta_trivial(a) {
            Check::pass("meta_trivial")
        } else {
            Check::fail("meta_trivial", a2.elements().to_vec(), "A^(2) is not trivial")
        });
        if a.order() > 1 {
            r.push(if is_simple(a) {
                Check::fail("not_simple", Vec::new(), "strong trivial factors but A is simple")
            } else {
                Check::pass("not_simple")
            });
        }
    }
    Ok(r)
}

/// Non-zero ideal inside `B` or `C` contained in `Ker λ`; the smallest such
/// is returned. Requires trivial factors with `B` strong.
pub fn find_trivializing_ideal(a: &SkewBrace, f: &Factorization) -> Result<Option<Subset>, FactorizationError> {
    require_strong_b(f)?;
    let ker = ker_lambda(a);
    Ok(ideals(a).into_iter().find(|i| {
        !i.is_zero() && (i.is_subset_of(&f.b) || i.is_subset_of(&f.c)) && i.is_subset_of(&ker)
    }))
}

/// Right class ≤ 4 and `B∗C` an ideal. Requires trivial factors with `B` strong.
pub fn check_class_four(a: &SkewBrace, f: &Factorization) -> Result<Report, FactorizationError> {
    require_strong_b(f)?;
    let mut r = Report::new();
    r.push(class_at_most(a, 4));
    let bc = star_product(a, &f.b, &f.c);
    r.push(if is_ideal(a, &bc) {
        Check::pass("b_star_c_ideal")
    } else {
        Check::fail("b_star_c_ideal", bc.elements().to_vec(), "B∗C is not an ideal")
    });
    // the trivializing ideal itself
    r.push(match find_trivializing_ideal(a, f)? {
        Some(i) => Check::pass("trivializing_ideal").with_detail(format!("{:?}", i.elements())),
        None if a.is_trivial() => Check::pass("trivializing_ideal").with_detail("A is trivial"),
        None => Check::fail("trivializing_ideal", Vec::new(), "no non-zero ideal in B or C acts trivially"),
    });
    Ok(r)
}

/// `I = (I ∩ B) + (I ∩ C)`.
pub fn is_factorized_left_ideal(a: &SkewBrace, f: &Factorization, i: &Subset) -> Result<bool, FactorizationError> {
    if !is_left_ideal(a, i) {
        return Err(FactorizationError::NotLeftIdeal);
    }
    Ok(&sum_set(a, &i.intersection(&f.b), &i.intersection(&f.c)) == i)
}

pub fn check_fix_factorized(a: &SkewBrace, f: &Factorization) -> Result<bool, FactorizationError> {
    require_trivial_trivial(f)?;
    is_factorized_left_ideal(a, f, &fix(a))
}

pub fn check_soc_factorized(a: &SkewBrace, f: &Factorization) -> Result<bool, FactorizationError> {
    if !a.is_left_brace() {
        return Err(FactorizationError::NotALeftBrace);
    }
    require_trivial_trivial(f)?;
    is_factorized_left_ideal(a, f, &socle(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::trivial_brace;
    use crate::factorization::{find_factorizations, FactorizationQuery};
    use crate::group::{cyclic, symmetric};

    fn c6() -> (SkewBrace, Factorization) {
        let a = trivial_brace(cyclic(6));
        let f = find_factorizations(&a, &FactorizationQuery::trivial_trivial()).remove(0);
        (a, f)
    }

    #[test]
    fn trivial_brace_passes_everything() {
        let (a, f) = c6();
        assert!(check_product_sets(&a, &f).passed);
        assert!(verify_lemma_calculations(&a, &f).unwrap().passed());
        let r = verify_ito(&a, &f).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(check_class_four(&a, &f).unwrap().passed());
        assert!(check_fix_factorized(&a, &f).unwrap());
        assert!(check_soc_factorized(&a, &f).unwrap());
        // B, C are themselves ideals acting trivially
        assert_eq!(find_trivializing_ideal(&a, &f).unwrap().unwrap().elements(), &[0, 3]);
    }

    #[test]
    fn factorized_ideal_edges() {
        let (a, f) = c6();
        assert!(is_factorized_left_ideal(&a, &f, &Subset::zero(6)).unwrap());
        assert!(is_factorized_left_ideal(&a, &f, &Subset::full(6)).unwrap());
        assert_eq!(
            is_factorized_left_ideal(&a, &f, &Subset::new(6, [0, 1]).unwrap()),
            Err(FactorizationError::NotLeftIdeal)
        );
    }

    #[test]
    fn preconditions_are_enforced() {
        let a = trivial_brace(symmetric(3));
        // S3 = A3 + ⟨(12)⟩ in the trivial brace; the order-2 factor is not strong
        let fs = find_factorizations(&a, &FactorizationQuery::trivial_trivial());
        let f = fs.iter().find(|f| !f.b_strong || !f.c_strong).unwrap();
        let weak_b = if f.b_strong { f.swapped() } else { f.clone() };
        assert!(matches!(find_trivializing_ideal(&a, &weak_b), Err(FactorizationError::PreconditionViolated(_))));
        assert!(matches!(check_soc_factorized(&a, &weak_b), Err(FactorizationError::NotALeftBrace)));
        let mut not_trivial = weak_b.clone();
        not_trivial.c_trivial = false;
        assert!(verify_ito(&a, &not_trivial).is_err());
    }
}
