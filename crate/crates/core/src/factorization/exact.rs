use serde::Serialize;

use crate::brace::{is_ideal, is_left_ideal, right_nilpotency_class, validate_brace, SkewBrace};
use crate::group::{all_subgroups, are_isomorphic, direct_product, induced_table, is_normal, GroupTable};
use crate::report::{Check, Report};
use crate::subset::Subset;

use super::FactorizationError;

/// `G = B + C` with `B ∩ C = {0}`; every element splits uniquely as `b + c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactFactorization {
    #[serde(skip)]
    g: GroupTable,
    pub b: Subset,
    pub c: Subset,
    /// `parts[x] = (b, c)` with `x = b + c`.
    #[serde(skip)]
    parts: Vec<(usize, usize)>,
}

impl ExactFactorization {
    pub fn new(g: GroupTable, b: Subset, c: Subset) -> Result<ExactFactorization, FactorizationError> {
        let n = g.order();
        if b.ambient() != n || c.ambient() != n {
            return Err(FactorizationError::NotExact("subsets live on a different carrier".into()));
        }
        for (name, s) in [("B", &b), ("C", &c)] {
            if !crate::group::is_subgroup(&g, s) {
                return Err(FactorizationError::NotExact(format!("{name} is not a subgroup")));
            }
        }
        let mut parts = vec![(usize::MAX, usize::MAX); n];
        for x in b.iter() {
            for y in c.iter() {
                let s = g.op(x, y);
                if parts[s].0 != usize::MAX {
                    return Err(FactorizationError::NotExact(format!("{s} splits in two ways")));
                }
                parts[s] = (x, y);
            }
        }
        if let Some(x) = parts.iter().position(|p| p.0 == usize::MAX) {
            return Err(FactorizationError::NotExact(format!("{x} is not in B + C")));
        }
        Ok(ExactFactorization { g, b, c, parts })
    }

    pub fn group(&self) -> &GroupTable {
        &self.g
    }

    pub fn split(&self, x: usize) -> (usize, usize) {
        self.parts[x]
    }
}

/// Every ordered pair of subgroups giving an exact factorization of `g`,
/// including the two with a zero factor.
pub fn exact_factorizations(g: &GroupTable) -> Vec<ExactFactorization> {
    let subs = all_subgroups(g);
    let n = g.order();
    let mut out = Vec::new();
    for b in &subs {
        for c in &subs {
            if b.len() * c.len() == n && b.intersection(c).is_zero() {
                out.push(ExactFactorization::new(g.clone(), b.clone(), c.clone()).expect("orders and intersection checked"));
            }
        }
    }
    out
}

/// `x ∘ y = b + y + c` where `x = b + c`; the result is validated and its
/// multiplicative group checked against `B × C`.
pub fn exact_factorization_brace(ef: &ExactFactorization) -> Result<SkewBrace, FactorizationError> {
    let g = &ef.g;
    let n = g.order();
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let (b, c) = ef.parts[x];
            (0..n).map(|y| g.op(g.op(b, y), c)).collect()
        })
        .collect();
    let circ = crate::group::validate_group(&rows).map_err(|source| {
        FactorizationError::Brace(crate::brace::BraceError::Group { which: "multiplicative", source })
    })?;
    let a = validate_brace(g.clone(), circ)?;
    let bxc = direct_product(
        &induced_table(g, &ef.b).expect("subgroup"),
        &induced_table(g, &ef.c).expect("subgroup"),
    );
    if are_isomorphic(a.multiplicative(), &bxc).is_none() {
        return Err(FactorizationError::NotExact("multiplicative group is not B × C".into()));
    }
    Ok(a)
}

/// On the brace of an exact factorization: `C` is a left ideal; `(C,+)`
/// normal ⇒ `C` ideal; `(B,+)` normal ⇒ `B` ideal; both normal with `(C,+)`
/// abelian ⇒ right class ≤ 3.
pub fn check_exact_factorization_props(a: &SkewBrace, ef: &ExactFactorization) -> Report {
    let g = a.additive();
    let b_normal = is_normal(g, &ef.b).expect("subgroup");
    let c_normal = is_normal(g, &ef.c).expect("subgroup");
    let mut r = Report::new();
    r.push(if is_left_ideal(a, &ef.c) {
        Check::pass("c_left_ideal")
    } else {
        Check::fail("c_left_ideal", ef.c.elements().to_vec(), "C is not a left ideal")
    });
    r.push(if !c_normal || is_ideal(a, &ef.c) {
        Check::pass("c_normal_implies_ideal")
    } else {
        Check::fail("c_normal_implies_ideal", ef.c.elements().to_vec(), "C is normal but not an ideal")
    });
    r.push(if !b_normal || is_ideal(a, &ef.b) {
        Check::pass("b_normal_implies_ideal")
    } else {
        Check::fail("b_normal_implies_ideal", ef.b.elements().to_vec(), "B is normal but not an ideal")
    });
    let c_abelian = ef.c.iter().all(|x| ef.c.iter().all(|y| g.op(x, y) == g.op(y, x)));
    let applies = b_normal && c_normal && c_abelian;
    r.push(match (applies, right_nilpotency_class(a)) {
        (false, _) => Check::pass("normal_abelian_implies_class_at_most_3").with_detail("hypotheses not met"),
        (true, Some(m)) if m <= 3 => Check::pass("normal_abelian_implies_class_at_most_3"),
        (true, m) => Check::fail(
            "normal_abelian_implies_class_at_most_3",
            Vec::new(),
            format!("right class {m:?}"),
        ),
    });
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};

    #[test]
    fn zero_factor_gives_trivial_brace() {
        let g = symmetric(3);
        let ef = ExactFactorization::new(g.clone(), Subset::full(6), Subset::zero(6)).unwrap();
        let a = exact_factorization_brace(&ef).unwrap();
        assert!(a.is_trivial());
        assert!(check_exact_factorization_props(&a, &ef).passed());
        // with B = 0 the operation is x∘y = y + x
        let ef = ExactFactorization::new(g.clone(), Subset::zero(6), Subset::full(6)).unwrap();
        let a = exact_factorization_brace(&ef).unwrap();
        assert!((0..6).all(|x| (0..6).all(|y| a.circ(x, y) == g.op(y, x))));
    }

    #[test]
    fn overlapping_or_short_pairs_are_rejected() {
        let g = cyclic(4);
        let h = Subset::new(4, [0, 2]).unwrap();
        assert!(matches!(
            ExactFactorization::new(g.clone(), h.clone(), h.clone()),
            Err(FactorizationError::NotExact(_))
        ));
        assert!(matches!(
            ExactFactorization::new(g, Subset::new(4, [0, 1]).unwrap(), h),
            Err(FactorizationError::NotExact(_))
        ));
    }

    #[test]
    fn s3_exact_factorizations() {
        let g = symmetric(3);
        let efs = exact_factorizations(&g);
        // (0, G), (G, 0), A3 with each of the three transpositions in both orders
        assert_eq!(efs.len(), 2 + 6);
        for ef in &efs {
            let a = exact_factorization_brace(ef).unwrap();
            let r = check_exact_factorization_props(&a, ef);
            assert!(r.passed(), "{r:?}");
        }
    }
}
