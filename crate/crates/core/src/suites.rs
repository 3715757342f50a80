//! Named exhaustive property runs over the brace catalog of one order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::brace::{
    are_isomorphic_braces, decompose_as_power_of_simple, is_characteristically_simple, right_nilpotency_class,
    strong_left_ideals, SkewBrace,
};
use crate::enumeration::{braces_of_order, classes_on, count_regular_subgroups, brute_force_oracle, catalog_query, BraceCatalog, EnumerationError};
use crate::factorization::{
    check_class_four, check_exact_factorization_props, check_fix_factorized, check_product_sets,
    check_soc_factorized, exact_factorization_brace, exact_factorizations, find_factorizations, verify_ito,
    verify_lemma_calculations, Factorization, FactorizationQuery,
};
use crate::fixtures::{irretractable_four_point_solution, s4_exact_factorization};
use crate::group::{group_catalog, identify_group, is_normal};
use crate::brace::{is_left_ideal, is_trivial_subbrace, star_product, sub_brace};
use crate::report::{Check, Report};
use crate::subset::Subset;
use crate::ybe::{
    decomposition_from_strong_left_ideal, is_decomposable, multipermutation_level, permutation_group_of_solution,
    retraction, try_solution_from_brace, LevelVerdict, DEFAULT_GROUP_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Defining formulas, star identities and the conjugation formula.
    Axioms,
    /// Product-set and commutator identities for trivial factors.
    Lemmas,
    /// Star products of trivial factors; class ≤ 3 for strong trivial factors.
    Ito,
    /// Trivializing ideal and class ≤ 4 when one trivial factor is strong.
    Itocor,
    /// `Fix(A)` and `Soc(A)` are factorized.
    SocFix,
    /// Strong left ideals decompose `r_A`.
    Decomposable,
    /// `r_A` validity, involutivity and multipermutation level.
    Solutions,
    /// Characteristic simplicity against powers of simple braces.
    Charsimple,
    /// Braces of exact factorizations of the catalog groups.
    Exact,
    /// Holomorph catalog against the brute-force oracle.
    Enumeration,
    /// The worked examples; independent of the order.
    Fixtures,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Axioms,
        Suite::Lemmas,
        Suite::Ito,
        Suite::Itocor,
        Suite::SocFix,
        Suite::Decomposable,
        Suite::Solutions,
        Suite::Charsimple,
        Suite::Exact,
        Suite::Enumeration,
        Suite::Fixtures,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Lemmas => "lemmas",
            Suite::Ito => "ito",
            Suite::Itocor => "itocor",
            Suite::SocFix => "soc-fix",
            Suite::Decomposable => "decomposable",
            Suite::Solutions => "solutions",
            Suite::Charsimple => "charsimple",
            Suite::Exact => "exact",
            Suite::Enumeration => "enumeration",
            Suite::Fixtures => "fixtures",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Suite, UnknownSuite> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteFailure {
    /// Catalog index of the brace (or group, for `exact`).
    pub entry: usize,
    pub context: String,
    pub check: Check,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub order: usize,
    pub entries: usize,
    /// Factorizations, ideals or other configurations examined.
    pub cases: usize,
    pub checks: usize,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Run {
    keep_going: bool,
    outcome: SuiteOutcome,
}

impl Run {
    fn stopped(&self) -> bool {
        !self.keep_going && !self.outcome.failures.is_empty()
    }

    fn case(&mut self) {
        self.outcome.cases += 1;
    }

    fn check(&mut self, entry: usize, context: impl FnOnce() -> String, c: Check) {
        self.outcome.checks += 1;
        if !c.passed && !self.stopped() {
            self.outcome.failures.push(SuiteFailure { entry, context: context(), check: c });
        }
    }

    fn report(&mut self, entry: usize, context: impl Fn() -> String, r: Report) {
        for c in r.checks {
            self.check(entry, &context, c);
        }
    }
}

fn pair_context(f: &Factorization) -> String {
    format!("B={:?} C={:?}", f.b.elements(), f.c.elements())
}

/// Builds the holomorph catalog of `order` and runs `suite` over it.
pub fn run_suite(suite: Suite, order: usize, keep_going: bool) -> Result<SuiteOutcome, EnumerationError> {
    let cat = match suite {
        // these suites do not look at braces of the given order
        Suite::Exact | Suite::Fixtures => BraceCatalog {
            order,
            entries: Vec::new(),
            provenance: crate::enumeration::Provenance::Holomorph,
        },
        _ => braces_of_order(order)?,
    };
    run_suite_on(suite, &cat, keep_going)
}

pub fn run_suite_on(suite: Suite, cat: &BraceCatalog, keep_going: bool) -> Result<SuiteOutcome, EnumerationError> {
    let mut run = Run {
        keep_going,
        outcome: SuiteOutcome {
            suite,
            order: cat.order,
            entries: cat.entries.len(),
            cases: 0,
            checks: 0,
            failures: Vec::new(),
        },
    };
    match suite {
        Suite::Exact => exact(&mut run, cat.order)?,
        Suite::Enumeration => enumeration(&mut run, cat)?,
        Suite::Fixtures => fixtures(&mut run)?,
        _ => {
            for (i, a) in cat.entries.iter().enumerate() {
                if run.stopped() {
                    break;
                }
                per_brace(suite, &mut run, i, a);
            }
        }
    }
    Ok(run.outcome)
}

fn per_brace(suite: Suite, run: &mut Run, i: usize, a: &SkewBrace) {
    let none = String::new;
    match suite {
        Suite::Axioms => {
            run.case();
            run.report(i, none, axioms(a));
        }
        Suite::Lemmas => {
            for f in find_factorizations(a, &FactorizationQuery::default()) {
                run.case();
                run.check(i, || pair_context(&f), check_product_sets(a, &f));
                if f.is_trivial_trivial() {
                    let r = verify_lemma_calculations(a, &f).expect("trivial factors");
                    run.report(i, || pair_context(&f), r);
                }
            }
        }
        Suite::Ito => {
            for f in find_factorizations(a, &FactorizationQuery::trivial_trivial()) {
                run.case();
                run.report(i, || pair_context(&f), verify_ito(a, &f).expect("trivial factors"));
            }
        }
        Suite::Itocor => {
            for f in find_factorizations(a, &FactorizationQuery::trivial_trivial()) {
                for g in [f.clone(), f.swapped()] {
                    if g.b_strong && (g.b != g.c || g == f) {
                        run.case();
                        run.report(i, || pair_context(&g), check_class_four(a, &g).expect("preconditions"));
                    }
                }
            }
        }
        Suite::SocFix => {
            for f in find_factorizations(a, &FactorizationQuery::trivial_trivial()) {
                run.case();
                let fix_ok = check_fix_factorized(a, &f).expect("trivial factors");
                run.check(i, || pair_context(&f), verdict("fix_factorized", fix_ok, &crate::brace::fix(a)));
                if a.is_left_brace() {
                    let soc_ok = check_soc_factorized(a, &f).expect("left brace, trivial factors");
                    run.check(i, || pair_context(&f), verdict("socle_factorized", soc_ok, &crate::brace::socle(a)));
                }
            }
        }
        Suite::Decomposable => decomposable(run, i, a),
        Suite::Solutions => solutions(run, i, a),
        Suite::Charsimple => {
            if a.order() >= 2 {
                run.case();
                let cs = is_characteristically_simple(a);
                let power = decompose_as_power_of_simple(a);
                let c = if cs == power.is_some() {
                    Check::pass("char_simple_iff_power_of_simple")
                } else {
                    Check::fail(
                        "char_simple_iff_power_of_simple",
                        Vec::new(),
                        format!("characteristically simple: {cs}, power of simple: {}", power.is_some()),
                    )
                };
                run.check(i, none, c);
            }
        }
        Suite::Exact | Suite::Enumeration | Suite::Fixtures => unreachable!("handled by the caller"),
    }
}

fn verdict(name: &str, ok: bool, s: &Subset) -> Check {
    if ok {
        Check::pass(name)
    } else {
        Check::fail(name, s.elements().to_vec(), "not factorized")
    }
}

fn first_failure<I: Iterator<Item = Vec<usize>>>(mut it: I, name: &str, detail: &str) -> Check {
    match it.next() {
        None => Check::pass(name),
        Some(w) => Check::fail(name, w, detail),
    }
}

/// `a∘b = a + λ_a(b)`, `a + b = a ∘ λ_a⁻¹(b)`, `λ_a(a′) = −a`, `λ` a
/// homomorphism into `Aut(A,+)`, the two star identities, and the
/// conjugation formula `a∘b∘a′ = a + λ_a(b + b∗a′) − a`.
pub fn axioms(a: &SkewBrace) -> Report {
    let n = a.order();
    let pairs = || (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
    let triples = || pairs().flat_map(move |(x, y)| (0..n).map(move |z| (x, y, z)));
    let inv: Vec<_> = (0..n).map(|x| a.lambda(x).inverse()).collect();
    let mut r = Report::new();
    r.push(first_failure(
        pairs().filter(|&(x, y)| a.circ(x, y) != a.add(x, a.lambda(x).apply(y))).map(|(x, y)| vec![x, y]),
        "circ_via_lambda",
        "a∘b ≠ a + λ_a(b)",
    ));
    r.push(first_failure(
        pairs().filter(|&(x, y)| a.add(x, y) != a.circ(x, inv[x].apply(y))).map(|(x, y)| vec![x, y]),
        "sum_via_lambda_inverse",
        "a+b ≠ a∘λ_a⁻¹(b)",
    ));
    r.push(first_failure(
        (0..n).filter(|&x| a.lambda(x).apply(a.circ_inverse(x)) != a.neg(x)).map(|x| vec![x]),
        "lambda_of_circ_inverse",
        "λ_a(a′) ≠ −a",
    ));
    r.push(first_failure(
        triples()
            .filter(|&(x, y, z)| a.lambda(x).apply(a.add(y, z)) != a.add(a.lambda(x).apply(y), a.lambda(x).apply(z)))
            .map(|(x, y, z)| vec![x, y, z]),
        "lambda_additive",
        "λ_a(b+c) ≠ λ_a(b) + λ_a(c)",
    ));
    r.push(first_failure(
        pairs().filter(|&(x, y)| *a.lambda(a.circ(x, y)) != a.lambda(x).compose(a.lambda(y))).map(|(x, y)| vec![x, y]),
        "lambda_homomorphism",
        "λ_{a∘b} ≠ λ_a λ_b",
    ));
    r.push(first_failure(
        triples()
            .filter(|&(x, y, z)| {
                let rhs = a.sub(a.add(a.add(a.star(x, y), y), a.star(x, z)), y);
                a.star(x, a.add(y, z)) != rhs
            })
            .map(|(x, y, z)| vec![x, y, z]),
        "star_of_sum",
        "x∗(y+z) ≠ x∗y + y + x∗z − y",
    ));
    r.push(first_failure(
        triples()
            .filter(|&(x, y, z)| {
                let rhs = a.add(a.add(a.star(x, a.star(y, z)), a.star(y, z)), a.star(x, z));
                a.star(a.circ(x, y), z) != rhs
            })
            .map(|(x, y, z)| vec![x, y, z]),
        "star_of_circ",
        "(x∘y)∗z ≠ x∗(y∗z) + y∗z + x∗z",
    ));
    r.push(first_failure(
        pairs()
            .filter(|&(x, y)| {
                let xi = a.circ_inverse(x);
                let conj = a.circ(a.circ(x, y), xi);
                let inner = a.add(a.add(y, a.star(y, xi)), xi);
                let mid = a.add(x, a.lambda(x).apply(inner));
                let last = a.sub(a.add(x, a.lambda(x).apply(a.add(y, a.star(y, xi)))), x);
                a.circ(y, xi) != inner || conj != mid || conj != last
            })
            .map(|(x, y)| vec![x, y]),
        "conjugation_formula",
        "a∘b∘a′ ≠ a + λ_a(b + b∗a′) − a",
    ));
    r
}

fn decomposable(run: &mut Run, i: usize, a: &SkewBrace) {
    let n = a.order();
    for s in strong_left_ideals(a) {
        if s.is_zero() || s.is_full() {
            continue;
        }
        run.case();
        let c = match decomposition_from_strong_left_ideal(a, &s) {
            Ok(_) => Check::pass("strong_left_ideal_decomposes"),
            Err(crate::ybe::SolutionError::DecompositionFailure { x, y }) => {
                Check::fail("strong_left_ideal_decomposes", vec![x, y], "pair lands in the wrong block")
            }
            Err(e) => Check::fail("strong_left_ideal_decomposes", s.elements().to_vec(), e.to_string()),
        };
        run.check(i, || format!("I={:?}", s.elements()), c);
    }
    if n >= 2 {
        let s = try_solution_from_brace(a).expect("r_A is a solution");
        let c = match is_decomposable(&s) {
            Some(d) if d.first_violation(&s).is_none() => Check::pass("orbit_decomposition"),
            Some(d) => Check::fail("orbit_decomposition", d.y.elements().to_vec(), "orbit split fails"),
            None => Check::fail("orbit_decomposition", Vec::new(), "{0} is not split off"),
        };
        run.check(i, String::new, c);
    }
}

fn solutions(run: &mut Run, i: usize, a: &SkewBrace) {
    run.case();
    let s = match try_solution_from_brace(a) {
        Ok(s) => s,
        Err(e) => {
            run.check(i, String::new, Check::fail("r_a_is_solution", Vec::new(), e.to_string()));
            return;
        }
    };
    run.check(i, String::new, Check::pass("r_a_is_solution"));
    run.check(
        i,
        String::new,
        match s.first_degenerate_point() {
            None => Check::pass("r_a_nondegenerate"),
            Some(x) => Check::fail("r_a_nondegenerate", vec![x], "σ_x or τ_x not bijective"),
        },
    );
    let inv = s.first_non_involutive_pair();
    run.check(
        i,
        String::new,
        match (inv, a.is_left_brace()) {
            (None, true) | (Some(_), false) => Check::pass("involutive_iff_abelian"),
            (Some((x, y)), true) => Check::fail("involutive_iff_abelian", vec![x, y], "abelian but r² ≠ id"),
            (None, false) => Check::fail("involutive_iff_abelian", Vec::new(), "non-abelian but r² = id"),
        },
    );
    if a.is_left_brace() && a.order() >= 2 {
        let class = right_nilpotency_class(a);
        let level = multipermutation_level(&s, s.size());
        let ok = match (class, &level) {
            (Some(m), Ok(LevelVerdict::Level(l))) => *l == m - 1,
            (None, Ok(LevelVerdict::Stalled(_))) => true,
            _ => false,
        };
        let c = if ok {
            Check::pass("level_is_class_minus_one")
        } else {
            Check::fail("level_is_class_minus_one", Vec::new(), format!("class {class:?}, level {level:?}"))
        };
        run.check(i, String::new, c);
    }
}

fn exact(run: &mut Run, order: usize) -> Result<(), EnumerationError> {
    for (gi, g) in group_catalog(order)?.into_iter().enumerate() {
        for ef in exact_factorizations(&g.group) {
            if run.stopped() {
                return Ok(());
            }
            run.case();
            let ctx = || format!("G={} B={:?} C={:?}", g.name, ef.b.elements(), ef.c.elements());
            match exact_factorization_brace(&ef) {
                Ok(a) => {
                    run.check(gi, ctx, Check::pass("exact_brace_valid"));
                    run.report(gi, ctx, check_exact_factorization_props(&a, &ef));
                }
                Err(e) => run.check(gi, ctx, Check::fail("exact_brace_valid", Vec::new(), e.to_string())),
            }
        }
    }
    Ok(())
}

fn enumeration(run: &mut Run, cat: &BraceCatalog) -> Result<(), EnumerationError> {
    for (gi, g) in group_catalog(cat.order)?.into_iter().enumerate() {
        run.case();
        let classes = classes_on(&g.group);
        let total: usize = classes.iter().map(|c| c.orbit_size).sum();
        let regular = count_regular_subgroups(&g.group);
        let c = if total == regular {
            Check::pass("orbit_sizes_sum_to_regular_subgroups")
        } else {
            Check::fail("orbit_sizes_sum_to_regular_subgroups", vec![total, regular], "orbit accounting fails")
        };
        run.check(gi, || format!("A={}", g.name), c);
    }
    let oracle = brute_force_oracle(cat.order)?;
    run.case();
    let count = if oracle.entries.len() == cat.entries.len() {
        Check::pass("class_counts_agree")
    } else {
        Check::fail(
            "class_counts_agree",
            vec![oracle.entries.len(), cat.entries.len()],
            "oracle and holomorph class counts differ",
        )
    };
    run.check(0, String::new, count);
    let mut used = vec![false; cat.entries.len()];
    for (k, b) in oracle.entries.iter().enumerate() {
        let hits: Vec<usize> =
            (0..cat.entries.len()).filter(|&j| are_isomorphic_braces(b, &cat.entries[j]).is_some()).collect();
        let c = match hits.as_slice() {
            [j] if !used[*j] => {
                used[*j] = true;
                Check::pass("oracle_class_matched")
            }
            _ => Check::fail("oracle_class_matched", hits, "oracle class not matched exactly once"),
        };
        run.check(k, || format!("oracle entry {k}"), c);
    }
    Ok(())
}

/// The worked examples: the four-point solution, the two order-8 braces
/// with additive `C2^3` and multiplicative `D8`, and the `S4` brace.
pub fn fixture_checks() -> Result<Report, EnumerationError> {
    let mut r = Report::new();
    let s = irretractable_four_point_solution();
    let flag = |name: &str, ok: bool, detail: String| {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, Vec::new(), detail)
        }
    };
    r.push(flag("four_point_involutive", s.is_involutive(), "r² ≠ id".into()));
    r.push(flag("four_point_nondegenerate", s.is_nondegenerate(), "degenerate".into()));
    let ret = retraction(&s).map(|x| x.solution.size());
    r.push(flag("four_point_irretractable", ret == Ok(4), format!("retraction size {ret:?}")));
    let level = multipermutation_level(&s, s.size());
    r.push(flag("four_point_stalled_at_zero", level == Ok(LevelVerdict::Stalled(0)), format!("{level:?}")));
    let group = permutation_group_of_solution(&s, DEFAULT_GROUP_CAP).map(|(g, _)| identify_group(&g));
    r.push(flag(
        "four_point_sigma_group_is_d8",
        group == Ok(Some("D8".to_string())),
        format!("{group:?}"),
    ));

    let cat = crate::enumeration::braces_of_order_with_cap(8, 8)?;
    let stuck = catalog_query(&cat, "add=C2^3,mult=D8,right_nilpotent=false")?;
    r.push(flag("order_8_not_right_nilpotent", !stuck.is_empty(), "none found".into()));
    let factored = catalog_query(&cat, "add=C2^3,mult=D8,right_nilpotent=true,trivial_trivial=true")?;
    r.push(flag("order_8_right_nilpotent_factorized", !factored.is_empty(), "none found".into()));

    let f = s4_exact_factorization();
    let a = &f.brace;
    r.push(flag("s4_y_left_ideal", is_left_ideal(a, &f.y), String::new()));
    r.push(flag("s4_x_not_left_ideal", !is_left_ideal(a, &f.x), String::new()));
    let circ_normal = |s: &Subset| is_normal(a.multiplicative(), s).unwrap_or(false);
    r.push(flag("s4_x_y_circ_normal", circ_normal(&f.x) && circ_normal(&f.y), String::new()));
    let full = Subset::full(a.order());
    let a2 = star_product(a, &full, &full);
    let nontrivial = !a2.is_zero() && !is_trivial_subbrace(a, &a2) && sub_brace(a, &a2).is_ok();
    r.push(flag("s4_square_nontrivial_sub_brace", nontrivial, format!("A^(2) = {:?}", a2.elements())));
    Ok(r)
}

fn fixtures(run: &mut Run) -> Result<(), EnumerationError> {
    run.case();
    run.report(0, String::new, fixture_checks()?);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::trivial_brace;
    use crate::enumeration::braces_of_order_with_cap;
    use crate::group::symmetric;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn axioms_hold_on_trivial_s3() {
        assert!(axioms(&trivial_brace(symmetric(3))).passed());
    }

    #[test]
    fn small_suites_pass() {
        let cat = braces_of_order_with_cap(4, 8).unwrap();
        for s in Suite::ALL {
            if s == Suite::Fixtures {
                continue;
            }
            let o = run_suite_on(s, &cat, true).unwrap();
            assert!(o.passed(), "{s}: {:?}", o.failures);
        }
    }

    #[test]
    fn charsimple_on_order_one_is_vacuous() {
        let cat = braces_of_order_with_cap(1, 8).unwrap();
        let o = run_suite_on(Suite::Charsimple, &cat, false).unwrap();
        assert!(o.passed());
        assert_eq!(o.cases, 0);
    }
}
