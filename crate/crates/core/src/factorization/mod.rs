//! Factorizations `A = B + C` through left ideals, the verifiers for
//! factorized braces, and skew braces built from exact group factorizations.

mod exact;
mod verify;

use serde::Serialize;

use crate::brace::{is_left_ideal, is_strong_left_ideal, is_trivial_subbrace, left_ideals, BraceError, SkewBrace};
use crate::subset::Subset;

pub use exact::{
    check_exact_factorization_props, exact_factorization_brace, exact_factorizations, ExactFactorization,
};
pub use verify::{
    check_class_four, check_fix_factorized, check_product_sets, check_soc_factorized, find_trivializing_ideal,
    is_factorized_left_ideal, verify_ito, verify_lemma_calculations,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FactorizationError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("subset is not a left ideal")]
    NotLeftIdeal,
    #[error("B + C does not cover the brace")]
    NotAFactorization,
    #[error("not an exact factorization: {0}")]
    NotExact(String),
    #[error("additive group is not abelian")]
    NotALeftBrace,
    #[error(transparent)]
    Brace(#[from] BraceError),
}

/// `A = B + C` with `B`, `C` left ideals; the flags are recomputed on construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub b: Subset,
    pub c: Subset,
    pub b_strong: bool,
    pub c_strong: bool,
    pub b_trivial: bool,
    pub c_trivial: bool,
}

impl Factorization {
    pub fn new(a: &SkewBrace, b: Subset, c: Subset) -> Result<Factorization, FactorizationError> {
        if !is_left_ideal(a, &b) || !is_left_ideal(a, &c) {
            return Err(FactorizationError::NotLeftIdeal);
        }
        if !sum_set(a, &b, &c).is_full() {
            return Err(FactorizationError::NotAFactorization);
        }
        Ok(Factorization {
            b_strong: is_strong_left_ideal(a, &b),
            c_strong: is_strong_left_ideal(a, &c),
            b_trivial: is_trivial_subbrace(a, &b),
            c_trivial: is_trivial_subbrace(a, &c),
            b,
            c,
        })
    }

    pub fn swapped(&self) -> Factorization {
        Factorization {
            b: self.c.clone(),
            c: self.b.clone(),
            b_strong: self.c_strong,
            c_strong: self.b_strong,
            b_trivial: self.c_trivial,
            c_trivial: self.b_trivial,
        }
    }

    pub fn is_trivial_trivial(&self) -> bool {
        self.b_trivial && self.c_trivial
    }

    fn meets(&self, q: &FactorizationQuery) -> bool {
        (!q.strong.0 || self.b_strong)
            && (!q.strong.1 || self.c_strong)
            && (!q.trivial.0 || self.b_trivial)
            && (!q.trivial.1 || self.c_trivial)
    }
}

/// Flags a factorization must carry, as `(for B, for C)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FactorizationQuery {
    pub strong: (bool, bool),
    pub trivial: (bool, bool),
    /// Keep pairs with a factor equal to `A`.
    pub allow_improper: bool,
}

impl FactorizationQuery {
    pub fn trivial_trivial() -> FactorizationQuery {
        FactorizationQuery { trivial: (true, true), ..Default::default() }
    }
}

/// `{x + y : x ∈ X, y ∈ Y}` as a raw set.
pub fn sum_set(a: &SkewBrace, xs: &Subset, ys: &Subset) -> Subset {
    let mut mask = vec![false; a.order()];
    for x in xs.iter() {
        for y in ys.iter() {
            mask[a.add(x, y)] = true;
        }
    }
    Subset::from_mask(&mask)
}

/// `{x ∘ y : x ∈ X, y ∈ Y}` as a raw set.
pub fn circ_set(a: &SkewBrace, xs: &Subset, ys: &Subset) -> Subset {
    let mut mask = vec![false; a.order()];
    for x in xs.iter() {
        for y in ys.iter() {
            mask[a.circ(x, y)] = true;
        }
    }
    Subset::from_mask(&mask)
}

/// Unordered pairs of left ideals with `B + C = A` meeting `q`. Each pair
/// appears once, oriented as `(B, C)` with `B` the earlier left ideal when
/// both orientations qualify.
pub fn find_factorizations(a: &SkewBrace, q: &FactorizationQuery) -> Vec<Factorization> {
    let ideals = left_ideals(a);
    let n = a.order();
    let mut out = Vec::new();
    for (i, b) in ideals.iter().enumerate() {
        if b.is_full() && !q.allow_improper {
            continue;
        }
        for c in &ideals[i..] {
            if c.is_full() && !q.allow_improper {
                continue;
            }
            // |B + C| = |B||C|/|B ∩ C| for subgroups
            if b.len() * c.len() < n {
                continue;
            }
            if !sum_set(a, b, c).is_full() {
                continue;
            }
            let f = Factorization::new(a, b.clone(), c.clone()).expect("left ideals with full sum");
            if f.meets(q) {
                out.push(f);
            } else if b != c {
                let g = f.swapped();
                if g.meets(q) {
                    out.push(g);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::trivial_brace;
    use crate::group::{cyclic, elementary_abelian};

    #[test]
    fn sums_of_trivial_sets() {
        let a = trivial_brace(cyclic(6));
        let y = Subset::new(6, [0, 3]).unwrap();
        assert_eq!(sum_set(&a, &Subset::zero(6), &y), y);
        assert!(sum_set(&a, &Subset::full(6), &y).is_full());
    }

    #[test]
    fn cyclic_six_factors_as_two_times_three() {
        let a = trivial_brace(cyclic(6));
        let fs = find_factorizations(&a, &FactorizationQuery::default());
        assert_eq!(fs.len(), 1);
        let f = &fs[0];
        assert_eq!((f.b.elements(), f.c.elements()), (&[0, 3][..], &[0, 2, 4][..]));
        assert!(f.b_strong && f.c_strong && f.b_trivial && f.c_trivial);
        let improper = find_factorizations(&a, &FactorizationQuery { allow_improper: true, ..Default::default() });
        // each of the four left ideals pairs with A, plus the proper pair
        assert_eq!(improper.len(), 4 + 1);
    }

    #[test]
    fn no_proper_left_ideals_means_no_factorizations() {
        let a = trivial_brace(cyclic(5));
        assert!(find_factorizations(&a, &FactorizationQuery::default()).is_empty());
    }

    #[test]
    fn klein_four_pairs_are_unordered() {
        let a = trivial_brace(elementary_abelian(2, 2));
        // three subgroups of order 2, any two of them cover
        assert_eq!(find_factorizations(&a, &FactorizationQuery::trivial_trivial()).len(), 3);
    }

    #[test]
    fn constructor_rejects_non_factorizations() {
        let a = trivial_brace(cyclic(4));
        let half = Subset::new(4, [0, 2]).unwrap();
        assert_eq!(Factorization::new(&a, half.clone(), half), Err(FactorizationError::NotAFactorization));
        let bad = Subset::new(4, [0, 1]).unwrap();
        assert_eq!(Factorization::new(&a, bad, Subset::full(4)), Err(FactorizationError::NotLeftIdeal));
    }
}
