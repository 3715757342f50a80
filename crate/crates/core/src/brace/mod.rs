//! Skew left braces `(A, +, ∘)` on a shared carrier `0..n`.
//!
//! `λ_a(b) = −a + a∘b` is cached per element; `a ∗ b = λ_a(b) − b`.

mod construct;
mod ideals;
mod iso;
mod series;

use std::sync::OnceLock;

use crate::group::{all_subgroups, GroupError, GroupTable};
use crate::perm::Permutation;
use crate::subset::Subset;

pub use construct::{direct_product_braces, quotient, sub_brace, trivial_brace};
pub use ideals::{
    classify_subset, fix, ideal_generated, ideals, is_ideal, is_left_ideal, is_strong_left_ideal,
    is_trivial_subbrace, ker_lambda, left_ideals, socle, star_product, strong_left_ideals,
    IdealReport,
};
pub use iso::{
    are_isomorphic_braces, brace_automorphisms, characteristic_ideals,
    decompose_as_power_of_simple, is_characteristically_simple, is_simple, minimal_ideals,
};
pub use series::{is_meta_trivial, right_nilpotency_class, right_series};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraceError {
    #[error("additive group has order {add}, multiplicative group has order {circ}")]
    OrderMismatch { add: usize, circ: usize },
    #[error("compatibility a∘(b+c) = a∘b − a + a∘c fails at a={a}, b={b}, c={c}")]
    CompatibilityFailure { a: usize, b: usize, c: usize },
    #[error("the two operations have different identities ({add} and {circ})")]
    IdentityMismatch { add: usize, circ: usize },
    #[error("subset is not a left ideal")]
    NotLeftIdeal,
    #[error("subset is not an ideal")]
    NotIdeal,
    #[error("invalid {which} group: {source}")]
    Group {
        which: &'static str,
        #[source]
        source: GroupError,
    },
}

#[derive(Clone)]
pub struct SkewBrace {
    add: GroupTable,
    circ: GroupTable,
    lambda: Vec<Permutation>,
    subgroups: OnceLock<Vec<Subset>>,
    automorphisms: OnceLock<Vec<Permutation>>,
}

impl std::fmt::Debug for SkewBrace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SkewBrace").field("order", &self.order()).field("circ", &self.circ.rows()).finish()
    }
}

impl PartialEq for SkewBrace {
    fn eq(&self, other: &Self) -> bool {
        self.add == other.add && self.circ == other.circ
    }
}

impl Eq for SkewBrace {}

/// Checks compatibility `a∘(b+c) = a∘b − a + a∘c` on all triples.
pub fn validate_brace(add: GroupTable, circ: GroupTable) -> Result<SkewBrace, BraceError> {
    let n = add.order();
    if circ.order() != n {
        return Err(BraceError::OrderMismatch { add: n, circ: circ.order() });
    }
    for a in 0..n {
        let neg_a = add.inv(a);
        for b in 0..n {
            let left = add.op(circ.op(a, b), neg_a);
            for c in 0..n {
                if circ.op(a, add.op(b, c)) != add.op(left, circ.op(a, c)) {
                    return Err(BraceError::CompatibilityFailure { a, b, c });
                }
            }
        }
    }
    Ok(SkewBrace::assemble(add, circ))
}

impl SkewBrace {
    /// Tables already known to satisfy compatibility.
    pub(crate) fn assemble(add: GroupTable, circ: GroupTable) -> SkewBrace {
        let n = add.order();
        let lambda = (0..n)
            .map(|a| {
                let neg_a = add.inv(a);
                Permutation::from_images_unchecked((0..n).map(|b| add.op(neg_a, circ.op(a, b))).collect())
            })
            .collect();
        SkewBrace {
            add,
            circ,
            lambda,
            subgroups: OnceLock::new(),
            automorphisms: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn additive(&self) -> &GroupTable {
        &self.add
    }

    pub fn multiplicative(&self) -> &GroupTable {
        &self.circ
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    /// `a − b`
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add.op_inv(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.add.inv(a)
    }

    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.circ.op(a, b)
    }

    /// `a′`, the inverse of `a` in `(A, ∘)`.
    #[inline]
    pub fn circ_inverse(&self, a: usize) -> usize {
        self.circ.inv(a)
    }

    #[inline]
    pub fn lambda(&self, a: usize) -> &Permutation {
        &self.lambda[a]
    }

    /// `a ∗ b = λ_a(b) − b`
    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.sub(self.lambda[a].apply(b), b)
    }

    pub fn is_trivial(&self) -> bool {
        self.add == self.circ
    }

    /// Additive group abelian.
    pub fn is_left_brace(&self) -> bool {
        self.add.is_abelian()
    }

    /// Subgroups of `(A, +)`, computed once.
    pub fn additive_subgroups(&self) -> &[Subset] {
        self.subgroups.get_or_init(|| all_subgroups(&self.add))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, elementary_abelian, symmetric};

    #[test]
    fn group_with_itself_is_trivial_brace() {
        let b = validate_brace(cyclic(2), cyclic(2)).unwrap();
        assert!(b.is_trivial());
        assert!((0..2).all(|a| b.lambda(a).is_identity()));
        let s3 = trivial_brace(symmetric(3));
        assert!((0..6).all(|a| (0..6).all(|x| s3.star(a, x) == 0)));
        assert!((0..6).all(|a| s3.circ_inverse(a) == s3.neg(a)));
    }

    #[test]
    fn relabelled_cyclic_circle_fails_compatibility() {
        // (A,+) = C4 and (A,∘) = C4 with g^k relabelled 0,1,3,2: λ_1 is not additive.
        let circ = cyclic(4).relabel(&[0, 1, 3, 2]);
        let err = validate_brace(cyclic(4), circ).unwrap_err();
        assert_eq!(err, BraceError::CompatibilityFailure { a: 1, b: 1, c: 1 });
    }

    #[test]
    fn any_circle_group_on_klein_four_is_compatible() {
        // every bijection of C2×C2 fixing 0 is additive, so every labelling works
        for to_new in [[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 3, 1]] {
            let circ = cyclic(4).relabel(&to_new);
            assert!(validate_brace(elementary_abelian(2, 2), circ).is_ok());
        }
    }

    #[test]
    fn order_mismatch() {
        assert_eq!(
            validate_brace(cyclic(2), cyclic(3)).unwrap_err(),
            BraceError::OrderMismatch { add: 2, circ: 3 }
        );
    }
}
