use serde::Serialize;

use crate::group::{center, is_subgroup, subgroup_generated};
use crate::subset::Subset;

use super::{brace_automorphisms, SkewBrace};

/// Membership flags of a subset against the ideal hierarchy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealReport {
    pub subset: Subset,
    /// False marks a subset that is not an additive subgroup; all other flags are then false.
    pub is_subgroup: bool,
    pub is_left_ideal: bool,
    pub is_strong_left_ideal: bool,
    pub is_ideal: bool,
    pub is_trivial_subbrace: bool,
    pub is_characteristic: bool,
}

/// Additive subgroup with `λ_a(I) ⊆ I` for every `a`.
pub fn is_left_ideal(a: &SkewBrace, s: &Subset) -> bool {
    is_subgroup(a.additive(), s) && lambda_invariant(a, s)
}

fn lambda_invariant(a: &SkewBrace, s: &Subset) -> bool {
    (0..a.order()).all(|x| s.iter().all(|y| s.contains(a.lambda(x).apply(y))))
}

fn additively_normal(a: &SkewBrace, s: &Subset) -> bool {
    (0..a.order()).all(|x| s.iter().all(|y| s.contains(a.additive().conj(x, y))))
}

fn circ_normal(a: &SkewBrace, s: &Subset) -> bool {
    (0..a.order()).all(|x| s.iter().all(|y| s.contains(a.multiplicative().conj(x, y))))
}

/// Left ideal that is normal in `(A, +)`.
pub fn is_strong_left_ideal(a: &SkewBrace, s: &Subset) -> bool {
    is_left_ideal(a, s) && additively_normal(a, s)
}

/// Strong left ideal that is also normal in `(A, ∘)`.
pub fn is_ideal(a: &SkewBrace, s: &Subset) -> bool {
    is_strong_left_ideal(a, s) && circ_normal(a, s)
}

/// Additive subgroup on which `+` and `∘` agree (closure under `∘` follows).
pub fn is_trivial_subbrace(a: &SkewBrace, s: &Subset) -> bool {
    is_subgroup(a.additive(), s) && s.iter().all(|x| s.iter().all(|y| a.add(x, y) == a.circ(x, y)))
}

pub fn classify_subset(a: &SkewBrace, s: &Subset) -> IdealReport {
    if !is_subgroup(a.additive(), s) {
        return IdealReport {
            subset: s.clone(),
            is_subgroup: false,
            is_left_ideal: false,
            is_strong_left_ideal: false,
            is_ideal: false,
            is_trivial_subbrace: false,
            is_characteristic: false,
        };
    }
    let left = lambda_invariant(a, s);
    let strong = left && additively_normal(a, s);
    let ideal = strong && circ_normal(a, s);
    let characteristic = ideal
        && brace_automorphisms(a).iter().all(|sigma| s.iter().all(|x| s.contains(sigma.apply(x))));
    IdealReport {
        subset: s.clone(),
        is_subgroup: true,
        is_left_ideal: left,
        is_strong_left_ideal: strong,
        is_ideal: ideal,
        is_trivial_subbrace: s.iter().all(|x| s.iter().all(|y| a.add(x, y) == a.circ(x, y))),
        is_characteristic: characteristic,
    }
}

pub fn left_ideals(a: &SkewBrace) -> Vec<Subset> {
    a.additive_subgroups().iter().filter(|s| lambda_invariant(a, s)).cloned().collect()
}

pub fn strong_left_ideals(a: &SkewBrace) -> Vec<Subset> {
    left_ideals(a).into_iter().filter(|s| additively_normal(a, s)).collect()
}

pub fn ideals(a: &SkewBrace) -> Vec<Subset> {
    strong_left_ideals(a).into_iter().filter(|s| circ_normal(a, s)).collect()
}

/// `{a : λ_a = id}`
pub fn ker_lambda(a: &SkewBrace) -> Subset {
    let n = a.order();
    Subset::from_sorted_unchecked(n, (0..n).filter(|&x| a.lambda(x).is_identity()).collect())
}

/// `Ker λ ∩ Z(A, +)`
pub fn socle(a: &SkewBrace) -> Subset {
    ker_lambda(a).intersection(&center(a.additive()))
}

/// `{a : λ_b(a) = a for all b}`
pub fn fix(a: &SkewBrace) -> Subset {
    let n = a.order();
    Subset::from_sorted_unchecked(
        n,
        (0..n).filter(|&x| (0..n).all(|b| a.lambda(b).apply(x) == x)).collect(),
    )
}

/// Additive subgroup generated by `{x ∗ y : x ∈ X, y ∈ Y}`.
pub fn star_product(a: &SkewBrace, xs: &Subset, ys: &Subset) -> Subset {
    let n = a.order();
    let mut mask = vec![false; n];
    for x in xs.iter() {
        for y in ys.iter() {
            mask[a.star(x, y)] = true;
        }
    }
    subgroup_generated(a.additive(), &Subset::from_mask(&mask))
}

/// Least ideal containing `s`: joint fixed point of additive generation,
/// additive conjugation, `∘`-conjugation and `λ`-images.
pub fn ideal_generated(a: &SkewBrace, s: &Subset) -> Subset {
    let n = a.order();
    let mut current = subgroup_generated(a.additive(), s);
    loop {
        let mut mask = current.mask();
        for x in 0..n {
            for y in current.iter() {
                mask[a.additive().conj(x, y)] = true;
                mask[a.multiplicative().conj(x, y)] = true;
                mask[a.lambda(x).apply(y)] = true;
            }
        }
        let next = subgroup_generated(a.additive(), &Subset::from_mask(&mask));
        if next == current {
            return current;
        }
        current = next;
    }
}
