//! Worked examples: a four-point irretractable solution and the skew brace
//! of an exact factorization of `S4`.

use crate::brace::SkewBrace;
use crate::factorization::{exact_factorization_brace, ExactFactorization};
use crate::group::{from_permutations, subgroup_generated, GroupTable};
use crate::perm::Permutation;
use crate::subset::Subset;
use crate::ybe::{validate_solution, Solution};

fn cycles(n: usize, cs: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(n, cs).expect("valid cycles")
}

/// The involutive non-degenerate solution on `{0,1,2,3}` with
/// `σ = (2 3), (0 2 1 3), (0 3 1 2), (0 1)` and
/// `τ = (1 3), (0 3 2 1), (0 1 2 3), (0 2)`.
pub fn irretractable_four_point_solution() -> Solution {
    let sigma = [
        cycles(4, &[&[2, 3]]),
        cycles(4, &[&[0, 2, 1, 3]]),
        cycles(4, &[&[0, 3, 1, 2]]),
        cycles(4, &[&[0, 1]]),
    ];
    let tau = [
        cycles(4, &[&[1, 3]]),
        cycles(4, &[&[0, 3, 2, 1]]),
        cycles(4, &[&[0, 1, 2, 3]]),
        cycles(4, &[&[0, 2]]),
    ];
    validate_solution(
        sigma.iter().map(|p| p.images().to_vec()).collect(),
        tau.iter().map(|p| p.images().to_vec()).collect(),
    )
    .expect("a solution")
}

/// `S4 = X + Y` with `X = ⟨(1 3 2)⟩` and `Y = ⟨(2 3), (0 2)(1 3), (0 3)(1 2)⟩`
/// on the points `0..4`, and the skew brace `(x+y)∘(x₁+y₁) = (x+x₁)+(y₁+y)`.
pub struct S4ExactFactorization {
    pub group: GroupTable,
    /// Permutation carried by each label of `group`.
    pub perms: Vec<Permutation>,
    pub x: Subset,
    pub y: Subset,
    pub factorization: ExactFactorization,
    pub brace: SkewBrace,
}

pub fn s4_exact_factorization() -> S4ExactFactorization {
    let (group, perms) = from_permutations(&[cycles(4, &[&[0, 1]]), cycles(4, &[&[0, 1, 2, 3]])]);
    let label = |p: Permutation| perms.iter().position(|q| *q == p).expect("element of S4");
    let generated = |gens: Vec<Permutation>| {
        let s = Subset::new(group.order(), gens.into_iter().map(label)).expect("labels in range");
        subgroup_generated(&group, &s)
    };
    let x = generated(vec![cycles(4, &[&[1, 3, 2]])]);
    let y = generated(vec![
        cycles(4, &[&[2, 3]]),
        cycles(4, &[&[0, 2], &[1, 3]]),
        cycles(4, &[&[0, 3], &[1, 2]]),
    ]);
    let factorization = ExactFactorization::new(group.clone(), x.clone(), y.clone()).expect("exact");
    let brace = exact_factorization_brace(&factorization).expect("a skew brace");
    S4ExactFactorization { group, perms, x, y, factorization, brace }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let s = irretractable_four_point_solution();
        assert_eq!(s.size(), 4);
        assert_eq!(s.r(0, 0), (0, 0));
        let f = s4_exact_factorization();
        assert_eq!((f.group.order(), f.x.len(), f.y.len()), (24, 3, 8));
        assert!(f.perms[0].is_identity());
    }
}
