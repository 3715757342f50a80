use crate::brace::{is_strong_left_ideal, SkewBrace};
use crate::subset::Subset;

use super::{solution_from_brace, Solution, SolutionError};

/// A partition `X = Y ∪ Z` with `r(Y×Y) ⊆ Y×Y`, `r(Z×Z) ⊆ Z×Z`,
/// `r(Y×Z) = Z×Y` and `r(Z×Y) = Y×Z`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Decomposition {
    pub y: Subset,
    pub z: Subset,
}

impl Decomposition {
    /// First pair `(x, y)` whose image lands in the wrong block.
    pub fn first_violation(&self, s: &Solution) -> Option<(usize, usize)> {
        let n = s.size();
        let in_y = |x: usize| self.y.contains(x);
        for x in 0..n {
            for y in 0..n {
                let (u, v) = s.r(x, y);
                // blocks swap across the pair, or stay put inside one block
                let ok = if in_y(x) == in_y(y) {
                    in_y(u) == in_y(x) && in_y(v) == in_y(x)
                } else {
                    in_y(u) == in_y(y) && in_y(v) == in_y(x)
                };
                if !ok {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

/// `A = I ∪ A∖I` for a proper non-zero strong left ideal `I`, checked on `r_A`.
pub fn decomposition_from_strong_left_ideal(
    a: &SkewBrace,
    i: &Subset,
) -> Result<Decomposition, SolutionError> {
    if i.ambient() != a.order() || i.is_zero() || i.is_full() || !is_strong_left_ideal(a, i) {
        return Err(SolutionError::NotProperStrongLeftIdeal);
    }
    let d = Decomposition { y: i.clone(), z: i.complement() };
    let s = solution_from_brace(a);
    match d.first_violation(&s) {
        Some((x, y)) => Err(SolutionError::DecompositionFailure { x, y }),
        None => Ok(d),
    }
}

/// Splits off the orbit of `0` under all `σ_x` and `τ_x`; absent when that
/// action is transitive or there is a single point.
pub fn is_decomposable(s: &Solution) -> Option<Decomposition> {
    let n = s.size();
    if n < 2 {
        return None;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    // connected component of 0 in the graph x ~ σ_w(x), x ~ τ_w(x);
    // for permutations this is the orbit
    let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n];
    for w in 0..n {
        for x in 0..n {
            rev[s.sigma(w, x)].push(x);
            rev[s.tau(w, x)].push(x);
        }
    }
    while let Some(x) = stack.pop() {
        let fwd = (0..n).flat_map(|w| [s.sigma(w, x), s.tau(w, x)]);
        for y in fwd.chain(rev[x].iter().copied()) {
            if !std::mem::replace(&mut seen[y], true) {
                stack.push(y);
            }
        }
    }
    let y = Subset::from_mask(&seen);
    if y.is_full() {
        return None;
    }
    let d = Decomposition { z: y.complement(), y };
    debug_assert!(d.first_violation(s).is_none());
    d.first_violation(s).is_none().then_some(d)
}
