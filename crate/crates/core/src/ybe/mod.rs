//! Set-theoretic solutions of the Yang–Baxter equation.
//!
//! A solution on `0..n` is stored as two tables with the convention
//! `sigma[x][y] = σ_x(y)` and `tau[y][x] = τ_y(x)`, so that
//! `r(x, y) = (sigma[x][y], tau[y][x])`. Note the transposition in `tau`.

mod decompose;
mod retraction;

use crate::brace::SkewBrace;
use crate::group::{GroupError, GroupTable};
use crate::perm::Permutation;

pub use decompose::{decomposition_from_strong_left_ideal, is_decomposable, Decomposition};
pub use retraction::{multipermutation_level, retraction, LevelVerdict, Retraction};

pub const DEFAULT_GROUP_CAP: usize = 10080;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolutionError {
    #[error("malformed solution tables: {0}")]
    Malformed(String),
    #[error("r is not a bijection: ({x}, {y}) collides with another pair")]
    NotBijectiveR { x: usize, y: usize },
    #[error("braid relation fails at ({x}, {y}, {z})")]
    BraidFailure { x: usize, y: usize, z: usize },
    #[error("solution is not involutive: r²({x}, {y}) ≠ ({x}, {y})")]
    NotInvolutive { x: usize, y: usize },
    #[error("solution is degenerate: σ_{x} or τ_{x} is not bijective")]
    NotNondegenerate { x: usize },
    #[error("retraction ill-defined at classes of ({x}, {y})")]
    IllDefined { x: usize, y: usize },
    #[error("subset is not a proper non-zero strong left ideal")]
    NotProperStrongLeftIdeal,
    #[error("decomposition fails at pair ({x}, {y})")]
    DecompositionFailure { x: usize, y: usize },
    #[error("solution on {0} point(s) has no multipermutation level")]
    TooSmall(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    n: usize,
    sigma: Vec<Vec<usize>>,
    tau: Vec<Vec<usize>>,
}

/// Checks shape, bijectivity of `r` on `X × X`, and the braid relation on all triples.
pub fn validate_solution(sigma: Vec<Vec<usize>>, tau: Vec<Vec<usize>>) -> Result<Solution, SolutionError> {
    let n = sigma.len();
    if tau.len() != n {
        return Err(SolutionError::Malformed(format!("sigma has {n} rows, tau has {}", tau.len())));
    }
    for (name, m) in [("sigma", &sigma), ("tau", &tau)] {
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(SolutionError::Malformed(format!("{name} row {i} has length {}", row.len())));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(SolutionError::Malformed(format!("{name} row {i} has entry {v}")));
            }
        }
    }
    let s = Solution { n, sigma, tau };
    let mut hit = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            let (u, v) = s.r(x, y);
            if std::mem::replace(&mut hit[u * n + v], true) {
                return Err(SolutionError::NotBijectiveR { x, y });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if s.braid_lhs(x, y, z) != s.braid_rhs(x, y, z) {
                    return Err(SolutionError::BraidFailure { x, y, z });
                }
            }
        }
    }
    Ok(s)
}

impl Solution {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn sigma_rows(&self) -> &[Vec<usize>] {
        &self.sigma
    }

    pub fn tau_rows(&self) -> &[Vec<usize>] {
        &self.tau
    }

    #[inline]
    pub fn sigma(&self, x: usize, y: usize) -> usize {
        self.sigma[x][y]
    }

    /// `τ_y(x)`
    #[inline]
    pub fn tau(&self, y: usize, x: usize) -> usize {
        self.tau[y][x]
    }

    #[inline]
    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        (self.sigma[x][y], self.tau[y][x])
    }

    /// `(r×id)(id×r)(r×id)`, rightmost factor applied first.
    fn braid_lhs(&self, x: usize, y: usize, z: usize) -> (usize, usize, usize) {
        let (a, b) = self.r(x, y);
        let (b, c) = self.r(b, z);
        let (a, b) = self.r(a, b);
        (a, b, c)
    }

    /// `(id×r)(r×id)(id×r)`
    fn braid_rhs(&self, x: usize, y: usize, z: usize) -> (usize, usize, usize) {
        let (b, c) = self.r(y, z);
        let (a, b) = self.r(x, b);
        let (b, c) = self.r(b, c);
        (a, b, c)
    }

    pub fn is_involutive(&self) -> bool {
        self.first_non_involutive_pair().is_none()
    }

    pub(crate) fn first_non_involutive_pair(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|x| (0..self.n).map(move |y| (x, y)))
            .find(|&(x, y)| {
                let (u, v) = self.r(x, y);
                self.r(u, v) != (x, y)
            })
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.first_degenerate_point().is_none()
    }

    pub(crate) fn first_degenerate_point(&self) -> Option<usize> {
        (0..self.n).find(|&x| Permutation::from_images(self.sigma[x].clone()).is_err()
            || Permutation::from_images(self.tau[x].clone()).is_err())
    }

    /// The flip `r(x, y) = (y, x)`.
    pub fn flip(n: usize) -> Solution {
        let rows: Vec<Vec<usize>> = (0..n).map(|_| (0..n).collect()).collect();
        Solution { n, sigma: rows.clone(), tau: rows }
    }

    /// Row permutations `σ_x`; caller ensures non-degeneracy.
    pub fn sigma_perms(&self) -> Vec<Permutation> {
        self.sigma.iter().map(|r| Permutation::from_images_unchecked(r.clone())).collect()
    }

    pub fn tau_perms(&self) -> Vec<Permutation> {
        self.tau.iter().map(|r| Permutation::from_images_unchecked(r.clone())).collect()
    }
}

/// `r_A(a, b) = (λ_a(b), λ_a(b)′ ∘ a ∘ b)`, re-validated.
pub fn solution_from_brace(a: &SkewBrace) -> Solution {
    try_solution_from_brace(a).expect("r_A of a skew brace is a solution")
}

/// [`solution_from_brace`] reporting a failed self-check instead of panicking.
pub fn try_solution_from_brace(a: &SkewBrace) -> Result<Solution, SolutionError> {
    let n = a.order();
    let sigma: Vec<Vec<usize>> = (0..n).map(|x| a.lambda(x).images().to_vec()).collect();
    let mut tau = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            let l = a.lambda(x).apply(y);
            tau[y][x] = a.circ(a.circ_inverse(l), a.circ(x, y));
        }
    }
    validate_solution(sigma, tau)
}

/// `⟨σ_x : x ∈ X⟩` as an abstract group, with the permutation of each element.
pub fn permutation_group_of_solution(
    s: &Solution,
    cap: usize,
) -> Result<(GroupTable, Vec<Permutation>), SolutionError> {
    if let Some(x) = s.first_degenerate_point() {
        return Err(SolutionError::NotNondegenerate { x });
    }
    Ok(crate::group::closure_of_permutations(&s.sigma_perms(), cap)?)
}
