use super::{validate_solution, Solution, SolutionError};

/// `Ret(X, r)`: the induced solution on classes of `x ~ y ⟺ σ_x = σ_y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Retraction {
    pub solution: Solution,
    /// Class index of each point; classes are numbered by least member.
    pub class_of: Vec<usize>,
    pub representatives: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "verdict", content = "steps")]
pub enum LevelVerdict {
    /// `Ret^m` has one point and `Ret^(m−1)` more than one.
    Level(usize),
    /// `Ret^k` has more than one point and is irretractable.
    Stalled(usize),
    CapExceeded,
}

fn check_involutive_nondegenerate(s: &Solution) -> Result<(), SolutionError> {
    if let Some(x) = s.first_degenerate_point() {
        return Err(SolutionError::NotNondegenerate { x });
    }
    if let Some((x, y)) = s.first_non_involutive_pair() {
        return Err(SolutionError::NotInvolutive { x, y });
    }
    Ok(())
}

pub fn retraction(s: &Solution) -> Result<Retraction, SolutionError> {
    check_involutive_nondegenerate(s)?;
    let n = s.size();
    let mut class_of = vec![usize::MAX; n];
    let mut representatives: Vec<usize> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        for y in x..n {
            if s.sigma_rows()[y] == s.sigma_rows()[x] {
                class_of[y] = c;
            }
        }
        representatives.push(x);
    }
    let k = representatives.len();
    let mut sigma = vec![vec![usize::MAX; k]; k];
    let mut tau = vec![vec![usize::MAX; k]; k];
    for x in 0..n {
        for y in 0..n {
            let (cx, cy) = (class_of[x], class_of[y]);
            let (u, v) = s.r(x, y);
            for (slot, value) in [(&mut sigma[cx][cy], class_of[u]), (&mut tau[cy][cx], class_of[v])] {
                if *slot == usize::MAX {
                    *slot = value;
                } else if *slot != value {
                    return Err(SolutionError::IllDefined { x, y });
                }
            }
        }
    }
    let solution = validate_solution(sigma, tau)?;
    check_involutive_nondegenerate(&solution)?;
    Ok(Retraction { solution, class_of, representatives })
}

/// Iterates [`retraction`] for at most `cap` steps.
pub fn multipermutation_level(s: &Solution, cap: usize) -> Result<LevelVerdict, SolutionError> {
    if s.size() < 2 {
        return Err(SolutionError::TooSmall(s.size()));
    }
    check_involutive_nondegenerate(s)?;
    let mut current = s.clone();
    for step in 0..=cap {
        if current.size() == 1 {
            return Ok(LevelVerdict::Level(step));
        }
        if step == cap {
            break;
        }
        let next = retraction(&current)?.solution;
        if next.size() == current.size() {
            return Ok(LevelVerdict::Stalled(step));
        }
        current = next;
    }
    Ok(LevelVerdict::CapExceeded)
}
