//! Permutations of `0..n` and orbit partitions.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A bijection of `0..n`, stored as its image list.
///
/// Composition follows function notation: `p.compose(&q)` maps `x` to `p(q(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("image list {0:?} is not a bijection of 0..{len}", len = .0.len())]
pub struct NotAPermutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, NotAPermutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(NotAPermutation(images));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    /// Caller guarantees `images` is a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation(images)
    }

    /// Builds a permutation of `0..n` from disjoint cycles given with 0-based points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, NotAPermutation> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(NotAPermutation(images));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|&(x, &y)| x == y).count()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = NotAPermutation;

    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Self::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

/// Orbits of the group generated by `perms` acting on `0..n`.
///
/// Blocks are sorted internally and listed by their least point.
pub fn orbits(perms: &[Permutation], n: usize) -> Vec<Vec<usize>> {
    let mut block = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if block[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        block[start] = id;
        let mut members = vec![start];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for p in perms {
                let y = p.apply(x);
                if block[y] == usize::MAX {
                    block[y] = id;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}
