use crate::perm::Permutation;

use super::GroupError;

/// A finite group given by its Cayley table on `0..n`, identity at `0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupTable {
    n: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupTable(order {})", self.n)
    }
}

/// Checks the group axioms on a square table whose identity must be `0`.
pub fn validate_group(rows: &[Vec<usize>]) -> Result<GroupTable, GroupError> {
    let n = rows.len();
    if n == 0 {
        return Err(GroupError::Empty);
    }
    let mut table = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(GroupError::NotSquare { row: r, len: row.len(), expected: n });
        }
        for (c, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(GroupError::EntryOutOfRange { row: r, col: c, value: v });
            }
        }
        table.extend_from_slice(row);
    }
    GroupTable::from_flat(n, table)
}

impl GroupTable {
    pub(crate) fn from_flat(n: usize, table: Vec<usize>) -> Result<GroupTable, GroupError> {
        debug_assert_eq!(table.len(), n * n);
        // Latin square
        let mut seen = vec![usize::MAX; n];
        for r in 0..n {
            for c in 0..n {
                let v = table[r * n + c];
                if seen[v] == r {
                    return Err(GroupError::NotLatinSquare { row: r, col: c, value: v });
                }
                seen[v] = r;
            }
        }
        seen.fill(usize::MAX);
        for c in 0..n {
            for r in 0..n {
                let v = table[r * n + c];
                if seen[v] == c {
                    return Err(GroupError::NotLatinSquare { row: r, col: c, value: v });
                }
                seen[v] = c;
            }
        }
        for x in 0..n {
            if table[x] != x || table[x * n] != x {
                return Err(GroupError::NoIdentityAtZero(x));
            }
        }
        let mut inv = vec![0; n];
        for a in 0..n {
            // Latin rows give a unique right inverse
            let b = (0..n).find(|&b| table[a * n + b] == 0).expect("latin row contains 0");
            if table[b * n + a] != 0 {
                return Err(GroupError::MissingInverse(a));
            }
            inv[a] = b;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(GroupError::NonAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(GroupTable { n, table, inv })
    }

    /// Table that is a group by construction; axioms are rechecked only in debug builds.
    pub(crate) fn from_flat_trusted(n: usize, table: Vec<usize>) -> GroupTable {
        if cfg!(debug_assertions) && n <= 64 {
            return Self::from_flat(n, table).expect("constructed table must be a group");
        }
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n).find(|&b| table[a * n + b] == 0).expect("group row contains 0");
        }
        GroupTable { n, table, inv }
    }

    pub fn trivial() -> GroupTable {
        GroupTable { n: 1, table: vec![0], inv: vec![0] }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `a · b⁻¹`
    #[inline]
    pub fn op_inv(&self, a: usize, b: usize) -> usize {
        self.op(a, self.inv[b])
    }

    /// `a · b · a⁻¹`
    #[inline]
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.op(self.op(a, b), self.inv[a])
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.n).map(|a| self.element_order(a)).collect()
    }

    /// Sorted multiset of element orders; an isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut p = self.element_orders();
        p.sort_unstable();
        p
    }

    /// Left multiplication by `a` as a permutation of the carrier.
    pub fn left_translation(&self, a: usize) -> Permutation {
        Permutation::from_images_unchecked(self.table[a * self.n..(a + 1) * self.n].to_vec())
    }

    /// Whether `f` (given as images) is a homomorphism of this group into itself.
    pub fn is_endomorphism(&self, f: &[usize]) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| f[self.op(a, b)] == self.op(f[a], f[b])))
    }

    /// Relabels the carrier by the bijection `to_new` (old label -> new label).
    /// Caller keeps the identity at 0.
    #[cfg(test)]
    pub(crate) fn relabel(&self, to_new: &[usize]) -> GroupTable {
        let n = self.n;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[to_new[a] * n + to_new[b]] = to_new[self.op(a, b)];
            }
        }
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[to_new[a]] = to_new[self.inv[a]];
        }
        GroupTable { n, table, inv }
    }
}
