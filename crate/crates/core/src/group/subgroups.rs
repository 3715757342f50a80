use std::collections::HashSet;

use crate::subset::Subset;

use super::{GroupError, GroupTable};

/// Smallest subgroup containing `gens` (and `0`).
pub fn subgroup_generated(g: &GroupTable, gens: &Subset) -> Subset {
    closure(g, gens.elements())
}

pub(crate) fn closure(g: &GroupTable, gens: &[usize]) -> Subset {
    let n = g.order();
    let gens: Vec<usize> = gens.iter().copied().filter(|&x| x != 0).collect();
    let mut mask = vec![false; n];
    mask[0] = true;
    let mut members = vec![0];
    let mut head = 0;
    // right multiplication by generators from 0 reaches the whole finite subgroup
    while head < members.len() {
        let x = members[head];
        head += 1;
        for &s in &gens {
            let y = g.op(x, s);
            if !mask[y] {
                mask[y] = true;
                members.push(y);
            }
        }
    }
    Subset::from_mask(&mask)
}

pub fn is_subgroup(g: &GroupTable, s: &Subset) -> bool {
    s.contains(0) && s.iter().all(|a| s.iter().all(|b| s.contains(g.op_inv(a, b))))
}

/// Every subgroup exactly once, sorted by size then lexicographically.
///
/// Climbs the subgroup lattice: each subgroup is reached from a smaller one by
/// adjoining a single element and closing.
pub fn all_subgroups(g: &GroupTable) -> Vec<Subset> {
    let n = g.order();
    let zero = Subset::zero(n);
    let mut seen: HashSet<Subset> = HashSet::new();
    seen.insert(zero.clone());
    // (subgroup, a generating set for it)
    let mut frontier: Vec<(Subset, Vec<usize>)> = vec![(zero, Vec::new())];
    while let Some((h, gens)) = frontier.pop() {
        let mask = h.mask();
        for x in 1..n {
            if mask[x] {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(x);
            let k = closure(g, &next_gens);
            if seen.insert(k.clone()) {
                frontier.push((k, next_gens));
            }
        }
    }
    let mut out: Vec<Subset> = seen.into_iter().collect();
    out.sort();
    out
}

pub fn is_normal(g: &GroupTable, s: &Subset) -> Result<bool, GroupError> {
    if !is_subgroup(g, s) {
        return Err(GroupError::NotASubgroup);
    }
    Ok((0..g.order()).all(|a| s.iter().all(|x| s.contains(g.conj(a, x)))))
}

/// The subgroup as a group in its own right; `s[i]` becomes label `i`.
pub fn induced_table(g: &GroupTable, s: &Subset) -> Result<GroupTable, GroupError> {
    if !is_subgroup(g, s) {
        return Err(GroupError::NotASubgroup);
    }
    let idx = s.index_map();
    let k = s.len();
    let mut table = vec![0; k * k];
    for (i, x) in s.iter().enumerate() {
        for (j, y) in s.iter().enumerate() {
            table[i * k + j] = idx[g.op(x, y)].expect("closed under the operation");
        }
    }
    Ok(GroupTable::from_flat_trusted(k, table))
}

pub fn center(g: &GroupTable) -> Subset {
    let n = g.order();
    Subset::from_sorted_unchecked(
        n,
        (0..n).filter(|&a| (0..n).all(|b| g.op(a, b) == g.op(b, a))).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, elementary_abelian, symmetric};

    /// Brute force over every subset of the carrier.
    fn brute_subgroups(g: &GroupTable) -> Vec<Subset> {
        let n = g.order();
        let mut out = Vec::new();
        for bits in 0u32..(1 << n) {
            let s = Subset::new(n, (0..n).filter(|&i| bits >> i & 1 == 1)).unwrap();
            if !s.is_empty() && is_subgroup(g, &s) {
                out.push(s);
            }
        }
        out.sort();
        out
    }

    fn transposition_of_s3(g: &GroupTable) -> usize {
        (1..6).find(|&a| g.element_order(a) == 2).unwrap()
    }

    #[test]
    fn generated_examples() {
        let c4 = cyclic(4);
        assert_eq!(subgroup_generated(&c4, &Subset::new(4, [2]).unwrap()).elements(), &[0, 2]);
        assert!(subgroup_generated(&c4, &Subset::empty(4)).is_zero());
        let s3 = symmetric(3);
        let t = transposition_of_s3(&s3);
        assert_eq!(subgroup_generated(&s3, &Subset::new(6, [t]).unwrap()).elements(), &[0, t]);
    }

    #[test]
    fn subgroup_lists_match_brute_force() {
        assert_eq!(all_subgroups(&cyclic(2)), vec![Subset::zero(2), Subset::full(2)]);
        assert_eq!(all_subgroups(&elementary_abelian(2, 2)).len(), 5);
        assert_eq!(all_subgroups(&symmetric(3)).len(), 6);
        for g in [cyclic(6), dihedral(8), elementary_abelian(2, 3), symmetric(3), cyclic(8)] {
            assert_eq!(all_subgroups(&g), brute_subgroups(&g));
        }
    }

    #[test]
    fn normal_subgroups_match_brute_force() {
        for g in [dihedral(8), symmetric(3), crate::group::dicyclic(8), cyclic(4)] {
            let fast: Vec<Subset> =
                all_subgroups(&g).into_iter().filter(|s| is_normal(&g, s).unwrap()).collect();
            let n = g.order();
            let brute: Vec<Subset> = brute_subgroups(&g)
                .into_iter()
                .filter(|s| {
                    (0..n).all(|a| s.iter().all(|x| s.contains(g.op(g.op(a, x), g.inv(a)))))
                })
                .collect();
            assert_eq!(fast, brute);
        }
    }

    #[test]
    fn normality_examples() {
        let s3 = symmetric(3);
        let rot = (1..6).find(|&a| s3.element_order(a) == 3).unwrap();
        let a3 = subgroup_generated(&s3, &Subset::new(6, [rot]).unwrap());
        assert!(is_normal(&s3, &a3).unwrap());
        let t = transposition_of_s3(&s3);
        assert!(!is_normal(&s3, &Subset::new(6, [0, t]).unwrap()).unwrap());
        assert_eq!(is_normal(&s3, &Subset::new(6, [t]).unwrap()), Err(GroupError::NotASubgroup));
        let c6 = cyclic(6);
        assert!(all_subgroups(&c6).iter().all(|s| is_normal(&c6, s).unwrap()));
    }

    #[test]
    fn centers() {
        assert!(center(&cyclic(5)).is_full());
        assert!(center(&symmetric(3)).is_zero());
        assert_eq!(center(&dihedral(8)).len(), 2);
    }
}
