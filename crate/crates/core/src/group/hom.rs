use crate::perm::Permutation;

use super::subgroups::closure;
use super::GroupTable;

const UNSET: usize = usize::MAX;

/// Greedy generating sequence: repeatedly adjoin an element of largest order
/// outside the subgroup generated so far.
pub fn generating_sequence(g: &GroupTable) -> Vec<usize> {
    let orders = g.element_orders();
    let mut gens = Vec::new();
    let mut current = closure(g, &gens);
    while !current.is_full() {
        let next = (1..g.order())
            .filter(|&x| !current.contains(x))
            .max_by_key(|&x| (orders[x], std::cmp::Reverse(x)))
            .expect("proper subgroup has an outside element");
        gens.push(next);
        current = closure(g, &gens);
    }
    gens
}

/// Backtracking search for isomorphisms `src -> dst` driven by the images of a
/// generating sequence of `src`.
///
/// Images of each generator are restricted to elements of `dst` with the same
/// profile value (element order, or a finer invariant supplied by the caller).
/// After every generator the partial map is closed to a homomorphism on the
/// generated subgroup and then offered to a caller predicate for pruning.
pub(crate) struct HomSearch<'a> {
    src: &'a GroupTable,
    dst: &'a GroupTable,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
}

struct Partial {
    map: Vec<usize>,
    used: Vec<usize>,
    domain: Vec<usize>,
}

impl<'a> HomSearch<'a> {
    /// `None` when the profile multisets already rule out an isomorphism.
    pub(crate) fn new(
        src: &'a GroupTable,
        dst: &'a GroupTable,
        src_profile: &[u64],
        dst_profile: &[u64],
    ) -> Option<Self> {
        if src.order() != dst.order() {
            return None;
        }
        let mut a = src_profile.to_vec();
        let mut b = dst_profile.to_vec();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
        let gens = generating_sequence(src);
        let candidates = gens
            .iter()
            .map(|&x| (1..dst.order()).filter(|&y| dst_profile[y] == src_profile[x]).collect())
            .collect();
        Some(HomSearch { src, dst, gens, candidates })
    }

    /// Runs the search. `prune(map)` sees partial maps (`usize::MAX` = unset) and
    /// returns false to cut a branch; `visit` receives each complete
    /// isomorphism and returns false to stop the search.
    pub(crate) fn run(
        &self,
        prune: &mut dyn FnMut(&[usize]) -> bool,
        visit: &mut dyn FnMut(Permutation) -> bool,
    ) {
        let n = self.src.order();
        let mut map = vec![UNSET; n];
        let mut used = vec![UNSET; n];
        map[0] = 0;
        used[0] = 0;
        let start = Partial { map, used, domain: vec![0] };
        if !prune(&start.map) {
            return;
        }
        self.descend(0, start, prune, visit);
    }

    fn descend(
        &self,
        level: usize,
        state: Partial,
        prune: &mut dyn FnMut(&[usize]) -> bool,
        visit: &mut dyn FnMut(Permutation) -> bool,
    ) -> bool {
        if level == self.gens.len() {
            debug_assert_eq!(state.domain.len(), self.src.order());
            return visit(Permutation::from_images_unchecked(state.map));
        }
        for &y in &self.candidates[level] {
            if let Some(next) = self.extend(&state, level, y) {
                if prune(&next.map) && !self.descend(level + 1, next, prune, visit) {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&self, state: &Partial, level: usize, image: usize) -> Option<Partial> {
        let g = self.gens[level];
        if state.used[image] != UNSET {
            return None;
        }
        let mut map = state.map.clone();
        let mut used = state.used.clone();
        let mut domain = state.domain.clone();
        map[g] = image;
        used[image] = g;
        domain.push(g);
        let active = &self.gens[..=level];
        let mut head = 0;
        while head < domain.len() {
            let x = domain[head];
            head += 1;
            for &s in active {
                let z = self.src.op(x, s);
                let fz = self.dst.op(map[x], map[s]);
                if map[z] == UNSET {
                    if used[fz] != UNSET {
                        return None;
                    }
                    map[z] = fz;
                    used[fz] = z;
                    domain.push(z);
                } else if map[z] != fz {
                    return None;
                }
            }
        }
        Some(Partial { map, used, domain })
    }
}

fn order_profile_u64(g: &GroupTable) -> Vec<u64> {
    g.element_orders().into_iter().map(|o| o as u64).collect()
}

/// All automorphisms, sorted (identity first).
pub fn automorphisms(g: &GroupTable) -> Vec<Permutation> {
    let p = order_profile_u64(g);
    let search = HomSearch::new(g, g, &p, &p).expect("a group matches its own profile");
    let mut out = Vec::new();
    search.run(&mut |_| true, &mut |phi| {
        out.push(phi);
        true
    });
    out.sort();
    out
}

/// An isomorphism `g1 -> g2` if one exists.
pub fn are_isomorphic(g1: &GroupTable, g2: &GroupTable) -> Option<Permutation> {
    let search = HomSearch::new(g1, g2, &order_profile_u64(g1), &order_profile_u64(g2))?;
    let mut found = None;
    search.run(&mut |_| true, &mut |phi| {
        found = Some(phi);
        false
    });
    found
}
