//! Regular subgroups of `Hol(A)` as λ-maps.
//!
//! A regular subgroup is `{(a, φ_a) : a ∈ A}` for a map `a ↦ φ_a ∈ Aut(A)`
//! with `φ_0 = id` and `φ_{a + φ_a(b)} = φ_a φ_b`; the brace is then
//! `a ∘ b = a + φ_a(b)` with `λ_a = φ_a`.

use std::collections::HashMap;

use crate::group::{automorphisms, GroupTable};
use crate::perm::Permutation;

const UNSET: usize = usize::MAX;

pub(crate) struct AutTable {
    pub auts: Vec<Permutation>,
    /// `mul[i][j]` is the index of `auts[i] ∘ auts[j]`.
    mul: Vec<Vec<usize>>,
    /// `conj[s][k]` is the index of `auts[s] ∘ auts[k] ∘ auts[s]⁻¹`.
    conj: Vec<Vec<usize>>,
}

impl AutTable {
    pub fn new(g: &GroupTable) -> AutTable {
        let auts = automorphisms(g);
        let index: HashMap<&[usize], usize> = auts.iter().enumerate().map(|(i, p)| (p.images(), i)).collect();
        let lookup = |p: &Permutation| index[p.images()];
        let mul = auts.iter().map(|p| auts.iter().map(|q| lookup(&p.compose(q))).collect()).collect();
        let conj = auts
            .iter()
            .map(|s| {
                let s_inv = s.inverse();
                auts.iter().map(|k| lookup(&s.compose(k).compose(&s_inv))).collect()
            })
            .collect();
        AutTable { auts, mul, conj }
    }

    pub fn len(&self) -> usize {
        self.auts.len()
    }

    /// Least image of `phi` under transport by additive automorphisms,
    /// `φ'_{σ(a)} = σ φ_a σ⁻¹`, and the number of `σ` fixing `phi`.
    pub fn canonical(&self, phi: &[usize]) -> (Vec<usize>, usize) {
        let n = phi.len();
        let mut best: Option<Vec<usize>> = None;
        let mut stabilizer = 0;
        let mut image = vec![0; n];
        for (s, sigma) in self.auts.iter().enumerate() {
            for a in 0..n {
                image[sigma.apply(a)] = self.conj[s][phi[a]];
            }
            if image == phi {
                stabilizer += 1;
            }
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image.clone());
            }
        }
        (best.expect("identity automorphism"), stabilizer)
    }
}

/// Every λ-map on `g`, i.e. every regular subgroup of its holomorph.
pub(crate) fn lambda_maps(g: &GroupTable, auts: &AutTable, visit: &mut dyn FnMut(&[usize])) {
    let n = g.order();
    let mut phi = vec![UNSET; n];
    phi[0] = 0;
    let mut trail = vec![0];
    search(g, auts, &mut phi, &mut trail, visit);
}

fn search(g: &GroupTable, auts: &AutTable, phi: &mut [usize], trail: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    let Some(a) = phi.iter().position(|&k| k == UNSET) else {
        visit(phi);
        return;
    };
    let mark = trail.len();
    for k in 0..auts.len() {
        phi[a] = k;
        trail.push(a);
        if propagate(g, auts, phi, trail, mark) {
            search(g, auts, phi, trail, visit);
        }
        for &x in &trail[mark..] {
            phi[x] = UNSET;
        }
        trail.truncate(mark);
    }
}

/// Closes the assignment under `(x, φ_x)(y, φ_y) = (x + φ_x(y), φ_x φ_y)`.
/// Elements `trail[start..]` are new; each is paired with everything assigned.
fn propagate(g: &GroupTable, auts: &AutTable, phi: &mut [usize], trail: &mut Vec<usize>, start: usize) -> bool {
    let mut head = start;
    while head < trail.len() {
        let x = trail[head];
        head += 1;
        let mut i = 0;
        while i < trail.len() {
            let y = trail[i];
            i += 1;
            for (u, v) in [(x, y), (y, x)] {
                let z = g.op(u, auts.auts[phi[u]].apply(v));
                let want = auts.mul[phi[u]][phi[v]];
                if phi[z] == UNSET {
                    phi[z] = want;
                    trail.push(z);
                } else if phi[z] != want {
                    return false;
                }
            }
        }
    }
    true
}

/// `a ∘ b = a + φ_a(b)`.
pub(crate) fn circ_rows(g: &GroupTable, auts: &AutTable, phi: &[usize]) -> Vec<Vec<usize>> {
    let n = g.order();
    (0..n).map(|a| (0..n).map(|b| g.op(a, auts.auts[phi[a]].apply(b))).collect()).collect()
}
