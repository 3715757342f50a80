use crate::perm::Permutation;

use super::{automorphisms, from_permutations, semidirect_product, GroupTable};

/// `G ⋊ Aut(G)` with `(a, φ)(b, ψ) = (a·φ(b), φ∘ψ)`.
#[derive(Debug, Clone)]
pub struct Holomorph {
    pub table: GroupTable,
    /// `(a, φ)` for each holomorph element.
    pub elements: Vec<(usize, Permutation)>,
    /// Natural action on the carrier of `G`: `(a, φ) · x = a·φ(x)`.
    pub action: Vec<Permutation>,
}

pub fn holomorph(g: &GroupTable) -> Holomorph {
    let auts = automorphisms(g);
    let (aut_group, aut_perms) = from_permutations(&auts);
    let table = semidirect_product(g, &aut_group, &aut_perms);
    let n = g.order();
    let elements: Vec<(usize, Permutation)> =
        (0..table.order()).map(|x| (x % n, aut_perms[x / n].clone())).collect();
    let action = elements
        .iter()
        .map(|(a, phi)| {
            Permutation::from_images_unchecked((0..n).map(|x| g.op(*a, phi.apply(x))).collect())
        })
        .collect();
    Holomorph { table, elements, action }
}
