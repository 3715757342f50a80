use std::collections::HashMap;

use crate::perm::Permutation;

use super::{are_isomorphic, GroupError, GroupTable};

pub const CATALOG_MAX_ORDER: usize = 12;

#[derive(Debug, Clone)]
pub struct NamedGroup {
    pub name: String,
    pub group: GroupTable,
}

pub fn cyclic(n: usize) -> GroupTable {
    assert!(n >= 1);
    let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    GroupTable::from_flat_trusted(n, table)
}

/// `(a, b) ↦ a + |g|·b`, so the identity stays at 0.
pub fn direct_product(g: &GroupTable, h: &GroupTable) -> GroupTable {
    let (m, k) = (g.order(), h.order());
    let n = m * k;
    let mut table = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            table[x * n + y] = g.op(x % m, y % m) + m * h.op(x / m, y / m);
        }
    }
    GroupTable::from_flat_trusted(n, table)
}

/// `N ⋊ H` with `(a, h)(b, k) = (a · action[h](b), h k)`; `action` must be a
/// homomorphism `H -> Aut(N)` given as one permutation per element of `H`.
/// Element `(a, h)` is labelled `a + |N|·h`.
pub fn semidirect_product(normal: &GroupTable, top: &GroupTable, action: &[Permutation]) -> GroupTable {
    let (m, k) = (normal.order(), top.order());
    assert_eq!(action.len(), k);
    let n = m * k;
    let mut table = vec![0; n * n];
    for x in 0..n {
        let (a, h) = (x % m, x / m);
        for y in 0..n {
            let (b, t) = (y % m, y / m);
            table[x * n + y] = normal.op(a, action[h].apply(b)) + m * top.op(h, t);
        }
    }
    GroupTable::from_flat_trusted(n, table)
}

/// `C_{p₁} × … ` for a list of cyclic orders.
fn abelian(factors: &[usize]) -> GroupTable {
    factors.iter().fold(GroupTable::trivial(), |acc, &k| direct_product(&acc, &cyclic(k)))
}

pub fn elementary_abelian(p: usize, rank: usize) -> GroupTable {
    abelian(&vec![p; rank])
}

fn negation(g: &GroupTable) -> Permutation {
    Permutation::from_images_unchecked((0..g.order()).map(|a| g.inv(a)).collect())
}

/// Dihedral group of the given (even) order.
pub fn dihedral(order: usize) -> GroupTable {
    assert!(order >= 2 && order.is_multiple_of(2));
    generalized_dihedral(&cyclic(order / 2))
}

/// `A ⋊ C₂` with the generator acting by inversion; `a` must be abelian.
pub fn generalized_dihedral(a: &GroupTable) -> GroupTable {
    assert!(a.is_abelian());
    semidirect_product(a, &cyclic(2), &[Permutation::identity(a.order()), negation(a)])
}

/// Dicyclic group of order `4m`: `x^{2m} = 1, y² = x^m, y x y⁻¹ = x⁻¹`.
/// `x^a y^s` is labelled `a + 2m·s`.
pub fn dicyclic(order: usize) -> GroupTable {
    assert!(order >= 4 && order.is_multiple_of(4));
    let m = order / 4;
    let k = 2 * m;
    let n = order;
    let mut table = vec![0; n * n];
    for x in 0..n {
        let (a, s) = (x % k, x / k);
        for y in 0..n {
            let (b, t) = (y % k, y / k);
            let (c, u) = match (s, t) {
                (0, _) => ((a + b) % k, t),
                (1, 0) => ((a + k - b) % k, 1),
                _ => ((a + k - b + m) % k, 0),
            };
            table[x * n + y] = c + k * u;
        }
    }
    GroupTable::from_flat_trusted(n, table)
}

/// `A₄ = C₂² ⋊ C₃`.
pub fn alternating4() -> GroupTable {
    let v = elementary_abelian(2, 2);
    // labels of C2×C2: 1=(1,0), 2=(0,1), 3=(1,1); rotate the three involutions
    let rot = Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap();
    debug_assert!(v.is_endomorphism(rot.images()));
    let action = vec![Permutation::identity(4), rot.clone(), rot.compose(&rot)];
    semidirect_product(&v, &cyclic(3), &action)
}

/// `S_k` from a transposition and a long cycle.
pub fn symmetric(k: usize) -> GroupTable {
    assert!(k >= 1);
    if k == 1 {
        return GroupTable::trivial();
    }
    let cycle: Vec<usize> = (0..k).collect();
    let gens = [
        Permutation::from_cycles(k, &[&[0, 1]]).unwrap(),
        Permutation::from_cycles(k, &[&cycle]).unwrap(),
    ];
    from_permutations(&gens).0
}

/// Closes a set of permutations under composition. Returns the Cayley table
/// (identity at 0, remaining elements in discovery order) together with the
/// permutation carried by each element; `table[i][j]` is `perms[i] ∘ perms[j]`.
pub fn from_permutations(gens: &[Permutation]) -> (GroupTable, Vec<Permutation>) {
    closure_of_permutations(gens, usize::MAX).expect("no cap")
}

pub(crate) fn closure_of_permutations(
    gens: &[Permutation],
    cap: usize,
) -> Result<(GroupTable, Vec<Permutation>), GroupError> {
    let degree = gens.first().map_or(0, |p| p.degree());
    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for s in gens {
            let y = x.compose(s);
            if !index.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(GroupError::GroupTooLarge { cap });
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
    }
    let n = elements.len();
    let mut table = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = index[&elements[i].compose(&elements[j])];
        }
    }
    Ok((GroupTable::from_flat_trusted(n, table), elements))
}

fn named(name: &str, group: GroupTable) -> NamedGroup {
    NamedGroup { name: name.to_string(), group }
}

/// One representative per isomorphism class of groups of order `n ≤ 12`.
pub fn group_catalog(n: usize) -> Result<Vec<NamedGroup>, GroupError> {
    let c = cyclic;
    let list = match n {
        1 => vec![named("C1", c(1))],
        2 => vec![named("C2", c(2))],
        3 => vec![named("C3", c(3))],
        4 => vec![named("C4", c(4)), named("C2^2", elementary_abelian(2, 2))],
        5 => vec![named("C5", c(5))],
        6 => vec![named("C6", c(6)), named("S3", dihedral(6))],
        7 => vec![named("C7", c(7))],
        8 => vec![
            named("C8", c(8)),
            named("C4xC2", abelian(&[4, 2])),
            named("C2^3", elementary_abelian(2, 3)),
            named("D8", dihedral(8)),
            named("Q8", dicyclic(8)),
        ],
        9 => vec![named("C9", c(9)), named("C3^2", elementary_abelian(3, 2))],
        10 => vec![named("C10", c(10)), named("D10", dihedral(10))],
        11 => vec![named("C11", c(11))],
        12 => vec![
            named("C12", c(12)),
            named("C6xC2", abelian(&[6, 2])),
            named("D12", dihedral(12)),
            named("A4", alternating4()),
            named("Dic12", dicyclic(12)),
        ],
        _ => return Err(GroupError::UnsupportedOrder(n)),
    };
    Ok(list)
}

/// Named groups beyond the catalog range, used only for labelling.
fn extra_named_groups(n: usize) -> Vec<NamedGroup> {
    match n {
        18 => vec![
            named("C18", cyclic(18)),
            named("C6xC3", abelian(&[6, 3])),
            named("D18", dihedral(18)),
            named("C3xS3", direct_product(&cyclic(3), &dihedral(6))),
            named("(C3xC3):C2", generalized_dihedral(&elementary_abelian(3, 2))),
        ],
        24 => vec![
            named("S4", symmetric(4)),
            named("C3xD8", direct_product(&cyclic(3), &dihedral(8))),
            named("C3xQ8", direct_product(&cyclic(3), &dicyclic(8))),
            named("C2xA4", direct_product(&cyclic(2), &alternating4())),
            named("SL(2,3)", sl23()),
        ],
        _ => Vec::new(),
    }
}

/// SL(2,3) as 2×2 matrices over GF(3) acting on the 8 non-zero vectors.
fn sl23() -> GroupTable {
    let vecs: Vec<(usize, usize)> =
        (0..9).map(|i| (i % 3, i / 3)).filter(|&v| v != (0, 0)).collect();
    let act = |m: [usize; 4]| {
        let images = vecs
            .iter()
            .map(|&(x, y)| {
                let v = ((m[0] * x + m[1] * y) % 3, (m[2] * x + m[3] * y) % 3);
                vecs.iter().position(|&w| w == v).unwrap()
            })
            .collect();
        Permutation::from_images(images).unwrap()
    };
    from_permutations(&[act([1, 1, 0, 1]), act([1, 0, 1, 1])]).0
}

/// Name of a known group isomorphic to `g`, if any.
pub fn identify_group(g: &GroupTable) -> Option<String> {
    let n = g.order();
    let mut candidates = group_catalog(n).unwrap_or_default();
    candidates.extend(extra_named_groups(n));
    let profile = g.order_profile();
    let abelian = g.is_abelian();
    candidates
        .into_iter()
        .filter(|c| c.group.is_abelian() == abelian && c.group.order_profile() == profile)
        .find(|c| are_isomorphic(&c.group, g).is_some())
        .map(|c| c.name)
}
