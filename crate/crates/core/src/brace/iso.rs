use crate::group::HomSearch;
use crate::perm::Permutation;
use crate::subset::Subset;

use super::{direct_product_braces, ideals, sub_brace, SkewBrace};

/// Per-element invariant preserved by brace isomorphisms: additive order,
/// multiplicative order and the number of points fixed by `λ_x`.
fn profile(a: &SkewBrace) -> Vec<u64> {
    (0..a.order())
        .map(|x| {
            let add = a.additive().element_order(x) as u64;
            let circ = a.multiplicative().element_order(x) as u64;
            let fixed = a.lambda(x).fixed_points() as u64;
            add | circ << 20 | fixed << 40
        })
        .collect()
}

/// Partial additive isomorphism is consistent with `∘` wherever defined.
fn respects_circ(src: &SkewBrace, dst: &SkewBrace, map: &[usize]) -> bool {
    let n = src.order();
    for x in 0..n {
        let fx = map[x];
        if fx == usize::MAX {
            continue;
        }
        for y in 0..n {
            let fy = map[y];
            if fy == usize::MAX {
                continue;
            }
            let fxy = map[src.circ(x, y)];
            if fxy != usize::MAX && fxy != dst.circ(fx, fy) {
                return false;
            }
        }
    }
    true
}

fn search(src: &SkewBrace, dst: &SkewBrace, first_only: bool) -> Vec<Permutation> {
    let (ps, pd) = (profile(src), profile(dst));
    let Some(hs) = HomSearch::new(src.additive(), dst.additive(), &ps, &pd) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    hs.run(&mut |map| respects_circ(src, dst, map), &mut |phi| {
        out.push(phi);
        !first_only
    });
    out
}

/// Bijections fixing 0 that preserve both operations; sorted, identity first.
pub fn brace_automorphisms(a: &SkewBrace) -> &[Permutation] {
    a.automorphisms.get_or_init(|| {
        let mut auts = search(a, a, false);
        auts.sort();
        auts
    })
}

pub fn are_isomorphic_braces(a: &SkewBrace, b: &SkewBrace) -> Option<Permutation> {
    if a.order() != b.order() {
        return None;
    }
    search(a, b, true).pop()
}

/// Ideals fixed setwise by every brace automorphism.
pub fn characteristic_ideals(a: &SkewBrace) -> Vec<Subset> {
    let auts = brace_automorphisms(a);
    ideals(a)
        .into_iter()
        .filter(|s| auts.iter().all(|sigma| s.iter().all(|x| s.contains(sigma.apply(x)))))
        .collect()
}

pub fn is_characteristically_simple(a: &SkewBrace) -> bool {
    characteristic_ideals(a).iter().all(|s| s.is_zero() || s.is_full())
}

/// Non-zero with no ideals besides `0` and `A`; the order-1 brace is not simple.
pub fn is_simple(a: &SkewBrace) -> bool {
    a.order() > 1 && ideals(a).len() == 2
}

/// Non-zero ideals containing no smaller non-zero ideal.
pub fn minimal_ideals(a: &SkewBrace) -> Vec<Subset> {
    let all: Vec<Subset> = ideals(a).into_iter().filter(|s| !s.is_zero()).collect();
    all.iter()
        .filter(|s| !all.iter().any(|t| t != *s && t.is_subset_of(s)))
        .cloned()
        .collect()
}

/// Finds a simple brace `S` and `k ≥ 1` with `A ≅ S^k`. Candidates for `S`
/// are the minimal ideals of `A` viewed as sub-braces.
pub fn decompose_as_power_of_simple(a: &SkewBrace) -> Option<(SkewBrace, usize)> {
    let n = a.order();
    if n < 2 {
        return None;
    }
    let mut tried: Vec<SkewBrace> = Vec::new();
    for ideal in minimal_ideals(a) {
        let s = sub_brace(a, &ideal).expect("ideals are left ideals");
        if tried.iter().any(|t| are_isomorphic_braces(t, &s).is_some()) {
            continue;
        }
        let k = power_exponent(s.order(), n);
        if let Some(k) = k {
            if is_simple(&s) {
                let power = direct_product_braces(&vec![s.clone(); k]);
                if are_isomorphic_braces(a, &power).is_some() {
                    return Some((s, k));
                }
            }
        }
        tried.push(s);
    }
    None
}

/// `k` with `base^k = n`.
fn power_exponent(base: usize, n: usize) -> Option<usize> {
    if base < 2 {
        return None;
    }
    let (mut acc, mut k) = (base, 1);
    while acc < n {
        acc *= base;
        k += 1;
    }
    (acc == n).then_some(k)
}
