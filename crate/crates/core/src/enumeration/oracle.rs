//! Brute-force enumeration, independent of the holomorph search and of the
//! automorphism backtracking.
//!
//! Compatibility forces `a ∘ b = a + g_a(b)` with each `g_a` an additive
//! bijection fixing 0 and `g_0 = id`, so it suffices to try every such row
//! family, keep those passing the group and brace validators, and merge
//! isomorphic results pairwise.

use crate::brace::{are_isomorphic_braces, validate_brace, SkewBrace};
use crate::group::{group_catalog, validate_group, GroupTable};

use super::{BraceCatalog, EnumerationError, Provenance};

pub const ORACLE_MAX_ORDER: usize = 6;

/// Additive bijections fixing 0, by exhaustive permutation search.
fn additive_bijections(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if perm[0] == 0 && g.is_endomorphism(&perm) {
            out.push(perm.clone());
        }
        if !next_permutation(&mut perm) {
            return out;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn braces_on(g: &GroupTable) -> Vec<SkewBrace> {
    let n = g.order();
    let maps = additive_bijections(g);
    let mut found: Vec<SkewBrace> = Vec::new();
    // choice[a] indexes maps for a = 1..n; index 0 is the identity
    let mut choice = vec![0usize; n];
    loop {
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                let m = if a == 0 { &maps[0] } else { &maps[choice[a]] };
                (0..n).map(|b| g.op(a, m[b])).collect()
            })
            .collect();
        if let Ok(circ) = validate_group(&rows) {
            if let Ok(b) = validate_brace(g.clone(), circ) {
                if !found.iter().any(|f| are_isomorphic_braces(f, &b).is_some()) {
                    found.push(b);
                }
            }
        }
        let mut a = 1;
        loop {
            if a >= n {
                return found;
            }
            choice[a] += 1;
            if choice[a] < maps.len() {
                break;
            }
            choice[a] = 0;
            a += 1;
        }
    }
}

/// All braces of order `n ≤ 6` by exhaustive search over circle tables.
pub fn brute_force_oracle(n: usize) -> Result<BraceCatalog, EnumerationError> {
    if n > ORACLE_MAX_ORDER {
        return Err(EnumerationError::OrderCapExceeded { order: n, cap: ORACLE_MAX_ORDER });
    }
    let mut entries = Vec::new();
    for g in group_catalog(n)? {
        entries.extend(braces_on(&g.group));
    }
    Ok(BraceCatalog { order: n, entries, provenance: Provenance::BruteForceOracle })
}
