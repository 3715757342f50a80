//! All skew braces of small order, up to isomorphism.
//!
//! The main method walks the regular subgroups of the holomorph of each
//! additive group; an independent brute-force search over circle tables
//! serves as an oracle for orders up to 6.

mod oracle;
mod query;
mod regular;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::brace::SkewBrace;
use crate::group::{group_catalog, validate_group, GroupError, GroupTable};

pub use oracle::{brute_force_oracle, ORACLE_MAX_ORDER};
pub use query::{catalog_query, Predicate};

pub const DEFAULT_ORDER_CAP: usize = 8;
pub const ORDER_CAP_ENV: &str = "SKB_ORDER_CAP";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("order {order} exceeds the enumeration cap {cap} (set {ORDER_CAP_ENV} to raise it)")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("bad value `{value}` for predicate `{key}`")]
    BadPredicateValue { key: String, value: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Holomorph,
    BruteForceOracle,
}

/// One brace per isomorphism class of a fixed order.
#[derive(Debug, Clone)]
pub struct BraceCatalog {
    pub order: usize,
    pub entries: Vec<SkewBrace>,
    pub provenance: Provenance,
}

/// Cap from `SKB_ORDER_CAP`, else [`DEFAULT_ORDER_CAP`].
pub fn order_cap() -> usize {
    std::env::var(ORDER_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
}

fn check_cap(order: usize, cap: usize) -> Result<(), EnumerationError> {
    if order > cap {
        return Err(EnumerationError::OrderCapExceeded { order, cap });
    }
    if order > DEFAULT_ORDER_CAP {
        log::warn!("enumerating skew braces of order {order}; this may take a while");
    }
    Ok(())
}

/// Braces with additive group `add`, one per isomorphism class, in
/// canonical form and sorted. Subject to [`order_cap`].
pub fn skew_braces_on(add: &GroupTable) -> Result<Vec<SkewBrace>, EnumerationError> {
    skew_braces_on_with_cap(add, order_cap())
}

pub fn skew_braces_on_with_cap(add: &GroupTable, cap: usize) -> Result<Vec<SkewBrace>, EnumerationError> {
    check_cap(add.order(), cap)?;
    Ok(classes_on(add).into_iter().map(|c| c.brace).collect())
}

/// An isomorphism class found by the holomorph search.
pub(crate) struct BraceClass {
    pub brace: SkewBrace,
    /// Regular subgroups in the class: `|Aut(A,+)| / |BrAut(A)|`.
    pub orbit_size: usize,
}

pub(crate) fn classes_on(add: &GroupTable) -> Vec<BraceClass> {
    let auts = regular::AutTable::new(add);
    let mut classes: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    regular::lambda_maps(add, &auts, &mut |phi| {
        let (canon, stabilizer) = auts.canonical(phi);
        classes.entry(canon).or_insert(auts.len() / stabilizer);
    });
    classes
        .into_iter()
        .map(|(phi, orbit_size)| {
            let circ = validate_group(&regular::circ_rows(add, &auts, &phi)).expect("regular subgroup gives a group");
            debug_assert!(crate::brace::validate_brace(add.clone(), circ.clone()).is_ok());
            BraceClass { brace: SkewBrace::assemble(add.clone(), circ), orbit_size }
        })
        .collect()
}

/// Number of regular subgroups of the holomorph of `add`.
pub fn count_regular_subgroups(add: &GroupTable) -> usize {
    let auts = regular::AutTable::new(add);
    let mut n = 0;
    regular::lambda_maps(add, &auts, &mut |_| n += 1);
    n
}

/// All braces of order `n` over the group catalog; additive groups in
/// catalog order. Subject to [`order_cap`].
pub fn braces_of_order(n: usize) -> Result<BraceCatalog, EnumerationError> {
    braces_of_order_with_cap(n, order_cap())
}

pub fn braces_of_order_with_cap(n: usize, cap: usize) -> Result<BraceCatalog, EnumerationError> {
    check_cap(n, cap)?;
    let mut entries = Vec::new();
    for g in group_catalog(n)? {
        entries.extend(classes_on(&g.group).into_iter().map(|c| c.brace));
    }
    Ok(BraceCatalog { order: n, entries, provenance: Provenance::Holomorph })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{are_isomorphic_braces, brace_automorphisms};
    use crate::group::{cyclic, elementary_abelian, symmetric};

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            braces_of_order_with_cap(9, 8).unwrap_err(),
            EnumerationError::OrderCapExceeded { order: 9, cap: 8 }
        );
        assert!(matches!(
            braces_of_order_with_cap(13, 20),
            Err(EnumerationError::Group(GroupError::UnsupportedOrder(13)))
        ));
    }

    #[test]
    fn orbit_sizes_account_for_all_regular_subgroups() {
        for g in [cyclic(4), elementary_abelian(2, 2), symmetric(3), cyclic(6)] {
            let classes = classes_on(&g);
            let total: usize = classes.iter().map(|c| c.orbit_size).sum();
            assert_eq!(total, count_regular_subgroups(&g));
            let aut = crate::group::automorphisms(&g).len();
            for c in &classes {
                assert_eq!(c.orbit_size * brace_automorphisms(&c.brace).len(), aut);
            }
        }
    }

    #[test]
    fn classes_are_pairwise_non_isomorphic() {
        let cat = braces_of_order_with_cap(6, 8).unwrap();
        for (i, a) in cat.entries.iter().enumerate() {
            for b in &cat.entries[i + 1..] {
                assert!(are_isomorphic_braces(a, b).is_none());
            }
        }
    }

    #[test]
    fn trivial_orders() {
        let one = braces_of_order_with_cap(1, 8).unwrap();
        assert_eq!(one.entries.len(), 1);
        assert_eq!(one.entries[0].order(), 1);
        let two = braces_of_order_with_cap(2, 8).unwrap();
        assert_eq!(two.entries.len(), 1);
        assert!(two.entries[0].is_trivial());
    }
}
