//! Finite groups as Cayley tables: validation, subgroups, automorphisms,
//! isomorphism search, standard constructions and the holomorph.

mod construct;
mod holomorph;
mod hom;
mod subgroups;
mod table;

pub use construct::{
    cyclic, dicyclic, dihedral, direct_product, elementary_abelian, from_permutations,
    generalized_dihedral, group_catalog, identify_group, semidirect_product, symmetric,
    alternating4, NamedGroup, CATALOG_MAX_ORDER,
};
pub(crate) use construct::closure_of_permutations;
pub use holomorph::{holomorph, Holomorph};
pub use hom::{are_isomorphic, automorphisms, generating_sequence};
pub(crate) use hom::HomSearch;
pub use subgroups::{all_subgroups, center, induced_table, is_normal, is_subgroup, subgroup_generated};
pub use table::{validate_group, GroupTable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("empty table")]
    Empty,
    #[error("row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("not a latin square: {value} repeats at ({row}, {col})")]
    NotLatinSquare { row: usize, col: usize, value: usize },
    #[error("element 0 is not a two-sided identity: it moves {0}")]
    NoIdentityAtZero(usize),
    #[error("associativity fails at ({a}, {b}, {c})")]
    NonAssociative { a: usize, b: usize, c: usize },
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("subset is not a subgroup")]
    NotASubgroup,
    #[error("no catalog for order {0} (supported: 1..={max})", max = CATALOG_MAX_ORDER)]
    UnsupportedOrder(usize),
    #[error("generated group exceeds the order cap {cap}")]
    GroupTooLarge { cap: usize },
}
