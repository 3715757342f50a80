//! Computational toolkit for finite skew left braces.
//!
//! Groups and braces are Cayley tables on `0..n` with the identity at `0`.
//! The crate covers ideal theory (left, strong left, two-sided and
//! characteristic ideals), the right series, factorizations through left
//! ideals and the structural results that follow from them, the set-theoretic
//! Yang–Baxter solution attached to a brace, retraction towers, and
//! exhaustive enumeration of skew braces of small order through regular
//! subgroups of the holomorph.

pub mod analysis;
pub mod brace;
pub mod enumeration;
pub mod factorization;
pub mod fixtures;
pub mod group;
pub mod io;
pub mod perm;
pub mod report;
pub mod subset;
pub mod suites;
pub mod ybe;

pub use brace::{validate_brace, BraceError, SkewBrace};
pub use group::{validate_group, GroupError, GroupTable};
pub use perm::Permutation;
pub use subset::Subset;
pub use ybe::{validate_solution, Solution, SolutionError};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
