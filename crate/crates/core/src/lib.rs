//! Noncrossing pairs of free Dyck paths and the objects they correspond to.
//!
//! The crate connects five families, all exhaustively enumerable at small
//! sizes:
//!
//! - [`paths`]: free Dyck paths, Dyck paths, noncrossing tuples;
//! - [`set_partitions`]: set partitions, arc diagrams, `cr` and `ne`;
//! - [`tableaux`]: Young tableaux, row insertion, vacillating tableaux and
//!   their bijection with set partitions;
//! - [`bijections`]: ζ (pairs to noncrossing partitions), its half-arc form,
//!   the Labelle merge, and the tuple to plane partition map;
//! - [`enumeration`]: the box product for `B(n, n, k)`, `F(n, k)`,
//!   Narayana numbers, and brute-force counters.
//!
//! [`verify`] bundles the exhaustive cross-checks.

pub mod bijections;
pub mod enumeration;
pub mod error;
pub mod paths;
pub mod set_partitions;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
