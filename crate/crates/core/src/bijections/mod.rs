//! The correspondences built on top of paths, partitions and tableaux:
//!
//! - `zeta`: noncrossing pairs of free Dyck paths of length `2n` to
//!   noncrossing partitions of `[2n+1]` with `n+1` blocks, through a
//!   one-row vacillating tableau, plus the equivalent half-arc pairing;
//! - `labelle`: the merge of a noncrossing pair into a single Dyck path of
//!   length `4n+2` with `n+1` up steps at odd positions;
//! - `plane`: noncrossing `k`-tuples to plane partitions in the
//!   `n x n x k` box.

mod labelle;
mod plane;
mod zeta;

pub use labelle::{labelle_merge, labelle_split};
pub use plane::{
    enumerate_box_plane_partitions, parse_plane_partition, plane_partition_to_tuple, tuple_to_plane_partition,
    PlanePartition,
};
pub use zeta::{
    halfarc_zeta, halfarc_zeta_inverse, pair_to_vacillating, vacillating_to_pair, zeta, zeta_inverse,
};

use crate::error::{Error, Result};
use crate::paths::{is_noncrossing_tuple, FreeDyckPath};

/// Fails with a precondition error unless `upper` stays weakly above `lower`.
pub(crate) fn require_noncrossing_pair(upper: &FreeDyckPath, lower: &FreeDyckPath) -> Result<()> {
    if upper.len() != lower.len() {
        return Err(Error::Precondition(format!(
            "paths {upper} and {lower} have different lengths"
        )));
    }
    if !is_noncrossing_tuple(&[upper.clone(), lower.clone()])? {
        return Err(Error::Precondition(format!("{upper} goes below {lower}")));
    }
    Ok(())
}
