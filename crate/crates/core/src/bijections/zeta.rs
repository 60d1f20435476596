use crate::error::{Error, Result};
use crate::paths::{FreeDyckPath, Step};
use crate::set_partitions::{is_noncrossing, partition_from_arcs, standard_representation, ArcDiagram, SetPartition};
use crate::tableaux::{partition_to_vacillating, vacillating_to_partition, Shape, Transition, VacillatingTableau};

use super::require_noncrossing_pair;

fn row(len: usize) -> Shape {
    Shape::new(if len == 0 { vec![] } else { vec![len] }).expect("single row")
}

/// First phase of ζ: a one-row vacillating tableau of length `4n + 2`.
///
/// For each position `i`, `(U,U)` adds then deletes, `(U,D)` adds, `(D,U)`
/// deletes, and `(D,D)` keeps the row unchanged across steps `2i, 2i+1`.
pub fn pair_to_vacillating(upper: &FreeDyckPath, lower: &FreeDyckPath) -> Result<VacillatingTableau> {
    require_noncrossing_pair(upper, lower)?;
    let hp = upper.height_profile();
    let hq = lower.height_profile();
    let mut sizes = vec![0usize, 0];
    let mut size = 0usize;
    for (i, (&p, &q)) in upper.steps().iter().zip(lower.steps()).enumerate() {
        let (add, delete) = match (p, q) {
            (Step::U, Step::U) => (true, true),
            (Step::U, Step::D) => (true, false),
            (Step::D, Step::U) => (false, true),
            (Step::D, Step::D) => (false, false),
        };
        if add {
            size += 1;
        }
        sizes.push(size);
        if delete {
            size = size
                .checked_sub(1)
                .ok_or_else(|| Error::Invariant(format!("step {} deletes from an empty row", 2 * i + 3)))?;
        }
        sizes.push(size);
        let gap = hp[i] - hq[i];
        if 2 * size as i64 != gap {
            return Err(Error::Invariant(format!(
                "row length {size} after position {} but height gap {gap}",
                i + 1
            )));
        }
    }
    if size != 0 {
        return Err(Error::Invariant(format!("final row length {size}")));
    }
    sizes.push(0);
    VacillatingTableau::new(sizes.into_iter().map(row).collect())
        .map_err(|e| Error::Invariant(e.to_string()))
}

/// Inverse of [`pair_to_vacillating`].
pub fn vacillating_to_pair(vt: &VacillatingTableau) -> Result<(FreeDyckPath, FreeDyckPath)> {
    let shapes = vt.shapes();
    if (shapes.len() - 1) % 4 != 2 {
        return Err(Error::Precondition(format!(
            "length {} is not of the form 4n+2",
            shapes.len() - 1
        )));
    }
    if let Some(s) = shapes.iter().find(|s| s.num_rows() > 1) {
        return Err(Error::Precondition(format!("shape {s} has more than one row")));
    }
    let last = shapes.len() - 1;
    if vt.transition(last) != Transition::Keep {
        return Err(Error::Precondition("the final step must keep the shape".into()));
    }
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for i in 1..=(last - 2) / 2 {
        let add = matches!(vt.transition(2 * i), Transition::Add(_));
        let delete = matches!(vt.transition(2 * i + 1), Transition::Delete(_));
        let (p, q) = match (add, delete) {
            (true, true) => (Step::U, Step::U),
            (true, false) => (Step::U, Step::D),
            (false, true) => (Step::D, Step::U),
            (false, false) => (Step::D, Step::D),
        };
        upper.push(p);
        lower.push(q);
    }
    let inconsistent = |e: Error| Error::Precondition(format!("inconsistent transitions: {e}"));
    let upper = FreeDyckPath::new(upper).map_err(inconsistent)?;
    let lower = FreeDyckPath::new(lower).map_err(inconsistent)?;
    require_noncrossing_pair(&upper, &lower)?;
    Ok((upper, lower))
}

/// The bijection ζ from noncrossing pairs of length `2n` to noncrossing
/// partitions of `[2n+1]` with `n+1` blocks.
pub fn zeta(upper: &FreeDyckPath, lower: &FreeDyckPath) -> Result<SetPartition> {
    let vt = pair_to_vacillating(upper, lower)?;
    let partition = vacillating_to_partition(&vt)?.partition;
    let n = upper.half_length();
    if !is_noncrossing(&partition) || partition.num_blocks() != n + 1 || partition.m() != 2 * n + 1 {
        return Err(Error::Invariant(format!("ζ({upper},{lower}) = {partition} is out of range")));
    }
    Ok(partition)
}

fn require_zeta_image(sp: &SetPartition) -> Result<usize> {
    let m = sp.m();
    if m.is_multiple_of(2) {
        return Err(Error::Precondition(format!("ground set [{m}] has even size")));
    }
    if !is_noncrossing(sp) {
        return Err(Error::Precondition(format!("{sp} is crossing")));
    }
    if sp.num_blocks() != m.div_ceil(2) {
        return Err(Error::Precondition(format!(
            "{sp} has {} blocks, expected {}",
            sp.num_blocks(),
            m.div_ceil(2)
        )));
    }
    Ok((m - 1) / 2)
}

pub fn zeta_inverse(sp: &SetPartition) -> Result<(FreeDyckPath, FreeDyckPath)> {
    require_zeta_image(sp)?;
    vacillating_to_pair(&partition_to_vacillating(sp))
}

/// ζ computed directly from degrees: position `i` fixes the right-degree
/// of `i` (1 iff `p_i = U`) and the left-degree of `i + 1` (1 iff
/// `q_i = U`). Left half arcs are then closed from left to right, each
/// against the nearest still-open right half arc before it.
pub fn halfarc_zeta(upper: &FreeDyckPath, lower: &FreeDyckPath) -> Result<SetPartition> {
    require_noncrossing_pair(upper, lower)?;
    let m = upper.len() + 1;
    let mut right = vec![false; m + 1];
    let mut left = vec![false; m + 1];
    for (i, (&p, &q)) in upper.steps().iter().zip(lower.steps()).enumerate() {
        right[i + 1] = p == Step::U;
        left[i + 2] = q == Step::U;
    }
    let mut open: Vec<usize> = Vec::new();
    let mut arcs = Vec::new();
    for v in 1..=m {
        if left[v] {
            let start = open
                .pop()
                .ok_or_else(|| Error::Invariant(format!("left half arc at {v} has no partner")))?;
            arcs.push((start, v));
        }
        if right[v] {
            open.push(v);
        }
    }
    if !open.is_empty() {
        return Err(Error::Invariant(format!("unpaired right half arcs at {open:?}")));
    }
    let ad = ArcDiagram::new(m, arcs).map_err(|e| Error::Invariant(e.to_string()))?;
    partition_from_arcs(&ad).map_err(|e| Error::Invariant(e.to_string()))
}

/// Reads `(p_i, q_i)` back off the degrees `(r_i, l_{i+1})`.
pub fn halfarc_zeta_inverse(sp: &SetPartition) -> Result<(FreeDyckPath, FreeDyckPath)> {
    let n = require_zeta_image(sp)?;
    let ad = standard_representation(sp);
    let r = ad.right_degrees();
    let l = ad.left_degrees();
    let step = |bit: u8| if bit == 1 { Step::U } else { Step::D };
    let upper = (1..=2 * n).map(|i| step(r[i])).collect();
    let lower = (1..=2 * n).map(|i| step(l[i + 1])).collect();
    Ok((FreeDyckPath::new(upper)?, FreeDyckPath::new(lower)?))
}
