use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::paths::{FreeDyckPath, NoncrossingPathTuple, Step};

/// Plane partition stored without zero entries: row `r` holds the positive
/// entries `δ_{r,1} >= δ_{r,2} >= ...`, and rows are weakly shrinking.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u64>>", into = "Vec<Vec<u64>>")]
pub struct PlanePartition {
    rows: Vec<Vec<u64>>,
}

impl TryFrom<Vec<Vec<u64>>> for PlanePartition {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u64>>) -> Result<Self> {
        PlanePartition::new(rows)
    }
}

impl From<PlanePartition> for Vec<Vec<u64>> {
    fn from(pp: PlanePartition) -> Self {
        pp.rows
    }
}

impl PlanePartition {
    /// Validates a matrix (missing entries count as 0) and trims zeros.
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidPlanePartition(format!("row {} increases", r + 1)));
            }
            if r > 0 {
                let above = &rows[r - 1];
                let increases = row
                    .iter()
                    .enumerate()
                    .any(|(c, &x)| x > above.get(c).copied().unwrap_or(0));
                if increases {
                    return Err(Error::InvalidPlanePartition(format!("column increases at row {}", r + 1)));
                }
            }
        }
        let rows = rows
            .into_iter()
            .map(|row| row.into_iter().take_while(|&x| x > 0).collect::<Vec<_>>())
            .take_while(|row| !row.is_empty())
            .collect();
        Ok(PlanePartition { rows })
    }

    pub fn empty() -> Self {
        PlanePartition::default()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// `δ_{r,c}` with 1-based indices; 0 outside the support.
    pub fn entry(&self, r: usize, c: usize) -> u64 {
        self.rows
            .get(r.wrapping_sub(1))
            .and_then(|row| row.get(c.wrapping_sub(1)))
            .copied()
            .unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn max_part(&self) -> u64 {
        self.rows.first().and_then(|r| r.first()).copied().unwrap_or(0)
    }

    /// `|δ|`, the sum of all entries.
    pub fn weight(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }

    /// Membership in `B(rows, cols, max_part)`.
    pub fn fits_box(&self, rows: usize, cols: usize, max_part: u64) -> bool {
        self.num_rows() <= rows && self.num_cols() <= cols && self.max_part() <= max_part
    }
}

impl fmt::Display for PlanePartition {
    /// Rows joined by `;`, entries by `,`; the empty plane partition is `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("e");
        }
        let text = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";");
        f.write_str(&text)
    }
}

impl FromStr for PlanePartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_plane_partition(s)
    }
}

/// Parses `2,1;1`; `e`, `∅` and the empty string denote the empty plane
/// partition. Explicit zeros are allowed and trimmed.
pub fn parse_plane_partition(text: &str) -> Result<PlanePartition> {
    let text = text.trim();
    if text.is_empty() || text == "e" || text == "∅" {
        return Ok(PlanePartition::empty());
    }
    let rows = text
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|x| x.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad entry {x:?}"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    PlanePartition::new(rows).map_err(|e| Error::Parse(e.to_string()))
}

/// `μ(P)_r`: number of up steps after the `r`-th down step, `r = 1..=n`.
/// Weakly decreasing; `U^n D^n` gives all zeros and `D^n U^n` gives all `n`.
fn diagram_of(path: &FreeDyckPath) -> Vec<usize> {
    let mut ups_after = path.half_length();
    let mut mu = Vec::with_capacity(path.half_length());
    for s in path.steps() {
        match s {
            Step::U => ups_after -= 1,
            Step::D => mu.push(ups_after),
        }
    }
    mu
}

/// Inverse of [`diagram_of`] for a diagram inside the `n x n` square.
fn path_of(mu: &[usize], n: usize) -> FreeDyckPath {
    let mut steps = Vec::with_capacity(2 * n);
    let mut ups_before = 0;
    for &part in mu {
        let target = n - part;
        steps.extend(std::iter::repeat_n(Step::U, target - ups_before));
        ups_before = target;
        steps.push(Step::D);
    }
    steps.extend(std::iter::repeat_n(Step::U, n - ups_before));
    FreeDyckPath::new(steps).expect("n ups and n downs")
}

/// Stacks the diagrams `μ(P_1) ⊆ ... ⊆ μ(P_k)`: the entry at cell `(r, c)`
/// counts the paths whose diagram contains the cell, i.e. that pass above
/// it. The result lies in `B(n, n, k)`.
pub fn tuple_to_plane_partition(tuple: &NoncrossingPathTuple) -> PlanePartition {
    let n = tuple.half_length();
    let mut rows = vec![vec![0u64; n]; n];
    for path in tuple.paths() {
        for (r, &part) in diagram_of(path).iter().enumerate() {
            for cell in &mut rows[r][..part] {
                *cell += 1;
            }
        }
    }
    PlanePartition::new(rows).expect("nested diagrams stack to a plane partition")
}

/// Inverse of [`tuple_to_plane_partition`]: `μ(P_j)` is the set of cells
/// with entry at least `k + 1 - j`.
pub fn plane_partition_to_tuple(pp: &PlanePartition, n: usize, k: usize) -> Result<NoncrossingPathTuple> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    if !pp.fits_box(n, n, k as u64) {
        return Err(Error::Precondition(format!("{pp} is not in B({n},{n},{k})")));
    }
    let paths = (1..=k)
        .map(|j| {
            let threshold = (k + 1 - j) as u64;
            let mu: Vec<usize> = (1..=n)
                .map(|r| (1..=n).take_while(|&c| pp.entry(r, c) >= threshold).count())
                .collect();
            path_of(&mu, n)
        })
        .collect();
    NoncrossingPathTuple::new(paths).map_err(|e| Error::Invariant(e.to_string()))
}

/// Every plane partition in `B(rows, cols, max_part)`, filled row by row.
pub fn enumerate_box_plane_partitions(rows: usize, cols: usize, max_part: u64) -> Vec<PlanePartition> {
    let mut grid = vec![vec![0u64; cols]; rows];
    let mut out = Vec::new();
    fill(&mut grid, 0, rows, cols, max_part, &mut out);
    out
}

fn fill(grid: &mut Vec<Vec<u64>>, idx: usize, rows: usize, cols: usize, max_part: u64, out: &mut Vec<PlanePartition>) {
    if idx == rows * cols {
        out.push(PlanePartition::new(grid.clone()).expect("filled weakly decreasing"));
        return;
    }
    let (r, c) = (idx / cols, idx % cols);
    let mut bound = max_part;
    if r > 0 {
        bound = bound.min(grid[r - 1][c]);
    }
    if c > 0 {
        bound = bound.min(grid[r][c - 1]);
    }
    for v in 0..=bound {
        grid[r][c] = v;
        fill(grid, idx + 1, rows, cols, max_part, out);
    }
    grid[r][c] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enumerate_noncrossing_tuples, parse_tuple};

    fn tuple(s: &str) -> NoncrossingPathTuple {
        NoncrossingPathTuple::new(parse_tuple(s).unwrap()).unwrap()
    }

    #[test]
    fn forward_examples() {
        assert_eq!(tuple_to_plane_partition(&tuple("UUDD,UUDD")), PlanePartition::empty());
        assert_eq!(tuple_to_plane_partition(&tuple("DDUU,DDUU")).to_string(), "2,2;2,2");
        assert_eq!(tuple_to_plane_partition(&tuple("UDUD,DUDU")).to_string(), "2,1;1");
    }

    #[test]
    fn backward_examples() {
        let pp = |s: &str| parse_plane_partition(s).unwrap();
        assert_eq!(plane_partition_to_tuple(&pp("e"), 2, 2).unwrap(), tuple("UUDD,UUDD"));
        assert_eq!(plane_partition_to_tuple(&pp("2,2;2,2"), 2, 2).unwrap(), tuple("DDUU,DDUU"));
        assert_eq!(plane_partition_to_tuple(&pp("2,1;1"), 2, 2).unwrap(), tuple("UDUD,DUDU"));
        assert!(plane_partition_to_tuple(&pp("3"), 2, 2).is_err());
        assert!(plane_partition_to_tuple(&pp("1,1,1"), 2, 2).is_err());
        assert!(plane_partition_to_tuple(&pp("1;1;1"), 2, 2).is_err());
    }

    #[test]
    fn parsing_and_validation() {
        assert_eq!(parse_plane_partition("2,1,0;1,0;0").unwrap().to_string(), "2,1;1");
        assert!(parse_plane_partition("1,2").is_err());
        assert!(parse_plane_partition("1;2").is_err());
        assert!(parse_plane_partition("1,x").is_err());
        let pp = parse_plane_partition("3,2;2").unwrap();
        assert_eq!((pp.weight(), pp.num_rows(), pp.num_cols(), pp.max_part()), (7, 2, 2, 3));
        assert_eq!(serde_json::to_string(&pp).unwrap(), "[[3,2],[2]]");
        assert!(serde_json::from_str::<PlanePartition>("[[1],[2]]").is_err());
    }

    #[test]
    fn diagrams_round_trip() {
        for n in 0..=4 {
            for path in crate::paths::enumerate_free_dyck(n) {
                assert_eq!(path_of(&diagram_of(&path), n), path);
            }
        }
    }

    #[test]
    fn round_trip_and_box_membership() {
        for n in 0..=3 {
            for k in 1..=3 {
                let mut images = Vec::new();
                for t in enumerate_noncrossing_tuples(n, k) {
                    let pp = tuple_to_plane_partition(&t);
                    assert!(pp.fits_box(n, n, k as u64), "{pp}");
                    assert_eq!(plane_partition_to_tuple(&pp, n, k).unwrap(), t);
                    images.push(pp);
                }
                let mut boxed = enumerate_box_plane_partitions(n, n, k as u64);
                images.sort();
                boxed.sort();
                assert_eq!(images, boxed, "n={n} k={k}");
            }
        }
    }
}
