//! Free Dyck paths, Dyck paths and noncrossing tuples of free Dyck paths.
//!
//! A free Dyck path of half-length `n` is a word with `n` up steps and `n`
//! down steps. It is a Dyck path when no prefix has more downs than ups. Text
//! form is the `UD` word itself; `1`/`0` are accepted as aliases for `U`/`D`
//! on input. Positions are 1-based when they appear in the API.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
}

impl Step {
    /// The mirrored step: `U` becomes `D` and vice versa.
    pub fn flip(self) -> Step {
        match self {
            Step::U => Step::D,
            Step::D => Step::U,
        }
    }

    pub fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
        }
    }

    fn from_char(c: char) -> Option<Step> {
        match c {
            'U' | 'u' | '1' => Some(Step::U),
            'D' | 'd' | '0' => Some(Step::D),
            _ => None,
        }
    }

    fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
        }
    }
}

/// Lattice path from `(0,0)` to `(2n,0)` with steps `U=(1,1)` and `D=(1,-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PathJson", into = "PathJson")]
pub struct FreeDyckPath {
    steps: Vec<Step>,
}

#[derive(Serialize, Deserialize)]
struct PathJson {
    n: usize,
    steps: String,
}

impl TryFrom<PathJson> for FreeDyckPath {
    type Error = Error;

    fn try_from(value: PathJson) -> Result<Self> {
        let path = parse_path(&value.steps)?;
        if path.half_length() != value.n {
            return Err(Error::Parse(format!(
                "declared n={} but steps have half-length {}",
                value.n,
                path.half_length()
            )));
        }
        Ok(path)
    }
}

impl From<FreeDyckPath> for PathJson {
    fn from(p: FreeDyckPath) -> Self {
        PathJson {
            n: p.half_length(),
            steps: p.to_string(),
        }
    }
}

impl FreeDyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if !steps.len().is_multiple_of(2) {
            return Err(Error::InvalidPath(format!("odd length {}", steps.len())));
        }
        let ups = steps.iter().filter(|&&s| s == Step::U).count();
        if 2 * ups != steps.len() {
            return Err(Error::InvalidPath(format!(
                "unbalanced: {} U and {} D",
                ups,
                steps.len() - ups
            )));
        }
        Ok(FreeDyckPath { steps })
    }

    /// The empty path of half-length 0.
    pub fn empty() -> Self {
        FreeDyckPath { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn half_length(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights after each step; entry `j-1` is the height after the `j`-th
    /// step, so the last entry is always 0.
    pub fn height_profile(&self) -> Vec<i64> {
        self.steps
            .iter()
            .scan(0i64, |h, s| {
                *h += s.delta();
                Some(*h)
            })
            .collect()
    }

    pub fn is_dyck(&self) -> bool {
        self.height_profile().iter().all(|&h| h >= 0)
    }

    pub fn into_dyck(self) -> Result<DyckPath> {
        DyckPath::new(self)
    }
}

impl fmt::Display for FreeDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for FreeDyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_path(s)
    }
}

/// Parses a `UD` word (case-insensitive, `1`/`0` accepted for `U`/`D`).
///
/// Parse failures (bad characters, odd length, unbalanced counts) are all
/// reported as [`Error::Parse`].
pub fn parse_path(text: &str) -> Result<FreeDyckPath> {
    let text = text.trim();
    let steps = text
        .chars()
        .map(|c| Step::from_char(c).ok_or_else(|| Error::Parse(format!("illegal step character {c:?}"))))
        .collect::<Result<Vec<_>>>()?;
    FreeDyckPath::new(steps).map_err(|e| Error::Parse(format!("{text:?}: {e}")))
}

/// A free Dyck path that never goes below the axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FreeDyckPath", into = "FreeDyckPath")]
pub struct DyckPath(FreeDyckPath);

impl TryFrom<FreeDyckPath> for DyckPath {
    type Error = Error;

    fn try_from(p: FreeDyckPath) -> Result<Self> {
        DyckPath::new(p)
    }
}

impl From<DyckPath> for FreeDyckPath {
    fn from(p: DyckPath) -> Self {
        p.0
    }
}

impl DyckPath {
    pub fn new(path: FreeDyckPath) -> Result<Self> {
        if let Some(pos) = path.height_profile().iter().position(|&h| h < 0) {
            return Err(Error::InvalidPath(format!(
                "{path} goes below the axis at position {}",
                pos + 1
            )));
        }
        Ok(DyckPath(path))
    }

    pub fn as_free(&self) -> &FreeDyckPath {
        &self.0
    }

    pub fn steps(&self) -> &[Step] {
        self.0.steps()
    }

    pub fn half_length(&self) -> usize {
        self.0.half_length()
    }

    /// Number of up steps at odd (1-based) positions.
    pub fn odd_up_count(&self) -> usize {
        self.steps().iter().step_by(2).filter(|&&s| s == Step::U).count()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DyckPath::new(parse_path(s)?).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Checks that each path in `paths` stays weakly above the next one.
///
/// Fails if the paths do not all have the same length.
pub fn is_noncrossing_tuple(paths: &[FreeDyckPath]) -> Result<bool> {
    if let Some(first) = paths.first() {
        if let Some(bad) = paths.iter().find(|p| p.len() != first.len()) {
            return Err(Error::Precondition(format!(
                "mismatched path lengths {} and {}",
                first.len(),
                bad.len()
            )));
        }
    }
    let profiles: Vec<Vec<i64>> = paths.iter().map(FreeDyckPath::height_profile).collect();
    Ok(profiles
        .windows(2)
        .all(|w| w[0].iter().zip(&w[1]).all(|(a, b)| a >= b)))
}

/// `(P_1, ..., P_k)` with every `P_i` weakly above `P_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingPathTuple {
    paths: Vec<FreeDyckPath>,
}

impl NoncrossingPathTuple {
    pub fn new(paths: Vec<FreeDyckPath>) -> Result<Self> {
        if paths.is_empty() {
            return Err(Error::Precondition("a tuple needs at least one path".into()));
        }
        if !is_noncrossing_tuple(&paths)? {
            return Err(Error::Precondition(format!(
                "paths cross: {}",
                format_tuple(&paths)
            )));
        }
        Ok(NoncrossingPathTuple { paths })
    }

    pub fn paths(&self) -> &[FreeDyckPath] {
        &self.paths
    }

    pub fn into_paths(self) -> Vec<FreeDyckPath> {
        self.paths
    }

    pub fn k(&self) -> usize {
        self.paths.len()
    }

    pub fn half_length(&self) -> usize {
        self.paths[0].half_length()
    }
}

impl fmt::Display for NoncrossingPathTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_tuple(&self.paths))
    }
}

/// Joins paths with `,`.
pub fn format_tuple(paths: &[FreeDyckPath]) -> String {
    paths.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

/// Parses a `,`-separated list of `UD` words. Does not check noncrossing.
pub fn parse_tuple(text: &str) -> Result<Vec<FreeDyckPath>> {
    text.trim().split(',').map(parse_path).collect()
}

/// All free Dyck paths of half-length `n`, lexicographic with `U < D`.
#[derive(Debug, Clone)]
pub struct FreeDyckPaths {
    next: Option<Vec<Step>>,
}

impl Iterator for FreeDyckPaths {
    type Item = FreeDyckPath;

    fn next(&mut self) -> Option<FreeDyckPath> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(FreeDyckPath { steps: current })
    }
}

pub fn enumerate_free_dyck(n: usize) -> FreeDyckPaths {
    let mut first = vec![Step::U; n];
    first.extend(std::iter::repeat_n(Step::D, n));
    FreeDyckPaths { next: Some(first) }
}

/// All Dyck paths of half-length `n`, in the same order as
/// [`enumerate_free_dyck`].
pub fn enumerate_dyck(n: usize) -> impl Iterator<Item = DyckPath> {
    enumerate_free_dyck(n).filter_map(|p| DyckPath::new(p).ok())
}

/// Lexicographic successor of a multiset permutation; false when `v` was the
/// last one.
fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|x| *x > v[i]).expect("pivot has a larger element");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Every noncrossing `k`-tuple of free Dyck paths of half-length `n`, in
/// lexicographic order of `(P_1, ..., P_k)`.
pub fn enumerate_noncrossing_tuples(n: usize, k: usize) -> std::vec::IntoIter<NoncrossingPathTuple> {
    let all: Vec<FreeDyckPath> = enumerate_free_dyck(n).collect();
    let profiles: Vec<Vec<i64>> = all.iter().map(FreeDyckPath::height_profile).collect();
    let mut out = Vec::new();
    if k == 0 {
        return out.into_iter();
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    extend_tuples(&all, &profiles, k, &mut chosen, &mut out);
    out.into_iter()
}

fn extend_tuples(
    all: &[FreeDyckPath],
    profiles: &[Vec<i64>],
    k: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<NoncrossingPathTuple>,
) {
    if chosen.len() == k {
        out.push(NoncrossingPathTuple {
            paths: chosen.iter().map(|&i| all[i].clone()).collect(),
        });
        return;
    }
    for idx in 0..all.len() {
        let fits = match chosen.last() {
            Some(&above) => profiles[above].iter().zip(&profiles[idx]).all(|(a, b)| a >= b),
            None => true,
        };
        if fits {
            chosen.push(idx);
            extend_tuples(all, profiles, k, chosen, out);
            chosen.pop();
        }
    }
}
