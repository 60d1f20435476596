//! Shapes, standard Young tableaux, row insertion, and the bijection between
//! set partitions of `[n]` and vacillating tableaux of length `2n`.
//!
//! A vacillating tableau of length `2n` is a sequence of `2n + 1` shapes
//! `λ^0, ..., λ^{2n}` starting and ending empty, where odd steps either keep
//! the shape or delete one square and even steps either keep it or add one.
//!
//! Going from a partition to shapes runs right to left: at step `k`
//! (from `n` down to 1) the entry `k` is deleted if present, then the left
//! endpoint `i` of the arc `(i, k)`, if any, is row inserted. Going back runs
//! left to right: an added square at step `2k` receives `k`, and a deleted
//! square at step `2k - 1` is reverse bumped out, ejecting `j` and recording
//! the arc `(j, k)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set_partitions::{partition_from_arcs, standard_representation, ArcDiagram, SetPartition};

/// Integer partition, parts weakly decreasing and positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape(Vec<usize>);

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Shape::new(parts)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Self {
        s.0
    }
}

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidTableau(format!("zero part in shape {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Shape(parts))
    }

    pub fn empty() -> Self {
        Shape(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// Length of the first row, which is also the number of columns.
    pub fn num_cols(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// The cell of `bigger` not in `self`, when `bigger` is `self` plus one
    /// square.
    pub fn added_cell(&self, bigger: &Shape) -> Option<Cell> {
        if bigger.size() != self.size() + 1 || bigger.num_rows() > self.num_rows() + 1 {
            return None;
        }
        let mut diff = None;
        for (r, &part) in bigger.0.iter().enumerate() {
            let old = self.0.get(r).copied().unwrap_or(0);
            if part == old + 1 {
                if diff.is_some() {
                    return None;
                }
                diff = Some(Cell { row: r + 1, col: part });
            } else if part != old {
                return None;
            }
        }
        diff
    }

    /// Condensed text (`311`) when every part is a single digit,
    /// otherwise parts joined by `.`; `e` for the empty shape.
    pub fn to_compact(&self) -> String {
        if self.0.is_empty() {
            "e".into()
        } else if self.0.iter().all(|&p| p <= 9) {
            self.0.iter().map(|p| p.to_string()).collect()
        } else {
            self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(".")
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let text = self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        f.write_str(&text)
    }
}

impl FromStr for Shape {
    type Err = Error;

    /// Accepts `3,1,1`, `3.1.1`, the condensed `311`, and `e`/`∅`/empty for
    /// the empty shape.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" || s == "∅" {
            return Ok(Shape::empty());
        }
        let parts: Vec<usize> = if s.contains(',') || s.contains('.') {
            s.split([',', '.'])
                .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {p:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad shape character {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Shape::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A cell position, 1-based `(row, col)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// Standard Young tableau on an arbitrary set of distinct positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct YoungTableau {
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = YoungTableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        YoungTableau::default()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn contains(&self, x: usize) -> bool {
        self.rows.iter().any(|r| r.contains(&x))
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Checks shape, row and column strictness, and distinctness.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return bad(format!("row {} is empty", r + 1));
            }
            if row.contains(&0) {
                return bad("entries must be positive".into());
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("row {} is not strictly increasing", r + 1));
            }
            if r > 0 {
                let above = &self.rows[r - 1];
                if row.len() > above.len() {
                    return bad(format!("row {} is longer than row {}", r + 1, r));
                }
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    return bad(format!("column strictness fails between rows {} and {}", r, r + 1));
                }
            }
        }
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return bad("repeated entry".into());
        }
        Ok(())
    }

    /// RSK row insertion of `x`; also returns the cell that was added.
    pub fn row_insert_with_cell(&self, x: usize) -> Result<(YoungTableau, Cell)> {
        if x == 0 {
            return Err(Error::InvalidTableau("cannot insert 0".into()));
        }
        if self.contains(x) {
            return Err(Error::InvalidTableau(format!("{x} is already in the tableau")));
        }
        let mut rows = self.rows.clone();
        let mut bumping = x;
        for (r, row) in rows.iter_mut().enumerate() {
            let pos = row.partition_point(|&y| y < bumping);
            if pos == row.len() {
                row.push(bumping);
                return Ok((YoungTableau { rows }, Cell::new(r + 1, pos + 1)));
            }
            bumping = std::mem::replace(&mut row[pos], bumping);
        }
        rows.push(vec![bumping]);
        let cell = Cell::new(rows.len(), 1);
        Ok((YoungTableau { rows }, cell))
    }

    pub fn row_insert(&self, x: usize) -> Result<YoungTableau> {
        self.row_insert_with_cell(x).map(|(t, _)| t)
    }

    /// Undoes a row insertion that ended at `corner`: the corner entry is
    /// bumped upward, at each row replacing the largest entry smaller than
    /// it, and the entry pushed out of the first row is returned.
    pub fn inverse_row_insert(&self, corner: Cell) -> Result<(YoungTableau, usize)> {
        let Cell { row, col } = corner;
        let removable = row >= 1
            && row <= self.rows.len()
            && col == self.rows[row - 1].len()
            && self.rows.get(row).is_none_or(|below| below.len() < col);
        if !removable {
            return Err(Error::InvalidTableau(format!(
                "({row},{col}) is not a removable corner of shape {}",
                self.shape()
            )));
        }
        let mut rows = self.rows.clone();
        let mut bumping = rows[row - 1].pop().expect("corner row is nonempty");
        if rows[row - 1].is_empty() {
            rows.pop();
        }
        for r in (0..row - 1).rev() {
            let current = &mut rows[r];
            let pos = current.partition_point(|&y| y < bumping);
            // pos >= 1: column strictness guarantees a smaller entry above
            bumping = std::mem::replace(&mut current[pos - 1], bumping);
        }
        Ok((YoungTableau { rows }, bumping))
    }

    /// Adds `x` at the outer corner `cell`.
    fn place(&self, cell: Cell, x: usize) -> YoungTableau {
        let mut rows = self.rows.clone();
        if cell.row > rows.len() {
            rows.push(Vec::new());
        }
        rows[cell.row - 1].push(x);
        YoungTableau { rows }
    }

    /// Removes `x`, which must occupy a corner.
    fn remove_corner_entry(&self, x: usize) -> Result<YoungTableau> {
        let r = self
            .rows
            .iter()
            .position(|row| row.last() == Some(&x))
            .ok_or_else(|| Error::Invariant(format!("{x} does not end a row")))?;
        let mut rows = self.rows.clone();
        rows[r].pop();
        if rows[r].is_empty() {
            rows.remove(r);
        }
        let t = YoungTableau { rows };
        t.validate().map_err(|e| Error::Invariant(e.to_string()))?;
        Ok(t)
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("e");
        }
        let text = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" / ");
        f.write_str(&text)
    }
}

/// Sequence of `2n + 1` shapes obeying the vacillating rules, starting and
/// ending at the empty shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Shape>", into = "Vec<Shape>")]
pub struct VacillatingTableau {
    shapes: Vec<Shape>,
}

impl TryFrom<Vec<Shape>> for VacillatingTableau {
    type Error = Error;

    fn try_from(shapes: Vec<Shape>) -> Result<Self> {
        VacillatingTableau::new(shapes)
    }
}

impl From<VacillatingTableau> for Vec<Shape> {
    fn from(vt: VacillatingTableau) -> Self {
        vt.shapes
    }
}

/// What happened between two consecutive shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transition {
    Keep,
    Add(Cell),
    Delete(Cell),
}

fn transition(from: &Shape, to: &Shape) -> Option<Transition> {
    if from == to {
        Some(Transition::Keep)
    } else if let Some(c) = from.added_cell(to) {
        Some(Transition::Add(c))
    } else {
        to.added_cell(from).map(Transition::Delete)
    }
}

/// Checks the vacillating rules, including empty first and last shapes.
/// An even number of shapes is an error rather than `false`.
pub fn is_vacillating(shapes: &[Shape]) -> Result<bool> {
    if shapes.len().is_multiple_of(2) {
        return Err(Error::InvalidVacillating(format!(
            "expected 2n+1 shapes, got {}",
            shapes.len()
        )));
    }
    if !shapes[0].is_empty() || !shapes[shapes.len() - 1].is_empty() {
        return Ok(false);
    }
    Ok(shapes.windows(2).enumerate().all(|(idx, w)| {
        let step = idx + 1;
        match transition(&w[0], &w[1]) {
            Some(Transition::Keep) => true,
            Some(Transition::Add(_)) => step % 2 == 0,
            Some(Transition::Delete(_)) => step % 2 == 1,
            None => false,
        }
    }))
}

impl VacillatingTableau {
    pub fn new(shapes: Vec<Shape>) -> Result<Self> {
        if !is_vacillating(&shapes)? {
            return Err(Error::InvalidVacillating(format!(
                "{} breaks the vacillating rules",
                format_shapes(&shapes)
            )));
        }
        Ok(VacillatingTableau { shapes })
    }

    pub fn shapes(&self) -> &[Shape] {
        &self.shapes
    }

    /// `n` for a tableau of length `2n`.
    pub fn half_length(&self) -> usize {
        (self.shapes.len() - 1) / 2
    }

    /// Transition into shape `i`, for `i` in `1..=2n`.
    pub fn transition(&self, i: usize) -> Transition {
        transition(&self.shapes[i - 1], &self.shapes[i]).expect("validated on construction")
    }

    pub fn max_rows(&self) -> usize {
        self.shapes.iter().map(Shape::num_rows).max().unwrap_or(0)
    }

    pub fn max_cols(&self) -> usize {
        self.shapes.iter().map(Shape::num_cols).max().unwrap_or(0)
    }
}

fn format_shapes(shapes: &[Shape]) -> String {
    format!(
        "({})",
        shapes.iter().map(Shape::to_compact).collect::<Vec<_>>().join(",")
    )
}

impl fmt::Display for VacillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_shapes(&self.shapes))
    }
}

impl FromStr for VacillatingTableau {
    type Err = Error;

    /// Parses `(e,e,1,1,11,...)`; shapes in condensed form.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("vacillating tableau must be parenthesized: {s:?}")))?;
        let shapes = inner
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(Error::Parse(format!("empty shape token in {s:?}")));
                }
                tok.parse::<Shape>()
            })
            .collect::<Result<Vec<_>>>()?;
        VacillatingTableau::new(shapes).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// The tableaux `T_0, ..., T_{2n}` produced from a partition of `[n]`.
pub fn partition_to_tableaux(sp: &SetPartition) -> Result<Vec<YoungTableau>> {
    let n = sp.m();
    let mut left_of = vec![0usize; n + 1];
    for &(i, k) in standard_representation(sp).arcs() {
        left_of[k] = i;
    }
    let mut seq = vec![YoungTableau::empty(); 2 * n + 1];
    for k in (1..=n).rev() {
        let t = &seq[2 * k];
        let odd = if t.contains(k) {
            t.remove_corner_entry(k)?
        } else {
            t.clone()
        };
        let even = match left_of[k] {
            0 => odd.clone(),
            i => odd.row_insert(i)?,
        };
        debug_assert!(even.validate().is_ok());
        seq[2 * k - 1] = odd;
        seq[2 * k - 2] = even;
    }
    if !seq[0].is_empty() {
        return Err(Error::Invariant(format!("T_0 = {} is not empty", seq[0])));
    }
    Ok(seq)
}

pub fn partition_to_vacillating(sp: &SetPartition) -> VacillatingTableau {
    let seq = partition_to_tableaux(sp).expect("every partition has a vacillating tableau");
    let shapes = seq.iter().map(YoungTableau::shape).collect();
    VacillatingTableau::new(shapes).expect("backward rules yield a vacillating tableau")
}

/// Result of reading a vacillating tableau back into a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodedPartition {
    pub partition: SetPartition,
    pub arcs: ArcDiagram,
    /// Arcs in the order they were recorded (increasing right endpoint).
    pub recorded: Vec<(usize, usize)>,
    /// `T_0, ..., T_{2n}`.
    pub tableaux: Vec<YoungTableau>,
}

pub fn vacillating_to_partition(vt: &VacillatingTableau) -> Result<DecodedPartition> {
    let n = vt.half_length();
    let mut tableaux = Vec::with_capacity(2 * n + 1);
    let mut current = YoungTableau::empty();
    tableaux.push(current.clone());
    let mut recorded = Vec::new();
    for i in 1..=2 * n {
        current = match vt.transition(i) {
            Transition::Keep => current,
            Transition::Add(cell) => {
                let k = i / 2;
                current.place(cell, k)
            }
            Transition::Delete(cell) => {
                let k = i.div_ceil(2);
                if current.is_empty() {
                    return Err(Error::Invariant(format!("step {i} deletes from an empty tableau")));
                }
                let (t, j) = current.inverse_row_insert(cell)?;
                recorded.push((j, k));
                t
            }
        };
        current.validate().map_err(|e| Error::Invariant(e.to_string()))?;
        tableaux.push(current.clone());
    }
    let arcs = ArcDiagram::new(n, recorded.iter().copied())?;
    let partition = partition_from_arcs(&arcs)?;
    Ok(DecodedPartition {
        partition,
        arcs,
        recorded,
        tableaux,
    })
}
