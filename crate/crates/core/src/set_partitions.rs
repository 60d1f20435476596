//! Set partitions of `[m]`, their standard representations, and the
//! crossing/nesting statistics `cr` and `ne`.
//!
//! The standard representation joins consecutive elements of each block
//! by an arc `(i, j)`, `i < j`. Every vertex then has left- and right-degree
//! at most one, and the arc set determines the partition.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of `[m]` kept in canonical order: blocks sorted by their
/// minimum, elements ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartitionJson", into = "PartitionJson")]
pub struct SetPartition {
    m: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct PartitionJson {
    m: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<PartitionJson> for SetPartition {
    type Error = Error;

    fn try_from(value: PartitionJson) -> Result<Self> {
        SetPartition::new(value.m, value.blocks)
    }
}

impl From<SetPartition> for PartitionJson {
    fn from(sp: SetPartition) -> Self {
        PartitionJson {
            m: sp.m,
            blocks: sp.blocks,
        }
    }
}

impl SetPartition {
    /// Builds a partition of `[m]` from blocks given in any order.
    pub fn new(m: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; m + 1];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in b {
                if x == 0 || x > m {
                    return Err(Error::InvalidPartition(format!("element {x} outside [1,{m}]")));
                }
                if seen[x] {
                    return Err(Error::InvalidPartition(format!("element {x} appears twice")));
                }
                seen[x] = true;
            }
        }
        if let Some(missing) = (1..=m).find(|&x| !seen[x]) {
            return Err(Error::InvalidPartition(format!("element {missing} is missing")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { m, blocks })
    }

    /// Builds the partition whose block labels are `rgs` (0-based labels,
    /// one per element, any labelling).
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut index_of: Vec<Option<usize>> = Vec::new();
        for (pos, &label) in labels.iter().enumerate() {
            if label >= index_of.len() {
                index_of.resize(label + 1, None);
            }
            let idx = *index_of[label].get_or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[idx].push(pos + 1);
        }
        SetPartition {
            m: labels.len(),
            blocks,
        }
    }

    /// All singletons of `[m]`.
    pub fn singletons(m: usize) -> Self {
        SetPartition {
            m,
            blocks: (1..=m).map(|x| vec![x]).collect(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Relabels `i` as `m + 1 - i`.
    pub fn reflect(&self) -> SetPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| self.m + 1 - x).collect())
            .collect();
        SetPartition::new(self.m, blocks).expect("reflection of a partition is a partition")
    }

    pub fn arcs(&self) -> ArcDiagram {
        standard_representation(self)
    }

    pub fn is_noncrossing(&self) -> bool {
        is_noncrossing(self)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.m >= 10 { "," } else { "" };
        let text = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep))
            .collect::<Vec<_>>()
            .join("-");
        f.write_str(&text)
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Parses `1358-29-46-7` (one digit per element) or the comma form
/// `1,3,5,8-2,9-4,6-7`. Text without commas that is not a valid digit-form
/// partition is retried with each block read as a single number, so
/// `1-2-...-10` parses as well.
pub fn parse_partition(text: &str) -> Result<SetPartition> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(SetPartition::singletons(0));
    }
    let parse_num = |s: &str| -> Result<usize> {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad element {s:?} in {text:?}")))
    };
    let build = |blocks: Vec<Vec<usize>>| -> Result<SetPartition> {
        let m = blocks.iter().map(Vec::len).sum();
        SetPartition::new(m, blocks).map_err(|e| Error::Parse(format!("{text:?}: {e}")))
    };
    let comma_form = || -> Result<SetPartition> {
        let blocks = text
            .split('-')
            .map(|b| b.split(',').map(parse_num).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        build(blocks)
    };
    if text.contains(',') {
        return comma_form();
    }
    let digit_blocks = text
        .split('-')
        .map(|b| {
            if b.is_empty() {
                return Err(Error::Parse(format!("empty block in {text:?}")));
            }
            b.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad character {c:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    build(digit_blocks).or_else(|digit_err| comma_form().map_err(|_| digit_err))
}

/// Arc set of a standard representation on vertices `[m]`, arcs sorted by
/// left endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArcDiagram {
    m: usize,
    arcs: Vec<(usize, usize)>,
}

impl ArcDiagram {
    /// Validates `1 <= i < j <= m` and that no vertex has left- or
    /// right-degree above one.
    pub fn new(m: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        arcs.sort_unstable();
        let mut right_deg = vec![0u8; m + 1];
        let mut left_deg = vec![0u8; m + 1];
        for &(i, j) in &arcs {
            if !(1 <= i && i < j && j <= m) {
                return Err(Error::InvalidArcs(format!("arc ({i},{j}) is not in 1 <= i < j <= {m}")));
            }
            right_deg[i] += 1;
            left_deg[j] += 1;
            if right_deg[i] > 1 {
                return Err(Error::InvalidArcs(format!("vertex {i} has right-degree 2")));
            }
            if left_deg[j] > 1 {
                return Err(Error::InvalidArcs(format!("vertex {j} has left-degree 2")));
            }
        }
        Ok(ArcDiagram { m, arcs })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// `l_i`: number of arcs ending at `i`, for `i` in `1..=m` (index 0 unused).
    pub fn left_degrees(&self) -> Vec<u8> {
        let mut l = vec![0; self.m + 1];
        for &(_, j) in &self.arcs {
            l[j] = 1;
        }
        l
    }

    /// `r_i`: number of arcs starting at `i`, for `i` in `1..=m` (index 0 unused).
    pub fn right_degrees(&self) -> Vec<u8> {
        let mut r = vec![0; self.m + 1];
        for &(i, _) in &self.arcs {
            r[i] = 1;
        }
        r
    }

    /// `m:(i,j)(i,j)...`, the arc list prefixed by the vertex count so that
    /// trailing isolated vertices survive a round trip.
    pub fn to_sized_text(&self) -> String {
        format!("{}:{}", self.m, self)
    }
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in &self.arcs {
            write!(f, "({i},{j})")?;
        }
        Ok(())
    }
}

/// Parses `(1,3)(3,5)...`, optionally prefixed by `m:`. Without a prefix,
/// `m` is the largest endpoint.
pub fn parse_arcs(text: &str) -> Result<ArcDiagram> {
    let text = text.trim();
    let (m, body) = match text.split_once(':') {
        Some((m, body)) => (
            Some(m.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex count {m:?}")))?),
            body.trim(),
        ),
        None => (None, text),
    };
    let mut arcs = Vec::new();
    let mut rest = body;
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| Error::Parse(format!("malformed arc list {text:?}")))?;
        let (pair, tail) = inner;
        let (a, b) = pair
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("malformed arc ({pair})")))?;
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad endpoint {s:?}")));
        arcs.push((num(a)?, num(b)?));
        rest = tail.trim_start();
    }
    let m = m.unwrap_or_else(|| arcs.iter().map(|&(_, j)| j).max().unwrap_or(0));
    ArcDiagram::new(m, arcs).map_err(|e| Error::Parse(e.to_string()))
}

pub fn standard_representation(sp: &SetPartition) -> ArcDiagram {
    let arcs = sp
        .blocks
        .iter()
        .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])))
        .collect::<Vec<_>>();
    ArcDiagram::new(sp.m, arcs).expect("consecutive block elements form a standard representation")
}

/// Inverse of [`standard_representation`].
pub fn partition_from_arcs(ad: &ArcDiagram) -> Result<SetPartition> {
    let mut next = vec![0usize; ad.m + 1];
    let mut has_pred = vec![false; ad.m + 1];
    for &(i, j) in &ad.arcs {
        next[i] = j;
        has_pred[j] = true;
    }
    let mut blocks = Vec::new();
    for start in 1..=ad.m {
        if has_pred[start] {
            continue;
        }
        let mut block = vec![start];
        let mut v = start;
        while next[v] != 0 {
            v = next[v];
            block.push(v);
        }
        blocks.push(block);
    }
    let sp = SetPartition::new(ad.m, blocks).map_err(|e| Error::InvalidArcs(e.to_string()))?;
    if standard_representation(&sp) != *ad {
        return Err(Error::InvalidArcs(format!("{ad} is not a standard representation")));
    }
    Ok(sp)
}

/// Which pattern a set of arcs should form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Pattern {
    Crossing,
    Nesting,
}

/// Largest `k` with a `k`-crossing `i_1<..<i_k<j_1<..<j_k`.
///
/// A crossing-free partition with at least one arc has `cr = 1`; an arcless
/// one has `cr = 0`. Same conventions for [`nesting_number`].
pub fn crossing_number(sp: &SetPartition) -> usize {
    sweep_statistic(&standard_representation(sp), Pattern::Crossing)
}

/// Largest `k` with a `k`-nesting `i_1<..<i_k<j_k<..<j_1`.
pub fn nesting_number(sp: &SetPartition) -> usize {
    sweep_statistic(&standard_representation(sp), Pattern::Nesting)
}

/// Every `k`-crossing (`k`-nesting) has all its left endpoints at or before
/// `t = i_k` and all right endpoints after it. Among arcs spanning a cut
/// `t`, sorted by left endpoint, the pattern is a strictly increasing
/// (decreasing) run of right endpoints, so the statistic is the best
/// longest-monotone-subsequence over all cuts.
fn sweep_statistic(ad: &ArcDiagram, pattern: Pattern) -> usize {
    let mut best = 0;
    for t in 1..ad.m {
        let rights: Vec<i64> = ad
            .arcs
            .iter()
            .filter(|&&(i, j)| i <= t && t < j)
            .map(|&(_, j)| match pattern {
                Pattern::Crossing => j as i64,
                Pattern::Nesting => -(j as i64),
            })
            .collect();
        best = best.max(longest_increasing(&rights));
    }
    best
}

fn longest_increasing(values: &[i64]) -> usize {
    let mut tails: Vec<i64> = Vec::new();
    for &v in values {
        let pos = tails.partition_point(|&t| t < v);
        if pos == tails.len() {
            tails.push(v);
        } else {
            tails[pos] = v;
        }
    }
    tails.len()
}

/// Reference `cr` by checking every subset of arcs against the definition.
/// Exponential in the number of arcs; meant for `m` up to about 16.
pub fn crossing_number_exhaustive(sp: &SetPartition) -> usize {
    exhaustive_statistic(&standard_representation(sp), Pattern::Crossing)
}

/// Reference `ne`; see [`crossing_number_exhaustive`].
pub fn nesting_number_exhaustive(sp: &SetPartition) -> usize {
    exhaustive_statistic(&standard_representation(sp), Pattern::Nesting)
}

fn exhaustive_statistic(ad: &ArcDiagram, pattern: Pattern) -> usize {
    let arcs = &ad.arcs;
    assert!(arcs.len() < 24, "exhaustive statistic limited to 23 arcs");
    let mut best = 0;
    for mask in 1u32..(1u32 << arcs.len()) {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let mut chosen: Vec<(usize, usize)> = (0..arcs.len())
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| arcs[b])
            .collect();
        chosen.sort_unstable();
        let lefts = chosen.iter().map(|a| a.0);
        let rights: Vec<usize> = match pattern {
            Pattern::Crossing => chosen.iter().map(|a| a.1).collect(),
            Pattern::Nesting => chosen.iter().rev().map(|a| a.1).collect(),
        };
        // i_1 < ... < i_k < (rights in the required order, strictly increasing)
        let sequence: Vec<usize> = lefts.chain(rights).collect();
        if sequence.windows(2).all(|w| w[0] < w[1]) {
            best = k;
        }
    }
    best
}

pub fn is_noncrossing(sp: &SetPartition) -> bool {
    let ad = standard_representation(sp);
    !ad.arcs.iter().any(|&(i1, j1)| {
        ad.arcs
            .iter()
            .any(|&(i2, j2)| i1 < i2 && i2 < j1 && j1 < j2)
    })
}

/// All partitions of `[m]` in restricted-growth-string order.
#[derive(Debug, Clone)]
pub struct Partitions {
    labels: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        let labels = self.labels.take()?;
        let sp = SetPartition::from_labels(&labels);
        self.labels = next_rgs(labels);
        Some(sp)
    }
}

fn next_rgs(mut labels: Vec<usize>) -> Option<Vec<usize>> {
    // prefix_max[i] = max(labels[..i]), with labels[0] pinned at 0
    let mut prefix_max = vec![0usize; labels.len()];
    for i in 1..labels.len() {
        prefix_max[i] = prefix_max[i - 1].max(labels[i - 1]);
    }
    let i = (1..labels.len()).rev().find(|&i| labels[i] <= prefix_max[i])?;
    labels[i] += 1;
    for x in &mut labels[i + 1..] {
        *x = 0;
    }
    Some(labels)
}

pub fn enumerate_partitions(m: usize) -> Partitions {
    Partitions {
        labels: Some(vec![0; m]),
    }
}

pub fn enumerate_noncrossing_with_blocks(m: usize, blocks: usize) -> impl Iterator<Item = SetPartition> {
    enumerate_partitions(m).filter(move |sp| sp.num_blocks() == blocks && is_noncrossing(sp))
}

/// Arcs of the partition as a set, for order-insensitive comparisons.
pub fn arc_set(sp: &SetPartition) -> BTreeSet<(usize, usize)> {
    standard_representation(sp).arcs.into_iter().collect()
}
