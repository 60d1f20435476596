//! Exhaustive self-check suites over every bijection and formula, used by
//! `ncpaths verify`. Each suite stops at the first counterexample.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::bijections::{
    halfarc_zeta, halfarc_zeta_inverse, labelle_merge, labelle_split, plane_partition_to_tuple,
    tuple_to_plane_partition, zeta, zeta_inverse,
};
use crate::enumeration::{
    box_generating_function_brute, box_q_polynomial, brute_count, count_tuples, f_n_2, narayana, BruteKind,
    Ceilings, QPolynomial,
};
use crate::error::{Error, Result};
use crate::paths::{enumerate_dyck, enumerate_noncrossing_tuples, NoncrossingPathTuple};
use crate::set_partitions::{
    crossing_number, crossing_number_exhaustive, enumerate_partitions, is_noncrossing, nesting_number,
    nesting_number_exhaustive,
};
use crate::tableaux::{is_vacillating, partition_to_vacillating, vacillating_to_partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Zeta,
    Halfarc,
    Labelle,
    Vt,
    Crne,
    Planepp,
    Counts,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Zeta,
        Suite::Halfarc,
        Suite::Labelle,
        Suite::Vt,
        Suite::Crne,
        Suite::Planepp,
        Suite::Counts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Zeta => "zeta",
            Suite::Halfarc => "halfarc",
            Suite::Labelle => "labelle",
            Suite::Vt => "vt",
            Suite::Crne => "crne",
            Suite::Planepp => "planepp",
            Suite::Counts => "counts",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub checks: u64,
    /// First counterexample, if any.
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: ok ({} checks, max-n {})", self.suite, self.checks, self.max_n),
            Some(msg) => write!(f, "{}: FAILED after {} checks: {msg}", self.suite, self.checks),
        }
    }
}

struct Checker {
    checks: u64,
}

/// Short-circuits a suite on the first failed check.
struct Failed(String);

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        Failed(e.to_string())
    }
}

impl Checker {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) -> std::result::Result<(), Failed> {
        self.checks += 1;
        if ok {
            Ok(())
        } else {
            Err(Failed(describe()))
        }
    }
}

type Outcome = std::result::Result<(), Failed>;

fn require(what: &str, value: usize, ceiling: usize) -> Result<()> {
    if value > ceiling {
        return Err(Error::Ceiling(format!("{what} = {value} exceeds the limit {ceiling}")));
    }
    Ok(())
}

pub fn run_suite(suite: Suite, max_n: usize, ceilings: &Ceilings) -> Result<SuiteReport> {
    match suite {
        Suite::Zeta | Suite::Halfarc => require("n", max_n, ceilings.pairs_n)?,
        Suite::Labelle => {
            require("n", max_n, ceilings.pairs_n)?;
            require("dyck half-length", 2 * max_n + 1, ceilings.dyck_n)?;
        }
        Suite::Vt | Suite::Crne => require("m", max_n, ceilings.partitions_m)?,
        Suite::Planepp => require("n", max_n, ceilings.plane)?,
        Suite::Counts => {
            require("n", max_n, ceilings.pairs_n)?;
            require("m", 2 * max_n + 1, ceilings.partitions_m)?;
            require("dyck half-length", 2 * max_n + 1, ceilings.dyck_n)?;
        }
    }
    let mut checker = Checker { checks: 0 };
    let outcome = match suite {
        Suite::Zeta => zeta_suite(&mut checker, max_n),
        Suite::Halfarc => halfarc_suite(&mut checker, max_n),
        Suite::Labelle => labelle_suite(&mut checker, max_n),
        Suite::Vt => vt_suite(&mut checker, max_n),
        Suite::Crne => crne_suite(&mut checker, max_n),
        Suite::Planepp => planepp_suite(&mut checker, max_n, ceilings),
        Suite::Counts => counts_suite(&mut checker, max_n, ceilings),
    };
    Ok(SuiteReport {
        suite,
        max_n,
        checks: checker.checks,
        failure: outcome.err().map(|Failed(msg)| msg),
    })
}

fn pair(t: &NoncrossingPathTuple) -> (&crate::paths::FreeDyckPath, &crate::paths::FreeDyckPath) {
    (&t.paths()[0], &t.paths()[1])
}

fn zeta_suite(c: &mut Checker, max_n: usize) -> Outcome {
    for n in 0..=max_n {
        let mut images = HashSet::new();
        for t in enumerate_noncrossing_tuples(n, 2) {
            let (a, b) = pair(&t);
            let z = zeta(a, b)?;
            c.check(is_noncrossing(&z) && z.num_blocks() == n + 1 && z.m() == 2 * n + 1, || {
                format!("ζ({t}) = {z} is not a noncrossing partition of [{}] with {} blocks", 2 * n + 1, n + 1)
            })?;
            let back = zeta_inverse(&z)?;
            c.check(back == (a.clone(), b.clone()), || format!("ζ⁻¹(ζ({t})) = {},{}", back.0, back.1))?;
            let fresh = images.insert(z.clone());
            c.check(fresh, || format!("ζ({t}) = {z} repeats an earlier image"))?;
        }
    }
    Ok(())
}

fn halfarc_suite(c: &mut Checker, max_n: usize) -> Outcome {
    for n in 0..=max_n {
        for t in enumerate_noncrossing_tuples(n, 2) {
            let (a, b) = pair(&t);
            let z = zeta(a, b)?;
            let h = halfarc_zeta(a, b)?;
            c.check(z == h, || format!("pair {t}: ζ gives {z}, half arcs give {h}"))?;
            let back = halfarc_zeta_inverse(&h)?;
            c.check(back == (a.clone(), b.clone()), || format!("half-arc inverse of {h} is {},{}", back.0, back.1))?;
        }
    }
    Ok(())
}

fn labelle_suite(c: &mut Checker, max_n: usize) -> Outcome {
    for n in 0..=max_n {
        let mut image = HashSet::new();
        for t in enumerate_noncrossing_tuples(n, 2) {
            let (a, b) = pair(&t);
            let d = labelle_merge(a, b)?;
            c.check(d.odd_up_count() == n + 1, || format!("merge({t}) = {d} has wrong odd-up count"))?;
            let back = labelle_split(d.as_free())?;
            c.check(back == (a.clone(), b.clone()), || format!("split(merge({t})) = {},{}", back.0, back.1))?;
            image.insert(d);
        }
        for d in enumerate_dyck(2 * n + 1).filter(|d| d.odd_up_count() == n + 1) {
            c.check(image.contains(&d), || format!("{d} is not the merge of any pair"))?;
        }
    }
    Ok(())
}

fn vt_suite(c: &mut Checker, max_m: usize) -> Outcome {
    for m in 0..=max_m {
        for sp in enumerate_partitions(m) {
            let vt = partition_to_vacillating(&sp);
            c.check(is_vacillating(vt.shapes())?, || format!("{sp} ↦ {vt} is not vacillating"))?;
            let back = vacillating_to_partition(&vt)?.partition;
            c.check(back == sp, || format!("{sp} ↦ {vt} ↦ {back}"))?;
        }
    }
    Ok(())
}

fn crne_suite(c: &mut Checker, max_m: usize) -> Outcome {
    for m in 0..=max_m {
        for sp in enumerate_partitions(m) {
            let vt = partition_to_vacillating(&sp);
            let (cr, ne) = (crossing_number_exhaustive(&sp), nesting_number_exhaustive(&sp));
            c.check(cr == vt.max_rows(), || format!("{sp}: cr = {cr} but {vt} has {} rows", vt.max_rows()))?;
            c.check(ne == vt.max_cols(), || format!("{sp}: ne = {ne} but {vt} has {} columns", vt.max_cols()))?;
            c.check(crossing_number(&sp) == cr && nesting_number(&sp) == ne, || {
                format!("{sp}: sweep statistics disagree with the exhaustive ones")
            })?;
        }
    }
    Ok(())
}

fn planepp_suite(c: &mut Checker, max_n: usize, ceilings: &Ceilings) -> Outcome {
    for n in 0..=max_n {
        for k in 1..=max_n.max(1) {
            let mut coeffs: Vec<BigInt> = Vec::new();
            for t in enumerate_noncrossing_tuples(n, k) {
                let pp = tuple_to_plane_partition(&t);
                c.check(pp.fits_box(n, n, k as u64), || format!("{t} ↦ {pp} leaves B({n},{n},{k})"))?;
                let back = plane_partition_to_tuple(&pp, n, k)?;
                c.check(back == t, || format!("{t} ↦ {pp} ↦ {back}"))?;
                let w = pp.weight() as usize;
                if coeffs.len() <= w {
                    coeffs.resize(w + 1, BigInt::from(0));
                }
                coeffs[w] += 1;
            }
            let weights = QPolynomial::new(coeffs);
            let product = box_q_polynomial(n, k)?;
            c.check(weights == product, || {
                format!("B({n},{n},{k}): tuple weights {weights} differ from the box product {product}")
            })?;
            if k <= ceilings.plane {
                let brute = box_generating_function_brute(n, n, k, ceilings)?;
                c.check(brute == product, || {
                    format!("B({n},{n},{k}): enumeration {brute} differs from the box product {product}")
                })?;
            }
        }
    }
    Ok(())
}

fn counts_suite(c: &mut Checker, max_n: usize, ceilings: &Ceilings) -> Outcome {
    for n in 1..=max_n {
        let values: [(&str, BigUint); 5] = [
            ("brute nc-pairs", brute_count(BruteKind::NcPairs { n }, ceilings)?),
            ("F(n,2)", f_n_2(n)),
            (
                "brute nc-partitions",
                brute_count(BruteKind::NcPartitions { m: 2 * n + 1, blocks: n + 1 }, ceilings)?,
            ),
            (
                "brute odd-up-dyck",
                brute_count(BruteKind::OddUpDyck { length: 4 * n + 2, ups: n + 1 }, ceilings)?,
            ),
            ("narayana", narayana(2 * n + 1, n + 1)?),
        ];
        let same = values.iter().all(|(_, v)| *v == values[0].1);
        c.check(same, || {
            let listed: Vec<String> = values.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!("n={n}: {}", listed.join(" "))
        })?;
    }
    for n in 0..=max_n {
        for k in 1..=max_n.max(1) {
            let poly = box_q_polynomial(n, k)?;
            let count = BigInt::from(count_tuples(n, k));
            c.check(poly.eval_at_one() == count, || format!("B({n},{n},{k}) at q=1 is not F({n},{k}) = {count}"))?;
        }
    }
    Ok(())
}

/// Runs `suites` in order, one report each.
pub fn run_suites(suites: &[Suite], max_n: usize, ceilings: &Ceilings) -> Result<Vec<SuiteReport>> {
    suites.iter().map(|&s| run_suite(s, max_n, ceilings)).collect()
}
