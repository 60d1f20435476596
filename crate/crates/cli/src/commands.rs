use std::io::{self, BufRead, Write};

use noncrossing::bijections::{
    enumerate_box_plane_partitions, halfarc_zeta, halfarc_zeta_inverse, labelle_merge, labelle_split,
    pair_to_vacillating, parse_plane_partition, plane_partition_to_tuple, tuple_to_plane_partition,
    vacillating_to_pair, zeta, zeta_inverse, PlanePartition,
};
use noncrossing::enumeration::{
    box_generating_function_brute, box_q_polynomial, brute_count, catalan, count_tuples, narayana, BruteKind,
    Ceilings,
};
use noncrossing::paths::{
    enumerate_dyck, enumerate_free_dyck, enumerate_noncrossing_tuples, parse_path, parse_tuple, FreeDyckPath,
    NoncrossingPathTuple,
};
use noncrossing::set_partitions::{
    crossing_number, crossing_number_exhaustive, enumerate_noncrossing_with_blocks, enumerate_partitions,
    nesting_number, nesting_number_exhaustive, parse_arcs, parse_partition, partition_from_arcs,
    standard_representation, ArcDiagram, SetPartition,
};
use noncrossing::tableaux::{partition_to_vacillating, vacillating_to_partition, VacillatingTableau};
use noncrossing::verify::{run_suites, Suite};
use noncrossing::Error;
use serde_json::{json, Value};

use crate::{CountKind, Format, GenKind, ObjKind, Via};

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Ceiling(_) => CliError::usage(e.to_string()),
            _ => CliError::domain(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::domain(format!("i/o error: {e}"))
    }
}

type CliResult = Result<(), CliError>;

/// Ceilings with `NCPATHS_MAX_PAIRS_N`, `NCPATHS_MAX_PARTITIONS_M`,
/// `NCPATHS_MAX_DYCK_N` and `NCPATHS_MAX_PLANE` applied on top of the
/// defaults.
fn ceilings() -> Result<Ceilings, CliError> {
    let mut c = Ceilings::default();
    let vars: [(&str, &mut usize); 4] = [
        ("NCPATHS_MAX_PAIRS_N", &mut c.pairs_n),
        ("NCPATHS_MAX_PARTITIONS_M", &mut c.partitions_m),
        ("NCPATHS_MAX_DYCK_N", &mut c.dyck_n),
        ("NCPATHS_MAX_PLANE", &mut c.plane),
    ];
    for (name, slot) in vars {
        if let Ok(value) = std::env::var(name) {
            *slot = value
                .trim()
                .parse()
                .map_err(|_| CliError::usage(format!("{name}={value:?} is not a nonnegative integer")))?;
        }
    }
    Ok(c)
}

fn within(what: &str, value: usize, ceiling: usize) -> CliResult {
    if value > ceiling {
        return Err(Error::Ceiling(format!("{what} = {value} exceeds the limit {ceiling}")).into());
    }
    Ok(())
}

fn need(name: &str, value: Option<usize>) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::usage(format!("missing --{name}")))
}

/// One line per value: the text form, or compact JSON.
fn emit(out: &mut impl Write, format: Format, text: impl FnOnce() -> String, json: impl FnOnce() -> Value) -> CliResult {
    match format {
        Format::Text => writeln!(out, "{}", text())?,
        Format::Json => writeln!(out, "{}", json())?,
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("library types serialize")
}

fn path_json(p: &FreeDyckPath) -> Value {
    to_json(p)
}

fn paths_json(ps: &[FreeDyckPath]) -> Value {
    Value::Array(ps.iter().map(path_json).collect())
}

fn arcs_json(ad: &ArcDiagram) -> Value {
    json!({ "m": ad.m(), "arcs": ad.arcs().iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>() })
}

pub fn generate(
    out: &mut impl Write,
    format: Format,
    kind: GenKind,
    n: Option<usize>,
    k: Option<usize>,
    m: Option<usize>,
    blocks: Option<usize>,
) -> CliResult {
    let c = ceilings()?;
    match kind {
        GenKind::FreeDyck | GenKind::Dyck => {
            let n = need("n", n)?;
            within("n", n, c.dyck_n)?;
            let paths: Box<dyn Iterator<Item = FreeDyckPath>> = if kind == GenKind::Dyck {
                Box::new(enumerate_dyck(n).map(FreeDyckPath::from))
            } else {
                Box::new(enumerate_free_dyck(n))
            };
            for p in paths {
                emit(out, format, || p.to_string(), || path_json(&p))?;
            }
        }
        GenKind::NcTuples => {
            let n = need("n", n)?;
            let k = need("k", k)?;
            within("n", n, c.pairs_n)?;
            for t in enumerate_noncrossing_tuples(n, k) {
                emit(out, format, || t.to_string(), || paths_json(t.paths()))?;
            }
        }
        GenKind::Partitions | GenKind::NcPartitions => {
            let m = need("m", m)?;
            within("m", m, c.partitions_m)?;
            let parts: Box<dyn Iterator<Item = SetPartition>> = if kind == GenKind::NcPartitions {
                Box::new(enumerate_noncrossing_with_blocks(m, need("blocks", blocks)?))
            } else {
                Box::new(enumerate_partitions(m))
            };
            for sp in parts {
                emit(out, format, || sp.to_string(), || to_json(&sp))?;
            }
        }
        GenKind::PlanePartitions => {
            let n = need("n", n)?;
            let k = need("k", k)?;
            within("n", n, c.plane)?;
            within("k", k, c.plane)?;
            for pp in enumerate_box_plane_partitions(n, n, k as u64) {
                emit(out, format, || pp.to_string(), || to_json(&pp))?;
            }
        }
    }
    Ok(())
}

enum Obj {
    Pair(FreeDyckPath, FreeDyckPath),
    Partition(SetPartition),
    Vt(VacillatingTableau),
    Dyck(FreeDyckPath),
    Arcs(ArcDiagram),
    Tuple(NoncrossingPathTuple),
    Pp(PlanePartition),
}

fn parse_obj(kind: ObjKind, text: &str) -> Result<Obj, CliError> {
    Ok(match kind {
        ObjKind::Pair => {
            let mut paths = parse_tuple(text)?;
            if paths.len() != 2 {
                return Err(CliError::usage(format!("{text:?} is not a pair of paths")));
            }
            let lower = paths.pop().expect("two paths");
            let upper = paths.pop().expect("two paths");
            Obj::Pair(upper, lower)
        }
        ObjKind::Partition => Obj::Partition(parse_partition(text)?),
        ObjKind::Vt => Obj::Vt(text.parse()?),
        ObjKind::Dyck => Obj::Dyck(parse_path(text)?),
        ObjKind::Arcs => Obj::Arcs(parse_arcs(text)?),
        ObjKind::Tuple => Obj::Tuple(NoncrossingPathTuple::new(parse_tuple(text)?)?),
        ObjKind::Pp => Obj::Pp(parse_plane_partition(text)?),
    })
}

fn render(obj: &Obj, format: Format) -> String {
    match format {
        Format::Text => match obj {
            Obj::Pair(a, b) => format!("{a},{b}"),
            Obj::Partition(sp) => sp.to_string(),
            Obj::Vt(vt) => vt.to_string(),
            Obj::Dyck(p) => p.to_string(),
            Obj::Arcs(ad) => ad.to_sized_text(),
            Obj::Tuple(t) => t.to_string(),
            Obj::Pp(pp) => pp.to_string(),
        },
        Format::Json => match obj {
            Obj::Pair(a, b) => paths_json(&[a.clone(), b.clone()]),
            Obj::Partition(sp) => to_json(sp),
            Obj::Vt(vt) => to_json(vt),
            Obj::Dyck(p) => path_json(p),
            Obj::Arcs(ad) => arcs_json(ad),
            Obj::Tuple(t) => paths_json(t.paths()),
            Obj::Pp(pp) => to_json(pp),
        }
        .to_string(),
    }
}

fn convert_one(obj: Obj, to: ObjKind, via: Via, n: Option<usize>, k: Option<usize>) -> Result<Obj, CliError> {
    Ok(match (obj, to) {
        (Obj::Pair(a, b), ObjKind::Partition) => Obj::Partition(match via {
            Via::Tableau => zeta(&a, &b)?,
            Via::Halfarc => halfarc_zeta(&a, &b)?,
        }),
        (Obj::Partition(sp), ObjKind::Pair) => {
            let (a, b) = match via {
                Via::Tableau => zeta_inverse(&sp)?,
                Via::Halfarc => halfarc_zeta_inverse(&sp)?,
            };
            Obj::Pair(a, b)
        }
        (Obj::Pair(a, b), ObjKind::Dyck) => Obj::Dyck(labelle_merge(&a, &b)?.into()),
        (Obj::Dyck(d), ObjKind::Pair) => {
            let (a, b) = labelle_split(&d)?;
            Obj::Pair(a, b)
        }
        (Obj::Pair(a, b), ObjKind::Vt) => Obj::Vt(pair_to_vacillating(&a, &b)?),
        (Obj::Vt(vt), ObjKind::Pair) => {
            let (a, b) = vacillating_to_pair(&vt)?;
            Obj::Pair(a, b)
        }
        (Obj::Partition(sp), ObjKind::Vt) => Obj::Vt(partition_to_vacillating(&sp)),
        (Obj::Vt(vt), ObjKind::Partition) => Obj::Partition(vacillating_to_partition(&vt)?.partition),
        (Obj::Partition(sp), ObjKind::Arcs) => Obj::Arcs(standard_representation(&sp)),
        (Obj::Arcs(ad), ObjKind::Partition) => Obj::Partition(partition_from_arcs(&ad)?),
        (Obj::Tuple(t), ObjKind::Pp) => Obj::Pp(tuple_to_plane_partition(&t)),
        (Obj::Pp(pp), ObjKind::Tuple) => Obj::Tuple(plane_partition_to_tuple(&pp, need("n", n)?, need("k", k)?)?),
        _ => unreachable!("checked by is_registered"),
    })
}

fn is_registered(from: ObjKind, to: ObjKind) -> bool {
    use ObjKind::*;
    matches!(
        (from, to),
        (Pair, Partition)
            | (Partition, Pair)
            | (Pair, Dyck)
            | (Dyck, Pair)
            | (Pair, Vt)
            | (Vt, Pair)
            | (Partition, Vt)
            | (Vt, Partition)
            | (Partition, Arcs)
            | (Arcs, Partition)
            | (Tuple, Pp)
            | (Pp, Tuple)
    )
}

/// Payload arguments, or else nonblank lines of standard input.
fn inputs(payload: &[String]) -> Result<Vec<String>, CliError> {
    if !payload.is_empty() {
        return Ok(payload.to_vec());
    }
    let mut lines = Vec::new();
    for line in io::stdin().lock().lines() {
        let line = line?;
        if !line.trim().is_empty() {
            lines.push(line.trim().to_string());
        }
    }
    Ok(lines)
}

#[allow(clippy::too_many_arguments)]
pub fn convert(
    out: &mut impl Write,
    format: Format,
    from: ObjKind,
    to: ObjKind,
    payload: &[String],
    via: Via,
    n: Option<usize>,
    k: Option<usize>,
) -> CliResult {
    if !is_registered(from, to) {
        return Err(CliError::usage(format!("no conversion from {from:?} to {to:?}").to_lowercase()));
    }
    for text in inputs(payload)? {
        let obj = parse_obj(from, &text)?;
        let converted = convert_one(obj, to, via, n, k)?;
        writeln!(out, "{}", render(&converted, format))?;
    }
    Ok(())
}

pub struct CountParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub j: Option<usize>,
    pub blocks: Option<usize>,
}

pub fn count(
    out: &mut impl Write,
    format: Format,
    object: CountKind,
    p: CountParams,
    q: bool,
    brute: bool,
) -> CliResult {
    let c = ceilings()?;
    if q {
        let (n, k) = match object {
            CountKind::NcPairs => (need("n", p.n)?, 2),
            CountKind::Tuples | CountKind::BoxPp => (need("n", p.n)?, need("k", p.k)?),
            other => {
                return Err(CliError::usage(format!("--q is not supported for {other:?}").to_lowercase()));
            }
        };
        let poly = if brute {
            box_generating_function_brute(n, n, k, &c)?
        } else {
            box_q_polynomial(n, k)?
        };
        return emit(out, format, || poly.to_string(), || to_json(&poly));
    }
    let value = match object {
        CountKind::NcPairs => {
            let n = need("n", p.n)?;
            if brute {
                brute_count(BruteKind::NcPairs { n }, &c)?
            } else {
                count_tuples(n, 2)
            }
        }
        CountKind::Tuples | CountKind::BoxPp => {
            let n = need("n", p.n)?;
            let k = need("k", p.k)?;
            if !brute {
                count_tuples(n, k)
            } else if object == CountKind::BoxPp {
                brute_count(BruteKind::BoxPp { rows: n, cols: n, max_part: k }, &c)?
            } else {
                within("n", n, c.pairs_n)?;
                enumerate_noncrossing_tuples(n, k).count().into()
            }
        }
        CountKind::Narayana | CountKind::OddUpDyck => {
            let m = need("m", p.m)?;
            let j = need("j", p.j)?;
            if brute {
                brute_count(BruteKind::OddUpDyck { length: 2 * m, ups: j }, &c)?
            } else {
                narayana(m, j)?
            }
        }
        CountKind::Catalan => {
            let m = need("m", p.m)?;
            if brute {
                within("m", m, c.dyck_n)?;
                enumerate_dyck(m).count().into()
            } else {
                catalan(m)
            }
        }
        CountKind::NcPartitions => {
            let m = need("m", p.m)?;
            let blocks = need("blocks", p.blocks)?;
            if brute {
                brute_count(BruteKind::NcPartitions { m, blocks }, &c)?
            } else {
                narayana(m, blocks)?
            }
        }
    };
    emit(
        out,
        format,
        || value.to_string(),
        || Value::Number(value.to_string().parse().expect("decimal integer")),
    )
}

pub fn verify(out: &mut impl Write, format: Format, suite: &str, max_n: usize) -> CliResult {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let reports = run_suites(&suites, max_n, &ceilings()?)?;
    for r in &reports {
        emit(out, format, || r.to_string(), || to_json(r))?;
    }
    match reports.iter().find(|r| !r.passed()) {
        Some(r) => Err(CliError::domain(format!("suite {} failed", r.suite))),
        None => Ok(()),
    }
}

pub fn stats(out: &mut impl Write, format: Format, partitions: &[String]) -> CliResult {
    for text in inputs(partitions)? {
        let sp = parse_partition(&text)?;
        let arcs = standard_representation(&sp);
        let (cr, ne) = if arcs.len() <= 16 {
            (crossing_number_exhaustive(&sp), nesting_number_exhaustive(&sp))
        } else {
            (crossing_number(&sp), nesting_number(&sp))
        };
        let vt = partition_to_vacillating(&sp);
        if (cr, ne) != (vt.max_rows(), vt.max_cols()) {
            return Err(CliError::domain(format!(
                "{sp}: cr={cr} ne={ne} but the vacillating tableau gives {} rows and {} columns",
                vt.max_rows(),
                vt.max_cols()
            )));
        }
        let noncrossing = cr <= 1;
        emit(
            out,
            format,
            || {
                format!(
                    "cr={cr} ne={ne} blocks={} arcs={} noncrossing={noncrossing}",
                    sp.num_blocks(),
                    arcs.len()
                )
            },
            || {
                json!({
                    "partition": sp.to_string(),
                    "cr": cr,
                    "ne": ne,
                    "blocks": sp.num_blocks(),
                    "arcs": arcs.len(),
                    "noncrossing": noncrossing,
                })
            },
        )?;
    }
    Ok(())
}
