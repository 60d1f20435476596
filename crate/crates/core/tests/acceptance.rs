//! Acceptance criteria, one PASS/FAIL line each. Every comparison is exact.
//! Runs without the libtest harness: `cargo test --test acceptance`.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use noncrossing::bijections::{
    enumerate_box_plane_partitions, halfarc_zeta, labelle_merge, labelle_split, plane_partition_to_tuple,
    tuple_to_plane_partition, zeta, zeta_inverse,
};
use noncrossing::enumeration::{
    box_generating_function_brute, box_q_polynomial, brute_count, count_tuples, f_n_2, narayana, BruteKind,
    Ceilings, QPolynomial,
};
use noncrossing::paths::{enumerate_noncrossing_tuples, FreeDyckPath, Step};
use noncrossing::set_partitions::{enumerate_partitions, parse_partition, standard_representation, SetPartition};
use noncrossing::tableaux::{partition_to_vacillating, vacillating_to_partition, VacillatingTableau};
use num_bigint::{BigInt, BigUint};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn pairs(n: usize) -> Vec<(FreeDyckPath, FreeDyckPath)> {
    enumerate_noncrossing_tuples(n, 2)
        .map(|t| {
            let p = t.into_paths();
            (p[0].clone(), p[1].clone())
        })
        .collect()
}

// Independent oracles.

/// All free Dyck words of half-length `n` from bit masks.
fn oracle_free_words(n: usize) -> Vec<Vec<i32>> {
    (0u32..1 << (2 * n))
        .filter(|mask| mask.count_ones() as usize == n)
        .map(|mask| (0..2 * n).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect())
        .collect()
}

fn heights(word: &[i32]) -> Vec<i32> {
    word.iter()
        .scan(0, |h, &s| {
            *h += s;
            Some(*h)
        })
        .collect()
}

/// Set partitions of `[m]` as block labels, by restricted growth strings.
fn oracle_partitions(m: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, m: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == m {
            out.push(prefix.clone());
            return;
        }
        let next = prefix.iter().max().map_or(0, |&x| x + 1);
        for b in 0..=next {
            prefix.push(b);
            go(prefix, m, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), m, &mut out);
    out
}

/// Arcs joining consecutive members of each block.
fn oracle_arcs(labels: &[usize]) -> Vec<(usize, usize)> {
    let mut arcs = Vec::new();
    for i in 0..labels.len() {
        if let Some(j) = (i + 1..labels.len()).find(|&j| labels[j] == labels[i]) {
            arcs.push((i + 1, j + 1));
        }
    }
    arcs
}

/// Largest set of pairwise crossing (or nesting) arcs, by checking every
/// subset.
fn oracle_max_family(arcs: &[(usize, usize)], nesting: bool) -> usize {
    let related = |a: (usize, usize), b: (usize, usize)| {
        let (a, b) = if a.0 < b.0 { (a, b) } else { (b, a) };
        if nesting {
            b.1 < a.1
        } else {
            b.0 < a.1 && a.1 < b.1
        }
    };
    let mut best = 0;
    for mask in 0u32..1 << arcs.len() {
        let chosen: Vec<_> = (0..arcs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| arcs[i]).collect();
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(x, &a)| chosen[x + 1..].iter().all(|&b| related(a, b)));
        if ok {
            best = best.max(chosen.len());
        }
    }
    best
}

/// MacMahon's box product `Π (i+j+l-1)/(i+j+l-2)` over the `n x n x k` box.
fn oracle_box_count(n: usize, k: usize) -> BigUint {
    let (mut num, mut den) = (BigUint::from(1u32), BigUint::from(1u32));
    for i in 1..=n {
        for j in 1..=n {
            for l in 1..=k {
                num *= (i + j + l - 1) as u64;
                den *= (i + j + l - 2) as u64;
            }
        }
    }
    num / den
}

fn oracle_narayana(m: usize, j: usize) -> BigUint {
    let c = |a: usize, b: usize| -> BigUint {
        (0..b).fold(BigUint::from(1u32), |acc, i| acc * (a - i) as u64 / (i + 1) as u64)
    };
    c(m, j - 1) * c(m, j) / m as u64
}

fn weight_polynomial(weights: impl Iterator<Item = u64>) -> QPolynomial {
    let mut coeffs: BTreeMap<u64, i64> = BTreeMap::new();
    for w in weights {
        *coeffs.entry(w).or_default() += 1;
    }
    let top = coeffs.keys().max().copied().unwrap_or(0);
    QPolynomial::new((0..=top).map(|e| BigInt::from(coeffs.get(&e).copied().unwrap_or(0))).collect())
}

// Criteria.

fn counting_triangle() -> Outcome {
    let c = Ceilings::default();
    let mut row = Vec::new();
    for n in 1..=4usize {
        let words = oracle_free_words(n);
        let oracle_pairs = words
            .iter()
            .flat_map(|p| words.iter().map(move |q| (p, q)))
            .filter(|(p, q)| heights(p).iter().zip(heights(q)).all(|(a, b)| *a >= b))
            .count();
        let values = [
            lib(brute_count(BruteKind::NcPairs { n }, &c))?,
            f_n_2(n),
            lib(brute_count(BruteKind::NcPartitions { m: 2 * n + 1, blocks: n + 1 }, &c))?,
            lib(brute_count(BruteKind::OddUpDyck { length: 4 * n + 2, ups: n + 1 }, &c))?,
            lib(narayana(2 * n + 1, n + 1))?,
            BigUint::from(oracle_pairs),
            oracle_narayana(2 * n + 1, n + 1),
        ];
        ensure(values.iter().all(|v| v == &values[0]), || format!("n={n}: {values:?}"))?;
        row.push(values[0].to_string());
    }
    ensure(row == ["3", "20", "175", "1764"], || format!("triangle {row:?}"))?;
    Ok(row.join(", "))
}

fn zeta_bijective() -> Outcome {
    let (mut total, mut last) = (0, 0);
    for n in 0..=4 {
        let mut images = BTreeSet::new();
        let all = pairs(n);
        for (p, q) in &all {
            let sp = lib(zeta(p, q))?;
            let labels: Vec<usize> = (1..=sp.m())
                .map(|x| sp.blocks().iter().position(|b| b.contains(&x)).unwrap())
                .collect();
            let arcs = oracle_arcs(&labels);
            ensure(oracle_max_family(&arcs, false) <= 1, || format!("{sp} crosses"))?;
            ensure(sp.m() == 2 * n + 1 && sp.num_blocks() == n + 1, || format!("{p},{q} -> {sp}"))?;
            let back = lib(zeta_inverse(&sp))?;
            ensure(&back.0 == p && &back.1 == q, || format!("{p},{q} -> {sp} -> {},{}", back.0, back.1))?;
            images.insert(sp.to_string());
        }
        ensure(images.len() == all.len(), || format!("n={n}: {} images for {} pairs", images.len(), all.len()))?;
        total += all.len();
        last = all.len();
    }
    Ok(format!("{total} pairs, {last} at n=4"))
}

fn zeta_matches_halfarc() -> Outcome {
    let mut total = 0;
    for n in 0..=4 {
        for (p, q) in pairs(n) {
            let (a, b) = (lib(zeta(&p, &q))?, lib(halfarc_zeta(&p, &q))?);
            ensure(a == b, || format!("{p},{q}: {a} vs {b}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} pairs"))
}

fn worked_examples() -> Outcome {
    let text = "(e,e,1,1,11,11,111,11,11,1,2,1,1,e,e)";
    let vt: VacillatingTableau = lib(text.parse())?;
    let with_empty_sets: VacillatingTableau = lib("(∅,∅,1,1,11,11,111,11,11,1,2,1,1,∅,∅)".parse())?;
    ensure(vt == with_empty_sets, || "∅ spelling differs".into())?;
    let decoded = lib(vacillating_to_partition(&vt))?;
    ensure(decoded.partition.to_string() == "14-256-37", || decoded.partition.to_string())?;
    ensure(decoded.recorded == [(1, 4), (2, 5), (5, 6), (3, 7)], || format!("{:?}", decoded.recorded))?;
    let sp = lib(parse_partition("14-256-37"))?;
    ensure(partition_to_vacillating(&sp).to_string() == text, || partition_to_vacillating(&sp).to_string())?;

    let p: FreeDyckPath = lib("UUDDDUUD".parse())?;
    let q: FreeDyckPath = lib("DUUDDUDU".parse())?;
    let image = lib(zeta(&p, &q))?.to_string();
    ensure(image == "14-23-5-679-8", || image.clone())?;

    let sp = lib(parse_partition("1358-29-46-7"))?;
    let arcs: BTreeSet<(usize, usize)> = standard_representation(&sp).arcs().iter().copied().collect();
    let expected = BTreeSet::from([(1, 3), (3, 5), (5, 8), (2, 9), (4, 6)]);
    ensure(arcs == expected, || format!("{arcs:?}"))?;
    Ok("3 examples byte-exact".into())
}

fn crossings_are_rows() -> Outcome {
    let mut total = 0;
    for m in 0..=7 {
        for labels in oracle_partitions(m) {
            let sp = SetPartition::from_labels(&labels.iter().map(|l| l + 1).collect::<Vec<_>>());
            let arcs = oracle_arcs(&labels);
            let vt = partition_to_vacillating(&sp);
            let (cr, ne) = (oracle_max_family(&arcs, false), oracle_max_family(&arcs, true));
            ensure(cr == vt.max_rows() && ne == vt.max_cols(), || {
                format!("{sp}: cr={cr} ne={ne} rows={} cols={}", vt.max_rows(), vt.max_cols())
            })?;
            ensure(
                noncrossing::set_partitions::crossing_number(&sp) == cr
                    && noncrossing::set_partitions::nesting_number(&sp) == ne,
                || format!("{sp}: library cr/ne disagree"),
            )?;
            total += 1;
        }
    }
    let library_total: usize = (0..=7).map(|m| enumerate_partitions(m).count()).sum();
    ensure(total == library_total, || format!("{total} oracle partitions, {library_total} from the library"))?;
    Ok(format!("{total} partitions, m <= 7"))
}

fn labelle() -> Outcome {
    for n in 0..=4 {
        for (p, q) in pairs(n) {
            let d = lib(labelle_merge(&p, &q))?;
            let back = lib(labelle_split(d.as_free()))?;
            ensure(back == (p.clone(), q.clone()), || format!("{p},{q} -> {}", d.as_free()))?;
        }
    }
    for n in 0..=3 {
        let target: BTreeSet<String> = oracle_free_words(2 * n + 1)
            .into_iter()
            .filter(|w| heights(w).iter().all(|&h| h >= 0))
            .filter(|w| w.iter().step_by(2).filter(|&&s| s == 1).count() == n + 1)
            .map(|w| w.iter().map(|&s| if s == 1 { 'U' } else { 'D' }).collect())
            .collect();
        let image: BTreeSet<String> = pairs(n)
            .iter()
            .map(|(p, q)| labelle_merge(p, q).map(|d| d.as_free().to_string()))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        ensure(image == target, || format!("n={n}: image {} target {}", image.len(), target.len()))?;
    }
    Ok("round trip n <= 4, onto n <= 3".into())
}

fn box_polynomial() -> Outcome {
    let c = Ceilings::default();
    for n in 0..=3 {
        for k in 0..=3 {
            let formula = lib(box_q_polynomial(n, k))?;
            let brute = lib(box_generating_function_brute(n, n, k, &c))?;
            ensure(formula == brute, || format!("n={n} k={k}: {formula} vs {brute}"))?;
        }
    }
    for n in 0..=6 {
        for k in 0..=6 {
            let (mut num, mut den) = (QPolynomial::one(), QPolynomial::one());
            for i in 1..2 * n {
                let e = i.min(2 * n - i);
                num = &num * &QPolynomial::bracket(k + i).pow(e);
                den = &den * &QPolynomial::bracket(i).pow(e);
            }
            let (quotient, remainder) = lib(num.div_rem(&den))?;
            ensure(remainder.is_zero(), || format!("n={n} k={k}: remainder {remainder}"))?;
            let formula = lib(box_q_polynomial(n, k))?;
            ensure(quotient == formula, || format!("n={n} k={k}: quotient differs"))?;
            let at_one = BigInt::from(oracle_box_count(n, k));
            ensure(formula.eval_at_one() == at_one, || format!("n={n} k={k}: q=1 gives {}", formula.eval_at_one()))?;
            ensure(BigInt::from(count_tuples(n, k)) == at_one, || format!("n={n} k={k}: F(n,k)"))?;
        }
    }
    Ok("brute n,k <= 3; exact division n,k <= 6".into())
}

fn plane_partitions() -> Outcome {
    for n in 0..=3 {
        for k in 1..=3 {
            let tuples: Vec<_> = enumerate_noncrossing_tuples(n, k).collect();
            let mut images = BTreeSet::new();
            for t in &tuples {
                let pp = tuple_to_plane_partition(t);
                ensure(pp.fits_box(n, n, k as u64), || format!("{t} -> {pp}"))?;
                let back = lib(plane_partition_to_tuple(&pp, n, k))?;
                ensure(&back == t, || format!("{t} -> {pp} -> {back}"))?;
                images.insert(pp);
            }
            let boxed = enumerate_box_plane_partitions(n, n, k as u64);
            ensure(images.len() == boxed.len() && boxed.iter().all(|b| images.contains(b)), || {
                format!("n={n} k={k}: not onto the box")
            })?;
            for pp in &boxed {
                ensure(lib(plane_partition_to_tuple(pp, n, k)).map(|t| tuple_to_plane_partition(&t)) == Ok(pp.clone()), || {
                    format!("{pp} does not round trip")
                })?;
            }
            // weight of a tuple: cells strictly above each path, summed
            let oracle = weight_polynomial(tuples.iter().map(|t| {
                t.paths()
                    .iter()
                    .map(|p| {
                        let mut ups_after = n as u64;
                        p.steps()
                            .iter()
                            .map(|s| match s {
                                Step::U => {
                                    ups_after -= 1;
                                    0
                                }
                                Step::D => ups_after,
                            })
                            .sum::<u64>()
                    })
                    .sum()
            }));
            let weights = weight_polynomial(tuples.iter().map(|t| tuple_to_plane_partition(t).weight()));
            let formula = lib(box_q_polynomial(n, k))?;
            ensure(weights == formula && oracle == formula, || format!("n={n} k={k}: {weights} vs {formula}"))?;
        }
    }
    Ok("n <= 3, k <= 3".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("counting triangle", counting_triangle),
        ("zeta bijective", zeta_bijective),
        ("zeta equals half-arc form", zeta_matches_halfarc),
        ("worked examples", worked_examples),
        ("crossings and nestings from tableau shapes", crossings_are_rows),
        ("labelle merge", labelle),
        ("box q-polynomial", box_polynomial),
        ("plane partitions", plane_partitions),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.2?}",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
