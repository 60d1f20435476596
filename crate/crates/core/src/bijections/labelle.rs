use crate::error::{Error, Result};
use crate::paths::{DyckPath, FreeDyckPath, Step};

use super::require_noncrossing_pair;

/// Merges a noncrossing pair `(P, Q)` into `U p_1 q'_1 ... p_{2n} q'_{2n} D`,
/// where `q'` flips each step of `Q`.
///
/// The height after `q'_i` is `1 + h_P(i) - h_Q(i)`, so the result is a Dyck
/// path exactly when `P` stays weakly above `Q`. Its odd positions hold the
/// leading `U` and the flipped steps of `Q`, giving `n + 1` odd-position ups.
pub fn labelle_merge(upper: &FreeDyckPath, lower: &FreeDyckPath) -> Result<DyckPath> {
    require_noncrossing_pair(upper, lower)?;
    let mut steps = Vec::with_capacity(2 * upper.len() + 2);
    steps.push(Step::U);
    for (&p, &q) in upper.steps().iter().zip(lower.steps()) {
        steps.push(p);
        steps.push(q.flip());
    }
    steps.push(Step::D);
    let merged = FreeDyckPath::new(steps)?;
    DyckPath::new(merged).map_err(|e| Error::Invariant(e.to_string()))
}

/// Inverse of [`labelle_merge`]. Accepts any path and checks every
/// condition on the image: Dyck, length `4n + 2`, outer `U ... D` frame, and
/// exactly `n + 1` up steps at odd positions.
pub fn labelle_split(path: &FreeDyckPath) -> Result<(FreeDyckPath, FreeDyckPath)> {
    let dyck = DyckPath::new(path.clone()).map_err(|e| Error::Precondition(e.to_string()))?;
    let len = path.len();
    if len % 4 != 2 {
        return Err(Error::Precondition(format!("length {len} is not of the form 4n+2")));
    }
    let n = (len - 2) / 4;
    let steps = path.steps();
    if steps[0] != Step::U || steps[len - 1] != Step::D {
        return Err(Error::Precondition(format!("{path} does not start with U and end with D")));
    }
    let odd_ups = dyck.odd_up_count();
    if odd_ups != n + 1 {
        return Err(Error::Precondition(format!(
            "{path} has {odd_ups} up steps at odd positions, expected {}",
            n + 1
        )));
    }
    let inner = &steps[1..len - 1];
    let upper: Vec<Step> = inner.iter().step_by(2).copied().collect();
    let lower: Vec<Step> = inner.iter().skip(1).step_by(2).map(|s| s.flip()).collect();
    let upper = FreeDyckPath::new(upper).map_err(|e| Error::Invariant(e.to_string()))?;
    let lower = FreeDyckPath::new(lower).map_err(|e| Error::Invariant(e.to_string()))?;
    require_noncrossing_pair(&upper, &lower).map_err(|e| Error::Invariant(e.to_string()))?;
    Ok((upper, lower))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enumerate_dyck, enumerate_noncrossing_tuples, parse_path};
    use std::collections::BTreeSet;

    fn p(s: &str) -> FreeDyckPath {
        parse_path(s).unwrap()
    }

    #[test]
    fn merge_examples() {
        assert_eq!(labelle_merge(&p("UD"), &p("UD")).unwrap().to_string(), "UUDDUD");
        assert_eq!(labelle_merge(&p("UD"), &p("DU")).unwrap().to_string(), "UUUDDD");
        assert_eq!(
            labelle_merge(&p("UUDDDUUD"), &p("DUUDDUDU")).unwrap().to_string(),
            "UUUUDDDDUDUUDUUDDD"
        );
        assert_eq!(labelle_merge(&p(""), &p("")).unwrap().to_string(), "UD");
        assert!(labelle_merge(&p("DU"), &p("UD")).is_err());
    }

    #[test]
    fn split_examples() {
        assert_eq!(labelle_split(&p("UUDDUD")).unwrap(), (p("UD"), p("UD")));
        assert_eq!(labelle_split(&p("UUUDDD")).unwrap(), (p("UD"), p("DU")));
        let err = labelle_split(&p("UDUDUD")).unwrap_err();
        assert!(err.to_string().contains("3 up steps"), "{err}");
        assert!(labelle_split(&p("DUUDUD")).is_err(), "not Dyck");
        assert!(labelle_split(&p("UUDD")).is_err(), "length 4");
    }

    #[test]
    fn merge_is_a_bijection_onto_odd_up_paths() {
        for n in 0..=3 {
            let image: BTreeSet<String> = enumerate_noncrossing_tuples(n, 2)
                .map(|t| {
                    let [a, b] = t.paths() else { unreachable!() };
                    let d = labelle_merge(a, b).unwrap();
                    assert_eq!(labelle_split(d.as_free()).unwrap(), (a.clone(), b.clone()));
                    d.to_string()
                })
                .collect();
            let target: BTreeSet<String> = enumerate_dyck(2 * n + 1)
                .filter(|d| d.odd_up_count() == n + 1)
                .map(|d| d.to_string())
                .collect();
            assert_eq!(image, target, "n = {n}");
        }
    }
}
