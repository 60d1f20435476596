//! Exact counting: the box product for plane partitions in `B(n, n, k)`,
//! `F(n, k)`, `F(n, 2)`, Narayana and Catalan numbers, and brute-force
//! counters that share no code with the closed forms.
//!
//! Everything is arbitrary precision. The box product is a quotient of
//! products of `[i] = 1 - q^i`; it is computed by exact long division with
//! the remainder checked to be zero.

use std::fmt;
use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::bijections::enumerate_box_plane_partitions;
use crate::error::{Error, Result};
use crate::paths::{enumerate_dyck, enumerate_free_dyck, is_noncrossing_tuple, FreeDyckPath};
use crate::set_partitions::{enumerate_partitions, is_noncrossing};

/// Polynomial in `q` with integer coefficients; `coeffs[e]` multiplies `q^e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        QPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn one() -> Self {
        QPolynomial::from_i64(&[1])
    }

    /// `[i] = 1 - q^i`.
    pub fn bracket(i: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); i + 1];
        coeffs[0] += 1;
        coeffs[i] -= 1;
        QPolynomial::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn pow(&self, e: usize) -> QPolynomial {
        (0..e).fold(QPolynomial::one(), |acc, _| &acc * self)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Long division. Fails when a leading coefficient of the running
    /// remainder is not divisible by the divisor's leading coefficient.
    pub fn div_rem(&self, divisor: &QPolynomial) -> Result<(QPolynomial, QPolynomial)> {
        let Some(d) = divisor.degree() else {
            return Err(Error::Precondition("division by the zero polynomial".into()));
        };
        let lead = &divisor.coeffs[d];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(d)];
        while rem.len() > d && !rem.is_empty() {
            let top = rem.len() - 1;
            let (factor, leftover) = rem[top].div_rem(lead);
            if !leftover.is_zero() {
                return Err(Error::Invariant(format!(
                    "coefficient {} not divisible by {lead}",
                    rem[top]
                )));
            }
            let shift = top - d;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((QPolynomial::new(quot), QPolynomial::new(rem)))
    }

    /// Exact quotient; a nonzero remainder is an error.
    pub fn div_exact(&self, divisor: &QPolynomial) -> Result<QPolynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Invariant(format!("nonzero remainder {r} dividing {self} by {divisor}")));
        }
        Ok(q)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::new(out)
    }
}

impl fmt::Display for QPolynomial {
    /// `1 + q + q^2`, `2 - 3q^4`; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let magnitude = c.abs();
            let var = match e {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{e}"),
            };
            if magnitude.is_one() && e > 0 {
                f.write_str(&var)?;
            } else {
                write!(f, "{magnitude}{var}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for QPolynomial {
    /// Coefficient list, lowest degree first, as exact JSON numbers.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let numbers: Vec<serde_json::Number> = self
            .coeffs
            .iter()
            .map(|c| c.to_string().parse().expect("integers are valid JSON numbers"))
            .collect();
        numbers.serialize(serializer)
    }
}

/// Exponent of `[k + i]` (and of `[i]`) in the box product, `i = 1..2n-1`.
fn box_multiplicity(n: usize, i: usize) -> usize {
    i.min(2 * n - i)
}

/// Generating function `Σ q^{|π|}` over `B(n, n, k)` from the product
/// `[k+1][k+2]^2...[k+n]^n[k+n+1]^{n-1}...[k+2n-1]` over
/// `[1][2]^2...[n]^n[n+1]^{n-1}...[2n-1]`.
pub fn box_q_polynomial(n: usize, k: usize) -> Result<QPolynomial> {
    let mut numerator = QPolynomial::one();
    let mut denominator = QPolynomial::one();
    for i in 1..2 * n {
        let mult = box_multiplicity(n, i);
        numerator = &numerator * &QPolynomial::bracket(k + i).pow(mult);
        denominator = &denominator * &QPolynomial::bracket(i).pow(mult);
    }
    let quotient = numerator.div_exact(&denominator)?;
    if let Some(c) = quotient.coeffs.iter().find(|c| c.is_negative()) {
        return Err(Error::Invariant(format!("negative coefficient {c} in B({n},{n},{k})")));
    }
    Ok(quotient)
}

/// `F(n, k)`, the number of noncrossing `k`-tuples of free Dyck paths of
/// length `2n`: the box product at `q = 1`, taken as the ratio of integer
/// products `Π (k+i)^{m_i} / Π i^{m_i}`.
pub fn count_tuples(n: usize, k: usize) -> BigUint {
    let mut numerator = BigUint::one();
    let mut denominator = BigUint::one();
    for i in 1..2 * n {
        let mult = box_multiplicity(n, i) as u32;
        numerator *= BigUint::from(k + i).pow(mult);
        denominator *= BigUint::from(i).pow(mult);
    }
    let (q, r) = numerator.div_rem(&denominator);
    debug_assert!(r.is_zero());
    q
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `F(n, 2) = (2n)! (2n+1)! / (n! (n+1)!)^2`.
pub fn f_n_2(n: usize) -> BigUint {
    let denom = factorial(n) * factorial(n + 1);
    factorial(2 * n) * factorial(2 * n + 1) / (&denom * &denom)
}

/// `N(m, j) = C(m, j-1) C(m, j) / m` for `1 <= j <= m`.
pub fn narayana(m: usize, j: usize) -> Result<BigUint> {
    if j == 0 || j > m {
        return Err(Error::Precondition(format!("narayana({m}, {j}) needs 1 <= j <= m")));
    }
    Ok(binomial(m, j - 1) * binomial(m, j) / BigUint::from(m))
}

pub fn catalan(m: usize) -> BigUint {
    binomial(2 * m, m) / BigUint::from(m + 1)
}

/// Upper limits for the exhaustive counters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ceilings {
    /// Half-length of path pairs.
    pub pairs_n: usize,
    /// Ground-set size for partition searches.
    pub partitions_m: usize,
    /// Half-length of Dyck paths searched for odd-position ups.
    pub dyck_n: usize,
    /// Bound on rows, columns and largest part of boxed plane partitions.
    pub plane: usize,
}

impl Default for Ceilings {
    fn default() -> Self {
        Ceilings {
            pairs_n: 5,
            partitions_m: 11,
            dyck_n: 11,
            plane: 4,
        }
    }
}

/// What a brute-force count enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BruteKind {
    /// Noncrossing pairs of free Dyck paths of half-length `n`.
    NcPairs { n: usize },
    /// Noncrossing partitions of `[m]` with exactly `blocks` blocks.
    NcPartitions { m: usize, blocks: usize },
    /// Dyck paths of length `length` with exactly `ups` up steps at odd
    /// positions.
    OddUpDyck { length: usize, ups: usize },
    /// Plane partitions in `B(rows, cols, max_part)`.
    BoxPp { rows: usize, cols: usize, max_part: usize },
}

fn check_ceiling(what: &str, value: usize, ceiling: usize) -> Result<()> {
    if value > ceiling {
        return Err(Error::Ceiling(format!("{what} = {value} exceeds the limit {ceiling}")));
    }
    Ok(())
}

/// Counts by exhaustive generation and filtering.
pub fn brute_count(kind: BruteKind, ceilings: &Ceilings) -> Result<BigUint> {
    let count = match kind {
        BruteKind::NcPairs { n } => {
            check_ceiling("n", n, ceilings.pairs_n)?;
            let all: Vec<FreeDyckPath> = enumerate_free_dyck(n).collect();
            let mut count = 0usize;
            for a in &all {
                for b in &all {
                    if is_noncrossing_tuple(&[a.clone(), b.clone()])? {
                        count += 1;
                    }
                }
            }
            count
        }
        BruteKind::NcPartitions { m, blocks } => {
            check_ceiling("m", m, ceilings.partitions_m)?;
            enumerate_partitions(m)
                .filter(|sp| sp.num_blocks() == blocks && is_noncrossing(sp))
                .count()
        }
        BruteKind::OddUpDyck { length, ups } => {
            if length % 2 != 0 {
                return Ok(BigUint::zero());
            }
            check_ceiling("length/2", length / 2, ceilings.dyck_n)?;
            enumerate_dyck(length / 2).filter(|d| d.odd_up_count() == ups).count()
        }
        BruteKind::BoxPp { rows, cols, max_part } => {
            check_ceiling("rows", rows, ceilings.plane)?;
            check_ceiling("cols", cols, ceilings.plane)?;
            check_ceiling("max part", max_part, ceilings.plane)?;
            enumerate_box_plane_partitions(rows, cols, max_part as u64).len()
        }
    };
    Ok(BigUint::from(count))
}

/// `Σ q^{|π|}` over `B(rows, cols, max_part)` by enumeration.
pub fn box_generating_function_brute(
    rows: usize,
    cols: usize,
    max_part: usize,
    ceilings: &Ceilings,
) -> Result<QPolynomial> {
    check_ceiling("rows", rows, ceilings.plane)?;
    check_ceiling("cols", cols, ceilings.plane)?;
    check_ceiling("max part", max_part, ceilings.plane)?;
    let mut coeffs: Vec<BigInt> = Vec::new();
    for pp in enumerate_box_plane_partitions(rows, cols, max_part as u64) {
        let w = pp.weight().to_usize().expect("weight fits in usize");
        if coeffs.len() <= w {
            coeffs.resize(w + 1, BigInt::zero());
        }
        coeffs[w] += 1;
    }
    Ok(QPolynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn box_polynomial_examples() {
        assert_eq!(box_q_polynomial(1, 1).unwrap(), QPolynomial::from_i64(&[1, 1]));
        assert_eq!(box_q_polynomial(1, 2).unwrap().to_string(), "1 + q + q^2");
        assert_eq!(box_q_polynomial(2, 2).unwrap().eval_at_one(), BigInt::from(20));
        assert_eq!(box_q_polynomial(0, 5).unwrap(), QPolynomial::one());
        assert_eq!(box_q_polynomial(3, 0).unwrap(), QPolynomial::one());
    }

    #[test]
    fn box_polynomial_matches_enumeration() {
        let ceilings = Ceilings::default();
        for n in 0..=3 {
            for k in 0..=3 {
                let brute = box_generating_function_brute(n, n, k, &ceilings).unwrap();
                assert_eq!(box_q_polynomial(n, k).unwrap(), brute, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn q_at_one_is_count() {
        for n in 0..=4 {
            for k in 1..=4 {
                let poly = box_q_polynomial(n, k).unwrap();
                assert_eq!(poly.eval_at_one(), BigInt::from(count_tuples(n, k)), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn tuple_counts() {
        assert_eq!(count_tuples(1, 2), big(3));
        assert_eq!(count_tuples(2, 2), big(20));
        for n in 0..=6 {
            assert_eq!(count_tuples(n, 1), binomial(2 * n, n));
        }
    }

    #[test]
    fn two_path_identities() {
        assert_eq!(f_n_2(1), big(3));
        assert_eq!(f_n_2(2), big(20));
        assert_eq!(f_n_2(3), big(175));
        for n in 0..=10 {
            assert_eq!(count_tuples(n, 2), f_n_2(n), "n={n}");
            assert_eq!(narayana(2 * n + 1, n + 1).unwrap(), f_n_2(n), "n={n}");
        }
    }

    #[test]
    fn narayana_values() {
        for m in 1..=8 {
            assert_eq!(narayana(m, 1).unwrap(), big(1));
        }
        assert_eq!(narayana(3, 2).unwrap(), big(3));
        assert_eq!(narayana(5, 3).unwrap(), big(20));
        assert!(narayana(3, 0).is_err());
        assert!(narayana(3, 4).is_err());
        for m in 1..=12 {
            let total: BigUint = (1..=m).map(|j| narayana(m, j).unwrap()).sum();
            assert_eq!(total, catalan(m), "m={m}");
        }
    }

    #[test]
    fn brute_counts() {
        let c = Ceilings::default();
        assert_eq!(brute_count(BruteKind::NcPairs { n: 2 }, &c).unwrap(), big(20));
        assert_eq!(brute_count(BruteKind::NcPartitions { m: 5, blocks: 3 }, &c).unwrap(), big(20));
        assert_eq!(brute_count(BruteKind::OddUpDyck { length: 6, ups: 2 }, &c).unwrap(), big(3));
        assert_eq!(brute_count(BruteKind::BoxPp { rows: 2, cols: 2, max_part: 2 }, &c).unwrap(), big(20));
        assert!(matches!(
            brute_count(BruteKind::NcPairs { n: 6 }, &c),
            Err(Error::Ceiling(_))
        ));
        assert!(brute_count(BruteKind::NcPartitions { m: 12, blocks: 3 }, &c).is_err());
    }

    #[test]
    fn polynomial_arithmetic() {
        let a = QPolynomial::from_i64(&[1, 2, 1]);
        let b = QPolynomial::from_i64(&[1, 1]);
        assert_eq!(a.div_exact(&b).unwrap(), b);
        let (q, r) = QPolynomial::from_i64(&[2, 0, 1]).div_rem(&b).unwrap();
        assert_eq!((q, r), (QPolynomial::from_i64(&[-1, 1]), QPolynomial::from_i64(&[3])));
        assert!(QPolynomial::from_i64(&[2, 0, 1]).div_exact(&b).is_err());
        assert!(a.div_rem(&QPolynomial::zero()).is_err());
        assert_eq!(QPolynomial::bracket(3).to_string(), "1 - q^3");
        assert_eq!(QPolynomial::from_i64(&[0, -2, 3]).to_string(), "-2q + 3q^2");
        assert_eq!(QPolynomial::zero().to_string(), "0");
        assert_eq!(serde_json::to_string(&a).unwrap(), "[1,2,1]");
    }
}
