//! Exact polynomials over the rationals.
//!
//! [`MPoly`] lives in the variables `n, m_1, ..., m_K` where `n` has weight 1
//! and `m_i` has weight `i`. Terms are kept in a `BTreeMap` keyed by
//! [`Monomial`], ordered by weighted degree and then lexicographically on
//! `(e_n, e_1, ..., e_K)`, so iteration and serialization are deterministic.
//! [`UPoly`] is a univariate polynomial in `n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::solve_exact;
use crate::perm::CycleType;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exponent vector `(e_n, e_1, ..., e_K)` with trailing zeros removed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// From `e_n` and `[e_1, ..., e_K]`.
    pub fn new(e_n: u32, e_m: &[u32]) -> Self {
        let mut v = Vec::with_capacity(1 + e_m.len());
        v.push(e_n);
        v.extend_from_slice(e_m);
        Monomial::from_raw(v)
    }

    fn from_raw(mut v: Vec<u32>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    pub fn e_n(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Exponent of `m_i` (`i >= 1`).
    pub fn e_m(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Largest `i` with a nonzero exponent of `m_i`, or 0.
    pub fn max_m(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn weighted_degree(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| if i == 0 { e } else { i as u32 * e })
            .sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().max(other.0.len());
        let v = (0..len)
            .map(|i| self.0.get(i).copied().unwrap_or(0) + other.0.get(i).copied().unwrap_or(0))
            .collect();
        Monomial(v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.weighted_degree()
            .cmp(&other.weighted_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
pub struct MPoly {
    k: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for MPoly {
    /// Polynomials are equal as functions; the declared variable count is
    /// ignored.
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl MPoly {
    pub fn zero(k: usize) -> Self {
        MPoly {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational, k: usize) -> Self {
        let mut p = MPoly::zero(k);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one(k: usize) -> Self {
        MPoly::constant(Rational::one(), k)
    }

    /// The variable `n`.
    pub fn n(k: usize) -> Self {
        let mut p = MPoly::zero(k);
        p.add_term(Monomial::new(1, &[]), Rational::one());
        p
    }

    /// The variable `m_i`.
    pub fn m(i: usize) -> Self {
        assert!(i >= 1, "m_0 is not a variable");
        let mut e = vec![0; i];
        e[i - 1] = 1;
        let mut p = MPoly::zero(i);
        p.add_term(Monomial::new(0, &e), Rational::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(k: usize, terms: I) -> Self {
        let mut p = MPoly::zero(k);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Number of `m`-variables this polynomial is declared over.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Raises the declared variable count (embedding into more variables).
    pub fn with_k(mut self, k: usize) -> Self {
        self.k = self.k.max(k);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        self.k = self.k.max(m.max_m());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &MPoly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        self.k = self.k.max(other.k);
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.k);
        }
        MPoly {
            k: self.k,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut out = MPoly::one(self.k);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Maximum over terms of `e_n + sum_i i * e_i`; `None` for the zero
    /// polynomial.
    pub fn weighted_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::weighted_degree).max()
    }

    /// Largest `i` such that `m_i` occurs, or 0.
    pub fn max_m_used(&self) -> usize {
        self.terms.keys().map(Monomial::max_m).max().unwrap_or(0)
    }

    /// `true` if no monomial involves `n`.
    pub fn is_free_of_n(&self) -> bool {
        self.terms.keys().all(|m| m.e_n() == 0)
    }

    /// Exact value at `n = n_value`, `m_i = m_values[i]`.
    pub fn evaluate(&self, n_value: i64, m_values: &BTreeMap<usize, i64>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (mono, c) in &self.terms {
            let mut v = BigInt::one();
            if mono.e_n() > 0 {
                v *= BigInt::from(n_value).pow(mono.e_n());
            }
            for i in 1..=mono.max_m() {
                let e = mono.e_m(i);
                if e == 0 {
                    continue;
                }
                let mi = m_values
                    .get(&i)
                    .ok_or_else(|| Error::MissingVariable(format!("m{i}")))?;
                v *= BigInt::from(*mi).pow(e);
            }
            total += c * v;
        }
        Ok(total)
    }

    /// Value on the conjugacy class `ct`: `n = |ct|`, `m_i = ct.m(i)`.
    pub fn evaluate_at(&self, ct: &CycleType) -> Rational {
        let mut total = Rational::zero();
        let n = BigInt::from(ct.n());
        for (mono, c) in &self.terms {
            let mut v = BigInt::one();
            if mono.e_n() > 0 {
                v *= n.pow(mono.e_n());
            }
            for i in 1..=mono.max_m() {
                let e = mono.e_m(i);
                if e > 0 {
                    v *= BigInt::from(ct.m(i)).pow(e);
                    if v.is_zero() {
                        break;
                    }
                }
            }
            if !v.is_zero() {
                total += c * v;
            }
        }
        total
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.k.max(rhs.k));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul<&Rational> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &Rational) -> MPoly {
        self.scale(rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn write_coeff_and_monomial(
    f: &mut fmt::Formatter<'_>,
    c: &Rational,
    m: &Monomial,
    first: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if neg { " - " } else { " + " })?;
    }
    let mut factors = Vec::new();
    if m.e_n() > 0 {
        factors.push(power("n", m.e_n()));
    }
    for i in 1..=m.max_m() {
        let e = m.e_m(i);
        if e > 0 {
            factors.push(power(&format!("m{i}"), e));
        }
    }
    if factors.is_empty() {
        return write!(f, "{abs}");
    }
    if !abs.is_one() {
        write!(f, "{abs}*")?;
    }
    f.write_str(&factors.join("*"))
}

fn power(var: &str, e: u32) -> String {
    if e == 1 {
        var.to_string()
    } else {
        format!("{var}^{e}")
    }
}

impl fmt::Display for MPoly {
    /// Highest monomials first, e.g. `1/2*n^2 - 1/2*n + m1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            write_coeff_and_monomial(f, c, m, i == 0)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    e_n: u32,
    e_m: Vec<u32>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalJson {
    fn from(r: &Rational) -> Self {
        RationalJson {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl RationalJson {
    pub(crate) fn to_rational(&self) -> std::result::Result<Rational, String> {
        let num: BigInt = self
            .num
            .parse()
            .map_err(|_| format!("bad numerator {:?}", self.num))?;
        let den: BigInt = self
            .den
            .parse()
            .map_err(|_| format!("bad denominator {:?}", self.den))?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Rational::new(num, den))
    }
}

impl Serialize for MPoly {
    /// A list of `{"e_n", "e_m": [e_1..e_K], "num", "den"}` in increasing
    /// monomial order; big integers are decimal strings.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                e_n: m.e_n(),
                e_m: (1..=self.k).map(|i| m.e_m(i)).collect(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        let k = terms.iter().map(|t| t.e_m.len()).max().unwrap_or(0);
        let mut p = MPoly::zero(k);
        for t in terms {
            let c = RationalJson {
                num: t.num,
                den: t.den,
            }
            .to_rational()
            .map_err(D::Error::custom)?;
            p.add_term(Monomial::new(t.e_n, &t.e_m), c);
        }
        Ok(p)
    }
}

/// Univariate polynomial in `n`, coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&rat(x))
    }

    /// The same polynomial as an [`MPoly`] in `n`.
    pub fn to_mpoly(&self, k: usize) -> MPoly {
        MPoly::from_terms(
            k,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| (Monomial::new(e as u32, &[]), c.clone())),
        )
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        UPoly::from_coeffs(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(out)
    }
}

impl UPoly {
    /// `self * x^e`.
    pub fn shift(&self, e: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Rational::zero(); e];
        c.extend(self.coeffs.iter().cloned());
        UPoly { coeffs: c }
    }

    pub fn scale(&self, s: &Rational) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_mpoly(0).fmt(f)
    }
}

impl Serialize for UPoly {
    /// `[{"num", "den"}, ...]`, entry `i` being the coefficient of `n^i`.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<RationalJson> = self.coeffs.iter().map(RationalJson::from).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for UPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<RationalJson>::deserialize(d)?;
        let coeffs = v
            .iter()
            .map(RationalJson::to_rational)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(UPoly::from_coeffs(coeffs))
    }
}

/// The unique polynomial of degree at most `degree_bound` through `points`,
/// by exact elimination on the Vandermonde system. Surplus points are
/// checked and an inconsistency is an error.
pub fn interpolate_univariate(points: &[(i64, Rational)], degree_bound: usize) -> Result<UPoly> {
    let unknowns = degree_bound + 1;
    if points.len() < unknowns {
        return Err(Error::Interpolation(format!(
            "{} points cannot determine a polynomial of degree <= {degree_bound}",
            points.len()
        )));
    }
    let mut xs: Vec<i64> = points.iter().map(|p| p.0).collect();
    xs.sort_unstable();
    if xs.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Interpolation("repeated abscissa".into()));
    }
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|(x, _)| {
            let x = BigInt::from(*x);
            let mut acc = BigInt::one();
            (0..unknowns)
                .map(|_| {
                    let v = Rational::from_integer(acc.clone());
                    acc *= &x;
                    v
                })
                .collect()
        })
        .collect();
    let rhs: Vec<Rational> = points.iter().map(|p| p.1.clone()).collect();
    let coeffs = solve_exact(&rows, &rhs)?;
    Ok(UPoly::from_coeffs(coeffs))
}

/// Binomial coefficient `C(n, r)` as an exact integer (0 when `r > n`).
pub fn binomial(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Best-effort conversion for display and tests.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn n() -> MPoly {
        MPoly::n(0)
    }

    fn m(i: usize) -> MPoly {
        MPoly::m(i)
    }

    #[test]
    fn arithmetic_examples() {
        assert!((&n() + &-&n()).is_zero());
        let p = &m(1) * &m(2);
        assert_eq!(p.weighted_degree(), Some(3));
        assert_eq!(p.to_string(), "m1*m2");
        let s = (&n() + &m(1)).pow(2);
        let expect = &(&n().pow(2) + &(&n() * &m(1)).scale(&rat(2))) + &m(1).pow(2);
        assert_eq!(s, expect);
    }

    #[test]
    fn weighted_degree_examples() {
        assert_eq!(m(3).weighted_degree(), Some(3));
        assert_eq!((&n() * &m(2)).weighted_degree(), Some(3));
        assert_eq!((&n().pow(2) + &m(4)).weighted_degree(), Some(4));
        assert_eq!(MPoly::zero(2).weighted_degree(), None);
    }

    #[test]
    fn evaluate_examples() {
        let vals = |pairs: &[(usize, i64)]| pairs.iter().copied().collect::<BTreeMap<_, _>>();
        let p = &m(1) - &MPoly::one(1);
        assert_eq!(p.evaluate(0, &vals(&[(1, 4)])).unwrap(), rat(3));
        assert_eq!(n().evaluate(7, &vals(&[])).unwrap(), rat(7));
        let q2 = &m(1) + &m(2).scale(&rat(2));
        assert_eq!(q2.evaluate(0, &vals(&[(1, 1), (2, 2)])).unwrap(), rat(5));
        assert!(matches!(
            q2.evaluate(0, &vals(&[(1, 1)])),
            Err(Error::MissingVariable(_))
        ));
        let ct: CycleType = "1^1 2^2".parse().unwrap();
        assert_eq!(q2.evaluate_at(&ct), rat(5));
    }

    #[test]
    fn display_orders_by_weighted_degree() {
        let p = &(&n().pow(2).scale(&ratio(1, 2)) - &n().scale(&ratio(1, 2))) + &m(1);
        assert_eq!(p.to_string(), "1/2*n^2 - 1/2*n + m1");
        assert_eq!(MPoly::zero(0).to_string(), "0");
        assert_eq!((&m(1) - &MPoly::one(1)).to_string(), "m1 - 1");
    }

    #[test]
    fn interpolation_examples() {
        let pts = vec![(0, rat(1)), (1, rat(1))];
        assert_eq!(interpolate_univariate(&pts, 1).unwrap(), UPoly::constant(rat(1)));
        let pts = vec![(1, rat(1)), (2, rat(4)), (3, rat(9))];
        assert_eq!(
            interpolate_univariate(&pts, 2).unwrap(),
            UPoly::from_coeffs(vec![rat(0), rat(0), rat(1)])
        );
        let pts = vec![(2, rat(1)), (3, rat(3)), (4, rat(6))];
        assert_eq!(
            interpolate_univariate(&pts, 2).unwrap(),
            UPoly::from_coeffs(vec![rat(0), ratio(-1, 2), ratio(1, 2)])
        );
    }

    #[test]
    fn interpolation_errors() {
        let pts = vec![(0, rat(0)), (1, rat(1)), (2, rat(5))];
        assert!(matches!(
            interpolate_univariate(&pts, 1),
            Err(Error::Interpolation(_))
        ));
        assert!(interpolate_univariate(&pts[..1], 1).is_err());
        assert!(interpolate_univariate(&[(1, rat(0)), (1, rat(0))], 1).is_err());
    }

    #[test]
    fn json_schema() {
        let p = &n().scale(&ratio(-3, 2)) + &m(2);
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(
            v,
            serde_json::json!([
                {"e_n": 1, "e_m": [0, 0], "num": "-3", "den": "2"},
                {"e_n": 0, "e_m": [0, 1], "num": "1", "den": "1"}
            ])
        );
        let back: MPoly = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
        let u = UPoly::from_coeffs(vec![rat(0), ratio(1, 2)]);
        let back: UPoly = serde_json::from_str(&serde_json::to_string(&u).unwrap()).unwrap();
        assert_eq!(back, u);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    fn arb_poly() -> impl Strategy<Value = MPoly> {
        prop::collection::vec(((0u32..3, 0u32..2, 0u32..2, 0u32..2), -5i64..6, 1i64..4), 0..5).prop_map(
            |terms| {
                MPoly::from_terms(
                    3,
                    terms
                        .into_iter()
                        .map(|((en, a, b, c), num, den)| (Monomial::new(en, &[a, b, c]), ratio(num, den))),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn weighted_degree_of_monomial_products(a in (0u32..3, 0u32..3, 0u32..3), b in (0u32..3, 0u32..3, 0u32..3), c in 1i64..9) {
            let p = MPoly::from_terms(2, [(Monomial::new(a.0, &[a.1, a.2]), rat(c))]);
            let q = MPoly::from_terms(2, [(Monomial::new(b.0, &[b.1, b.2]), ratio(1, c))]);
            prop_assert_eq!(
                (&p * &q).weighted_degree().unwrap(),
                p.weighted_degree().unwrap() + q.weighted_degree().unwrap()
            );
        }

        #[test]
        fn interpolation_reproduces_points(ys in prop::collection::vec((-20i64..20, 1i64..5), 1..6), x0 in -5i64..5) {
            let pts: Vec<(i64, Rational)> = ys.iter().enumerate()
                .map(|(i, (num, den))| (x0 + 2 * i as i64, ratio(*num, *den))).collect();
            let u = interpolate_univariate(&pts, pts.len() - 1).unwrap();
            for (x, y) in &pts {
                prop_assert_eq!(&u.eval_int(*x), y);
            }
        }
    }
}
