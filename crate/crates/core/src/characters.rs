//! Irreducible characters of symmetric groups and the stable basis.
//!
//! Character values come from the Murnaghan–Nakayama rule on beta-sets,
//! memoized per thread on `(partition, remaining cycles)`. The stable
//! decomposition writes a class-function family given by a polynomial in
//! `n, m_1, ..., m_K` as `sum_lambda a^lambda(n) chi^{lambda[n]}` with each
//! `a^lambda` a polynomial in `n`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::solve_exact;
use crate::perm::{factorial, partitions_rev_lex, CycleType};
use crate::poly::{interpolate_univariate, rat, MPoly, Monomial, Rational, UPoly};

/// An integer partition `lambda_1 >= lambda_2 >= ... > 0`.
///
/// Ordered by size first, then reverse-lexicographically, so `(3)` sorts
/// before `(2,1)` before `(1,1,1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerPartition {
    parts: Vec<u32>,
}

impl IntegerPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(IntegerPartition { parts })
    }

    pub fn empty() -> Self {
        IntegerPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Partitions of `n` in reverse-lexicographic order.
    pub fn all_of(n: usize) -> Vec<IntegerPartition> {
        partitions_rev_lex(n)
            .into_iter()
            .map(|parts| IntegerPartition { parts })
            .collect()
    }

    /// All partitions of size at most `n`, in this type's order.
    pub fn all_up_to(n: usize) -> Vec<IntegerPartition> {
        (0..=n).flat_map(IntegerPartition::all_of).collect()
    }

    /// The cycle type with these parts as cycle lengths.
    pub fn to_cycle_type(&self) -> Result<CycleType> {
        CycleType::from_cycle_lengths(&self.parts)
    }
}

impl Ord for IntegerPartition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for IntegerPartition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl std::str::FromStr for IntegerPartition {
    type Err = Error;

    /// `"(2,1)"`, `"2,1"`, `"2 1"` or `"()"`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IntegerPartition::new(parts)
    }
}

/// `lambda[n] = (n - |lambda|, lambda_1, ..., lambda_l)`, defined when
/// `n - |lambda| >= lambda_1`.
pub fn pad_partition(lambda: &IntegerPartition, n: usize) -> Result<IntegerPartition> {
    let size = lambda.size();
    let first = lambda.parts.first().copied().unwrap_or(0) as usize;
    if n < size || n - size < first {
        return Err(Error::Padding {
            lambda: lambda.parts.clone(),
            n: n as u32,
        });
    }
    let mut parts = Vec::with_capacity(lambda.len() + 1);
    if n > size {
        parts.push((n - size) as u32);
    }
    parts.extend_from_slice(&lambda.parts);
    Ok(IntegerPartition { parts })
}

type MnKey = (Vec<u32>, Vec<u32>);

thread_local! {
    static MN_CACHE: RefCell<HashMap<MnKey, i64>> = RefCell::new(HashMap::new());
}

/// `chi^lambda` evaluated on the class `ct`.
pub fn mn_character(lambda: &IntegerPartition, ct: &CycleType) -> Result<i64> {
    if lambda.size() != ct.n() {
        return Err(Error::SizeMismatch(format!(
            "partition {lambda} of {} against cycle type {ct} of {}",
            lambda.size(),
            ct.n()
        )));
    }
    let cycles = ct.cycle_lengths();
    Ok(MN_CACHE.with(|c| mn_rec(&lambda.parts, &cycles, &mut c.borrow_mut())))
}

/// Murnaghan–Nakayama: strip a rim hook of length `cycles[0]` in every
/// possible way and recurse on the remaining cycles.
fn mn_rec(parts: &[u32], cycles: &[u32], cache: &mut HashMap<MnKey, i64>) -> i64 {
    if cycles.is_empty() {
        return if parts.is_empty() { 1 } else { 0 };
    }
    // A single row or column, or only fixed points left: closed forms.
    if cycles.iter().all(|&c| c == 1) {
        return hook_dimension(parts);
    }
    let key = (parts.to_vec(), cycles.to_vec());
    if let Some(&v) = cache.get(&key) {
        return v;
    }
    let h = cycles[0];
    let rest = &cycles[1..];
    let len = parts.len() as u32;
    // beta-set: lambda_i + (len - i), strictly decreasing
    let beta: Vec<u32> = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i as u32)
        .collect();
    let mut total = 0i64;
    for i in 0..beta.len() {
        let b = beta[i];
        if b < h {
            continue;
        }
        let target = b - h;
        if beta.contains(&target) {
            continue;
        }
        // beads strictly between target and b give the leg length
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let new_parts: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j as u32))
            .filter(|&p| p > 0)
            .collect();
        let v = mn_rec(&new_parts, rest, cache);
        if between % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    cache.insert(key, total);
    total
}

/// Number of standard Young tableaux, `n! / prod hooks`.
fn hook_dimension(parts: &[u32]) -> i64 {
    let n: u32 = parts.iter().sum();
    let mut num = factorial(n);
    let mut hooks = num_bigint::BigUint::from(1u32);
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = parts[i + 1..].iter().filter(|&&r| r > j).count() as u32;
            hooks *= arm + leg + 1;
        }
    }
    num /= hooks;
    i64::try_from(num).expect("character degree fits in i64")
}

/// A class function on `S_n`, one value per cycle type, stored in the order
/// of [`CycleType::enumerate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    classes: Vec<CycleType>,
    values: Vec<Rational>,
}

impl ClassFunction {
    pub fn from_fn<F: FnMut(&CycleType) -> Rational>(n: usize, mut f: F) -> Self {
        let classes = CycleType::enumerate(n);
        let values = classes.iter().map(&mut f).collect();
        ClassFunction { n, classes, values }
    }

    pub fn try_from_fn<F: FnMut(&CycleType) -> Result<Rational>>(n: usize, mut f: F) -> Result<Self> {
        let classes = CycleType::enumerate(n);
        let values = classes.iter().map(&mut f).collect::<Result<_>>()?;
        Ok(ClassFunction { n, classes, values })
    }

    pub fn character(lambda: &IntegerPartition) -> Result<Self> {
        ClassFunction::try_from_fn(lambda.size(), |ct| mn_character(lambda, ct).map(rat))
    }

    /// The trivial character.
    pub fn trivial(n: usize) -> Self {
        ClassFunction::from_fn(n, |_| rat(1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CycleType, &Rational)> {
        self.classes.iter().zip(&self.values)
    }

    pub fn get(&self, ct: &CycleType) -> Option<&Rational> {
        self.classes.iter().position(|c| c == ct).map(|i| &self.values[i])
    }
}

/// `<f, g> = (1/n!) sum_ct |C_ct| f(ct) g(ct)`.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<Rational> {
    if f.n != g.n {
        return Err(Error::SizeMismatch(format!(
            "class functions on S_{} and S_{}",
            f.n, g.n
        )));
    }
    let mut acc = Rational::zero();
    for ((ct, a), b) in f.classes.iter().zip(&f.values).zip(&g.values) {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        acc += a * b * BigInt::from(ct.class_size());
    }
    Ok(acc / BigInt::from(factorial(f.n as u32)))
}

/// Character table of `S_n`: rows indexed by partitions, columns by cycle
/// types, both in reverse-lexicographic order.
pub fn character_table(n: usize) -> (Vec<IntegerPartition>, Vec<CycleType>, Vec<Vec<i64>>) {
    let lambdas = IntegerPartition::all_of(n);
    let classes = CycleType::enumerate(n);
    let rows = lambdas
        .iter()
        .map(|l| {
            classes
                .iter()
                .map(|ct| mn_character(l, ct).expect("sizes agree"))
                .collect()
        })
        .collect();
    (lambdas, classes, rows)
}

/// Exponent vectors `(a_1, ..., a_r)` with `sum i * a_i <= r`.
fn weighted_exponents(r: usize, first_var: usize) -> Vec<Vec<u32>> {
    // Each such vector is a partition of some j <= r read as multiplicities;
    // restrict to parts >= first_var.
    let mut out = Vec::new();
    for j in 0..=r {
        for p in partitions_rev_lex(j) {
            if p.iter().any(|&x| (x as usize) < first_var) {
                continue;
            }
            let mut e = vec![0u32; r];
            for x in p {
                e[x as usize - 1] += 1;
            }
            out.push(e);
        }
    }
    out
}

/// The character polynomial `P_mu(m_1, ..., m_r)`, `r = |mu|`, agreeing with
/// `chi^{mu[n]}` on every class of `S_n` for `n >= 2r`.
///
/// Found by exact interpolation on the weighted monomial basis of degree at
/// most `r`. Sample classes are `1^{m_1} 2^{m_2} ... r^{m_r}` with
/// `sum_{i>=2} i m_i <= r` and `m_1` in `2r..=3r`; the resulting system has
/// full column rank (checked), surplus rows are checked for consistency, and
/// the answer is validated on classes with `m_1 = 3r+1, 3r+2`.
pub fn character_polynomial(mu: &IntegerPartition) -> Result<MPoly> {
    let r = mu.size();
    if r == 0 {
        return Ok(MPoly::one(0));
    }
    let basis = weighted_exponents(r, 1);
    let rests = weighted_exponents(r, 2);

    let sample = |m1: u32, rest: &[u32]| -> Result<(CycleType, Rational)> {
        let mut mult = rest.to_vec();
        mult[0] = m1;
        let ct = CycleType::from_multiplicities(mult)?;
        let lam = pad_partition(mu, ct.n())?;
        let v = mn_character(&lam, &ct)?;
        Ok((ct, rat(v)))
    };
    let row_for = |ct: &CycleType| -> Vec<Rational> {
        basis
            .iter()
            .map(|e| {
                let mut v = BigInt::from(1);
                for (i, &a) in e.iter().enumerate() {
                    if a > 0 {
                        v *= BigInt::from(ct.m(i + 1)).pow(a);
                    }
                }
                Rational::from_integer(v)
            })
            .collect()
    };

    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for rest in &rests {
        for m1 in 2 * r..=3 * r {
            let (ct, v) = sample(m1 as u32, rest)?;
            rows.push(row_for(&ct));
            rhs.push(v);
        }
    }
    let coeffs = solve_exact(&rows, &rhs)
        .map_err(|e| Error::Internal(format!("character polynomial for {mu}: {e}")))?;
    let poly = MPoly::from_terms(r, basis.iter().zip(coeffs).map(|(e, c)| (Monomial::new(0, e), c)));

    for rest in &rests {
        for m1 in [3 * r + 1, 3 * r + 2] {
            let (ct, v) = sample(m1 as u32, rest)?;
            if poly.evaluate_at(&ct) != v {
                return Err(Error::Internal(format!(
                    "character polynomial for {mu} fails held-out class {ct}"
                )));
            }
        }
    }
    Ok(poly)
}

/// Coefficients `a^lambda(n)` of `sum_{|lambda| <= dk} a^lambda(n) chi^{lambda[n]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableDecomposition {
    dk: usize,
    coeffs: BTreeMap<IntegerPartition, UPoly>,
}

impl StableDecomposition {
    /// Validates `deg a^lambda <= dk - |lambda|` and `|lambda| <= dk`.
    pub fn new(dk: usize, coeffs: BTreeMap<IntegerPartition, UPoly>) -> Result<Self> {
        for (lam, a) in &coeffs {
            if lam.size() > dk {
                return Err(Error::Internal(format!("{lam} exceeds dk = {dk}")));
            }
            if a.degree().is_some_and(|d| d > dk - lam.size()) {
                return Err(Error::Internal(format!(
                    "a^{lam} = {a} has degree above {}",
                    dk - lam.size()
                )));
            }
        }
        Ok(StableDecomposition { dk, coeffs })
    }

    pub fn dk(&self) -> usize {
        self.dk
    }

    /// All stored `(lambda, a^lambda)`, zero coefficients included.
    pub fn terms(&self) -> impl Iterator<Item = (&IntegerPartition, &UPoly)> {
        self.coeffs.iter()
    }

    pub fn nonzero_terms(&self) -> impl Iterator<Item = (&IntegerPartition, &UPoly)> {
        self.coeffs.iter().filter(|(_, a)| !a.is_zero())
    }

    pub fn coefficient(&self, lambda: &IntegerPartition) -> UPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// `a^∅(n)`: for `n >= 2dk` this is the average over all of `S_n`.
    pub fn a_empty(&self) -> UPoly {
        self.coefficient(&IntegerPartition::empty())
    }

    /// `sum_lambda a^lambda(n) chi^{lambda[n]}` as a class function on `S_n`.
    pub fn synthesize(&self, n: usize) -> Result<ClassFunction> {
        let mut chars = Vec::new();
        for (lam, a) in self.nonzero_terms() {
            let padded = pad_partition(lam, n)?;
            chars.push((padded, a.eval_int(n as i64)));
        }
        ClassFunction::try_from_fn(n, |ct| {
            let mut acc = Rational::zero();
            for (lam, a) in &chars {
                acc += a * rat(mn_character(lam, ct)?);
            }
            Ok(acc)
        })
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    lambda: Vec<u32>,
    a: UPoly,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    dk: usize,
    terms: Vec<TermJson>,
}

impl Serialize for StableDecomposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DecompositionJson {
            dk: self.dk,
            terms: self
                .coeffs
                .iter()
                .map(|(l, a)| TermJson {
                    lambda: l.parts.clone(),
                    a: a.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for StableDecomposition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DecompositionJson::deserialize(d)?;
        let mut coeffs = BTreeMap::new();
        for t in raw.terms {
            let lam = IntegerPartition::new(t.lambda).map_err(D::Error::custom)?;
            coeffs.insert(lam, t.a);
        }
        StableDecomposition::new(raw.dk, coeffs).map_err(D::Error::custom)
    }
}

/// Decomposes the family `n -> M(n, m(ct))` into stable characters.
///
/// For `n0 = 2dk, ..., 3dk` the coefficient `a^lambda(n0)` is the inner
/// product of `M` on `S_{n0}` with `chi^{lambda[n0]}`; each `a^lambda` is then
/// interpolated with degree bound `dk - |lambda|` (surplus points checked).
/// At every sampled `n0` and at the held-out `n0 = 3dk + 1` the synthesized
/// class function must reproduce `M` on every class.
pub fn decompose_stable(m: &MPoly, dk: usize) -> Result<StableDecomposition> {
    if dk == 0 {
        return Err(Error::Internal("decompose_stable needs dk >= 1".into()));
    }
    if let Some(deg) = m.weighted_degree() {
        if deg as usize > dk {
            return Err(Error::Internal(format!(
                "polynomial has weighted degree {deg} > dk = {dk}"
            )));
        }
    }
    let lambdas = IntegerPartition::all_up_to(dk);
    let fit: Vec<usize> = (2 * dk..=3 * dk).collect();
    let mut samples: Vec<Vec<(i64, Rational)>> = vec![Vec::new(); lambdas.len()];
    for &n0 in &fit {
        let target = ClassFunction::from_fn(n0, |ct| m.evaluate_at(ct));
        for (li, lam) in lambdas.iter().enumerate() {
            let chi = ClassFunction::character(&pad_partition(lam, n0)?)?;
            samples[li].push((n0 as i64, inner_product(&target, &chi)?));
        }
    }
    let mut coeffs = BTreeMap::new();
    for (lam, pts) in lambdas.iter().zip(&samples) {
        let a = interpolate_univariate(pts, dk - lam.size()).map_err(|e| {
            Error::Internal(format!(
                "a^{lam} is not a polynomial of degree <= {}: {e}",
                dk - lam.size()
            ))
        })?;
        coeffs.insert(lam.clone(), a);
    }
    let dec = StableDecomposition::new(dk, coeffs)?;
    for n0 in fit.into_iter().chain([3 * dk + 1]) {
        let synth = dec.synthesize(n0)?;
        for (ct, v) in synth.iter() {
            if *v != m.evaluate_at(ct) {
                return Err(Error::Internal(format!(
                    "stable decomposition residual at n = {n0}, class {ct}: {} vs {}",
                    v,
                    m.evaluate_at(ct)
                )));
            }
        }
    }
    Ok(dec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn part(s: &str) -> IntegerPartition {
        s.parse().unwrap()
    }

    fn ct(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    #[test]
    fn mn_examples() {
        for n in 1..=7 {
            for c in CycleType::enumerate(n) {
                let triv = IntegerPartition::new(vec![n as u32]).unwrap();
                let sign = IntegerPartition::new(vec![1; n]).unwrap();
                assert_eq!(mn_character(&triv, &c).unwrap(), 1);
                assert_eq!(mn_character(&sign, &c).unwrap(), c.sign());
            }
        }
        assert_eq!(mn_character(&part("2,1"), &ct("1^3")).unwrap(), 2);
        assert_eq!(mn_character(&part("2,1"), &ct("3^1")).unwrap(), -1);
        assert_eq!(mn_character(&part("4,2"), &ct("1^6")).unwrap(), 9);
        assert!(mn_character(&part("2,1"), &ct("1^4")).is_err());
    }

    #[test]
    fn standard_character_counts_fixed_points() {
        for n in 2..=7u32 {
            let lam = IntegerPartition::new(vec![n - 1, 1]).unwrap();
            for c in CycleType::enumerate(n as usize) {
                assert_eq!(mn_character(&lam, &c).unwrap(), c.m(1) as i64 - 1);
            }
        }
    }

    #[test]
    fn known_s4_table() {
        // rows (4),(3,1),(2,2),(2,1,1),(1^4); columns 4, 13, 22, 1^2 2, 1^4
        let (_, _, t) = character_table(4);
        assert_eq!(
            t,
            vec![
                vec![1, 1, 1, 1, 1],
                vec![-1, 0, -1, 1, 3],
                vec![0, -1, 2, 0, 2],
                vec![1, 0, -1, -1, 3],
                vec![-1, 1, 1, -1, 1],
            ]
        );
    }

    #[test]
    fn characters_match_permutation_module_counts() {
        // chi^{(n-2,2)} + chi^{(n-1,1)} + chi^{(n)} = number of fixed 2-subsets
        for n in 4..=7usize {
            let lam2 = IntegerPartition::new(vec![n as u32 - 2, 2]).unwrap();
            let lam1 = IntegerPartition::new(vec![n as u32 - 1, 1]).unwrap();
            for pi in Permutation::all(n).step_by(13) {
                let c = pi.cycle_type();
                let fixed_pairs = (1..=n as u32)
                    .flat_map(|a| (a + 1..=n as u32).map(move |b| (a, b)))
                    .filter(|&(a, b)| {
                        let (x, y) = (pi.apply(a), pi.apply(b));
                        (x == a && y == b) || (x == b && y == a)
                    })
                    .count() as i64;
                let total = mn_character(&lam2, &c).unwrap() + mn_character(&lam1, &c).unwrap() + 1;
                assert_eq!(total, fixed_pairs);
            }
        }
    }

    #[test]
    fn padding() {
        assert_eq!(pad_partition(&IntegerPartition::empty(), 5).unwrap(), part("5"));
        assert_eq!(pad_partition(&part("1"), 4).unwrap(), part("3,1"));
        assert_eq!(pad_partition(&part("2,1"), 8).unwrap(), part("5,2,1"));
        assert!(matches!(
            pad_partition(&part("2,1"), 4),
            Err(Error::Padding { .. })
        ));
        assert_eq!(pad_partition(&part("2,1"), 5).unwrap(), part("2,2,1"));
    }

    #[test]
    fn inner_product_examples() {
        let c21 = ClassFunction::character(&part("2,1")).unwrap();
        let c3 = ClassFunction::character(&part("3")).unwrap();
        assert_eq!(inner_product(&c21, &c21).unwrap(), rat(1));
        assert_eq!(inner_product(&c3, &c21).unwrap(), rat(0));
        let one = ClassFunction::trivial(5);
        assert_eq!(inner_product(&one, &one).unwrap(), rat(1));
        assert!(inner_product(&one, &c3).is_err());
    }

    #[test]
    fn orthonormality_up_to_8() {
        for n in 1..=8 {
            let chars: Vec<ClassFunction> = IntegerPartition::all_of(n)
                .iter()
                .map(|l| ClassFunction::character(l).unwrap())
                .collect();
            for (i, a) in chars.iter().enumerate() {
                for (j, b) in chars.iter().enumerate() {
                    let expect = if i == j { 1 } else { 0 };
                    assert_eq!(inner_product(a, b).unwrap(), rat(expect), "n={n}");
                }
            }
        }
    }

    #[test]
    fn column_orthogonality_up_to_6() {
        for n in 1..=6 {
            let (_, classes, t) = character_table(n);
            for (a, ca) in classes.iter().enumerate() {
                for (b, _) in classes.iter().enumerate() {
                    let s: i64 = t.iter().map(|row| row[a] * row[b]).sum();
                    let expect = if a == b {
                        (factorial(n as u32) / ca.class_size()).try_into().unwrap()
                    } else {
                        0i64
                    };
                    assert_eq!(s, expect);
                }
            }
        }
    }

    #[test]
    fn character_polynomial_examples() {
        assert_eq!(
            character_polynomial(&IntegerPartition::empty()).unwrap(),
            MPoly::one(0)
        );
        let p1 = character_polynomial(&part("1")).unwrap();
        assert_eq!(p1, &MPoly::m(1) - &MPoly::one(1));
        let p2 = character_polynomial(&part("2")).unwrap();
        assert_eq!(p2.evaluate_at(&ct("1^6")), rat(9));
    }

    #[test]
    fn character_polynomials_agree_with_padded_characters() {
        for r in 0..=4 {
            for mu in IntegerPartition::all_of(r) {
                let p = character_polynomial(&mu).unwrap();
                assert_eq!(p.weighted_degree(), Some(r as u32), "{mu}");
                assert!(p.is_free_of_n());
                for n in (2 * r).max(1)..=2 * r + 3 {
                    let lam = pad_partition(&mu, n).unwrap();
                    for c in CycleType::enumerate(n) {
                        assert_eq!(
                            p.evaluate_at(&c),
                            rat(mn_character(&lam, &c).unwrap()),
                            "mu={mu} n={n} ct={c}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let d = decompose_stable(&MPoly::one(0), 1).unwrap();
        assert_eq!(d.a_empty(), UPoly::constant(rat(1)));
        assert!(d.coefficient(&part("1")).is_zero());

        let d = decompose_stable(&MPoly::m(1), 1).unwrap();
        assert_eq!(d.a_empty(), UPoly::constant(rat(1)));
        assert_eq!(d.coefficient(&part("1")), UPoly::constant(rat(1)));
    }

    #[test]
    fn decompose_rejects_non_stable_input() {
        assert!(decompose_stable(&MPoly::m(3), 2).is_err());
        // m_1 m_2 has weighted degree 3 but is fine at dk = 3
        assert!(decompose_stable(&(&MPoly::m(1) * &MPoly::m(2)), 3).is_ok());
    }

    #[test]
    fn decomposition_is_left_inverse_of_synthesis() {
        // a^lambda chosen by a fixed pseudo-random rule, degree <= dk - |lambda|
        let dk = 3;
        let mut coeffs = BTreeMap::new();
        let mut seed = 7i64;
        for lam in IntegerPartition::all_up_to(dk) {
            let deg = dk - lam.size();
            let c: Vec<Rational> = (0..=deg)
                .map(|_| {
                    seed = (seed * 1103515245 + 12345) % 2147483648;
                    crate::poly::ratio(seed % 11 - 5, 1 + seed % 3)
                })
                .collect();
            coeffs.insert(lam, UPoly::from_coeffs(c));
        }
        let dec = StableDecomposition::new(dk, coeffs).unwrap();
        // Realize the family as a polynomial: sum a^lambda(n) P_lambda(m).
        let mut m = MPoly::zero(dk);
        for (lam, a) in dec.terms() {
            let p = character_polynomial(lam).unwrap();
            m = &m + &(&a.to_mpoly(dk) * &p);
        }
        let back = decompose_stable(&m, dk).unwrap();
        assert_eq!(back, dec);
    }

    #[test]
    fn json_schema() {
        let d = decompose_stable(&MPoly::m(1), 1).unwrap();
        let v = serde_json::to_value(&d).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "dk": 1,
                "terms": [
                    {"lambda": [], "a": [{"num": "1", "den": "1"}]},
                    {"lambda": [1], "a": [{"num": "1", "den": "1"}]}
                ]
            })
        );
        let back: StableDecomposition = serde_json::from_value(v).unwrap();
        assert_eq!(back, d);
    }
}
