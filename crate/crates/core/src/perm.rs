//! Permutations, cycle types and pattern occurrences.
//!
//! Permutations are stored in one-line notation with values `1..=n`. A
//! [`CycleType`] records the multiplicities `m_i` of `i`-cycles and indexes
//! the conjugacy classes of `S_n`. [`GeneralizedPattern`] is a possibly
//! non-injective pattern, always normalized to a surjection onto `1..=r`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation (values `1..=n`).
    pub fn new(word: Vec<u32>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            let idx = v as usize;
            if idx == 0 || idx > n || seen[idx - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{word:?} is not a bijection on 1..={n}"
                )));
            }
            seen[idx - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "identity of S_0 is not supported");
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Image of `i` (1-based).
    #[inline]
    pub fn apply(&self, i: u32) -> u32 {
        self.word[i as usize - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { word: inv }
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(format!(
                "cannot compose permutations of sizes {} and {}",
                self.n(),
                other.n()
            )));
        }
        Ok(Permutation {
            word: other.word.iter().map(|&i| self.apply(i)).collect(),
        })
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.word.len();
        let mut seen = vec![false; n];
        let mut mult: Vec<u32> = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                i = self.word[i] as usize - 1;
            }
            if mult.len() < len {
                mult.resize(len, 0);
            }
            mult[len - 1] += 1;
        }
        CycleType { mult }
    }

    /// Parses one-line notation: `"231"` (single digits), `"4 1 5 2 3"` or
    /// `"10,1,2,..."`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Vec<u32> = if s.contains(',') || s.contains(char::is_whitespace) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad permutation entry {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("bad permutation character {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }

    /// All permutations of `S_k` in lexicographic order.
    pub fn all(k: usize) -> Permutations {
        Permutations::new(k)
    }
}

impl fmt::Display for Permutation {
    /// One-line notation: `231`, or `10,1,2,...` once an entry exceeds 9.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.word.len() > 9 { "," } else { "" };
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s)
    }
}

/// Rearranges `a` into its lexicographic successor. Returns `false` (and
/// leaves `a` sorted ascending) when `a` was the last arrangement.
pub fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Lexicographic iterator over `S_n`.
pub struct Permutations {
    current: Option<Vec<u32>>,
}

impl Permutations {
    fn new(n: usize) -> Self {
        Permutations {
            current: (n >= 1).then(|| (1..=n as u32).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.current = Some(succ);
        }
        Some(Permutation { word: cur })
    }
}

/// Number of occurrences of `sigma` as a pattern in `pi`: index tuples
/// `i_1 < ... < i_k` whose values are order-isomorphic to `sigma`.
pub fn pattern_occurrences(sigma: &Permutation, pi: &Permutation) -> u64 {
    let k = sigma.n();
    let n = pi.n();
    if k > n {
        return 0;
    }
    let s = sigma.word();
    let p = pi.word();
    // Depth-first over increasing index tuples; a prefix is extended only if
    // the new value compares with every chosen value as sigma prescribes.
    let mut chosen = vec![0usize; k];
    let mut count = 0u64;
    let mut depth = 0usize;
    let mut next_start = 0usize;
    loop {
        let mut advanced = false;
        // k - depth - 1 entries must still fit after position idx
        let last = n - (k - depth);
        let mut idx = next_start;
        while idx <= last {
            let v = p[idx];
            let ok = (0..depth).all(|a| (p[chosen[a]] < v) == (s[a] < s[depth]));
            if ok {
                chosen[depth] = idx;
                if depth + 1 == k {
                    count += 1;
                    idx += 1;
                    continue;
                }
                depth += 1;
                next_start = idx + 1;
                advanced = true;
                break;
            }
            idx += 1;
        }
        if advanced {
            continue;
        }
        if depth == 0 {
            break;
        }
        depth -= 1;
        next_start = chosen[depth] + 1;
    }
    count
}

/// A cycle type `1^{m_1} 2^{m_2} ...`, equivalently a partition of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    /// `mult[i - 1] = m_i`, no trailing zeros.
    mult: Vec<u32>,
}

impl CycleType {
    /// From multiplicities `[m_1, m_2, ...]`.
    pub fn from_multiplicities(mut mult: Vec<u32>) -> Result<Self> {
        while mult.last() == Some(&0) {
            mult.pop();
        }
        if mult.is_empty() {
            return Err(Error::InvalidCycleType("empty cycle type".into()));
        }
        Ok(CycleType { mult })
    }

    /// From a list of cycle lengths in any order.
    pub fn from_cycle_lengths(lengths: &[u32]) -> Result<Self> {
        let mut mult = Vec::new();
        for &l in lengths {
            if l == 0 {
                return Err(Error::InvalidCycleType("cycle of length 0".into()));
            }
            let l = l as usize;
            if mult.len() < l {
                mult.resize(l, 0);
            }
            mult[l - 1] += 1;
        }
        CycleType::from_multiplicities(mult)
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        CycleType { mult: vec![n as u32] }
    }

    /// `m_i`, zero beyond the largest cycle.
    pub fn m(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.mult.get(i - 1).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    pub fn n(&self) -> usize {
        self.mult
            .iter()
            .enumerate()
            .map(|(i, &m)| (i + 1) * m as usize)
            .sum()
    }

    pub fn max_cycle(&self) -> usize {
        self.mult.len()
    }

    /// Cycle lengths, weakly decreasing.
    pub fn cycle_lengths(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (i, &m) in self.mult.iter().enumerate().rev() {
            out.extend(std::iter::repeat_n(i as u32 + 1, m as usize));
        }
        out
    }

    /// Number of elements of `S_n` with this cycle type:
    /// `n! / prod_i (i^{m_i} m_i!)`.
    pub fn class_size(&self) -> BigUint {
        let mut num = factorial(self.n() as u32);
        let mut den = BigUint::one();
        for (i, &m) in self.mult.iter().enumerate() {
            den *= BigUint::from(i as u32 + 1).pow(m);
            den *= factorial(m);
        }
        num /= &den;
        num
    }

    /// Canonical representative: cycles laid out on consecutive blocks in
    /// order of increasing length, each block `a..=b` mapped `a -> a+1 ->
    /// ... -> b -> a`.
    pub fn representative(&self) -> Permutation {
        let mut word = Vec::with_capacity(self.n());
        let mut start = 1u32;
        for (i, &m) in self.mult.iter().enumerate() {
            let len = i as u32 + 1;
            for _ in 0..m {
                for j in 1..len {
                    word.push(start + j);
                }
                word.push(start);
                start += len;
            }
        }
        Permutation { word }
    }

    /// All cycle types of `n`, partitions in reverse-lexicographic order
    /// starting from the single `n`-cycle.
    pub fn enumerate(n: usize) -> Vec<CycleType> {
        partitions_rev_lex(n)
            .into_iter()
            .map(|p| CycleType::from_cycle_lengths(&p).expect("nonempty partition"))
            .collect()
    }

    /// `sign = (-1)^{sum (i-1) m_i}`.
    pub fn sign(&self) -> i64 {
        let odd: u32 = self.mult.iter().enumerate().map(|(i, &m)| (i as u32) * m).sum();
        if odd.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &m) in self.mult.iter().enumerate() {
            if m == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}^{}", i + 1, m)?;
        }
        Ok(())
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Parses `"1^a 2^b ..."`; a bare `"i"` means `i^1`.
    fn from_str(s: &str) -> Result<Self> {
        let mut mult: Vec<u32> = Vec::new();
        for tok in s.split_whitespace() {
            let (len, m) = match tok.split_once('^') {
                Some((l, m)) => (l, m),
                None => (tok, "1"),
            };
            let len: usize = len
                .parse()
                .map_err(|_| Error::Parse(format!("bad cycle length in {tok:?}")))?;
            let m: u32 = m
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity in {tok:?}")))?;
            if len == 0 {
                return Err(Error::InvalidCycleType("cycle of length 0".into()));
            }
            if mult.len() < len {
                mult.resize(len, 0);
            }
            if mult[len - 1] != 0 {
                return Err(Error::Parse(format!("cycle length {len} listed twice")));
            }
            mult[len - 1] = m;
        }
        CycleType::from_multiplicities(mult)
    }
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Partitions of `n` (weakly decreasing parts) in reverse-lexicographic order.
pub fn partitions_rev_lex(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut cur = vec![n as u32];
    loop {
        out.push(cur.clone());
        // rightmost part larger than 1
        let Some(pos) = cur.iter().rposition(|&p| p > 1) else {
            break;
        };
        let ones = (cur.len() - pos - 1) as u32;
        let v = cur[pos] - 1;
        cur.truncate(pos);
        let mut rest = ones + 1 + v;
        while rest > 0 {
            let take = rest.min(v);
            cur.push(take);
            rest -= take;
        }
    }
    out
}

/// A pattern `[K] -> [r]` that is surjective onto `{1, ..., r}`.
///
/// A word is *sorted as* the pattern when its entries compare (strictly less,
/// equal, strictly greater) exactly as the pattern's entries do. Two patterns
/// inducing the same predicate have the same normal form, so equality of
/// `GeneralizedPattern` values is equality of predicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneralizedPattern {
    values: Vec<u32>,
}

impl GeneralizedPattern {
    /// Validates that `values` is a surjection onto `1..=r`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let r = values.iter().copied().max().unwrap_or(0) as usize;
        let mut hit = vec![false; r];
        for &v in &values {
            if v == 0 {
                return Err(Error::InvalidPattern(format!("{values:?} contains 0")));
            }
            hit[v as usize - 1] = true;
        }
        if hit.iter().any(|h| !h) {
            return Err(Error::InvalidPattern(format!(
                "{values:?} is not surjective onto 1..={r}"
            )));
        }
        Ok(GeneralizedPattern { values })
    }

    /// The empty pattern (`K = 0`).
    pub fn empty() -> Self {
        GeneralizedPattern { values: Vec::new() }
    }

    /// The normal form of an arbitrary word: its standardization onto `1..=r`.
    pub fn normalize(word: &[u32]) -> Self {
        let mut distinct: Vec<u32> = word.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        GeneralizedPattern {
            values: word
                .iter()
                .map(|v| distinct.binary_search(v).expect("present") as u32 + 1)
                .collect(),
        }
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        GeneralizedPattern {
            values: p.word().to_vec(),
        }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Length `K`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Size `r` of the image.
    pub fn rank(&self) -> usize {
        self.values.iter().copied().max().unwrap_or(0) as usize
    }
}

impl fmt::Display for GeneralizedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// `word_a < word_b` iff `pattern_a < pattern_b`, for all positions `a, b`.
pub fn is_sorted_as(word: &[u32], pattern: &GeneralizedPattern) -> Result<bool> {
    if word.len() != pattern.len() {
        return Err(Error::SizeMismatch(format!(
            "word of length {} against pattern of length {}",
            word.len(),
            pattern.len()
        )));
    }
    let p = pattern.values();
    for a in 0..word.len() {
        for b in 0..word.len() {
            if (word[a] < word[b]) != (p[a] < p[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn brute_occurrences(sigma: &Permutation, pi: &Permutation) -> u64 {
        let k = sigma.n();
        let n = pi.n();
        let mut count = 0;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let vals: Vec<u32> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pi.word()[i])
                .collect();
            if GeneralizedPattern::normalize(&vals).values() == sigma.word() {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn occurrence_examples() {
        assert_eq!(pattern_occurrences(&perm("21"), &Permutation::identity(5)), 0);
        assert_eq!(pattern_occurrences(&perm("123"), &perm("123456")), 20);
        assert_eq!(pattern_occurrences(&perm("231"), &perm("41523")), 2);
        assert_eq!(brute_occurrences(&perm("231"), &perm("41523")), 2);
        assert_eq!(pattern_occurrences(&perm("1234"), &perm("21")), 0);
    }

    #[test]
    fn occurrences_match_subset_enumeration() {
        for pi in Permutation::all(6).step_by(7) {
            for k in 1..=4 {
                for sigma in Permutation::all(k) {
                    assert_eq!(
                        pattern_occurrences(&sigma, &pi),
                        brute_occurrences(&sigma, &pi),
                        "sigma={sigma} pi={pi}"
                    );
                }
            }
        }
    }

    #[test]
    fn sorted_as_examples() {
        let p12 = GeneralizedPattern::new(vec![1, 2]).unwrap();
        let p11 = GeneralizedPattern::new(vec![1, 1]).unwrap();
        let p132 = GeneralizedPattern::new(vec![1, 3, 2]).unwrap();
        assert!(is_sorted_as(&[3, 7], &p12).unwrap());
        assert!(is_sorted_as(&[5, 5], &p11).unwrap());
        assert!(!is_sorted_as(&[5, 5], &p12).unwrap());
        assert!(is_sorted_as(&[2, 9, 4], &p132).unwrap());
        assert!(is_sorted_as(&[2, 9], &p132).is_err());
    }

    #[test]
    fn pattern_validation() {
        assert!(GeneralizedPattern::new(vec![1, 3]).is_err());
        assert!(GeneralizedPattern::new(vec![0, 1]).is_err());
        assert_eq!(
            GeneralizedPattern::normalize(&[7, 2, 7, 5]).values(),
            &[3, 1, 3, 2]
        );
        assert_eq!(GeneralizedPattern::empty().rank(), 0);
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(4).cycle_type().to_string(), "1^4");
        assert_eq!(perm("21435").cycle_type().to_string(), "1^1 2^2");
        assert_eq!(perm("23451").cycle_type().to_string(), "5^1");
    }

    #[test]
    fn class_size_examples() {
        let cs = |s: &str| s.parse::<CycleType>().unwrap().class_size();
        assert_eq!(cs("1^3"), BigUint::from(1u32));
        assert_eq!(cs("1^1 2^1"), BigUint::from(3u32));
        assert_eq!(cs("3^1"), BigUint::from(2u32));
    }

    #[test]
    fn representative_examples() {
        let rep = |s: &str| s.parse::<CycleType>().unwrap().representative().to_string();
        assert_eq!(rep("1^2"), "12");
        assert_eq!(rep("2^1"), "21");
        assert_eq!(rep("1^1 3^1"), "1342");
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(CycleType::enumerate(3).len(), 3);
        assert_eq!(CycleType::enumerate(5).len(), 7);
        assert_eq!(CycleType::enumerate(12).len(), 77);
        let names: Vec<String> = CycleType::enumerate(4).iter().map(|c| c.to_string()).collect();
        assert_eq!(names, ["4^1", "1^1 3^1", "2^2", "1^2 2^1", "1^4"]);
    }

    #[test]
    fn partition_count_recurrence() {
        // Euler's pentagonal recurrence as an independent count.
        let mut p = [1i64; 16];
        for n in 1..16 {
            let mut s = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                s += sign * p[n - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= n {
                    s += sign * p[n - g2];
                }
                k += 1;
            }
            p[n] = s;
        }
        for (n, &pn) in p.iter().enumerate().skip(1) {
            assert_eq!(CycleType::enumerate(n).len() as i64, pn, "p({n})");
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=10 {
            let total: BigUint = CycleType::enumerate(n).iter().map(|c| c.class_size()).sum();
            assert_eq!(total, factorial(n as u32));
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(perm("10,1,2,3,4,5,6,7,8,9").n(), 10);
        assert_eq!(perm("4 1 5 2 3").to_string(), "41523");
        assert_eq!(perm("10,1,2,3,4,5,6,7,8,9").to_string(), "10,1,2,3,4,5,6,7,8,9");
        assert!(Permutation::parse("112").is_err());
        assert!(Permutation::parse("13").is_err());
        assert!("1^2 1^1".parse::<CycleType>().is_err());
        assert_eq!("2 1^3".parse::<CycleType>().unwrap().to_string(), "1^3 2^1");
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<String> = Permutation::all(3).map(|p| p.to_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(Permutation::all(6).count(), 720);
    }

    #[test]
    fn sign_matches_inversions() {
        for pi in Permutation::all(5) {
            let inv = pattern_occurrences(&perm("21"), &pi);
            let sign = if inv.is_multiple_of(2) { 1 } else { -1 };
            assert_eq!(pi.cycle_type().sign(), sign);
        }
    }
}
