//! The diagram basis of the partition algebra `Par_k(t)`.
//!
//! A [`SetPartitionKK`] is a set partition of the `2k` vertices
//! `1, ..., k, 1', ..., k'`. Vertices are indexed `0..k` (unprimed) and
//! `k..2k` (primed), and a diagram is stored as the restricted growth string
//! of its block labels. That string numbers the parts by least vertex under
//! `1 < ... < k < 1' < ... < k'`, so it is a canonical form.
//!
//! [`phi_diagram`] and [`phi_matrix`] realize diagrams as `n^k x n^k` matrices
//! on `V^{⊗k}`, with words `I = i_1 ... i_k` indexed in base `n`, `i_1` most
//! significant.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};

use crate::config::Guardrails;
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::poly::{rat, Rational, UPoly};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartitionKK {
    k: usize,
    /// `rgs[v]` is the part containing vertex `v`.
    rgs: Vec<u8>,
}

impl SetPartitionKK {
    /// Canonicalizes an arbitrary labelling of the `2k` vertices: vertices
    /// sharing a label share a part.
    pub fn from_labels<T: Eq + std::hash::Hash + Copy>(k: usize, labels: &[T]) -> Result<Self> {
        if labels.len() != 2 * k {
            return Err(Error::InvalidSetPartition(format!(
                "expected {} labels, got {}",
                2 * k,
                labels.len()
            )));
        }
        let mut ids: HashMap<T, u8> = HashMap::new();
        let rgs = labels
            .iter()
            .map(|l| {
                let next = ids.len() as u8;
                *ids.entry(*l).or_insert(next)
            })
            .collect();
        Ok(SetPartitionKK { k, rgs })
    }

    /// The identity diagram `{1,1'}, ..., {k,k'}`.
    pub fn identity(k: usize) -> Self {
        let labels: Vec<usize> = (0..k).chain(0..k).collect();
        SetPartitionKK::from_labels(k, &labels).expect("2k labels")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn num_parts(&self) -> usize {
        self.rgs.iter().copied().max().map_or(0, |m| m as usize + 1)
    }

    /// Part index of vertex `v` (`0..k` unprimed, `k..2k` primed).
    #[inline]
    pub fn part_of(&self, v: usize) -> usize {
        self.rgs[v] as usize
    }

    /// Part of the unprimed vertex `r` (1-based).
    pub fn part_of_unprimed(&self, r: usize) -> usize {
        self.part_of(r - 1)
    }

    /// Part of the primed vertex `r'` (1-based).
    pub fn part_of_primed(&self, r: usize) -> usize {
        self.part_of(self.k + r - 1)
    }

    pub fn labels(&self) -> &[u8] {
        &self.rgs
    }

    /// Parts as lists of vertex indices, in canonical order.
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.num_parts()];
        for (v, &b) in self.rgs.iter().enumerate() {
            parts[b as usize].push(v);
        }
        parts
    }

    /// All `(k,k)`-set partitions, in lexicographic order of their restricted
    /// growth strings. There are `Bell(2k)` of them.
    pub fn all(k: usize) -> Vec<SetPartitionKK> {
        restricted_growth_strings(2 * k)
            .into_iter()
            .map(|rgs| SetPartitionKK { k, rgs })
            .collect()
    }

    /// `true` if every part of `self` is a union of parts of `finer`.
    pub fn is_coarsening_of(&self, finer: &SetPartitionKK) -> bool {
        if self.k != finer.k {
            return false;
        }
        let mut image: Vec<Option<u8>> = vec![None; finer.num_parts()];
        for (a, b) in finer.rgs.iter().zip(&self.rgs) {
            match image[*a as usize] {
                None => image[*a as usize] = Some(*b),
                Some(x) if x != *b => return false,
                _ => {}
            }
        }
        true
    }

    /// The diagram obtained by merging parts of `self` according to a set
    /// partition `merge` of its part indices.
    fn merged(&self, merge: &[u8]) -> SetPartitionKK {
        let labels: Vec<u8> = self.rgs.iter().map(|&b| merge[b as usize]).collect();
        SetPartitionKK::from_labels(self.k, &labels).expect("same length")
    }
}

impl fmt::Display for SetPartitionKK {
    /// `{1,1'}|{2'}|{2,3,3'}`-style text, parts in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts().iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            f.write_str("{")?;
            for (j, &v) in part.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                if v < self.k {
                    write!(f, "{}", v + 1)?;
                } else {
                    write!(f, "{}'", v - self.k + 1)?;
                }
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

impl FromStr for SetPartitionKK {
    type Err = Error;

    /// Parses the text format; `k` is the largest vertex label present.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse(format!("diagram {s:?}: {msg}"));
        let mut parts: Vec<Vec<(usize, bool)>> = Vec::new();
        for chunk in s.split('|') {
            let chunk = chunk.trim();
            let inner = chunk
                .strip_prefix('{')
                .and_then(|c| c.strip_suffix('}'))
                .ok_or_else(|| bad(format!("part {chunk:?} is not braced")))?;
            let mut part = Vec::new();
            for item in inner.split(',') {
                let item = item.trim();
                let (num, primed) = match item.strip_suffix('\'') {
                    Some(x) => (x, true),
                    None => (item, false),
                };
                let r: usize = num.parse().map_err(|_| bad(format!("bad vertex {item:?}")))?;
                if r == 0 {
                    return Err(bad("vertex 0".into()));
                }
                part.push((r, primed));
            }
            parts.push(part);
        }
        let k = parts.iter().flatten().map(|&(r, _)| r).max().unwrap_or(0);
        let mut labels: Vec<Option<usize>> = vec![None; 2 * k];
        for (pi, part) in parts.iter().enumerate() {
            for &(r, primed) in part {
                let v = if primed { k + r - 1 } else { r - 1 };
                if labels[v].replace(pi).is_some() {
                    return Err(Error::InvalidSetPartition(format!("{s:?}: vertex repeated")));
                }
            }
        }
        let labels: Vec<usize> = labels
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvalidSetPartition(format!("{s:?}: vertices missing")))?;
        SetPartitionKK::from_labels(k, &labels)
    }
}

/// All restricted growth strings of length `len` in lexicographic order.
pub fn restricted_growth_strings(len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if len == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut a = vec![0u8; len];
    // maxes[i] = max(a[0..i])
    let mut maxes = vec![0u8; len];
    loop {
        out.push(a.clone());
        let mut i = len - 1;
        loop {
            if i == 0 {
                return out;
            }
            if a[i] <= maxes[i] {
                a[i] += 1;
                break;
            }
            i -= 1;
        }
        for j in i + 1..len {
            a[j] = 0;
            maxes[j] = maxes[j - 1].max(a[j - 1]);
        }
    }
}

/// `P1 P2 = t^c P3`: stacks `P1` over `P2`, identifying the primed row of
/// `P1` with the unprimed row of `P2`. `c` counts components confined to the
/// middle row.
pub fn multiply_diagrams(p1: &SetPartitionKK, p2: &SetPartitionKK) -> Result<(u32, SetPartitionKK)> {
    if p1.k != p2.k {
        return Err(Error::SizeMismatch(format!("k = {} vs k = {}", p1.k, p2.k)));
    }
    let k = p1.k;
    // vertices: top 0..k, middle k..2k, bottom 2k..3k
    let mut uf = UnionFind::new(3 * k);
    let mut first_in_part: Vec<Option<usize>> = vec![None; p1.num_parts()];
    for v in 0..2 * k {
        let b = p1.part_of(v);
        match first_in_part[b] {
            None => first_in_part[b] = Some(v),
            Some(u) => uf.union(u, v),
        }
    }
    let mut first_in_part: Vec<Option<usize>> = vec![None; p2.num_parts()];
    for v in 0..2 * k {
        let b = p2.part_of(v);
        let w = v + k;
        match first_in_part[b] {
            None => first_in_part[b] = Some(w),
            Some(u) => uf.union(u, w),
        }
    }
    let mut touches_outer = vec![false; 3 * k];
    for v in (0..k).chain(2 * k..3 * k) {
        let r = uf.find(v);
        touches_outer[r] = true;
    }
    let mut middle_only = 0u32;
    let mut counted = vec![false; 3 * k];
    for v in k..2 * k {
        let r = uf.find(v);
        if !touches_outer[r] && !counted[r] {
            counted[r] = true;
            middle_only += 1;
        }
    }
    let labels: Vec<usize> = (0..k).chain(2 * k..3 * k).map(|v| uf.find(v)).collect();
    Ok((middle_only, SetPartitionKK::from_labels(k, &labels)?))
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// All coarsenings of `p` (including `p`), one per set partition of its
/// parts: `Bell(#parts)` of them.
pub fn coarsenings(p: &SetPartitionKK) -> Vec<SetPartitionKK> {
    restricted_growth_strings(p.num_parts())
        .iter()
        .map(|merge| p.merged(merge))
        .collect()
}

/// Möbius function of the set-partition lattice between `finer` and a
/// coarsening `coarser`: `prod_B (-1)^{b-1} (b-1)!` over parts `B` of
/// `coarser`, where `b` is the number of parts of `finer` inside `B`.
/// Returns `None` if `coarser` is not a coarsening of `finer`.
pub fn mobius(finer: &SetPartitionKK, coarser: &SetPartitionKK) -> Option<i64> {
    if !coarser.is_coarsening_of(finer) {
        return None;
    }
    let mut merged_count = vec![0i64; coarser.num_parts()];
    let mut seen = vec![false; finer.num_parts()];
    for (a, b) in finer.rgs.iter().zip(&coarser.rgs) {
        if !seen[*a as usize] {
            seen[*a as usize] = true;
            merged_count[*b as usize] += 1;
        }
    }
    Some(
        merged_count
            .into_iter()
            .map(|b| {
                let f: i64 = (1..b).product();
                if (b - 1) % 2 == 0 {
                    f
                } else {
                    -f
                }
            })
            .product(),
    )
}

/// An element of `Par_k(t)`: diagrams with coefficients in `Q[t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramCombo {
    k: usize,
    terms: BTreeMap<SetPartitionKK, UPoly>,
}

impl DiagramCombo {
    pub fn zero(k: usize) -> Self {
        DiagramCombo {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn diagram(p: &SetPartitionKK) -> Self {
        let mut c = DiagramCombo::zero(p.k);
        c.add_term(p.clone(), UPoly::constant(rat(1)));
        c
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn add_term(&mut self, p: SetPartitionKK, coeff: UPoly) {
        assert_eq!(p.k, self.k, "diagram of the wrong size");
        if coeff.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&p) {
            Some(old) => &old + &coeff,
            None => coeff,
        };
        if !sum.is_zero() {
            self.terms.insert(p, sum);
        }
    }

    pub fn add(&self, other: &DiagramCombo) -> DiagramCombo {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> DiagramCombo {
        let mut out = DiagramCombo::zero(self.k);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c.scale(s));
        }
        out
    }

    /// Product in `Par_k(t)` with `t` kept formal.
    pub fn multiply(&self, other: &DiagramCombo) -> Result<DiagramCombo> {
        let mut out = DiagramCombo::zero(self.k);
        for (p1, c1) in &self.terms {
            for (p2, c2) in &other.terms {
                let (c, p3) = multiply_diagrams(p1, p2)?;
                out.add_term(p3, (c1 * c2).shift(c as usize));
            }
        }
        Ok(out)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SetPartitionKK, &UPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &SetPartitionKK) -> UPoly {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `true` if no coefficient involves `t`.
    pub fn is_t_independent(&self) -> bool {
        self.terms.values().all(|c| c.degree().unwrap_or(0) == 0)
    }
}

thread_local! {
    static X_BASIS: RefCell<HashMap<SetPartitionKK, BTreeMap<SetPartitionKK, i64>>> =
        RefCell::new(HashMap::new());
}

impl fmt::Display for DiagramCombo {
    /// `c1*{..} + c2*{..}`; coefficients depending on `t` are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let text = if c.degree().unwrap_or(0) > 0 {
                format!("({})", c.to_string().replace('n', "t"))
            } else {
                c.to_string()
            };
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if body != "1" {
                write!(f, "{body}*")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// `x_P` in the diagram basis, from the recursion
/// `P = sum_{P' coarsening P} x_{P'}`, i.e. `x_P = P - sum_{P' > P} x_{P'}`,
/// memoized per thread.
pub fn x_basis_expand(p: &SetPartitionKK) -> DiagramCombo {
    let coeffs = X_BASIS.with(|m| x_rec(p, &mut m.borrow_mut()));
    let mut out = DiagramCombo::zero(p.k);
    for (q, c) in coeffs {
        out.add_term(q, UPoly::constant(rat(c)));
    }
    out
}

fn x_rec(
    p: &SetPartitionKK,
    memo: &mut HashMap<SetPartitionKK, BTreeMap<SetPartitionKK, i64>>,
) -> BTreeMap<SetPartitionKK, i64> {
    if let Some(v) = memo.get(p) {
        return v.clone();
    }
    let mut out = BTreeMap::new();
    out.insert(p.clone(), 1i64);
    for q in coarsenings(p) {
        if q == *p {
            continue;
        }
        for (r, c) in x_rec(&q, memo) {
            let e = out.entry(r).or_insert(0);
            *e -= c;
        }
    }
    out.retain(|_, c| *c != 0);
    memo.insert(p.clone(), out.clone());
    out
}

fn word_index(word: &[usize], n: usize) -> usize {
    word.iter().fold(0, |acc, &x| acc * n + x)
}

/// Sets every entry `(J, I)` of `out` for which labelling the unprimed
/// vertices by `J` and the primed ones by `I` makes each part monochromatic
/// (and, if `distinct`, gives distinct parts distinct labels).
fn for_each_monochromatic<F: FnMut(usize, usize)>(p: &SetPartitionKK, n: usize, distinct: bool, mut f: F) {
    let parts = p.num_parts();
    let k = p.k;
    let mut part_label = vec![0usize; parts];
    let mut j = vec![0usize; k];
    let mut i = vec![0usize; k];
    loop {
        let ok = !distinct || {
            let mut seen = vec![false; n];
            part_label.iter().all(|&l| !std::mem::replace(&mut seen[l], true))
        };
        if ok {
            for r in 0..k {
                j[r] = part_label[p.part_of(r)];
                i[r] = part_label[p.part_of(k + r)];
            }
            f(word_index(&j, n), word_index(&i, n));
        }
        // odometer over part labels
        let mut pos = 0;
        loop {
            if pos == parts {
                return;
            }
            part_label[pos] += 1;
            if part_label[pos] < n {
                break;
            }
            part_label[pos] = 0;
            pos += 1;
        }
    }
}

/// `Phi_{k,n}(P)`: entry `(J, I)` is 1 exactly when the labelling
/// (unprimed `r` gets `j_r`, primed `r'` gets `i_r`) is monochromatic on
/// every part.
pub fn phi_diagram(p: &SetPartitionKK, n: usize, guard: &Guardrails) -> Result<DenseMatrix<i64>> {
    let dim = guard.check_matrix(n, p.k)?;
    let mut m = DenseMatrix::zeros(dim, dim);
    for_each_monochromatic(p, n, false, |j, i| m.set(j, i, 1));
    Ok(m)
}

/// `Phi_{k,n}(x_P)` by the distinct-labels rule: monochromatic parts with
/// pairwise distinct labels.
pub fn phi_x_diagram(p: &SetPartitionKK, n: usize, guard: &Guardrails) -> Result<DenseMatrix<i64>> {
    let dim = guard.check_matrix(n, p.k)?;
    let mut m = DenseMatrix::zeros(dim, dim);
    if p.num_parts() <= n {
        for_each_monochromatic(p, n, true, |j, i| m.set(j, i, 1));
    }
    Ok(m)
}

/// `Phi_{k,n}` of a combination, with `t` specialized to `n`.
pub fn phi_matrix(element: &DiagramCombo, n: usize, guard: &Guardrails) -> Result<DenseMatrix<Rational>> {
    let dim = guard.check_matrix(n, element.k)?;
    let t = rat(n as i64);
    let coeffs: Vec<(&SetPartitionKK, Rational)> =
        element.terms.iter().map(|(p, c)| (p, c.eval(&t))).collect();
    let small: Option<Vec<i64>> = coeffs
        .iter()
        .map(|(_, c)| if c.is_integer() { c.numer().to_i64() } else { None })
        .collect();
    if let Some(ints) = small {
        let mut acc = vec![0i64; dim * dim];
        for ((p, _), c) in coeffs.iter().zip(ints) {
            for_each_monochromatic(p, n, false, |j, i| acc[j * dim + i] += c);
        }
        let mut m = DenseMatrix::zeros(dim, dim);
        for (idx, v) in acc.into_iter().enumerate() {
            if v != 0 {
                m.set(idx / dim, idx % dim, rat(v));
            }
        }
        return Ok(m);
    }
    let mut m: DenseMatrix<Rational> = DenseMatrix::zeros(dim, dim);
    for (p, c) in &coeffs {
        for_each_monochromatic(p, n, false, |j, i| *m.get_mut(j, i) += c);
    }
    Ok(m)
}

/// Whether `Phi_{k,n}(x_P) = 0`, computed from the diagram-basis expansion of
/// `x_P`.
pub fn kernel_check(p: &SetPartitionKK, n: usize, guard: &Guardrails) -> Result<bool> {
    let x = x_basis_expand(p);
    Ok(phi_matrix(&x, n, guard)?.is_zero())
}

impl DenseMatrix<Rational> {
    pub fn from_integer_matrix(m: &DenseMatrix<i64>) -> Self {
        m.map(|&v| if v == 0 { Rational::zero() } else { rat(v) })
    }
}
