//! Brute-force oracles and the cross-check suites built on them.
//!
//! The `brute_*` functions work directly from definitions: they enumerate
//! `S_n`, materialize pattern vectors in `V^{⊗K}` and sum over labellings.
//! None of them calls into [`crate::trace`] or [`crate::moments`]. The
//! suites then compare those modules against the oracles.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{
    character_polynomial, inner_product, mn_character, pad_partition, ClassFunction, IntegerPartition,
};
use crate::config::Guardrails;
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::moments::{averaging_coefficients, moment_report, MomentReport};
use crate::partition_algebra::{
    kernel_check, multiply_diagrams, phi_diagram, phi_matrix, phi_x_diagram, DiagramCombo, SetPartitionKK,
};
use crate::perm::{
    factorial, is_sorted_as, next_permutation, pattern_occurrences, CycleType, GeneralizedPattern,
    Permutation,
};
use crate::poly::{binomial, rat, MPoly, Rational, UPoly};

// ---------------------------------------------------------------------------
// oracles

/// For every cycle type of `S_n`: the class size and `sum N_sigma(pi)^d`
/// over the class.
fn class_power_sums(sigma: &Permutation, d: u32, n: usize) -> BTreeMap<CycleType, (u64, BigUint)> {
    // one chunk per value of pi(1), merged in order
    let chunks: Vec<HashMap<CycleType, (u64, BigUint)>> = (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut acc: HashMap<CycleType, (u64, BigUint)> = HashMap::new();
            let mut word: Vec<u32> = std::iter::once(first)
                .chain((1..=n as u32).filter(|&v| v != first))
                .collect();
            loop {
                let pi = Permutation::new(word.clone()).expect("permutation");
                let count = BigUint::from(pattern_occurrences(sigma, &pi)).pow(d);
                let e = acc.entry(pi.cycle_type()).or_insert_with(|| (0, BigUint::zero()));
                e.0 += 1;
                e.1 += count;
                if !next_permutation(&mut word[1..]) {
                    break;
                }
            }
            acc
        })
        .collect();
    let mut out: BTreeMap<CycleType, (u64, BigUint)> = BTreeMap::new();
    for chunk in chunks {
        for (ct, (c, s)) in chunk {
            let e = out.entry(ct).or_insert_with(|| (0, BigUint::zero()));
            e.0 += c;
            e.1 += s;
        }
    }
    out
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidCycleType("S_0 has no cycle types".into()));
    }
    Ok(())
}

/// The class average of `N_sigma^d` for every cycle type of `S_n`, from one
/// sweep of `S_n`.
pub fn brute_moment_table(
    sigma: &Permutation,
    d: usize,
    n: usize,
    guard: &Guardrails,
) -> Result<BTreeMap<CycleType, Rational>> {
    guard.check_oracle_n(n)?;
    require_positive(n)?;
    Ok(class_power_sums(sigma, d as u32, n)
        .into_iter()
        .map(|(ct, (c, s))| (ct, Rational::new(BigInt::from(s), BigInt::from(c))))
        .collect())
}

/// `(1/|C|) sum_{pi in C} N_sigma(pi)^d` over the class `C` of cycle type `ct`.
pub fn brute_moment(sigma: &Permutation, d: usize, ct: &CycleType, guard: &Guardrails) -> Result<Rational> {
    let table = brute_moment_table(sigma, d, ct.n(), guard)?;
    table
        .get(ct)
        .cloned()
        .ok_or_else(|| Error::Internal(format!("class {ct} missing from the sweep")))
}

/// `(1/n!) sum_{pi in S_n} N_sigma(pi)^d`.
pub fn brute_group_moment(sigma: &Permutation, d: usize, n: usize, guard: &Guardrails) -> Result<Rational> {
    guard.check_oracle_n(n)?;
    require_positive(n)?;
    let total: BigUint = class_power_sums(sigma, d as u32, n)
        .into_values()
        .map(|(_, s)| s)
        .sum();
    Ok(Rational::new(
        BigInt::from(total),
        BigInt::from(factorial(n as u32)),
    ))
}

/// Odometer over `[0, n)^k`; calls `f` on each word.
fn for_each_word<F: FnMut(&[usize])>(n: usize, k: usize, mut f: F) {
    if k > 0 && n == 0 {
        return;
    }
    let mut w = vec![0usize; k];
    loop {
        f(&w);
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            w[pos] += 1;
            if w[pos] < n {
                break;
            }
            w[pos] = 0;
        }
    }
}

fn word_index(w: &[usize], n: usize) -> usize {
    w.iter().fold(0, |acc, &x| acc * n + x)
}

/// Whether labelling unprimed `r` by `j[r]` and primed `r'` by `i[r]` is
/// constant on every part of `p`.
fn monochromatic(p: &SetPartitionKK, j: &[usize], i: &[usize]) -> bool {
    let k = p.k();
    let mut label: Vec<Option<usize>> = vec![None; p.num_parts()];
    (0..2 * k).all(|v| {
        let l = if v < k { j[v] } else { i[v - k] };
        match label[p.part_of(v)] {
            Some(prev) => prev == l,
            None => {
                label[p.part_of(v)] = Some(l);
                true
            }
        }
    })
}

/// `tr(g ⊗ P) = sum_I C_P(g^{-1}(I), I)` on `V^{⊗k}`, for `g` the
/// representative of `ct`.
pub fn brute_trace(p: &SetPartitionKK, ct: &CycleType, guard: &Guardrails) -> Result<i64> {
    let n = ct.n();
    guard.check_matrix(n, p.k())?;
    let g_inv = ct.representative().inverse();
    let mut total = 0i64;
    let mut j = vec![0usize; p.k()];
    for_each_word(n, p.k(), |i| {
        for (r, &v) in i.iter().enumerate() {
            j[r] = g_inv.apply(v as u32 + 1) as usize - 1;
        }
        // unprimed vertices carry the column word I, primed ones g^{-1}(I)
        if monochromatic(p, i, &j) {
            total += 1;
        }
    });
    Ok(total)
}

/// `E_alpha(1)`: the 0/1 vector on `[n]^K` supported on alpha-sorted words.
fn pattern_vector(alpha: &GeneralizedPattern, n: usize) -> Vec<bool> {
    let mut v = vec![false; n.pow(alpha.len() as u32)];
    let mut word = vec![0u32; alpha.len()];
    for_each_word(n, alpha.len(), |w| {
        for (x, &y) in word.iter_mut().zip(w) {
            *x = y as u32 + 1;
        }
        v[word_index(w, n)] = is_sorted_as(&word, alpha).expect("same length");
    });
    v
}

/// `(1/n!) sum_{x in S_n} x^{-1} E_alpha E_beta^T x` as an explicit
/// `n^K x n^K` matrix, rows indexed by the alpha side.
pub fn brute_average_operator(
    alpha: &GeneralizedPattern,
    beta: &GeneralizedPattern,
    n: usize,
    guard: &Guardrails,
) -> Result<DenseMatrix<Rational>> {
    if alpha.len() != beta.len() {
        return Err(Error::SizeMismatch(format!(
            "patterns of lengths {} and {}",
            alpha.len(),
            beta.len()
        )));
    }
    guard.check_oracle_n(n)?;
    let k = alpha.len();
    let dim = guard.check_matrix(n, k)?;
    let va = pattern_vector(alpha, n);
    let vb = pattern_vector(beta, n);
    let rows: Vec<usize> = (0..dim).filter(|&i| va[i]).collect();
    let cols: Vec<usize> = (0..dim).filter(|&i| vb[i]).collect();
    let digits = |mut idx: usize| -> Vec<usize> {
        let mut w = vec![0usize; k];
        for slot in w.iter_mut().rev() {
            *slot = idx % n;
            idx /= n;
        }
        w
    };
    let row_words: Vec<Vec<usize>> = rows.iter().map(|&i| digits(i)).collect();
    let col_words: Vec<Vec<usize>> = cols.iter().map(|&i| digits(i)).collect();
    let mut counts = vec![0u64; dim * dim];
    for x in Permutation::all(n) {
        // entry (x^{-1} I, x^{-1} J) receives E_alpha E_beta^T at (I, J)
        let x_inv = x.inverse();
        let act = |w: &[usize]| -> usize {
            w.iter()
                .fold(0, |acc, &v| acc * n + x_inv.apply(v as u32 + 1) as usize - 1)
        };
        let r_idx: Vec<usize> = row_words.iter().map(|w| act(w)).collect();
        let c_idx: Vec<usize> = col_words.iter().map(|w| act(w)).collect();
        for &r in &r_idx {
            for &c in &c_idx {
                counts[r * dim + c] += 1;
            }
        }
    }
    let nf = BigInt::from(factorial(n as u32));
    let mut m = DenseMatrix::zeros(dim, dim);
    for (idx, c) in counts.into_iter().enumerate() {
        if c > 0 {
            m.set(idx / dim, idx % dim, Rational::new(BigInt::from(c), nf.clone()));
        }
    }
    Ok(m)
}

/// `tr(E_sigma^T g E_Id)`, computed by building `E_Id(1)` in `V^{⊗k}`,
/// applying `g` to every tensor factor and pairing with `E_sigma(1)`.
pub fn brute_pattern_trace(sigma: &Permutation, g: &Permutation, guard: &Guardrails) -> Result<i64> {
    let (k, n) = (sigma.n(), g.n());
    guard.check_oracle_n(n)?;
    let dim = n.pow(k as u32);
    if dim as u64 > guard.max_matrix_entries {
        return Err(Error::Guardrail {
            what: "pattern vector length",
            requested: dim as u64,
            limit: guard.max_matrix_entries,
        });
    }
    let id = pattern_vector(
        &GeneralizedPattern::from_permutation(&Permutation::identity(k)),
        n,
    );
    let target = pattern_vector(&GeneralizedPattern::from_permutation(sigma), n);
    let mut moved = vec![0i64; dim];
    let mut gw = vec![0usize; k];
    for_each_word(n, k, |w| {
        if id[word_index(w, n)] {
            for (x, &y) in gw.iter_mut().zip(w) {
                *x = g.apply(y as u32 + 1) as usize - 1;
            }
            moved[word_index(&gw, n)] += 1;
        }
    });
    Ok(moved
        .iter()
        .zip(&target)
        .filter(|(_, &t)| t)
        .map(|(v, _)| v)
        .sum())
}

// ---------------------------------------------------------------------------
// reports

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub description: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one suite, or of a whole run when `suites` is non-empty.
/// Every failed case contributes exactly one [`Failure`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    #[serde(rename = "cases")]
    pub cases_run: u64,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub suites: Vec<VerificationReport>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            cases_run: 0,
            failures: Vec::new(),
            suites: Vec::new(),
        }
    }

    pub fn cases_passed(&self) -> u64 {
        self.cases_run - self.failures.len() as u64
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one case comparing `expected` with `actual`.
    pub fn check<T: PartialEq + fmt::Display>(
        &mut self,
        description: impl FnOnce() -> String,
        expected: &T,
        actual: &T,
    ) {
        self.cases_run += 1;
        if expected != actual {
            self.failures.push(Failure {
                description: description(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    /// Records one case that must hold.
    pub fn check_true(&mut self, description: impl FnOnce() -> String, ok: bool) {
        self.check(description, &true, &ok);
    }

    /// Records one failed case for an error raised while setting up a check.
    pub fn error(&mut self, description: impl Into<String>, err: &Error) {
        self.cases_run += 1;
        self.failures.push(Failure {
            description: description.into(),
            expected: "no error".into(),
            actual: err.to_string(),
        });
    }

    /// Aggregates per-suite reports; counts are sums.
    pub fn merge(name: impl Into<String>, parts: Vec<VerificationReport>) -> Self {
        let mut out = VerificationReport::new(name);
        for p in &parts {
            out.cases_run += p.cases_run;
            out.failures.extend(p.failures.iter().map(|f| Failure {
                description: format!("[{}] {}", p.suite, f.description),
                ..f.clone()
            }));
        }
        out.suites = parts;
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            writeln!(
                f,
                "{:<14} {:>7} cases  {:>7} passed  {}",
                s.suite,
                s.cases_run,
                s.cases_passed(),
                if s.passed() { "ok" } else { "FAILED" }
            )?;
        }
        writeln!(
            f,
            "{:<14} {:>7} cases  {:>7} passed  {}",
            self.suite,
            self.cases_run,
            self.cases_passed(),
            if self.passed() { "ok" } else { "FAILED" }
        )?;
        for fail in self.failures.iter().take(20) {
            writeln!(
                f,
                "  {}: expected {}, got {}",
                fail.description, fail.expected, fail.actual
            )?;
        }
        if self.failures.len() > 20 {
            writeln!(f, "  ... and {} more", self.failures.len() - 20)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// suites

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Homomorphism,
    Kernel,
    Trace,
    PatternTrace,
    Averaging,
    FirstMoments,
    SecondMoments,
    Stable,
    WholeGroup,
    Characters,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Homomorphism,
        Suite::Kernel,
        Suite::Trace,
        Suite::PatternTrace,
        Suite::Averaging,
        Suite::FirstMoments,
        Suite::SecondMoments,
        Suite::Stable,
        Suite::WholeGroup,
        Suite::Characters,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Homomorphism => "homomorphism",
            Suite::Kernel => "kernel",
            Suite::Trace => "trace",
            Suite::PatternTrace => "pattern-trace",
            Suite::Averaging => "averaging",
            Suite::FirstMoments => "moments-d1",
            Suite::SecondMoments => "moments-d2",
            Suite::Stable => "stable",
            Suite::WholeGroup => "whole-group",
            Suite::Characters => "characters",
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
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            Error::Parse(format!(
                "unknown suite {s:?}; expected one of {}",
                names.join(", ")
            ))
        })
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Suites to run; empty means all.
    pub suites: Vec<Suite>,
    /// Caps every oracle sweep at `S_{n_max}`.
    pub n_max: Option<usize>,
    pub guard: Guardrails,
    /// Seed for the sampled cases.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            suites: Vec::new(),
            n_max: None,
            guard: Guardrails::default(),
            seed: 0x5eed,
        }
    }
}

impl VerifyConfig {
    fn cap(&self, n: usize) -> usize {
        self.n_max.map_or(n, |m| m.min(n))
    }
}

fn s2_s3() -> Vec<Permutation> {
    Permutation::all(2).chain(Permutation::all(3)).collect()
}

/// Moment reports computed once per run.
#[derive(Default)]
pub struct MomentCache {
    reports: BTreeMap<(Permutation, usize), std::result::Result<MomentReport, String>>,
}

impl MomentCache {
    pub fn get(
        &mut self,
        sigma: &Permutation,
        d: usize,
        guard: &Guardrails,
    ) -> std::result::Result<&MomentReport, String> {
        self.reports
            .entry((sigma.clone(), d))
            .or_insert_with(|| moment_report(sigma, d, guard).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|e| e.clone())
    }
}

/// `Phi(P1) Phi(P2) = n^c Phi(P3)`: all pairs at `k = 2`, `n` in 2..=4, and
/// 200 sampled pairs per `n` at `k = 3`, `n` in {3, 4}.
pub fn homomorphism_suite(cfg: &VerifyConfig) -> VerificationReport {
    let mut rep = VerificationReport::new(Suite::Homomorphism.name());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut pairs: Vec<(usize, usize, SetPartitionKK, SetPartitionKK)> = Vec::new();
    let d2 = SetPartitionKK::all(2);
    for n in (2..=4).filter(|&n| n <= cfg.cap(4)) {
        for a in &d2 {
            for b in &d2 {
                pairs.push((2, n, a.clone(), b.clone()));
            }
        }
    }
    let d3 = SetPartitionKK::all(3);
    for n in (3..=4).filter(|&n| n <= cfg.cap(4)) {
        for _ in 0..200 {
            let a = d3[rng.gen_range(0..d3.len())].clone();
            let b = d3[rng.gen_range(0..d3.len())].clone();
            pairs.push((3, n, a, b));
        }
    }
    let results: Vec<(String, Result<bool>)> = pairs
        .par_iter()
        .map(|(k, n, a, b)| {
            let desc = format!("k={k} n={n} ({a})*({b})");
            let ok = (|| -> Result<bool> {
                let (c, p3) = multiply_diagrams(a, b)?;
                let lhs = phi_diagram(a, *n, &cfg.guard)?.matmul(&phi_diagram(b, *n, &cfg.guard)?);
                let rhs = phi_diagram(&p3, *n, &cfg.guard)?.scaled(&(*n as i64).pow(c));
                Ok(lhs == rhs)
            })();
            (desc, ok)
        })
        .collect();
    for (desc, r) in results {
        match r {
            Ok(ok) => rep.check_true(|| desc, ok),
            Err(e) => rep.error(desc, &e),
        }
    }
    rep
}

/// `Phi(x_P) = 0` exactly when `P` has more than `n` parts.
pub fn kernel_suite(cfg: &VerifyConfig) -> VerificationReport {
    let mut rep = VerificationReport::new(Suite::Kernel.name());
    for (k, ns) in [(2usize, 1..=4usize), (3, 2..=3)] {
        for n in ns.filter(|&n| n <= cfg.cap(n)) {
            for p in SetPartitionKK::all(k) {
                match kernel_check(&p, n, &cfg.guard) {
                    Ok(in_kernel) => rep.check(|| format!("n={n} {p}"), &(p.num_parts() > n), &in_kernel),
                    Err(e) => rep.error(format!("n={n} {p}"), &e),
                }
            }
        }
    }
    rep
}

/// Compares `trace_fn(P)` evaluated on every class of `S_n`, `n <= 6`, with
/// [`brute_trace`] for every `(k,k)`-diagram, `k <= 3`.
pub fn trace_suite<F>(cfg: &VerifyConfig, trace_fn: F) -> VerificationReport
where
    F: Fn(&SetPartitionKK) -> Result<MPoly> + Sync,
{
    let mut rep = VerificationReport::new(Suite::Trace.name());
    let n_top = cfg.cap(6);
    let diagrams: Vec<SetPartitionKK> = (0..=3).flat_map(SetPartitionKK::all).collect();
    type Case = (String, Result<(Rational, Rational)>);
    let per_diagram: Vec<Vec<Case>> = diagrams
        .par_iter()
        .map(|p| {
            let poly = trace_fn(p);
            let mut out = Vec::new();
            for n in 1..=n_top {
                for ct in CycleType::enumerate(n) {
                    let desc = format!("{p} at {ct}");
                    let r = match &poly {
                        Ok(t) => brute_trace(p, &ct, &cfg.guard).map(|b| (rat(b), t.evaluate_at(&ct))),
                        Err(e) => Err(Error::Internal(e.to_string())),
                    };
                    out.push((desc, r));
                }
            }
            out
        })
        .collect();
    for (desc, r) in per_diagram.into_iter().flatten() {
        match r {
            Ok((exp, act)) => rep.check(|| desc, &exp, &act),
            Err(e) => rep.error(desc, &e),
        }
    }
    rep
}

/// `tr(E_sigma^T g E_Id) = N_sigma(g)` for `sigma` in `S_2 ∪ S_3`, every
/// `g` in `S_5` and 100 sampled `g` in `S_6`.
pub fn pattern_trace_suite(cfg: &VerifyConfig) -> VerificationReport {
    let mut rep = VerificationReport::new(Suite::PatternTrace.name());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9e37);
    let mut gs: Vec<Permutation> = Permutation::all(cfg.cap(5)).collect();
    if cfg.cap(6) >= 6 {
        for _ in 0..100 {
            let mut w: Vec<u32> = (1..=6).collect();
            w.shuffle(&mut rng);
            gs.push(Permutation::new(w).expect("shuffle of 1..=6"));
        }
    }
    for sigma in s2_s3() {
        for g in &gs {
            match brute_pattern_trace(&sigma, g, &cfg.guard) {
                Ok(t) => rep.check(
                    || format!("sigma={sigma} g={g}"),
                    &(pattern_occurrences(&sigma, g) as i64),
                    &t,
                ),
                Err(e) => rep.error(format!("sigma={sigma} g={g}"), &e),
            }
        }
    }
    rep
}

/// All surjections `[K] -> [r]` for `K <= k_max`.
pub fn normalized_patterns(k_max: usize) -> Vec<GeneralizedPattern> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        let mut seen = std::collections::BTreeSet::new();
        for_each_word(k, k, |w| {
            let word: Vec<u32> = w.iter().map(|&x| x as u32 + 1).collect();
            seen.insert(GeneralizedPattern::normalize(&word));
        });
        out.extend(seen);
    }
    out
}

/// `Phi(sum_P b_P x_P)` against [`brute_average_operator`], once through the
/// distinct-labels images of `x_P` and once through the diagram basis.
pub fn averaging_suite(cfg: &VerifyConfig) -> VerificationReport {
    let mut rep = VerificationReport::new(Suite::Averaging.name());
    let pats = normalized_patterns(2);
    for n in (2..=4).filter(|&n| n <= cfg.cap(4)) {
        for a in &pats {
            for b in pats.iter().filter(|b| b.len() == a.len()) {
                let desc = format!("alpha={a} beta={b} n={n}");
                let r = (|| -> Result<(bool, bool)> {
                    let brute = brute_average_operator(a, b, n, &cfg.guard)?;
                    let exp = averaging_coefficients(a, b, &cfg.guard)?;
                    let dim = brute.rows();
                    let mut via_x: DenseMatrix<Rational> = DenseMatrix::zeros(dim, dim);
                    for (p, c) in exp.coefficients() {
                        let m = phi_x_diagram(p, n, &cfg.guard)?;
                        for r in 0..dim {
                            for s in 0..dim {
                                let v = *m.get(r, s);
                                if v != 0 {
                                    *via_x.get_mut(r, s) += c * rat(v);
                                }
                            }
                        }
                    }
                    let mut combo = DiagramCombo::zero(a.len());
                    for (p, c) in exp.to_diagram_basis() {
                        combo.add_term(p, UPoly::constant(c));
                    }
                    let via_diagrams = phi_matrix(&combo, n, &cfg.guard)?;
                    Ok((via_x == brute, via_diagrams == brute))
                })();
                match r {
                    Ok((x_ok, d_ok)) => {
                        rep.check_true(|| format!("{desc} (x basis)"), x_ok);
                        rep.check_true(|| format!("{desc} (diagram basis)"), d_ok);
                    }
                    Err(e) => rep.error(desc, &e),
                }
            }
        }
    }
    rep
}

fn moment_vs_brute(
    rep: &mut VerificationReport,
    cache: &mut MomentCache,
    sigma: &Permutation,
    d: usize,
    n_top: usize,
    guard: &Guardrails,
) {
    let m = match cache.get(sigma, d, guard) {
        Ok(r) => r.polynomial.clone(),
        Err(e) => return rep.error(format!("sigma={sigma} d={d}"), &Error::Internal(e)),
    };
    for n in 1..=n_top {
        match brute_moment_table(sigma, d, n, guard) {
            Ok(table) => {
                for (ct, exp) in table {
                    rep.check(
                        || format!("sigma={sigma} d={d} at {ct}"),
                        &exp,
                        &m.evaluate_at(&ct),
                    );
                }
            }
            Err(e) => rep.error(format!("sigma={sigma} d={d} n={n}"), &e),
        }
    }
}

/// `M_{sigma,1}` against class averages on `S_n`, `n <= 8`, all `sigma` in
/// `S_2 ∪ S_3`.
pub fn first_moments_suite(cfg: &VerifyConfig, cache: &mut MomentCache) -> VerificationReport {
    let mut rep = VerificationReport::new(Suite::FirstMoments.name());
    for sigma in s2_s3() {
        moment_vs_brute(&mut rep, cache, &sigma, 1, cfg.cap(8), &cfg.guard);
    }
    rep
}

/// `M_{sigma,2}` for `sigma` in `S_2`, `n <= 8`.
pub fn second_moments_suite(cfg: &VerifyConfig, cache: &mut MomentCache) -> VerificationReport {
    let mut rep = VerificationReport::new(Suite::SecondMoments.name());
    for sigma in Permutation::all(2) {
        moment_vs_brute(&mut rep, cache, &sigma, 2, cfg.cap(8), &cfg.guard);
    }
    rep
}

fn computed_cases() -> Vec<(Permutation, usize)> {
    let mut v: Vec<(Permutation, usize)> = s2_s3().into_iter().map(|s| (s, 1)).collect();
    v.extend(Permutation::all(2).map(|s| (s, 2)));
    v
}

/// Degree bounds on every `a^lambda`, and the synthesized character sum
/// against `M` on every class at the held-out `n = 3dk + 1`.
pub fn stable_suite(cfg: &VerifyConfig, cache: &mut MomentCache) -> VerificationReport {
    let mut rep = VerificationReport::new(Suite::Stable.name());
    for (sigma, d) in computed_cases() {
        let report = match cache.get(&sigma, d, &cfg.guard) {
            Ok(r) => r,
            Err(e) => {
                rep.error(format!("sigma={sigma} d={d}"), &Error::Internal(e));
                continue;
            }
        };
        let dk = d * sigma.n();
        for (lam, a) in report.decomposition.terms() {
            let bound = dk - lam.size();
            rep.check_true(
                || format!("sigma={sigma} d={d} deg a^({lam}) <= {bound}"),
                a.degree().is_none_or(|deg| deg <= bound),
            );
        }
        let held_out = 3 * dk + 1;
        match report.decomposition.synthesize(held_out) {
            Ok(f) => {
                for (ct, v) in f.iter() {
                    rep.check(
                        || format!("sigma={sigma} d={d} synthesis at {ct}"),
                        &report.polynomial.evaluate_at(ct),
                        v,
                    );
                }
            }
            Err(e) => rep.error(format!("sigma={sigma} d={d} synthesis at n={held_out}"), &e),
        }
    }
    rep
}

/// `a^∅` for `sigma` in `S_3`, `d = 1`, against the whole-group mean and
/// `C(n,3)/6`; and the class-size weighted mean of `M` against the
/// whole-group moment for every computed `(sigma, d)`.
pub fn whole_group_suite(cfg: &VerifyConfig, cache: &mut MomentCache) -> VerificationReport {
    let mut rep = VerificationReport::new(Suite::WholeGroup.name());
    let c_n3_over_6 = UPoly::from_coeffs(vec![rat(0), rat(2), rat(-3), rat(1)])
        .scale(&Rational::new(BigInt::one(), BigInt::from(36)));
    for sigma in Permutation::all(3) {
        let a_empty = match cache.get(&sigma, 1, &cfg.guard) {
            Ok(r) => r.whole_group_moment(),
            Err(e) => {
                rep.error(format!("sigma={sigma}"), &Error::Internal(e));
                continue;
            }
        };
        rep.check(
            || format!("sigma={sigma} a^() = C(n,3)/6"),
            &c_n3_over_6,
            &a_empty,
        );
        for n in (6..=8).filter(|&n| n <= cfg.cap(8)) {
            match brute_group_moment(&sigma, 1, n, &cfg.guard) {
                Ok(exp) => rep.check(
                    || format!("sigma={sigma} a^()({n})"),
                    &exp,
                    &a_empty.eval_int(n as i64),
                ),
                Err(e) => rep.error(format!("sigma={sigma} n={n}"), &e),
            }
        }
    }
    for (sigma, d) in computed_cases() {
        let m = match cache.get(&sigma, d, &cfg.guard) {
            Ok(r) => r.polynomial.clone(),
            Err(e) => {
                rep.error(format!("sigma={sigma} d={d}"), &Error::Internal(e));
                continue;
            }
        };
        for n in 1..=cfg.cap(8) {
            let mean: Rational = CycleType::enumerate(n)
                .iter()
                .map(|ct| m.evaluate_at(ct) * BigInt::from(ct.class_size()))
                .fold(Rational::zero(), |a, b| a + b)
                / BigInt::from(factorial(n as u32));
            match brute_group_moment(&sigma, d, n, &cfg.guard) {
                Ok(exp) => rep.check(|| format!("sigma={sigma} d={d} group mean n={n}"), &exp, &mean),
                Err(e) => rep.error(format!("sigma={sigma} d={d} n={n}"), &e),
            }
        }
    }
    rep
}

/// Orthonormality of the irreducible characters for `n <= 8`, and character
/// polynomials against padded characters for `|mu| <= 3`.
pub fn characters_suite(cfg: &VerifyConfig) -> VerificationReport {
    let mut rep = VerificationReport::new(Suite::Characters.name());
    for n in 1..=cfg.cap(8) {
        let lambdas = IntegerPartition::all_of(n);
        let chars: Result<Vec<ClassFunction>> = lambdas.iter().map(ClassFunction::character).collect();
        let chars = match chars {
            Ok(c) => c,
            Err(e) => {
                rep.error(format!("characters of S_{n}"), &e);
                continue;
            }
        };
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                match inner_product(a, b) {
                    Ok(v) => rep.check(
                        || format!("<chi^({}), chi^({})>", lambdas[i], lambdas[j]),
                        &rat((i == j) as i64),
                        &v,
                    ),
                    Err(e) => rep.error(format!("<chi^({}), chi^({})>", lambdas[i], lambdas[j]), &e),
                }
            }
        }
    }
    for mu in IntegerPartition::all_up_to(3) {
        let r = mu.size();
        let poly = match character_polynomial(&mu) {
            Ok(p) => p,
            Err(e) => {
                rep.error(format!("P_({mu})"), &e);
                continue;
            }
        };
        for n in (2 * r).max(1)..=2 * r + 3 {
            let padded = match pad_partition(&mu, n) {
                Ok(p) => p,
                Err(e) => {
                    rep.error(format!("({mu})[{n}]"), &e);
                    continue;
                }
            };
            for ct in CycleType::enumerate(n) {
                match mn_character(&padded, &ct) {
                    Ok(chi) => rep.check(|| format!("P_({mu}) at {ct}"), &rat(chi), &poly.evaluate_at(&ct)),
                    Err(e) => rep.error(format!("chi^({padded}) at {ct}"), &e),
                }
            }
        }
    }
    rep
}

/// Runs one suite.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig, cache: &mut MomentCache) -> VerificationReport {
    match suite {
        Suite::Homomorphism => homomorphism_suite(cfg),
        Suite::Kernel => kernel_suite(cfg),
        Suite::Trace => trace_suite(cfg, crate::trace::trace_polynomial),
        Suite::PatternTrace => pattern_trace_suite(cfg),
        Suite::Averaging => averaging_suite(cfg),
        Suite::FirstMoments => first_moments_suite(cfg, cache),
        Suite::SecondMoments => second_moments_suite(cfg, cache),
        Suite::Stable => stable_suite(cfg, cache),
        Suite::WholeGroup => whole_group_suite(cfg, cache),
        Suite::Characters => characters_suite(cfg),
    }
}

/// Runs the selected suites in a fixed order and aggregates their reports.
pub fn verify_all(cfg: &VerifyConfig) -> VerificationReport {
    let mut cache = MomentCache::default();
    let selected: Vec<Suite> = if cfg.suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        let mut s = cfg.suites.clone();
        s.sort();
        s.dedup();
        s
    };
    let parts = selected
        .into_iter()
        .map(|s| run_suite(s, cfg, &mut cache))
        .collect();
    VerificationReport::merge("all", parts)
}

/// `C(n, r)` as a rational, for callers comparing against closed forms.
pub fn binomial_rational(n: u64, r: u64) -> Rational {
    Rational::from_integer(binomial(n, r))
}
