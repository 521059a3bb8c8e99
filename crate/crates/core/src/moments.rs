//! Moment polynomials of pattern counts.
//!
//! For `sigma` in `S_k`, the `d`-th moment of `N_sigma` on the class of `pi`
//! equals the trace on `V^{⊗dk}` of `pi` times the `S_n`-average of
//! `E_Id^{⊗d} (E_sigma^T)^{⊗d}`. The pipeline:
//!
//! 1. expand `E_Id^{⊗d} = sum_alpha E_alpha` and `E_sigma^{⊗d} = sum_beta E_beta`
//!    by the shuffle rule ([`tensor_power_expand`]);
//! 2. write each average as `sum_P b_P(alpha, beta) x_P` over
//!    `(dk, dk)`-diagrams ([`averaging_coefficients`]);
//! 3. convert `x_P` to diagrams with the Möbius function of the
//!    set-partition lattice and replace each diagram by its trace
//!    polynomial.
//!
//! No vector in `V^{⊗dk}` is ever built; the operators only appear through
//! sortedness tests on words over the parts of a diagram.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::characters::{decompose_stable, StableDecomposition};
use crate::config::Guardrails;
use crate::error::{Error, Result};
use crate::partition_algebra::{coarsenings, mobius, SetPartitionKK};
use crate::perm::{factorial, next_permutation, GeneralizedPattern, Permutation};
use crate::poly::{rat, MPoly, Rational, UPoly};
use crate::trace::trace_polynomial;

/// A linear combination `sum c_alpha E_alpha` of pattern operators of a
/// common length `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternCombo {
    k: usize,
    terms: BTreeMap<GeneralizedPattern, Rational>,
}

impl PatternCombo {
    pub fn zero(k: usize) -> Self {
        PatternCombo {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(p: GeneralizedPattern) -> Self {
        let mut c = PatternCombo::zero(p.len());
        c.add_term(p, Rational::one());
        c
    }

    /// Length `K` of every pattern.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn add_term(&mut self, p: GeneralizedPattern, c: Rational) {
        assert_eq!(p.len(), self.k, "pattern of the wrong length");
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(p).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GeneralizedPattern, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &GeneralizedPattern) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }
}

impl fmt::Display for PatternCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            write!(f, "E{p}")?;
        }
        Ok(())
    }
}

/// All `size`-element subsets of `0..r`, as bitmasks.
fn subsets_of_size(r: usize, size: usize) -> Vec<u32> {
    (0u32..(1 << r))
        .filter(|m| m.count_ones() as usize == size)
        .collect()
}

fn increasing_map(mask: u32) -> Vec<u32> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// `E_alpha ⊗ E_beta = sum_gamma E_gamma` over surjections `gamma` onto
/// `1..=r` whose first block is alpha-sorted and second block beta-sorted.
/// Every coefficient is 1.
pub fn shuffle_expand(alpha: &GeneralizedPattern, beta: &GeneralizedPattern) -> PatternCombo {
    let (ra, rb) = (alpha.rank(), beta.rank());
    let mut out = PatternCombo::zero(alpha.len() + beta.len());
    for r in ra.max(rb)..=ra + rb {
        let full = if r == 0 { 0 } else { (1u32 << r) - 1 };
        for a in subsets_of_size(r, ra) {
            for b in subsets_of_size(r, rb) {
                if a | b != full {
                    continue;
                }
                let fa = increasing_map(a);
                let fb = increasing_map(b);
                let gamma: Vec<u32> = alpha
                    .values()
                    .iter()
                    .map(|&v| fa[v as usize - 1])
                    .chain(beta.values().iter().map(|&v| fb[v as usize - 1]))
                    .collect();
                out.add_term(
                    GeneralizedPattern::new(gamma).expect("surjective by construction"),
                    Rational::one(),
                );
            }
        }
    }
    out
}

/// Which side of the pattern-count operator is being expanded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `E_Id^{⊗d}` with `Id` in `S_k`.
    Initial,
    /// `E_sigma^{⊗d}`; its transpose gives the `E_beta^T` combination.
    Terminal,
}

/// Expansion of `E_Id^{⊗d}` or `E_sigma^{⊗d}` by folding [`shuffle_expand`].
pub fn tensor_power_expand(
    sigma: &Permutation,
    d: usize,
    which: Side,
    guard: &Guardrails,
) -> Result<PatternCombo> {
    if d == 0 {
        return Err(Error::InvalidPattern("d must be at least 1".into()));
    }
    guard.check_dk(d * sigma.n())?;
    let base = match which {
        Side::Initial => GeneralizedPattern::from_permutation(&Permutation::identity(sigma.n())),
        Side::Terminal => GeneralizedPattern::from_permutation(sigma),
    };
    let mut acc = PatternCombo::single(base.clone());
    for _ in 1..d {
        let mut next = PatternCombo::zero(acc.k + base.len());
        for (gamma, c) in acc.terms() {
            for (delta, c2) in shuffle_expand(gamma, &base).terms() {
                next.add_term(delta.clone(), c * c2);
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// `T_{alpha,beta} = sum_P b_P x_P`, the `S_n`-average of
/// `E_alpha E_beta^T` in the `x`-basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AveragingExpansion {
    k: usize,
    coeffs: BTreeMap<SetPartitionKK, Rational>,
}

impl AveragingExpansion {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Nonzero `b_P`, in diagram order.
    pub fn coefficients(&self) -> impl Iterator<Item = (&SetPartitionKK, &Rational)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, p: &SetPartitionKK) -> Rational {
        self.coeffs.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    /// The same element in the diagram basis, via the Möbius function.
    pub fn to_diagram_basis(&self) -> BTreeMap<SetPartitionKK, Rational> {
        x_to_diagram_basis(self.coeffs.iter().map(|(p, c)| (p.clone(), c.clone())))
    }
}

/// `b_P(alpha, beta)` for every `(K,K)`-diagram `P`.
///
/// Number the parts of `P` `1..=p` canonically; `J_r` is the part of `r`
/// and `I_r` the part of `r'`. Then `b_P` is the fraction of `x` in `S_p`
/// with `x∘J` alpha-sorted and `x∘I` beta-sorted.
pub fn averaging_coefficients(
    alpha: &GeneralizedPattern,
    beta: &GeneralizedPattern,
    guard: &Guardrails,
) -> Result<AveragingExpansion> {
    if alpha.len() != beta.len() {
        return Err(Error::SizeMismatch(format!(
            "patterns of lengths {} and {}",
            alpha.len(),
            beta.len()
        )));
    }
    let k = alpha.len();
    guard.check_dk(k)?;
    let coeffs = averaged_weights(
        &PatternCombo::single(alpha.clone()),
        &PatternCombo::single(beta.clone()),
    )
    .into_iter()
    .collect();
    Ok(AveragingExpansion { k, coeffs })
}

/// Packs a standardized word (values `< 256`, length `<= 16`) for hashing.
#[inline]
fn pack(values: impl Iterator<Item = u32>) -> u128 {
    values.fold(0u128, |acc, v| (acc << 8) | v as u128)
}

/// Standardization of a word with entries `< 32`, packed.
#[inline]
fn standardized_key(word: &[u8]) -> u128 {
    let present = word.iter().fold(0u32, |m, &v| m | 1 << v);
    pack(
        word.iter()
            .map(|&v| (present & ((1u32 << v) - 1)).count_ones() + 1),
    )
}

/// `sum_{alpha, beta} c_alpha c_beta b_P(alpha, beta)` for every diagram `P`
/// with a nonzero value, in diagram order. Diagrams are processed in
/// parallel and collected in order, so the output is deterministic.
fn averaged_weights(initial: &PatternCombo, terminal: &PatternCombo) -> Vec<(SetPartitionKK, Rational)> {
    let k = initial.k();
    assert_eq!(k, terminal.k());
    assert!(k <= 16, "pattern length above 16");
    let index = |c: &PatternCombo| -> HashMap<u128, usize> {
        c.terms()
            .enumerate()
            .map(|(i, (p, _))| (pack(p.values().iter().copied()), i))
            .collect()
    };
    let init_idx = index(initial);
    let term_idx = index(terminal);
    let init_c: Vec<&Rational> = initial.terms().map(|(_, c)| c).collect();
    let term_c: Vec<&Rational> = terminal.terms().map(|(_, c)| c).collect();

    SetPartitionKK::all(k)
        .into_par_iter()
        .filter_map(|p| {
            let parts = p.num_parts();
            let j: Vec<u8> = (1..=k).map(|r| p.part_of_unprimed(r) as u8).collect();
            let i: Vec<u8> = (1..=k).map(|r| p.part_of_primed(r) as u8).collect();
            let mut x: Vec<u8> = (0..parts as u8).collect();
            let mut hits: HashMap<(usize, usize), u64> = HashMap::new();
            let mut xj = vec![0u8; k];
            let mut xi = vec![0u8; k];
            loop {
                for r in 0..k {
                    xj[r] = x[j[r] as usize];
                }
                if let Some(&a) = init_idx.get(&standardized_key(&xj)) {
                    for r in 0..k {
                        xi[r] = x[i[r] as usize];
                    }
                    if let Some(&b) = term_idx.get(&standardized_key(&xi)) {
                        *hits.entry((a, b)).or_insert(0) += 1;
                    }
                }
                if !next_permutation(&mut x) {
                    break;
                }
            }
            if hits.is_empty() {
                return None;
            }
            let mut total = Rational::zero();
            for ((a, b), n) in hits {
                total += init_c[a] * term_c[b] * BigInt::from(n);
            }
            total /= BigInt::from(factorial(parts as u32));
            (!total.is_zero()).then_some((p, total))
        })
        .collect()
}

/// Rewrites `sum_P w_P x_P` in the diagram basis:
/// `x_P = sum_{P' coarsening P} mu(P, P') P'`.
fn x_to_diagram_basis<I>(x_terms: I) -> BTreeMap<SetPartitionKK, Rational>
where
    I: IntoIterator<Item = (SetPartitionKK, Rational)>,
{
    let mut out: BTreeMap<SetPartitionKK, Rational> = BTreeMap::new();
    for (p, w) in x_terms {
        for q in coarsenings(&p) {
            let mu = mobius(&p, &q).expect("coarsening");
            let e = out.entry(q).or_insert_with(Rational::zero);
            *e += &w * rat(mu);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The polynomial `M_{sigma,d}(n, m_1, ..., m_dk)` whose value on any
/// permutation `pi` is the average of `N_sigma^d` over the conjugacy class
/// of `pi`. Valid for every `n >= 1`.
pub fn moment_polynomial(sigma: &Permutation, d: usize, guard: &Guardrails) -> Result<MPoly> {
    let dk = d * sigma.n();
    let initial = tensor_power_expand(sigma, d, Side::Initial, guard)?;
    let terminal = tensor_power_expand(sigma, d, Side::Terminal, guard)?;
    let weights = averaged_weights(&initial, &terminal);
    let diagram_coeffs: Vec<(SetPartitionKK, Rational)> = x_to_diagram_basis(weights).into_iter().collect();

    let pieces: Vec<MPoly> = diagram_coeffs
        .par_iter()
        .map(|(p, c)| trace_polynomial(p).map(|t| t.scale(c)))
        .collect::<Result<_>>()?;
    let mut m = MPoly::zero(dk);
    for piece in &pieces {
        m.add_scaled(piece, &Rational::one());
    }
    if m.weighted_degree().unwrap_or(0) as usize > dk || m.max_m_used() > dk {
        return Err(Error::Internal(format!(
            "moment polynomial for sigma = {sigma}, d = {d} exceeds weighted degree {dk}"
        )));
    }
    Ok(m)
}

/// Moment polynomial together with its stable character decomposition.
#[derive(Debug, Clone)]
pub struct MomentReport {
    pub sigma: Permutation,
    pub d: usize,
    pub polynomial: MPoly,
    pub decomposition: StableDecomposition,
}

impl MomentReport {
    /// `a^∅(n)`, the `d`-th moment of `N_sigma` over all of `S_n` for
    /// `n >= 2dk`.
    pub fn whole_group_moment(&self) -> UPoly {
        self.decomposition.a_empty()
    }
}

/// `M_{sigma,d,n} = sum_{|lambda| <= dk} a^lambda(n) chi^{lambda[n]}`.
pub fn stable_decomposition(
    sigma: &Permutation,
    d: usize,
    guard: &Guardrails,
) -> Result<StableDecomposition> {
    let m = moment_polynomial(sigma, d, guard)?;
    decompose_stable(&m, d * sigma.n())
}

/// Runs [`moment_polynomial`] and [`decompose_stable`] once.
pub fn moment_report(sigma: &Permutation, d: usize, guard: &Guardrails) -> Result<MomentReport> {
    let polynomial = moment_polynomial(sigma, d, guard)?;
    let decomposition = decompose_stable(&polynomial, d * sigma.n())?;
    Ok(MomentReport {
        sigma: sigma.clone(),
        d,
        polynomial,
        decomposition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::CycleType;
    use crate::poly::{binomial, ratio};

    fn pat(v: &[u32]) -> GeneralizedPattern {
        GeneralizedPattern::new(v.to_vec()).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    /// `E_pattern(1)` at `n`, as the set of sorted words in `[n]^K`.
    fn sorted_words(p: &GeneralizedPattern, n: u32) -> Vec<Vec<u32>> {
        let k = p.len();
        let mut out = Vec::new();
        let mut w = vec![1u32; k];
        loop {
            if crate::perm::is_sorted_as(&w, p).unwrap() {
                out.push(w.clone());
            }
            let mut pos = k;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                w[pos] += 1;
                if w[pos] <= n {
                    break;
                }
                w[pos] = 1;
            }
        }
    }

    /// Vector of `sum c E_gamma(1)` at `n`, indexed by word.
    fn combo_vector(c: &PatternCombo, n: u32) -> BTreeMap<Vec<u32>, Rational> {
        let mut v = BTreeMap::new();
        for (p, coeff) in c.terms() {
            for w in sorted_words(p, n) {
                *v.entry(w).or_insert_with(Rational::zero) += coeff;
            }
        }
        v
    }

    fn tensor_vector(a: &GeneralizedPattern, b: &GeneralizedPattern, n: u32) -> BTreeMap<Vec<u32>, Rational> {
        let mut v = BTreeMap::new();
        for x in sorted_words(a, n) {
            for y in sorted_words(b, n) {
                let mut w = x.clone();
                w.extend(&y);
                v.insert(w, Rational::one());
            }
        }
        v
    }

    #[test]
    fn shuffle_examples() {
        let one = pat(&[1]);
        let s = shuffle_expand(&one, &one);
        let expect: Vec<GeneralizedPattern> = vec![pat(&[1, 1]), pat(&[1, 2]), pat(&[2, 1])];
        assert_eq!(s.terms().map(|(p, _)| p.clone()).collect::<Vec<_>>(), expect);
        assert!(s.terms().all(|(_, c)| c.is_one()));
        assert_eq!(combo_vector(&s, 3), tensor_vector(&one, &one, 3));

        let s = shuffle_expand(&pat(&[1, 2]), &GeneralizedPattern::empty());
        assert_eq!(s, PatternCombo::single(pat(&[1, 2])));
    }

    #[test]
    fn shuffle_matches_vector_expansion() {
        let pats = [pat(&[1, 2]), pat(&[2, 1]), pat(&[1, 1]), pat(&[2, 1, 3])];
        for a in &pats {
            for b in &pats[..3] {
                let s = shuffle_expand(a, b);
                let n = (a.len() + b.len()) as u32;
                assert_eq!(combo_vector(&s, n), tensor_vector(a, b, n), "{a} ⊗ {b}");
            }
        }
        // two increasing pairs: 1 with r = 2, 6 with r = 3, 6 with r = 4
        assert_eq!(shuffle_expand(&pats[0], &pats[0]).len(), 13);
    }

    #[test]
    fn tensor_power_examples() {
        let g = Guardrails::default();
        let s = perm("231");
        let t = tensor_power_expand(&s, 1, Side::Terminal, &g).unwrap();
        assert_eq!(t, PatternCombo::single(pat(&[2, 3, 1])));
        let t = tensor_power_expand(&perm("1"), 2, Side::Initial, &g).unwrap();
        assert_eq!(t, shuffle_expand(&pat(&[1]), &pat(&[1])));
        assert!(matches!(
            tensor_power_expand(&perm("12"), 3, Side::Initial, &g),
            Err(Error::Guardrail { .. })
        ));
    }

    #[test]
    fn tensor_power_coefficients_are_one() {
        let g = Guardrails::default();
        for (s, d) in [("1", 2), ("1", 3), ("1", 4), ("12", 2), ("21", 2)] {
            let sigma = perm(s);
            for side in [Side::Initial, Side::Terminal] {
                let c = tensor_power_expand(&sigma, d, side, &g).unwrap();
                assert!(c.terms().all(|(_, v)| v.is_one()));
                // direct vector check at n = dk
                let n = (d * sigma.n()) as u32;
                let base = match side {
                    Side::Initial => GeneralizedPattern::from_permutation(&Permutation::identity(sigma.n())),
                    Side::Terminal => GeneralizedPattern::from_permutation(&sigma),
                };
                let single = sorted_words(&base, n);
                let mut expect: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
                let mut prefixes: Vec<Vec<u32>> = vec![Vec::new()];
                for _ in 0..d {
                    prefixes = prefixes
                        .iter()
                        .flat_map(|p| single.iter().map(move |w| [p.clone(), w.clone()].concat()))
                        .collect();
                }
                for w in prefixes {
                    expect.insert(w, Rational::one());
                }
                assert_eq!(combo_vector(&c, n), expect, "{s} d={d}");
            }
        }
    }

    #[test]
    fn averaging_k1() {
        let g = Guardrails::default();
        let e = averaging_coefficients(&pat(&[1]), &pat(&[1]), &g).unwrap();
        let id: SetPartitionKK = "{1,1'}".parse().unwrap();
        let split: SetPartitionKK = "{1}|{1'}".parse().unwrap();
        assert_eq!(e.coefficient(&id), rat(1));
        assert_eq!(e.coefficient(&split), rat(1));
        let diag = e.to_diagram_basis();
        assert_eq!(diag.len(), 1);
        assert_eq!(diag[&split], rat(1));
    }

    #[test]
    fn averaging_coefficients_are_fractions_of_p_factorial() {
        let g = Guardrails::default();
        let pats = [pat(&[1, 2]), pat(&[2, 1]), pat(&[1, 1]), pat(&[1, 3, 2])];
        for a in &pats {
            for b in &pats {
                if a.len() != b.len() {
                    continue;
                }
                let e = averaging_coefficients(a, b, &g).unwrap();
                for (p, c) in e.coefficients() {
                    assert!(*c > Rational::zero() && *c <= Rational::one());
                    let fact = BigInt::from(factorial(p.num_parts() as u32));
                    assert!((fact % c.denom()).is_zero());
                }
            }
        }
    }

    #[test]
    fn first_moment_of_12_on_identity_class() {
        let g = Guardrails::default();
        let m = moment_polynomial(&perm("12"), 1, &g).unwrap();
        for n in 4..=8u64 {
            let id = CycleType::identity(n as usize);
            assert_eq!(m.evaluate_at(&id), Rational::from_integer(binomial(n, 2)));
        }
        assert!(m.weighted_degree().unwrap() <= 2);
        assert!(m.max_m_used() <= 2);
    }

    #[test]
    fn whole_group_mean_of_12() {
        let g = Guardrails::default();
        let r = moment_report(&perm("12"), 1, &g).unwrap();
        // C(n,2)/2 = n^2/4 - n/4
        assert_eq!(
            r.whole_group_moment(),
            UPoly::from_coeffs(vec![rat(0), ratio(-1, 4), ratio(1, 4)])
        );
        for (lam, a) in r.decomposition.terms() {
            assert!(a.degree().is_none_or(|deg| deg <= 2 - lam.size()));
        }
    }

    #[test]
    fn moment_guardrail() {
        let g = Guardrails::default();
        assert!(matches!(
            moment_polynomial(&perm("123"), 2, &g),
            Err(Error::Guardrail { .. })
        ));
    }
}
