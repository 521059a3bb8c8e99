use proptest::prelude::*;

use pattern_moments::characters::StableDecomposition;
use pattern_moments::moments::{moment_polynomial, moment_report};
use pattern_moments::partition_algebra::{multiply_diagrams, SetPartitionKK};
use pattern_moments::perm::{is_sorted_as, pattern_occurrences};
use pattern_moments::poly::binomial;
use pattern_moments::{CycleType, GeneralizedPattern, Guardrails, MPoly, Permutation, Rational};

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn diagram(k: usize) -> impl Strategy<Value = SetPartitionKK> {
    proptest::collection::vec(0u8..(2 * k as u8), 2 * k)
        .prop_map(move |labels| SetPartitionKK::from_labels(k, &labels).unwrap())
}

proptest! {
    #[test]
    fn occurrences_over_sk_sum_to_binomial(pi in permutation(8), k in 1usize..=3) {
        let total: u64 = Permutation::all(k).map(|s| pattern_occurrences(&s, &pi)).sum();
        prop_assert_eq!(total as i64, i64::try_from(binomial(pi.n() as u64, k as u64)).unwrap());
    }

    #[test]
    fn normalize_agrees_with_sortedness(word in proptest::collection::vec(1u32..5, 1..6)) {
        let p = GeneralizedPattern::normalize(&word);
        prop_assert!(is_sorted_as(&word, &p).unwrap());
        prop_assert_eq!(GeneralizedPattern::normalize(p.values()), p);
    }

    #[test]
    fn diagram_product_is_associative(a in diagram(3), b in diagram(3), c in diagram(3)) {
        let (c1, ab) = multiply_diagrams(&a, &b).unwrap();
        let (c2, ab_c) = multiply_diagrams(&ab, &c).unwrap();
        let (c3, bc) = multiply_diagrams(&b, &c).unwrap();
        let (c4, a_bc) = multiply_diagrams(&a, &bc).unwrap();
        prop_assert_eq!(c1 + c2, c3 + c4);
        prop_assert_eq!(ab_c, a_bc);
    }
}

#[test]
fn first_moments_over_sk_sum_to_binomial() {
    let g = Guardrails::default();
    for k in 1..=3usize {
        let mut total = MPoly::zero(k);
        for s in Permutation::all(k) {
            total = &total + &moment_polynomial(&s, 1, &g).unwrap();
        }
        for n in 1..=9usize {
            for ct in CycleType::enumerate(n) {
                assert_eq!(
                    total.evaluate_at(&ct),
                    Rational::from_integer(binomial(n as u64, k as u64))
                );
            }
        }
    }
}

#[test]
fn moment_uses_only_low_cycle_counts() {
    let g = Guardrails::default();
    for (s, d) in [("12", 2), ("132", 1), ("1", 4)] {
        let sigma: Permutation = s.parse().unwrap();
        let m = moment_polynomial(&sigma, d, &g).unwrap();
        let dk = d * sigma.n();
        assert!(m.max_m_used() <= dk);
        assert!(m.weighted_degree().unwrap() as usize <= dk);
    }
}

#[test]
fn fixed_point_moments() {
    // N_1 counts points, so every moment is n^d on every class
    let g = Guardrails::default();
    let one: Permutation = "1".parse().unwrap();
    for d in 1..=4u32 {
        let m = moment_polynomial(&one, d as usize, &g).unwrap();
        for n in 1..=6usize {
            for ct in CycleType::enumerate(n) {
                assert_eq!(
                    m.evaluate_at(&ct),
                    Rational::from_integer((n as i64).pow(d).into())
                );
            }
        }
    }
}

#[test]
fn json_round_trips() {
    let g = Guardrails::default();
    let r = moment_report(&"21".parse().unwrap(), 2, &g).unwrap();
    let m: MPoly = serde_json::from_str(&serde_json::to_string(&r.polynomial).unwrap()).unwrap();
    assert_eq!(m, r.polynomial);
    let d: StableDecomposition =
        serde_json::from_str(&serde_json::to_string(&r.decomposition).unwrap()).unwrap();
    assert_eq!(d, r.decomposition);
    assert!(!d.a_empty().is_zero());
}
