//! Exact polynomials in n, m_1, m_2, ... and univariate interpolation.

use std::collections::BTreeMap;

use pattern_moments::poly::{interpolate_univariate, rat};
use pattern_moments::{CycleType, MPoly};

pub fn run() -> String {
    let mut out = String::new();
    let n = MPoly::n(2);
    let m1 = MPoly::m(1);
    let m2 = MPoly::m(2);

    // number of 2-subsets fixed setwise by a permutation: C(m1, 2) + m2
    let half = rat(1) / rat(2);
    let fixed_pairs = &(&(&m1 * &m1) - &m1).scale(&half) + &m2;
    out += &format!("p = {fixed_pairs}\n");
    out += &format!("weighted degree {}\n", fixed_pairs.weighted_degree().unwrap());
    for ct in ["1^4", "1^2 2^1", "2^2", "4^1"] {
        let c: CycleType = ct.parse().unwrap();
        out += &format!("  p({ct}) = {}\n", fixed_pairs.evaluate_at(&c));
    }
    let mut vals = BTreeMap::new();
    vals.insert(1, 3);
    out += &format!(
        "(n + m1)(n = 5, m1 = 3) = {}\n",
        (&n + &m1).evaluate(5, &vals).unwrap()
    );

    // recover n(n-1)/2 from samples
    let pts: Vec<(i64, _)> = (0..4).map(|x| (x, rat(x * (x - 1) / 2))).collect();
    let u = interpolate_univariate(&pts, 3).unwrap();
    out += &format!("interpolated: {u}\n");
    out += &format!("json: {}\n", serde_json::to_string(&fixed_pairs).unwrap());
    out
}

fn main() {
    print!("{}", run());
}
