//! Moment polynomials of pattern counts and their whole-group averages.

use pattern_moments::moments::{moment_report, shuffle_expand};
use pattern_moments::oracle::brute_moment;
use pattern_moments::{CycleType, GeneralizedPattern, Guardrails, Permutation};

pub fn run() -> String {
    let mut out = String::new();
    let g = Guardrails::default();

    let one = GeneralizedPattern::new(vec![1, 2]).unwrap();
    out += &format!("E(12) ⊗ E(12) = {}\n", shuffle_expand(&one, &one));

    // inversions: mean and second moment on each class
    let sigma: Permutation = "21".parse().unwrap();
    for d in [1, 2] {
        let r = moment_report(&sigma, d, &g).unwrap();
        out += &format!("M_(21,{d}) = {}\n", r.polynomial);
        out += &format!("  over S_n: {}\n", r.whole_group_moment());
        for ct in ["1^6", "2^3", "1^2 4^1", "6^1"] {
            let c: CycleType = ct.parse().unwrap();
            out += &format!(
                "  at {ct:<8} {:>8}  (brute force {})\n",
                r.polynomial.evaluate_at(&c).to_string(),
                brute_moment(&sigma, d, &c, &g).unwrap()
            );
        }
    }

    // a length-3 pattern: the mean over S_n is C(n,3)/6
    let r = moment_report(&"132".parse().unwrap(), 1, &g).unwrap();
    out += &format!("a^() for 132: {}\n", r.whole_group_moment());
    out
}

fn main() {
    print!("{}", run());
}
