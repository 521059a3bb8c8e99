//! Pattern occurrences, generalized patterns and cycle types.

use pattern_moments::perm::{is_sorted_as, pattern_occurrences};
use pattern_moments::{CycleType, GeneralizedPattern, Permutation};

pub fn run() -> String {
    let mut out = String::new();
    let pi: Permutation = "41523".parse().unwrap();
    for sigma in ["12", "21", "231", "132"] {
        let s: Permutation = sigma.parse().unwrap();
        out += &format!("N_{sigma}({pi}) = {}\n", pattern_occurrences(&s, &pi));
    }

    // a non-injective pattern: (2,1,1) accepts words a > b = c
    let p = GeneralizedPattern::new(vec![2, 1, 1]).unwrap();
    for w in [[5, 2, 2], [5, 2, 3], [2, 2, 2]] {
        out += &format!("{w:?} sorted as {p}: {}\n", is_sorted_as(&w, &p).unwrap());
    }
    out += &format!(
        "normalize([7, 3, 7]) = {}\n",
        GeneralizedPattern::normalize(&[7, 3, 7])
    );

    out += &format!("cycle type of {pi}: {}\n", pi.cycle_type());
    for ct in CycleType::enumerate(4) {
        out += &format!(
            "  {:<10} size {:>2}  representative {}\n",
            ct.to_string(),
            ct.class_size(),
            ct.representative()
        );
    }
    out
}

fn main() {
    print!("{}", run());
}
