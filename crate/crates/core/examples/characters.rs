//! Characters of S_n, character polynomials and stable decompositions.

use pattern_moments::characters::{
    character_polynomial, decompose_stable, inner_product, mn_character, pad_partition, ClassFunction,
    IntegerPartition,
};
use pattern_moments::{CycleType, MPoly};

pub fn run() -> String {
    let mut out = String::new();
    let lam: IntegerPartition = "(2,1)".parse().unwrap();
    let ct: CycleType = "1^1 2^1".parse().unwrap();
    out += &format!("chi^{lam}({ct}) = {}\n", mn_character(&lam, &ct).unwrap());

    let chi = ClassFunction::character(&"(3,2)".parse().unwrap()).unwrap();
    out += &format!("<chi, chi> on S_5 = {}\n", inner_product(&chi, &chi).unwrap());

    // chi^{(1)[n]} is the number of fixed points minus one
    for mu in ["(1)", "(2)", "(1,1)"] {
        let mu: IntegerPartition = mu.parse().unwrap();
        let p = character_polynomial(&mu).unwrap();
        let n = 2 * mu.size() + 2;
        let c = CycleType::identity(n);
        let direct = mn_character(&pad_partition(&mu, n).unwrap(), &c).unwrap();
        out += &format!("P_{mu} = {p}   (at 1^{n}: {} = {direct})\n", p.evaluate_at(&c));
    }

    // m1^2 = 2 + 3 chi^(1) + chi^(2) + chi^(1,1) for n >= 4
    let m1sq = &MPoly::m(1) * &MPoly::m(1);
    let dec = decompose_stable(&m1sq, 2).unwrap();
    for (l, a) in dec.nonzero_terms() {
        out += &format!("  a^{l} = {a}\n");
    }
    out
}

fn main() {
    print!("{}", run());
}
