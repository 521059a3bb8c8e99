//! Runs every cargo example and checks a line of its output.

#[allow(dead_code)]
#[path = "../examples/characters.rs"]
mod characters;
#[allow(dead_code)]
#[path = "../examples/exact_polynomials.rs"]
mod exact_polynomials;
#[allow(dead_code)]
#[path = "../examples/moment_polynomial.rs"]
mod moment_polynomial;
#[allow(dead_code)]
#[path = "../examples/partition_algebra.rs"]
mod partition_algebra;
#[allow(dead_code)]
#[path = "../examples/pattern_counting.rs"]
mod pattern_counting;
#[allow(dead_code)]
#[path = "../examples/trace_polynomials.rs"]
mod trace_polynomials;
#[allow(dead_code)]
#[path = "../examples/verification.rs"]
mod verification;

#[test]
fn pattern_counting_runs() {
    assert!(pattern_counting::run().contains("N_231(41523) = 2"));
}

#[test]
fn exact_polynomials_runs() {
    assert!(exact_polynomials::run().contains("interpolated: 1/2*n^2 - 1/2*n"));
}

#[test]
fn characters_runs() {
    let out = characters::run();
    assert!(out.contains("<chi, chi> on S_5 = 1"));
    assert!(out.contains("a^() = 2"));
    assert!(out.contains("a^(1) = 3"));
}

#[test]
fn partition_algebra_runs() {
    let out = partition_algebra::run();
    assert!(out.contains("t^1 ({1}|{2,3,2'}|{1'}|{3'})"));
    assert!(out.contains("at n = 2: true"));
}

#[test]
fn trace_polynomials_runs() {
    let out = trace_polynomials::run();
    for line in out.lines().filter(|l| l.contains("brute force")) {
        let (lhs, rhs) = line
            .trim()
            .trim_end_matches(')')
            .split_once(" (brute force ")
            .unwrap();
        assert_eq!(lhs.rsplit(' ').next().unwrap(), rhs);
    }
}

#[test]
fn moment_polynomial_runs() {
    let out = moment_polynomial::run();
    assert!(out.contains("a^() for 132: 1/36*n^3 - 1/12*n^2 + 1/18*n"));
}

#[test]
fn verification_runs() {
    assert!(verification::run().contains("all"));
}
