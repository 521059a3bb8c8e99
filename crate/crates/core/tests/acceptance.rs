//! One line per acceptance criterion. Every comparison is exact: tolerance 0
//! on rationals and integers.

use std::process::ExitCode;
use std::time::Instant;

use pattern_moments::oracle::{run_suite, MomentCache, Suite, VerificationReport, VerifyConfig};
use pattern_moments::partition_algebra::{multiply_diagrams, SetPartitionKK};

fn diagram_product_example() -> VerificationReport {
    let mut rep = VerificationReport::new("product");
    let p1: SetPartitionKK = "{1,1'}|{2'}|{2,3,3'}".parse().unwrap();
    let p2: SetPartitionKK = "{1}|{1'}|{2}|{2',3}|{3'}".parse().unwrap();
    let expected: SetPartitionKK = "{1}|{1'}|{2,2',3}|{3'}".parse().unwrap();
    match multiply_diagrams(&p1, &p2) {
        Ok((c, p3)) => {
            rep.check(|| "c".into(), &1, &c);
            rep.check(|| "P3".into(), &expected, &p3);
        }
        Err(e) => rep.error("multiply", &e),
    }
    rep
}

fn main() -> ExitCode {
    let cfg = VerifyConfig::default();
    let mut cache = MomentCache::default();
    let criteria: [(u32, &str, Option<Suite>); 11] = [
        (
            1,
            "diagram product example: c = 1, P3 = {1}|{1'}|{2,2',3}|{3'}",
            None,
        ),
        (
            2,
            "Phi(P1)Phi(P2) = n^c Phi(P3): k=2 all pairs n<=4, k=3 200 pairs n=3,4",
            Some(Suite::Homomorphism),
        ),
        (
            3,
            "kernel of Phi_n = span of x_P with more than n parts",
            Some(Suite::Kernel),
        ),
        (
            4,
            "trace polynomial = brute trace, k<=3, n<=6, all classes",
            Some(Suite::Trace),
        ),
        (
            5,
            "tr(E_sigma^T g E_Id) = N_sigma(g), S_2 u S_3 on S_5 + 100 of S_6",
            Some(Suite::PatternTrace),
        ),
        (
            6,
            "Phi(averaging expansion) = brute average operator, K<=2, n=2..4",
            Some(Suite::Averaging),
        ),
        (
            7,
            "first moments = brute class averages, S_2 u S_3, n=1..8",
            Some(Suite::FirstMoments),
        ),
        (
            8,
            "second moments = brute class averages, S_2, n=1..8",
            Some(Suite::SecondMoments),
        ),
        (
            9,
            "deg a^lambda <= dk-|lambda|; synthesis = M at n=3dk+1",
            Some(Suite::Stable),
        ),
        (
            10,
            "a^() = whole-group mean (n=6..8) = C(n,3)/6 for S_3",
            Some(Suite::WholeGroup),
        ),
        (
            11,
            "orthonormality n<=8; character polynomials = padded characters",
            Some(Suite::Characters),
        ),
    ];
    let mut all_ok = true;
    for (id, label, suite) in criteria {
        let start = Instant::now();
        let rep = match suite {
            None => diagram_product_example(),
            Some(s) => run_suite(s, &cfg, &mut cache),
        };
        let ok = rep.passed() && rep.cases_run > 0;
        all_ok &= ok;
        println!(
            "{} [{id:>2}] {label}  ({}/{} exact, tol 0, {:.1}s)",
            if ok { "PASS" } else { "FAIL" },
            rep.cases_passed(),
            rep.cases_run,
            start.elapsed().as_secs_f64()
        );
        for f in rep.failures.iter().take(5) {
            println!(
                "       {}: expected {}, got {}",
                f.description, f.expected, f.actual
            );
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
