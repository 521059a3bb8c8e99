//! Running the brute-force cross-check suites.

use pattern_moments::oracle::{verify_all, Suite, VerifyConfig};

pub fn run() -> String {
    let cfg = VerifyConfig {
        suites: vec![
            Suite::Kernel,
            Suite::Trace,
            Suite::PatternTrace,
            Suite::FirstMoments,
        ],
        n_max: Some(5),
        ..VerifyConfig::default()
    };
    let report = verify_all(&cfg);
    format!("{report}{}\n", serde_json::to_string(&report.suites[0]).unwrap())
}

fn main() {
    print!("{}", run());
}
