//! Traces of g ⊗ P as polynomials in the cycle counts of g.

use pattern_moments::oracle::brute_trace;
use pattern_moments::partition_algebra::SetPartitionKK;
use pattern_moments::trace::{build_part_graph, trace_polynomial};
use pattern_moments::{CycleType, Guardrails};

pub fn run() -> String {
    let mut out = String::new();
    let g = Guardrails::default();
    for s in [
        "{1,1'}",
        "{1}|{1'}",
        "{1,2'}|{2,1'}",
        "{1,3'}|{2,1'}|{3,2'}",
        "{1,2}|{1',2'}",
    ] {
        let p: SetPartitionKK = s.parse().unwrap();
        let t = trace_polynomial(&p).unwrap();
        let graph = build_part_graph(&p);
        out += &format!("{p}: edges {:?} -> {t}\n", graph.edges());
        let ct: CycleType = "1^1 2^1 3^1".parse().unwrap();
        out += &format!(
            "  at {ct}: {} (brute force {})\n",
            t.evaluate_at(&ct),
            brute_trace(&p, &ct, &g).unwrap()
        );
    }
    out
}

fn main() {
    print!("{}", run());
}
