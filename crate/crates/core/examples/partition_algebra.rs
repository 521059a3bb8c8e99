//! Diagram multiplication, the x-basis and the map into End(V^{⊗k}).

use pattern_moments::partition_algebra::{
    kernel_check, multiply_diagrams, phi_diagram, x_basis_expand, SetPartitionKK,
};
use pattern_moments::Guardrails;

pub fn run() -> String {
    let mut out = String::new();
    let p1: SetPartitionKK = "{1,1'}|{2'}|{2,3,3'}".parse().unwrap();
    let p2: SetPartitionKK = "{1}|{1'}|{2}|{2',3}|{3'}".parse().unwrap();
    let (c, p3) = multiply_diagrams(&p1, &p2).unwrap();
    out += &format!("({p1}) * ({p2}) = t^{c} ({p3})\n");

    let g = Guardrails::default();
    let n = 2;
    let lhs = phi_diagram(&p1, n, &g)
        .unwrap()
        .matmul(&phi_diagram(&p2, n, &g).unwrap());
    let rhs = phi_diagram(&p3, n, &g).unwrap().scaled(&(n as i64).pow(c));
    out += &format!("Phi(P1) Phi(P2) = n^c Phi(P3) at n = {n}: {}\n", lhs == rhs);

    let p: SetPartitionKK = "{1}|{2}|{1'}|{2'}".parse().unwrap();
    out += &format!("x_{p} = {}\n", x_basis_expand(&p));
    for n in 1..=4 {
        out += &format!("  Phi_{n}(x_P) = 0: {}\n", kernel_check(&p, n, &g).unwrap());
    }
    out += &format!("(2,2)-diagrams: {}\n", SetPartitionKK::all(2).len());
    out
}

fn main() {
    print!("{}", run());
}
