//! Traces of `g ⊗ P` on `V^{⊗k}` as polynomials in `n, m_1, ..., m_k`.
//!
//! A labelling of the vertices of `P` contributes to the trace when every
//! part is monochromatic and, for each `r`, the label of the part holding
//! `r'` is `g` applied to the label of the part holding `r`. On the directed
//! graph of parts this means: pick one label per connected component, fixed
//! by `g^l` where `l` is the gcd of the cycle imbalances of that component.
//! The count of such labels is `Q_l = sum_{d | l} d m_d` (`Q_0 = n`).

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::partition_algebra::{SetPartitionKK, UnionFind};
use crate::poly::{rat, MPoly};

/// Directed graph on the parts of a diagram with an edge `U -> W` whenever
/// some `r` lies in `U` and `r'` in `W`. Parallel edges are merged; loops
/// are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartGraph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl PartGraph {
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Distinct edges, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Connected components of the underlying undirected graph, each sorted,
    /// ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.num_vertices);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); self.num_vertices];
        for v in 0..self.num_vertices {
            let r = uf.find(v);
            by_root[r].push(v);
        }
        by_root.into_iter().filter(|c| !c.is_empty()).collect()
    }
}

pub fn build_part_graph(p: &SetPartitionKK) -> PartGraph {
    let mut edges: Vec<(usize, usize)> = (1..=p.k())
        .map(|r| (p.part_of_unprimed(r), p.part_of_primed(r)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    PartGraph {
        num_vertices: p.num_parts(),
        edges,
    }
}

/// gcd of `|l_+ - l_-|` over the undirected cycles of `component`, 0 when
/// it is a tree.
///
/// Vertices get integer potentials along a spanning tree (+1 along an edge,
/// -1 against it); each edge `u -> v` then closes a fundamental cycle of
/// imbalance `potential(u) + 1 - potential(v)`, which is 0 for tree edges.
/// The fundamental cycles generate the cycle space, so their gcd is the gcd
/// over all cycles.
pub fn component_l_tot(g: &PartGraph, component: &[usize]) -> u32 {
    let Some(&root) = component.first() else {
        return 0;
    };
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); g.num_vertices];
    for &(u, v) in &g.edges {
        adj[u].push((v, 1));
        adj[v].push((u, -1));
    }
    let mut potential: Vec<Option<i64>> = vec![None; g.num_vertices];
    potential[root] = Some(0);
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        let pu = potential[u].expect("visited");
        for &(w, dir) in &adj[u] {
            if potential[w].is_none() {
                potential[w] = Some(pu + dir);
                stack.push(w);
            }
        }
    }
    let mut l_tot = 0i64;
    for &(u, v) in &g.edges {
        if let (Some(pu), Some(pv)) = (potential[u], potential[v]) {
            l_tot = l_tot.gcd(&(pu + 1 - pv).abs());
        }
    }
    l_tot as u32
}

/// `Q_0 = n`, `Q_l = sum_{d | l} d m_d`.
pub fn q_factor(l: u32, k_bound: usize) -> Result<MPoly> {
    if l as usize > k_bound {
        return Err(Error::Internal(format!(
            "cycle imbalance gcd {l} exceeds the number of strands {k_bound}"
        )));
    }
    if l == 0 {
        return Ok(MPoly::n(k_bound));
    }
    let mut q = MPoly::zero(k_bound);
    for d in (1..=l).filter(|d| l.is_multiple_of(*d)) {
        q.add_scaled(&MPoly::m(d as usize), &rat(d as i64));
    }
    Ok(q)
}

/// `tr_{V^{⊗k}}(g ⊗ P)` as a polynomial in `n, m_1, ..., m_k`: the product
/// of `Q_{l_tot}` over the components of the part graph.
pub fn trace_polynomial(p: &SetPartitionKK) -> Result<MPoly> {
    let k = p.k();
    let g = build_part_graph(p);
    let mut out = MPoly::one(k);
    for comp in g.components() {
        out = &out * &q_factor(component_l_tot(&g, &comp), k)?;
    }
    if out.weighted_degree().unwrap_or(0) as usize > k {
        return Err(Error::Internal(format!(
            "trace polynomial of {p} has weighted degree above {k}"
        )));
    }
    Ok(out)
}
