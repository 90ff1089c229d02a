//! Seeded instance collections shared by the reproduction campaigns, the
//! acceptance suite and the benchmarks.

use crate::constructions::{
    complete_graph, complete_uniform, cycle_graph, fano_plane, hypercube_graph, hypertree_random, petersen_graph,
    random_simple,
};
use crate::error::Result;
use crate::hypergraph::Hypergraph;

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub hypergraph: Hypergraph,
}

impl Instance {
    fn new(name: impl Into<String>, hypergraph: Hypergraph) -> Self {
        Instance { name: name.into(), hypergraph }
    }
}

/// `count` random simple hypergraphs on 3 to 8 vertices with edges of size
/// 2 to 4. Instance `i` uses seed `seed + i`.
pub fn random_small(count: usize, seed: u64) -> Result<Vec<Instance>> {
    (0..count as u64)
        .map(|i| {
            let s = seed.wrapping_add(i);
            let n = 3 + (s % 6) as usize;
            let edges = 1 + ((s / 6) % 6) as usize;
            let max_rank = 2 + ((s / 36) % 3) as usize;
            let hg = random_simple(n, edges, max_rank, s)?;
            Ok(Instance::new(format!("random:{n},{edges},{max_rank},{s}"), hg))
        })
        .collect()
}

/// `count` random uniform hypertrees with at least two edges and at most 12
/// vertices.
pub fn hypertrees(count: usize, seed: u64) -> Result<Vec<Instance>> {
    (0..count as u64)
        .map(|i| {
            let s = seed.wrapping_add(i);
            let r = 2 + (s % 3) as usize;
            let most = 11 / (r - 1);
            let edges = 2 + ((s / 3) as usize % (most - 1));
            let max_degree = 2 + ((s / 7) % 3) as usize;
            let hg = hypertree_random(r, edges, max_degree, s)?;
            Ok(Instance::new(format!("hypertree:{r},{edges},{max_degree},{s}"), hg))
        })
        .collect()
}

/// Connected regular graphs: cycles C3..C12, complete graphs K3..K8, the
/// Petersen graph and the 3-cube.
pub fn regular_graphs() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 3..=12 {
        out.push(Instance::new(format!("C{n}"), cycle_graph(n)?));
    }
    for n in 3..=8 {
        out.push(Instance::new(format!("K{n}"), complete_graph(n)?));
    }
    out.push(Instance::new("petersen", petersen_graph()?));
    out.push(Instance::new("Q3", hypercube_graph(3)?));
    Ok(out)
}

/// Connected regular uniform hypergraphs of rank 3.
pub fn regular_hypergraphs() -> Result<Vec<Instance>> {
    Ok(vec![
        Instance::new("H4^3", complete_uniform(4, 3)?),
        Instance::new("H5^3", complete_uniform(5, 3)?),
        Instance::new("fano", fano_plane()?),
    ])
}
