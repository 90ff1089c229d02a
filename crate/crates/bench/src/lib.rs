//! Fixed instances shared by the solver benchmarks.

use hyperlambda::constructions::{complete_uniform, cycle_graph, hypercube_graph, hyperpath, petersen_graph, star_hypergraph};
use hyperlambda::Hypergraph;

/// `(name, hypergraph, h, k)` for each exact-solver case.
pub fn instances() -> Vec<(&'static str, Hypergraph, u32, u32)> {
    vec![
        ("petersen_2_1", petersen_graph().unwrap(), 2, 1),
        ("cycle_11_2_1", cycle_graph(11).unwrap(), 2, 1),
        ("cube_3_2_1", hypercube_graph(3).unwrap(), 2, 1),
        ("hyperpath_4_5_2_1", hyperpath(4, 5).unwrap(), 2, 1),
        ("star_3_1_4_2_1", star_hypergraph(3, 1, 4).unwrap(), 2, 1),
        ("complete_6_3_3_1", complete_uniform(6, 3).unwrap(), 3, 1),
    ]
}

/// Connected graphs for subset enumeration, up to 20 vertices.
pub fn expansion_instances() -> Vec<(&'static str, Hypergraph)> {
    vec![
        ("petersen", petersen_graph().unwrap()),
        ("cube_4", hypercube_graph(4).unwrap()),
        ("cycle_20", cycle_graph(20).unwrap()),
    ]
}
