//! Structural recognisers used to run family schemes on arbitrary inputs.

use crate::error::{Error, Result};
use crate::hypergraph::{intersection_size, Hypergraph};

fn mismatch(what: &str, why: impl Into<String>) -> Error {
    Error::SchemeMismatch(format!("input is not a {what}: {}", why.into()))
}

/// A star-hypergraph seen through vertex indices of some input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarShape {
    pub r: usize,
    pub centre: Vec<usize>,
    /// Non-centre vertices of each edge, in input edge order.
    pub petals: Vec<Vec<usize>>,
}

impl StarShape {
    pub fn c(&self) -> usize {
        self.centre.len()
    }

    pub fn m(&self) -> usize {
        self.petals.len()
    }
}

/// Recognises `K^r_{c,m}` with `m >= 2`.
pub fn recognise_star(h: &Hypergraph) -> Result<StarShape> {
    const WHAT: &str = "star-hypergraph";
    let edges = h.edges();
    if edges.len() < 2 {
        return Err(mismatch(WHAT, "needs at least two edges"));
    }
    if !h.is_uniform() {
        return Err(mismatch(WHAT, "not uniform"));
    }
    let centre: Vec<usize> = edges[0].iter().copied().filter(|v| edges[1].contains(v)).collect();
    if centre.is_empty() {
        return Err(mismatch(WHAT, "edges do not share a centre"));
    }
    let mut seen = vec![0usize; h.vertex_count()];
    let mut petals = Vec::with_capacity(edges.len());
    for e in edges {
        if !centre.iter().all(|c| e.contains(c)) {
            return Err(mismatch(WHAT, "an edge misses part of the centre"));
        }
        let p: Vec<usize> = e.iter().copied().filter(|v| !centre.contains(v)).collect();
        for &v in &p {
            seen[v] += 1;
        }
        petals.push(p);
    }
    for &c in &centre {
        seen[c] = 1;
    }
    if seen.iter().any(|&s| s != 1) {
        return Err(mismatch(WHAT, "edges meet outside the centre, or a vertex is isolated"));
    }
    Ok(StarShape { r: h.rank(), centre, petals })
}

/// `e_1 v_1 e_2 … v_{m-1} e_m` as vertex and edge indices of an input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperpathShape {
    pub r: usize,
    /// Edge indices in path order.
    pub edges: Vec<usize>,
    /// `shared[i]` is the vertex joining `edges[i]` and `edges[i+1]`.
    pub shared: Vec<usize>,
}

impl HyperpathShape {
    pub fn m(&self) -> usize {
        self.edges.len()
    }
}

pub fn recognise_hyperpath(h: &Hypergraph) -> Result<HyperpathShape> {
    const WHAT: &str = "hyperpath";
    if !h.is_uniform() {
        return Err(mismatch(WHAT, "not uniform"));
    }
    if h.has_isolated_vertex() {
        return Err(mismatch(WHAT, "isolated vertex"));
    }
    let edges = h.edges();
    let m = edges.len();
    let mut nbrs = vec![Vec::new(); m];
    for a in 0..m {
        for b in (a + 1)..m {
            match intersection_size(&edges[a], &edges[b]) {
                0 => {}
                1 => {
                    nbrs[a].push(b);
                    nbrs[b].push(a);
                }
                _ => return Err(mismatch(WHAT, "two edges share more than one vertex")),
            }
        }
    }
    if m == 1 {
        return Ok(HyperpathShape { r: h.rank(), edges: vec![0], shared: Vec::new() });
    }
    if nbrs.iter().any(|n| n.is_empty() || n.len() > 2) {
        return Err(mismatch(WHAT, "edge intersections do not form a path"));
    }
    let Some(start) = (0..m).find(|&e| nbrs[e].len() == 1) else {
        return Err(mismatch(WHAT, "edge intersections form a cycle"));
    };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = nbrs[cur].iter().find(|&&x| x != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    if order.len() != m {
        return Err(mismatch(WHAT, "disconnected"));
    }
    let shared: Vec<usize> = order
        .windows(2)
        .map(|w| *edges[w[0]].iter().find(|v| edges[w[1]].contains(v)).unwrap())
        .collect();
    if shared.windows(2).any(|w| w[0] == w[1]) {
        return Err(mismatch(WHAT, "three edges share a vertex"));
    }
    Ok(HyperpathShape { r: h.rank(), edges: order, shared })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    #[test]
    fn stars_are_recognised() {
        let s = recognise_star(&star_hypergraph(7, 4, 3).unwrap()).unwrap();
        assert_eq!((s.r, s.c(), s.m()), (7, 4, 3));
        assert!(s.petals.iter().all(|p| p.len() == 3));
        assert!(recognise_star(&hyperpath(3, 3).unwrap()).is_err());
        assert!(recognise_star(&complete_uniform(4, 4).unwrap()).is_err());
        assert!(recognise_star(&complete_graph(3).unwrap()).is_err());
    }

    #[test]
    fn hyperpaths_are_recognised() {
        let p = recognise_hyperpath(&hyperpath(4, 5).unwrap()).unwrap();
        assert_eq!((p.r, p.m(), p.shared.len()), (4, 5, 4));
        assert_eq!(recognise_hyperpath(&hyperpath(3, 1).unwrap()).unwrap().m(), 1);
        assert!(recognise_hyperpath(&star_hypergraph(3, 1, 3).unwrap()).is_err());
        assert!(recognise_hyperpath(&cycle_graph(5).unwrap()).is_err());
        assert!(recognise_hyperpath(&path_graph(4).unwrap()).is_ok());
    }
}
