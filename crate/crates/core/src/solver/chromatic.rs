//! Exact graph colouring and maximum independent sets on small graphs.
//! Strong colourings and strong stable sets of a hypergraph are exactly
//! proper colourings and independent sets of its 2-section.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

const NODE_LIMIT: u64 = 200_000_000;

struct Colourer<'a> {
    adj: &'a [Vec<usize>],
    colours: Vec<Option<usize>>,
    nodes: u64,
}

impl Colourer<'_> {
    /// DSATUR choice: most distinct neighbour colours, then degree, then position.
    fn pick(&self) -> Option<usize> {
        (0..self.adj.len()).filter(|&v| self.colours[v].is_none()).max_by_key(|&v| {
            let mut seen = 0u64;
            for &u in &self.adj[v] {
                if let Some(c) = self.colours[u] {
                    seen |= 1 << c;
                }
            }
            (seen.count_ones(), self.adj[v].len(), std::cmp::Reverse(v))
        })
    }

    fn colour(&mut self, k: usize, used: usize) -> Result<bool> {
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        self.nodes += 1;
        if self.nodes > NODE_LIMIT {
            return Err(Error::BudgetExhausted);
        }
        let mut blocked = 0u64;
        for &u in &self.adj[v] {
            if let Some(c) = self.colours[u] {
                blocked |= 1 << c;
            }
        }
        // Colours beyond the first unused one are interchangeable.
        for c in 0..k.min(used + 1) {
            if blocked & (1 << c) == 0 {
                self.colours[v] = Some(c);
                if self.colour(k, used.max(c + 1))? {
                    return Ok(true);
                }
                self.colours[v] = None;
            }
        }
        Ok(false)
    }
}

fn greedy_clique(adj: &[Vec<usize>]) -> usize {
    let n = adj.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
    let mut best = usize::from(n > 0);
    for &v in &order {
        let mut q = vec![v];
        for &u in &order {
            if u != v && q.iter().all(|w| adj[u].contains(w)) {
                q.push(u);
            }
        }
        best = best.max(q.len());
    }
    best
}

/// Exact proper colouring of a graph given by adjacency lists; returns the
/// colour class of each vertex.
pub(crate) fn colour_exact(adj: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = adj.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if n > 64 && adj.iter().any(|a| a.len() >= 64) {
        return Err(Error::TooLarge { vertices: n, limit: 64 });
    }
    let lower = greedy_clique(adj);
    for k in lower..=n.min(64) {
        let mut c = Colourer { adj, colours: vec![None; n], nodes: 0 };
        if c.colour(k, 0)? {
            return Ok(c.colours.into_iter().map(Option::unwrap).collect());
        }
    }
    Err(Error::TooLarge { vertices: n, limit: 64 })
}

pub fn graph_colouring_exact(g: &Hypergraph) -> Result<Vec<usize>> {
    if !g.is_graph() {
        return Err(Error::NotAGraph);
    }
    colour_exact(&g.two_section_adjacency())
}

pub fn chromatic_number_graph(g: &Hypergraph) -> Result<usize> {
    Ok(graph_colouring_exact(g)?.into_iter().max().map_or(0, |m| m + 1))
}

/// Minimum strong colouring as a list of classes (vertex indices, ascending).
pub fn strong_colouring_exact(h: &Hypergraph) -> Result<Vec<Vec<usize>>> {
    let classes = colour_exact(&h.two_section_adjacency())?;
    let k = classes.iter().max().map_or(0, |m| m + 1);
    let mut out = vec![Vec::new(); k];
    for (v, &c) in classes.iter().enumerate() {
        out[c].push(v);
    }
    Ok(out)
}

pub fn strong_chromatic_exact(h: &Hypergraph) -> Result<usize> {
    Ok(strong_colouring_exact(h)?.len())
}

/// Maximum independent set of a graph with at most 128 vertices.
pub fn max_independent_set(adj: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = adj.len();
    if n > 128 {
        return Err(Error::TooLarge { vertices: n, limit: 128 });
    }
    let closed: Vec<u128> = (0..n)
        .map(|v| adj[v].iter().fold(1u128 << v, |m, &u| m | (1u128 << u)))
        .collect();
    let mut best = 0u128;
    let mut nodes = 0u64;

    fn go(cand: u128, chosen: u128, closed: &[u128], best: &mut u128, nodes: &mut u64) -> Result<()> {
        *nodes += 1;
        if *nodes > NODE_LIMIT {
            return Err(Error::BudgetExhausted);
        }
        if cand == 0 {
            if chosen.count_ones() > best.count_ones() {
                *best = chosen;
            }
            return Ok(());
        }
        if chosen.count_ones() + cand.count_ones() <= best.count_ones() {
            return Ok(());
        }
        // Branch on a minimum-degree candidate: take it, or drop it.
        let mut v = cand.trailing_zeros() as usize;
        let mut deg = u32::MAX;
        let mut rest = cand;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (closed[u] & cand).count_ones();
            if d < deg {
                deg = d;
                v = u;
            }
        }
        go(cand & !closed[v], chosen | (1u128 << v), closed, best, nodes)?;
        if deg > 1 {
            go(cand & !(1u128 << v), chosen, closed, best, nodes)?;
        }
        Ok(())
    }

    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    go(all, 0, &closed, &mut best, &mut nodes)?;
    Ok((0..n).filter(|&v| best & (1u128 << v) != 0).collect())
}

/// A maximum strong stable set (vertex indices, ascending).
pub fn strong_stable_set_exact(h: &Hypergraph) -> Result<Vec<usize>> {
    max_independent_set(&h.two_section_adjacency())
}

pub fn strong_independence_exact(h: &Hypergraph) -> Result<usize> {
    Ok(strong_stable_set_exact(h)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number_graph(&complete_graph(4).unwrap()).unwrap(), 4);
        assert_eq!(chromatic_number_graph(&cycle_graph(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number_graph(&cycle_graph(6).unwrap()).unwrap(), 2);
        assert_eq!(chromatic_number_graph(&petersen_graph().unwrap()).unwrap(), 3);
        let lg = line_graph(&hyperpath(3, 3).unwrap()).unwrap();
        assert_eq!(chromatic_number_graph(&lg).unwrap(), 2);
        assert!(matches!(chromatic_number_graph(&complete_uniform(4, 3).unwrap()), Err(Error::NotAGraph)));
    }

    #[test]
    fn strong_chromatic_numbers() {
        assert_eq!(strong_chromatic_exact(&complete_uniform(4, 3).unwrap()).unwrap(), 4);
        assert_eq!(strong_chromatic_exact(&star_hypergraph(3, 1, 2).unwrap()).unwrap(), 3);
        let p = cartesian_product(&complete_graph(3).unwrap(), &star_hypergraph(3, 1, 2).unwrap()).unwrap();
        assert_eq!(strong_chromatic_exact(&p).unwrap(), 3);
    }

    #[test]
    fn strong_independence_numbers() {
        for n in 3..=6 {
            assert_eq!(strong_independence_exact(&complete_uniform(n, 3).unwrap()).unwrap(), 1);
        }
        assert_eq!(strong_independence_exact(&hyperpath(3, 3).unwrap()).unwrap(), 3);
        assert_eq!(strong_independence_exact(&complete_uniform(5, 5).unwrap()).unwrap(), 1);
        assert_eq!(strong_independence_exact(&petersen_graph().unwrap()).unwrap(), 4);
    }

    #[test]
    fn colour_classes_are_proper() {
        let h = hypercube_graph(4).unwrap();
        let adj = h.two_section_adjacency();
        let c = colour_exact(&adj).unwrap();
        for v in 0..adj.len() {
            for &u in &adj[v] {
                assert_ne!(c[u], c[v]);
            }
        }
        assert_eq!(c.iter().max(), Some(&1));
    }
}
