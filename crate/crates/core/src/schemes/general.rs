//! Schemes that apply to every hypergraph: strong-partition layering,
//! stable-set layering, first-fit greedy, and the line-graph construction.

use itertools::Itertools;

use super::{finish, SchemeOutcome};
use crate::constraints::{check_levels, Requirements};
use crate::error::{Error, Result};
use crate::hypergraph::{intersection_size, Hypergraph};
use crate::solver::greedy_colours;

fn is_strong_stable(hg: &Hypergraph, set: &[usize]) -> bool {
    hg.edges().iter().all(|e| e.iter().filter(|v| set.contains(v)).count() <= 1)
}

/// Class `i` (from 1), position `j` (from 1) gets
/// `k·Σ_{t<i} n_t + k(j-i) + h(i-1)`. Span `k(n-k') + (k'-1)h`.
pub fn scheme_strong_partition(hg: &Hypergraph, h: u32, k: u32, classes: &[Vec<usize>]) -> Result<SchemeOutcome> {
    check_levels(h, k)?;
    let n = hg.vertex_count();
    let mut seen = vec![false; n];
    for class in classes {
        if class.is_empty() {
            return Err(Error::Parameter("partition has an empty class".into()));
        }
        if !is_strong_stable(hg, class) {
            return Err(Error::Parameter("a partition class meets an edge twice".into()));
        }
        for &v in class {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Parameter("partition classes overlap or name unknown vertices".into()));
            }
        }
    }
    if seen.contains(&false) {
        return Err(Error::Parameter("partition does not cover every vertex".into()));
    }
    let mut colours = vec![0u32; n];
    let mut before = 0u32;
    for (i0, class) in classes.iter().enumerate() {
        let i = i0 as u32 + 1;
        for (j0, &v) in class.iter().enumerate() {
            let j = j0 as u32 + 1;
            colours[v] = k * before + k * j + h * (i - 1) - k * i;
        }
        before += class.len() as u32;
    }
    finish(hg, h, k, &colours, false)
}

/// `w_i -> k(i-1)` on the stable set, then the rest at `k(|W|-1) + jh`.
/// Span `nh + |W|(k-h) - k`.
pub fn scheme_stable_set(hg: &Hypergraph, h: u32, k: u32, stable: &[usize]) -> Result<SchemeOutcome> {
    check_levels(h, k)?;
    let n = hg.vertex_count();
    if stable.is_empty() || stable.iter().any(|&v| v >= n) || !stable.iter().all_unique() {
        return Err(Error::Parameter("stable set must be a non-empty set of vertices".into()));
    }
    if !is_strong_stable(hg, stable) {
        return Err(Error::Parameter("set is not strong stable".into()));
    }
    let mut colours = vec![0u32; n];
    for (i, &w) in stable.iter().enumerate() {
        colours[w] = k * i as u32;
    }
    let base = k * (stable.len() as u32 - 1);
    for (j, v) in (0..n).filter(|v| !stable.contains(v)).enumerate() {
        colours[v] = base + (j as u32 + 1) * h;
    }
    finish(hg, h, k, &colours, false)
}

/// First fit in vertex order.
pub fn scheme_greedy(hg: &Hypergraph, h: u32, k: u32) -> Result<SchemeOutcome> {
    check_levels(h, k)?;
    let req = Requirements::for_hypergraph(hg, h, k);
    let order: Vec<usize> = (0..hg.vertex_count()).collect();
    finish(hg, h, k, &greedy_colours(&req, &order), false)
}

const REPAIR_LIMIT: usize = 20_000;

/// Colours a linear uniform hypergraph from a proper colouring of its line
/// graph: position `l` of an edge in class `j` gets `2jr + 2l - 2`, shared
/// vertices keep the smallest colour offered. When that collides, vertex
/// orders within each class's edges are rotated until the checker accepts.
pub fn scheme_from_line_colouring(hg: &Hypergraph) -> Result<SchemeOutcome> {
    if !hg.is_linear() || !hg.is_uniform() {
        return Err(Error::SchemeMismatch("line-colouring scheme needs a linear uniform hypergraph".into()));
    }
    if hg.has_isolated_vertex() {
        return Err(Error::IsolatedVertex);
    }
    let m = hg.edge_count();
    let r = hg.rank();
    let mut adj = vec![Vec::new(); m];
    for a in 0..m {
        for b in (a + 1)..m {
            if intersection_size(&hg.edges()[a], &hg.edges()[b]) > 0 {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    let class = crate::solver::chromatic::colour_exact(&adj)?;
    let chi = class.iter().max().map_or(0, |c| c + 1);
    let req = Requirements::for_hypergraph(hg, 2, 1);

    // Rotation offsets for each class, enumerated in mixed radix r.
    let attempts = (r as u128).checked_pow(chi as u32).map_or(REPAIR_LIMIT, |t| (t as usize).min(REPAIR_LIMIT));
    for attempt in 0..attempts {
        let mut rot = vec![0usize; chi];
        let mut a = attempt;
        for slot in rot.iter_mut() {
            *slot = a % r;
            a /= r;
        }
        let mut colours = vec![u32::MAX; hg.vertex_count()];
        for (e, edge) in hg.edges().iter().enumerate() {
            let j = class[e];
            for (pos, &v) in edge.iter().enumerate() {
                let l = (pos + rot[j]) % r;
                let c = (2 * j * r + 2 * l) as u32;
                colours[v] = colours[v].min(c);
            }
        }
        if req.violations(&colours).is_empty() {
            let out = finish(hg, 2, 1, &colours, attempt > 0)?;
            debug_assert!(out.claimed_span as usize <= 2 * chi * r - 2);
            return Ok(out);
        }
    }
    Err(Error::SchemeFailed(format!("line-colouring repair exhausted after {attempts} orderings")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::solver::{strong_colouring_exact, strong_stable_set_exact};

    #[test]
    fn strong_partition_spans() {
        let k43 = complete_uniform(4, 3).unwrap();
        let singles: Vec<Vec<usize>> = (0..4).map(|v| vec![v]).collect();
        assert_eq!(scheme_strong_partition(&k43, 2, 1, &singles).unwrap().claimed_span, 6);
        let star = star_hypergraph(3, 1, 2).unwrap();
        // u1 | y1.1 y2.1 | y1.2 y2.2
        let classes = vec![vec![0], vec![1, 3], vec![2, 4]];
        assert_eq!(scheme_strong_partition(&star, 2, 1, &classes).unwrap().claimed_span, 6);
        for r in 2..=6 {
            let e = complete_uniform(r, r).unwrap();
            let singles: Vec<Vec<usize>> = (0..r).map(|v| vec![v]).collect();
            assert_eq!(scheme_strong_partition(&e, 2, 1, &singles).unwrap().claimed_span, 2 * (r as u32 - 1));
        }
        assert!(scheme_strong_partition(&star, 2, 1, &[vec![0, 1], vec![2, 3, 4]]).is_err());
    }

    #[test]
    fn strong_partition_formula_for_general_levels() {
        let h = petersen_graph().unwrap();
        let classes = strong_colouring_exact(&h).unwrap();
        let kp = classes.len() as u32;
        for (hh, kk) in [(2, 1), (3, 1), (5, 2)] {
            let out = scheme_strong_partition(&h, hh, kk, &classes).unwrap();
            assert_eq!(out.claimed_span, kk * (10 - kp) + (kp - 1) * hh);
        }
    }

    #[test]
    fn stable_set_spans() {
        let p = hyperpath(3, 2).unwrap();
        // p1.1 and p2.1 are private to different edges
        let w = vec![p.index_of(&"p1.1".into()).unwrap(), p.index_of(&"p2.1".into()).unwrap()];
        assert_eq!(scheme_stable_set(&p, 2, 1, &w).unwrap().claimed_span, 7);
        assert_eq!(scheme_stable_set(&p, 2, 1, &[0]).unwrap().claimed_span, 8);
        let k43 = complete_uniform(4, 3).unwrap();
        let w = strong_stable_set_exact(&k43).unwrap();
        assert_eq!(scheme_stable_set(&k43, 2, 1, &w).unwrap().claimed_span, 6);
        assert!(scheme_stable_set(&p, 2, 1, &[0, 1]).is_err());
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(scheme_greedy(&complete_uniform(3, 3).unwrap(), 2, 1).unwrap().claimed_span, 4);
        let star = scheme_greedy(&star_hypergraph(3, 1, 2).unwrap(), 2, 1).unwrap();
        assert!((5..=12).contains(&star.claimed_span));
    }

    #[test]
    fn line_colouring_examples() {
        let star = scheme_from_line_colouring(&star_hypergraph(3, 1, 2).unwrap()).unwrap();
        assert!(star.claimed_span <= 10);
        let path = scheme_from_line_colouring(&hyperpath(3, 3).unwrap()).unwrap();
        assert!(path.claimed_span <= 10 && path.claimed_span >= 6);
        let single = scheme_from_line_colouring(&complete_uniform(4, 4).unwrap()).unwrap();
        assert_eq!(single.claimed_span, 6);
        assert!(scheme_from_line_colouring(&complete_uniform(4, 3).unwrap()).is_err());
    }
}
