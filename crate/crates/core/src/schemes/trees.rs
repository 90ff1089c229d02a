//! Schemes for star-hypergraphs, hyperpaths and hypertrees (L(2,1) only).

use std::collections::VecDeque;

use super::shapes::{recognise_hyperpath, recognise_star, HyperpathShape, StarShape};
use super::{finish, SchemeOutcome};
use crate::constraints::Requirements;
use crate::constructions::{hyperpath, is_hypertree, star_hypergraph};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::solver::{colouring_within, lambda_exact, SolveBudget};

/// Centre `u_s -> 2s-2`, petal `j` of edge `l -> (j-1)m + 2c + l - 1`
/// (all indices from 1). Span `m(r-c) + 2c - 1`.
fn star_colours(shape: &StarShape, n: usize) -> Vec<u32> {
    let (c, m) = (shape.c() as u32, shape.m() as u32);
    let mut colours = vec![0u32; n];
    for (s, &u) in shape.centre.iter().enumerate() {
        colours[u] = 2 * s as u32;
    }
    for (l, petal) in shape.petals.iter().enumerate() {
        for (j, &v) in petal.iter().enumerate() {
            colours[v] = j as u32 * m + 2 * c + l as u32;
        }
    }
    colours
}

pub fn scheme_star(r: usize, c: usize, m: usize) -> Result<SchemeOutcome> {
    if m < 2 {
        return Err(Error::Parameter(format!("star scheme needs at least two edges (m={m})")));
    }
    scheme_star_on(&star_hypergraph(r, c, m)?)
}

/// Star scheme on any input recognised as a star-hypergraph.
pub fn scheme_star_on(hg: &Hypergraph) -> Result<SchemeOutcome> {
    let shape = recognise_star(hg)?;
    finish(hg, 2, 1, &star_colours(&shape, hg.vertex_count()), false)
}

pub fn scheme_hyperpath(r: usize, m: usize) -> Result<SchemeOutcome> {
    if r < 3 {
        return Err(Error::Parameter(format!("hyperpath scheme needs r >= 3 (r={r})")));
    }
    scheme_hyperpath_on(&hyperpath(r, m)?)
}

/// Vertices of edge `e` other than those in `skip`, in vertex order.
fn private(hg: &Hypergraph, e: usize, skip: &[usize]) -> Vec<usize> {
    hg.edges()[e].iter().copied().filter(|v| !skip.contains(v)).collect()
}

pub fn scheme_hyperpath_on(hg: &Hypergraph) -> Result<SchemeOutcome> {
    let shape = recognise_hyperpath(hg)?;
    let r = shape.r as u32;
    if r < 3 {
        return Err(Error::SchemeMismatch("hyperpath scheme needs edges of size at least 3".into()));
    }
    let n = hg.vertex_count();
    let mut colours: Vec<Option<u32>> = vec![None; n];
    let HyperpathShape { edges, shared, .. } = &shape;
    match edges.len() {
        1 => {
            for (i, &v) in hg.edges()[edges[0]].iter().enumerate() {
                colours[v] = Some(2 * i as u32);
            }
        }
        2 => {
            let star = StarShape {
                r: shape.r,
                centre: vec![shared[0]],
                petals: edges.iter().map(|&e| private(hg, e, &shared[..1])).collect(),
            };
            return finish(hg, 2, 1, &star_colours(&star, n), false);
        }
        _ => {
            let (v1, v2) = (shared[0], shared[1]);
            colours[v1] = Some(0);
            colours[v2] = Some(2 * r);
            for (i, v) in private(hg, edges[0], &[v1]).into_iter().enumerate() {
                colours[v] = Some(2 * (i as u32 + 1) + 1);
            }
            for (i, v) in private(hg, edges[1], &[v1, v2]).into_iter().enumerate() {
                colours[v] = Some(2 * (i as u32 + 1));
            }
            for (i, v) in private(hg, edges[2], &[v2]).into_iter().enumerate() {
                colours[v] = Some(2 * (i as u32 + 1) - 1);
            }
        }
    }
    let mut fallback_used = false;
    if edges.len() > 3 {
        let mask = |e: usize, skip: usize| -> u64 {
            private(hg, e, &[skip]).iter().fold(0, |m, &v| m | 1u64 << colours[v].unwrap())
        };
        let start = PathState {
            prev_private: mask(edges[1], shared[1]),
            edge: hg.edges()[edges[2]].iter().fold(0, |m, &v| m | 1u64 << colours[v].unwrap()),
            shared: colours[shared[2]].unwrap(),
        };
        let Some(steps) = extend_hyperpath(r, start, edges.len() - 3) else {
            return search_fallback(hg, 2 * r);
        };
        for (offset, step) in steps.iter().enumerate() {
            let idx = offset + 3;
            fallback_used |= !step.literal;
            let next_shared = shared.get(idx).copied();
            let mut rest = bits(step.fresh & !(next_shared.map_or(0, |_| 1u64 << step.shared)));
            for v in private(hg, edges[idx], &[shared[idx - 1]]) {
                colours[v] = Some(if Some(v) == next_shared { step.shared } else { rest.next().unwrap() });
            }
        }
    }
    let colours: Vec<u32> = colours.into_iter().map(Option::unwrap).collect();
    finish(hg, 2, 1, &colours, fallback_used)
}

fn bits(mut mask: u64) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let b = mask.trailing_zeros();
            mask &= mask - 1;
            b
        })
    })
}

/// Colours around the last placed edge of a hyperpath. A new edge only
/// interacts with the edge it hangs from, so this is the whole state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct PathState {
    /// Colours of the previous edge minus its link to the current one.
    prev_private: u64,
    /// Colours of the current edge.
    edge: u64,
    /// Colour of the current edge's link to the next one.
    shared: u32,
}

#[derive(Clone, Copy, Debug)]
struct PathStep {
    /// Colours of the new edge's fresh vertices.
    fresh: u64,
    /// Colour of the fresh vertex that links onward.
    shared: u32,
    /// Whether `fresh` repeats `prev_private`.
    literal: bool,
}

/// Sets of `size` colours in `allowed`, pairwise at least 2 apart.
fn spaced_subsets(allowed: &[u32], size: usize) -> Vec<u64> {
    fn go(allowed: &[u32], size: usize, from: usize, last: Option<u32>, acc: u64, out: &mut Vec<u64>) {
        if size == 0 {
            out.push(acc);
            return;
        }
        for i in from..allowed.len() {
            let c = allowed[i];
            if last.is_none_or(|l| c >= l + 2) {
                go(allowed, size - 1, i + 1, Some(c), acc | 1u64 << c, out);
            }
        }
    }
    let mut out = Vec::new();
    go(allowed, size, 0, None, 0, &mut out);
    out
}

/// Edge-by-edge depth-first extension within colours `0..=2r`, trying the
/// previous-but-one edge's colours first at every step.
fn extend_hyperpath(r: u32, start: PathState, count: usize) -> Option<Vec<PathStep>> {
    let candidates = |st: &PathState, last: bool| -> Vec<PathStep> {
        let allowed: Vec<u32> =
            (0..=2 * r).filter(|&c| st.edge & (1u64 << c) == 0 && c.abs_diff(st.shared) >= 2).collect();
        let mut sets = spaced_subsets(&allowed, r as usize - 1);
        sets.sort_by_key(|&s| s != st.prev_private);
        let mut out = Vec::new();
        for fresh in sets {
            let literal = fresh == st.prev_private;
            if last {
                out.push(PathStep { fresh, shared: fresh.trailing_zeros(), literal });
            } else {
                out.extend(bits(fresh).map(|shared| PathStep { fresh, shared, literal }));
            }
        }
        out
    };
    let advance = |st: &PathState, step: &PathStep| PathState {
        prev_private: st.edge & !(1u64 << st.shared),
        edge: step.fresh | 1u64 << st.shared,
        shared: step.shared,
    };
    let mut dead: std::collections::HashSet<(PathState, usize)> = std::collections::HashSet::new();
    // Explicit stack of (state, candidates, next index).
    let mut stack = vec![(start, candidates(&start, count == 1), 0usize)];
    let mut chosen: Vec<PathStep> = Vec::with_capacity(count);
    while let Some((st, cands, next)) = stack.last_mut() {
        let remaining = count - chosen.len();
        if *next >= cands.len() {
            dead.insert((strip(*st), remaining));
            stack.pop();
            chosen.pop();
            continue;
        }
        let step = cands[*next];
        *next += 1;
        let after = advance(st, &step);
        chosen.push(step);
        if chosen.len() == count {
            return Some(chosen);
        }
        let left = count - chosen.len();
        if dead.contains(&(strip(after), left)) {
            chosen.pop();
            continue;
        }
        let c = candidates(&after, left == 1);
        stack.push((after, c, 0));
    }
    None
}

/// Feasibility ignores which colours the literal preference points at.
fn strip(st: PathState) -> PathState {
    PathState { prev_private: 0, ..st }
}

fn search_fallback(hg: &Hypergraph, span: u32) -> Result<SchemeOutcome> {
    match colouring_within(hg, 2, 1, span, &SolveBudget::default())? {
        Some(f) => finish(hg, 2, 1, &f.to_vec(hg)?, true),
        None => Err(Error::SchemeFailed(format!("no L(2,1) colouring of span {span} exists"))),
    }
}

/// Colours the star of a maximum-degree vertex by the star formula, then
/// visits stars breadth-first giving each new vertex the least colour in
/// `0..=Δ(r-1)+2` that fits. Falls back to the exact solver when the range
/// runs out.
pub fn scheme_hypertree(hg: &Hypergraph) -> Result<SchemeOutcome> {
    if !hg.is_uniform() || !is_hypertree(hg) {
        return Err(Error::SchemeMismatch("input is not a uniform hypertree".into()));
    }
    let n = hg.vertex_count();
    let r = hg.rank();
    let delta = hg.max_degree();
    if delta == 1 {
        let colours: Vec<u32> = (0..n as u32).map(|i| 2 * i).collect();
        return finish(hg, 2, 1, &colours, false);
    }
    let root = (0..n).find(|&v| hg.degree_at(v) == delta).unwrap();
    let star = StarShape {
        r,
        centre: vec![root],
        petals: hg.incident(root).iter().map(|&e| private(hg, e, &[root])).collect(),
    };
    let seeded = star_colours(&star, n);
    let mut colours: Vec<Option<u32>> = vec![None; n];
    let mut queue = VecDeque::new();
    colours[root] = Some(0);
    queue.push_back(root);
    for p in &star.petals {
        for &v in p {
            colours[v] = Some(seeded[v]);
            queue.push_back(v);
        }
    }
    let limit = (delta * (r - 1) + 2) as u32;
    let req = Requirements::for_hypergraph(hg, 2, 1);
    while let Some(u) = queue.pop_front() {
        for &e in hg.incident(u) {
            for &v in &hg.edges()[e] {
                if colours[v].is_some() {
                    continue;
                }
                match (0..=limit).find(|&c| req.admits(v, c, &colours)) {
                    Some(c) => {
                        colours[v] = Some(c);
                        queue.push_back(v);
                    }
                    None => {
                        let res = lambda_exact(hg, 2, 1, &SolveBudget::default())?;
                        return finish(hg, 2, 1, &res.witness.to_vec(hg)?, true);
                    }
                }
            }
        }
    }
    let colours: Vec<u32> = colours.into_iter().map(Option::unwrap).collect();
    finish(hg, 2, 1, &colours, false)
}
