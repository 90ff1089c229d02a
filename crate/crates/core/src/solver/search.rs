//! Decision search: is there an L(h,k)-colouring with every colour in
//! `0..=span`? Branch and bound over bitset domains with forward checking
//! and clique packing bounds.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::constraints::Requirements;

pub(crate) type Domain = u128;

#[inline]
pub(crate) fn range_mask(lo: u32, hi: u32) -> Domain {
    // bits lo..=hi
    debug_assert!(lo <= hi && hi < 128);
    let upper = if hi == 127 { Domain::MAX } else { (1u128 << (hi + 1)) - 1 };
    upper & !((1u128 << lo) - 1)
}

/// Colours within `gap - 1` of `c`, clipped to `0..=span`.
#[inline]
fn conflict_band(c: u32, gap: u32, span: u32) -> Domain {
    let lo = c.saturating_sub(gap - 1);
    let hi = (c + gap - 1).min(span);
    range_mask(lo, hi)
}

/// Largest number of colours in `set` that are pairwise at least `gap` apart
/// (greedy from the bottom is optimal on a line), stopping at `want`.
#[inline]
fn packing(mut set: Domain, gap: u32, want: usize) -> usize {
    let mut count = 0;
    while set != 0 && count < want {
        let x = set.trailing_zeros();
        count += 1;
        let next = x + gap;
        if next >= 128 {
            break;
        }
        set &= !((1u128 << next) - 1);
    }
    count
}

pub(crate) struct Clique {
    members: Vec<usize>,
    gap: u32,
}

pub(crate) struct Problem {
    pub n: usize,
    partners: Vec<Vec<(usize, u32)>>,
    /// Static priority: descending degree, then vertex position.
    rank: Vec<usize>,
    pub first: usize,
    cliques: Vec<Clique>,
    /// Every colouring needs at least this span.
    pub lower_bound: u32,
}

impl Problem {
    pub fn new(req: &Requirements, degree: &[usize]) -> Self {
        let n = req.len();
        let partners: Vec<Vec<(usize, u32)>> = (0..n).map(|v| req.partners(v).collect()).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(degree[v]), v));
        let mut rank = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let cliques = build_cliques(req, &order);
        let lower_bound = cliques
            .iter()
            .map(|q| q.gap * (q.members.len() as u32 - 1))
            .max()
            .unwrap_or(0);
        Problem { n, partners, rank, first: order.first().copied().unwrap_or(0), cliques, lower_bound }
    }
}

fn build_cliques(req: &Requirements, order: &[usize]) -> Vec<Clique> {
    let n = req.len();
    let hmax = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| req.gap(a, b)).max().unwrap_or(0);
    if hmax == 0 {
        return Vec::new();
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    // Strongest-gap cliques first, then cliques of any constrained pair.
    for threshold in [hmax, 1] {
        let linked = |a: usize, b: usize| req.gap(a, b) >= threshold;
        for &v in order {
            let mut q = vec![v];
            for &u in order {
                if u != v && q.iter().all(|&w| linked(u, w)) {
                    q.push(u);
                }
            }
            if q.len() < 3 {
                continue;
            }
            q.sort_unstable();
            if seen.insert(q.clone()) {
                let mut gap = u32::MAX;
                for (i, &a) in q.iter().enumerate() {
                    for &b in &q[i + 1..] {
                        gap = gap.min(req.gap(a, b));
                    }
                }
                out.push(Clique { members: q, gap });
            }
        }
    }
    out
}

pub(crate) enum Decision {
    Found(Vec<u32>),
    Infeasible,
    Exhausted,
}

pub(crate) struct Limits {
    pub node_limit: u64,
    pub deadline: Option<Instant>,
}

struct Shared<'a> {
    limits: &'a Limits,
    nodes: &'a AtomicU64,
    abort: &'a AtomicBool,
}

enum Step {
    Found,
    Fail,
    Abort,
}

struct Search<'a> {
    p: &'a Problem,
    span: u32,
    shared: Shared<'a>,
    local_nodes: u64,
    /// Node-count publication interval, never above the node limit.
    flush_every: u64,
    colours: Vec<Option<u32>>,
}

const FLUSH: u64 = 1024;

impl Search<'_> {
    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes.is_multiple_of(self.flush_every) {
            let total = self.shared.nodes.fetch_add(self.flush_every, Ordering::Relaxed) + self.flush_every;
            let late = self.shared.limits.deadline.is_some_and(|d| Instant::now() >= d);
            if total >= self.shared.limits.node_limit || late {
                self.shared.abort.store(true, Ordering::Relaxed);
            }
        }
        !self.shared.abort.load(Ordering::Relaxed)
    }

    fn flush(&self) {
        self.shared.nodes.fetch_add(self.local_nodes % self.flush_every, Ordering::Relaxed);
    }

    fn pick(&self, dom: &[Domain]) -> Option<usize> {
        (0..self.p.n)
            .filter(|&v| self.colours[v].is_none())
            .min_by_key(|&v| (dom[v].count_ones(), self.p.rank[v]))
    }

    /// Applies `v = c` to a copy of the domains; `None` on a wipe-out.
    fn propagate(&self, dom: &[Domain], v: usize, c: u32) -> Option<Vec<Domain>> {
        let mut next = dom.to_vec();
        next[v] = 1u128 << c;
        for &(u, g) in &self.p.partners[v] {
            if self.colours[u].is_none() {
                next[u] &= !conflict_band(c, g, self.span);
                if next[u] == 0 {
                    return None;
                }
            }
        }
        Some(next)
    }

    fn packing_ok(&self, dom: &[Domain]) -> bool {
        self.p.cliques.iter().all(|q| {
            let mut union = 0;
            let mut open = 0;
            for &m in &q.members {
                if self.colours[m].is_none() {
                    union |= dom[m];
                    open += 1;
                }
            }
            open < 2 || packing(union, q.gap, open) >= open
        })
    }

    fn branch(&mut self, dom: &[Domain], v: usize, c: u32) -> Step {
        if !self.tick() {
            return Step::Abort;
        }
        let Some(next) = self.propagate(dom, v, c) else {
            return Step::Fail;
        };
        self.colours[v] = Some(c);
        let step = if self.packing_ok(&next) { self.dfs(&next) } else { Step::Fail };
        if !matches!(step, Step::Found) {
            self.colours[v] = None;
        }
        step
    }

    fn dfs(&mut self, dom: &[Domain]) -> Step {
        let Some(v) = self.pick(dom) else {
            return Step::Found;
        };
        let mut options = dom[v];
        while options != 0 {
            let c = options.trailing_zeros();
            options &= options - 1;
            match self.branch(dom, v, c) {
                Step::Fail => {}
                other => return other,
            }
        }
        Step::Fail
    }
}

/// Decides feasibility at `span`. With `jobs > 1` the first vertex's colour
/// choices are explored in parallel; the leftmost feasible branch wins, so
/// the witness matches the sequential one.
pub(crate) fn decide(p: &Problem, span: u32, limits: &Limits, nodes: &AtomicU64, jobs: usize) -> Decision {
    if p.n == 0 {
        return Decision::Found(Vec::new());
    }
    if span < p.lower_bound {
        return Decision::Infeasible;
    }
    let mut dom = vec![range_mask(0, span); p.n];
    // Reflection f -> span - f: the first vertex may stay in the lower half.
    dom[p.first] = range_mask(0, span / 2);
    let abort = AtomicBool::new(false);
    let make = || Search {
        p,
        span,
        shared: Shared { limits, nodes, abort: &abort },
        local_nodes: 0,
        flush_every: FLUSH.min(limits.node_limit).max(1),
        colours: vec![None; p.n],
    };

    let first_choices: Vec<u32> = {
        let mut v = Vec::new();
        let mut o = dom[p.first];
        while o != 0 {
            v.push(o.trailing_zeros());
            o &= o - 1;
        }
        v
    };

    let run_branch = |c: u32| -> (Option<Vec<u32>>, bool) {
        let mut s = make();
        let step = s.branch(&dom, p.first, c);
        s.flush();
        match step {
            Step::Found => (Some(s.colours.iter().map(|c| c.unwrap()).collect()), false),
            Step::Fail => (None, false),
            Step::Abort => (None, true),
        }
    };

    let exhausted = AtomicBool::new(false);
    let found = if jobs > 1 {
        first_choices.par_iter().find_map_first(|&c| {
            let (w, ex) = run_branch(c);
            if ex {
                exhausted.store(true, Ordering::Relaxed);
            }
            w
        })
    } else {
        let mut hit = None;
        for &c in &first_choices {
            let (w, ex) = run_branch(c);
            if w.is_some() {
                hit = w;
                break;
            }
            if ex {
                exhausted.store(true, Ordering::Relaxed);
                break;
            }
        }
        hit
    };
    match found {
        Some(w) => Decision::Found(w),
        None if exhausted.load(Ordering::Relaxed) || abort.load(Ordering::Relaxed) => Decision::Exhausted,
        None => Decision::Infeasible,
    }
}
