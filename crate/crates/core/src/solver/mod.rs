//! Exact computation of L(h,k)-chromatic numbers, strong chromatic and strong
//! independence numbers, and graph chromatic numbers on small instances.
//!
//! `lambda_exact` works on the decision problem: starting from a witnessed
//! upper bound it asks for a colouring of span one less, until a search is
//! exhausted without finding one. That failed search is the optimality
//! certificate.

pub(crate) mod chromatic;
mod search;

use std::sync::atomic::AtomicU64;
use std::time::{Duration, Instant};

use serde::Serialize;

pub use chromatic::{
    chromatic_number_graph, graph_colouring_exact, max_independent_set, strong_chromatic_exact,
    strong_colouring_exact, strong_independence_exact, strong_stable_set_exact,
};

use crate::constraints::{check_levels, span_of, Colouring, Requirements};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Largest span the bitset search represents.
pub const MAX_SPAN: u32 = 127;

#[derive(Clone, Debug)]
pub struct SolveBudget {
    /// Start the search at or below this span. Defaults to the greedy span.
    pub max_span: Option<u32>,
    pub node_limit: u64,
    pub time_limit: Duration,
    /// Worker threads for the top-level split; 1 runs sequentially.
    pub jobs: usize,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget { max_span: None, node_limit: 500_000_000, time_limit: Duration::from_secs(300), jobs: 1 }
    }
}

impl SolveBudget {
    pub fn with_node_limit(mut self, nodes: u64) -> Self {
        self.node_limit = nodes;
        self
    }

    pub fn with_max_span(mut self, span: u32) -> Self {
        self.max_span = Some(span);
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Optimum {
    Exact { value: u32 },
    /// Budget ran out: `lower` is certified, `upper` is witnessed.
    Bracket { lower: u32, upper: u32 },
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveResult {
    pub optimum: Optimum,
    /// Best colouring found; its span is the optimum (or the bracket's upper end).
    pub witness: Colouring,
    pub nodes_explored: u64,
}

impl SolveResult {
    pub fn exact(&self) -> Option<u32> {
        match self.optimum {
            Optimum::Exact { value } => Some(value),
            Optimum::Bracket { .. } => None,
        }
    }

    pub fn value(&self) -> Result<u32> {
        self.exact().ok_or(Error::BudgetExhausted)
    }
}

/// First-fit L(h,k) colouring in the given vertex order.
pub(crate) fn greedy_colours(req: &Requirements, order: &[usize]) -> Vec<u32> {
    let mut colours: Vec<Option<u32>> = vec![None; req.len()];
    for &v in order {
        let c = (0u32..).find(|&c| req.admits(v, c, &colours)).unwrap();
        colours[v] = Some(c);
    }
    colours.into_iter().map(Option::unwrap).collect()
}

/// Descending degree, then vertex position.
pub(crate) fn static_order(h: &Hypergraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..h.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree_at(v)), v));
    order
}

pub fn lambda_exact(hg: &Hypergraph, h: u32, k: u32, budget: &SolveBudget) -> Result<SolveResult> {
    check_levels(h, k)?;
    let req = Requirements::for_hypergraph(hg, h, k);
    let degree: Vec<usize> = (0..hg.vertex_count()).map(|v| hg.degree_at(v)).collect();
    let problem = search::Problem::new(&req, &degree);

    let mut witness = greedy_colours(&req, &static_order(hg));
    let mut upper = span_of(witness.iter().copied());
    let mut lower = problem.lower_bound;
    let limits = search::Limits {
        node_limit: budget.node_limit,
        deadline: Some(Instant::now() + budget.time_limit),
    };
    let nodes = AtomicU64::new(0);
    let finish = |optimum, witness: &[u32], nodes: &AtomicU64| SolveResult {
        optimum,
        witness: Colouring::from_vec(hg, witness),
        nodes_explored: nodes.load(std::sync::atomic::Ordering::Relaxed),
    };

    if let Some(cap) = budget.max_span.filter(|&cap| cap + 1 < upper && cap >= lower) {
        if cap > MAX_SPAN {
            return Err(Error::SpanTooLarge(cap));
        }
        match search::decide(&problem, cap, &limits, &nodes, budget.jobs) {
            search::Decision::Found(w) => {
                upper = span_of(w.iter().copied());
                witness = w;
            }
            search::Decision::Infeasible => lower = cap + 1,
            search::Decision::Exhausted => {
                return Ok(finish(Optimum::Bracket { lower, upper }, &witness, &nodes));
            }
        }
    }
    loop {
        if upper <= lower {
            return Ok(finish(Optimum::Exact { value: upper }, &witness, &nodes));
        }
        let target = upper - 1;
        if target > MAX_SPAN {
            return Err(Error::SpanTooLarge(target));
        }
        match search::decide(&problem, target, &limits, &nodes, budget.jobs) {
            search::Decision::Found(w) => {
                upper = span_of(w.iter().copied());
                witness = w;
            }
            search::Decision::Infeasible => {
                return Ok(finish(Optimum::Exact { value: upper }, &witness, &nodes));
            }
            search::Decision::Exhausted => {
                return Ok(finish(Optimum::Bracket { lower, upper }, &witness, &nodes));
            }
        }
    }
}

/// Is there a colouring with span at most `span`? `Ok(None)` means proven
/// infeasible; budget exhaustion is an error.
pub fn colouring_within(hg: &Hypergraph, h: u32, k: u32, span: u32, budget: &SolveBudget) -> Result<Option<Colouring>> {
    check_levels(h, k)?;
    if span > MAX_SPAN {
        return Err(Error::SpanTooLarge(span));
    }
    let req = Requirements::for_hypergraph(hg, h, k);
    let degree: Vec<usize> = (0..hg.vertex_count()).map(|v| hg.degree_at(v)).collect();
    let problem = search::Problem::new(&req, &degree);
    let limits = search::Limits {
        node_limit: budget.node_limit,
        deadline: Some(Instant::now() + budget.time_limit),
    };
    match search::decide(&problem, span, &limits, &AtomicU64::new(0), budget.jobs) {
        search::Decision::Found(w) => Ok(Some(Colouring::from_vec(hg, &w))),
        search::Decision::Infeasible => Ok(None),
        search::Decision::Exhausted => Err(Error::BudgetExhausted),
    }
}
