//! Generators for the hypergraph families used throughout the crate, and
//! the three transforms: s-section, line graph, Cartesian product.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

fn param(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Parameter(msg()))
    }
}

/// All `r`-subsets of an `n`-set, vertices `v1..vn`.
pub fn complete_uniform(n: usize, r: usize) -> Result<Hypergraph> {
    param(2 <= r && r <= n, || format!("complete_uniform needs 2 <= r <= n (n={n}, r={r})"))?;
    let labels = (1..=n).map(|i| format!("v{i}")).collect();
    let edges = (0..n).combinations(r).collect();
    Hypergraph::from_indexed(labels, edges)
}

pub fn complete_graph(n: usize) -> Result<Hypergraph> {
    complete_uniform(n, 2)
}

/// Star-hypergraph: `m` edges of size `r`, every pair meeting exactly in a
/// centre of `c` vertices.
///
/// Vertex order: centre `u1..uc`, then petal vertices `y{l}.{j}` for edge
/// `l` and position `j`, edge-major.
pub fn star_hypergraph(r: usize, c: usize, m: usize) -> Result<Hypergraph> {
    param(1 <= c && c < r && m >= 1, || format!("star needs 1 <= c < r and m >= 1 (r={r}, c={c}, m={m})"))?;
    let mut labels: Vec<String> = (1..=c).map(|s| format!("u{s}")).collect();
    let mut edges = Vec::with_capacity(m);
    for l in 1..=m {
        let mut e: Vec<usize> = (0..c).collect();
        for j in 1..=(r - c) {
            e.push(labels.len());
            labels.push(format!("y{l}.{j}"));
        }
        edges.push(e);
    }
    Hypergraph::from_indexed(labels, edges)
}

/// Hyperpath `e1 s1 e2 s2 … e_m`: consecutive edges share the single vertex
/// `s_i`, all other pairs are disjoint. Vertices are laid out edge by edge.
pub fn hyperpath(r: usize, m: usize) -> Result<Hypergraph> {
    param(r >= 2 && m >= 1, || format!("hyperpath needs r >= 2 and m >= 1 (r={r}, m={m})"))?;
    let mut labels = Vec::new();
    let mut edges = Vec::with_capacity(m);
    let mut shared_prev: Option<usize> = None;
    for i in 1..=m {
        let mut e = Vec::with_capacity(r);
        if let Some(s) = shared_prev {
            e.push(s);
        }
        let private = if i < m { r - e.len() - 1 } else { r - e.len() };
        for t in 1..=private {
            e.push(labels.len());
            labels.push(format!("p{i}.{t}"));
        }
        if i < m {
            let s = labels.len();
            labels.push(format!("s{i}"));
            e.push(s);
            shared_prev = Some(s);
        }
        edges.push(e);
    }
    Hypergraph::from_indexed(labels, edges)
}

pub fn path_graph(n: usize) -> Result<Hypergraph> {
    param(n >= 2, || format!("path needs n >= 2 (n={n})"))?;
    let labels = (1..=n).map(|i| format!("v{i}")).collect();
    Hypergraph::from_indexed(labels, (0..n - 1).map(|i| vec![i, i + 1]).collect())
}

pub fn cycle_graph(n: usize) -> Result<Hypergraph> {
    param(n >= 3, || format!("cycle needs n >= 3 (n={n})"))?;
    let labels = (1..=n).map(|i| format!("v{i}")).collect();
    Hypergraph::from_indexed(labels, (0..n).map(|i| vec![i, (i + 1) % n]).collect())
}

pub fn petersen_graph() -> Result<Hypergraph> {
    let labels = (0..10).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push(vec![i, (i + 1) % 5]);
        edges.push(vec![i, i + 5]);
        edges.push(vec![5 + i, 5 + (i + 2) % 5]);
    }
    Hypergraph::from_indexed(labels, edges)
}

/// The Fano plane: seven points, seven 3-point lines, any two lines
/// meeting in exactly one point.
pub fn fano_plane() -> Result<Hypergraph> {
    let labels = (1..=7).map(|i| format!("p{i}")).collect();
    let edges = (0..7).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect();
    Hypergraph::from_indexed(labels, edges)
}

/// The `d`-dimensional hypercube graph with bit-string labels.
pub fn hypercube_graph(d: usize) -> Result<Hypergraph> {
    param((1..=12).contains(&d), || format!("hypercube needs 1 <= d <= 12 (d={d})"))?;
    let n = 1usize << d;
    let labels = (0..n).map(|i| format!("{i:0d$b}")).collect();
    let mut edges = Vec::new();
    for v in 0..n {
        for b in 0..d {
            let w = v ^ (1 << b);
            if v < w {
                edges.push(vec![v, w]);
            }
        }
    }
    Hypergraph::from_indexed(labels, edges)
}

/// Random `r`-uniform hypertree: starting from one edge, repeatedly attach a
/// fresh edge at a uniformly chosen vertex whose degree is below
/// `max_degree`. Linear and connected by construction.
pub fn hypertree_random(r: usize, edge_count: usize, max_degree: usize, seed: u64) -> Result<Hypergraph> {
    param(r >= 2 && edge_count >= 1 && max_degree >= 1, || {
        format!("hypertree needs r >= 2, edges >= 1, max degree >= 1 (r={r}, edges={edge_count}, max_degree={max_degree})")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![1usize; r];
    let mut edges = vec![(0..r).collect::<Vec<_>>()];
    while edges.len() < edge_count {
        let open: Vec<usize> = (0..degree.len()).filter(|&v| degree[v] < max_degree).collect();
        if open.is_empty() {
            return Err(Error::Parameter(format!(
                "no vertex below degree {max_degree} after {} edges",
                edges.len()
            )));
        }
        let at = open[rng.random_range(0..open.len())];
        degree[at] += 1;
        let mut e = vec![at];
        for _ in 1..r {
            e.push(degree.len());
            degree.push(1);
        }
        edges.push(e);
    }
    let labels = (0..degree.len()).map(|i| format!("t{i}")).collect();
    Hypergraph::from_indexed(labels, edges)
}

/// Exhaustive hypertree check: connected, linear, and deleting any edge `e`
/// leaves exactly `|e|` components.
pub fn is_hypertree(h: &Hypergraph) -> bool {
    h.is_connected()
        && h.is_linear()
        && (0..h.edge_count()).all(|e| h.components_without_edge(e) == h.edges()[e].len())
}

/// Random simple hypergraph on `n` vertices with up to `edge_count` edges of
/// size `2..=max_rank`. Candidate edges that would break simplicity are
/// skipped; at least one edge is always present.
pub fn random_simple(n: usize, edge_count: usize, max_rank: usize, seed: u64) -> Result<Hypergraph> {
    param(n >= 2 && edge_count >= 1 && max_rank >= 2, || {
        format!("random hypergraph needs n >= 2, edges >= 1, max rank >= 2 (n={n}, edges={edge_count}, max_rank={max_rank})")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_rank = max_rank.min(n);
    let mut edges: Vec<BTreeSet<usize>> = Vec::new();
    let mut attempts = 0;
    while edges.len() < edge_count && attempts < edge_count * 20 {
        attempts += 1;
        let size = rng.random_range(2..=max_rank);
        let mut e = BTreeSet::new();
        while e.len() < size {
            e.insert(rng.random_range(0..n));
        }
        if edges.iter().all(|f| !e.is_subset(f) && !f.is_subset(&e)) {
            edges.push(e);
        }
    }
    let labels = (1..=n).map(|i| format!("v{i}")).collect();
    Hypergraph::from_indexed(labels, edges.into_iter().map(|e| e.into_iter().collect()).collect())
}

/// The `s`-section: all `s`-subsets of edges, plus edges shorter than `s`,
/// de-duplicated and with contained edges removed.
pub fn s_section(h: &Hypergraph, s: usize) -> Result<Hypergraph> {
    param(2 <= s && s <= h.rank(), || format!("s-section needs 2 <= s <= rank={} (s={s})", h.rank()))?;
    let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
    for e in h.edges() {
        if e.len() < s {
            set.insert(e.clone());
        } else {
            set.extend(e.iter().copied().combinations(s));
        }
    }
    let all: Vec<Vec<usize>> = set.into_iter().collect();
    let edges = all
        .iter()
        .filter(|e| {
            !all.iter()
                .any(|f| f.len() > e.len() && e.iter().all(|x| f.binary_search(x).is_ok()))
        })
        .cloned()
        .collect();
    let labels = h.vertices().iter().map(|v| v.0.clone()).collect();
    Hypergraph::from_indexed(labels, edges)
}

/// Line graph: vertex `e{i}` for edge `i`, adjacent iff the edges meet.
pub fn line_graph(h: &Hypergraph) -> Result<Hypergraph> {
    if h.has_isolated_vertex() {
        return Err(Error::IsolatedVertex);
    }
    let m = h.edge_count();
    if m < 2 {
        return Err(Error::Parameter("line graph of a single edge has no edges".into()));
    }
    let labels = (0..m).map(|i| format!("e{i}")).collect();
    let mut edges = Vec::new();
    for a in 0..m {
        for b in (a + 1)..m {
            if crate::hypergraph::intersection_size(&h.edges()[a], &h.edges()[b]) > 0 {
                edges.push(vec![a, b]);
            }
        }
    }
    if edges.is_empty() {
        return Err(Error::Parameter("line graph has no edges (edges pairwise disjoint)".into()));
    }
    Hypergraph::from_indexed(labels, edges)
}

/// Label of the product vertex `(x, y)`.
pub fn product_label(x: &str, y: &str) -> String {
    format!("({x}|{y})")
}

/// Cartesian product. Vertices are laid out row-major with the first factor
/// as the row index: vertex `(i, j)` sits at position `i * |V2| + j`.
pub fn cartesian_product(left: &Hypergraph, right: &Hypergraph) -> Result<Hypergraph> {
    let n2 = right.vertex_count();
    let labels = left
        .vertices()
        .iter()
        .flat_map(|x| right.vertices().iter().map(move |y| product_label(x.as_str(), y.as_str())))
        .collect();
    let mut edges = Vec::with_capacity(left.edge_count() * n2 + right.edge_count() * left.vertex_count());
    for x in 0..left.vertex_count() {
        for e in right.edges() {
            edges.push(e.iter().map(|&y| x * n2 + y).collect());
        }
    }
    for y in 0..n2 {
        for e in left.edges() {
            edges.push(e.iter().map(|&x| x * n2 + y).collect());
        }
    }
    Hypergraph::from_indexed(labels, edges)
}

/// A named family plus its parameters, e.g. `star:7,4,3` or `complete:4,3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyParams {
    CompleteUniform { n: usize, r: usize },
    Star { r: usize, c: usize, m: usize },
    Hyperpath { r: usize, m: usize },
    HypertreeRandom { r: usize, edges: usize, max_degree: usize, seed: u64 },
    GraphPath { n: usize },
    GraphCycle { n: usize },
    GraphComplete { n: usize },
    RandomSimple { n: usize, edges: usize, max_rank: usize, seed: u64 },
    Petersen,
    Fano,
    Hypercube { d: usize },
    Product(Box<FamilyParams>, Box<FamilyParams>),
}

impl FamilyParams {
    pub fn build(&self) -> Result<Hypergraph> {
        match self {
            FamilyParams::CompleteUniform { n, r } => complete_uniform(*n, *r),
            FamilyParams::Star { r, c, m } => star_hypergraph(*r, *c, *m),
            FamilyParams::Hyperpath { r, m } => hyperpath(*r, *m),
            FamilyParams::HypertreeRandom { r, edges, max_degree, seed } => {
                hypertree_random(*r, *edges, *max_degree, *seed)
            }
            FamilyParams::GraphPath { n } => path_graph(*n),
            FamilyParams::GraphCycle { n } => cycle_graph(*n),
            FamilyParams::GraphComplete { n } => complete_graph(*n),
            FamilyParams::RandomSimple { n, edges, max_rank, seed } => random_simple(*n, *edges, *max_rank, *seed),
            FamilyParams::Petersen => petersen_graph(),
            FamilyParams::Fano => fano_plane(),
            FamilyParams::Hypercube { d } => hypercube_graph(*d),
            FamilyParams::Product(a, b) => cartesian_product(&a.build()?, &b.build()?),
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyParams::CompleteUniform { n, r } => write!(f, "complete:{n},{r}"),
            FamilyParams::Star { r, c, m } => write!(f, "star:{r},{c},{m}"),
            FamilyParams::Hyperpath { r, m } => write!(f, "hyperpath:{r},{m}"),
            FamilyParams::HypertreeRandom { r, edges, max_degree, seed } => {
                write!(f, "hypertree:{r},{edges},{max_degree},{seed}")
            }
            FamilyParams::GraphPath { n } => write!(f, "path:{n}"),
            FamilyParams::GraphCycle { n } => write!(f, "cycle:{n}"),
            FamilyParams::GraphComplete { n } => write!(f, "graph-complete:{n}"),
            FamilyParams::RandomSimple { n, edges, max_rank, seed } => write!(f, "random:{n},{edges},{max_rank},{seed}"),
            FamilyParams::Petersen => write!(f, "petersen"),
            FamilyParams::Fano => write!(f, "fano"),
            FamilyParams::Hypercube { d } => write!(f, "cube:{d}"),
            FamilyParams::Product(a, b) => write!(f, "product({a};{b})"),
        }
    }
}

impl FromStr for FamilyParams {
    type Err = Error;

    /// Parses `tag[:p1,p2,...]`. `complete:n` means the complete graph
    /// `K_n`; `complete:n,r` the complete `r`-uniform hypergraph.
    fn from_str(s: &str) -> Result<Self> {
        let (tag, rest) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<u64> = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|p| p.trim().parse::<u64>().map_err(|_| Error::Parameter(format!("bad number {p:?} in {s:?}"))))
                .collect::<Result<_>>()?
        };
        let arity = |want: &[usize]| -> Result<()> {
            param(want.contains(&nums.len()), || format!("{tag} takes {want:?} parameters, got {}", nums.len()))
        };
        let u = |i: usize| nums[i] as usize;
        Ok(match tag {
            "complete" | "complete-uniform" => {
                arity(&[1, 2])?;
                FamilyParams::CompleteUniform { n: u(0), r: if nums.len() == 2 { u(1) } else { 2 } }
            }
            "star" => {
                arity(&[3])?;
                FamilyParams::Star { r: u(0), c: u(1), m: u(2) }
            }
            "hyperpath" => {
                arity(&[2])?;
                FamilyParams::Hyperpath { r: u(0), m: u(1) }
            }
            "hypertree" | "hypertree-random" => {
                arity(&[4])?;
                FamilyParams::HypertreeRandom { r: u(0), edges: u(1), max_degree: u(2), seed: nums[3] }
            }
            "path" | "graph-path" => {
                arity(&[1])?;
                FamilyParams::GraphPath { n: u(0) }
            }
            "cycle" | "graph-cycle" => {
                arity(&[1])?;
                FamilyParams::GraphCycle { n: u(0) }
            }
            "graph-complete" => {
                arity(&[1])?;
                FamilyParams::GraphComplete { n: u(0) }
            }
            "petersen" => {
                arity(&[0])?;
                FamilyParams::Petersen
            }
            "random" => {
                arity(&[4])?;
                FamilyParams::RandomSimple { n: u(0), edges: u(1), max_rank: u(2), seed: nums[3] }
            }
            "fano" => {
                arity(&[0])?;
                FamilyParams::Fano
            }
            "cube" | "hypercube" => {
                arity(&[1])?;
                FamilyParams::Hypercube { d: u(0) }
            }
            other => return Err(Error::Parameter(format!("unknown family {other:?}"))),
        })
    }
}
