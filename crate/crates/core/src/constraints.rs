//! L(h,k) separation constraints derived from a hypergraph, and the
//! colouring checker every scheme and solver result goes through.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};

/// Unordered vertex index pair with `0 < 1`.
pub type Pair = (usize, usize);

pub type LabelledPair = (VertexId, VertexId);

/// Level-h pairs share an edge; level-k pairs `{u, v}` have edges
/// `e1 ∋ v`, `e2 ∋ u` (possibly equal) meeting in a third vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstraintSet {
    pub level_h: BTreeSet<Pair>,
    pub level_k: BTreeSet<Pair>,
}

fn ordered(a: usize, b: usize) -> Pair {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

pub fn build_constraints(h: &Hypergraph) -> ConstraintSet {
    let mut set = ConstraintSet::default();
    for e in h.edges() {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                set.level_h.insert((a, b));
            }
        }
    }
    // Every witness vertex w pairs up all vertices of all edges through w.
    for w in 0..h.vertex_count() {
        let mut around = BTreeSet::new();
        for &e in h.incident(w) {
            around.extend(h.edges()[e].iter().copied().filter(|&x| x != w));
        }
        let around: Vec<usize> = around.into_iter().collect();
        for (i, &a) in around.iter().enumerate() {
            for &b in &around[i + 1..] {
                set.level_k.insert(ordered(a, b));
            }
        }
    }
    set
}

impl ConstraintSet {
    /// Required gap per pair: `h` for level-h pairs, otherwise `k` for
    /// level-k pairs, zero elsewhere.
    pub fn requirements(&self, n: usize, h: u32, k: u32) -> Requirements {
        let mut gap = vec![0u32; n * n];
        for &(a, b) in &self.level_k {
            gap[a * n + b] = k;
            gap[b * n + a] = k;
        }
        for &(a, b) in &self.level_h {
            gap[a * n + b] = h;
            gap[b * n + a] = h;
        }
        Requirements { n, gap }
    }

    /// Level-h and level-k pairs by label.
    pub fn labelled(&self, h: &Hypergraph) -> (Vec<LabelledPair>, Vec<LabelledPair>) {
        let lab = |s: &BTreeSet<Pair>| s.iter().map(|&(a, b)| (h.vertex(a).clone(), h.vertex(b).clone())).collect();
        (lab(&self.level_h), lab(&self.level_k))
    }
}

/// Dense pairwise gap matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Requirements {
    n: usize,
    gap: Vec<u32>,
}

impl Requirements {
    pub fn for_hypergraph(h: &Hypergraph, hgap: u32, kgap: u32) -> Self {
        build_constraints(h).requirements(h.vertex_count(), hgap, kgap)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn gap(&self, a: usize, b: usize) -> u32 {
        self.gap[a * self.n + b]
    }

    /// `(other, gap)` for every constrained partner of `v`.
    pub fn partners(&self, v: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        (0..self.n).filter_map(move |u| {
            let g = self.gap(v, u);
            (g > 0).then_some((u, g))
        })
    }

    /// Whether `colour` at `v` respects every already-coloured partner.
    pub fn admits(&self, v: usize, colour: u32, colours: &[Option<u32>]) -> bool {
        self.partners(v).all(|(u, g)| match colours[u] {
            Some(c) => colour.abs_diff(c) >= g,
            None => true,
        })
    }

    pub fn violations(&self, colours: &[u32]) -> Vec<(Pair, u32, u32)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                let g = self.gap(a, b);
                let d = colours[a].abs_diff(colours[b]);
                if d < g {
                    out.push(((a, b), g, d));
                }
            }
        }
        out
    }
}

/// A total vertex colouring; serialises as `{"a": 0, "b": 2}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Colouring(pub BTreeMap<VertexId, u32>);

impl Colouring {
    pub fn from_vec(h: &Hypergraph, colours: &[u32]) -> Self {
        Colouring(h.vertices().iter().cloned().zip(colours.iter().copied()).collect())
    }

    /// Colours in the hypergraph's vertex order.
    pub fn to_vec(&self, h: &Hypergraph) -> Result<Vec<u32>> {
        for v in self.0.keys() {
            h.index_of(v)?;
        }
        h.vertices()
            .iter()
            .map(|v| self.0.get(v).copied().ok_or_else(|| Error::PartialColouring(v.0.clone())))
            .collect()
    }

    pub fn get(&self, v: &VertexId) -> Option<u32> {
        self.0.get(v).copied()
    }

    pub fn span(&self) -> u32 {
        span_of(self.0.values().copied())
    }

    pub fn holes(&self) -> Vec<u32> {
        holes(self.0.values().copied())
    }
}

pub fn span_of(colours: impl IntoIterator<Item = u32>) -> u32 {
    let (mut lo, mut hi) = (u32::MAX, 0);
    for c in colours {
        lo = lo.min(c);
        hi = hi.max(c);
    }
    if lo == u32::MAX {
        0
    } else {
        hi - lo
    }
}

/// Colours `x` with `x-1` and `x+1` used and `x` unused.
pub fn holes(colours: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let used: BTreeSet<u32> = colours.into_iter().collect();
    let (Some(&lo), Some(&hi)) = (used.first(), used.last()) else {
        return Vec::new();
    };
    (lo + 1..hi)
        .filter(|x| !used.contains(x) && used.contains(&(x - 1)) && used.contains(&(x + 1)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: VertexId,
    pub v: VertexId,
    pub required: u32,
    pub actual: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColouringReport {
    pub valid: bool,
    pub span: u32,
    pub holes: Vec<u32>,
    pub violations: Vec<Violation>,
}

pub(crate) fn check_levels(h: u32, k: u32) -> Result<()> {
    if h > k {
        Ok(())
    } else {
        Err(Error::LevelOrder { h, k })
    }
}

/// Checks `f` against every L(h,k) constraint of `hg` and lists all
/// violations.
pub fn check(hg: &Hypergraph, h: u32, k: u32, f: &Colouring) -> Result<ColouringReport> {
    check_levels(h, k)?;
    let colours = f.to_vec(hg)?;
    Ok(check_with(hg, &Requirements::for_hypergraph(hg, h, k), &colours))
}

pub(crate) fn check_with(hg: &Hypergraph, req: &Requirements, colours: &[u32]) -> ColouringReport {
    let violations: Vec<Violation> = req
        .violations(colours)
        .into_iter()
        .map(|((a, b), required, actual)| Violation {
            u: hg.vertex(a).clone(),
            v: hg.vertex(b).clone(),
            required,
            actual,
        })
        .collect();
    ColouringReport {
        valid: violations.is_empty(),
        span: span_of(colours.iter().copied()),
        holes: holes(colours.iter().copied()),
        violations,
    }
}
