//! Finite simple hypergraphs: validation, canonical JSON, and structural
//! queries (degree, rank, linearity, stars, distances in the 2-section).

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Diagnostic, Error, Result, ValidationErrors};

/// A vertex label. Labels are unique within one hypergraph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Self {
        VertexId(label.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_owned())
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> Self {
        VertexId(s)
    }
}

/// Unvalidated interchange form: `{"vertices": [...], "edges": [[...], ...]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawHypergraph {
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
}

/// Shortest-path length in the 2-section.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureSummary {
    pub rank: usize,
    pub corank: usize,
    pub uniform: bool,
    pub linear: bool,
    pub max_degree: usize,
    pub connected: bool,
    pub diameter: Distance,
}

/// A validated simple hypergraph.
///
/// Vertices keep the order they were supplied in; that order fixes every
/// deterministic iteration in the crate (solver branching, scheme indexing,
/// product row-major layout). Edges are stored as strictly increasing vertex
/// index sequences.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    vertices: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    edges: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    /// Validates a raw vertex/edge list. Every problem found is reported,
    /// not just the first.
    pub fn from_raw(raw: &RawHypergraph) -> std::result::Result<Self, ValidationErrors> {
        let mut diags = Vec::new();
        let mut index = HashMap::new();
        let mut vertices = Vec::with_capacity(raw.vertices.len());
        for label in &raw.vertices {
            if label.is_empty() {
                diags.push(Diagnostic::EmptyLabel);
                continue;
            }
            let id = VertexId::new(label.clone());
            if index.contains_key(&id) {
                diags.push(Diagnostic::DuplicateVertex { label: label.clone() });
                continue;
            }
            index.insert(id.clone(), vertices.len());
            vertices.push(id);
        }
        if vertices.is_empty() {
            diags.push(Diagnostic::NoVertices);
        }
        if raw.edges.is_empty() {
            diags.push(Diagnostic::NoEdges);
        }

        let mut edges: Vec<Option<Vec<usize>>> = Vec::with_capacity(raw.edges.len());
        for (e, members) in raw.edges.iter().enumerate() {
            let mut set = BTreeSet::new();
            let mut ok = true;
            for label in members {
                match index.get(&VertexId::new(label.clone())) {
                    Some(&i) => {
                        set.insert(i);
                    }
                    None => {
                        diags.push(Diagnostic::UnknownVertex { edge: e, label: label.clone() });
                        ok = false;
                    }
                }
            }
            if ok && set.len() < 2 {
                diags.push(Diagnostic::SmallEdge { edge: e, size: set.len() });
                ok = false;
            }
            edges.push(ok.then(|| set.into_iter().collect()));
        }

        for a in 0..edges.len() {
            let Some(ea) = &edges[a] else { continue };
            for b in (a + 1)..edges.len() {
                let Some(eb) = &edges[b] else { continue };
                if ea == eb {
                    diags.push(Diagnostic::DuplicateEdge { first: a, second: b });
                } else if is_subset(ea, eb) {
                    diags.push(Diagnostic::Containment { inner: a, outer: b });
                } else if is_subset(eb, ea) {
                    diags.push(Diagnostic::Containment { inner: b, outer: a });
                }
            }
        }

        if !diags.is_empty() {
            return Err(ValidationErrors(diags));
        }
        let edges: Vec<Vec<usize>> = edges.into_iter().flatten().collect();
        Ok(Self::assemble(vertices, index, edges))
    }

    /// Builds from labels and index-based edges; used by the generators.
    pub(crate) fn from_indexed(labels: Vec<String>, edges: Vec<Vec<usize>>) -> Result<Self> {
        let raw = RawHypergraph {
            edges: edges
                .iter()
                .map(|e| e.iter().map(|&i| labels[i].clone()).collect())
                .collect(),
            vertices: labels,
        };
        Ok(Self::from_raw(&raw)?)
    }

    fn assemble(vertices: Vec<VertexId>, index: HashMap<VertexId, usize>, edges: Vec<Vec<usize>>) -> Self {
        let mut incidence = vec![Vec::new(); vertices.len()];
        for (e, members) in edges.iter().enumerate() {
            for &v in members {
                incidence[v].push(e);
            }
        }
        Hypergraph { vertices, index, edges, incidence }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawHypergraph = serde_json::from_str(text)?;
        Ok(Self::from_raw(&raw)?)
    }

    /// Canonical form: vertices in stored order, each edge in vertex order,
    /// edges sorted lexicographically by vertex position.
    pub fn to_raw(&self) -> RawHypergraph {
        let mut edges = self.edges.clone();
        edges.sort();
        RawHypergraph {
            vertices: self.vertices.iter().map(|v| v.0.clone()).collect(),
            edges: edges
                .iter()
                .map(|e| e.iter().map(|&i| self.vertices[i].0.clone()).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_raw()).expect("hypergraph serialises")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &VertexId {
        &self.vertices[i]
    }

    /// Edges as vertex index sequences.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_labels(&self, e: usize) -> Vec<VertexId> {
        self.edges[e].iter().map(|&i| self.vertices[i].clone()).collect()
    }

    /// Edge indices incident to vertex `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn index_of(&self, v: &VertexId) -> Result<usize> {
        self.index.get(v).copied().ok_or_else(|| Error::UnknownVertex(v.0.clone()))
    }

    pub fn degree(&self, v: &VertexId) -> Result<usize> {
        Ok(self.incidence[self.index_of(v)?].len())
    }

    pub fn degree_at(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn rank(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn corank(&self) -> usize {
        self.edges.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_uniform(&self) -> bool {
        self.rank() == self.corank()
    }

    pub fn is_graph(&self) -> bool {
        self.rank() == 2 && self.corank() == 2
    }

    pub fn is_linear(&self) -> bool {
        (0..self.edges.len()).all(|a| {
            ((a + 1)..self.edges.len()).all(|b| intersection_size(&self.edges[a], &self.edges[b]) <= 1)
        })
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.incidence.iter().any(Vec::is_empty)
    }

    /// Degree when every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree_at(0);
        self.incidence.iter().all(|i| i.len() == d).then_some(d)
    }

    /// Neighbour lists of the 2-section (co-edge adjacency), sorted.
    pub fn two_section_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.vertices.len()];
        for e in &self.edges {
            for &a in e {
                for &b in e {
                    if a != b {
                        adj[a].insert(b);
                    }
                }
            }
        }
        adj.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// BFS distances from `source` in the 2-section; `None` marks unreachable.
    pub fn bfs_from(&self, source: usize) -> Vec<Option<usize>> {
        self.bfs_with(&self.two_section_adjacency(), source)
    }

    fn bfs_with(&self, adj: &[Vec<usize>], source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertices.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs 2-section distances.
    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        let adj = self.two_section_adjacency();
        (0..self.vertices.len()).map(|s| self.bfs_with(&adj, s)).collect()
    }

    pub fn distance(&self, u: &VertexId, v: &VertexId) -> Result<Distance> {
        let (a, b) = (self.index_of(u)?, self.index_of(v)?);
        Ok(match self.bfs_from(a)[b] {
            Some(d) => Distance::Finite(d),
            None => Distance::Infinite,
        })
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_from(0).iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Distance {
        let mut best = 0;
        for row in self.distance_matrix() {
            for d in row {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Distance::Infinite,
                }
            }
        }
        Distance::Finite(best)
    }

    pub fn structure_summary(&self) -> StructureSummary {
        let diameter = self.diameter();
        StructureSummary {
            rank: self.rank(),
            corank: self.corank(),
            uniform: self.is_uniform(),
            linear: self.is_linear(),
            max_degree: self.max_degree(),
            connected: diameter != Distance::Infinite,
            diameter,
        }
    }

    /// The sub-hypergraph formed by every edge containing `v`.
    pub fn star(&self, v: &VertexId) -> Result<Hypergraph> {
        let root = self.index_of(v)?;
        Ok(self.sub_hypergraph(&self.incidence[root]))
    }

    /// Keeps the listed edges and the vertices they cover, in original order.
    pub fn sub_hypergraph(&self, edge_ids: &[usize]) -> Hypergraph {
        let mut keep = vec![false; self.vertices.len()];
        for &e in edge_ids {
            for &v in &self.edges[e] {
                keep[v] = true;
            }
        }
        let mut remap = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        let mut index = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if keep[i] {
                remap[i] = vertices.len();
                index.insert(v.clone(), vertices.len());
                vertices.push(v.clone());
            }
        }
        let edges = edge_ids
            .iter()
            .map(|&e| self.edges[e].iter().map(|&v| remap[v]).collect())
            .collect();
        Self::assemble(vertices, index, edges)
    }

    /// Number of connected components after deleting edge `skip`
    /// (vertices left without edges count as their own components).
    pub fn components_without_edge(&self, skip: usize) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (e, members) in self.edges.iter().enumerate() {
            if e == skip {
                continue;
            }
            for w in members.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        (0..n).filter(|&x| find(&mut parent, x) == x).count()
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.len() < big.len() && small.iter().all(|x| big.binary_search(x).is_ok())
}

pub(crate) fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|x| b.binary_search(x).is_ok()).count()
}
