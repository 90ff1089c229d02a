use std::fmt;

use thiserror::Error;

/// One problem found while validating a raw hypergraph. Edge numbers refer
/// to positions in the input edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    EmptyLabel,
    NoVertices,
    NoEdges,
    DuplicateVertex { label: String },
    UnknownVertex { edge: usize, label: String },
    SmallEdge { edge: usize, size: usize },
    DuplicateEdge { first: usize, second: usize },
    Containment { inner: usize, outer: usize },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::EmptyLabel => write!(f, "empty vertex label"),
            Diagnostic::NoVertices => write!(f, "no vertices"),
            Diagnostic::NoEdges => write!(f, "no edges"),
            Diagnostic::DuplicateVertex { label } => write!(f, "duplicate vertex label {label:?}"),
            Diagnostic::UnknownVertex { edge, label } => {
                write!(f, "edge {edge} names unknown vertex {label:?}")
            }
            Diagnostic::SmallEdge { edge, size } => {
                write!(f, "edge {edge} has {size} distinct vertices (needs at least 2)")
            }
            Diagnostic::DuplicateEdge { first, second } => {
                write!(f, "edges {first} and {second} are the same set")
            }
            Diagnostic::Containment { inner, outer } => {
                write!(f, "edge {inner} is contained in edge {outer}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ValidationErrors(pub Vec<Diagnostic>);

impl fmt::Display for ValidationErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid hypergraph: ")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Invalid(#[from] ValidationErrors),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("h must exceed k (got h={h}, k={k})")]
    LevelOrder { h: u32, k: u32 },
    #[error("colouring does not assign vertex {0:?}")]
    PartialColouring(String),
    #[error("input must be a graph (every edge of size 2)")]
    NotAGraph,
    #[error("hypergraph has an isolated vertex")]
    IsolatedVertex,
    #[error("hypergraph must be connected")]
    Disconnected,
    #[error("hypergraph must be regular")]
    NotRegular,
    #[error("{0}")]
    Structure(String),
    #[error("span {0} exceeds the exact solver limit of {max}", max = crate::solver::MAX_SPAN)]
    SpanTooLarge(u32),
    #[error("{vertices} vertices exceed the enumeration limit of {limit}")]
    TooLarge { vertices: usize, limit: usize },
    #[error("scheme does not apply: {0}")]
    SchemeMismatch(String),
    #[error("scheme produced no valid colouring: {0}")]
    SchemeFailed(String),
    #[error("search budget exhausted")]
    BudgetExhausted,
    #[error("eigensolver residual {residual:e} exceeds tolerance {tolerance:e}")]
    Convergence { residual: f64, tolerance: f64 },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
