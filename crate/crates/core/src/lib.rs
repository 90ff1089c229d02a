//! L(h,k)-colourings of hypergraphs.
//!
//! Adjacent vertices (sharing an edge) need colours at least `h` apart;
//! vertices joined through a common neighbour need colours at least `k`
//! apart. The crate provides validated hypergraph I/O, family generators,
//! an exact solver for the minimum span, constructive colouring schemes for
//! structured families, and numerical checks of spectral bounds.

pub mod constraints;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod hypergraph;
pub mod report;
pub mod schemes;
pub mod solver;
pub mod spectral;

pub use constraints::{build_constraints, check, Colouring, ColouringReport, ConstraintSet, Violation};
pub use error::{Diagnostic, Error, Result, ValidationErrors};
pub use hypergraph::{Distance, Hypergraph, RawHypergraph, StructureSummary, VertexId};
pub use report::{BoundReport, BoundRow, Relation};
pub use schemes::SchemeOutcome;
pub use solver::{lambda_exact, Optimum, SolveBudget, SolveResult};
pub use spectral::Spectrum;
