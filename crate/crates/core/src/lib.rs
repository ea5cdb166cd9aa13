//! Graphs with multiple source labels per vertex (ms-graphs), their
//! parallel composition, and the apply operation of the AM-algebra in its
//! original and relaxed forms.
//!
//! ```
//! use msgraph_core::{evaluate, fixtures, io::parse_term, ApplyMode};
//!
//! let term = parse_term("app_s(app_o(wash,self),raven)").unwrap();
//! let out = evaluate(&term, &fixtures::lexicon(), ApplyMode::relaxed()).unwrap();
//! let graph = out.defined().unwrap();
//! assert_eq!(graph.graph().vertex_count(), 2);
//! ```

pub mod algebra;
pub mod compose;
pub mod enumerate;
pub mod fixtures;
pub mod graph;
pub mod harness;
pub mod io;
pub mod iso;

pub use algebra::{
    apply, evaluate, AlgebraError, Applied, ApplyMode, ApplyVariant, AsGraph, Condition,
    Evaluation, GraphType, Lexicon, Term, TypeEntry,
};
pub use compose::{parallel_compose, parallel_compose_classic, ComposeError, MergePartition};
pub use enumerate::{enumerate_graphs, EnumerationBounds};
pub use graph::{
    BaseGraph, Edge, GraphError, MsGraph, RenameMap, SourceLabel, Symbol, ValidityReport,
    VertexId, Violation,
};
pub use iso::{find_isomorphism, is_isomorphic};
