//! Checking and exhaustive search for graphs in which every edge lies in a
//! unique triangle and every non-edge lies in a unique quadrilateral of the
//! complement.
//!
//! * [`graph`], [`graph6`], [`generators`]: graph values, the graph6 codec
//!   and named families.
//! * [`local`]: per-pair counts, property checkers, strongly regular
//!   parameters.
//! * [`extremal`]: Mantel and Reiman bounds and the counting inequality.
//! * [`canon`], [`enumerate`]: canonical labelling and isomorph-free search.
//! * [`oracle`]: naive reference implementations for cross-checking.

pub mod canon;
pub mod enumerate;
pub mod extremal;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod local;
pub mod oracle;

pub use canon::{canonical_form, CanonicalGraph};
pub use enumerate::{enumerate_all, search_p2p3, Certificate, SearchConfig};
pub use generators::{generate, GeneratorSpec};
pub use graph::{Graph, GraphError, VertexPair};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use local::{PropertyReport, SrgOutcome, SrgParams};
