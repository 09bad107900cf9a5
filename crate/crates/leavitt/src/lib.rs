//! Graph moves, graph monoids, and the path algebras they act on.
//!
//! The crate revolves around one workflow: take a finite directed graph,
//! reduce it by source eliminations and collapses to a totally looped core,
//! and read off the corner of its algebra at a vertex class as the algebra
//! of another explicit graph. Everything on the way there is exact and
//! deterministic: moves never mutate their input, ties always break
//! lexicographically, and algebra arithmetic runs over exact rationals or a
//! prime field.
//!
//! Module map:
//! * [`graph`]: multigraphs, reachability, restriction, DOT and JSON forms
//! * [`moves`]: source elimination, Move (R), collapse, in/out-splits, hair
//! * [`monoid`]: the graph monoid and a BFS decision for its congruence
//! * [`algebra`]: elements, normal forms, and the generator maps ψ, π, Φ
//! * [`projective`]: vertex classes over hair extensions and the (†) rewrite
//! * [`pipeline`]: the end-to-end decomposition and corner computation
//! * [`iso`]: graph isomorphism by backtracking, used heavily in tests
//! * [`text`]: the textual syntaxes shared with the CLI

pub mod algebra;
pub mod error;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod graph;
pub mod iso;
pub mod monoid;
pub mod moves;
pub mod pipeline;
pub mod projective;
pub mod text;

pub use error::{Error, Result};
pub use graph::{disjoint_union, Edge, EdgeId, Graph, VertexId};
