//! Equitable `(t, k, d)`-tree-colorings.
//!
//! A coloring of a graph with `t` colors is an equitable `(t, k, d)`-tree-coloring
//! when all color classes have sizes that differ by at most one and every class
//! induces a forest whose components have maximum degree at most `k` and
//! diameter at most `d`.
//!
//! The crate provides:
//!
//! * [`graph`]: a small immutable simple-graph type, generators and the
//!   edge-list format.
//! * [`coloring`]: the coloring and parameter types, the universal
//!   [`verify`](coloring::verify) routine and JSON certificates.
//! * [`bipartite`]: closed-form constructions and exact feasibility for the
//!   balanced complete bipartite graph `K_{n,n}`.
//! * [`sparse`]: inductive constructions for planar graphs of girth at least
//!   five or six and for outerplanar graphs.
//! * [`oracle`]: an exhaustive backtracking search used as ground truth.
//! * [`cli`]: the `eqtree` command-line front end.

pub mod bipartite;
pub mod bound;
pub mod cli;
pub mod coloring;
pub mod edgelist;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod sparse;

pub use bound::Bound;
pub use coloring::{verify, Certificate, ColoringError, Params, TreeColoring, VerificationReport};
pub use graph::{Graph, GraphError, Remap, VertexId};
