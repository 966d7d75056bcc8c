//! Exact computation of the average cut-rank of graphs over the binary
//! field, together with the machinery built around it: local
//! complementation and vertex-minors, the tied parameters (maximum
//! cut-rank, neighborhood diversity, minimum rank, clique delta-cover),
//! exhaustive obstruction-set enumeration at small thresholds, and the
//! extremal forest-family construction.

pub mod canon;
pub mod cutrank;
pub mod dyadic;
pub mod error;
pub mod generate;
pub mod gf2;
pub mod graph;
pub mod graph6;
pub mod localops;

pub use dyadic::Dyadic;
pub use error::{Error, Result, Tri};
pub use graph::{Family, Graph, VertexSet};
