//! Exact packing of internally disjoint Steiner trees on small graphs, and
//! the machinery to check extremal statements about the largest number of
//! edges a graph can have while every vertex triple is joined by at most two
//! internally disjoint trees.
//!
//! * [`graph`], [`graph6`], [`canon`]: bitset graphs, interchange format,
//!   canonical labelling.
//! * [`steiner`]: the packing solver, Menger connectivity, bounds, an
//!   independent brute-force oracle and a certificate checker.
//! * [`enumerate`]: isomorphism-free generation up to nine vertices.
//! * [`families`]: named constructions and extremal catalogs.
//! * [`harness`]: claim checks, reports and the persistent cache.
//! * [`cli`]: the `kappa3` command.

pub mod canon;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod steiner;

pub use canon::{are_isomorphic, canonical_form, CanonicalKey};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
