//! Exact max-plus (tropical) spectral combinatorics.
//!
//! The library computes, in exact rational arithmetic:
//!
//! - tropical eigenvalues, Kleene plus/star closures, and the tropical
//!   extreme points of polytropes and eigenspaces ([`tropical`]);
//! - the directed-graph substrate: strong/sink components, contractions,
//!   cycle and in-tree enumeration, circled trees ([`digraph`]);
//! - complete sets of connected relations with their validation, partial
//!   order and join ([`relations`]);
//! - the polyhedral side: the cone of matrices attached to a relation or a
//!   complete set, codimensions, interior points, cone equality ([`cones`]);
//! - classification of a matrix to the complete set indexing the cone of
//!   linearity of its polytrope map ([`classify`]);
//! - exhaustive enumeration of the fan of such cones at small `n`, its face
//!   lattice, f-vectors, census tables and symmetry orbits ([`enumerate`]);
//! - brute-force reference implementations used only by tests and the
//!   `verify` command ([`oracle`]).
//!
//! Everything is deterministic: canonical orderings are applied before any
//! output, and all arithmetic is exact.

pub mod classify;
pub mod cones;
pub mod digraph;
pub mod enumerate;
pub mod error;
pub mod oracle;
pub mod rational;
pub mod relations;
pub mod tropical;

mod dd;
mod linalg;

pub use error::{Error, Result};
pub use rational::Rational;
