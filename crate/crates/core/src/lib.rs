//! Exact-arithmetic invariants of incidence-matrix codes of signed graphs.
//!
//! The crate computes, over the rationals or a prime field, the generalized
//! Hamming weights and minimum distance of the linear code generated by the
//! rows of the incidence matrix of a signed multigraph, together with the
//! dual-code weights, by three mutually cross-checking routes: matroid
//! nullity searches, graph-theoretic formulas (cogirth and edge
//! connectivity), and the lowest shifts of graded Betti tables of
//! circuit ideals. It also provides the frustration index, circuit and
//! cocircuit ideals, Castelnuovo-Mumford regularity, and an evaluation-code
//! view through projective points.
//!
//! All arithmetic is exact; every enumeration is deterministic.

pub mod betti;
pub mod error;
pub mod exact;
pub mod ghw;
pub mod graph;
pub mod incidence;
pub mod matroid;
pub mod points;
pub mod samples;

pub use error::{Error, Result};
pub use exact::{ExactMatrix, Scalar, ScalarDomain};
pub use graph::{Edge, EdgeSet, Sign, SignedGraph};
