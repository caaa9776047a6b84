//! Exact rational embeddings of distance graphs, with checkable
//! certificates.

pub mod arith;
pub mod cert;
pub mod cli;
pub mod constructions;
pub mod diophantine;
pub mod distance_graph;
pub mod error;
pub mod geometry;
pub mod regularizer;

pub use arith::{QVec, Rational};
pub use error::{Error, Result, Witness};
