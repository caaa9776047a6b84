//! Exact embeddings of specific graphs at a prescribed distance.
//!
//! Every construction works at the square-free part `s` of the requested
//! squared distance `r = s f^2` and multiplies all coordinates by `f` at the
//! end, so `embed(r)` is always `f · embed(s)`.

mod book;
mod clique_ext;
mod k133;
mod k23;

pub use book::embed_book_sqrt2;
pub use clique_ext::clique_extension;
pub use k133::{embed_k133_q5, K133Plan};
pub use k23::embed_k23_q3;

use crate::arith::{square_free_part, to_desk_scale, Rational};
use crate::distance_graph::{verify_embedding, Embedding};
use crate::error::{Error, Result};

/// `r = s f^2` with `s` a square-free integer.
pub(crate) fn normalize(r: &Rational) -> Result<(u64, Rational)> {
    let (s, f) = square_free_part(r)?;
    Ok((to_desk_scale(&s)?, f))
}

/// Scales by `f` and refuses to return anything that fails exact
/// verification.
pub(crate) fn finish(e: Embedding, f: &Rational) -> Result<Embedding> {
    let e = if *f == Rational::one() { e } else { e.scaled(f) };
    let report = verify_embedding(&e, false)?;
    if let Some(bad) = report.failing_edges().next() {
        return Err(Error::internal(format!(
            "construction produced edge {}-{} at squared distance {} instead of {}",
            bad.u, bad.v, bad.squared_dist, e.r
        )));
    }
    Ok(e)
}

pub(crate) fn names(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}
