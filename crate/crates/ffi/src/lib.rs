//! C ABI over `distgraph`.
//!
//! Embeddings are opaque `DgEmbedding` handles released with
//! `dg_embedding_free`. Strings returned to C are released with
//! `dg_string_free`. Every fallible call returns a `DgStatus`; on failure the
//! message is available from `dg_last_error` on the same thread.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use distgraph::arith::{decompose_four_squares, decompose_three_squares};
use distgraph::constructions::{clique_extension, embed_book_sqrt2, embed_k133_q5, embed_k23_q3};
use distgraph::distance_graph::{multipartite_dimension, schoenberg_c1, verify_embedding, Embedding, EmbeddingJson};
use distgraph::geometry::is_distance_realized;
use distgraph::{Error, Rational};

/// Status codes shared by every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DgStatus {
    Ok = 0,
    Infeasible = 1,
    InvalidInput = 2,
    NullPointer = 3,
    Internal = 4,
}

/// An exact embedding of a graph in `Q^n`.
pub struct DgEmbedding {
    inner: Embedding,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: DgStatus, msg: &str) -> DgStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> DgStatus {
    match e {
        Error::Infeasible(_) | Error::ChordExhausted { .. } | Error::Placement { .. } => DgStatus::Infeasible,
        Error::Internal(_) => DgStatus::Internal,
        _ => DgStatus::InvalidInput,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (DgStatus, String)>) -> DgStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DgStatus::Ok,
        Ok(Err((status, msg))) => fail(status, &msg),
        Err(_) => fail(DgStatus::Internal, "panic inside distgraph"),
    }
}

fn lib<T>(r: distgraph::Result<T>) -> Result<T, (DgStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (DgStatus, String)> {
    if s.is_null() {
        return Err((DgStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (DgStatus::InvalidInput, format!("{what} is not valid UTF-8")))
}

unsafe fn read_rational(s: *const c_char) -> Result<Rational, (DgStatus, String)> {
    let text = read_str(s, "r")?;
    text.parse::<Rational>().map_err(|e| (DgStatus::InvalidInput, e.to_string()))
}

fn check_out<T>(out: *mut T) -> Result<(), (DgStatus, String)> {
    if out.is_null() {
        Err((DgStatus::NullPointer, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

unsafe fn emit(out: *mut *mut DgEmbedding, e: Embedding) {
    *out = Box::into_raw(Box::new(DgEmbedding { inner: e }));
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn dg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// `K_{2,3}` in `Q^3` at squared distance `r` (a string such as "3/2").
#[no_mangle]
pub unsafe extern "C" fn dg_embed_k23(r: *const c_char, out: *mut *mut DgEmbedding) -> DgStatus {
    guard(|| {
        check_out(out)?;
        let r = read_rational(r)?;
        emit(out, lib(embed_k23_q3(&r))?);
        Ok(())
    })
}

/// The book graph in `Q^n` at squared distance 2.
#[no_mangle]
pub unsafe extern "C" fn dg_embed_book(n: usize, out: *mut *mut DgEmbedding) -> DgStatus {
    guard(|| {
        check_out(out)?;
        emit(out, lib(embed_book_sqrt2(n))?);
        Ok(())
    })
}

/// `K_{1,3,3}` in `Q^5` at squared distance `r`.
#[no_mangle]
pub unsafe extern "C" fn dg_embed_k133(r: *const c_char, out: *mut *mut DgEmbedding) -> DgStatus {
    guard(|| {
        check_out(out)?;
        let r = read_rational(r)?;
        emit(out, lib(embed_k133_q5(&r))?);
        Ok(())
    })
}

/// `K_{4m+1}` in `Q^{4m+3}` at squared distance `r`.
#[no_mangle]
pub unsafe extern "C" fn dg_embed_clique_extension(m: u64, r: *const c_char, out: *mut *mut DgEmbedding) -> DgStatus {
    guard(|| {
        check_out(out)?;
        let r = read_rational(r)?;
        emit(out, lib(clique_extension(m, &r))?);
        Ok(())
    })
}

/// Parses an embedding from its JSON form.
#[no_mangle]
pub unsafe extern "C" fn dg_embedding_from_json(json: *const c_char, out: *mut *mut DgEmbedding) -> DgStatus {
    guard(|| {
        check_out(out)?;
        let text = read_str(json, "json")?;
        let j: EmbeddingJson = serde_json::from_str(text).map_err(|e| (DgStatus::InvalidInput, e.to_string()))?;
        emit(out, lib(Embedding::try_from(j))?);
        Ok(())
    })
}

/// Checks every edge exactly; with `faithful`, also that no non-edge sits at
/// the edge distance. Writes the verdict to `passed`.
#[no_mangle]
pub unsafe extern "C" fn dg_embedding_verify(e: *const DgEmbedding, faithful: bool, passed: *mut bool) -> DgStatus {
    guard(|| {
        check_out(passed)?;
        let e = e.as_ref().ok_or((DgStatus::NullPointer, "embedding is null".to_string()))?;
        *passed = lib(verify_embedding(&e.inner, faithful))?.passed;
        Ok(())
    })
}

/// Number of vertices, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn dg_embedding_vertex_count(e: *const DgEmbedding) -> usize {
    e.as_ref().map_or(0, |e| e.inner.graph.vertex_count())
}

/// Ambient dimension `n`, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn dg_embedding_dimension(e: *const DgEmbedding) -> usize {
    e.as_ref().map_or(0, |e| e.inner.n)
}

/// JSON form of the embedding; free the string with `dg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn dg_embedding_to_json(e: *const DgEmbedding, out: *mut *mut c_char) -> DgStatus {
    guard(|| {
        check_out(out)?;
        let e = e.as_ref().ok_or((DgStatus::NullPointer, "embedding is null".to_string()))?;
        let text = serde_json::to_string(&EmbeddingJson::from(&e.inner)).map_err(|e| (DgStatus::Internal, e.to_string()))?;
        *out = CString::new(text).map_err(|e| (DgStatus::Internal, e.to_string()))?.into_raw();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn dg_embedding_free(e: *mut DgEmbedding) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

#[no_mangle]
pub unsafe extern "C" fn dg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Whether `sqrt(r)` is a distance between points of `Q^n`.
#[no_mangle]
pub unsafe extern "C" fn dg_is_distance_realized(n: usize, r: *const c_char, out: *mut bool) -> DgStatus {
    guard(|| {
        check_out(out)?;
        let r = read_rational(r)?;
        *out = lib(is_distance_realized(n, &r))?;
        Ok(())
    })
}

/// Writes `k = out[0]^2 + out[1]^2 + out[2]^2`, or returns `Infeasible` when
/// `k = 4^a (8b + 7)`.
#[no_mangle]
pub unsafe extern "C" fn dg_three_squares(k: u64, out: *mut u64) -> DgStatus {
    guard(|| {
        check_out(out)?;
        let sq = decompose_three_squares(k)
            .ok_or_else(|| (DgStatus::Infeasible, format!("{k} has the form 4^a(8b+7)")))?;
        ptr::copy_nonoverlapping(sq.as_ptr(), out, 3);
        Ok(())
    })
}

/// Writes four squares summing to `k` into `out[0..4]`.
#[no_mangle]
pub unsafe extern "C" fn dg_four_squares(k: u64, out: *mut u64) -> DgStatus {
    guard(|| {
        check_out(out)?;
        let sq = decompose_four_squares(k);
        ptr::copy_nonoverlapping(sq.as_ptr(), out, 4);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn dg_schoenberg_c1(n: u64, out: *mut u64) -> DgStatus {
    guard(|| {
        check_out(out)?;
        *out = lib(schoenberg_c1(n))?;
        Ok(())
    })
}

/// Dimension of the complete multipartite graph with `alpha` parts of size
/// 1, `beta` of size 2 and `gamma` of size at least 3.
#[no_mangle]
pub unsafe extern "C" fn dg_multipartite_dimension(alpha: u64, beta: u64, gamma: u64, out: *mut u64) -> DgStatus {
    guard(|| {
        check_out(out)?;
        *out = lib(multipartite_dimension(alpha, beta, gamma))?;
        Ok(())
    })
}
