use std::fmt;

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use crate::arith::Rational;

/// Why a requested object cannot exist. Every variant carries enough data
/// for a reader to re-check the obstruction by hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The square-free part of `value` is congruent to 7 mod 8, so `value`
    /// is not a sum of three rational squares.
    ThreeSquareObstruction { value: Rational, square_free: BigUint },
    /// The square-free part of `value` has a prime factor congruent to 3
    /// mod 4, so `value` is not a sum of two rational squares.
    TwoSquareObstruction { value: Rational, square_free: BigUint, prime: BigUint },
    /// `value` is not the square of a rational.
    NotASquare { value: Rational, square_free: BigUint },
    /// `value = 4^a (8b + 7)`.
    GaussForm { value: BigUint, a: u32, b: BigUint },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ThreeSquareObstruction { value, square_free } => write!(
                f,
                "square-free part of {value} is {square_free}, and {square_free} ≡ 7 (mod 8)"
            ),
            Witness::TwoSquareObstruction { value, square_free, prime } => write!(
                f,
                "square-free part of {value} is {square_free}, divisible by the prime {prime} ≡ 3 (mod 4)"
            ),
            Witness::NotASquare { value, square_free } => write!(
                f,
                "{value} is not a rational square (square-free part {square_free})"
            ),
            Witness::GaussForm { value, a, b } => {
                write!(f, "{value} = 4^{a}·(8·{b} + 7)")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("infeasible: {0}")]
    Infeasible(Witness),
    #[error("no further rational solutions after trying slopes {tried:?}")]
    ChordExhausted { tried: Vec<BigInt> },
    #[error("placement failed after {attempts} attempts (seed {seed})")]
    Placement { attempts: usize, seed: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn degenerate(msg: impl Into<String>) -> Self {
        Error::Degenerate(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
