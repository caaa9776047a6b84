use std::fmt;
use std::ops::{Add, Index, IndexMut, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// A point (or vector) of `Q^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QVec(Vec<Rational>);

impl QVec {
    pub fn new(coords: Vec<Rational>) -> Self {
        QVec(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        QVec(vec![Rational::zero(); dim])
    }

    /// The `i`-th standard basis vector of `Q^dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        QVec(coords.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn dot(&self, other: &QVec) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn squared_norm(&self) -> Rational {
        self.0.iter().map(Rational::square).sum()
    }

    pub fn squared_dist(&self, other: &QVec) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).square()).sum()
    }

    /// Like [`QVec::squared_dist`] but reports a dimension mismatch instead of
    /// assuming equal lengths.
    pub fn checked_squared_dist(&self, other: &QVec) -> Result<Rational> {
        if self.dim() != other.dim() {
            return Err(Error::domain(format!(
                "dimension mismatch: {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(self.squared_dist(other))
    }

    pub fn scale(&self, k: &Rational) -> QVec {
        QVec(self.0.iter().map(|c| c * k).collect())
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, k: &Rational, other: &QVec) -> QVec {
        QVec(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }

    /// Extends with trailing zeros up to `dim` coordinates.
    pub fn padded(&self, dim: usize) -> QVec {
        assert!(dim >= self.dim(), "cannot pad to a smaller dimension");
        let mut c = self.0.clone();
        c.resize(dim, Rational::zero());
        QVec(c)
    }
}

impl Index<usize> for QVec {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for QVec {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl Add<&QVec> for &QVec {
    type Output = QVec;
    fn add(self, rhs: &QVec) -> QVec {
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&QVec> for &QVec {
    type Output = QVec;
    fn sub(self, rhs: &QVec) -> QVec {
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
