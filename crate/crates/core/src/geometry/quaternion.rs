//! Rational quaternions acting on `Q^4` blocks.
//!
//! Right multiplication by a quaternion `h` multiplies every Euclidean
//! length by `|h|`, so with `|h|^2 = q` it scales all distances of `Q^{4k}`
//! by `sqrt(q)` while keeping coordinates rational.

use std::ops::Mul;

use crate::arith::{rational_sum_of_squares, QVec, Rational};
use crate::error::{Error, Result};

/// `w + x i + y j + z k` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one(), Rational::zero(), Rational::zero())
    }

    pub fn j() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::one(), Rational::zero())
    }

    pub fn k() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::zero(), Rational::one())
    }

    /// Reads coordinates `offset..offset + 4` of `v`.
    pub fn from_block(v: &QVec, offset: usize) -> Self {
        Self::new(
            v[offset].clone(),
            v[offset + 1].clone(),
            v[offset + 2].clone(),
            v[offset + 3].clone(),
        )
    }

    pub fn to_qvec(&self) -> QVec {
        QVec::new(vec![self.w.clone(), self.x.clone(), self.y.clone(), self.z.clone()])
    }

    /// Squared norm `w^2 + x^2 + y^2 + z^2`.
    pub fn norm(&self) -> Rational {
        self.w.square() + self.x.square() + self.y.square() + self.z.square()
    }

    /// A quaternion of squared norm `q`: a four-square split of
    /// `numer * denom`, divided by `denom`.
    pub fn with_norm(q: &Rational) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::domain(format!("quaternion norm must be positive, got {q}")));
        }
        let mut parts = rational_sum_of_squares(q, 4)?
            .expect("every rational is a sum of four squares")
            .into_iter();
        let mut next = || parts.next().expect("four components");
        Ok(Self::new(next(), next(), next(), next()))
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;

    fn mul(self, o: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        Quaternion {
            w: a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            x: a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            y: a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            z: a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        }
    }
}

/// Right-multiplies every 4-coordinate block of `v` by `h`.
pub fn right_multiply_blocks(v: &QVec, h: &Quaternion) -> QVec {
    let mut out = Vec::with_capacity(v.dim());
    for offset in (0..v.dim()).step_by(4) {
        out.extend((&Quaternion::from_block(v, offset) * h).to_qvec().into_coords());
    }
    QVec::new(out)
}

/// The map `Q^n -> Q^n` (`n` a multiple of 4) that scales every distance by
/// `sqrt(q)`, applied to each point.
pub fn scale_sqrt_q(points: &[QVec], q: &Rational) -> Result<Vec<QVec>> {
    let h = Quaternion::with_norm(q)?;
    scale_by_quaternion(points, &h)
}

/// Same as [`scale_sqrt_q`] with an explicit multiplier `h`, `|h|^2 = q`.
pub fn scale_by_quaternion(points: &[QVec], h: &Quaternion) -> Result<Vec<QVec>> {
    if h.norm().is_zero() {
        return Err(Error::domain("zero quaternion is not invertible"));
    }
    let Some(first) = points.first() else {
        return Ok(Vec::new());
    };
    let n = first.dim();
    if n == 0 || n % 4 != 0 {
        return Err(Error::domain(format!("dimension {n} is not a positive multiple of 4")));
    }
    if let Some(p) = points.iter().find(|p| p.dim() != n) {
        return Err(Error::domain(format!("mixed dimensions {n} and {}", p.dim())));
    }
    Ok(points.iter().map(|p| right_multiply_blocks(p, h)).collect())
}

/// `(p i, p j, p k)`: three vectors orthogonal to `p` and to each other,
/// each with the squared norm of `p`.
pub fn quaternion_orthobasis(p: &QVec) -> Result<[QVec; 3]> {
    if p.dim() != 4 {
        return Err(Error::domain(format!("quaternion frame needs a point of Q^4, got Q^{}", p.dim())));
    }
    if p.is_zero() {
        return Err(Error::domain("quaternion frame of the zero vector"));
    }
    let h = Quaternion::from_block(p, 0);
    Ok([
        (&h * &Quaternion::i()).to_qvec(),
        (&h * &Quaternion::j()).to_qvec(),
        (&h * &Quaternion::k()).to_qvec(),
    ])
}
