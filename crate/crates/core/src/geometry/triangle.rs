//! Triangles with rational squared sides placed in `Q^4`.
//!
//! A triangle with squared sides `a, b, c` fits in `Q^4` exactly when the
//! square-free part of `16·Area^2 = 2(ab + ac + bc) - a^2 - b^2 - c^2` is a
//! sum of three squares (equivalently, its tangents are rational multiples
//! of `sqrt(k)` with `k` a sum of three squares). The embedding below makes
//! that constructive through the quaternion frame of the first leg.

use num_bigint::BigUint;
use serde::Serialize;

use super::quaternion::quaternion_orthobasis;
use super::sphere::rational_point_on_sphere;
use crate::arith::{rational_sum_of_squares, square_free_part, QVec, Rational};
use crate::error::{Error, Result, Witness};

/// Squared side lengths: `|O P1|^2 = a`, `|P1 P2|^2 = b`, `|O P2|^2 = c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleSq {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl TriangleSq {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if !(a.is_positive() && b.is_positive() && c.is_positive()) {
            return Err(Error::domain("squared side lengths must be positive"));
        }
        Ok(TriangleSq { a, b, c })
    }

    /// `16·Area^2`.
    pub fn sixteen_area_sq(&self) -> Rational {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        Rational::from(2i64) * (a * b + a * c + b * c) - a.square() - b.square() - c.square()
    }

    fn check_proper(&self) -> Result<Rational> {
        let d = self.sixteen_area_sq();
        if d.is_positive() {
            Ok(d)
        } else {
            Err(Error::degenerate(format!(
                "sides sqrt({}), sqrt({}), sqrt({}) do not span a proper triangle (16·Area² = {d})",
                self.a, self.b, self.c
            )))
        }
    }

    /// `Ok(())` when the triangle has a copy in `Q^4`, otherwise the
    /// three-square obstruction on `16·Area^2`.
    pub fn criterion(&self) -> Result<Result<(), Witness>> {
        let d = self.check_proper()?;
        let (s, _) = square_free_part(&d)?;
        if &s % 8u32 == BigUint::from(7u32) {
            Ok(Err(Witness::ThreeSquareObstruction { value: d, square_free: s }))
        } else {
            Ok(Ok(()))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleEmbedding {
    pub o: QVec,
    pub p1: QVec,
    pub p2: QVec,
}

/// Places the triangle with `O` at the origin of `Q^4`.
///
/// `P2 = λ P1 + u·P1 i + v·P1 j + w·P1 k` where `λ = (c + a - b) / 2a` fixes
/// the projection onto `O P1` and `u^2 + v^2 + w^2 = (c - λ^2 a) / a` fixes
/// the rest of `|O P2|^2`.
pub fn embed_triangle_q4(t: &TriangleSq) -> Result<TriangleEmbedding> {
    if let Err(w) = t.criterion()? {
        return Err(Error::Infeasible(w));
    }
    let p1 = rational_point_on_sphere(4, &t.a)?;
    let frame = quaternion_orthobasis(&p1)?;
    let lambda = (&t.c + &t.a - &t.b) / (Rational::from(2i64) * &t.a);
    let mu = (&t.c - lambda.square() * &t.a) / &t.a;
    let uvw = rational_sum_of_squares(&mu, 3)?.ok_or_else(|| {
        Error::internal(format!("criterion passed but {mu} is not a sum of three rational squares"))
    })?;
    let p2 = frame
        .iter()
        .zip(&uvw)
        .fold(p1.scale(&lambda), |acc, (b, coeff)| acc.add_scaled(coeff, b));

    let o = QVec::zeros(4);
    if o.squared_dist(&p1) != t.a || p1.squared_dist(&p2) != t.b || o.squared_dist(&p2) != t.c {
        return Err(Error::internal("triangle embedding failed its own side check"));
    }
    Ok(TriangleEmbedding { o, p1, p2 })
}
