//! Circumcenters and loci of points equidistant from a finite set.

use super::linalg::{self, SolutionSpace};
use crate::arith::{QVec, Rational};
use crate::error::{Error, Result};

/// `origin + span(directions)` inside `Q^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSubspace {
    pub origin: QVec,
    pub directions: Vec<QVec>,
}

impl AffineSubspace {
    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn ambient(&self) -> usize {
        self.origin.dim()
    }

    /// `origin + sum params[i] * directions[i]`.
    pub fn point_at(&self, params: &[Rational]) -> QVec {
        assert_eq!(params.len(), self.directions.len());
        params
            .iter()
            .zip(&self.directions)
            .fold(self.origin.clone(), |acc, (t, d)| acc.add_scaled(t, d))
    }

    pub fn contains(&self, p: &QVec) -> bool {
        if p.dim() != self.ambient() {
            return false;
        }
        let offset = p - &self.origin;
        let n = self.ambient();
        // Solve sum t_i d_i = offset, one equation per coordinate.
        let rows: Vec<Vec<Rational>> =
            (0..n).map(|c| self.directions.iter().map(|d| d[c].clone()).collect()).collect();
        linalg::solve(&rows, offset.coords(), self.dim()).is_some()
    }
}

/// Circumcenter of a triangle in any `Q^n`: the point of the triangle's
/// plane equidistant from its three vertices.
pub fn triangle_circumcenter(p1: &QVec, p2: &QVec, p3: &QVec) -> Result<QVec> {
    let n = p1.dim();
    if p2.dim() != n || p3.dim() != n {
        return Err(Error::domain("triangle vertices have different dimensions"));
    }
    let d1 = p2 - p1;
    let d2 = p3 - p1;
    let (g11, g12, g22) = (d1.dot(&d1), d1.dot(&d2), d2.dot(&d2));
    let det = &g11 * &g22 - g12.square();
    if det.is_zero() {
        return Err(Error::degenerate("triangle vertices are collinear"));
    }
    // C = p1 + s d1 + t d2 with (C - p1).d_i = |d_i|^2 / 2.
    let half = Rational::frac(1, 2);
    let (b1, b2) = (&half * &g11, &half * &g22);
    let s = (&b1 * &g22 - &b2 * &g12) / &det;
    let t = (&g11 * &b2 - &g12 * &b1) / &det;
    Ok(p1.add_scaled(&s, &d1).add_scaled(&t, &d2))
}

/// Circumcenter of three points on a common sphere about the origin, whose
/// plane misses the origin. The result is the foot of the perpendicular
/// from the origin to that plane, so `2C` is the mirror image of the
/// origin and is equidistant from the three points.
pub fn circumcenter(b1: &QVec, b2: &QVec, b3: &QVec) -> Result<QVec> {
    let r = b1.squared_norm();
    if b2.dim() != b1.dim() || b3.dim() != b1.dim() {
        return Err(Error::domain("points have different dimensions"));
    }
    if b2.squared_norm() != r || b3.squared_norm() != r {
        return Err(Error::domain("points do not have equal squared norms"));
    }
    let c = triangle_circumcenter(b1, b2, b3)?;
    if c.is_zero() {
        return Err(Error::domain("the plane of the three points passes through the origin"));
    }
    Ok(c)
}

/// All points of `Q^ambient` equidistant from every input point (inputs
/// are zero-padded to `ambient` coordinates). `None` when no such point
/// exists.
pub fn equidistant_affine(points: &[QVec], ambient: usize) -> Result<Option<AffineSubspace>> {
    if points.is_empty() {
        return Err(Error::domain("no points given"));
    }
    if let Some(p) = points.iter().find(|p| p.dim() > ambient) {
        return Err(Error::domain(format!("point of Q^{} does not fit in Q^{ambient}", p.dim())));
    }
    let pts: Vec<QVec> = points.iter().map(|p| p.padded(ambient)).collect();
    for (i, p) in pts.iter().enumerate() {
        if pts[..i].contains(p) {
            return Err(Error::domain(format!("repeated point {p}")));
        }
    }

    // |X - p_i|^2 = |X - p_0|^2  <=>  2 (p_i - p_0) . X = |p_i|^2 - |p_0|^2
    let two = Rational::from(2i64);
    let base_norm = pts[0].squared_norm();
    let rows: Vec<Vec<Rational>> = pts[1..]
        .iter()
        .map(|p| (p - &pts[0]).scale(&two).into_coords())
        .collect();
    let rhs: Vec<Rational> = pts[1..].iter().map(|p| p.squared_norm() - &base_norm).collect();
    Ok(linalg::solve(&rows, &rhs, ambient)
        .map(|SolutionSpace { particular, basis }| AffineSubspace { origin: particular, directions: basis }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn axes_circumcenter() {
        let c = circumcenter(&QVec::unit(3, 0), &QVec::unit(3, 1), &QVec::unit(3, 2)).unwrap();
        assert_eq!(c, QVec::new(vec![q(1, 3), q(1, 3), q(1, 3)]));
    }

    #[test]
    fn right_triangle_midpoint_of_hypotenuse() {
        let c = triangle_circumcenter(
            &QVec::from_ints(&[2, 0]),
            &QVec::from_ints(&[0, 2]),
            &QVec::from_ints(&[2, 2]),
        )
        .unwrap();
        assert_eq!(c, QVec::from_ints(&[1, 1]));
    }

    #[test]
    fn collinear_rejected() {
        let err = triangle_circumcenter(
            &QVec::from_ints(&[0, 0, 0]),
            &QVec::from_ints(&[1, 1, 1]),
            &QVec::from_ints(&[2, 2, 2]),
        );
        assert!(matches!(err, Err(Error::Degenerate(_))));
    }

    #[test]
    fn plane_through_origin_rejected() {
        let err = circumcenter(&QVec::from_ints(&[1, 0, 0]), &QVec::from_ints(&[-1, 0, 0]), &QVec::from_ints(&[0, 1, 0]));
        assert!(matches!(err, Err(Error::Domain(_))));
        let err = circumcenter(&QVec::from_ints(&[1, 0, 0]), &QVec::from_ints(&[0, 2, 0]), &QVec::from_ints(&[0, 0, 1]));
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn equidistant_from_axes_is_diagonal() {
        let s = equidistant_affine(&[QVec::unit(3, 0), QVec::unit(3, 1), QVec::unit(3, 2)], 3)
            .unwrap()
            .unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.origin, QVec::zeros(3));
        assert_eq!(s.directions[0], QVec::from_ints(&[1, 1, 1]));
    }

    #[test]
    fn perpendicular_bisector() {
        let s = equidistant_affine(&[QVec::from_ints(&[0, 0]), QVec::from_ints(&[2, 0])], 2)
            .unwrap()
            .unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&QVec::from_ints(&[1, 7])));
        assert!(!s.contains(&QVec::from_ints(&[0, 1])));
    }

    #[test]
    fn collinear_points_have_no_center() {
        let pts = [QVec::from_ints(&[0, 0]), QVec::from_ints(&[1, 0]), QVec::from_ints(&[2, 0])];
        assert_eq!(equidistant_affine(&pts, 2).unwrap(), None);
    }

    #[test]
    fn padding_to_larger_ambient() {
        let s = equidistant_affine(&[QVec::unit(2, 0), QVec::unit(2, 1)], 4).unwrap().unwrap();
        assert_eq!(s.dim(), 3);
        assert!(s.contains(&QVec::from_ints(&[5, 5, -1, 3])));
    }

    #[test]
    fn rejects_repeats_and_oversized_points() {
        assert!(equidistant_affine(&[QVec::unit(2, 0), QVec::unit(2, 0)], 2).is_err());
        assert!(equidistant_affine(&[QVec::zeros(3)], 2).is_err());
        assert!(equidistant_affine(&[], 2).is_err());
    }
}
