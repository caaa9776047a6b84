//! Rational points on spheres `|x|^2 = r` in `Q^n`.

use num_bigint::BigUint;

use crate::arith::{prime_factors, rational_sum_of_squares, square_free_part, QVec, Rational};
use crate::diophantine::{ChordPoints, Conic2};
use crate::error::{Error, Result, Witness};

/// The sphere of squared radius `r` about the origin of `Q^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpherePointQuery {
    pub n: usize,
    pub r: Rational,
}

impl SpherePointQuery {
    pub fn new(n: usize, r: Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("dimension must be positive"));
        }
        if !r.is_positive() {
            return Err(Error::domain(format!("squared radius must be positive, got {r}")));
        }
        Ok(SpherePointQuery { n, r })
    }

    /// `Ok(())` when `sqrt(r)` is a distance between points of `Q^n`,
    /// otherwise the arithmetic obstruction.
    pub fn feasibility(&self) -> Result<(), Witness> {
        if self.n >= 4 {
            return Ok(());
        }
        let (s, _) = square_free_part(&self.r).expect("r > 0 checked on construction");
        let value = self.r.clone();
        match self.n {
            3 if &s % 8u32 == BigUint::from(7u32) => {
                Err(Witness::ThreeSquareObstruction { value, square_free: s })
            }
            3 => Ok(()),
            2 => match prime_factors(&s).into_iter().find(|p| p % 4u32 == BigUint::from(3u32)) {
                Some(prime) => Err(Witness::TwoSquareObstruction { value, square_free: s, prime }),
                None => Ok(()),
            },
            _ if s == BigUint::from(1u32) => Ok(()),
            _ => Err(Witness::NotASquare { value, square_free: s }),
        }
    }
}

/// Whether `sqrt(r)` is realized as a distance between points of `Q^n`.
pub fn is_distance_realized(n: usize, r: &Rational) -> Result<bool> {
    Ok(SpherePointQuery::new(n, r.clone())?.feasibility().is_ok())
}

/// One rational point of squared norm `r` in `Q^n`, found by splitting
/// `r` into (at most four) rational squares.
pub fn rational_point_on_sphere(n: usize, r: &Rational) -> Result<QVec> {
    let query = SpherePointQuery::new(n, r.clone())?;
    query.feasibility().map_err(Error::Infeasible)?;
    let parts = rational_sum_of_squares(r, n.min(4))?
        .ok_or_else(|| Error::internal(format!("{r} passed the criterion but has no decomposition")))?;
    Ok(QVec::new(parts).padded(n))
}

/// `count` distinct rational points of squared norm `r` in `Q^n`.
///
/// Starts from [`rational_point_on_sphere`] and walks the circle cut out by
/// the coordinate plane through that point spanned by axes `(i, j)`, trying
/// axis pairs in lexicographic order until one gives a genuine circle.
pub fn sphere_points(n: usize, r: &Rational, count: usize) -> Result<Vec<QVec>> {
    let base = rational_point_on_sphere(n, r)?;
    if count <= 1 {
        return Ok(vec![base].into_iter().take(count).collect());
    }
    if n == 1 {
        if count > 2 {
            return Err(Error::domain("a 0-sphere has only two points"));
        }
        return Ok(vec![base.clone(), base.scale(&-Rational::one())]);
    }

    let two = Rational::from(2i64);
    for i in 0..n {
        for j in i + 1..n {
            if base[i].is_zero() && base[j].is_zero() {
                // Tangent slice: the only point is `base` itself.
                continue;
            }
            // |base + x e_i + y e_j|^2 = r  <=>  x^2 + y^2 + 2 b_i x + 2 b_j y = 0
            let conic = Conic2::new(
                Rational::one(),
                Rational::zero(),
                Rational::one(),
                &two * &base[i],
                &two * &base[j],
                Rational::zero(),
            )?;
            let pts: Result<Vec<_>> =
                ChordPoints::new(&conic, (Rational::zero(), Rational::zero()))?.take(count).collect();
            match pts {
                Ok(pts) => {
                    return Ok(pts
                        .into_iter()
                        .map(|(x, y)| {
                            let mut p = base.clone();
                            p[i] += &x;
                            p[j] += &y;
                            p
                        })
                        .collect())
                }
                Err(Error::ChordExhausted { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    Err(Error::degenerate(format!("no usable slice of the sphere |x|^2 = {r} in Q^{n}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn realizability_examples() {
        assert!(is_distance_realized(4, &q(7, 1)).unwrap());
        assert!(is_distance_realized(4, &q(1, 3)).unwrap());
        assert!(!is_distance_realized(3, &q(7, 1)).unwrap());
        assert!(!is_distance_realized(3, &q(28, 1)).unwrap());
        assert!(!is_distance_realized(3, &q(7, 4)).unwrap());
        assert!(is_distance_realized(3, &q(7, 2)).unwrap());
        assert!(is_distance_realized(1, &q(4, 1)).unwrap());
        assert!(is_distance_realized(1, &q(9, 4)).unwrap());
        assert!(!is_distance_realized(1, &q(2, 1)).unwrap());
        assert!(!is_distance_realized(2, &q(3, 1)).unwrap());
        assert!(is_distance_realized(2, &q(5, 1)).unwrap());
        assert!(!is_distance_realized(2, &q(21, 5)).unwrap());
    }

    #[test]
    fn realizability_rejects_bad_input() {
        assert!(is_distance_realized(0, &q(1, 1)).is_err());
        assert!(is_distance_realized(3, &q(0, 1)).is_err());
        assert!(is_distance_realized(3, &q(-1, 1)).is_err());
    }

    #[test]
    fn witness_names_the_congruence() {
        let err = rational_point_on_sphere(3, &q(7, 1)).unwrap_err();
        assert!(err.to_string().contains("7 ≡ 7 (mod 8)"), "{err}");
        let err = rational_point_on_sphere(2, &q(3, 1)).unwrap_err();
        assert!(err.to_string().contains("prime 3"), "{err}");
    }

    #[test]
    fn point_examples() {
        assert_eq!(rational_point_on_sphere(3, &q(3, 1)).unwrap(), QVec::from_ints(&[1, 1, 1]));
        assert_eq!(
            rational_point_on_sphere(4, &q(7, 9)).unwrap(),
            QVec::new(vec![q(7, 9), q(3, 9), q(2, 9), q(1, 9)])
        );
        assert_eq!(rational_point_on_sphere(6, &q(2, 1)).unwrap(), QVec::from_ints(&[1, 1, 0, 0, 0, 0]));
    }

    #[test]
    fn unit_sphere_points() {
        let pts = sphere_points(3, &q(1, 1), 3).unwrap();
        assert_eq!(pts.len(), 3);
        assert!(pts.contains(&QVec::from_ints(&[1, 0, 0])));
        for p in &pts {
            assert_eq!(p.squared_norm(), q(1, 1));
        }
    }

    #[test]
    fn many_points_in_q4() {
        let pts = sphere_points(4, &q(2, 1), 5).unwrap();
        assert_eq!(pts.len(), 5);
        for (i, p) in pts.iter().enumerate() {
            assert_eq!(p.squared_norm(), q(2, 1));
            for other in &pts[..i] {
                assert_ne!(p, other);
            }
        }
    }

    #[test]
    fn infeasible_circle() {
        assert!(matches!(sphere_points(2, &q(3, 1), 1), Err(Error::Infeasible(_))));
    }

    #[test]
    fn line_has_two_points() {
        let pts = sphere_points(1, &q(9, 4), 2).unwrap();
        assert_eq!(pts, vec![QVec::new(vec![q(3, 2)]), QVec::new(vec![q(-3, 2)])]);
        assert!(sphere_points(1, &q(9, 4), 3).is_err());
    }
}
