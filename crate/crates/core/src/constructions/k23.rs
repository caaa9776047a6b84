use super::{finish, normalize};
use crate::arith::{QVec, Rational};
use crate::distance_graph::{Embedding, Graph};
use crate::error::{Error, Result};
use crate::geometry::{circumcenter, rational_point_on_sphere, sphere_points, SpherePointQuery};

/// `K_{2,3}` in `Q^3` with edges of squared length `r`.
///
/// `a1` sits at the origin and `b1, b2, b3` on the sphere of squared radius
/// `r`; `a2` is the reflection of the origin in the plane of the `b`s, i.e.
/// twice their circumcenter.
pub fn embed_k23_q3(r: &Rational) -> Result<Embedding> {
    SpherePointQuery::new(3, r.clone())?.feasibility().map_err(Error::Infeasible)?;
    let (s, f) = normalize(r)?;
    let s = Rational::from(s);

    let (bs, center) = choose_bs(&s)?;
    let two = Rational::from(2i64);
    let mut coords = vec![QVec::zeros(3), center.scale(&two)];
    coords.extend(bs);

    let graph = Graph::complete_multipartite(&[vec!["a1", "a2"], vec!["b1", "b2", "b3"]])?;
    finish(Embedding::new(graph, 3, s, coords)?, &f)
}

/// Three sphere points with a usable circumcenter. The cyclic shifts of the
/// base point come first; otherwise triples of chord-method points are
/// scanned in order.
fn choose_bs(s: &Rational) -> Result<(Vec<QVec>, QVec)> {
    let base = rational_point_on_sphere(3, s)?;
    let shift = |k: usize| QVec::new((0..3).map(|i| base[(i + 3 - k) % 3].clone()).collect());
    let shifts = [base.clone(), shift(1), shift(2)];
    if let Ok(c) = circumcenter(&shifts[0], &shifts[1], &shifts[2]) {
        if shifts[0] != shifts[1] && shifts[1] != shifts[2] && shifts[0] != shifts[2] {
            return Ok((shifts.to_vec(), c));
        }
    }
    let pts = sphere_points(3, s, 6)?;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                if let Ok(c) = circumcenter(&pts[i], &pts[j], &pts[k]) {
                    return Ok((vec![pts[i].clone(), pts[j].clone(), pts[k].clone()], c));
                }
            }
        }
    }
    Err(Error::degenerate(format!("no three sphere points of squared norm {s} span a plane off the origin")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Witness;

    #[test]
    fn unit_distance_uses_axes() {
        let e = embed_k23_q3(&Rational::one()).unwrap();
        let t = Rational::frac(2, 3);
        assert_eq!(e.coord("a2").unwrap(), &QVec::new(vec![t.clone(), t.clone(), t]));
        assert_eq!(e.coord("b1").unwrap(), &QVec::unit(3, 0));
        assert_eq!(e.coord("b2").unwrap(), &QVec::unit(3, 1));
        assert_eq!(e.coord("b3").unwrap(), &QVec::unit(3, 2));
    }

    #[test]
    fn symmetric_base_point_falls_back() {
        let e = embed_k23_q3(&Rational::from(3i64)).unwrap();
        assert_eq!(e.graph.edge_count(), 6);
    }

    #[test]
    fn seven_is_obstructed() {
        match embed_k23_q3(&Rational::from(7i64)) {
            Err(Error::Infeasible(w @ Witness::ThreeSquareObstruction { .. })) => {
                assert!(w.to_string().contains("7 ≡ 7 (mod 8)"))
            }
            other => panic!("expected obstruction, got {other:?}"),
        }
    }

    #[test]
    fn scaled_distance_is_scaled_embedding() {
        let base = embed_k23_q3(&Rational::from(2i64)).unwrap();
        let big = embed_k23_q3(&Rational::from(8i64)).unwrap();
        assert_eq!(big, base.scaled(&Rational::from(2i64)));
    }
}
