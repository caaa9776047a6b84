use super::{finish, names, normalize};
use crate::arith::{QVec, Rational};
use crate::diophantine::solve_eq41;
use crate::distance_graph::{Embedding, Graph};
use crate::error::{Error, Result};
use crate::geometry::{equidistant_affine, right_multiply_blocks, scale_sqrt_q, Quaternion};

/// `K_{4m+1}` in `Q^{4m+3}` with edges of squared length `r`.
///
/// The first `4m` vertices are `φ(e_1), ..., φ(e_{4m})` where `φ` scales
/// `Q^{4m}` by `sqrt(s/2)`, so they form a regular simplex of squared edge
/// `s`. The equidistant locus of the simplex in `Q^{4m+3}` is
/// `{φ(c·1) + (0, y, z, w)}`; writing `c = 1/(4m) + x`, the distance
/// condition is exactly `s(4m-1)/(8m) + 2sm x^2 + y^2 + z^2 + w^2 = s`.
pub fn clique_extension(m: u64, r: &Rational) -> Result<Embedding> {
    if m == 0 {
        return Err(Error::domain("m must be positive"));
    }
    let (s, f) = normalize(r)?;
    let dim = usize::try_from(4 * m).map_err(|_| Error::domain("m too large"))?;
    let n = dim + 3;
    let q = Rational::frac(s as i64, 2);

    let simplex: Vec<QVec> = (0..dim).map(|i| QVec::unit(dim, i)).collect();
    let simplex = scale_sqrt_q(&simplex, &q)?;

    let sol = solve_eq41(m, s)?;
    let c = Rational::frac(1, 4 * m as i64) + &sol.x;
    let h = Quaternion::with_norm(&q)?;
    let centre = right_multiply_blocks(&QVec::new(vec![c; dim]), &h);
    let mut apex = centre.into_coords();
    apex.extend([sol.y.clone(), sol.z.clone(), sol.w.clone()]);
    let apex = QVec::new(apex);

    let mut coords: Vec<QVec> = simplex.iter().map(|p| p.padded(n)).collect();
    let locus = equidistant_affine(&coords, n)?
        .ok_or_else(|| Error::internal("simplex has no equidistant locus"))?;
    if !locus.contains(&apex) {
        return Err(Error::internal("extension point is off the equidistant locus"));
    }
    coords.push(apex);

    let vertex_names = names("p", dim + 1);
    let refs: Vec<&str> = vertex_names.iter().map(String::as_str).collect();
    let graph = Graph::complete(&refs)?;
    finish(Embedding::new(graph, n, Rational::from(s), coords)?, &f)
}
