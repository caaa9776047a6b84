use serde::Serialize;

use super::{finish, normalize};
use crate::arith::{decompose_three_squares, isqrt, is_sum_three_squares, QVec, Rational};
use crate::diophantine::{ChordPoints, Conic2};
use crate::distance_graph::{Embedding, Graph};
use crate::error::{Error, Result};
use crate::geometry::{equidistant_affine, quaternion_orthobasis, rational_point_on_sphere};

/// Parameters of the `K_{1,3,3}` construction for squared distance `r`.
///
/// With `r = s f^2`, `s` square-free, the construction runs at `s` with
/// integers `a < b` such that `s(4a - b)/a` is a rational square and
/// `ab - a^2` is a sum of three squares.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct K133Plan {
    pub r: Rational,
    pub s: u64,
    pub f: Rational,
    pub a: u64,
    pub b: u64,
    /// `a = s d^2` when `s` is odd.
    pub d: Option<u64>,
    /// `b = 4a - e^2` when `s` is odd.
    pub e: Option<u64>,
    /// `r1 = a s / b`, the squared norm of `P1`.
    pub r1: Rational,
    /// `q = b / 2a`; `q P1` lies on the line equidistant from the centre and
    /// the `a` vertices.
    pub q: Rational,
    pub k0_sq: Rational,
    pub k0: Rational,
}

impl K133Plan {
    pub fn new(r: &Rational) -> Result<Self> {
        let (s, f) = normalize(r)?;
        let (a, b, d, e) = choose_ab(s)?;
        let sr = Rational::from(s);
        let (ar, br) = (Rational::from(a), Rational::from(b));
        let k0_sq = &sr * (Rational::from(4 * a) - &br) / Rational::from(4 * a);
        let k0 = k0_sq
            .sqrt()
            .ok_or_else(|| Error::internal(format!("k0^2 = {k0_sq} is not a rational square")))?;
        let plan = K133Plan {
            r: r.clone(),
            s,
            f,
            a,
            b,
            d,
            e,
            r1: &ar * &sr / &br,
            q: &br / (Rational::from(2i64) * &ar),
            k0_sq,
            k0,
        };
        if !plan.invariants_hold() {
            return Err(Error::internal(format!("plan for r = {r} breaks its invariants")));
        }
        Ok(plan)
    }

    /// `a < b`, `3a > s`, `s(4a - b)/a` a rational square and `ab - a^2` a
    /// sum of three integer squares.
    pub fn invariants_hold(&self) -> bool {
        let (a, b, s) = (self.a, self.b, self.s);
        a < b
            && 3 * a > s
            && 4 * a > b
            && (Rational::from(s) * Rational::from(4 * a - b) / Rational::from(a)).sqrt().is_some()
            && is_sum_three_squares(a * b - a * a)
    }
}

fn choose_ab(s: u64) -> Result<(u64, u64, Option<u64>, Option<u64>)> {
    const MAX_STEPS: u64 = 10_000;
    let ok = |a: u64, b: u64| {
        a < b
            && 4 * a > b
            && (Rational::from(s) * Rational::from(4 * a - b) / Rational::from(a)).sqrt().is_some()
            && is_sum_three_squares(a * b - a * a)
    };
    if s.is_multiple_of(2) {
        // a an odd square, 4a - b = s.
        for root in (1..MAX_STEPS).step_by(2) {
            let a = root * root;
            if 3 * a > s && ok(a, 4 * a - s) {
                return Ok((a, 4 * a - s, None, None));
            }
        }
    } else {
        // a = s d^2 with d odd (s = 1 mod 4) or even (s = 3 mod 4); b = 4a - e^2
        // with e the largest odd number below sqrt(3a).
        let first = if s % 4 == 1 { 1 } else { 2 };
        for d in (first..MAX_STEPS).step_by(2) {
            let a = s * d * d;
            let mut e = isqrt(3 * a);
            if e * e == 3 * a {
                e -= 1;
            }
            if e.is_multiple_of(2) {
                e -= 1;
            }
            if e >= 3 && ok(a, 4 * a - e * e) {
                return Ok((a, 4 * a - e * e, Some(d), Some(e)));
            }
        }
    }
    Err(Error::internal(format!("no K_{{1,3,3}} parameters found for s = {s}")))
}

/// `K_{1,3,3}` in `Q^5` with edges of squared length `r`.
///
/// The centre `c` is the origin. `P1` has squared norm `r1` and `P2 = P1 + U`
/// with `U` orthogonal to `P1`, so `|P2|^2 = s`. The `a` vertices lie on the
/// circle `{P1 + xU + yV}` of squared norm `s` (a conic in `x, y`), where `V`
/// is orthogonal to both. Every point of the line `S` equidistant from `c`
/// and the `a`s is at squared distance `|β + tα|^2` from them, so lifting by
/// a fifth coordinate `k` with `|β + tα|^2 + k^2 = s` gives the `b` vertices.
pub fn embed_k133_q5(r: &Rational) -> Result<Embedding> {
    let plan = K133Plan::new(r)?;
    let s = Rational::from(plan.s);

    let p1 = rational_point_on_sphere(4, &plan.r1)?;
    let frame = quaternion_orthobasis(&p1)?;
    let [u, v, w] = decompose_three_squares(plan.a * plan.b - plan.a * plan.a)
        .ok_or_else(|| Error::internal("ab - a^2 is not a sum of three squares"))?;
    let [u, v, w] = [u, v, w].map(Rational::from);
    let ar = Rational::from(plan.a);
    let big_u = QVec::zeros(4)
        .add_scaled(&(&u / &ar), &frame[0])
        .add_scaled(&(&v / &ar), &frame[1])
        .add_scaled(&(&w / &ar), &frame[2]);
    let big_v = if u.is_zero() && v.is_zero() {
        frame[0].scale(&w)
    } else {
        frame[0].scale(&v).add_scaled(&-u, &frame[1])
    };

    // |P1 + xU + yV|^2 = s  <=>  |U|^2 x^2 + |V|^2 y^2 + r1 - s = 0
    let a_conic = Conic2::new(
        big_u.squared_norm(),
        Rational::zero(),
        big_v.squared_norm(),
        Rational::zero(),
        Rational::zero(),
        &plan.r1 - &s,
    )?;
    let a_points: Vec<QVec> = ChordPoints::new(&a_conic, (Rational::one(), Rational::zero()))?
        .take(6)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .map(|(x, y)| p1.add_scaled(&x, &big_u).add_scaled(&y, &big_v))
        .collect();

    let beta = p1.scale(&plan.q);
    let mut last_err = None;
    for i in 0..a_points.len() {
        for j in i + 1..a_points.len() {
            for k in j + 1..a_points.len() {
                let a_s = [&a_points[i], &a_points[j], &a_points[k]];
                match lift_bs(&s, &beta, a_s, &plan.k0) {
                    Ok(bs) => {
                        let mut coords = vec![QVec::zeros(5)];
                        coords.extend(a_s.iter().map(|p| p.padded(5)));
                        coords.extend(bs);
                        let graph = Graph::complete_multipartite(&[
                            vec!["c"],
                            vec!["a1", "a2", "a3"],
                            vec!["b1", "b2", "b3"],
                        ])?;
                        return finish(Embedding::new(graph, 5, s, coords)?, &plan.f);
                    }
                    Err(e) => last_err = Some(e),
                }
            }
        }
    }
    Err(last_err.unwrap_or_else(|| Error::internal("no usable triple of a vertices")))
}

/// The three `b` vertices over the line equidistant from the origin and
/// `a_s`, each at squared distance `s` from all four.
fn lift_bs(s: &Rational, beta: &QVec, a_s: [&QVec; 3], k0: &Rational) -> Result<Vec<QVec>> {
    let pts = [QVec::zeros(4), a_s[0].clone(), a_s[1].clone(), a_s[2].clone()];
    let line = equidistant_affine(&pts, 4)?
        .filter(|l| l.dim() == 1)
        .ok_or_else(|| Error::degenerate("a vertices do not leave a line of equidistant points"))?;
    if !line.contains(beta) {
        return Err(Error::internal("q P1 is not on the equidistant line"));
    }
    let alpha = &line.directions[0];
    // |β + tα|^2 + k^2 = s
    let b_conic = Conic2::new(
        alpha.squared_norm(),
        Rational::zero(),
        Rational::one(),
        Rational::from(2i64) * beta.dot(alpha),
        Rational::zero(),
        beta.squared_norm() - s,
    )?;
    let mut out = Vec::with_capacity(3);
    for sol in ChordPoints::new(&b_conic, (Rational::zero(), k0.clone()))? {
        let (t, k) = sol?;
        if k.is_zero() {
            continue;
        }
        let mut coords = beta.add_scaled(&t, alpha).into_coords();
        coords.push(k);
        out.push(QVec::new(coords));
        if out.len() == 3 {
            return Ok(out);
        }
    }
    unreachable!("chord iterator ends only with an error")
}
