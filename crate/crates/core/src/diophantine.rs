//! Rational solutions of the quadratic equations behind the constructions.
//!
//! [`chord_solutions`] turns one rational point of a conic into as many as
//! requested by intersecting the conic with rational lines through it.
//! [`solve_eq41`] runs the homogenize / rescale / three-square chain that
//! settles the clique-extension equation
//! `r(4m-1)/(8m) + 2rm x^2 + y^2 + z^2 + w^2 = r`.

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::arith::{decompose_three_squares, square_free_part, to_desk_scale, Rational};
use crate::error::{Error, Result};

/// `a x^2 + b xy + c y^2 + d x + e y + f = 0` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conic2 {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub f: Rational,
}

impl Conic2 {
    pub fn new(
        a: Rational,
        b: Rational,
        c: Rational,
        d: Rational,
        e: Rational,
        f: Rational,
    ) -> Result<Self> {
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(Error::domain("conic has no quadratic part"));
        }
        Ok(Conic2 { a, b, c, d, e, f })
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        &self.a * x.square()
            + &self.b * x * y
            + &self.c * y.square()
            + &self.d * x
            + &self.e * y
            + &self.f
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        self.evaluate(x, y).is_zero()
    }

    /// Second intersection of the line `y - y0 = m (x - x0)` with the conic,
    /// where `(x0, y0)` is on the conic. `None` for tangents and for lines
    /// meeting the conic only once (or lying inside it).
    fn second_point(&self, seed: &(Rational, Rational), slope: &Rational) -> Option<(Rational, Rational)> {
        let (x0, y0) = seed;
        // Direction (1, m); substituting x0 + t, y0 + m t leaves A t^2 + B t.
        let quad = &self.a + &self.b * slope + &self.c * slope.square();
        if quad.is_zero() {
            return None;
        }
        let two = Rational::from(2i64);
        let lin = &two * &self.a * x0
            + &self.b * (y0 + slope * x0)
            + &two * &self.c * y0 * slope
            + &self.d
            + &self.e * slope;
        if lin.is_zero() {
            return None;
        }
        let t = -(lin / quad);
        Some((x0 + &t, y0 + slope * &t))
    }
}

/// Consecutive slopes that may fail before the conic is declared to have
/// only finitely many rational points reachable from the seed.
pub const MAX_FAILED_SLOPES: usize = 32;

/// Slopes `0, 1, -1, 2, -2, ...`.
fn slope_sequence() -> impl Iterator<Item = BigInt> {
    (0i64..).flat_map(|k| {
        if k == 0 {
            vec![BigInt::from(0)]
        } else {
            vec![BigInt::from(k), BigInt::from(-k)]
        }
    })
}

/// Lazily enumerates rational points of a conic: the seed first, then one
/// point per usable slope in the fixed order `0, 1, -1, 2, -2, ...`.
pub struct ChordPoints<'a> {
    conic: &'a Conic2,
    seed: (Rational, Rational),
    slopes: Box<dyn Iterator<Item = BigInt>>,
    emitted: Vec<(Rational, Rational)>,
    seed_done: bool,
    failed: Vec<BigInt>,
}

impl<'a> ChordPoints<'a> {
    pub fn new(conic: &'a Conic2, seed: (Rational, Rational)) -> Result<Self> {
        if !conic.contains(&seed.0, &seed.1) {
            return Err(Error::domain(format!(
                "seed ({}, {}) does not lie on the conic",
                seed.0, seed.1
            )));
        }
        Ok(ChordPoints {
            conic,
            seed,
            slopes: Box::new(slope_sequence()),
            emitted: Vec::new(),
            seed_done: false,
            failed: Vec::new(),
        })
    }
}

impl Iterator for ChordPoints<'_> {
    type Item = Result<(Rational, Rational)>;

    fn next(&mut self) -> Option<Self::Item> {
        if !self.seed_done {
            self.seed_done = true;
            self.emitted.push(self.seed.clone());
            return Some(Ok(self.seed.clone()));
        }
        loop {
            if self.failed.len() >= MAX_FAILED_SLOPES {
                return Some(Err(Error::ChordExhausted { tried: self.failed.clone() }));
            }
            let m = self.slopes.next().expect("slope sequence is infinite");
            match self.conic.second_point(&self.seed, &Rational::from(m.clone())) {
                Some(p) if !self.emitted.contains(&p) => {
                    debug_assert!(self.conic.contains(&p.0, &p.1));
                    self.emitted.push(p.clone());
                    return Some(Ok(p));
                }
                _ => self.failed.push(m),
            }
        }
    }
}

/// Returns `count` pairwise distinct rational points of `conic`, starting
/// with `seed`.
pub fn chord_solutions(
    conic: &Conic2,
    seed: (Rational, Rational),
    count: usize,
) -> Result<Vec<(Rational, Rational)>> {
    if count == 0 {
        return Err(Error::domain("count must be at least 1"));
    }
    ChordPoints::new(conic, seed)?.take(count).collect()
}

/// A solution of `r(4m-1)/(8m) + 2rm x^2 + y^2 + z^2 + w^2 = r` together with
/// every intermediate quantity of the derivation, so it can be audited.
#[derive(Clone, Debug, Serialize)]
pub struct Eq41Solution {
    pub m: u64,
    pub r: u64,
    /// Square-free part of `2rm`.
    pub s: u64,
    /// `2rm = s * alpha^2`.
    pub alpha: Rational,
    pub t1: u64,
    pub x1: u64,
    /// `gamma = s((4m+1) t1^2 - x1^2)`.
    pub gamma: u64,
    /// `gamma = Y^2 + Z^2 + W^2`.
    pub gamma_squares: [u64; 3],
    /// Homogenizing coordinate `t = 4m t1 / alpha`.
    pub t: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
    pub w: Rational,
}

impl Eq41Solution {
    /// Left side minus right side of the equation; zero for a solution.
    pub fn residual(&self) -> Rational {
        eq41_residual(self.m, &Rational::from(self.r), [&self.x, &self.y, &self.z, &self.w])
    }

    pub fn tuple(&self) -> [Rational; 4] {
        [self.x.clone(), self.y.clone(), self.z.clone(), self.w.clone()]
    }
}

/// `r(4m-1)/(8m) + 2rm x^2 + y^2 + z^2 + w^2 - r`.
pub fn eq41_residual(m: u64, r: &Rational, [x, y, z, w]: [&Rational; 4]) -> Rational {
    let m = Rational::from(m);
    let four_m = Rational::from(4i64) * &m;
    let constant = r * (&four_m - Rational::one()) / (Rational::from(8i64) * &m);
    constant + Rational::from(2i64) * r * &m * x.square() + y.square() + z.square() + w.square() - r
}

/// Solves the clique-extension equation for positive integers `m`, `r`.
///
/// Writes `2rm = s alpha^2`, picks `(t1, x1)` so that
/// `gamma = s((4m+1)t1^2 - x1^2)` is 1 or 2 mod 4, splits `gamma` into three
/// squares and undoes the homogenization.
pub fn solve_eq41(m: u64, r: u64) -> Result<Eq41Solution> {
    if m == 0 || r == 0 {
        return Err(Error::domain("m and r must be positive"));
    }
    let two_rm = Rational::from(BigInt::from(2u64) * BigInt::from(r) * BigInt::from(m));
    let (s_big, alpha) = square_free_part(&two_rm)?;
    let s = to_desk_scale(&s_big)?;

    // s is square-free, so s mod 4 is never 0.
    let (t1, x1) = if s % 4 == 3 { (4u64, 1u64) } else { (1, 0) };
    let gamma_big = BigUint::from(s) * (BigUint::from(4 * m + 1) * t1 * t1 - x1 * x1);
    let gamma = to_desk_scale(&gamma_big)?;
    let [yy, zz, ww] = decompose_three_squares(gamma).ok_or_else(|| {
        Error::internal(format!("gamma = {gamma} is not a sum of three squares"))
    })?;

    // Integer solution (Y, Z, W, t1, x1) of the rescaled equation; divide by
    // the homogenizing coordinate t = 4m t1 / alpha.
    let t = Rational::from(4 * m * t1) / &alpha;
    let x = Rational::from(x1) / &alpha / &t;
    let scale = |v: u64| Rational::from(v) / &t;
    let sol = Eq41Solution {
        m,
        r,
        s,
        alpha,
        t1,
        x1,
        gamma,
        gamma_squares: [yy, zz, ww],
        x,
        y: scale(yy),
        z: scale(zz),
        w: scale(ww),
        t,
    };
    if !sol.residual().is_zero() {
        return Err(Error::internal(format!("eq41 residual {} for m={m}, r={r}", sol.residual())));
    }
    Ok(sol)
}
