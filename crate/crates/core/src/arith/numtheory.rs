//! Square-free parts and sums of squares.
//!
//! Factoring is plain trial division; every integer that reaches this
//! module is desk-scale (at most around 10^12), so nothing smarter is
//! needed. Decompositions search the largest square first and return their
//! components in non-increasing order, which keeps certificates
//! reproducible.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while (r as u128) * (r as u128) > n as u128 {
        r -= 1;
    }
    while ((r + 1) as u128) * ((r + 1) as u128) <= n as u128 {
        r += 1;
    }
    r
}

pub fn is_square(n: u64) -> bool {
    let r = isqrt(n);
    r * r == n
}

/// Splits `n > 0` as `s * g^2` with `s` square-free. Returns `(s, g)`.
pub fn square_free_decompose(n: &BigUint) -> (BigUint, BigUint) {
    assert!(!n.is_zero(), "square-free part of zero is undefined");
    let mut rest = n.clone();
    let mut s = BigUint::one();
    let mut g = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            g *= p.pow(e / 2);
            if e % 2 == 1 {
                s *= &p;
            }
        }
        p += if p == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    // Whatever survives trial division is 1 or a prime.
    s *= rest;
    (s, g)
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(n: &BigUint) -> Vec<BigUint> {
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut p = BigUint::from(2u32);
    while &p * &p <= rest {
        if (&rest % &p).is_zero() {
            out.push(p.clone());
            while (&rest % &p).is_zero() {
                rest /= &p;
            }
        }
        p += if p == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    if rest > BigUint::one() {
        out.push(rest);
    }
    out
}

/// Writes a positive rational `q` as `s * f^2` with `s` a square-free
/// positive integer and `f` a positive rational.
pub fn square_free_part(q: &Rational) -> Result<(BigUint, Rational)> {
    if !q.is_positive() {
        return Err(Error::domain(format!("square-free part needs q > 0, got {q}")));
    }
    // p/d with gcd(p, d) = 1: the two square-free parts are coprime, so
    // their product is square-free and p/d = s1*s2 * (g1*g2/d)^2.
    let (s1, g1) = square_free_decompose(q.numer().magnitude());
    let (s2, g2) = square_free_decompose(q.denom().magnitude());
    let f = Rational::new(BigInt::from(g1 * g2), q.denom().clone())?;
    Ok((s1 * s2, f))
}

/// `Some((a, b))` when `k = 4^a (8b + 7)`, the only integers that are not
/// sums of three squares.
pub fn gauss_obstruction(k: u64) -> Option<(u32, u64)> {
    if k == 0 {
        return None;
    }
    let mut rest = k;
    let mut a = 0;
    while rest.is_multiple_of(4) {
        rest /= 4;
        a += 1;
    }
    (rest % 8 == 7).then(|| (a, (rest - 7) / 8))
}

pub fn is_sum_three_squares(k: u64) -> bool {
    gauss_obstruction(k).is_none()
}

pub fn is_sum_two_squares(k: u64) -> bool {
    decompose_two_squares(k).is_some()
}

/// `x >= y >= 0` with `x^2 + y^2 = k`, largest `x` first.
pub fn decompose_two_squares(k: u64) -> Option<[u64; 2]> {
    if k % 4 == 3 {
        return None;
    }
    let mut x = isqrt(k);
    loop {
        let rem = k - x * x;
        if rem > x * x {
            return None;
        }
        if is_square(rem) {
            return Some([x, isqrt(rem)]);
        }
        if x == 0 {
            return None;
        }
        x -= 1;
    }
}

/// `x >= y >= z >= 0` with `x^2 + y^2 + z^2 = k`, or `None` exactly when
/// `k = 4^a (8b + 7)`.
pub fn decompose_three_squares(k: u64) -> Option<[u64; 3]> {
    if !is_sum_three_squares(k) {
        return None;
    }
    let mut x = isqrt(k);
    loop {
        let rem = k - x * x;
        if rem as u128 > 2 * (x as u128) * (x as u128) {
            // Components are non-increasing, so the rest cannot fit.
            break;
        }
        if let Some([y, z]) = decompose_two_squares(rem) {
            if y <= x {
                return Some([x, y, z]);
            }
        }
        if x == 0 {
            break;
        }
        x -= 1;
    }
    None
}

/// `a >= b >= c >= d >= 0` with `a^2 + b^2 + c^2 + d^2 = k`. Always exists.
pub fn decompose_four_squares(k: u64) -> [u64; 4] {
    let mut a = isqrt(k);
    loop {
        let rem = k - a * a;
        if rem as u128 <= 3 * (a as u128) * (a as u128) {
            if let Some([b, c, d]) = decompose_three_squares(rem) {
                if b <= a {
                    return [a, b, c, d];
                }
            }
        }
        assert!(a > 0, "four-square theorem violated for {k}");
        a -= 1;
    }
}

/// Narrows a natural number to the desk-scale range the searches accept.
pub fn to_desk_scale(n: &BigUint) -> Result<u64> {
    n.to_u64()
        .filter(|&v| v <= DESK_SCALE_LIMIT)
        .ok_or_else(|| Error::domain(format!("{n} exceeds the supported magnitude {DESK_SCALE_LIMIT}")))
}

/// Largest integer handed to the square-sum searches.
pub const DESK_SCALE_LIMIT: u64 = 1 << 50;

/// Writes a non-negative rational as a sum of `parts` rational squares
/// (`parts` in 1..=4), sharing one denominator. `None` when impossible.
pub fn rational_sum_of_squares(q: &Rational, parts: usize) -> Result<Option<Vec<Rational>>> {
    if q.is_negative() {
        return Err(Error::domain(format!("{q} is negative")));
    }
    // q = p/d = (p*d) / d^2
    let n = to_desk_scale(&q.numer_denom_product())?;
    let comps: Option<Vec<u64>> = match parts {
        1 => is_square(n).then(|| vec![isqrt(n)]),
        2 => decompose_two_squares(n).map(|c| c.to_vec()),
        3 => decompose_three_squares(n).map(|c| c.to_vec()),
        4 => Some(decompose_four_squares(n).to_vec()),
        _ => return Err(Error::domain(format!("unsupported number of squares: {parts}"))),
    };
    let d = q.denom().clone();
    Ok(comps.map(|c| {
        c.into_iter()
            .map(|x| Rational::new(BigInt::from(x), d.clone()).expect("positive denominator"))
            .collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_three(k: u64) -> bool {
        let r = isqrt(k);
        (0..=r).any(|x| (0..=r).any(|y| x * x + y * y <= k && is_square(k - x * x - y * y)))
    }

    #[test]
    fn square_free_examples() {
        let big = |n: u64| BigUint::from(n);
        assert_eq!(square_free_part(&Rational::from(8i64)).unwrap(), (big(2), Rational::from(2i64)));
        assert_eq!(square_free_part(&Rational::one()).unwrap(), (big(1), Rational::one()));
        let (s, f) = square_free_part(&Rational::frac(9, 2)).unwrap();
        assert_eq!((s.clone(), f.clone()), (big(2), Rational::frac(3, 2)));
        assert_eq!(Rational::from(BigInt::from(s)) * f.square(), Rational::frac(9, 2));
    }

    #[test]
    fn square_free_rejects_non_positive() {
        assert!(square_free_part(&Rational::zero()).is_err());
        assert!(square_free_part(&Rational::from(-3i64)).is_err());
    }

    #[test]
    fn three_square_examples() {
        assert!(!is_sum_three_squares(7));
        assert!(is_sum_three_squares(0));
        assert!(!is_sum_three_squares(28));
        assert!(!brute_three(28));
        assert_eq!(gauss_obstruction(28), Some((1, 0)));
        assert_eq!(gauss_obstruction(7), Some((0, 0)));
    }

    #[test]
    fn decompositions_match_examples() {
        // 6 = 2^2 + 1^2 + 1^2; the multiset {1, 1, 2}.
        assert_eq!(decompose_three_squares(6), Some([2, 1, 1]));
        assert_eq!(decompose_three_squares(0), Some([0, 0, 0]));
        assert_eq!(decompose_three_squares(7), None);
        assert_eq!(decompose_four_squares(7), [2, 1, 1, 1]);
        assert_eq!(decompose_four_squares(0), [0, 0, 0, 0]);
        assert_eq!(decompose_four_squares(63), [7, 3, 2, 1]);
    }

    #[test]
    fn two_squares() {
        assert_eq!(decompose_two_squares(25), Some([5, 0]));
        assert_eq!(decompose_two_squares(2), Some([1, 1]));
        assert_eq!(decompose_two_squares(3), None);
        assert_eq!(decompose_two_squares(21), None);
    }

    #[test]
    fn prime_factor_lists() {
        assert_eq!(prime_factors(&BigUint::from(360u32)), vec![2u32, 3, 5].into_iter().map(BigUint::from).collect::<Vec<_>>());
        assert_eq!(prime_factors(&BigUint::from(97u32)), vec![BigUint::from(97u32)]);
    }

    #[test]
    fn isqrt_edges() {
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(15), 3);
        assert_eq!(isqrt(16), 4);
        assert_eq!(isqrt(u64::MAX), 4294967295);
    }

    #[test]
    fn rational_squares() {
        let parts = rational_sum_of_squares(&Rational::frac(7, 9), 4).unwrap().unwrap();
        let sum: Rational = parts.iter().map(Rational::square).sum();
        assert_eq!(sum, Rational::frac(7, 9));
        assert_eq!(rational_sum_of_squares(&Rational::from(7i64), 3).unwrap(), None);
    }
}
