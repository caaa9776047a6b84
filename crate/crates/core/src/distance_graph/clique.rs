//! Exhaustive clique search among lattice points of a box.

use crate::arith::{QVec, Rational};
use crate::error::{Error, Result};

/// Size of the largest clique found and one clique of that size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    pub witness: Vec<QVec>,
}

/// Largest set of points of `{0, 1, ..., height}^n` at pairwise squared
/// distance `r`. A lower bound on the clique number of `G(Q^n, sqrt(r))`.
pub fn clique_search_bruteforce(n: usize, r: &Rational, height: u32) -> Result<CliqueResult> {
    clique_search_with_denominator(n, r, height, 1)
}

/// As [`clique_search_bruteforce`] over `(1/denom) Z^n`, coordinates in
/// `[0, height]`.
pub fn clique_search_with_denominator(n: usize, r: &Rational, height: u32, denom: u32) -> Result<CliqueResult> {
    let lattice = Lattice::new(n, height, denom)?;
    if !r.is_positive() {
        return Err(Error::domain("squared distance must be positive"));
    }
    // Work with integer numerators: squared distance r becomes r * denom^2.
    let scaled = r * Rational::from(u64::from(denom) * u64::from(denom));
    let target: Option<i64> = if scaled.is_integer() { i64::try_from(scaled.numer()).ok() } else { None };
    let best = match target {
        Some(t) => lattice.max_clique(t),
        None => vec![0],
    };
    Ok(lattice.result(&best))
}

/// Best clique over every squared distance occurring in the box, together
/// with that distance. Ties go to the smallest distance.
pub fn best_clique_in_box(n: usize, height: u32, denom: u32) -> Result<(Rational, CliqueResult)> {
    let lattice = Lattice::new(n, height, denom)?;
    if lattice.points.len() < 2 {
        return Err(Error::domain("box holds a single point"));
    }
    let mut targets: Vec<i64> = (1..lattice.points.len()).map(|i| lattice.dist(0, i)).collect();
    targets.sort_unstable();
    targets.dedup();
    let mut best: Option<(i64, Vec<usize>)> = None;
    for t in targets {
        let clique = lattice.max_clique(t);
        if best.as_ref().is_none_or(|(_, b)| clique.len() > b.len()) {
            best = Some((t, clique));
        }
    }
    let (t, clique) = best.expect("at least one distance");
    let d = i64::from(denom);
    Ok((Rational::frac(t, d * d), lattice.result(&clique)))
}

struct Lattice {
    n: usize,
    denom: u32,
    points: Vec<Vec<i64>>,
}

impl Lattice {
    const MAX_POINTS: usize = 1 << 14;

    fn new(n: usize, height: u32, denom: u32) -> Result<Self> {
        if n == 0 || height == 0 || denom == 0 {
            return Err(Error::domain("dimension, height and denominator must be positive"));
        }
        let side = u64::from(height) * u64::from(denom) + 1;
        let total = side.checked_pow(n as u32).filter(|&t| t <= Self::MAX_POINTS as u64);
        let Some(total) = total else {
            return Err(Error::domain(format!(
                "search box {side}^{n} exceeds {} points",
                Self::MAX_POINTS
            )));
        };
        // Lexicographic order, last coordinate fastest.
        let points = (0..total)
            .map(|mut idx| {
                let mut p = vec![0i64; n];
                for c in p.iter_mut().rev() {
                    *c = (idx % side) as i64;
                    idx /= side;
                }
                p
            })
            .collect();
        Ok(Lattice { n, denom, points })
    }

    fn dist(&self, i: usize, j: usize) -> i64 {
        self.points[i].iter().zip(&self.points[j]).map(|(a, b)| (a - b) * (a - b)).sum()
    }

    /// Branch and bound over vertices in lexicographic order; the first
    /// maximum clique found is kept.
    fn max_clique(&self, target: i64) -> Vec<usize> {
        let len = self.points.len();
        let words = len.div_ceil(64);
        let mut adj = vec![vec![0u64; words]; len];
        for i in 0..len {
            for j in i + 1..len {
                if self.dist(i, j) == target {
                    adj[i][j / 64] |= 1 << (j % 64);
                    adj[j][i / 64] |= 1 << (i % 64);
                }
            }
        }
        let mut best = vec![0];
        let mut current = Vec::new();
        let all: Vec<usize> = (0..len).collect();
        expand(&adj, &mut current, &all, &mut best);
        best
    }

    fn result(&self, clique: &[usize]) -> CliqueResult {
        let d = i64::from(self.denom);
        let witness = clique
            .iter()
            .map(|&i| QVec::new(self.points[i].iter().map(|&c| Rational::frac(c, d)).collect()))
            .collect::<Vec<_>>();
        debug_assert!(witness.iter().all(|p| p.dim() == self.n));
        CliqueResult { size: clique.len(), witness }
    }
}

fn expand(adj: &[Vec<u64>], current: &mut Vec<usize>, cands: &[usize], best: &mut Vec<usize>) {
    for (i, &v) in cands.iter().enumerate() {
        if current.len() + cands.len() - i <= best.len() {
            return;
        }
        current.push(v);
        let next: Vec<usize> = cands[i + 1..].iter().copied().filter(|&u| adj[v][u / 64] >> (u % 64) & 1 == 1).collect();
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(adj, current, &next, best);
        }
        current.pop();
    }
}
