//! Gauss-Jordan elimination over the rationals.

use crate::arith::{QVec, Rational};

/// Solution set `{ particular + sum t_i basis_i }` of a linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSpace {
    pub particular: QVec,
    pub basis: Vec<QVec>,
}

/// Solves `rows * X = rhs`. Each row must have `cols` entries. Returns
/// `None` for an inconsistent system.
///
/// Kernel vectors set one free variable to 1 and the others to 0, so the
/// output is deterministic.
pub fn solve(rows: &[Vec<Rational>], rhs: &[Rational], cols: usize) -> Option<SolutionSpace> {
    assert_eq!(rows.len(), rhs.len());
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            assert_eq!(row.len(), cols);
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    let mut pivots = Vec::new();
    let mut row_i = 0;
    for col in 0..cols {
        let Some(p) = (row_i..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row_i, p);
        let inv = m[row_i][col].recip().expect("nonzero pivot");
        for v in m[row_i].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[row_i].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == row_i || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &(&factor * pv);
            }
        }
        pivots.push(col);
        row_i += 1;
        if row_i == m.len() {
            break;
        }
    }

    // 0 = nonzero rows mean no solution.
    if m[row_i..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }

    let mut particular = QVec::zeros(cols);
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = m[i][cols].clone();
    }

    let basis = (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = QVec::zeros(cols);
            v[free] = Rational::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -&m[i][free];
            }
            v
        })
        .collect();

    Some(SolutionSpace { particular, basis })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn unique_solution() {
        // x + y = 3, x - y = 1
        let s = solve(&[row(&[1, 1]), row(&[1, -1])], &row(&[3, 1]), 2).unwrap();
        assert_eq!(s.particular, QVec::from_ints(&[2, 1]));
        assert!(s.basis.is_empty());
    }

    #[test]
    fn kernel_is_reported() {
        // x - y = 0 in Q^3: plane spanned by (1,1,0) and (0,0,1)
        let s = solve(&[row(&[1, -1, 0])], &row(&[0]), 3).unwrap();
        assert_eq!(s.basis, vec![QVec::from_ints(&[1, 1, 0]), QVec::from_ints(&[0, 0, 1])]);
    }

    #[test]
    fn inconsistent_system() {
        assert!(solve(&[row(&[1, 1]), row(&[2, 2])], &row(&[1, 3]), 2).is_none());
    }

    #[test]
    fn empty_system_is_whole_space() {
        let s = solve(&[], &[], 2).unwrap();
        assert_eq!(s.basis.len(), 2);
    }
}
