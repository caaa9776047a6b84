use super::{finish, names};
use crate::arith::{QVec, Rational};
use crate::diophantine::{chord_solutions, Conic2};
use crate::distance_graph::{Embedding, Graph};
use crate::error::{Error, Result};

/// The book graph (`n - 1` singleton parts and one part of size 3) in `Q^n`
/// with all edges of length `sqrt(2)`.
///
/// Singletons are the unit vectors `e_1 .. e_{n-1}`. The three remaining
/// vertices are `(t, ..., t, w)` with `(n - 2) t^2 + (t - 1)^2 + w^2 = 2`,
/// taken from the chord method through `(t, w) = (0, 1)`.
pub fn embed_book_sqrt2(n: usize) -> Result<Embedding> {
    if n < 2 {
        return Err(Error::domain(format!("book graph needs n >= 2, got {n}")));
    }
    let int = |v: i64| Rational::from(v);
    // Variables (w, t): w^2 + (n-1) t^2 - 2t - 1 = 0.
    let conic = Conic2::new(int(1), int(0), Rational::from((n - 1) as u64), int(0), int(-2), int(-1))?;
    let sols = chord_solutions(&conic, (int(1), int(0)), 3)?;

    let mut coords: Vec<QVec> = (0..n - 1).map(|i| QVec::unit(n, i)).collect();
    for (w, t) in sols {
        let mut p = vec![t; n - 1];
        p.push(w);
        coords.push(QVec::new(p));
    }

    let singles = names("v", n - 1);
    let pages = names("b", 3);
    let mut parts: Vec<Vec<&str>> = singles.iter().map(|s| vec![s.as_str()]).collect();
    parts.push(pages.iter().map(String::as_str).collect());
    let graph = Graph::complete_multipartite(&parts)?;
    finish(Embedding::new(graph, n, int(2), coords)?, &Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn three_dimensional_pages() {
        let e = embed_book_sqrt2(3).unwrap();
        let bs: Vec<&QVec> = ["b1", "b2", "b3"].iter().map(|b| e.coord(b).unwrap()).collect();
        assert_eq!(bs[0], &QVec::from_ints(&[0, 0, 1]));
        assert_eq!(bs[1], &QVec::from_ints(&[0, 0, -1]));
        assert_eq!(bs[2], &QVec::new(vec![q(4, 3), q(4, 3), q(-1, 3)]));
    }

    #[test]
    fn star_in_the_plane() {
        let e = embed_book_sqrt2(2).unwrap();
        assert_eq!(e.graph.edge_count(), 3);
        assert_eq!(e.coord("v1").unwrap(), &QVec::from_ints(&[1, 0]));
    }

    #[test]
    fn rejects_small_n() {
        assert!(embed_book_sqrt2(1).is_err());
    }
}
