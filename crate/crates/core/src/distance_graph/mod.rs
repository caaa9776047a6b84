//! Finite graphs, their exact embeddings in `Q^n`, and certificate checks.

mod clique;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::arith::{QVec, Rational};
use crate::error::{Error, Result};

pub use clique::{best_clique_in_box, clique_search_bruteforce, clique_search_with_denominator, CliqueResult};

/// A simple undirected graph with named vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
    parts: Option<Vec<Vec<usize>>>,
}

impl Graph {
    pub fn new(names: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::domain("graph needs at least one vertex"));
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name) {
                return Err(Error::domain(format!("duplicate vertex name {name:?}")));
            }
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::domain(format!("loop at vertex {}", names.get(u).map_or("?", |s| s))));
            }
            if u >= names.len() || v >= names.len() {
                return Err(Error::domain(format!("edge ({u}, {v}) references a missing vertex")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { names, edges: set, parts: None })
    }

    /// Complete multipartite graph; each inner list is one part.
    pub fn complete_multipartite(parts: &[Vec<&str>]) -> Result<Self> {
        let names: Vec<String> = parts.iter().flatten().map(|s| s.to_string()).collect();
        let mut index = Vec::new();
        let mut next = 0;
        for part in parts {
            if part.is_empty() {
                return Err(Error::domain("empty part"));
            }
            index.push((next..next + part.len()).collect::<Vec<_>>());
            next += part.len();
        }
        let mut edges = Vec::new();
        for (i, pi) in index.iter().enumerate() {
            for pj in &index[i + 1..] {
                for &u in pi {
                    for &v in pj {
                        edges.push((u, v));
                    }
                }
            }
        }
        let mut g = Graph::new(names, edges)?;
        g.parts = Some(index);
        Ok(g)
    }

    /// `K_m` on the given names.
    pub fn complete(names: &[&str]) -> Result<Self> {
        let parts: Vec<Vec<&str>> = names.iter().map(|n| vec![*n]).collect();
        Self::complete_multipartite(&parts)
    }

    /// Attaches a multipartite descriptor, which must describe the edge set
    /// exactly.
    pub fn with_parts(mut self, parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut owner = vec![usize::MAX; self.names.len()];
        for (pi, part) in parts.iter().enumerate() {
            for &v in part {
                if v >= owner.len() || owner[v] != usize::MAX {
                    return Err(Error::domain("parts must partition the vertex set"));
                }
                owner[v] = pi;
            }
        }
        if owner.contains(&usize::MAX) {
            return Err(Error::domain("parts must cover every vertex"));
        }
        for u in 0..self.names.len() {
            for v in u + 1..self.names.len() {
                if self.is_edge(u, v) != (owner[u] != owner[v]) {
                    return Err(Error::domain(format!(
                        "parts disagree with the edge set at ({}, {})",
                        self.names[u], self.names[v]
                    )));
                }
            }
        }
        self.parts = Some(parts);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn parts(&self) -> Option<&[Vec<usize>]> {
        self.parts.as_deref()
    }

    /// `(α, β, γ)`: the number of parts of size 1, of size 2 and of size at
    /// least 3.
    pub fn part_profile(&self) -> Option<(u64, u64, u64)> {
        let parts = self.parts.as_ref()?;
        let count = |f: &dyn Fn(usize) -> bool| parts.iter().filter(|p| f(p.len())).count() as u64;
        Some((count(&|s| s == 1), count(&|s| s == 2), count(&|s| s >= 3)))
    }
}

/// A graph drawn in `Q^n` with every edge meant to have squared length `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub graph: Graph,
    pub n: usize,
    pub r: Rational,
    pub coords: Vec<QVec>,
}

impl Embedding {
    pub fn new(graph: Graph, n: usize, r: Rational, coords: Vec<QVec>) -> Result<Self> {
        let e = Embedding { graph, n, r, coords };
        e.check_shape()?;
        Ok(e)
    }

    fn check_shape(&self) -> Result<()> {
        if self.coords.len() != self.graph.vertex_count() {
            return Err(Error::domain(format!(
                "{} coordinates for {} vertices",
                self.coords.len(),
                self.graph.vertex_count()
            )));
        }
        if let Some((v, p)) = self.coords.iter().enumerate().find(|(_, p)| p.dim() != self.n) {
            return Err(Error::domain(format!(
                "vertex {} has {} coordinates, expected {}",
                self.graph.name(v),
                p.dim(),
                self.n
            )));
        }
        if !self.r.is_positive() {
            return Err(Error::domain("edge distance must be positive"));
        }
        Ok(())
    }

    pub fn coord(&self, name: &str) -> Option<&QVec> {
        self.graph.index_of(name).map(|i| &self.coords[i])
    }

    /// Multiplies every coordinate by `f`; squared distances scale by `f^2`.
    pub fn scaled(&self, f: &Rational) -> Embedding {
        Embedding {
            graph: self.graph.clone(),
            n: self.n,
            r: &self.r * f.square(),
            coords: self.coords.iter().map(|p| p.scale(f)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCheck {
    pub u: String,
    pub v: String,
    pub squared_dist: Rational,
    pub ok: bool,
}

/// Exact per-edge verdicts, plus the non-edges that happen to sit at the
/// edge distance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub r: Rational,
    pub edges: Vec<EdgeCheck>,
    pub edges_ok: bool,
    pub faithful_requested: bool,
    pub non_edges_at_r: Vec<[String; 2]>,
    pub faithful: bool,
    pub passed: bool,
}

impl VerificationReport {
    pub fn failing_edges(&self) -> impl Iterator<Item = &EdgeCheck> {
        self.edges.iter().filter(|e| !e.ok)
    }
}

/// Checks every edge exactly. With `faithful`, the overall verdict also
/// requires every non-edge to avoid squared distance `r`; the non-edge list
/// is reported either way.
pub fn verify_embedding(e: &Embedding, faithful: bool) -> Result<VerificationReport> {
    e.check_shape()?;
    let g = &e.graph;
    let edges: Vec<EdgeCheck> = g
        .edges()
        .map(|(u, v)| {
            let d = e.coords[u].squared_dist(&e.coords[v]);
            EdgeCheck { u: g.name(u).into(), v: g.name(v).into(), ok: d == e.r, squared_dist: d }
        })
        .collect();
    let mut non_edges_at_r = Vec::new();
    for u in 0..g.vertex_count() {
        for v in u + 1..g.vertex_count() {
            if !g.is_edge(u, v) && e.coords[u].squared_dist(&e.coords[v]) == e.r {
                non_edges_at_r.push([g.name(u).to_string(), g.name(v).to_string()]);
            }
        }
    }
    let edges_ok = edges.iter().all(|c| c.ok);
    let is_faithful = non_edges_at_r.is_empty();
    Ok(VerificationReport {
        r: e.r.clone(),
        edges,
        edges_ok,
        faithful_requested: faithful,
        passed: edges_ok && (!faithful || is_faithful),
        non_edges_at_r,
        faithful: is_faithful,
    })
}

/// Dimension of a complete multipartite graph with `alpha` parts of size 1,
/// `beta` of size 2 and `gamma` of size at least 3.
pub fn multipartite_dimension(alpha: u64, beta: u64, gamma: u64) -> Result<u64> {
    if alpha + beta + gamma < 2 {
        return Err(Error::domain("need at least two parts"));
    }
    let base = alpha + beta + 2 * gamma;
    Ok(if beta + gamma <= 1 { base - 1 } else { base })
}

/// Largest regular simplex with vertices in `Q^n` (equivalently `Z^n`),
/// counted in vertices.
pub fn schoenberg_c1(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    let next = n + 1;
    let perfect_square = crate::arith::is_square(next);
    let full = (n.is_multiple_of(2) && perfect_square)
        || n % 4 == 3
        || (n % 4 == 1 && crate::arith::is_sum_two_squares(next));
    Ok(if full { n + 1 } else { n })
}

/// JSON form of an [`Embedding`]: coordinates and distances as exact
/// rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub n: usize,
    pub r: Rational,
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub coords: BTreeMap<String, QVec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<Vec<String>>>,
}

impl From<&Embedding> for EmbeddingJson {
    fn from(e: &Embedding) -> Self {
        let g = &e.graph;
        EmbeddingJson {
            n: e.n,
            r: e.r.clone(),
            vertices: g.names().to_vec(),
            edges: g.edges().map(|(u, v)| [g.name(u).to_string(), g.name(v).to_string()]).collect(),
            coords: g.names().iter().cloned().zip(e.coords.iter().cloned()).collect(),
            parts: g.parts().map(|ps| {
                ps.iter().map(|p| p.iter().map(|&v| g.name(v).to_string()).collect()).collect()
            }),
        }
    }
}

impl TryFrom<EmbeddingJson> for Embedding {
    type Error = Error;

    fn try_from(j: EmbeddingJson) -> Result<Self> {
        let lookup = |name: &str| {
            j.vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::parse(format!("unknown vertex {name:?}")))
        };
        let edges = j
            .edges
            .iter()
            .map(|[u, v]| Ok((lookup(u)?, lookup(v)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut graph = Graph::new(j.vertices.clone(), edges)?;
        if let Some(parts) = &j.parts {
            let idx = parts
                .iter()
                .map(|p| p.iter().map(|name| lookup(name)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            graph = graph.with_parts(idx)?;
        }
        let coords = j
            .vertices
            .iter()
            .map(|v| {
                j.coords
                    .get(v)
                    .cloned()
                    .ok_or_else(|| Error::parse(format!("no coordinates for vertex {v:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Embedding::new(graph, j.n, j.r, coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k23_unit() -> Embedding {
        let g = Graph::complete_multipartite(&[vec!["a1", "a2"], vec!["b1", "b2", "b3"]]).unwrap();
        let t = Rational::frac(2, 3);
        let coords = vec![
            QVec::zeros(3),
            QVec::new(vec![t.clone(), t.clone(), t]),
            QVec::unit(3, 0),
            QVec::unit(3, 1),
            QVec::unit(3, 2),
        ];
        Embedding::new(g, 3, Rational::one(), coords).unwrap()
    }

    #[test]
    fn k23_passes() {
        let report = verify_embedding(&k23_unit(), false).unwrap();
        assert!(report.passed);
        assert_eq!(report.edges.len(), 6);
    }

    #[test]
    fn perturbed_coordinate_names_edge() {
        let mut e = k23_unit();
        e.coords[4][0] += &Rational::frac(1, 7);
        let report = verify_embedding(&e, false).unwrap();
        assert!(!report.passed);
        let bad: Vec<_> = report.failing_edges().map(|c| (c.u.as_str(), c.v.as_str())).collect();
        assert_eq!(bad, vec![("a1", "b3"), ("a2", "b3")]);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let mut e = k23_unit();
        e.coords[1] = QVec::zeros(2);
        assert!(verify_embedding(&e, false).is_err());
    }

    #[test]
    fn faithful_check_is_separate() {
        // Path a-b-c with a, c also at unit distance.
        let g = Graph::new(vec!["a".into(), "b".into(), "c".into()], [(0, 1), (1, 2)]).unwrap();
        let h = Rational::frac(1, 2);
        let e = Embedding::new(
            g,
            2,
            Rational::one(),
            vec![QVec::zeros(2), QVec::unit(2, 0), QVec::new(vec![h.clone(), -h])],
        );
        // |b - c|^2 = 1/4 + 1/4, so this is not an embedding at all.
        let report = verify_embedding(&e.unwrap(), true).unwrap();
        assert!(!report.edges_ok);
    }

    #[test]
    fn multipartite_dimension_examples() {
        assert_eq!(multipartite_dimension(0, 1, 1).unwrap(), 3);
        assert_eq!(multipartite_dimension(1, 0, 2).unwrap(), 5);
        for n in 2..10 {
            assert_eq!(multipartite_dimension(n - 1, 0, 1).unwrap(), n);
        }
        assert!(multipartite_dimension(1, 0, 0).is_err());
    }

    #[test]
    fn schoenberg_examples() {
        assert_eq!(schoenberg_c1(3).unwrap(), 4);
        assert_eq!(schoenberg_c1(8).unwrap(), 9);
        assert_eq!(schoenberg_c1(4).unwrap(), 4);
        assert_eq!(schoenberg_c1(1).unwrap(), 2);
        assert_eq!(schoenberg_c1(5).unwrap(), 5);
        assert_eq!(schoenberg_c1(9).unwrap(), 10);
        assert!(schoenberg_c1(0).is_err());
    }

    #[test]
    fn parts_must_match_edges() {
        let g = Graph::new(vec!["a".into(), "b".into(), "c".into()], [(0, 1)]).unwrap();
        assert!(g.clone().with_parts(vec![vec![0], vec![1, 2]]).is_err());
        let k = Graph::complete(&["a", "b", "c"]).unwrap();
        assert_eq!(k.part_profile(), Some((3, 0, 0)));
    }

    #[test]
    fn graph_rejects_loops_and_bad_refs() {
        assert!(Graph::new(vec!["a".into()], [(0, 0)]).is_err());
        assert!(Graph::new(vec!["a".into()], [(0, 1)]).is_err());
        assert!(Graph::new(vec!["a".into(), "a".into()], []).is_err());
    }

    #[test]
    fn json_round_trip() {
        let e = k23_unit();
        let j = EmbeddingJson::from(&e);
        let text = serde_json::to_string(&j).unwrap();
        let back: EmbeddingJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Embedding::try_from(back).unwrap(), e);
        assert!(text.contains("\"2/3\""));
    }
}
