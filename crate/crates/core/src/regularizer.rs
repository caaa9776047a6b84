//! Regular unit-distance supergraphs of plane unit-distance graphs.
//!
//! Plain `f64` arithmetic; every output is checked against a tolerance and
//! the certificate records the worst edge deviation.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize};

use crate::distance_graph::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Distinct vertices closer than this count as coinciding.
pub const MIN_SEPARATION: f64 = 1e-6;
pub const MAX_ATTEMPTS: usize = 64;
pub const MAX_REGULARITY: usize = 12;

type Pt = [f64; 2];

/// A graph drawn in the plane, edges meant to have unit length.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneEmbedding {
    pub graph: Graph,
    pub coords: Vec<Pt>,
    pub tolerance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlaneReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub tolerance: f64,
    /// Largest `| |p - q| - 1 |` over edges.
    pub max_edge_deviation: f64,
    /// Smallest distance between distinct vertices.
    pub min_separation: f64,
    pub min_degree: usize,
    pub max_degree: usize,
    pub passed: bool,
}

impl PlaneEmbedding {
    pub fn new(graph: Graph, coords: Vec<Pt>, tolerance: f64) -> Result<Self> {
        if coords.len() != graph.vertex_count() {
            return Err(Error::domain(format!(
                "{} coordinates for {} vertices",
                coords.len(),
                graph.vertex_count()
            )));
        }
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(Error::domain("tolerance must be a positive finite number"));
        }
        if coords.iter().flatten().any(|c| !c.is_finite()) {
            return Err(Error::domain("coordinates must be finite"));
        }
        Ok(PlaneEmbedding { graph, coords, tolerance })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.graph.degree(v)
    }

    pub fn report(&self) -> PlaneReport {
        let g = &self.graph;
        let max_edge_deviation = g
            .edges()
            .map(|(u, v)| (dist(self.coords[u], self.coords[v]) - 1.0).abs())
            .fold(0.0, f64::max);
        let mut degrees = vec![0usize; g.vertex_count()];
        for (u, v) in g.edges() {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        let min_separation = min_separation(&self.coords);
        PlaneReport {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            tolerance: self.tolerance,
            max_edge_deviation,
            min_separation,
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            passed: max_edge_deviation <= self.tolerance && min_separation > self.tolerance,
        }
    }

    pub fn is_regular(&self, r: usize) -> bool {
        let rep = self.report();
        rep.min_degree == r && rep.max_degree == r
    }

    pub fn to_svg(&self) -> String {
        let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
        for p in &self.coords {
            for i in 0..2 {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        let pad = 0.5;
        let (w, h) = (hi[0] - lo[0] + 2.0 * pad, hi[1] - lo[1] + 2.0 * pad);
        // Flip y so the picture has the usual orientation.
        let map = |p: &Pt| (p[0] - lo[0] + pad, hi[1] - p[1] + pad);
        let mut out = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w:.4} {h:.4}\" width=\"{:.0}\" height=\"{:.0}\">\n",
            w * 100.0,
            h * 100.0
        );
        out.push_str("<g stroke=\"black\" stroke-width=\"0.01\">\n");
        for (u, v) in self.graph.edges() {
            let (x1, y1) = map(&self.coords[u]);
            let (x2, y2) = map(&self.coords[v]);
            out.push_str(&format!("<line x1=\"{x1:.4}\" y1=\"{y1:.4}\" x2=\"{x2:.4}\" y2=\"{y2:.4}\"/>\n"));
        }
        out.push_str("</g>\n<g fill=\"crimson\">\n");
        for p in &self.coords {
            let (x, y) = map(p);
            out.push_str(&format!("<circle cx=\"{x:.4}\" cy=\"{y:.4}\" r=\"0.03\"/>\n"));
        }
        out.push_str("</g>\n</svg>\n");
        out
    }
}

fn dist(p: Pt, q: Pt) -> f64 {
    (p[0] - q[0]).hypot(p[1] - q[1])
}

fn min_separation(coords: &[Pt]) -> f64 {
    let mut idx: Vec<usize> = (0..coords.len()).collect();
    idx.sort_by(|&a, &b| coords[a][0].total_cmp(&coords[b][0]));
    let mut best = f64::INFINITY;
    for (k, &i) in idx.iter().enumerate() {
        for &j in &idx[k + 1..] {
            if coords[j][0] - coords[i][0] >= best {
                break;
            }
            best = best.min(dist(coords[i], coords[j]));
        }
    }
    best
}

fn unit(angle: f64) -> Pt {
    [angle.cos(), angle.sin()]
}

fn add(p: Pt, q: Pt) -> Pt {
    [p[0] + q[0], p[1] + q[1]]
}

fn check_regularity(r: usize) -> Result<()> {
    if r == 0 || r > MAX_REGULARITY {
        return Err(Error::domain(format!("regularity must be in 1..={MAX_REGULARITY}, got {r}")));
    }
    Ok(())
}

/// An `r`-regular unit-distance graph on `2^r` vertices: start from `K_2`
/// and repeatedly add a translate by a fresh unit vector, joining each
/// vertex to its translate.
pub fn base_regular_graph(r: usize) -> Result<PlaneEmbedding> {
    check_regularity(r)?;
    const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;
    for attempt in 0..MAX_ATTEMPTS {
        let dirs: Vec<Pt> = (0..r)
            .map(|k| if k == 0 { [1.0, 0.0] } else { unit(k as f64 * GOLDEN_ANGLE + attempt as f64 * 0.1234) })
            .collect();
        let count = 1usize << r;
        let coords: Vec<Pt> = (0..count)
            .map(|i| (0..r).filter(|k| i >> k & 1 == 1).fold([0.0, 0.0], |acc, k| add(acc, dirs[k])))
            .collect();
        if min_separation(&coords) <= MIN_SEPARATION {
            continue;
        }
        let edges = (0..count).flat_map(|i| (0..r).map(move |k| (i, i ^ (1 << k)))).filter(|(i, j)| i < j);
        let names = (0..count).map(|i| format!("h{i}")).collect();
        return PlaneEmbedding::new(Graph::new(names, edges)?, coords, DEFAULT_TOLERANCE);
    }
    Err(Error::Placement { attempts: MAX_ATTEMPTS, seed: 0 })
}

/// Working copy of a plane graph under construction.
#[derive(Clone, Default)]
struct Draft {
    names: Vec<String>,
    coords: Vec<Pt>,
    edges: Vec<(usize, usize)>,
}

impl Draft {
    fn push(&mut self, name: String, p: Pt) -> usize {
        self.names.push(name);
        self.coords.push(p);
        self.coords.len() - 1
    }
}

/// An `r`-regular unit-distance graph containing `g` (same vertex names,
/// coordinates and edges), built from pendant edges and chains of copies of
/// the base graph with one edge removed.
///
/// Generic-position choices come from `seed`; a near-coincidence restarts
/// the construction with fresh choices, at most [`MAX_ATTEMPTS`] times.
pub fn regular_supergraph(g: &PlaneEmbedding, r: usize, seed: u64) -> Result<PlaneEmbedding> {
    let (out, _) = regular_supergraph_with_attempts(g, r, seed)?;
    Ok(out)
}

/// As [`regular_supergraph`], also returning the number of attempts used.
pub fn regular_supergraph_with_attempts(g: &PlaneEmbedding, r: usize, seed: u64) -> Result<(PlaneEmbedding, usize)> {
    check_regularity(r)?;
    let input = g.report();
    if input.max_edge_deviation > g.tolerance {
        return Err(Error::domain(format!(
            "input is not a unit-distance drawing: an edge is off by {:e}",
            input.max_edge_deviation
        )));
    }
    if g.graph.vertex_count() > 1 && input.min_separation <= MIN_SEPARATION {
        return Err(Error::domain("input has coinciding vertices"));
    }
    if input.max_degree > r {
        return Err(Error::domain(format!("input has maximum degree {} > r = {r}", input.max_degree)));
    }

    let base = base_regular_graph(r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=MAX_ATTEMPTS {
        if let Some(draft) = try_build(g, r, &base, &mut rng) {
            if draft.coords.len() < 2 || min_separation(&draft.coords) > MIN_SEPARATION {
                let graph = Graph::new(draft.names, draft.edges)?;
                let out = PlaneEmbedding::new(graph, draft.coords, g.tolerance)?;
                return Ok((out, attempt));
            }
        }
    }
    Err(Error::Placement { attempts: MAX_ATTEMPTS, seed })
}

fn try_build(g: &PlaneEmbedding, r: usize, base: &PlaneEmbedding, rng: &mut ChaCha8Rng) -> Option<Draft> {
    let mut d = Draft {
        names: g.graph.names().to_vec(),
        coords: g.coords.clone(),
        edges: g.graph.edges().collect(),
    };

    // Pendant leaves bring every original vertex up to degree r.
    let mut pendants = Vec::new();
    for v in 0..g.graph.vertex_count() {
        let missing = r - g.degree(v);
        let offset = rng.gen_range(0.0..2.0 * PI);
        for j in 0..missing {
            let angle = offset + 2.0 * PI * j as f64 / missing as f64 + rng.gen_range(-0.2..0.2);
            let leaf = d.push(format!("_l{}", pendants.len()), add(d.coords[v], unit(angle)));
            d.edges.push((v, leaf));
            pendants.push(leaf);
        }
    }
    if r == 1 {
        return Some(d);
    }

    let odd = pendants.len() % 2 == 1;
    let paired = if odd { &pendants[..pendants.len() - 1] } else { &pendants[..] };
    for (pair, ab) in paired.chunks(2).enumerate() {
        connect(&mut d, base, ab[0], ab[1], pair, rng)?;
    }
    if !odd {
        return Some(d);
    }

    // The last pendant c keeps degree 1; glue r rotated copies at c.
    let c = *pendants.last().expect("odd count is non-empty");
    let centre = d.coords[c];
    let single = d.clone();
    let n = single.coords.len();
    let offset = rng.gen_range(0.0..2.0 * PI);
    for k in 1..r {
        let angle = offset + 2.0 * PI * k as f64 / r as f64 + rng.gen_range(-0.1..0.1);
        let (s, co) = angle.sin_cos();
        let mut map = vec![usize::MAX; n];
        for v in 0..n {
            map[v] = if v == c {
                c
            } else {
                let p = [single.coords[v][0] - centre[0], single.coords[v][1] - centre[1]];
                let q = [co * p[0] - s * p[1] + centre[0], s * p[0] + co * p[1] + centre[1]];
                d.push(format!("{}@{k}", single.names[v]), q)
            };
        }
        d.edges.extend(single.edges.iter().map(|&(u, v)| (map[u], map[v])));
    }
    Some(d)
}

/// Joins pendants `a` and `b` by a chain of unit steps `a = x0, x1, ..., xM = b`
/// (`M` odd). Odd-numbered steps are the removed edge of a copy of the base
/// graph; even-numbered steps become new edges. Every interior `x_j` ends
/// with degree `(r - 1) + 1`, and `a`, `b` with `1 + (r - 1)`.
fn connect(d: &mut Draft, base: &PlaneEmbedding, a: usize, b: usize, pair: usize, rng: &mut ChaCha8Rng) -> Option<()> {
    let (pa, pb) = (d.coords[a], d.coords[b]);
    let path = unit_path(pa, pb, rng)?;
    let (u, v) = (0usize, 1usize); // the removed edge of the base graph
    let mut ends = vec![a];
    for j in 1..path.len() - 1 {
        let idx = d.push(format!("_x{pair}.{j}"), path[j]);
        ends.push(idx);
    }
    ends.push(b);

    for (copy, step) in (0..path.len() - 1).step_by(2).enumerate() {
        let (x, y) = (path[step], path[step + 1]);
        let reflect = rng.gen_bool(0.5);
        let place = |p: Pt| {
            let rel = [p[0] - base.coords[u][0], p[1] - base.coords[u][1]];
            let rel = if reflect { reflect_across(rel, base.coords[v], base.coords[u]) } else { rel };
            let from = angle_of([base.coords[v][0] - base.coords[u][0], base.coords[v][1] - base.coords[u][1]]);
            let to = angle_of([y[0] - x[0], y[1] - x[1]]);
            let (s, c) = (to - from).sin_cos();
            [c * rel[0] - s * rel[1] + x[0], s * rel[0] + c * rel[1] + x[1]]
        };
        let mut map = vec![usize::MAX; base.coords.len()];
        map[u] = ends[step];
        map[v] = ends[step + 1];
        for w in 0..base.coords.len() {
            if w != u && w != v {
                map[w] = d.push(format!("_k{pair}.{copy}.{w}"), place(base.coords[w]));
            }
        }
        d.edges.extend(base.graph.edges().filter(|&e| e != (u, v)).map(|(p, q)| (map[p], map[q])));
        if step + 2 < path.len() {
            d.edges.push((ends[step + 1], ends[step + 2]));
        }
    }
    Some(())
}

fn angle_of(p: Pt) -> f64 {
    p[1].atan2(p[0])
}

/// Reflects `p` (relative to the base of the removed edge) across the line
/// through that edge.
fn reflect_across(p: Pt, v: Pt, u: Pt) -> Pt {
    let dir = [v[0] - u[0], v[1] - u[1]];
    let dot = p[0] * dir[0] + p[1] * dir[1];
    [2.0 * dot * dir[0] - p[0], 2.0 * dot * dir[1] - p[1]]
}

/// Points `x0 = a, ..., xM = b` with unit steps and `M` odd: roughly
/// straight steps towards `b`, then a final two-step bend solved by
/// intersecting unit circles about the last point and `b`.
fn unit_path(a: Pt, b: Pt, rng: &mut ChaCha8Rng) -> Option<Vec<Pt>> {
    let limit = dist(a, b).ceil() as usize + 8;
    let mut path = vec![a];
    let mut cur = a;
    for steps in 1..=limit {
        let heading = angle_of([b[0] - cur[0], b[1] - cur[1]]) + rng.gen_range(-0.4..0.4);
        cur = add(cur, unit(heading));
        path.push(cur);
        let rest = dist(cur, b);
        if steps % 2 == 1 && (0.05..=1.95).contains(&rest) {
            let mid = [(cur[0] + b[0]) / 2.0, (cur[1] + b[1]) / 2.0];
            let h = (1.0 - rest * rest / 4.0).sqrt();
            let side = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            let perp = [-(b[1] - cur[1]) / rest * h * side, (b[0] - cur[0]) / rest * h * side];
            path.push(add(mid, perp));
            path.push(b);
            return Some(path);
        }
    }
    None
}

#[derive(Serialize, Deserialize)]
struct PlaneJson {
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
    coords: BTreeMap<String, [Decimal; 2]>,
    #[serde(default = "default_tolerance")]
    tolerance: Decimal,
}

fn default_tolerance() -> Decimal {
    Decimal(DEFAULT_TOLERANCE)
}

/// An `f64` written as a decimal string; plain JSON numbers are accepted on
/// input.
#[derive(Clone, Copy, Debug)]
struct Decimal(f64);

impl Serialize for Decimal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{:?}", self.0))
    }
}

impl<'de> Deserialize<'de> for Decimal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Number(f64),
        }
        match Raw::deserialize(d)? {
            Raw::Number(x) => Ok(Decimal(x)),
            Raw::Text(s) => s.trim().parse().map(Decimal).map_err(serde::de::Error::custom),
        }
    }
}

impl Serialize for PlaneEmbedding {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let g = &self.graph;
        PlaneJson {
            vertices: g.names().to_vec(),
            edges: g.edges().map(|(u, v)| [g.name(u).to_string(), g.name(v).to_string()]).collect(),
            coords: g
                .names()
                .iter()
                .cloned()
                .zip(self.coords.iter().map(|p| [Decimal(p[0]), Decimal(p[1])]))
                .collect(),
            tolerance: Decimal(self.tolerance),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlaneEmbedding {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = PlaneJson::deserialize(d)?;
        let lookup = |name: &str| {
            j.vertices.iter().position(|v| v == name).ok_or_else(|| D::Error::custom(format!("unknown vertex {name:?}")))
        };
        let edges = j
            .edges
            .iter()
            .map(|[u, v]| Ok((lookup(u)?, lookup(v)?)))
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        let coords = j
            .vertices
            .iter()
            .map(|v| {
                j.coords
                    .get(v)
                    .map(|[x, y]| [x.0, y.0])
                    .ok_or_else(|| D::Error::custom(format!("no coordinates for vertex {v:?}")))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        let graph = Graph::new(j.vertices.clone(), edges).map_err(D::Error::custom)?;
        PlaneEmbedding::new(graph, coords, j.tolerance.0).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> PlaneEmbedding {
        let g = Graph::new(vec!["a".into(), "b".into(), "c".into()], [(0, 1), (1, 2)]).unwrap();
        PlaneEmbedding::new(g, vec![[0.0, 0.0], [1.0, 0.0], [1.5, 0.75f64.sqrt()]], DEFAULT_TOLERANCE).unwrap()
    }

    #[test]
    fn base_graphs_are_regular() {
        for r in 1..=6 {
            let k = base_regular_graph(r).unwrap();
            assert_eq!(k.graph.vertex_count(), 1 << r);
            assert!(k.is_regular(r));
            assert!(k.report().passed);
        }
    }

    #[test]
    fn path_becomes_cycle() {
        let h = regular_supergraph(&path3(), 2, 7).unwrap();
        assert!(h.is_regular(2));
        assert!(h.report().passed);
        assert!(h.graph.is_edge(0, 1) && h.graph.is_edge(1, 2));
    }

    #[test]
    fn k2_is_already_regular() {
        let g = Graph::new(vec!["u".into(), "v".into()], [(0, 1)]).unwrap();
        let k2 = PlaneEmbedding::new(g, vec![[0.0, 0.0], [1.0, 0.0]], DEFAULT_TOLERANCE).unwrap();
        assert_eq!(regular_supergraph(&k2, 1, 0).unwrap(), k2);
    }

    #[test]
    fn odd_pendant_count_uses_rotated_copies() {
        // A single vertex needs 3 pendants for r = 3.
        let g = Graph::new(vec!["v".into()], []).unwrap();
        let p = PlaneEmbedding::new(g, vec![[0.0, 0.0]], DEFAULT_TOLERANCE).unwrap();
        let h = regular_supergraph(&p, 3, 11).unwrap();
        assert!(h.is_regular(3));
        assert!(h.report().passed);
    }

    #[test]
    fn same_seed_same_output() {
        let a = regular_supergraph(&path3(), 3, 5).unwrap();
        let b = regular_supergraph(&path3(), 3, 5).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(regular_supergraph(&path3(), 1, 0).is_err());
        let g = Graph::new(vec!["u".into(), "v".into()], [(0, 1)]).unwrap();
        let long = PlaneEmbedding::new(g, vec![[0.0, 0.0], [2.0, 0.0]], DEFAULT_TOLERANCE).unwrap();
        assert!(regular_supergraph(&long, 2, 0).is_err());
    }

    #[test]
    fn json_round_trip_and_numbers() {
        let p = path3();
        let text = serde_json::to_string(&p).unwrap();
        let back: PlaneEmbedding = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        let plain = r#"{"vertices":["u","v"],"edges":[["u","v"]],"coords":{"u":[0,0],"v":["1.0",0]}}"#;
        let q: PlaneEmbedding = serde_json::from_str(plain).unwrap();
        assert_eq!(q.coords[1], [1.0, 0.0]);
    }

    #[test]
    fn svg_has_every_edge() {
        let svg = path3().to_svg();
        assert_eq!(svg.matches("<line").count(), 2);
    }
}
