use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use distgraph::arith::{decompose_three_squares, square_free_part, QVec, Rational};
use distgraph::cert::CertificateFile;
use distgraph::constructions::{embed_k133_q5, embed_k23_q3, K133Plan};
use distgraph::diophantine::{chord_solutions, Conic2};
use distgraph::distance_graph::{multipartite_dimension, verify_embedding, Embedding, Graph};
use distgraph::geometry::{circumcenter, equidistant_affine, is_distance_realized, sphere_points};
use distgraph::regularizer::{regular_supergraph, PlaneEmbedding, DEFAULT_TOLERANCE};

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.magnitude().clone(), b.magnitude().clone());
    while !b.is_zero() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    BigInt::from(a)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=60).prop_map(|(p, q)| Rational::frac(p, q))
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=2000, 1i64..=60).prop_map(|(p, q)| Rational::frac(p, q))
}

fn qvec(dim: usize) -> impl Strategy<Value = QVec> {
    proptest::collection::vec(rational(), dim).prop_map(QVec::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_print_parse_identity(q in rational()) {
        let text = q.to_string();
        let back: Rational = text.parse().unwrap();
        prop_assert_eq!(&back, &q);
        prop_assert!(q.denom() > &BigInt::from(0));
        prop_assert_eq!(gcd(q.numer(), q.denom()), BigInt::from(1));
        let json = serde_json::to_string(&q).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), q);
    }

    #[test]
    fn rational_arithmetic_is_exact(a in rational(), b in positive_rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&(&a * &b) / &b, a);
    }

    #[test]
    fn squared_dist_symmetric_and_separating(u in qvec(5), v in qvec(5)) {
        prop_assert_eq!(u.squared_dist(&v), v.squared_dist(&u));
        prop_assert_eq!(u.squared_dist(&v), (&u - &v).squared_norm());
        prop_assert_eq!(u.squared_dist(&v).is_zero(), u == v);
    }

    #[test]
    fn square_free_part_round_trips(q in positive_rational()) {
        let (s, f) = square_free_part(&q).unwrap();
        let s = Rational::from(BigInt::from(s));
        prop_assert_eq!(&s * &f.square(), q);
        let (again, one) = square_free_part(&s).unwrap();
        prop_assert_eq!(Rational::from(BigInt::from(again)), s);
        prop_assert_eq!(one, Rational::one());
    }

    #[test]
    fn three_square_decomposition_sums(k in 0u64..1_000_000_000) {
        if let Some([x, y, z]) = decompose_three_squares(k) {
            prop_assert_eq!(x * x + y * y + z * z, k);
            prop_assert!(x >= y && y >= z);
        }
    }

    #[test]
    fn chord_points_on_conic_and_distinct(
        a in 1i64..20, b in -5i64..5, c in 1i64..20, d in -5i64..5, e in -5i64..5,
        x0 in -6i64..6, y0 in -6i64..6,
    ) {
        let (x0, y0) = (Rational::from(x0), Rational::from(y0));
        let mut conic = Conic2::new(a.into(), b.into(), c.into(), d.into(), e.into(), Rational::zero()).unwrap();
        conic.f = -conic.evaluate(&x0, &y0);
        // Skip conics whose seed is singular; their chord walk has no tangent slope order.
        let gx = Rational::from(2 * a) * &x0 + Rational::from(b) * &y0 + Rational::from(d);
        let gy = Rational::from(b) * &x0 + Rational::from(2 * c) * &y0 + Rational::from(e);
        prop_assume!(!(gx.is_zero() && gy.is_zero()));
        if let Ok(points) = chord_solutions(&conic, (x0, y0), 5) {
            for (i, (x, y)) in points.iter().enumerate() {
                prop_assert!(conic.contains(x, y));
                for other in &points[..i] {
                    prop_assert_ne!(other, &(x.clone(), y.clone()));
                }
            }
        }
    }

    #[test]
    fn sphere_points_have_norm_r(n in 1usize..6, r in positive_rational()) {
        if is_distance_realized(n, &r).unwrap() {
            // The 0-sphere in Q^1 has only two points.
            let count = if n == 1 { 2 } else { 4 };
            if n == 1 {
                prop_assert!(sphere_points(1, &r, 3).is_err());
            }
            for p in sphere_points(n, &r, count).unwrap() {
                prop_assert_eq!(p.dim(), n);
                prop_assert_eq!(p.squared_norm(), r.clone());
            }
        }
    }

    #[test]
    fn equidistant_locus_is_equidistant(
        pts in proptest::collection::vec(qvec(5), 2..=4),
        params in proptest::collection::vec(proptest::collection::vec(rational(), 5), 5),
    ) {
        if let Some(locus) = equidistant_affine(&pts, 5).unwrap() {
            for t in &params {
                let p = locus.point_at(&t[..locus.dim()]);
                let d0 = p.squared_dist(&pts[0]);
                for q in &pts[1..] {
                    prop_assert_eq!(p.squared_dist(q), d0.clone());
                }
            }
        }
    }

    #[test]
    fn circumcenter_reflection(r in positive_rational()) {
        prop_assume!(is_distance_realized(3, &r).unwrap());
        let pts = sphere_points(3, &r, 3).unwrap();
        if let Ok(c) = circumcenter(&pts[0], &pts[1], &pts[2]) {
            let two_c = c.scale(&Rational::from(2));
            for b in &pts {
                prop_assert_eq!(two_c.squared_dist(b), b.squared_norm());
            }
        }
    }

    #[test]
    fn verification_is_exact(r in 1i64..=6, nudge in 1i64..1_000_000) {
        prop_assume!(r != 4);
        let e = embed_k23_q3(&Rational::from(r)).unwrap();
        prop_assert!(verify_embedding(&e, false).unwrap().passed);
        // Moving one coordinate by any nonzero rational breaks some edge.
        let mut coords = e.coords.clone();
        let mut moved = coords[0].clone().into_coords();
        moved[0] = &moved[0] + &Rational::frac(1, nudge);
        coords[0] = QVec::new(moved);
        let bad = Embedding::new(e.graph.clone(), e.n, e.r.clone(), coords).unwrap();
        prop_assert!(!verify_embedding(&bad, false).unwrap().passed);
    }

    #[test]
    fn k133_certificate_round_trips(p in 1i64..=12, q in 1i64..=6) {
        let r = Rational::frac(p, q);
        let e = embed_k133_q5(&r).unwrap();
        for v in ["a1", "a2", "a3"] {
            prop_assert!(e.coord(v).unwrap().coords()[4].is_zero());
        }
        for v in ["b1", "b2", "b3"] {
            prop_assert!(!e.coord(v).unwrap().coords()[4].is_zero());
        }
        let cert = CertificateFile::exact("embed", Default::default(), &e, None).unwrap();
        let text = cert.to_json().unwrap();
        let back = CertificateFile::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json().unwrap(), text);
        prop_assert!(back.recheck(false).unwrap().passed);
    }
}

#[test]
fn k133_plans_for_square_free_up_to_50() {
    for s in 1..=50i64 {
        let plan = K133Plan::new(&Rational::from(s)).unwrap();
        if plan.s != s as u64 {
            continue;
        }
        assert!(plan.a < plan.b && 3 * plan.a > plan.s, "s={s}");
        assert!(plan.invariants_hold(), "s={s}");
        let gap = plan.a * plan.b - plan.a * plan.a;
        let (s, b) = (plan.s, plan.b);
        match s % 4 {
            0 | 2 => assert!(b % 4 == 2 && gap % 4 == 1, "s={s}: b={b}, ab - a^2 = {gap}"),
            1 => assert!(b % 4 == 3 && gap % 4 == 2, "s={s}: b={b}, ab - a^2 = {gap}"),
            _ => {
                let d = plan.d.unwrap();
                assert!(d.is_multiple_of(2) && b % 4 == 3, "s={s}: d={d}, b={b}");
                assert_eq!(gap % (d * d), 0);
                assert_eq!((gap / (d * d)) % 4, 1, "s={s}: rb - r^2 d^2 = {}", gap / (d * d));
            }
        }
    }
}

#[test]
fn multipartite_dimension_is_monotone() {
    let dim = |a, b, c| multipartite_dimension(a, b, c).unwrap();
    for a in 0..=4 {
        for b in 0..=4 {
            for c in 0..=4 {
                if a + b + c < 2 {
                    continue;
                }
                let here = dim(a, b, c);
                assert!(dim(a + 1, b, c) >= here);
                assert!(dim(a, b + 1, c) >= here);
                assert!(dim(a, b, c + 1) >= here);
            }
        }
    }
}

#[test]
fn multipartite_parts_must_match_edges() {
    let g = Graph::complete_multipartite(&[vec!["a"], vec!["b", "c"]]).unwrap();
    assert_eq!(g.part_profile(), Some((1, 1, 0)));
    let bare = Graph::new(vec!["a".into(), "b".into(), "c".into()], [(0, 1), (0, 2)]).unwrap();
    assert!(bare.clone().with_parts(vec![vec![0], vec![1, 2]]).is_ok());
    assert!(bare.with_parts(vec![vec![0], vec![1], vec![2]]).is_err());
}

fn random_tree(seed: u64, size: usize) -> PlaneEmbedding {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut coords = vec![[0.0f64, 0.0]];
    let mut edges = Vec::new();
    for v in 1..size {
        let parent = rng.gen_range(0..v);
        let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let [x, y] = coords[parent];
        coords.push([x + theta.cos(), y + theta.sin()]);
        edges.push((parent, v));
    }
    let names = (0..size).map(|i| format!("v{i}")).collect();
    PlaneEmbedding::new(Graph::new(names, edges).unwrap(), coords, DEFAULT_TOLERANCE).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn regularizer_keeps_input_and_is_regular(seed in 0u64..1000, size in 2usize..6, extra in 0usize..2) {
        let g = random_tree(seed, size);
        prop_assume!(g.report().passed);
        let max_deg = (0..size).map(|v| g.degree(v)).max().unwrap();
        let r = max_deg + extra;
        let out = regular_supergraph(&g, r, seed).unwrap();
        prop_assert!(out.is_regular(r));
        prop_assert!(out.report().passed);
        for v in 0..size {
            prop_assert_eq!(out.coords[v], g.coords[v]);
        }
        for (u, v) in g.graph.edges() {
            prop_assert!(out.graph.is_edge(u, v));
        }
        let again = regular_supergraph(&g, r, seed).unwrap();
        prop_assert_eq!(serde_json::to_string(&again).unwrap(), serde_json::to_string(&out).unwrap());
    }
}
