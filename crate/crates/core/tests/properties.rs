use cheeger_core::convex::{solve_convex, ConvexRegion};
use cheeger_core::geom::offset_outward_disk;
use cheeger_core::solver::solve_strip;
use cheeger_core::spine::{build_strip, Spine, SpinePiece, Strip};
use cheeger_core::{Point2, Vec2};
use proptest::prelude::*;
use std::f64::consts::PI;

fn polygon(angles: Vec<f64>, a: f64, b: f64) -> Option<ConvexRegion> {
    let mut t = angles;
    t.sort_by(|x, y| x.partial_cmp(y).unwrap());
    t.dedup_by(|x, y| (*x - *y).abs() < 1e-3);
    if t.len() < 3 || t[0] + 2.0 * PI - t[t.len() - 1] < 1e-3 {
        return None;
    }
    let pts: Vec<Point2> = t.iter().map(|&u| Vec2::new(a * u.cos(), b * u.sin())).collect();
    ConvexRegion::from_vertices(&pts).ok()
}

fn convex() -> impl Strategy<Value = Option<ConvexRegion>> {
    (prop::collection::vec(0.0..2.0 * PI, 3..10), 0.5..2.0f64, 0.5..2.0f64).prop_map(|(t, a, b)| polygon(t, a, b))
}

fn strip() -> impl Strategy<Value = Option<Strip>> {
    prop::collection::vec((2.0..6.0f64, -0.5..0.5f64), 1..3).prop_map(|ps| {
        let pieces = ps.into_iter().map(|(l, k)| if k.abs() < 0.05 { SpinePiece::line(l) } else { SpinePiece::arc(l, k) }).collect();
        build_strip(Spine::from_pieces(pieces).ok()?, 1.0).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn steiner_identities(c in convex(), rho in 0.01..3.0f64) {
        let Some(c) = c else { return Ok(()) };
        let p = c.region();
        let q = offset_outward_disk(p, rho).unwrap();
        let a = p.area() + rho * p.perimeter() + PI * rho * rho;
        prop_assert!((q.area() - a).abs() <= 1e-9 * a);
        let per = p.perimeter() + 2.0 * PI * rho;
        prop_assert!((q.perimeter() - per).abs() <= 1e-9 * per);
    }

    #[test]
    fn convex_scaling(c in convex(), lambda in 0.2..5.0f64) {
        let Some(c) = c else { return Ok(()) };
        let h = solve_convex(&c).unwrap().h;
        let hl = solve_convex(&c.scaled(lambda).unwrap()).unwrap().h;
        prop_assert!((hl * lambda - h).abs() <= 1e-8 * h);
    }

    #[test]
    fn strip_scaling(s in strip(), lambda in 0.5..2.0f64) {
        let Some(s) = s else { return Ok(()) };
        let Ok(sol) = solve_strip(&s) else { return Ok(()) };
        let hl = solve_strip(&s.scaled(lambda).unwrap()).unwrap().h;
        prop_assert!((hl * lambda - sol.h).abs() <= 1e-8 * sol.h);
    }

    /// The disk minimises the ratio among sets of given area, so
    /// `h(Ω) ≥ 2√(π/|Ω|)`, and the Cheeger set obeys `P² ≥ 4π|E|`.
    #[test]
    fn isoperimetric(c in convex()) {
        let Some(c) = c else { return Ok(()) };
        let a = c.region().area();
        let sol = solve_convex(&c).unwrap();
        prop_assert!(sol.h >= 2.0 * (PI / a).sqrt() * (1.0 - 1e-12));
        let e = &sol.cheeger_set;
        prop_assert!(e.perimeter().powi(2) >= 4.0 * PI * e.area() * (1.0 - 1e-12));
        prop_assert!(sol.h <= c.region().perimeter() / a * (1.0 + 1e-12));
    }

    #[test]
    fn ball_path_clearance(s in strip(), r in 0.2..0.95f64, u in (0.0..1.0f64, -1.0..1.0f64, 0.0..1.0f64, -1.0..1.0f64)) {
        let Some(s) = s else { return Ok(()) };
        let l = s.length();
        let (t0, t1) = (r + u.0 * (l - 2.0 * r), r + u.2 * (l - 2.0 * r));
        let (x0, x1) = (s.spine().psi(t0, u.1 * (1.0 - r)), s.spine().psi(t1, u.3 * (1.0 - r)));
        let b = s.boundary();
        prop_assume!(b.distance_to_boundary(x0) >= r && b.distance_to_boundary(x1) >= r);
        let path = s.ball_to_ball_path(r, x0, x1).unwrap();
        if !path.is_empty() {
            prop_assert!(path.start().unwrap().dist(x0) <= 1e-9);
            prop_assert!(path.end().unwrap().dist(x1) <= 1e-9);
        }
        for x in path.sample(200) {
            prop_assert!(b.distance_to_boundary(x) >= r - 1e-9);
        }
        prop_assert!(path.max_curvature() <= 1.0 / r + 1e-9);
    }
}
