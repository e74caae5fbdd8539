//! Turns a domain spec into a report and the layers needed for a figure.

use cheeger_core::convex::{solve_convex_with, ConvexRegion};
use cheeger_core::gallery::{self, BowTie, PinocchioShape, TwoEars};
use cheeger_core::solver::{check_free_boundary, solve_strip_with, CheegerSolution, SolveOptions};
use cheeger_core::spine::{build_strip, Spine, SpinePiece};
use cheeger_core::{ArcPolygon, Error, Point2, Vec2};

use crate::report::ResultReport;
use crate::spec::{DomainSpec, PieceKind, Theta};

pub struct Solved {
    pub report: ResultReport,
    pub outline: Vec<ArcPolygon>,
    pub inner: Vec<ArcPolygon>,
    pub cheeger: Vec<ArcPolygon>,
    pub r: f64,
}

impl Solved {
    fn new(kind: &str, outline: Vec<ArcPolygon>, cheeger: Vec<ArcPolygon>, h: f64) -> Self {
        let mut report = ResultReport::new(kind);
        report.h = Some(h);
        report.r = Some(1.0 / h);
        Solved { report, outline, inner: Vec::new(), cheeger, r: 1.0 / h }
    }

    fn from_solution(kind: &str, outline: ArcPolygon, sol: CheegerSolution) -> Self {
        let mut s = Solved::new(kind, vec![outline], vec![sol.cheeger_set.clone()], sol.h);
        s.r = sol.r;
        s.report.r = Some(sol.r);
        s.report.residual = Some(sol.residual);
        s.report.iterations = Some(sol.iterations);
        s.report.bounds = sol.bounds.map(Into::into);
        s.report.warnings.extend(sol.warnings.iter().cloned());
        let (q, geo) = (sol.steiner_ratio(), sol.cheeger_ratio());
        let ok = rel(q, sol.h) <= 1e-9 && rel(geo, sol.h) <= 1e-9;
        s.report.check("inner formula ratio", ok, format!("steiner {q:.12}, geometric {geo:.12}, 1/r {:.12}", sol.h));
        s.inner.push(sol.inner_set);
        s
    }

    /// Centers of balls of radius `r` sampled along the inner set boundary.
    pub fn balls(&self, n: usize) -> Vec<(Point2, f64)> {
        self.inner.iter().flat_map(|p| p.sample_boundary(n)).map(|c| (c, self.r)).collect()
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

pub fn solve(spec: &DomainSpec, opts: &SolveOptions) -> Result<Solved, Error> {
    let kind = spec.kind();
    match spec {
        DomainSpec::Strip { halfwidth, spine } => {
            let pieces: Vec<SpinePiece> = spine
                .iter()
                .map(|p| match (p.kind, p.curvature) {
                    (PieceKind::Arc, Some(k)) if k != 0.0 => SpinePiece::arc(p.length, k),
                    _ => SpinePiece::line(p.length),
                })
                .collect();
            let strip = build_strip(Spine::from_pieces(pieces)?, *halfwidth)?;
            let sol = solve_strip_with(&strip, opts)?;
            let mut s = Solved::from_solution(kind, strip.boundary().clone(), sol.clone());
            if let Some(b) = sol.bounds {
                s.report.check(
                    "bounds",
                    b.contains(sol.h),
                    format!("{:.9} ≤ {:.12} ≤ {:.9}", b.krepra_lower, sol.h, b.krepra_upper),
                );
            }
            let (a, p) = (strip.boundary().area(), strip.boundary().perimeter());
            let l = strip.length();
            let (ea, ep) = (2.0 * halfwidth * l, 2.0 * l + 4.0 * halfwidth);
            s.report.check(
                "strip measures",
                rel(a, ea) <= 1e-9 && rel(p, ep) <= 1e-9,
                format!("area {a:.12} vs {ea:.12}, perimeter {p:.12} vs {ep:.12}"),
            );
            let fb = check_free_boundary(&sol, &strip)?;
            s.report.check("free boundary", fb.arcs.len() == 4, format!("{} arcs of radius r", fb.arcs.len()));
            Ok(s)
        }
        DomainSpec::ConvexPolygon { vertices } => {
            let pts: Vec<Point2> = vertices.iter().map(|v| Vec2::new(v[0], v[1])).collect();
            let c = ConvexRegion::from_vertices(&pts)?;
            let sol = solve_convex_with(&c, opts)?;
            let ratio = c.region().perimeter() / c.region().area();
            let h = sol.h;
            let mut s = Solved::from_solution(kind, c.into_region(), sol);
            s.report.check("below domain ratio", h <= ratio * (1.0 + 1e-12), format!("h {h:.12} ≤ P/A {ratio:.12}"));
            Ok(s)
        }
        DomainSpec::Pinocchio { theta, alpha, nose } => {
            let th = match theta {
                Theta::Auto => gallery::solve_pinocchio_theta(),
                Theta::Value(t) => *t,
            };
            let shape = if *nose > 0.0 { PinocchioShape::with_nose(th, *nose)? } else { PinocchioShape::new(th, *alpha)? };
            let region = shape.region().clone();
            let ratio = region.perimeter() / region.area();
            let g = gallery::pinocchio_g(th);
            let mut s = Solved::new(kind, vec![region.clone()], vec![region], ratio);
            s.report.residual = Some(g.abs());
            if g.abs() > 1e-6 {
                s.report.warnings.push(format!("theta = {th} gives |g(theta)| = {:.3e} > 1e-6", g.abs()));
            }
            if g.abs() > 1e-6 || *alpha != 0.0 {
                s.report.warnings.push("the domain is not the self-Cheeger one; h is only the upper bound P/A".into());
            }
            s.report.check("theta root", g.abs() <= 1e-6, format!("theta = {th:.12}, g = {g:.3e}"));
            let r0 = shape.theta.sin();
            s.report.check(
                "ratio equals 1/sin(theta)",
                *alpha != 0.0 || rel(ratio, 1.0 / r0) <= 1e-9,
                format!("P/A = {ratio:.12}, 1/sin(theta) = {:.12}", 1.0 / r0),
            );
            if g.abs() <= 1e-6 {
                let rep = gallery::verify_self_cheeger(th)?;
                s.report.check(
                    "self-cheeger inequality",
                    true,
                    format!("{} samples, min margin {:.3e}", rep.samples, rep.min_ratio_margin),
                );
            }
            Ok(s)
        }
        DomainSpec::TwoEars { theta } => {
            let th = match theta {
                Theta::Auto => gallery::two_ears_theta()?,
                Theta::Value(t) => *t,
            };
            let q = TwoEars::new(th)?;
            let region = q.region().clone();
            let ratio = region.perimeter() / region.area();
            let d = gallery::ears_defect(th);
            let mut s = Solved::new(kind, vec![region.clone()], vec![region], ratio);
            s.report.residual = Some(d.abs());
            if d.abs() > 1e-6 {
                s.report.warnings.push(format!("theta = {th} gives defect {:.3e}; h is only the upper bound P/A", d.abs()));
            }
            s.report.check("theta root", d.abs() <= 1e-6, format!("theta = {th:.12}, defect = {d:.3e}"));
            Ok(s)
        }
        DomainSpec::Bowtie { gap } => {
            let b = BowTie::new(*gap)?;
            let c = b.cheeger_candidate()?;
            let mut s = Solved::new(kind, vec![b.region().clone()], vec![c.set.clone()], c.h);
            let geo = c.set.perimeter() / c.set.area();
            s.report.residual = Some((geo - c.h).abs());
            s.report.check("candidate ratio", rel(geo, c.h) <= 1e-9, format!("P/A = {geo:.12}"));
            s.report.check(
                "tangency and symmetry",
                c.max_tangent_jump <= 1e-9 && c.symmetry_defect <= 1e-9,
                format!("tangent jump {:.1e}, symmetry {:.1e}", c.max_tangent_jump, c.symmetry_defect),
            );
            s.report.check(
                "below triangle",
                c.h < b.h_triangle,
                format!("{:.9} < {:.9}", c.h, b.h_triangle),
            );
            if *gap > 0.0 {
                s.report.warnings.push(
                    "the inner Cheeger formula is not certified for a loose bow-tie; h is the ratio of the rounded-corner candidate".into(),
                );
            }
            Ok(s)
        }
        DomainSpec::TwoBalls {} => {
            let rep = gallery::two_balls_example()?;
            let e = rep.components[rep.cheeger_component].clone();
            let mut s = Solved::new(kind, rep.components.clone(), vec![e], rep.h);
            s.report.residual = Some(0.0);
            s.inner.push(ArcPolygon::disk(Vec2::ZERO, 1.0 - s.r)?);
            s.report.check(
                "union ratio",
                (rep.union_ratio - 30.0 / 13.0).abs() <= 1e-12,
                format!("P/A = {:.15}", rep.union_ratio),
            );
            s.report.check(
                "component ratios",
                (rep.component_ratios[0] - 2.0).abs() <= 1e-12 && (rep.component_ratios[1] - 3.0).abs() <= 1e-12,
                format!("{:?}", rep.component_ratios),
            );
            s.report.check(
                "union of balls is not the Cheeger set",
                rep.union_of_balls_area > rep.cheeger_area,
                format!("{:.9} > {:.9}", rep.union_of_balls_area, rep.cheeger_area),
            );
            Ok(s)
        }
    }
}
