//! Cheeger sets of convex arc-polygons.
//!
//! For a convex region the Cheeger set is `E_r ⊕ B_r`, where `E_r` is the
//! inner parallel body at distance `r` and `r` solves `|E_r| = πr²`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::clip::{clip_halfplane, clip_wedge_disk};
use crate::geom::{offset_outward_disk, Arc, ArcPolygon, BoundaryPiece, Point2, Vec2};
use crate::math::{self, FRAC_PI_2, PI};
use crate::solver::{bisect_inner_formula, ratio_scan, CheegerSolution, ScanResult, SolveOptions};

/// A convex arc-polygon.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexRegion {
    region: ArcPolygon,
}

impl ConvexRegion {
    pub fn new(region: ArcPolygon) -> Result<Self> {
        if !region.is_convex() {
            return Err(Error::NotConvex("boundary turns clockwise somewhere".into()));
        }
        Ok(ConvexRegion { region })
    }

    pub fn from_vertices(vertices: &[Point2]) -> Result<Self> {
        Self::new(ArcPolygon::from_vertices(vertices)?)
    }

    pub fn disk(center: Point2, radius: f64) -> Result<Self> {
        Self::new(ArcPolygon::disk(center, radius)?)
    }

    #[inline]
    pub fn region(&self) -> &ArcPolygon {
        &self.region
    }

    pub fn into_region(self) -> ArcPolygon {
        self.region
    }

    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        Ok(ConvexRegion { region: self.region.scaled(lambda)? })
    }
}

/// Arcs split so that no piece turns by more than a quarter circle.
fn quarter_arcs(a: &Arc) -> Vec<Arc> {
    let k = libm::ceil(a.sweep / FRAC_PI_2).max(1.0) as usize;
    (0..k).map(|i| a.sub(i as f64 / k as f64, (i + 1) as f64 / k as f64)).collect()
}

/// Points of `c` at distance at least `r` from `∂c`.
pub fn inner_parallel_body(c: &ConvexRegion, r: f64) -> Result<ConvexRegion> {
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::domain("inner offset must be finite and nonnegative"));
    }
    if r == 0.0 {
        return Ok(c.clone());
    }
    let region = &c.region;
    let bb = region.bbox();
    let diam = bb.diagonal();
    let tol = 1e-12 * diam;
    let pad = diam;
    let box_pts = [
        Vec2::new(bb.min.x - pad, bb.min.y - pad),
        Vec2::new(bb.max.x + pad, bb.min.y - pad),
        Vec2::new(bb.max.x + pad, bb.max.y + pad),
        Vec2::new(bb.min.x - pad, bb.max.y + pad),
    ];
    let mut pieces: Vec<BoundaryPiece> =
        (0..4).map(|i| BoundaryPiece::segment(box_pts[i], box_pts[(i + 1) % 4])).collect();
    let extent = 3.0 * diam;

    let mut caps: Vec<Arc> = Vec::new();
    let mut planes: Vec<(Vec2, f64)> = Vec::new();
    for pc in region.pieces() {
        match pc {
            BoundaryPiece::Segment { start, .. } => {
                let n = pc.right_normal_at(0.0);
                planes.push((n, n.dot(*start) - r));
            }
            BoundaryPiece::Arc(a) => {
                for q in quarter_arcs(a) {
                    for ang in [q.start_angle, q.end_angle()] {
                        let n = Vec2::from_angle(ang);
                        planes.push((n, n.dot(q.center) + q.radius - r));
                    }
                    if q.radius - r > tol {
                        caps.push(q);
                    }
                }
            }
        }
    }
    for (n, off) in planes {
        pieces = clip_halfplane(&pieces, n, off, extent, tol);
        if pieces.is_empty() {
            return Err(Error::EmptyInnerSet(r));
        }
    }
    for q in caps {
        pieces = clip_wedge_disk(&pieces, q.center, q.radius - r, q.start_angle, q.sweep, extent, tol);
        if pieces.is_empty() {
            return Err(Error::EmptyInnerSet(r));
        }
    }
    let poly = match ArcPolygon::new_trusted(pieces) {
        Ok(p) => p,
        Err(_) => return Err(Error::EmptyInnerSet(r)),
    };
    if poly.area() <= 1e-24 * diam * diam {
        return Err(Error::EmptyInnerSet(r));
    }
    Ok(ConvexRegion { region: poly })
}

/// Largest `r` with a nonempty inner parallel body.
pub fn inradius(c: &ConvexRegion) -> f64 {
    let mut lo = 0.0;
    let mut hi = math::sqrt(c.region.area() / PI);
    if inner_parallel_body(c, hi).is_ok() {
        return hi;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if inner_parallel_body(c, mid).is_ok() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Cheeger constant and Cheeger set of a convex region.
pub fn solve_convex(c: &ConvexRegion) -> Result<CheegerSolution> {
    solve_convex_with(c, &SolveOptions::default())
}

pub fn solve_convex_with(c: &ConvexRegion, opts: &SolveOptions) -> Result<CheegerSolution> {
    let hi = inradius(c);
    if !(hi > 0.0) {
        return Err(Error::EmptyRegion);
    }
    let inner = |r: f64| inner_parallel_body(c, r).map(|e| e.into_region());
    let sol = bisect_inner_formula(inner, hi, opts)?;
    let e = offset_outward_disk(&sol.inner, sol.r)?;
    let diam = c.region.diameter();
    for x in e.sample_boundary(512) {
        if c.region.distance_to_boundary(x) < -1e-9 * diam {
            return Err(Error::violation(
                "cheeger set containment",
                alloc::format!("point ({}, {}) lies outside the domain", x.x, x.y),
            ));
        }
    }
    Ok(CheegerSolution::assemble(sol, e, None))
}

/// Grid minimization of `P(E(r))/|E(r)|` over the one-parameter family
/// `E(r) = E_r ⊕ B_r`, evaluated through the Steiner identities.
pub fn ratio_scan_convex(c: &ConvexRegion, grid: usize) -> Result<ScanResult> {
    let hi = inradius(c);
    ratio_scan(
        |r| inner_parallel_body(c, r).ok().map(|e| (e.region.area(), e.region.perimeter())),
        hi,
        grid,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::sqrt;

    fn triangle() -> ConvexRegion {
        let h = sqrt(3.0) / 2.0;
        ConvexRegion::from_vertices(&[Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(0.5, h)]).unwrap()
    }

    #[test]
    fn square_inner_body() {
        let s = ConvexRegion::new(ArcPolygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap()).unwrap();
        let e = inner_parallel_body(&s, 0.2).unwrap();
        assert!((e.region().area() - 0.36).abs() < 1e-14);
        assert!((e.region().perimeter() - 2.4).abs() < 1e-14);
    }

    #[test]
    fn disk_inner_body() {
        let d = ConvexRegion::disk(Vec2::new(0.3, -0.2), 1.0).unwrap();
        let e = inner_parallel_body(&d, 0.4).unwrap();
        assert!((e.region().area() - PI * 0.36).abs() < 1e-12);
        assert!((e.region().perimeter() - 2.0 * PI * 0.6).abs() < 1e-12);
    }

    #[test]
    fn triangle_inner_body_is_similar() {
        let t = triangle();
        let e = inner_parallel_body(&t, 0.1).unwrap();
        let rin = sqrt(3.0) / 6.0;
        let k = (rin - 0.1) / rin;
        assert!((e.region().area() - k * k * t.region().area()).abs() < 1e-14);
        assert!((inradius(&t) - rin).abs() < 1e-12);
    }

    #[test]
    fn empty_beyond_inradius() {
        let s = ConvexRegion::new(ArcPolygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap()).unwrap();
        assert!(matches!(inner_parallel_body(&s, 0.5), Err(Error::EmptyInnerSet(_))));
        assert!(matches!(inner_parallel_body(&s, 0.7), Err(Error::EmptyInnerSet(_))));
    }

    #[test]
    fn stadium_inner_body() {
        // Stadium: rectangle 2×2 capped by half disks of radius 1.
        let pcs = alloc::vec![
            BoundaryPiece::segment(Vec2::new(-1.0, -1.0), Vec2::new(1.0, -1.0)),
            BoundaryPiece::Arc(Arc::new(Vec2::new(1.0, 0.0), 1.0, -FRAC_PI_2, PI, crate::geom::Orientation::Ccw)),
            BoundaryPiece::segment(Vec2::new(1.0, 1.0), Vec2::new(-1.0, 1.0)),
            BoundaryPiece::Arc(Arc::new(Vec2::new(-1.0, 0.0), 1.0, FRAC_PI_2, PI, crate::geom::Orientation::Ccw)),
        ];
        let c = ConvexRegion::new(ArcPolygon::new(pcs).unwrap()).unwrap();
        let e = inner_parallel_body(&c, 0.25).unwrap();
        let exp = 2.0 * 1.5 + PI * 0.75 * 0.75;
        assert!((e.region().area() - exp).abs() < 1e-12, "{}", e.region().area());
    }

    #[test]
    fn unit_square_solution() {
        let s = ConvexRegion::new(ArcPolygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap()).unwrap();
        let sol = solve_convex(&s).unwrap();
        let r = 1.0 / (2.0 + sqrt(PI));
        assert!((sol.r - r).abs() < 1e-12);
    }

    #[test]
    fn rejects_nonconvex() {
        let v = [
            Vec2::new(0.0, 0.0),
            Vec2::new(2.0, 0.0),
            Vec2::new(2.0, 1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(1.0, 2.0),
            Vec2::new(0.0, 2.0),
        ];
        assert!(matches!(ConvexRegion::from_vertices(&v), Err(Error::NotConvex(_))));
    }
}
