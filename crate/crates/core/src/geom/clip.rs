//! Clipping of convex arc-polygon boundaries against half-planes and
//! wedge-restricted disks.

use alloc::vec::Vec;

use crate::geom::intersect::intersect;
use crate::geom::piece::{Arc, BoundaryPiece, Orientation};
use crate::geom::vec2::{Point2, Vec2};
use crate::math::TAU;

/// Splits `pc` at every contact with the pieces in `cutters`, ignoring
/// cuts closer than `tol` to an existing break.
fn split_piece(pc: &BoundaryPiece, cutters: &[BoundaryPiece], tol: f64, out: &mut Vec<BoundaryPiece>) {
    let len = pc.length();
    let mut us: Vec<f64> = Vec::new();
    for c in cutters {
        for h in intersect(pc, c, tol) {
            if h.u * len > tol && (1.0 - h.u) * len > tol {
                us.push(h.u);
            }
        }
    }
    us.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut prev = 0.0;
    for u in us {
        if (u - prev) * len > tol {
            out.push(pc.sub(prev, u));
            prev = u;
        }
    }
    out.push(pc.sub(prev, 1.0));
}

/// Keeps sub-pieces whose midpoint satisfies `keep`, bridging every gap with
/// `bridge(from, to)`. Returns an empty list when nothing is kept.
fn clip_with<K, B>(pieces: &[BoundaryPiece], cutters: &[BoundaryPiece], tol: f64, keep: K, bridge: B) -> Vec<BoundaryPiece>
where
    K: Fn(Point2) -> bool,
    B: Fn(Point2, Point2) -> BoundaryPiece,
{
    let mut split = Vec::new();
    for pc in pieces {
        split_piece(pc, cutters, tol, &mut split);
    }
    let kept: Vec<BoundaryPiece> = split.into_iter().filter(|p| keep(p.point_at(0.5))).collect();
    if kept.is_empty() {
        return kept;
    }
    let n = kept.len();
    let mut out = Vec::with_capacity(n + 2);
    for i in 0..n {
        out.push(kept[i]);
        let a = kept[i].end();
        let b = kept[(i + 1) % n].start();
        if a.dist(b) > 1e-3 * tol {
            out.push(bridge(a, b));
        }
    }
    out
}

/// Intersection with the half-plane `{x : n·x ≤ c}` (`n` unit).
pub fn clip_halfplane(pieces: &[BoundaryPiece], n: Vec2, c: f64, extent: f64, tol: f64) -> Vec<BoundaryPiece> {
    let foot = n * c;
    let t = n.perp() * (4.0 * extent);
    let line = BoundaryPiece::segment(foot - t, foot + t);
    clip_with(pieces, &[line], tol, |x| n.dot(x) <= c + tol, BoundaryPiece::segment)
}

/// Removes the part of the region that lies in the wedge of directions
/// `[a0, a0 + sweep]` (ccw) around `center` and farther than `radius` from
/// it. Gaps are bridged by ccw arcs of that circle.
pub fn clip_wedge_disk(
    pieces: &[BoundaryPiece],
    center: Point2,
    radius: f64,
    a0: f64,
    sweep: f64,
    extent: f64,
    tol: f64,
) -> Vec<BoundaryPiece> {
    let circle = BoundaryPiece::Arc(Arc::new(center, radius, 0.0, TAU, Orientation::Ccw));
    let ray = |a: f64| BoundaryPiece::segment(center, center + Vec2::from_angle(a) * (4.0 * extent + radius));
    let cutters = [circle, ray(a0), ray(a0 + sweep)];
    let wedge = Arc::new(center, 1.0, a0, sweep, Orientation::Ccw);
    let keep = |x: Point2| {
        let v = x - center;
        !(v.norm() > radius + tol && wedge.contains_angle(v.angle(), 0.0))
    };
    let bridge = |p: Point2, q: Point2| {
        let on = |x: Point2| ((x - center).norm() - radius).abs() <= 1e3 * tol;
        if on(p) && on(q) {
            let a = Arc::new(
                center,
                radius,
                (p - center).angle(),
                crate::math::wrap_tau((q - center).angle() - (p - center).angle()),
                Orientation::Ccw,
            );
            if a.sweep > 0.0 {
                return BoundaryPiece::Arc(a);
            }
        }
        BoundaryPiece::segment(p, q)
    };
    clip_with(pieces, &cutters, tol, keep, bridge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::polygon::ArcPolygon;
    use crate::math::PI;

    #[test]
    fn halfplane_cuts_square_in_half() {
        let s = ArcPolygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap();
        let out = clip_halfplane(s.pieces(), Vec2::new(1.0, 0.0), 0.5, 2.0, 1e-12);
        let p = ArcPolygon::new(out).unwrap();
        assert!((p.area() - 0.5).abs() < 1e-14);
    }

    #[test]
    fn wedge_disk_rounds_a_corner() {
        let s = ArcPolygon::rectangle(-1.0, -1.0, 1.0, 1.0).unwrap();
        let out = clip_wedge_disk(s.pieces(), Vec2::ZERO, 1.0, 0.0, 0.5 * PI, 3.0, 1e-12);
        let p = ArcPolygon::new(out).unwrap();
        assert!((p.area() - (3.0 + 0.25 * PI)).abs() < 1e-12);
    }
}
