//! Certified lower bounds on the reach of closed arc-polygon regions.

use alloc::vec::Vec;

use crate::geom::intersect::intersect;
use crate::geom::piece::{Arc, BoundaryPiece, Orientation};
use crate::geom::polygon::{ArcPolygon, Joint};
use crate::geom::vec2::{Point2, Vec2};

const ANG_TOL: f64 = 1e-9;

/// Lower bound on `reach(closure(p))`.
///
/// `+∞` for convex regions and `0` at a concave vertex. Otherwise the
/// minimum of every concave arc radius and half of every exterior double
/// normal (a chord leaving `∂p` along the outward normal and arriving
/// against the outward normal).
pub fn reach_lower_bound(p: &ArcPolygon) -> f64 {
    if p.is_convex() {
        return f64::INFINITY;
    }
    let n = p.len();
    if (0..n).any(|i| p.joint(i) == Joint::Concave) {
        return 0.0;
    }
    let mut best = f64::INFINITY;
    for pc in p.pieces() {
        if let BoundaryPiece::Arc(a) = pc {
            if a.orientation == Orientation::Cw {
                best = best.min(a.radius);
            }
        }
    }
    let feats = features(p);
    let dmin = 1e-12 * p.diameter();
    for i in 0..feats.len() {
        for j in (i + 1)..feats.len() {
            for d in double_normals(&feats[i], &feats[j]) {
                if d > dmin {
                    best = best.min(0.5 * d);
                }
            }
        }
    }
    best
}

/// Reach bound for a disjoint union of regions: each component's bound and
/// half the gap between every pair of components.
pub fn union_reach_lower_bound(parts: &[ArcPolygon]) -> f64 {
    let mut best = f64::INFINITY;
    for (i, a) in parts.iter().enumerate() {
        best = best.min(reach_lower_bound(a));
        for b in &parts[i + 1..] {
            best = best.min(0.5 * region_gap(a, b));
        }
    }
    best
}

/// Minimum distance between the boundaries of two regions; 0 if they touch
/// or cross.
pub fn region_gap(a: &ArcPolygon, b: &ArcPolygon) -> f64 {
    let mut best = f64::INFINITY;
    let tol = 1e-12 * a.diameter().max(b.diameter());
    for p in a.pieces() {
        for q in b.pieces() {
            best = best.min(piece_distance(p, q, tol));
        }
    }
    best
}

/// Distance between two pieces.
pub fn piece_distance(p: &BoundaryPiece, q: &BoundaryPiece, tol: f64) -> f64 {
    if !intersect(p, q, tol).is_empty() {
        return 0.0;
    }
    let mut best = p
        .distance(q.start())
        .min(p.distance(q.end()))
        .min(q.distance(p.start()))
        .min(q.distance(p.end()));
    // Interior critical points lie on the line through an arc centre normal
    // to the other piece, or on the line of centres.
    let mut probe = |x: Point2, other: &BoundaryPiece| {
        best = best.min(other.distance(x));
    };
    match (p, q) {
        (BoundaryPiece::Arc(a), BoundaryPiece::Segment { .. }) => {
            for x in arc_points_toward(a, q) {
                probe(x, q);
            }
        }
        (BoundaryPiece::Segment { .. }, BoundaryPiece::Arc(b)) => {
            for x in arc_points_toward(b, p) {
                probe(x, p);
            }
        }
        (BoundaryPiece::Arc(a), BoundaryPiece::Arc(b)) => {
            let u = (b.center - a.center).normalized();
            for s in [1.0, -1.0] {
                let x = a.center + u * (s * a.radius);
                if a.contains_angle((x - a.center).angle(), 0.0) {
                    probe(x, q);
                }
                let y = b.center + u * (s * b.radius);
                if b.contains_angle((y - b.center).angle(), 0.0) {
                    probe(y, p);
                }
            }
        }
        _ => {}
    }
    best
}

fn arc_points_toward(a: &Arc, seg: &BoundaryPiece) -> Vec<Point2> {
    let (s0, s1) = (seg.start(), seg.end());
    let n = (s1 - s0).normalized().perp();
    let mut v = Vec::new();
    for s in [1.0, -1.0] {
        let x = a.center + n * (s * a.radius);
        if a.contains_angle((x - a.center).angle(), 0.0) {
            v.push(x);
        }
    }
    v
}

/// Boundary features: pieces and the corners between them.
enum Feature {
    Piece(BoundaryPiece),
    /// Corner point with the outward normal cone `[n0, n0 + turn]` (ccw).
    Corner { at: Point2, n0: Vec2, turn: f64 },
}

fn features(p: &ArcPolygon) -> Vec<Feature> {
    let n = p.len();
    let mut v = Vec::with_capacity(2 * n);
    for i in 0..n {
        let pc = p.pieces()[i];
        v.push(Feature::Piece(pc));
        if p.joint(i) == Joint::Convex {
            v.push(Feature::Corner { at: pc.end(), n0: pc.right_normal_at(1.0), turn: p.turn_at(i) });
        }
    }
    v
}

fn in_cone(dir: Vec2, n0: Vec2, turn: f64) -> bool {
    let a = n0.angle_to(dir);
    a >= -ANG_TOL && a <= turn + ANG_TOL
}

/// Outward normal of piece `pc` at point `x` on it, if `x` lies on the piece.
fn normal_on(pc: &BoundaryPiece, x: Point2, tol: f64) -> Option<Vec2> {
    let (_, u, d) = pc.closest(x);
    if d > tol {
        return None;
    }
    Some(pc.right_normal_at(u))
}

/// Lengths of chords `x → y` with `y − x` along the outward normal at `x`
/// and `x − y` along the outward normal at `y`.
fn double_normals(f: &Feature, g: &Feature) -> Vec<f64> {
    let mut out = Vec::new();
    let mut cands: Vec<(Point2, Point2)> = Vec::new();
    match (f, g) {
        (Feature::Piece(a), Feature::Piece(b)) => piece_piece_candidates(a, b, &mut cands),
        (Feature::Piece(a), Feature::Corner { at, .. }) | (Feature::Corner { at, .. }, Feature::Piece(a)) => {
            for y in feet_from_point(a, *at) {
                cands.push((*at, y));
            }
        }
        (Feature::Corner { at: x, .. }, Feature::Corner { at: y, .. }) => cands.push((*x, *y)),
    }
    let scale = |p: Point2, q: Point2| 1e-9 * (1.0 + p.norm() + q.norm());
    for (x, y) in cands {
        let d = y - x;
        let len = d.norm();
        if len == 0.0 {
            continue;
        }
        let u = d / len;
        let tol = scale(x, y);
        if accepts(f, x, u, tol) && accepts(g, y, -u, tol) {
            out.push(len);
        }
    }
    out
}

/// Whether direction `u` leaves feature `f` at `x` along an outward normal.
fn accepts(f: &Feature, x: Point2, u: Vec2, tol: f64) -> bool {
    match f {
        Feature::Piece(pc) => match normal_on(pc, x, tol) {
            Some(n) => n.dot(u) >= 1.0 - ANG_TOL,
            None => false,
        },
        Feature::Corner { at, n0, turn } => at.dist(x) <= tol && in_cone(u, *n0, *turn),
    }
}

fn feet_from_point(pc: &BoundaryPiece, x: Point2) -> Vec<Point2> {
    match pc {
        BoundaryPiece::Segment { start, end } => {
            let d = *end - *start;
            let l2 = d.norm_sq();
            if l2 == 0.0 {
                return Vec::new();
            }
            let t = (x - *start).dot(d) / l2;
            if (0.0..=1.0).contains(&t) {
                alloc::vec![*start + d * t]
            } else {
                Vec::new()
            }
        }
        BoundaryPiece::Arc(a) => {
            let v = x - a.center;
            if v.norm() == 0.0 {
                return Vec::new();
            }
            let u = v.normalized();
            [a.center + u * a.radius, a.center - u * a.radius]
                .into_iter()
                .filter(|y| a.contains_angle((*y - a.center).angle(), 0.0))
                .collect()
        }
    }
}

fn piece_piece_candidates(a: &BoundaryPiece, b: &BoundaryPiece, out: &mut Vec<(Point2, Point2)>) {
    match (a, b) {
        (BoundaryPiece::Segment { start: a0, end: a1 }, BoundaryPiece::Segment { start: b0, end: b1 }) => {
            // Antiparallel lines: project the overlap of the two segments.
            let da = (*a1 - *a0).normalized();
            let db = (*b1 - *b0).normalized();
            if da.cross(db).abs() > ANG_TOL {
                return;
            }
            let la = (*a1 - *a0).norm();
            let s0 = (*b0 - *a0).dot(da);
            let s1 = (*b1 - *a0).dot(da);
            let lo = s0.min(s1).max(0.0);
            let hi = s0.max(s1).min(la);
            if hi < lo {
                return;
            }
            let nb = da.perp() * (*b0 - *a0).dot(da.perp());
            for s in [lo, hi, 0.5 * (lo + hi)] {
                let x = *a0 + da * s;
                out.push((x, x + nb));
            }
        }
        (BoundaryPiece::Segment { .. }, BoundaryPiece::Arc(arc)) => {
            for y in arc_points_toward(arc, a) {
                if let Some(x) = feet_from_point(a, y).first() {
                    out.push((*x, y));
                }
            }
        }
        (BoundaryPiece::Arc(arc), BoundaryPiece::Segment { .. }) => {
            for x in arc_points_toward(arc, b) {
                if let Some(y) = feet_from_point(b, x).first() {
                    out.push((x, *y));
                }
            }
        }
        (BoundaryPiece::Arc(p), BoundaryPiece::Arc(q)) => {
            let dc = q.center - p.center;
            let dirs: Vec<Vec2> = if dc.norm() > 1e-12 * (p.radius + q.radius) {
                alloc::vec![dc.normalized()]
            } else {
                // Concentric: every radial line is a candidate; probe ends.
                [p.start_angle, p.end_angle(), q.start_angle, q.end_angle()]
                    .into_iter()
                    .map(Vec2::from_angle)
                    .collect()
            };
            for u in dirs {
                for sp in [1.0, -1.0] {
                    for sq in [1.0, -1.0] {
                        let x = p.center + u * (sp * p.radius);
                        let y = q.center + u * (sq * q.radius);
                        if p.contains_angle((x - p.center).angle(), 0.0)
                            && q.contains_angle((y - q.center).angle(), 0.0)
                        {
                            out.push((x, y));
                        }
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::PI;

    #[test]
    fn convex_is_infinite() {
        let s = ArcPolygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap();
        assert_eq!(reach_lower_bound(&s), f64::INFINITY);
    }

    #[test]
    fn u_shape_reach_is_half_slot_width() {
        // Slot of width 0.4 capped by a concave half circle of radius 0.2.
        let r = 0.2;
        let pcs = alloc::vec![
            BoundaryPiece::segment(Vec2::new(0.0, 0.0), Vec2::new(1.4, 0.0)),
            BoundaryPiece::segment(Vec2::new(1.4, 0.0), Vec2::new(1.4, 2.0)),
            BoundaryPiece::segment(Vec2::new(1.4, 2.0), Vec2::new(0.9, 2.0)),
            BoundaryPiece::segment(Vec2::new(0.9, 2.0), Vec2::new(0.9, 1.0)),
            BoundaryPiece::Arc(Arc::new(Vec2::new(0.7, 1.0), r, 0.0, PI, Orientation::Cw)),
            BoundaryPiece::segment(Vec2::new(0.5, 1.0), Vec2::new(0.5, 2.0)),
            BoundaryPiece::segment(Vec2::new(0.5, 2.0), Vec2::new(0.0, 2.0)),
            BoundaryPiece::segment(Vec2::new(0.0, 2.0), Vec2::new(0.0, 0.0)),
        ];
        let p = ArcPolygon::new(pcs).unwrap();
        let b = reach_lower_bound(&p);
        assert!((b - 0.2).abs() < 1e-12, "{b}");
    }

    #[test]
    fn touching_components_have_zero_union_reach() {
        let a = ArcPolygon::disk(Vec2::new(-1.0, 0.0), 1.0).unwrap();
        let b = ArcPolygon::disk(Vec2::new(1.0, 0.0), 1.0).unwrap();
        assert!(union_reach_lower_bound(&[a.clone(), b]) < 1e-9);
        let c = ArcPolygon::disk(Vec2::new(1.5, 0.0), 0.5).unwrap();
        assert!((union_reach_lower_bound(&[a, c]) - 0.5).abs() < 1e-12);
    }
}
