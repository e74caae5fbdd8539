//! Pairwise intersection of boundary pieces.

use alloc::vec::Vec;

use crate::geom::piece::{Arc, BoundaryPiece};
use crate::geom::vec2::Point2;
use crate::math::{self, TAU};

/// A contact between two pieces. `u` and `v` are the normalized parameters on
/// the first and second piece. `overlap` marks the end of a shared
/// one-dimensional stretch (collinear segments, co-circular arcs).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hit {
    pub point: Point2,
    pub u: f64,
    pub v: f64,
    pub overlap: bool,
}

pub fn intersect(a: &BoundaryPiece, b: &BoundaryPiece, tol: f64) -> Vec<Hit> {
    match (a, b) {
        (BoundaryPiece::Segment { start: a0, end: a1 }, BoundaryPiece::Segment { start: b0, end: b1 }) => {
            seg_seg(*a0, *a1, *b0, *b1, tol)
        }
        (BoundaryPiece::Segment { start, end }, BoundaryPiece::Arc(arc)) => seg_arc(*start, *end, arc, tol),
        (BoundaryPiece::Arc(arc), BoundaryPiece::Segment { start, end }) => seg_arc(*start, *end, arc, tol)
            .into_iter()
            .map(|h| Hit { point: h.point, u: h.v, v: h.u, overlap: h.overlap })
            .collect(),
        (BoundaryPiece::Arc(p), BoundaryPiece::Arc(q)) => arc_arc(p, q, tol),
    }
}

fn seg_seg(a0: Point2, a1: Point2, b0: Point2, b1: Point2, tol: f64) -> Vec<Hit> {
    let mut out = Vec::new();
    let da = a1 - a0;
    let db = b1 - b0;
    let la = da.norm();
    let lb = db.norm();
    if la == 0.0 || lb == 0.0 {
        return out;
    }
    let den = da.cross(db);
    if den.abs() <= 1e-13 * la * lb {
        // Parallel: only collinear overlap matters.
        if (b0 - a0).cross(da).abs() / la > tol {
            return out;
        }
        let ub0 = (b0 - a0).dot(da) / (la * la);
        let ub1 = (b1 - a0).dot(da) / (la * la);
        let lo = ub0.min(ub1).max(0.0);
        let hi = ub0.max(ub1).min(1.0);
        let ut = tol / la;
        if hi < lo - ut {
            return out;
        }
        let v_of = |u: f64| (a0 + da * u - b0).dot(db) / (lb * lb);
        if (hi - lo) * la <= tol {
            let u = 0.5 * (lo + hi);
            out.push(Hit { point: a0 + da * u, u, v: v_of(u), overlap: false });
        } else {
            out.push(Hit { point: a0 + da * lo, u: lo, v: v_of(lo), overlap: true });
            out.push(Hit { point: a0 + da * hi, u: hi, v: v_of(hi), overlap: true });
        }
        return out;
    }
    let w = b0 - a0;
    let u = w.cross(db) / den;
    let v = w.cross(da) / den;
    if u >= -tol / la && u <= 1.0 + tol / la && v >= -tol / lb && v <= 1.0 + tol / lb {
        out.push(Hit { point: a0 + da * u, u: u.clamp(0.0, 1.0), v: v.clamp(0.0, 1.0), overlap: false });
    }
    out
}

fn seg_arc(a0: Point2, a1: Point2, arc: &Arc, tol: f64) -> Vec<Hit> {
    let mut out = Vec::new();
    let d = a1 - a0;
    let l = d.norm();
    if l == 0.0 {
        return out;
    }
    let dir = d / l;
    let f = a0 - arc.center;
    // Foot of the perpendicular from the centre, as arclength along the line.
    let s_foot = -f.dot(dir);
    let off = f.cross(dir).abs();
    let r = arc.radius;
    let mut ss: [f64; 2] = [0.0; 2];
    let n;
    if off > r + tol {
        return out;
    } else if off >= r - tol * 1e-3 {
        ss[0] = s_foot;
        n = 1;
    } else {
        let h = math::sqrt((r - off) * (r + off));
        ss[0] = s_foot - h;
        ss[1] = s_foot + h;
        n = 2;
    }
    let atol = tol / r;
    for &s in &ss[..n] {
        if s < -tol || s > l + tol {
            continue;
        }
        let p = a0 + dir * s;
        let ang = (p - arc.center).angle();
        if arc.contains_angle(ang, atol) {
            let v = arc.param_of_angle(ang).clamp(0.0, 1.0);
            out.push(Hit { point: p, u: (s / l).clamp(0.0, 1.0), v, overlap: false });
        }
    }
    out
}

fn arc_arc(p: &Arc, q: &Arc, tol: f64) -> Vec<Hit> {
    let mut out = Vec::new();
    let dc = q.center - p.center;
    let d = dc.norm();
    let (r1, r2) = (p.radius, q.radius);
    if d <= tol && (r1 - r2).abs() <= tol {
        return co_circular(p, q, tol);
    }
    if d > r1 + r2 + tol || d < (r1 - r2).abs() - tol || d == 0.0 {
        return out;
    }
    let a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    let h2 = r1 * r1 - a * a;
    let ex = dc / d;
    let base = p.center + ex * a;
    let pts: Vec<Point2> = if h2 <= (tol * 1e-3) * (tol * 1e-3) {
        alloc::vec![base]
    } else {
        let h = math::sqrt(h2);
        alloc::vec![base + ex.perp() * h, base - ex.perp() * h]
    };
    for x in pts {
        let a1 = (x - p.center).angle();
        let a2 = (x - q.center).angle();
        if p.contains_angle(a1, tol / r1) && q.contains_angle(a2, tol / r2) {
            out.push(Hit {
                point: x,
                u: p.param_of_angle(a1).clamp(0.0, 1.0),
                v: q.param_of_angle(a2).clamp(0.0, 1.0),
                overlap: false,
            });
        }
    }
    out
}

fn co_circular(p: &Arc, q: &Arc, tol: f64) -> Vec<Hit> {
    // Work in p's ccw angular frame: p covers [lo, lo+sweep].
    let (p_lo, p_len) = ccw_interval(p);
    let (q_lo, q_len) = ccw_interval(q);
    let atol = tol / p.radius;
    let mut out = Vec::new();
    for shift in [-TAU, 0.0, TAU] {
        let q0 = math::wrap_tau(q_lo - p_lo) + shift;
        let lo = q0.max(0.0);
        let hi = (q0 + q_len).min(p_len);
        if hi < lo - atol {
            continue;
        }
        let mk = |t: f64, overlap: bool| {
            let ang = p_lo + t;
            Hit {
                point: p.point_at_angle(ang),
                u: p.param_of_angle(ang).clamp(0.0, 1.0),
                v: q.param_of_angle(ang).clamp(0.0, 1.0),
                overlap,
            }
        };
        if hi - lo <= atol {
            out.push(mk(0.5 * (lo + hi), false));
        } else {
            out.push(mk(lo, true));
            out.push(mk(hi, true));
        }
    }
    out
}

fn ccw_interval(a: &Arc) -> (f64, f64) {
    let lo = if a.orientation.sign() > 0.0 { a.start_angle } else { a.end_angle() };
    (math::wrap_tau(lo), a.sweep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::piece::Orientation;
    use crate::geom::vec2::Vec2;

    #[test]
    fn crossing_segments() {
        let a = BoundaryPiece::segment(Vec2::new(0.0, 0.0), Vec2::new(2.0, 2.0));
        let b = BoundaryPiece::segment(Vec2::new(0.0, 2.0), Vec2::new(2.0, 0.0));
        let h = intersect(&a, &b, 1e-12);
        assert_eq!(h.len(), 1);
        assert!(h[0].point.dist(Vec2::new(1.0, 1.0)) < 1e-15);
    }

    #[test]
    fn collinear_overlap_reports_two_ends() {
        let a = BoundaryPiece::segment(Vec2::new(0.0, 0.0), Vec2::new(2.0, 0.0));
        let b = BoundaryPiece::segment(Vec2::new(3.0, 0.0), Vec2::new(1.0, 0.0));
        let h = intersect(&a, &b, 1e-12);
        assert_eq!(h.len(), 2);
        assert!(h.iter().all(|x| x.overlap));
    }

    #[test]
    fn segment_through_arc() {
        let arc = BoundaryPiece::Arc(Arc::new(Vec2::ZERO, 1.0, 0.0, core::f64::consts::PI, Orientation::Ccw));
        let s = BoundaryPiece::segment(Vec2::new(-2.0, 0.5), Vec2::new(2.0, 0.5));
        assert_eq!(intersect(&s, &arc, 1e-12).len(), 2);
        let s = BoundaryPiece::segment(Vec2::new(-2.0, -0.5), Vec2::new(2.0, -0.5));
        assert!(intersect(&s, &arc, 1e-12).is_empty());
    }

    #[test]
    fn two_circles() {
        let p = Arc::new(Vec2::ZERO, 1.0, 0.0, TAU, Orientation::Ccw);
        let q = Arc::new(Vec2::new(1.0, 0.0), 1.0, 0.0, TAU, Orientation::Cw);
        let h = intersect(&BoundaryPiece::Arc(p), &BoundaryPiece::Arc(q), 1e-12);
        assert_eq!(h.len(), 2);
        for x in h {
            assert!((x.point.x - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn co_circular_arcs_overlap() {
        let p = Arc::new(Vec2::ZERO, 1.0, 0.0, 2.0, Orientation::Ccw);
        let q = Arc::new(Vec2::ZERO, 1.0, 3.0, 2.0, Orientation::Cw);
        let h = intersect(&BoundaryPiece::Arc(p), &BoundaryPiece::Arc(q), 1e-12);
        assert_eq!(h.len(), 2);
        assert!(h.iter().all(|x| x.overlap));
    }
}
