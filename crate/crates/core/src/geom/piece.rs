use crate::error::{Error, Result};
use crate::geom::vec2::{Aabb, Point2, Vec2};
use crate::math::{self, PI, TAU};

/// Traversal direction of a circular arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Ccw,
    Cw,
}

impl Orientation {
    #[inline]
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Ccw => 1.0,
            Orientation::Cw => -1.0,
        }
    }

    #[inline]
    pub fn flip(self) -> Self {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
        }
    }
}

/// Circular arc `center + radius·(cos φ, sin φ)` for φ running from
/// `start_angle` through `sweep` radians in the direction of `orientation`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Arc {
    pub center: Point2,
    pub radius: f64,
    pub start_angle: f64,
    /// Unsigned sweep in `(0, 2π]`.
    pub sweep: f64,
    pub orientation: Orientation,
}

const ANGLE_EPS: f64 = 1e-12;

impl Arc {
    pub fn new(center: Point2, radius: f64, start_angle: f64, sweep: f64, orientation: Orientation) -> Self {
        Arc { center, radius, start_angle, sweep, orientation }
    }

    /// Arc from `start` to `end` around `center`. Coincident endpoints give a
    /// full turn.
    pub fn from_endpoints(center: Point2, start: Point2, end: Point2, orientation: Orientation) -> Result<Self> {
        let r0 = start.dist(center);
        let r1 = end.dist(center);
        if !(r0 > 0.0) || !r0.is_finite() {
            return Err(Error::geometry("arc with non-positive radius"));
        }
        if (r0 - r1).abs() > 1e-9 * r0.max(1.0) {
            return Err(Error::geometry("arc endpoints are not on a common circle"));
        }
        let a0 = (start - center).angle();
        let a1 = (end - center).angle();
        let mut sweep = math::wrap_tau(orientation.sign() * (a1 - a0));
        if sweep < ANGLE_EPS || TAU - sweep < ANGLE_EPS {
            sweep = TAU;
        }
        Ok(Arc::new(center, 0.5 * (r0 + r1), a0, sweep, orientation))
    }

    #[inline]
    pub fn signed_sweep(&self) -> f64 {
        self.orientation.sign() * self.sweep
    }

    #[inline]
    pub fn angle_at(&self, u: f64) -> f64 {
        self.start_angle + self.signed_sweep() * u
    }

    #[inline]
    pub fn end_angle(&self) -> f64 {
        self.angle_at(1.0)
    }

    #[inline]
    pub fn point_at_angle(&self, a: f64) -> Point2 {
        self.center + Vec2::from_angle(a) * self.radius
    }

    /// Offset of angle `a` from the start, measured along the traversal
    /// direction, in `[0, 2π)`.
    #[inline]
    pub fn angle_offset(&self, a: f64) -> f64 {
        math::wrap_tau(self.orientation.sign() * (a - self.start_angle))
    }

    /// Whether the ray from the centre at angle `a` meets the arc.
    pub fn contains_angle(&self, a: f64, tol: f64) -> bool {
        let d = self.angle_offset(a);
        d <= self.sweep + tol || d >= TAU - tol
    }

    /// Normalized parameter of angle `a` (may fall slightly outside `[0,1]`
    /// within `tol`).
    pub fn param_of_angle(&self, a: f64) -> f64 {
        let d = self.angle_offset(a);
        if d > self.sweep && d > 0.5 * (self.sweep + TAU) {
            (d - TAU) / self.sweep
        } else {
            d / self.sweep
        }
    }

    #[inline]
    pub fn tangent_at_angle(&self, a: f64) -> Vec2 {
        Vec2::new(-math::sin(a), math::cos(a)) * self.orientation.sign()
    }

    /// Sub-arc between normalized parameters `u0 < u1`.
    pub fn sub(&self, u0: f64, u1: f64) -> Arc {
        Arc::new(self.center, self.radius, self.angle_at(u0), self.sweep * (u1 - u0), self.orientation)
    }
}

/// One edge of an arc-polygon boundary.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundaryPiece {
    Segment { start: Point2, end: Point2 },
    Arc(Arc),
}

impl BoundaryPiece {
    #[inline]
    pub fn segment(start: Point2, end: Point2) -> Self {
        BoundaryPiece::Segment { start, end }
    }

    #[inline]
    pub fn arc(arc: Arc) -> Self {
        BoundaryPiece::Arc(arc)
    }

    pub fn start(&self) -> Point2 {
        match self {
            BoundaryPiece::Segment { start, .. } => *start,
            BoundaryPiece::Arc(a) => a.point_at_angle(a.start_angle),
        }
    }

    pub fn end(&self) -> Point2 {
        match self {
            BoundaryPiece::Segment { end, .. } => *end,
            BoundaryPiece::Arc(a) => a.point_at_angle(a.end_angle()),
        }
    }

    pub fn length(&self) -> f64 {
        match self {
            BoundaryPiece::Segment { start, end } => start.dist(*end),
            BoundaryPiece::Arc(a) => a.radius * a.sweep,
        }
    }

    pub fn is_arc(&self) -> bool {
        matches!(self, BoundaryPiece::Arc(_))
    }

    pub fn as_arc(&self) -> Option<&Arc> {
        match self {
            BoundaryPiece::Arc(a) => Some(a),
            _ => None,
        }
    }

    /// Signed curvature: `+1/R` for ccw arcs, `-1/R` for cw arcs, 0 for
    /// segments.
    pub fn curvature(&self) -> f64 {
        match self {
            BoundaryPiece::Segment { .. } => 0.0,
            BoundaryPiece::Arc(a) => a.orientation.sign() / a.radius,
        }
    }

    /// Point at normalized arclength parameter `u ∈ [0,1]`.
    pub fn point_at(&self, u: f64) -> Point2 {
        match self {
            BoundaryPiece::Segment { start, end } => start.lerp(*end, u),
            BoundaryPiece::Arc(a) => a.point_at_angle(a.angle_at(u)),
        }
    }

    /// Unit tangent in the direction of traversal.
    pub fn tangent_at(&self, u: f64) -> Vec2 {
        match self {
            BoundaryPiece::Segment { start, end } => (*end - *start).normalized(),
            BoundaryPiece::Arc(a) => a.tangent_at_angle(a.angle_at(u)),
        }
    }

    #[inline]
    pub fn start_tangent(&self) -> Vec2 {
        self.tangent_at(0.0)
    }

    #[inline]
    pub fn end_tangent(&self) -> Vec2 {
        self.tangent_at(1.0)
    }

    /// Normal pointing to the right of the traversal direction; outward for
    /// a ccw-oriented region.
    #[inline]
    pub fn right_normal_at(&self, u: f64) -> Vec2 {
        self.tangent_at(u).perp_cw()
    }

    /// `½ ∮ (x dy − y dx)` along the piece, with coordinates taken relative
    /// to `origin`. Exact for both segments and arcs.
    pub fn green_term(&self, origin: Point2) -> f64 {
        match self {
            BoundaryPiece::Segment { start, end } => 0.5 * (*start - origin).cross(*end - origin),
            BoundaryPiece::Arc(a) => {
                let c = a.center - origin;
                let p0 = a.start_angle;
                let p1 = a.end_angle();
                let r = a.radius;
                0.5 * (r * c.x * (math::sin(p1) - math::sin(p0)) - r * c.y * (math::cos(p1) - math::cos(p0))
                    + r * r * a.signed_sweep())
            }
        }
    }

    /// Closest point on the piece to `p`, with its parameter and distance.
    pub fn closest(&self, p: Point2) -> (Point2, f64, f64) {
        match self {
            BoundaryPiece::Segment { start, end } => {
                let d = *end - *start;
                let l2 = d.norm_sq();
                let u = if l2 > 0.0 { ((p - *start).dot(d) / l2).clamp(0.0, 1.0) } else { 0.0 };
                let q = start.lerp(*end, u);
                (q, u, q.dist(p))
            }
            BoundaryPiece::Arc(a) => {
                let v = p - a.center;
                if v.norm() > 0.0 {
                    let ang = v.angle();
                    if a.contains_angle(ang, 0.0) {
                        let u = a.param_of_angle(ang).clamp(0.0, 1.0);
                        let q = a.point_at_angle(ang);
                        return (q, u, q.dist(p));
                    }
                }
                let s = self.start();
                let e = self.end();
                let ds = s.dist(p);
                let de = e.dist(p);
                if ds <= de {
                    (s, 0.0, ds)
                } else {
                    (e, 1.0, de)
                }
            }
        }
    }

    #[inline]
    pub fn distance(&self, p: Point2) -> f64 {
        self.closest(p).2
    }

    pub fn reversed(&self) -> Self {
        match self {
            BoundaryPiece::Segment { start, end } => BoundaryPiece::segment(*end, *start),
            BoundaryPiece::Arc(a) => BoundaryPiece::Arc(Arc::new(
                a.center,
                a.radius,
                a.end_angle(),
                a.sweep,
                a.orientation.flip(),
            )),
        }
    }

    /// Parallel piece at distance `d` to the right of the traversal
    /// direction. `None` when an arc collapses (radius ≤ `collapse_tol`).
    pub fn offset_right(&self, d: f64, collapse_tol: f64) -> Option<Self> {
        match self {
            BoundaryPiece::Segment { start, end } => {
                let n = (*end - *start).normalized().perp_cw() * d;
                Some(BoundaryPiece::segment(*start + n, *end + n))
            }
            BoundaryPiece::Arc(a) => {
                // Right side of a ccw arc is away from the centre.
                let r = a.radius + a.orientation.sign() * d;
                if r <= collapse_tol {
                    None
                } else {
                    Some(BoundaryPiece::Arc(Arc::new(a.center, r, a.start_angle, a.sweep, a.orientation)))
                }
            }
        }
    }

    /// Sub-piece between normalized parameters `u0 < u1`.
    pub fn sub(&self, u0: f64, u1: f64) -> Self {
        match self {
            BoundaryPiece::Segment { start, end } => {
                BoundaryPiece::segment(start.lerp(*end, u0), start.lerp(*end, u1))
            }
            BoundaryPiece::Arc(a) => BoundaryPiece::Arc(a.sub(u0, u1)),
        }
    }

    pub fn bbox(&self) -> Aabb {
        let mut b = Aabb::empty();
        b.include(self.start());
        b.include(self.end());
        if let BoundaryPiece::Arc(a) = self {
            for k in 0..4 {
                let ang = k as f64 * 0.5 * PI;
                if a.contains_angle(ang, 0.0) {
                    b.include(a.point_at_angle(ang));
                }
            }
        }
        b
    }

    pub fn translated(&self, v: Vec2) -> Self {
        match self {
            BoundaryPiece::Segment { start, end } => BoundaryPiece::segment(*start + v, *end + v),
            BoundaryPiece::Arc(a) => {
                BoundaryPiece::Arc(Arc::new(a.center + v, a.radius, a.start_angle, a.sweep, a.orientation))
            }
        }
    }

    /// Image under `x ↦ λx` (λ > 0).
    pub fn scaled(&self, lambda: f64) -> Self {
        match self {
            BoundaryPiece::Segment { start, end } => BoundaryPiece::segment(*start * lambda, *end * lambda),
            BoundaryPiece::Arc(a) => BoundaryPiece::Arc(Arc::new(
                a.center * lambda,
                a.radius * lambda,
                a.start_angle,
                a.sweep,
                a.orientation,
            )),
        }
    }

    /// Image under the reflection `(x, y) ↦ (2·x0 − x, y)`. Reverses the
    /// traversal orientation of arcs.
    pub fn mirrored_x(&self, x0: f64) -> Self {
        let m = |p: Point2| Vec2::new(2.0 * x0 - p.x, p.y);
        match self {
            BoundaryPiece::Segment { start, end } => BoundaryPiece::segment(m(*start), m(*end)),
            BoundaryPiece::Arc(a) => BoundaryPiece::Arc(Arc::new(
                m(a.center),
                a.radius,
                PI - a.start_angle,
                a.sweep,
                a.orientation.flip(),
            )),
        }
    }
}
