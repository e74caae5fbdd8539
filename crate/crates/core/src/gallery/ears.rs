//! The face with two ears: a unit disk with congruent disks of radius
//! `sin θ` glued symmetrically at `(±cos θ, 0)`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::{Arc, ArcPolygon, BoundaryPiece, Orientation, Vec2};
use crate::math::{bisect_full, cos, sin, FRAC_PI_2, PI};

#[derive(Clone, Debug, PartialEq)]
pub struct TwoEars {
    pub theta: f64,
    /// Nose lengths of the left and right ears.
    pub stretch: (f64, f64),
    region: ArcPolygon,
}

/// Closed-form `(perimeter, area)` of `Q(θ)`.
pub fn two_ears_measures(theta: f64) -> Result<(f64, f64)> {
    if !(theta > 0.0 && theta < FRAC_PI_2) {
        return Err(Error::domain(format!("theta = {theta} outside (0, π/2)")));
    }
    let s = sin(theta);
    let p = 2.0 * (PI - 2.0 * theta) + 2.0 * PI * s;
    let a = PI - 2.0 * theta + sin(2.0 * theta) + PI * s * s;
    Ok((p, a))
}

/// `P(Q(θ))·sin θ − A(Q(θ))`, continuous on `[0, π/2]`.
pub fn ears_defect(theta: f64) -> f64 {
    let s = sin(theta);
    (2.0 * (PI - 2.0 * theta) + 2.0 * PI * s) * s - (PI - 2.0 * theta + sin(2.0 * theta) + PI * s * s)
}

/// Root of `P(Q(θ))/A(Q(θ)) = 1/sin θ` on `(0, π/2)`.
pub fn two_ears_theta() -> Result<f64> {
    let (lo, hi) = (ears_defect(0.0), ears_defect(FRAC_PI_2));
    if !(lo < 0.0 && hi > 0.0) {
        return Err(Error::NoRoot);
    }
    bisect_full(ears_defect, 0.0, FRAC_PI_2).map(|r| r.x).ok_or(Error::NoRoot)
}

impl TwoEars {
    pub fn new(theta: f64) -> Result<Self> {
        Self::stretched(theta, 0.0, 0.0)
    }

    /// `Q(θ)` with the left ear pulled out by `left` and the right by `right`.
    pub fn stretched(theta: f64, left: f64, right: f64) -> Result<Self> {
        two_ears_measures(theta)?;
        if !(left >= 0.0 && right >= 0.0) || !left.is_finite() || !right.is_finite() {
            return Err(Error::domain("ear stretches must be finite and nonnegative"));
        }
        let (s, c) = (sin(theta), cos(theta));
        let mut pcs: Vec<BoundaryPiece> = Vec::new();
        let face = |a0: f64| BoundaryPiece::Arc(Arc::new(Vec2::ZERO, 1.0, a0, PI - 2.0 * theta, Orientation::Ccw));
        // Right ear: lower edge, cap, upper edge.
        let rc = Vec2::new(c + right, 0.0);
        if right > 0.0 {
            pcs.push(BoundaryPiece::segment(Vec2::new(c, -s), Vec2::new(c + right, -s)));
        }
        pcs.push(BoundaryPiece::Arc(Arc::new(rc, s, -FRAC_PI_2, PI, Orientation::Ccw)));
        if right > 0.0 {
            pcs.push(BoundaryPiece::segment(Vec2::new(c + right, s), Vec2::new(c, s)));
        }
        pcs.push(face(theta));
        let lc = Vec2::new(-c - left, 0.0);
        if left > 0.0 {
            pcs.push(BoundaryPiece::segment(Vec2::new(-c, s), Vec2::new(-c - left, s)));
        }
        pcs.push(BoundaryPiece::Arc(Arc::new(lc, s, FRAC_PI_2, PI, Orientation::Ccw)));
        if left > 0.0 {
            pcs.push(BoundaryPiece::segment(Vec2::new(-c - left, -s), Vec2::new(-c, -s)));
        }
        pcs.push(face(PI + theta));
        Ok(TwoEars { theta, stretch: (left, right), region: ArcPolygon::new(pcs)? })
    }

    #[inline]
    pub fn region(&self) -> &ArcPolygon {
        &self.region
    }

    /// Ear radius `sin θ`.
    pub fn ear_radius(&self) -> f64 {
        sin(self.theta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn measures_match_geometry() {
        for th in [0.2, 0.6, 1.1] {
            let (p, a) = two_ears_measures(th).unwrap();
            let q = TwoEars::new(th).unwrap();
            assert!((q.region().perimeter() - p).abs() < 1e-9);
            assert!((q.region().area() - a).abs() < 1e-9);
        }
    }

    #[test]
    fn root_is_self_cheeger_candidate() {
        assert!(ears_defect(0.0) < 0.0 && ears_defect(FRAC_PI_2) > 0.0);
        let th = two_ears_theta().unwrap();
        let (p, a) = two_ears_measures(th).unwrap();
        assert!((p / a - 1.0 / sin(th)).abs() < 1e-10);
    }

    #[test]
    fn stretching_keeps_the_ratio() {
        let th = two_ears_theta().unwrap();
        let base = TwoEars::new(th).unwrap();
        let q0 = base.region().perimeter() / base.region().area();
        for (l, r) in [(0.5, 0.0), (0.0, 1.5), (2.0, 0.7)] {
            let q = TwoEars::stretched(th, l, r).unwrap();
            let ratio = q.region().perimeter() / q.region().area();
            assert!((ratio - q0).abs() < 1e-9);
        }
    }
}
