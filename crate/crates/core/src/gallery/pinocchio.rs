//! The Pinocchio domains: a unit disk with a smaller disk glued on the right,
//! and the family obtained by stretching that nose.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::{Arc, ArcPolygon, BoundaryPiece, Orientation, Vec2};
use crate::math::{self, bisect_full, cos, sin, tan, FRAC_PI_2, PI, TAU};
use crate::spine::{Spine, SpinePiece};

/// `P(θ, α)`: the unit disk union a disk of radius `sin θ / cos α` centered at
/// `(cos θ − ρ sin α, 0)`, optionally with a nose of length `nose`.
#[derive(Clone, Debug, PartialEq)]
pub struct PinocchioShape {
    pub theta: f64,
    pub alpha: f64,
    pub nose: f64,
    region: ArcPolygon,
}

fn check_range(theta: f64, alpha: f64) -> Result<()> {
    if !(theta > 0.0 && theta < FRAC_PI_2) {
        return Err(Error::domain(format!("theta = {theta} outside (0, π/2)")));
    }
    if !(alpha >= 0.0 && alpha <= FRAC_PI_2 - theta + 1e-15) {
        return Err(Error::domain(format!("alpha = {alpha} outside [0, π/2 − θ]")));
    }
    Ok(())
}

/// Closed-form `(perimeter, area)` of `P(θ, α)`.
pub fn pinocchio_measures(theta: f64, alpha: f64) -> Result<(f64, f64)> {
    check_range(theta, alpha)?;
    let (s, c) = (sin(theta), cos(theta));
    let ca = cos(alpha);
    let p = 2.0 * (PI - theta) + (PI - 2.0 * alpha) * s / ca;
    let a = (PI - theta) + s * (c - s * tan(alpha)) + s * s / (ca * ca) * (FRAC_PI_2 - alpha);
    Ok((p, a))
}

/// `P(θ)·sin θ − A(θ)` at `α = 0`; its root is the self-Cheeger angle.
pub fn g(theta: f64) -> f64 {
    let (s, c) = (sin(theta), cos(theta));
    2.0 * (PI - theta) * s + FRAC_PI_2 * s * s - (PI - theta) - s * c
}

pub fn g_prime(theta: f64) -> f64 {
    let (s, c) = (sin(theta), cos(theta));
    2.0 * (PI - theta) * c + s * (2.0 * s + PI * c - 1.0)
}

/// Unique root of `g` on `(0, π/2)`.
pub fn solve_pinocchio_theta() -> f64 {
    let (g0, g1) = (g(0.0), g(FRAC_PI_2));
    debug_assert!(g0 < 0.0 && g1 > 0.0);
    debug_assert!((1..=1000).all(|i| g_prime(FRAC_PI_2 * i as f64 / 1001.0) > 0.0));
    bisect_full(g, 0.0, FRAC_PI_2).map(|r| r.x).unwrap_or(f64::NAN)
}

/// Sampled evidence that `g` is increasing on `(0, π/2)`.
pub fn g_monotone_samples(n: usize) -> bool {
    (1..=n).all(|i| g_prime(FRAC_PI_2 * i as f64 / (n + 1) as f64) > 0.0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SelfCheegerReport {
    pub theta0: f64,
    pub samples: usize,
    /// Smallest `rhs − lhs` of the reduced trigonometric inequality.
    pub min_trig_margin: f64,
    /// Smallest `P(θ₀,α) sin θ₀ − A(θ₀,α)`.
    pub min_ratio_margin: f64,
}

/// `π/2 (1 − cos α)² < α(1 − 2cos α) + sin α cos α` and
/// `P(θ₀, α) sin θ₀ > A(θ₀, α)` on a uniform grid of `(0, π/2 − θ₀]`.
pub fn verify_self_cheeger(theta0: f64) -> Result<SelfCheegerReport> {
    verify_self_cheeger_on(theta0, 10_000)
}

pub fn verify_self_cheeger_on(theta0: f64, samples: usize) -> Result<SelfCheegerReport> {
    check_range(theta0, 0.0)?;
    let top = FRAC_PI_2 - theta0;
    let s0 = sin(theta0);
    let mut rep = SelfCheegerReport { theta0, samples, min_trig_margin: f64::INFINITY, min_ratio_margin: f64::INFINITY };
    for i in 1..=samples {
        let a = top * i as f64 / samples as f64;
        let ca = cos(a);
        let lhs = FRAC_PI_2 * (1.0 - 2.0 * ca + ca * ca);
        let rhs = a * (1.0 - 2.0 * ca) + sin(a) * ca;
        let (p, ar) = pinocchio_measures(theta0, a)?;
        let trig = rhs - lhs;
        let ratio = p * s0 - ar;
        if !(trig > 0.0) || !(ratio > 0.0) {
            return Err(Error::violation(
                "pinocchio self-cheeger",
                format!("alpha = {a}: trig margin {trig}, ratio margin {ratio}"),
            ));
        }
        rep.min_trig_margin = rep.min_trig_margin.min(trig);
        rep.min_ratio_margin = rep.min_ratio_margin.min(ratio);
    }
    Ok(rep)
}

/// `(area, perimeter, perimeter/area)` of the stretched domain `P_t`.
pub fn pinocchio_family(t: f64) -> Result<(f64, f64, f64)> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::domain("nose length must be finite and nonnegative"));
    }
    let th = solve_pinocchio_theta();
    let r0 = sin(th);
    let (p0, a0) = pinocchio_measures(th, 0.0)?;
    let a = a0 + 2.0 * r0 * t;
    let p = p0 + 2.0 * t;
    Ok((a, p, p / a))
}

impl PinocchioShape {
    pub fn new(theta: f64, alpha: f64) -> Result<Self> {
        check_range(theta, alpha)?;
        let (s, c) = (sin(theta), cos(theta));
        let rho = s / cos(alpha);
        let center = Vec2::new(c - rho * sin(alpha), 0.0);
        let face = Arc::new(Vec2::ZERO, 1.0, theta, TAU - 2.0 * theta, Orientation::Ccw);
        let nose = Arc::new(center, rho, -(FRAC_PI_2 - alpha), PI - 2.0 * alpha, Orientation::Ccw);
        let region = ArcPolygon::new(alloc::vec![BoundaryPiece::Arc(face), BoundaryPiece::Arc(nose)])?;
        Ok(PinocchioShape { theta, alpha, nose: 0.0, region })
    }

    /// `P_t` with a straight nose: a stadium of half-width `sin θ` glued on.
    pub fn with_nose(theta: f64, t: f64) -> Result<Self> {
        Self::with_bent_nose(theta, &[SpinePiece::line(t)])
    }

    /// `P_t` with the nose swept along an arc-spline of total length `t`.
    pub fn with_bent_nose(theta: f64, spine: &[SpinePiece]) -> Result<Self> {
        check_range(theta, 0.0)?;
        let t: f64 = spine.iter().map(|p| p.length).sum();
        if !(t >= 0.0) || !t.is_finite() {
            return Err(Error::domain("nose length must be finite and nonnegative"));
        }
        if t == 0.0 {
            return Self::new(theta, 0.0);
        }
        let (s, c) = (sin(theta), cos(theta));
        let sp = Spine::new(spine.to_vec(), Vec2::new(c, 0.0), Vec2::new(1.0, 0.0))?;
        if sp.max_abs_curvature() * s >= 1.0 {
            return Err(Error::NotADiffeomorphism(format!(
                "nose curvature {} too large for half-width {s}",
                sp.max_abs_curvature()
            )));
        }
        let mut pieces: Vec<BoundaryPiece> = Vec::new();
        pieces.push(BoundaryPiece::Arc(Arc::new(Vec2::ZERO, 1.0, theta, TAU - 2.0 * theta, Orientation::Ccw)));
        pieces.extend(sp.level_curve(-s, 0.0, t));
        let cap = Arc::new(sp.point(t), s, sp.heading(t) - FRAC_PI_2, PI, Orientation::Ccw);
        pieces.push(BoundaryPiece::Arc(cap));
        pieces.extend(sp.level_curve(s, t, 0.0));
        let region = ArcPolygon::new(pieces)?;
        Ok(PinocchioShape { theta, alpha: 0.0, nose: t, region })
    }

    #[inline]
    pub fn region(&self) -> &ArcPolygon {
        &self.region
    }

    /// Radius of the nose disk.
    pub fn nose_radius(&self) -> f64 {
        sin(self.theta) / cos(self.alpha)
    }

    /// The two points where the nose meets the unit circle.
    pub fn corners(&self) -> [Vec2; 2] {
        let (s, c) = (sin(self.theta), cos(self.theta));
        [Vec2::new(c, -s), Vec2::new(c, s)]
    }
}

/// The self-Cheeger Pinocchio `P₀` and its nose radius `r₀`.
pub fn self_cheeger_pinocchio() -> Result<(PinocchioShape, f64)> {
    let th = solve_pinocchio_theta();
    Ok((PinocchioShape::new(th, 0.0)?, math::sin(th)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn measures_match_geometry() {
        for &(th, a) in &[(0.531, 0.2), (0.3, 0.0), (1.0, 0.4), (0.531, FRAC_PI_2 - 0.531)] {
            let (p, ar) = pinocchio_measures(th, a).unwrap();
            let sh = PinocchioShape::new(th, a).unwrap();
            assert!((sh.region().perimeter() - p).abs() < 1e-9);
            assert!((sh.region().area() - ar).abs() < 1e-9);
        }
    }

    #[test]
    fn alpha_limit_is_unit_disk() {
        let th = 0.7;
        let (p, a) = pinocchio_measures(th, FRAC_PI_2 - th).unwrap();
        assert!((p - TAU).abs() < 1e-12 && (a - PI).abs() < 1e-12);
    }

    #[test]
    fn range_is_enforced() {
        assert!(matches!(pinocchio_measures(0.0, 0.0), Err(Error::DomainError(_))));
        assert!(matches!(pinocchio_measures(0.5, 1.2), Err(Error::DomainError(_))));
    }

    #[test]
    fn theta_root() {
        assert!((g(0.0) + PI).abs() < 1e-12);
        assert!((g(FRAC_PI_2) - PI).abs() < 1e-12);
        assert!(g_monotone_samples(1000));
        let th = solve_pinocchio_theta();
        assert!(g(th).abs() < 1e-14);
        assert!((th - 0.531).abs() < 5e-3);
        let (p, a) = pinocchio_measures(th, 0.0).unwrap();
        assert!((p / a - 1.0 / sin(th)).abs() < 1e-12);
    }

    #[test]
    fn self_cheeger_grid() {
        let rep = verify_self_cheeger(solve_pinocchio_theta()).unwrap();
        assert!(rep.min_trig_margin > 0.0 && rep.min_ratio_margin > 0.0);
    }

    #[test]
    fn family_ratio_is_constant() {
        let (_, _, q0) = pinocchio_family(0.0).unwrap();
        let r0 = sin(solve_pinocchio_theta());
        assert!((q0 - 1.0 / r0).abs() < 1e-12);
        for i in 0..=20 {
            let (_, _, q) = pinocchio_family(0.5 * i as f64).unwrap();
            assert!((q - q0).abs() < 1e-12);
        }
        let (a2, _, _) = pinocchio_family(2.0).unwrap();
        let (a0, _, _) = pinocchio_family(0.0).unwrap();
        assert!((a2 - a0 - 4.0 * r0).abs() < 1e-12);
    }

    #[test]
    fn noses_match_closed_form() {
        let th = solve_pinocchio_theta();
        let (a, p, _) = pinocchio_family(2.0).unwrap();
        let straight = PinocchioShape::with_nose(th, 2.0).unwrap();
        assert!((straight.region().area() - a).abs() < 1e-9);
        assert!((straight.region().perimeter() - p).abs() < 1e-9);
        let bent = PinocchioShape::with_bent_nose(th, &[SpinePiece::arc(1.0, 0.8), SpinePiece::arc(1.0, -0.8)]).unwrap();
        assert!((bent.region().area() - a).abs() < 1e-9);
        assert!((bent.region().perimeter() - p).abs() < 1e-9);
    }
}
