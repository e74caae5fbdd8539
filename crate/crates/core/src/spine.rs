//! Spinal curves with piecewise-constant curvature and the strips they
//! generate.
//!
//! A strip is the image of `Ψ(t, ρ) = γ(t) + ρ ν(t)` on `[0, L] × [−s, s]`,
//! where `ν` is the left unit normal of the spine `γ`. Parallel curves of a
//! circular arc are circular arcs, so every strip boundary is an exact
//! arc-polygon.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{Arc, ArcPolygon, BoundaryPiece, Orientation, Point2, Vec2};
use crate::math::{self, FRAC_PI_2, PI};

/// One spine piece: a straight segment (`curvature == 0`) or a circular arc.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinePiece {
    pub length: f64,
    pub curvature: f64,
}

impl SpinePiece {
    pub fn line(length: f64) -> Self {
        SpinePiece { length, curvature: 0.0 }
    }

    pub fn arc(length: f64, curvature: f64) -> Self {
        SpinePiece { length, curvature }
    }
}

/// Arclength-parametrized C^{1,1} curve made of segments and arcs.
#[derive(Clone, Debug, PartialEq)]
pub struct Spine {
    pieces: Vec<SpinePiece>,
    start: Point2,
    heading: f64,
    /// Arclength, point and heading at the start of each piece.
    frames: Vec<(f64, Point2, f64)>,
    length: f64,
}

#[inline]
fn left_normal(heading: f64) -> Vec2 {
    Vec2::new(-math::sin(heading), math::cos(heading))
}

fn advance(p: Point2, heading: f64, k: f64, u: f64) -> Point2 {
    if k == 0.0 {
        p + Vec2::from_angle(heading) * u
    } else {
        let c = p + left_normal(heading) / k;
        c - left_normal(heading + k * u) / k
    }
}

impl Spine {
    pub fn new(pieces: Vec<SpinePiece>, start: Point2, direction: Vec2) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::geometry("spine has no pieces"));
        }
        if !start.is_finite() || !direction.is_finite() || direction.norm() == 0.0 {
            return Err(Error::geometry("spine start or direction is not finite"));
        }
        for (i, p) in pieces.iter().enumerate() {
            if !(p.length > 0.0) || !p.length.is_finite() || !p.curvature.is_finite() {
                return Err(Error::geometry(format!("spine piece {i} has invalid length or curvature")));
            }
        }
        let heading = direction.angle();
        let mut frames = Vec::with_capacity(pieces.len());
        let (mut s, mut p, mut h) = (0.0, start, heading);
        for pc in &pieces {
            frames.push((s, p, h));
            p = advance(p, h, pc.curvature, pc.length);
            h += pc.curvature * pc.length;
            s += pc.length;
        }
        let spine = Spine { pieces, start, heading, frames, length: s };
        if spine.point(0.0).dist(spine.point(s)) <= 1e-12 * s {
            return Err(Error::geometry("spine is closed: start and end coincide"));
        }
        Ok(spine)
    }

    /// Spine starting at the origin heading along +x.
    pub fn from_pieces(pieces: Vec<SpinePiece>) -> Result<Self> {
        Self::new(pieces, Vec2::ZERO, Vec2::new(1.0, 0.0))
    }

    pub fn straight(length: f64) -> Result<Self> {
        Self::from_pieces(alloc::vec![SpinePiece::line(length)])
    }

    pub fn circular(curvature: f64, length: f64) -> Result<Self> {
        Self::from_pieces(alloc::vec![SpinePiece::arc(length, curvature)])
    }

    #[inline]
    pub fn pieces(&self) -> &[SpinePiece] {
        &self.pieces
    }

    #[inline]
    pub fn length(&self) -> f64 {
        self.length
    }

    #[inline]
    pub fn start_point(&self) -> Point2 {
        self.start
    }

    #[inline]
    pub fn start_direction(&self) -> Vec2 {
        Vec2::from_angle(self.heading)
    }

    pub fn max_abs_curvature(&self) -> f64 {
        self.pieces.iter().map(|p| p.curvature.abs()).fold(0.0, f64::max)
    }

    /// Piece index and local arclength for `t`, clamped to `[0, L]`.
    fn locate(&self, t: f64) -> (usize, f64) {
        let t = t.clamp(0.0, self.length);
        let idx = match self.frames.binary_search_by(|f| f.0.partial_cmp(&t).unwrap()) {
            Ok(i) => i,
            Err(i) => i.saturating_sub(1),
        };
        let idx = idx.min(self.pieces.len() - 1);
        (idx, (t - self.frames[idx].0).min(self.pieces[idx].length))
    }

    pub fn heading(&self, t: f64) -> f64 {
        let (i, u) = self.locate(t);
        self.frames[i].2 + self.pieces[i].curvature * u
    }

    pub fn point(&self, t: f64) -> Point2 {
        let (i, u) = self.locate(t);
        let (_, p, h) = self.frames[i];
        advance(p, h, self.pieces[i].curvature, u)
    }

    pub fn tangent(&self, t: f64) -> Vec2 {
        Vec2::from_angle(self.heading(t))
    }

    /// Left unit normal `ν(t)`.
    pub fn normal(&self, t: f64) -> Vec2 {
        left_normal(self.heading(t))
    }

    pub fn curvature(&self, t: f64) -> f64 {
        self.pieces[self.locate(t).0].curvature
    }

    /// `Ψ(t, ρ) = γ(t) + ρ ν(t)`.
    pub fn psi(&self, t: f64, rho: f64) -> Point2 {
        self.point(t) + self.normal(t) * rho
    }

    /// The parallel curve `Ψ(·, ρ)` between `t0` and `t1` as boundary pieces,
    /// traversed from `t0` to `t1` (either order).
    pub fn level_curve(&self, rho: f64, t0: f64, t1: f64) -> Vec<BoundaryPiece> {
        if t0 > t1 {
            return self.level_curve(rho, t1, t0).iter().rev().map(|p| p.reversed()).collect();
        }
        let mut out = Vec::new();
        for (i, pc) in self.pieces.iter().enumerate() {
            let (s0, p, h) = self.frames[i];
            let a = (t0 - s0).max(0.0);
            let b = (t1 - s0).min(pc.length);
            if b - a <= 1e-14 * self.length.max(1.0) {
                continue;
            }
            let k = pc.curvature;
            if k == 0.0 {
                let n = left_normal(h) * rho;
                let d = Vec2::from_angle(h);
                out.push(BoundaryPiece::segment(p + d * a + n, p + d * b + n));
            } else {
                let c = p + left_normal(h) / k;
                let m = rho - 1.0 / k;
                let off = if m > 0.0 { FRAC_PI_2 } else { -FRAC_PI_2 };
                let orient = if k > 0.0 { Orientation::Ccw } else { Orientation::Cw };
                let whole = Arc::new(c, m.abs(), h + k * a + off, k.abs() * (b - a), orient);
                let parts = libm::ceil(whole.sweep / PI).max(1.0) as usize;
                for j in 0..parts {
                    let sub = whole.sub(j as f64 / parts as f64, (j + 1) as f64 / parts as f64);
                    out.push(BoundaryPiece::Arc(sub));
                }
            }
        }
        out
    }

    /// Parameters `(t, ρ)` with `Ψ(t, ρ) = x` and `|ρ| ≤ max_rho`, if any.
    pub fn invert(&self, x: Point2, max_rho: f64) -> Option<(f64, f64)> {
        let tol = 1e-12 * (1.0 + self.length);
        let mut best: Option<(f64, f64)> = None;
        for (i, pc) in self.pieces.iter().enumerate() {
            let (s0, p, h) = self.frames[i];
            let k = pc.curvature;
            let u = if k == 0.0 {
                (x - p).dot(Vec2::from_angle(h))
            } else {
                let c = p + left_normal(h) / k;
                let v = x - c;
                if v.norm() == 0.0 {
                    continue;
                }
                let nu = v.normalized() * -k.signum();
                let phi = nu.angle() - FRAC_PI_2;
                let half = 0.5 * k * pc.length;
                (half + math::wrap_pi(phi - h - half)) / k
            };
            if u < -tol || u > pc.length + tol {
                continue;
            }
            let t = (s0 + u).clamp(0.0, self.length);
            let rho = (x - self.point(t)).dot(self.normal(t));
            if rho.abs() <= max_rho + tol && self.psi(t, rho).dist(x) <= 1e-9 * (1.0 + x.norm())
                && best.is_none_or(|b| rho.abs() < b.1.abs()) {
                    best = Some((t, rho));
                }
        }
        best
    }

    /// Arclength `t` with `(Ψ(t, ρ) − γ(0))·γ'(0) = r`, first crossing from
    /// the start. `None` if the level never gets that far from `σ(0)`.
    pub fn trim_from_start(&self, rho: f64, r: f64) -> Option<f64> {
        let o = self.point(0.0);
        let d = self.tangent(0.0);
        let g = |t: f64| (self.psi(t, rho) - o).dot(d) - r;
        first_crossing(&g, 0.0, self.length, self.sample_count())
    }

    /// Arclength `t` with `(Ψ(t, ρ) − γ(L))·γ'(L) = −r`, last crossing
    /// before the end.
    pub fn trim_from_end(&self, rho: f64, r: f64) -> Option<f64> {
        let l = self.length;
        let o = self.point(l);
        let d = self.tangent(l);
        let g = |s: f64| -(self.psi(l - s, rho) - o).dot(d) - r;
        first_crossing(&g, 0.0, l, self.sample_count()).map(|s| l - s)
    }

    fn sample_count(&self) -> usize {
        (64 * self.pieces.len()).clamp(256, 20_000)
    }

    /// Image under `x ↦ λx`.
    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::domain("scale factor must be positive"));
        }
        let pieces = self
            .pieces
            .iter()
            .map(|p| SpinePiece { length: p.length * lambda, curvature: p.curvature / lambda })
            .collect();
        Spine::new(pieces, self.start * lambda, self.start_direction())
    }
}

/// First `t` in `[lo, hi]` where `g` turns nonnegative, refined by bisection.
fn first_crossing<G: Fn(f64) -> f64>(g: &G, lo: f64, hi: f64, n: usize) -> Option<f64> {
    if g(lo) >= 0.0 {
        return Some(lo);
    }
    let mut a = lo;
    for k in 1..=n {
        let b = lo + (hi - lo) * k as f64 / n as f64;
        if g(b) >= 0.0 {
            return math::bisect_full(g, a, b).map(|r| r.x);
        }
        a = b;
    }
    None
}

/// Sampling-based injectivity evidence for `Ψ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StripCertificate {
    /// Boundary simple and every sampled pair of well-separated parameters
    /// mapped to distinct points.
    pub injective: bool,
    /// Smallest sampled `|Ψ(t,ρ) − Ψ(t',ρ')|` over pairs with
    /// `|t − t'| ≥ 0.01 L`.
    pub min_clearance: f64,
    /// `min (1 − ρκ)` over the closed parameter rectangle.
    pub jacobian_min: f64,
    pub samples: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StripOptions {
    pub samples: usize,
    pub seed: u64,
}

impl Default for StripOptions {
    fn default() -> Self {
        StripOptions { samples: 10_000, seed: 0x5eed_c4ee }
    }
}

/// Tubular neighbourhood of half-width `s` around a spine.
#[derive(Clone, Debug, PartialEq)]
pub struct Strip {
    spine: Spine,
    halfwidth: f64,
    boundary: ArcPolygon,
    certificate: StripCertificate,
}

pub fn build_strip(spine: Spine, s: f64) -> Result<Strip> {
    build_strip_with(spine, s, &StripOptions::default())
}

pub fn build_strip_with(spine: Spine, s: f64, opts: &StripOptions) -> Result<Strip> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::domain("half-width must be positive"));
    }
    let kmax = spine.max_abs_curvature();
    if s * kmax >= 1.0 {
        return Err(Error::NotADiffeomorphism(format!(
            "half-width {s} times curvature {kmax} is not below 1"
        )));
    }
    let l = spine.length();
    let mut pieces = spine.level_curve(-s, 0.0, l);
    let lower_end = pieces.last().unwrap().end();
    let upper = spine.level_curve(s, l, 0.0);
    pieces.push(BoundaryPiece::segment(lower_end, upper[0].start()));
    let upper_end = upper.last().unwrap().end();
    pieces.extend(upper);
    pieces.push(BoundaryPiece::segment(upper_end, pieces[0].start()));
    let boundary = ArcPolygon::new(pieces)?;

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut min_clearance = f64::INFINITY;
    let sep = 0.01 * l;
    for _ in 0..opts.samples {
        let t = rng.gen_range(0.0..=l);
        let mut t2 = rng.gen_range(0.0..=l);
        while (t - t2).abs() < sep {
            t2 = rng.gen_range(0.0..=l);
        }
        let a = spine.psi(t, rng.gen_range(-s..=s));
        let b = spine.psi(t2, rng.gen_range(-s..=s));
        min_clearance = min_clearance.min(a.dist(b));
    }
    let certificate = StripCertificate {
        injective: min_clearance > 0.0,
        min_clearance,
        jacobian_min: 1.0 - s * kmax,
        samples: opts.samples,
    };
    if !certificate.injective {
        return Err(Error::SelfIntersecting("two separated parameters share an image point".into()));
    }
    Ok(Strip { spine, halfwidth: s, boundary, certificate })
}

impl Strip {
    #[inline]
    pub fn spine(&self) -> &Spine {
        &self.spine
    }

    #[inline]
    pub fn halfwidth(&self) -> f64 {
        self.halfwidth
    }

    #[inline]
    pub fn boundary(&self) -> &ArcPolygon {
        &self.boundary
    }

    #[inline]
    pub fn certificate(&self) -> &StripCertificate {
        &self.certificate
    }

    #[inline]
    pub fn length(&self) -> f64 {
        self.spine.length()
    }

    /// Length measured in units of the half-width.
    #[inline]
    pub fn normalized_length(&self) -> f64 {
        self.spine.length() / self.halfwidth
    }

    /// `(2sL, 2L + 4s)`, independent of the spine's shape.
    pub fn measures(&self) -> (f64, f64) {
        let l = self.length();
        let s = self.halfwidth;
        (2.0 * s * l, 2.0 * l + 4.0 * s)
    }

    /// `1 − ρ κ(t)`.
    pub fn jacobian(&self, t: f64, rho: f64) -> Result<f64> {
        let l = self.length();
        if !(0.0..=l).contains(&t) || !(rho.abs() <= self.halfwidth) {
            return Err(Error::domain(format!("(t, ρ) = ({t}, {rho}) outside [0, {l}] × [−s, s]")));
        }
        Ok(1.0 - rho * self.spine.curvature(t))
    }

    /// Area of the sub-strip over a finite union of spine intervals.
    pub fn sub_strip_measure(&self, intervals: &[(f64, f64)]) -> f64 {
        let l = self.length();
        let mut iv: Vec<(f64, f64)> = intervals
            .iter()
            .map(|&(a, b)| (a.max(0.0), b.min(l)))
            .filter(|(a, b)| b > a)
            .collect();
        iv.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        let mut total = 0.0;
        let mut cur: Option<(f64, f64)> = None;
        for (a, b) in iv {
            match cur {
                Some((c0, c1)) if a <= c1 => cur = Some((c0, c1.max(b))),
                Some((c0, c1)) => {
                    total += c1 - c0;
                    cur = Some((a, b));
                }
                None => cur = Some((a, b)),
            }
        }
        if let Some((c0, c1)) = cur {
            total += c1 - c0;
        }
        2.0 * self.halfwidth * total
    }

    /// Same strip under `x ↦ λx`.
    pub fn scaled(&self, lambda: f64) -> Result<Strip> {
        let opts = StripOptions { samples: self.certificate.samples, ..StripOptions::default() };
        build_strip_with(self.spine.scaled(lambda)?, self.halfwidth * lambda, &opts)
    }

    /// Path of ball centres from `x0` to `x1` keeping `B_r` inside the
    /// strip: slide along the level of each endpoint until its ball touches
    /// `σ(0)`'s parallel at distance `r`, then join the two along that line.
    pub fn ball_to_ball_path(&self, r: f64, x0: Point2, x1: Point2) -> Result<Path> {
        self.ball_to_ball_path_with(r, x0, x1, 1000)
    }

    pub fn ball_to_ball_path_with(&self, r: f64, x0: Point2, x1: Point2, samples: usize) -> Result<Path> {
        let s = self.halfwidth;
        if !(r > 0.0) || r > s {
            return Err(Error::domain(format!("ball radius {r} must lie in (0, {s}]")));
        }
        let scale = self.boundary.diameter();
        for x in [x0, x1] {
            if !(self.boundary.distance_to_boundary(x) >= r - 1e-12 * scale) {
                return Err(Error::BallNotContained { x: x.x, y: x.y, radius: r });
            }
        }
        if x0.dist(x1) <= 1e-15 * scale {
            return Ok(Path { pieces: Vec::new() });
        }
        let not_inside = |x: Point2| Error::BallNotContained { x: x.x, y: x.y, radius: r };
        let (t0, r0) = self.spine.invert(x0, s).ok_or_else(|| not_inside(x0))?;
        let (t1, r1) = self.spine.invert(x1, s).ok_or_else(|| not_inside(x1))?;
        let mut pieces = Vec::new();
        if (r0 - r1).abs() <= 1e-12 * s {
            pieces.extend(self.spine.level_curve(r0, t0, t1));
        } else {
            let a0 = self.spine.trim_from_start(r0, r).ok_or(Error::NoRoot)?;
            let a1 = self.spine.trim_from_start(r1, r).ok_or(Error::NoRoot)?;
            pieces.extend(self.spine.level_curve(r0, t0, a0));
            let p = pieces.last().map(|q: &BoundaryPiece| q.end()).unwrap_or(x0);
            let second = self.spine.level_curve(r1, a1, t1);
            let q = second.first().map(|q| q.start()).unwrap_or(x1);
            pieces.push(BoundaryPiece::segment(p, q));
            pieces.extend(second);
        }
        let path = Path { pieces };
        let kmax = path.max_curvature();
        if kmax > 1.0 / r + 1e-9 {
            return Err(Error::violation("path curvature", format!("{kmax} exceeds 1/r = {}", 1.0 / r)));
        }
        for (k, x) in path.sample(samples).into_iter().enumerate() {
            let d = self.boundary.distance_to_boundary(x);
            if d < r - 1e-9 {
                return Err(Error::violation(
                    "path clearance",
                    format!("sample {k} at ({}, {}) has clearance {d} < {r}", x.x, x.y),
                ));
            }
        }
        Ok(path)
    }
}

/// `(area, perimeter)` of a strip.
pub fn strip_measures(st: &Strip) -> (f64, f64) {
    st.measures()
}

/// Open chain of segments and arcs.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Path {
    pub pieces: Vec<BoundaryPiece>,
}

impl Path {
    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn length(&self) -> f64 {
        self.pieces.iter().map(|p| p.length()).sum()
    }

    pub fn start(&self) -> Option<Point2> {
        self.pieces.first().map(|p| p.start())
    }

    pub fn end(&self) -> Option<Point2> {
        self.pieces.last().map(|p| p.end())
    }

    pub fn max_curvature(&self) -> f64 {
        self.pieces.iter().map(|p| p.curvature().abs()).fold(0.0, f64::max)
    }

    /// `n` points equally spaced in arclength, endpoints included.
    pub fn sample(&self, n: usize) -> Vec<Point2> {
        let total = self.length();
        if self.pieces.is_empty() || n == 0 {
            return Vec::new();
        }
        let mut out = Vec::with_capacity(n);
        let mut idx = 0;
        let mut acc = 0.0;
        for k in 0..n {
            let s = if n == 1 { 0.0 } else { total * k as f64 / (n - 1) as f64 };
            while idx + 1 < self.pieces.len() && s > acc + self.pieces[idx].length() {
                acc += self.pieces[idx].length();
                idx += 1;
            }
            let l = self.pieces[idx].length();
            let u = if l > 0.0 { ((s - acc) / l).clamp(0.0, 1.0) } else { 0.0 };
            out.push(self.pieces[idx].point_at(u));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    #[test]
    fn straight_strip_is_rectangle() {
        let st = build_strip(Spine::straight(10.0).unwrap(), 1.0).unwrap();
        let b = st.boundary();
        assert!((b.area() - 20.0).abs() < 1e-12);
        assert!((b.perimeter() - 24.0).abs() < 1e-12);
        assert!(b.contains(Vec2::new(5.0, 0.9)));
        assert!(!b.contains(Vec2::new(5.0, 1.1)));
    }

    #[test]
    fn circular_strip_is_annular_sector() {
        // Turning angle κL = π/2: a quarter of the annulus 1 < |x − c| < 3.
        let st = build_strip(Spine::circular(0.5, PI).unwrap(), 1.0).unwrap();
        let a = 0.25 * PI * (9.0 - 1.0);
        assert!((st.boundary().area() - a).abs() < 1e-12);
        assert!((st.boundary().area() - 2.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn s_curve_measures() {
        let sp = Spine::from_pieces(alloc::vec![SpinePiece::arc(6.0, 0.5), SpinePiece::arc(6.0, -0.5)]).unwrap();
        let st = build_strip(sp, 1.0).unwrap();
        assert!((st.boundary().area() - 24.0).abs() < 1e-9 * 24.0);
        assert!((st.boundary().perimeter() - 28.0).abs() < 1e-9 * 28.0);
        assert!(st.certificate().injective);
    }

    #[test]
    fn curvature_too_large_for_width() {
        let sp = Spine::circular(1.0, 2.0).unwrap();
        assert!(matches!(build_strip(sp, 1.0), Err(Error::NotADiffeomorphism(_))));
    }

    #[test]
    fn overlapping_spine_is_rejected() {
        let sp = Spine::circular(0.5, 4.0 * PI + 1.0).unwrap();
        let r = build_strip(sp, 0.9);
        assert!(matches!(r, Err(Error::SelfIntersecting(_))), "{:?}", r.map(|s| *s.certificate()));
    }

    #[test]
    fn jacobian_values() {
        let st = build_strip(Spine::circular(0.5, 3.0).unwrap(), 1.0).unwrap();
        assert!((st.jacobian(1.0, 0.6).unwrap() - 0.7).abs() < 1e-15);
        assert_eq!(st.jacobian(2.0, 0.0).unwrap(), 1.0);
        assert!(st.jacobian(4.0, 0.0).is_err());
        let st = build_strip(Spine::circular(-1.0, 1.0).unwrap(), 0.95).unwrap();
        assert!((st.jacobian(0.5, 0.9).unwrap() - 1.9).abs() < 1e-15);
    }

    #[test]
    fn sub_strip_intervals_merge() {
        let st = build_strip(Spine::straight(10.0).unwrap(), 1.0).unwrap();
        assert_eq!(st.sub_strip_measure(&[(2.0, 5.0)]), 6.0);
        assert_eq!(st.sub_strip_measure(&[]), 0.0);
        assert_eq!(st.sub_strip_measure(&[(0.0, 10.0)]), 20.0);
        assert_eq!(st.sub_strip_measure(&[(1.0, 3.0), (2.0, 4.0), (8.0, 12.0)]), 10.0);
    }

    #[test]
    fn inversion_round_trip() {
        let sp = Spine::from_pieces(alloc::vec![
            SpinePiece::line(1.5),
            SpinePiece::arc(2.0, 0.7),
            SpinePiece::arc(3.0, -0.4)
        ])
        .unwrap();
        for &(t, rho) in &[(0.3, 0.2), (2.1, -0.9), (4.9, 0.5), (6.4, -0.1)] {
            let (t2, r2) = sp.invert(sp.psi(t, rho), 1.0).unwrap();
            assert!((t - t2).abs() < 1e-12 && (rho - r2).abs() < 1e-12, "{t} {rho} -> {t2} {r2}");
        }
    }

    #[test]
    fn straight_path_between_centres() {
        let st = build_strip(Spine::straight(10.0).unwrap(), 1.0).unwrap();
        let p = st.ball_to_ball_path(0.5, Vec2::new(1.0, 0.0), Vec2::new(9.0, 0.0)).unwrap();
        assert_eq!(p.len(), 1);
        assert!((p.length() - 8.0).abs() < 1e-12);
        let e = st.ball_to_ball_path(0.5, Vec2::new(1.0, 0.0), Vec2::new(1.0, 0.0)).unwrap();
        assert!(e.is_empty());
    }

    #[test]
    fn path_rejects_ball_outside() {
        let st = build_strip(Spine::straight(10.0).unwrap(), 1.0).unwrap();
        let r = st.ball_to_ball_path(0.5, Vec2::new(1.0, 0.7), Vec2::new(9.0, 0.0));
        assert!(matches!(r, Err(Error::BallNotContained { .. })));
    }

    #[test]
    fn curved_path_has_three_pieces() {
        let st = build_strip(Spine::circular(0.4, 8.0).unwrap(), 1.0).unwrap();
        let x0 = st.spine().psi(3.0, 0.2);
        let x1 = st.spine().psi(6.0, -0.3);
        let p = st.ball_to_ball_path(0.6, x0, x1).unwrap();
        assert_eq!(p.len(), 3);
        assert!(p.start().unwrap().dist(x0) < 1e-12);
        assert!(p.end().unwrap().dist(x1) < 1e-12);
    }
}
