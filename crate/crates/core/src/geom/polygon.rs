use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::intersect::intersect;
use crate::geom::piece::{Arc, BoundaryPiece, Orientation};
use crate::geom::vec2::{Aabb, Point2, Vec2};
use crate::math::{PI, TAU};

/// Relative closure tolerance for consecutive pieces.
pub const CLOSURE_TOL: f64 = 1e-12;
/// Turning angle below which a joint counts as smooth.
pub const JOINT_TOL: f64 = 1e-9;

/// Kind of the joint between a piece and its successor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Joint {
    Smooth,
    Convex,
    Concave,
}

/// A closed, simple, counterclockwise region bounded by segments and arcs.
#[derive(Clone, Debug, PartialEq)]
pub struct ArcPolygon {
    pieces: Vec<BoundaryPiece>,
}

impl ArcPolygon {
    /// Validates closure and simplicity. Clockwise input is reversed.
    pub fn new(pieces: Vec<BoundaryPiece>) -> Result<Self> {
        Self::assemble(pieces, true)
    }

    /// Like [`ArcPolygon::new`] without the quadratic simplicity scan. For
    /// boundaries that are simple by construction.
    pub fn new_trusted(pieces: Vec<BoundaryPiece>) -> Result<Self> {
        Self::assemble(pieces, false)
    }

    fn assemble(pieces: Vec<BoundaryPiece>, check_simple: bool) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::geometry("no boundary pieces"));
        }
        for pc in &pieces {
            let ok = match pc {
                BoundaryPiece::Segment { start, end } => start.is_finite() && end.is_finite(),
                BoundaryPiece::Arc(a) => {
                    a.center.is_finite()
                        && a.radius.is_finite()
                        && a.radius > 0.0
                        && a.start_angle.is_finite()
                        && a.sweep > 0.0
                        && a.sweep <= TAU + 1e-12
                }
            };
            if !ok {
                return Err(Error::geometry("non-finite or degenerate piece"));
            }
        }
        let mut bb = Aabb::empty();
        for pc in &pieces {
            bb = bb.union(&pc.bbox());
        }
        let diam = bb.diagonal();
        if !(diam > 0.0) {
            return Err(Error::geometry("zero-extent boundary"));
        }
        let n = pieces.len();
        for i in 0..n {
            let gap = pieces[i].end().dist(pieces[(i + 1) % n].start());
            if gap > CLOSURE_TOL * diam {
                return Err(Error::geometry(format!(
                    "pieces {} and {} do not join (gap {:e})",
                    i,
                    (i + 1) % n,
                    gap
                )));
            }
        }
        let min_len = 1e-13 * diam;
        let mut kept: Vec<BoundaryPiece> = pieces.into_iter().filter(|p| p.length() > min_len).collect();
        if kept.is_empty() {
            return Err(Error::geometry("all pieces degenerate"));
        }
        let mut poly = ArcPolygon { pieces: core::mem::take(&mut kept) };
        if check_simple {
            poly.check_simple()?;
        }
        let a = poly.signed_area();
        if !(a.abs() > 0.0) {
            return Err(Error::geometry("zero signed area"));
        }
        if a < 0.0 {
            poly = poly.reversed();
        }
        Ok(poly)
    }

    /// Polygon with straight edges through `vertices`.
    pub fn from_vertices(vertices: &[Point2]) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::geometry("a polygon needs at least three vertices"));
        }
        let n = vertices.len();
        let pieces = (0..n).map(|i| BoundaryPiece::segment(vertices[i], vertices[(i + 1) % n])).collect();
        Self::new(pieces)
    }

    /// Disk as four quarter arcs.
    pub fn disk(center: Point2, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::geometry("disk radius must be positive"));
        }
        let pieces = (0..4)
            .map(|k| {
                BoundaryPiece::Arc(Arc::new(center, radius, k as f64 * 0.5 * PI, 0.5 * PI, Orientation::Ccw))
            })
            .collect();
        Ok(ArcPolygon { pieces })
    }

    /// Axis-aligned rectangle `[x0, x1] × [y0, y1]`.
    pub fn rectangle(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        Self::from_vertices(&[Vec2::new(x0, y0), Vec2::new(x1, y0), Vec2::new(x1, y1), Vec2::new(x0, y1)])
    }

    #[inline]
    pub fn pieces(&self) -> &[BoundaryPiece] {
        &self.pieces
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn into_pieces(self) -> Vec<BoundaryPiece> {
        self.pieces
    }

    pub fn bbox(&self) -> Aabb {
        self.pieces.iter().fold(Aabb::empty(), |b, p| b.union(&p.bbox()))
    }

    /// Bounding-box diagonal; an upper bound on the diameter used for all
    /// relative tolerances.
    pub fn diameter(&self) -> f64 {
        self.bbox().diagonal()
    }

    pub fn signed_area(&self) -> f64 {
        let o = self.pieces[0].start();
        self.pieces.iter().map(|p| p.green_term(o)).sum()
    }

    pub fn area(&self) -> f64 {
        self.signed_area()
    }

    pub fn perimeter(&self) -> f64 {
        self.pieces.iter().map(|p| p.length()).sum()
    }

    pub fn reversed(&self) -> Self {
        ArcPolygon { pieces: self.pieces.iter().rev().map(|p| p.reversed()).collect() }
    }

    pub fn translated(&self, v: Vec2) -> Self {
        ArcPolygon { pieces: self.pieces.iter().map(|p| p.translated(v)).collect() }
    }

    /// Image under `x ↦ λx`.
    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::domain("scale factor must be positive"));
        }
        Ok(ArcPolygon { pieces: self.pieces.iter().map(|p| p.scaled(lambda)).collect() })
    }

    /// Turning angle from piece `i` into piece `i+1`, in `(-π, π]`.
    pub fn turn_at(&self, i: usize) -> f64 {
        let n = self.pieces.len();
        let a = self.pieces[i].end_tangent();
        let b = self.pieces[(i + 1) % n].start_tangent();
        a.angle_to(b)
    }

    pub fn joint(&self, i: usize) -> Joint {
        let t = self.turn_at(i);
        if t > JOINT_TOL {
            Joint::Convex
        } else if t < -JOINT_TOL {
            Joint::Concave
        } else {
            Joint::Smooth
        }
    }

    /// All curvature nonnegative and no concave joint.
    pub fn is_convex(&self) -> bool {
        self.pieces.iter().all(|p| p.curvature() >= 0.0)
            && (0..self.pieces.len()).all(|i| self.joint(i) != Joint::Concave)
    }

    /// Winding number of the boundary around `x`.
    pub fn winding(&self, x: Point2) -> i32 {
        let mut total = 0.0;
        for p in &self.pieces {
            total += subtended_angle(p, x);
        }
        libm::round(total / TAU) as i32
    }

    pub fn contains(&self, x: Point2) -> bool {
        self.winding(x) != 0
    }

    /// Unsigned distance from `x` to the boundary.
    pub fn boundary_distance(&self, x: Point2) -> f64 {
        self.pieces.iter().map(|p| p.distance(x)).fold(f64::INFINITY, f64::min)
    }

    /// Nearest boundary point with its piece index and parameter.
    pub fn nearest(&self, x: Point2) -> (Point2, usize, f64, f64) {
        let mut best = (x, 0, 0.0, f64::INFINITY);
        for (i, p) in self.pieces.iter().enumerate() {
            let (q, u, d) = p.closest(x);
            if d < best.3 {
                best = (q, i, u, d);
            }
        }
        best
    }

    /// Signed distance to the boundary: positive inside, negative outside.
    pub fn distance_to_boundary(&self, x: Point2) -> f64 {
        let d = self.boundary_distance(x);
        if self.contains(x) {
            d
        } else {
            -d
        }
    }

    /// Point at arclength `s` measured from the start of piece 0.
    pub fn point_at_arclength(&self, s: f64) -> Point2 {
        let total = self.perimeter();
        let mut s = s % total;
        if s < 0.0 {
            s += total;
        }
        for p in &self.pieces {
            let l = p.length();
            if s <= l {
                return p.point_at(s / l);
            }
            s -= l;
        }
        self.pieces[0].start()
    }

    /// `n` boundary points equally spaced in arclength.
    pub fn sample_boundary(&self, n: usize) -> Vec<Point2> {
        let total = self.perimeter();
        (0..n).map(|k| self.point_at_arclength(total * (k as f64 + 0.5) / n as f64)).collect()
    }

    /// Errors with `SelfIntersecting` when two pieces meet anywhere other
    /// than at their shared joint.
    pub fn check_simple(&self) -> Result<()> {
        let n = self.pieces.len();
        if n < 2 {
            return Ok(());
        }
        let diam = self.diameter();
        let tol = 1e-10 * diam;
        let joint_tol = 1e-6 * diam;
        let boxes: Vec<Aabb> = self.pieces.iter().map(|p| p.bbox()).collect();
        for i in 0..n {
            for j in (i + 1)..n {
                if !boxes[i].overlaps(&boxes[j], tol) {
                    continue;
                }
                let mut joints: Vec<Point2> = Vec::new();
                if j == i + 1 {
                    joints.push(self.pieces[i].end());
                }
                if i == 0 && j == n - 1 {
                    joints.push(self.pieces[0].start());
                }
                for h in intersect(&self.pieces[i], &self.pieces[j], tol) {
                    let at_joint = joints.iter().any(|q| q.dist(h.point) <= joint_tol);
                    if !at_joint {
                        return Err(Error::SelfIntersecting(format!(
                            "pieces {} and {} meet at ({}, {})",
                            i, j, h.point.x, h.point.y
                        )));
                    }
                }
                // Adjacent pieces folding back onto each other.
                if !joints.is_empty() {
                    let hits = intersect(&self.pieces[i], &self.pieces[j], tol);
                    if hits.iter().any(|h| h.overlap) {
                        let a = self.pieces[i].end_tangent();
                        let b = self.pieces[j].start_tangent();
                        let c = self.pieces[j].end_tangent();
                        let d = self.pieces[i].start_tangent();
                        if (j == i + 1 && a.dot(b) < 0.0) || (i == 0 && j == n - 1 && c.dot(d) < 0.0) {
                            return Err(Error::SelfIntersecting(format!("pieces {} and {} fold back", i, j)));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Vertices of a polygon with straight edges only.
    pub fn vertices(&self) -> Option<Vec<Point2>> {
        if self.pieces.iter().any(|p| p.is_arc()) {
            return None;
        }
        Some(self.pieces.iter().map(|p| p.start()).collect())
    }

    /// Sum of arc lengths over arcs of `orientation`.
    pub fn arc_length_of(&self, orientation: Orientation) -> f64 {
        self.pieces
            .iter()
            .filter_map(|p| p.as_arc())
            .filter(|a| a.orientation == orientation)
            .map(|a| a.radius * a.sweep)
            .sum()
    }
}

/// Signed angle swept by the ray from `x` along the piece.
fn subtended_angle(p: &BoundaryPiece, x: Point2) -> f64 {
    match p {
        BoundaryPiece::Segment { start, end } => (*start - x).angle_to(*end - x),
        BoundaryPiece::Arc(a) => {
            let s = a.orientation.sign();
            if a.sweep >= TAU - 1e-12 {
                return if (x - a.center).norm() < a.radius { s * TAU } else { 0.0 };
            }
            let p0 = p.start();
            let p1 = p.end();
            let chord = (p0 - x).angle_to(p1 - x);
            let inside_disk = (x - a.center).norm() < a.radius;
            if !inside_disk {
                return chord;
            }
            let mid = a.point_at_angle(a.angle_at(0.5));
            let side = |q: Point2| (p1 - p0).cross(q - p0);
            if side(mid) * side(x) > 0.0 {
                chord + s * TAU
            } else {
                chord
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> ArcPolygon {
        ArcPolygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap()
    }

    fn filleted_square(side: f64, rho: f64) -> ArcPolygon {
        let mut pcs = Vec::new();
        let c = [
            Vec2::new(side - rho, rho),
            Vec2::new(side - rho, side - rho),
            Vec2::new(rho, side - rho),
            Vec2::new(rho, rho),
        ];
        for k in 0..4 {
            let a0 = -0.5 * PI + k as f64 * 0.5 * PI;
            let arc = Arc::new(c[k], rho, a0, 0.5 * PI, Orientation::Ccw);
            let next = Arc::new(c[(k + 1) % 4], rho, a0 + 0.5 * PI, 0.5 * PI, Orientation::Ccw);
            let a = BoundaryPiece::Arc(arc);
            let e = a.end();
            pcs.push(a);
            pcs.push(BoundaryPiece::segment(e, BoundaryPiece::Arc(next).start()));
        }
        ArcPolygon::new(pcs).unwrap()
    }

    #[test]
    fn square_measures_and_distances() {
        let s = unit_square();
        assert!((s.area() - 1.0).abs() < 1e-15);
        assert!((s.perimeter() - 4.0).abs() < 1e-15);
        assert!((s.distance_to_boundary(Vec2::new(0.5, 0.5)) - 0.5).abs() < 1e-15);
        assert!((s.distance_to_boundary(Vec2::new(2.0, 0.5)) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn disk_measures() {
        let d = ArcPolygon::disk(Vec2::ZERO, 1.0).unwrap();
        assert!((d.area() - PI).abs() < 1e-12);
        assert!((d.perimeter() - TAU).abs() < 1e-12);
        assert!((d.distance_to_boundary(Vec2::new(0.3, 0.0)) - 0.7).abs() < 1e-12);
        assert!(d.is_convex());
    }

    #[test]
    fn filleted_square_matches_closed_form() {
        let f = filleted_square(1.0, 0.25);
        assert!((f.area() - (1.0 - (4.0 - PI) * 0.0625)).abs() < 1e-12);
        assert!((f.perimeter() - (4.0 - 8.0 * 0.25 + TAU * 0.25)).abs() < 1e-12);
        assert!(f.is_convex());
    }

    #[test]
    fn clockwise_input_is_reversed() {
        let v = [Vec2::new(0.0, 0.0), Vec2::new(0.0, 1.0), Vec2::new(1.0, 1.0), Vec2::new(1.0, 0.0)];
        let p = ArcPolygon::from_vertices(&v).unwrap();
        assert!(p.signed_area() > 0.0);
    }

    #[test]
    fn bow_tie_loop_is_rejected() {
        let v = [Vec2::new(0.0, 0.0), Vec2::new(1.0, 1.0), Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)];
        assert!(matches!(ArcPolygon::from_vertices(&v), Err(Error::SelfIntersecting(_))));
    }

    #[test]
    fn open_loop_is_rejected() {
        let pcs = alloc::vec![
            BoundaryPiece::segment(Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0)),
            BoundaryPiece::segment(Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0)),
        ];
        assert!(matches!(ArcPolygon::new(pcs), Err(Error::InvalidGeometry(_))));
    }

    #[test]
    fn l_shape_has_concave_joint() {
        let v = [
            Vec2::new(0.0, 0.0),
            Vec2::new(2.0, 0.0),
            Vec2::new(2.0, 1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(1.0, 2.0),
            Vec2::new(0.0, 2.0),
        ];
        let p = ArcPolygon::from_vertices(&v).unwrap();
        assert!(!p.is_convex());
        assert_eq!(p.joint(2), Joint::Concave);
        assert!((p.area() - 3.0).abs() < 1e-15);
        assert!(p.contains(Vec2::new(0.5, 1.5)));
        assert!(!p.contains(Vec2::new(1.5, 1.5)));
    }

    #[test]
    fn winding_inside_arc_segment() {
        // Half disk: the circular segment region must count as inside.
        let arc = BoundaryPiece::Arc(Arc::new(Vec2::ZERO, 1.0, 0.0, PI, Orientation::Ccw));
        let seg = BoundaryPiece::segment(Vec2::new(-1.0, 0.0), Vec2::new(1.0, 0.0));
        let p = ArcPolygon::new(alloc::vec![arc, seg]).unwrap();
        assert!((p.area() - 0.5 * PI).abs() < 1e-12);
        assert!(p.contains(Vec2::new(0.0, 0.9)));
        assert!(p.contains(Vec2::new(0.7, 0.1)));
        assert!(!p.contains(Vec2::new(0.0, -0.1)));
        assert!(!p.contains(Vec2::new(0.0, 1.1)));
    }
}
