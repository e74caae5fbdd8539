use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::piece::{Arc, BoundaryPiece, Orientation};
use crate::geom::polygon::ArcPolygon;
use crate::geom::reach::reach_lower_bound;

/// Minkowski sum `p ⊕ B_ρ`.
///
/// Requires `ρ ≤ reach_lower_bound(p)`; convex input always qualifies.
pub fn offset_outward_disk(p: &ArcPolygon, rho: f64) -> Result<ArcPolygon> {
    if !rho.is_finite() || rho < 0.0 {
        return Err(Error::domain("offset radius must be finite and nonnegative"));
    }
    if rho == 0.0 {
        return Ok(p.clone());
    }
    let reach = reach_lower_bound(p);
    if rho > reach {
        return Err(Error::ReachViolation { radius: rho, reach });
    }
    let collapse = 1e-12 * p.diameter();
    let n = p.len();
    let mut out: Vec<BoundaryPiece> = Vec::with_capacity(2 * n);
    for i in 0..n {
        let pc = &p.pieces()[i];
        if let Some(o) = pc.offset_right(rho, collapse) {
            out.push(o);
        }
        let turn = p.turn_at(i);
        if turn > 0.0 {
            let a0 = pc.right_normal_at(1.0).angle();
            out.push(BoundaryPiece::Arc(Arc::new(pc.end(), rho, a0, turn, Orientation::Ccw)));
        }
    }
    ArcPolygon::new_trusted(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::vec2::Vec2;
    use crate::math::{PI, TAU};

    #[test]
    fn square_steiner() {
        let s = ArcPolygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap();
        let o = offset_outward_disk(&s, 0.5).unwrap();
        assert!((o.area() - (1.0 + 2.0 + PI * 0.25)).abs() < 1e-12);
        assert!((o.perimeter() - (4.0 + PI)).abs() < 1e-12);
    }

    #[test]
    fn disk_grows() {
        let d = ArcPolygon::disk(Vec2::ZERO, 1.0).unwrap();
        let o = offset_outward_disk(&d, 1.0).unwrap();
        assert!((o.area() - 4.0 * PI).abs() < 1e-12);
        assert!((o.perimeter() - 2.0 * TAU).abs() < 1e-12);
    }

    #[test]
    fn triangle_perimeter() {
        let h = 3f64.sqrt() / 2.0;
        let t = ArcPolygon::from_vertices(&[Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(0.5, h)]).unwrap();
        let o = offset_outward_disk(&t, 0.1).unwrap();
        assert!((o.perimeter() - (3.0 + TAU * 0.1)).abs() < 1e-12);
    }

    #[test]
    fn concave_vertex_refuses() {
        let v = [
            Vec2::new(0.0, 0.0),
            Vec2::new(2.0, 0.0),
            Vec2::new(2.0, 1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(1.0, 2.0),
            Vec2::new(0.0, 2.0),
        ];
        let l = ArcPolygon::from_vertices(&v).unwrap();
        assert!(matches!(offset_outward_disk(&l, 0.1), Err(Error::ReachViolation { .. })));
    }
}
