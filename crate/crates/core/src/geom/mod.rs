//! Arc-polygon kernel: regions bounded by segments and circular arcs.

pub mod clip;
pub mod intersect;
pub mod offset;
pub mod piece;
pub mod polygon;
pub mod reach;
pub mod vec2;

pub use offset::offset_outward_disk;
pub use piece::{Arc, BoundaryPiece, Orientation};
pub use polygon::{ArcPolygon, Joint};
pub use reach::{reach_lower_bound, region_gap, union_reach_lower_bound};
pub use vec2::{Aabb, Point2, Vec2};

/// Area of `p`.
pub fn area(p: &ArcPolygon) -> f64 {
    p.area()
}

/// Perimeter of `p`.
pub fn perimeter(p: &ArcPolygon) -> f64 {
    p.perimeter()
}

/// Signed distance from `x` to `∂p`; positive inside.
pub fn distance_to_boundary(p: &ArcPolygon, x: Point2) -> f64 {
    p.distance_to_boundary(x)
}
