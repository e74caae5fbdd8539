//! Cheeger constants and Cheeger sets of planar convex bodies and curved
//! strips.
//!
//! Regions are arc-polygons (segments and circular arcs), so inner parallel
//! bodies, Minkowski sums with disks and strip boundaries are all exact.
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
// `!(x > 0.0)` guards are meant to reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod convex;
pub mod error;
pub mod gallery;
pub mod geom;
pub mod math;
pub mod solver;
pub mod spine;
pub mod verify;

pub use error::{Error, Result};
pub use geom::{ArcPolygon, BoundaryPiece, Point2, Vec2};
