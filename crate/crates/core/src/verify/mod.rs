//! Independent oracles and named invariant suites.

pub mod continuity;
pub mod families;
pub mod minkowski;
pub mod raster;
pub mod suites;

pub use continuity::{continuity_test, ContinuityReport, Domain};
pub use families::{StripFamily, CURVATURES, LADDER};
pub use minkowski::minkowski_content;
pub use raster::{edge_perimeter, grid_area, grid_perimeter, rasterize, rasterize_all, GridMask};
pub use suites::{ladder, run_suite, Check, LadderEntry, SUITES};
