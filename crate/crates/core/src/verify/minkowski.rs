//! Outer Minkowski content from outward offsets.

use crate::error::{Error, Result};
use crate::geom::{offset_outward_disk, reach_lower_bound, ArcPolygon};

/// Estimate of `lim (|A^ρ| − |A|)/ρ` by two rounds of Richardson
/// extrapolation over `ρ ∈ {1, ½, ¼}·ρ₀`, `ρ₀ = 10⁻²·diam` (capped below the
/// reach).
pub fn minkowski_content(p: &ArcPolygon) -> Result<f64> {
    let reach = reach_lower_bound(p);
    if !(reach > 0.0) {
        return Err(Error::ReachViolation { radius: 0.0, reach });
    }
    let rho0 = (1e-2 * p.diameter()).min(0.5 * reach);
    let a = p.area();
    let d = |rho: f64| -> Result<f64> { Ok((offset_outward_disk(p, rho)?.area() - a) / rho) };
    let (d0, d1, d2) = (d(rho0)?, d(0.5 * rho0)?, d(0.25 * rho0)?);
    let r0 = 2.0 * d1 - d0;
    let r1 = 2.0 * d2 - d1;
    Ok((4.0 * r1 - r0) / 3.0)
}
