//! Bow-ties cut from the unit equilateral triangle.
//!
//! The triangle is cut by the vertical line tangent to its Cheeger set and
//! the left part is reflected across that line. Moving the two neck corners
//! apart by `gap` gives the loose variant.

use alloc::format;
use alloc::vec::Vec;

use crate::convex::{inner_parallel_body, solve_convex, ConvexRegion};
use crate::error::{Error, Result};
use crate::geom::{union_reach_lower_bound, reach_lower_bound, Arc, ArcPolygon, BoundaryPiece, Orientation, Point2, Vec2};
use crate::math::{atan2, bisect_full, sin, sqrt, tan, FRAC_PI_2, PI};

/// Unit-side equilateral triangle with one side on the y-axis, pointing +x.
pub fn unit_triangle() -> Result<ConvexRegion> {
    ConvexRegion::from_vertices(&[Vec2::new(0.0, -0.5), Vec2::new(0.5 * sqrt(3.0), 0.0), Vec2::new(0.0, 0.5)])
}

#[derive(Clone, Debug, PartialEq)]
pub struct BowTie {
    pub gap: f64,
    /// Abscissa of the cut and mirror line.
    pub x_cut: f64,
    /// Half-width of the neck, `w + gap`.
    pub neck: f64,
    /// Cheeger radius and constant of the source triangle.
    pub r_triangle: f64,
    pub h_triangle: f64,
    /// Half the interior angle at each neck corner.
    pub corner_half_angle: f64,
    region: ArcPolygon,
}

/// Rounded-corner Cheeger candidate of a bow-tie.
#[derive(Clone, Debug, PartialEq)]
pub struct BowTieCheeger {
    pub r: f64,
    pub h: f64,
    pub set: ArcPolygon,
    /// Indices of the free arcs in `set`.
    pub arcs: Vec<usize>,
    /// Largest tangent-direction jump at an arc endpoint.
    pub max_tangent_jump: f64,
    /// Largest distance from a mirrored boundary sample to the boundary.
    pub symmetry_defect: f64,
}

impl BowTie {
    pub fn tight() -> Result<Self> {
        Self::new(0.0)
    }

    pub fn new(gap: f64) -> Result<Self> {
        let t = unit_triangle()?;
        let sol = solve_convex(&t)?;
        let x_cut = sol.cheeger_set.bbox().max.x;
        Self::from_cut(gap, x_cut, sol.r)
    }

    fn from_cut(gap: f64, x_cut: f64, r_t: f64) -> Result<Self> {
        let w = 0.5 - x_cut / sqrt(3.0);
        let neck = w + gap;
        if !(gap >= 0.0) || !(neck < 0.5) {
            return Err(Error::domain(format!("gap {gap} must lie in [0, {})", 0.5 - w)));
        }
        let v = [
            Vec2::new(0.0, -0.5),
            Vec2::new(x_cut, -neck),
            Vec2::new(2.0 * x_cut, -0.5),
            Vec2::new(2.0 * x_cut, 0.5),
            Vec2::new(x_cut, neck),
            Vec2::new(0.0, 0.5),
        ];
        let beta = atan2(0.5 - neck, x_cut);
        Ok(BowTie {
            gap,
            x_cut,
            neck,
            r_triangle: r_t,
            h_triangle: 1.0 / r_t,
            corner_half_angle: FRAC_PI_2 + beta,
            region: ArcPolygon::from_vertices(&v)?,
        })
    }

    /// Loose bow-tie with the least gap for which every point near the neck
    /// corners is reached by a ball of the candidate radius.
    pub fn loose() -> Result<Self> {
        let tight = Self::tight()?;
        let w = tight.neck;
        let defect = |gap: f64| -> f64 {
            Self::from_cut(gap, tight.x_cut, tight.r_triangle)
                .and_then(|b| Ok(b.neck - b.cheeger_candidate()?.r * sin(b.corner_half_angle)))
                .unwrap_or(f64::NAN)
        };
        let hi = 0.5 - w - 1e-3;
        let root = bisect_full(defect, 0.0, hi).ok_or(Error::NoRoot)?;
        Self::from_cut(root.x, tight.x_cut, tight.r_triangle)
    }

    #[inline]
    pub fn region(&self) -> &ArcPolygon {
        &self.region
    }

    pub fn vertices(&self) -> Vec<Point2> {
        self.region.vertices().unwrap_or_default()
    }

    /// The four outer corners rounded by arcs of the radius `r` that makes
    /// `P/A = 1/r`.
    pub fn cheeger_candidate(&self) -> Result<BowTieCheeger> {
        let v = self.vertices();
        let n = v.len();
        let outer = [0usize, 2, 3, 5];
        let mut k = 0.0;
        let mut phi = alloc::vec![0.0; n];
        for i in 0..n {
            let a = v[(i + n - 1) % n] - v[i];
            let b = v[(i + 1) % n] - v[i];
            phi[i] = atan2(a.cross(b).abs(), a.dot(b));
            if outer.contains(&i) {
                k += 1.0 / tan(0.5 * phi[i]) - 0.5 * (PI - phi[i]);
            }
        }
        let (a0, p0) = (self.region.area(), self.region.perimeter());
        let disc = p0 * p0 - 4.0 * k * a0;
        if !(disc >= 0.0) {
            return Err(Error::NoRoot);
        }
        let r = (p0 - sqrt(disc)) / (2.0 * k);
        let cut = |i: usize| if outer.contains(&i) { r / tan(0.5 * phi[i]) } else { 0.0 };
        let mut pieces = Vec::new();
        let mut arcs = Vec::new();
        for i in 0..n {
            let j = (i + 1) % n;
            let e = (v[j] - v[i]).normalized();
            let len = v[i].dist(v[j]);
            if cut(i) + cut(j) >= len {
                return Err(Error::geometry("corner arcs overlap on an edge"));
            }
            let p = v[i] + e * cut(i);
            let q = v[j] - e * cut(j);
            pieces.push(BoundaryPiece::segment(p, q));
            if outer.contains(&j) {
                let e2 = (v[(j + 1) % n] - v[j]).normalized();
                let bis = (e2 - e).normalized();
                let c = v[j] + bis * (r / sin(0.5 * phi[j]));
                let end = v[j] + e2 * cut(j);
                arcs.push(pieces.len());
                pieces.push(BoundaryPiece::Arc(Arc::from_endpoints(c, q, end, Orientation::Ccw)?));
            }
        }
        let set = ArcPolygon::new(pieces)?;
        let np = set.len();
        let mut jump: f64 = 0.0;
        for &i in &arcs {
            let prev = set.pieces()[(i + np - 1) % np];
            let next = set.pieces()[(i + 1) % np];
            let a = set.pieces()[i];
            jump = jump.max(prev.end_tangent().angle_to(a.start_tangent()).abs());
            jump = jump.max(a.end_tangent().angle_to(next.start_tangent()).abs());
        }
        let mut sym: f64 = 0.0;
        for x in set.sample_boundary(256) {
            let m = Vec2::new(2.0 * self.x_cut - x.x, x.y);
            sym = sym.max(set.boundary_distance(m));
        }
        Ok(BowTieCheeger { r, h: 1.0 / r, set, arcs, max_tangent_jump: jump, symmetry_defect: sym })
    }

    /// The triangle bounded by the three edges of the left half.
    pub fn left_triangle(&self) -> Result<ConvexRegion> {
        let beta = self.corner_half_angle - FRAC_PI_2;
        let apex = 0.5 / tan(beta);
        ConvexRegion::from_vertices(&[Vec2::new(0.0, -0.5), Vec2::new(apex, 0.0), Vec2::new(0.0, 0.5)])
    }
}

/// `2αr²`, the inner-set area claimed for the loose bow-tie.
pub fn loose_bowtie_inner_formula(alpha_corner: f64, r: f64) -> Result<f64> {
    if !(alpha_corner >= FRAC_PI_2) || !(alpha_corner < PI) {
        return Err(Error::domain(format!("corner half-angle {alpha_corner} outside [π/2, π)")));
    }
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::domain("radius must be finite and nonnegative"));
    }
    Ok(2.0 * alpha_corner * r * r)
}

#[derive(Clone, Debug, PartialEq)]
pub struct LooseWitness {
    pub bowtie: BowTie,
    pub r: f64,
    pub alpha: f64,
    /// The two components of the inner set.
    pub inner: [ArcPolygon; 2],
    pub inner_area: f64,
    /// `2αr²`.
    pub formula_area: f64,
    /// Area from the union-of-two-tubes accounting: `2αr² − r² sin 2β`.
    pub lens_corrected_area: f64,
    pub union_reach: f64,
    pub component_reach: f64,
}

/// Builds the loose bow-tie, its Cheeger candidate and the disconnected inner
/// set, and measures the reach defect.
pub fn loose_bowtie_witness() -> Result<LooseWitness> {
    let b = BowTie::loose()?;
    let cand = b.cheeger_candidate()?;
    let r = cand.r;
    let left = inner_parallel_body(&b.left_triangle()?, r)?.into_region();
    let right = ArcPolygon::new_trusted(left.pieces().iter().rev().map(|p| p.mirrored_x(b.x_cut).reversed()).collect())?;
    let alpha = b.corner_half_angle;
    let beta = alpha - FRAC_PI_2;
    let area = left.area() + right.area();
    let union_reach = union_reach_lower_bound(&[left.clone(), right.clone()]);
    let component_reach = reach_lower_bound(&left);
    Ok(LooseWitness {
        r,
        alpha,
        inner_area: area,
        formula_area: loose_bowtie_inner_formula(alpha, r)?,
        lens_corrected_area: 2.0 * alpha * r * r - r * r * sin(2.0 * beta),
        union_reach,
        component_reach,
        inner: [left, right],
        bowtie: b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tight_bowtie_candidate() {
        let b = BowTie::tight().unwrap();
        assert!((b.corner_half_angle - 2.0 * PI / 3.0).abs() < 1e-12);
        let c = b.cheeger_candidate().unwrap();
        assert_eq!(c.arcs.len(), 4);
        assert!((c.set.perimeter() / c.set.area() - c.h).abs() < 1e-9);
        assert!(c.max_tangent_jump < 1e-9);
        assert!(c.symmetry_defect < 1e-9);
        assert!(c.h < b.h_triangle);
        assert!((c.r - 0.17514).abs() < 1e-4, "{}", c.r);
    }

    #[test]
    fn loose_bowtie_breaks_the_formula() {
        let w = loose_bowtie_witness().unwrap();
        assert!(w.bowtie.gap > 0.0);
        assert!(w.union_reach < w.r);
        assert!(w.inner_area > PI * w.r * w.r);
        assert!((w.inner_area - w.lens_corrected_area).abs() < 1e-9, "{} vs {}", w.inner_area, w.lens_corrected_area);
    }

    #[test]
    fn formula_examples() {
        let r = 0.3;
        assert!((loose_bowtie_inner_formula(FRAC_PI_2, r).unwrap() - PI * r * r).abs() < 1e-15);
        let a = loose_bowtie_inner_formula(2.0, 0.5).unwrap();
        assert!((a - 1.0).abs() < 1e-15 && a > PI * 0.25);
        assert!(loose_bowtie_inner_formula(1.0, r).is_err());
    }
}
