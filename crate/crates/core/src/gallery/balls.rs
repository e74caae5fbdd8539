//! Two disjoint disks of radii 1 and 2/3.

use alloc::vec::Vec;

use crate::geom::{ArcPolygon, Vec2};
use crate::math::PI;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq)]
pub struct TwoBallsReport {
    pub components: Vec<ArcPolygon>,
    /// `P(G)/|G|` of the whole union.
    pub union_ratio: f64,
    /// `P/A` of each disk.
    pub component_ratios: Vec<f64>,
    /// Least ratio among the candidates, taken as `h(G)`.
    pub h: f64,
    /// Index of the disk realizing `h`.
    pub cheeger_component: usize,
    /// Area of the union of all balls of radius `1/h` inside `G`, which is `G`
    /// itself, against the area of the Cheeger set.
    pub union_of_balls_area: f64,
    pub cheeger_area: f64,
}

pub fn two_balls_example() -> Result<TwoBallsReport> {
    let big = ArcPolygon::disk(Vec2::new(0.0, 0.0), 1.0)?;
    let small = ArcPolygon::disk(Vec2::new(3.0, 0.0), 2.0 / 3.0)?;
    let parts = alloc::vec![big, small];
    let area: f64 = parts.iter().map(|p| p.area()).sum();
    let perim: f64 = parts.iter().map(|p| p.perimeter()).sum();
    let ratios: Vec<f64> = parts.iter().map(|p| p.perimeter() / p.area()).collect();
    let (idx, h) = ratios
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::INFINITY), |b, (i, q)| if q < b.1 { (i, q) } else { b });
    // Every disk of radius ≥ 1/h is its own union of such balls.
    let r = 1.0 / h;
    let uob: f64 = parts
        .iter()
        .filter(|p| p.perimeter() / (2.0 * PI) >= r - 1e-12)
        .map(|p| p.area())
        .sum();
    let cheeger_area = parts[idx].area();
    Ok(TwoBallsReport {
        components: parts,
        union_ratio: perim / area,
        component_ratios: ratios,
        h,
        cheeger_component: idx,
        union_of_balls_area: uob,
        cheeger_area,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios() {
        let rep = two_balls_example().unwrap();
        assert!((rep.union_ratio - 30.0 / 13.0).abs() < 1e-12);
        assert!((rep.component_ratios[0] - 2.0).abs() < 1e-12);
        assert!((rep.component_ratios[1] - 3.0).abs() < 1e-12);
        assert_eq!(rep.cheeger_component, 0);
        assert!(rep.union_of_balls_area > rep.cheeger_area);
    }
}
