//! Pixel oracle: scanline rasterization, cell-count area and contour length.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::{ArcPolygon, BoundaryPiece, Point2, Vec2};
use crate::math::{sqrt, FRAC_PI_2, PI};

/// Boolean lattice of cell centers `origin + (i + ½, j + ½)·cell`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridMask {
    pub cell: f64,
    pub origin: Point2,
    pub nx: usize,
    pub ny: usize,
    bits: Vec<bool>,
}

impl GridMask {
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[j * self.nx + i]
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.count() == 0
    }

    pub fn center(&self, i: usize, j: usize) -> Point2 {
        self.origin + Vec2::new((i as f64 + 0.5) * self.cell, (j as f64 + 0.5) * self.cell)
    }
}

/// Pushes `(x, ±1)` where the piece crosses the scanline `y`, counting each
/// y-monotone run half-open at its upper end.
fn crossings(pc: &BoundaryPiece, y: f64, out: &mut Vec<(f64, i32)>) {
    match pc {
        BoundaryPiece::Segment { start, end } => {
            let (y0, y1) = (start.y, end.y);
            let dir = if y0 <= y && y < y1 {
                1
            } else if y1 <= y && y < y0 {
                -1
            } else {
                return;
            };
            let u = (y - y0) / (y1 - y0);
            out.push((start.x + u * (end.x - start.x), dir));
        }
        BoundaryPiece::Arc(a) => {
            // Split at the top and bottom of the circle.
            let mut cuts: Vec<f64> = vec![0.0, 1.0];
            for k in -4..=4 {
                let ang = FRAC_PI_2 + PI * k as f64;
                if a.contains_angle(ang, 0.0) {
                    let u = a.param_of_angle(ang);
                    if u > 0.0 && u < 1.0 {
                        cuts.push(u);
                    }
                }
            }
            cuts.sort_by(|p, q| p.partial_cmp(q).unwrap());
            for w in cuts.windows(2) {
                if w[1] - w[0] <= 0.0 {
                    continue;
                }
                let (p0, p1) = (pc.point_at(w[0]), pc.point_at(w[1]));
                let dir = if p0.y <= y && y < p1.y {
                    1
                } else if p1.y <= y && y < p0.y {
                    -1
                } else {
                    continue;
                };
                let mid = pc.point_at(0.5 * (w[0] + w[1]));
                let dy = y - a.center.y;
                let dx = sqrt((a.radius * a.radius - dy * dy).max(0.0));
                let x = if mid.x >= a.center.x { a.center.x + dx } else { a.center.x - dx };
                out.push((x, dir));
            }
        }
    }
}

fn empty_mask(cell: f64) -> GridMask {
    GridMask { cell, origin: Vec2::ZERO, nx: 0, ny: 0, bits: Vec::new() }
}

/// Center-sampling rasterization with a two-cell margin; inside means
/// nonzero winding.
pub fn rasterize(p: &ArcPolygon, cell: f64) -> Result<GridMask> {
    rasterize_all(core::slice::from_ref(p), cell)
}

/// Rasterization of a union of disjoint regions.
pub fn rasterize_all(parts: &[ArcPolygon], cell: f64) -> Result<GridMask> {
    if !(cell > 0.0) || !cell.is_finite() {
        return Err(Error::domain("cell size must be positive"));
    }
    let parts: Vec<&ArcPolygon> = parts.iter().filter(|p| !p.is_empty()).collect();
    if parts.is_empty() {
        return Ok(empty_mask(cell));
    }
    let bb = parts.iter().skip(1).fold(parts[0].bbox(), |b, p| b.union(&p.bbox()));
    let origin = Vec2::new(bb.min.x - 2.0 * cell, bb.min.y - 2.0 * cell);
    let nx = libm::ceil(bb.width() / cell) as usize + 4;
    let ny = libm::ceil(bb.height() / cell) as usize + 4;
    let mut bits = vec![false; nx * ny];
    let mut xs: Vec<(f64, i32)> = Vec::new();
    for j in 0..ny {
        let y = origin.y + (j as f64 + 0.5) * cell;
        xs.clear();
        for p in &parts {
            for pc in p.pieces() {
                crossings(pc, y, &mut xs);
            }
        }
        if xs.is_empty() {
            continue;
        }
        xs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let mut w = 0;
        let mut k = 0;
        for i in 0..nx {
            let x = origin.x + (i as f64 + 0.5) * cell;
            while k < xs.len() && xs[k].0 <= x {
                w += xs[k].1;
                k += 1;
            }
            bits[j * nx + i] = w != 0;
        }
    }
    Ok(GridMask { cell, origin, nx, ny, bits })
}

/// Cell count times cell area.
pub fn grid_area(m: &GridMask) -> Result<f64> {
    let n = m.count();
    if n == 0 {
        return Err(Error::EmptyRegion);
    }
    Ok(n as f64 * m.cell * m.cell)
}

/// Length of the cell-edge boundary between set and unset cells. Exact for
/// axis-aligned unions of cells, up to `√2` too long on diagonals.
pub fn edge_perimeter(m: &GridMask) -> Result<f64> {
    if m.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let at = |i: isize, j: isize| i >= 0 && j >= 0 && (i as usize) < m.nx && (j as usize) < m.ny && m.get(i as usize, j as usize);
    let mut edges = 0usize;
    for j in 0..m.ny as isize {
        for i in 0..m.nx as isize {
            if at(i, j) {
                edges += [(1, 0), (-1, 0), (0, 1), (0, -1)].iter().filter(|(di, dj)| !at(i + di, j + dj)).count();
            }
        }
    }
    Ok(edges as f64 * m.cell)
}

/// Marching-squares length of the ½ level set of the mask smoothed by a
/// 3×3 binomial kernel.
pub fn grid_perimeter(m: &GridMask) -> Result<f64> {
    if m.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let (nx, ny) = (m.nx, m.ny);
    let raw = |i: isize, j: isize| -> f64 {
        if i >= 0 && j >= 0 && (i as usize) < nx && (j as usize) < ny && m.get(i as usize, j as usize) {
            1.0
        } else {
            0.0
        }
    };
    let wts = [1.0, 2.0, 1.0];
    let mut f = vec![0.0; nx * ny];
    for j in 0..ny {
        for i in 0..nx {
            let mut s = 0.0;
            for (dj, wj) in wts.iter().enumerate() {
                for (di, wi) in wts.iter().enumerate() {
                    s += wi * wj * raw(i as isize + di as isize - 1, j as isize + dj as isize - 1);
                }
            }
            f[j * nx + i] = s / 16.0;
        }
    }
    let v = |i: usize, j: usize| f[j * nx + i] - 0.5;
    let mut len = 0.0;
    for j in 0..ny.saturating_sub(1) {
        for i in 0..nx.saturating_sub(1) {
            // Corners counterclockwise from (i, j).
            let c = [v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)];
            let pos = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
            let mut pts: Vec<(f64, f64)> = Vec::with_capacity(4);
            for e in 0..4 {
                let (a, b) = (c[e], c[(e + 1) % 4]);
                if (a > 0.0) != (b > 0.0) {
                    let t = a / (a - b);
                    let (pa, pb) = (pos[e], pos[(e + 1) % 4]);
                    pts.push((pa.0 + t * (pb.0 - pa.0), pa.1 + t * (pb.1 - pa.1)));
                }
            }
            let seg = |p: (f64, f64), q: (f64, f64)| sqrt((p.0 - q.0) * (p.0 - q.0) + (p.1 - q.1) * (p.1 - q.1));
            match pts.len() {
                2 => len += seg(pts[0], pts[1]),
                4 => {
                    // Saddle: pair crossings by the sign of the cell average.
                    let mean = 0.25 * (c[0] + c[1] + c[2] + c[3]);
                    if (mean > 0.0) == (c[0] > 0.0) {
                        len += seg(pts[0], pts[1]) + seg(pts[2], pts[3]);
                    } else {
                        len += seg(pts[0], pts[3]) + seg(pts[1], pts[2]);
                    }
                }
                _ => {}
            }
        }
    }
    Ok(len * m.cell)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_square() {
        let s = ArcPolygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap();
        let m = rasterize(&s, 0.01).unwrap();
        assert!((m.count() as i64 - 10_000).abs() <= 200);
        let m = rasterize(&s, 0.005).unwrap();
        assert!((grid_area(&m).unwrap() - 1.0).abs() < 5e-3);
        assert!((grid_perimeter(&m).unwrap() - 4.0).abs() < 0.08);
    }

    #[test]
    fn unit_disk() {
        let d = ArcPolygon::disk(Vec2::new(0.1, -0.3), 1.0).unwrap();
        let m = rasterize(&d, 0.005).unwrap();
        assert!((grid_area(&m).unwrap() / PI - 1.0).abs() < 1e-2);
        assert!((grid_perimeter(&m).unwrap() / (2.0 * PI) - 1.0).abs() < 2e-2);
    }

    #[test]
    fn single_cell() {
        let c = 0.1;
        let sq = ArcPolygon::rectangle(0.0, 0.0, c, c).unwrap();
        let m = rasterize(&sq, c).unwrap();
        assert_eq!(m.count(), 1);
        assert!((grid_area(&m).unwrap() - c * c).abs() < 1e-15);
        assert!((edge_perimeter(&m).unwrap() - 4.0 * c).abs() < 1e-15);
    }

    #[test]
    fn empty() {
        let m = rasterize_all(&[], 0.1).unwrap();
        assert!(m.is_empty());
        assert!(matches!(grid_area(&m), Err(Error::EmptyRegion)));
        assert!(matches!(grid_perimeter(&m), Err(Error::EmptyRegion)));
    }
}
