//! SVG figures with exact arcs. Coordinates are written in the domain's own
//! frame inside a y-flipped group.

use std::fmt::Write;

use cheeger_core::geom::{Aabb, Orientation};
use cheeger_core::{ArcPolygon, BoundaryPiece, Point2};

const WIDTH_PX: f64 = 800.0;

pub struct Layer<'a> {
    pub parts: Vec<&'a ArcPolygon>,
    pub fill: &'static str,
    pub stroke: &'static str,
}

fn path_data(p: &ArcPolygon, out: &mut String) {
    let Some(first) = p.pieces().first() else { return };
    let s = first.start();
    let _ = write!(out, "M {:.9} {:.9}", s.x, s.y);
    for pc in p.pieces() {
        match pc {
            BoundaryPiece::Segment { end, .. } => {
                let _ = write!(out, " L {:.9} {:.9}", end.x, end.y);
            }
            BoundaryPiece::Arc(a) => {
                // Halves keep every SVG arc below a half turn.
                let n = if a.sweep > 3.0 { 2 } else { 1 };
                let sweep_flag = matches!(a.orientation, Orientation::Ccw) as u8;
                for k in 1..=n {
                    let e = pc.point_at(k as f64 / n as f64);
                    let _ = write!(out, " A {r:.9} {r:.9} 0 0 {sweep_flag} {:.9} {:.9}", e.x, e.y, r = a.radius);
                }
            }
        }
    }
    out.push_str(" Z");
}

pub fn render(outline: &[&ArcPolygon], layers: &[Layer], circles: &[(Point2, f64)]) -> String {
    let bb = outline.iter().fold(Aabb::empty(), |b, p| b.union(&p.bbox()));
    let pad = 0.05 * bb.width().max(bb.height()).max(1e-9);
    let (x0, y0) = (bb.min.x - pad, bb.min.y - pad);
    let (w, h) = (bb.width() + 2.0 * pad, bb.height() + 2.0 * pad);
    let px_h = WIDTH_PX * h / w;
    let stroke = 0.004 * w.max(h);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH_PX:.0}" height="{px_h:.0}" viewBox="{x0:.9} {:.9} {w:.9} {h:.9}">"#,
        -(y0 + h)
    );
    let _ = writeln!(out, r#"<g transform="scale(1,-1)" stroke-width="{stroke:.9}">"#);
    let mut d = String::new();
    for p in outline {
        path_data(p, &mut d);
        d.push(' ');
    }
    let _ = writeln!(out, r#"<path d="{}" fill="white" stroke="black"/>"#, d.trim_end());
    for l in layers {
        let mut d = String::new();
        for p in &l.parts {
            path_data(p, &mut d);
            d.push(' ');
        }
        let _ = writeln!(out, r#"<path d="{}" fill="{}" stroke="{}"/>"#, d.trim_end(), l.fill, l.stroke);
    }
    for (c, r) in circles {
        let _ = writeln!(out, r#"<circle cx="{:.9}" cy="{:.9}" r="{r:.9}" fill="none" stroke="steelblue"/>"#, c.x, c.y);
    }
    out.push_str("</g>\n</svg>\n");
    out
}
