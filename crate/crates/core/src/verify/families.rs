//! Strip families used by the invariant suites.

use alloc::vec::Vec;

use crate::error::Result;
use crate::math::{FRAC_PI_2, PI};
use crate::geom::Vec2;
use crate::spine::{build_strip, Spine, SpinePiece, Strip};

/// Lengths of the test ladder.
pub const LADDER: [f64; 5] = [4.5 * PI, 20.0, 40.0, 80.0, 160.0];

/// Curvatures of the constant-curvature families.
pub const CURVATURES: [f64; 3] = [0.3, 0.5, 0.9];

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum StripFamily {
    Straight,
    /// Spine of constant `|κ|`: arcs turning a quarter circle each, with
    /// alternating sign so that long strips do not wrap around.
    Meander(f64),
    /// Straight leads around a `+0.5` then `−0.5` turn of length 6 each.
    SCurve,
}

impl StripFamily {
    pub fn all() -> Vec<StripFamily> {
        let mut v = alloc::vec![StripFamily::Straight];
        v.extend(CURVATURES.iter().map(|&k| StripFamily::Meander(k)));
        v.push(StripFamily::SCurve);
        v
    }

    pub fn name(&self) -> alloc::string::String {
        match self {
            StripFamily::Straight => "straight".into(),
            StripFamily::Meander(k) => alloc::format!("curvature {k}"),
            StripFamily::SCurve => "s-curve".into(),
        }
    }

    /// Spine of length `l`; the start heading centers the first block so
    /// that both ends have the same profile for every `l`.
    pub fn spine(&self, l: f64) -> Result<Spine> {
        match *self {
            StripFamily::Straight => Spine::straight(l),
            StripFamily::Meander(k) => {
                let block = FRAC_PI_2 / k;
                let n = libm::floor(l / block) as usize;
                let mut lens = if n <= 1 { alloc::vec![l] } else { alloc::vec![block; n] };
                if n > 1 {
                    lens[(n - 1) / 2] += l - block * n as f64;
                }
                let pieces: Vec<SpinePiece> = lens
                    .iter()
                    .enumerate()
                    .map(|(i, &len)| SpinePiece::arc(len, if i % 2 == 0 { k } else { -k }))
                    .collect();
                let h0 = -0.5 * k * lens[0];
                Spine::new(pieces, Vec2::ZERO, Vec2::from_angle(h0))
            }
            StripFamily::SCurve => {
                let lead = 0.5 * (l - 12.0);
                Spine::from_pieces(alloc::vec![
                    SpinePiece::line(lead),
                    SpinePiece::arc(6.0, 0.5),
                    SpinePiece::arc(6.0, -0.5),
                    SpinePiece::line(lead),
                ])
            }
        }
    }

    /// Strip of half-width 1 and length `l`.
    pub fn strip(&self, l: f64) -> Result<Strip> {
        build_strip(self.spine(l)?, 1.0)
    }
}
