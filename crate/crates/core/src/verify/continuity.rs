//! Convergence of Cheeger constants along domain sequences.

use alloc::vec::Vec;

use crate::convex::{solve_convex_with, ConvexRegion};
use crate::error::Result;
use crate::solver::{solve_strip_with, CheegerSolution, SolveOptions};
use crate::spine::Strip;

/// A domain one of the exact solvers handles.
#[derive(Clone, Debug, PartialEq)]
pub enum Domain {
    Convex(ConvexRegion),
    Strip(Strip),
}

impl Domain {
    pub fn solve(&self) -> Result<CheegerSolution> {
        self.solve_with(&SolveOptions::default())
    }

    pub fn solve_with(&self, opts: &SolveOptions) -> Result<CheegerSolution> {
        match self {
            Domain::Convex(c) => solve_convex_with(c, opts),
            Domain::Strip(s) => solve_strip_with(s, opts),
        }
    }

    pub fn area(&self) -> f64 {
        match self {
            Domain::Convex(c) => c.region().area(),
            Domain::Strip(s) => s.boundary().area(),
        }
    }

    pub fn perimeter(&self) -> f64 {
        match self {
            Domain::Convex(c) => c.region().perimeter(),
            Domain::Strip(s) => s.boundary().perimeter(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ContinuityReport {
    pub h_target: f64,
    pub h: Vec<f64>,
    /// `|h(Ω_j) − h(Ω)|`.
    pub deviations: Vec<f64>,
    pub strictly_decreasing: bool,
    /// `min_j h(Ω_j) − h(Ω)`; nonnegative for inner approximations.
    pub min_excess: f64,
}

pub fn continuity_test(target: &Domain, sequence: &[Domain]) -> Result<ContinuityReport> {
    let h_target = target.solve()?.h;
    let h: Vec<f64> = sequence.iter().map(|d| d.solve().map(|s| s.h)).collect::<Result<_>>()?;
    let deviations: Vec<f64> = h.iter().map(|x| (x - h_target).abs()).collect();
    let strictly_decreasing = deviations.windows(2).all(|w| w[1] < w[0]);
    let min_excess = h.iter().map(|x| x - h_target).fold(f64::INFINITY, f64::min);
    Ok(ContinuityReport { h_target, h, deviations, strictly_decreasing, min_excess })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::ArcPolygon;
    use crate::math::{sqrt, PI};

    fn square(a: f64) -> Domain {
        Domain::Convex(ConvexRegion::new(ArcPolygon::rectangle(0.0, 0.0, a, a).unwrap()).unwrap())
    }

    #[test]
    fn square_ladder() {
        let seq: Vec<Domain> = (1..=6).map(|j| square(1.0 - libm::pow(2.0, -(j as f64)))).collect();
        let rep = continuity_test(&square(1.0), &seq).unwrap();
        assert!((rep.h_target - (2.0 + sqrt(PI))).abs() < 1e-9);
        assert!(rep.strictly_decreasing);
        assert!(rep.min_excess > 0.0);
    }

    #[test]
    fn constant_sequence() {
        let rep = continuity_test(&square(1.0), &[square(1.0), square(1.0)]).unwrap();
        assert!(rep.deviations.iter().all(|&d| d == 0.0));
    }
}
