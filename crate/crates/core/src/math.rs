//! Scalar helpers shared by every module. Thin wrappers over `libm` so the
//! crate stays `no_std`.

pub use core::f64::consts::{FRAC_PI_2, PI, TAU};

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub fn tan(x: f64) -> f64 {
    libm::tan(x)
}

#[inline]
pub fn asin(x: f64) -> f64 {
    libm::asin(x)
}

#[inline]
pub fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

/// Reduces an angle to `[0, 2π)`.
#[inline]
pub fn wrap_tau(a: f64) -> f64 {
    let r = a % TAU;
    if r < 0.0 {
        r + TAU
    } else if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Reduces an angle to `(-π, π]`.
#[inline]
pub fn wrap_pi(a: f64) -> f64 {
    let r = wrap_tau(a);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// Result of a bracketing root search.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub x: f64,
    pub value: f64,
    pub iterations: usize,
}

/// Bisection for a function that is positive at `lo` and negative at `hi`
/// (or the reverse). `done(x, fx)` decides convergence; the loop also stops
/// once the bracket collapses to adjacent floats.
///
/// Returns `None` when the endpoints do not bracket a sign change.
pub fn bisect<F, D>(mut f: F, mut lo: f64, mut hi: f64, max_iter: usize, mut done: D) -> Option<Root>
where
    F: FnMut(f64) -> f64,
    D: FnMut(f64, f64) -> bool,
{
    let f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Some(Root { x: lo, value: 0.0, iterations: 0 });
    }
    if f_hi == 0.0 {
        return Some(Root { x: hi, value: 0.0, iterations: 0 });
    }
    if (f_lo > 0.0) == (f_hi > 0.0) || f_lo.is_nan() || f_hi.is_nan() {
        return None;
    }
    let lo_positive = f_lo > 0.0;
    let mut best = if f_lo.abs() < f_hi.abs() {
        Root { x: lo, value: f_lo, iterations: 0 }
    } else {
        Root { x: hi, value: f_hi, iterations: 0 }
    };
    for it in 1..=max_iter {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            best.iterations = it;
            return Some(best);
        }
        let fm = f(mid);
        if fm.abs() <= best.value.abs() || best.iterations == 0 {
            best = Root { x: mid, value: fm, iterations: it };
        }
        best.iterations = it;
        if fm == 0.0 || done(mid, fm) {
            return Some(Root { x: mid, value: fm, iterations: it });
        }
        if (fm > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(best)
}

/// Bisection run until the bracket is exhausted in double precision.
pub fn bisect_full<F: FnMut(f64) -> f64>(f: F, lo: f64, hi: f64) -> Option<Root> {
    bisect(f, lo, hi, 2000, |_, _| false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt_two() {
        let root = bisect_full(|x| 2.0 - x * x, 0.0, 2.0).unwrap();
        assert!((root.x - core::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn bisect_rejects_missing_sign_change() {
        assert!(bisect_full(|x| 1.0 + x * x, -1.0, 1.0).is_none());
    }

    #[test]
    fn bisect_respects_stopping_rule() {
        let root = bisect(|x| 1.0 - x, 0.0, 3.0, 200, |_, fx| fx.abs() < 1e-3).unwrap();
        assert!((root.x - 1.0).abs() < 1e-3);
        assert!(root.iterations < 20);
    }

    #[test]
    fn angle_wrapping() {
        assert!((wrap_tau(-0.5) - (TAU - 0.5)).abs() < 1e-15);
        assert!((wrap_pi(3.0 * PI / 2.0) + PI / 2.0).abs() < 1e-15);
        assert_eq!(wrap_tau(TAU), 0.0);
    }
}
