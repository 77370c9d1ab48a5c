//! One-dimensional bisection and golden-section search.

use crate::error::{Error, Result};

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Root of `f` in `[lo, hi]` by bisection until the bracket is at most `xtol` wide.
///
/// `f(lo)` and `f(hi)` must have opposite signs (or one of them be zero).
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, xtol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::Bracketing { lo, hi, detail: format!("f(lo) = {f_lo}, f(hi) = {f_hi}") });
    }
    while hi - lo > xtol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Maximizer of `f` on `[lo, hi]`, assuming a single interior peak.
///
/// Returns `(argmax, max)`; the endpoints are compared against the interior
/// result so a monotone `f` still yields the right end.
pub fn golden_max<F>(mut f: F, mut lo: f64, mut hi: f64, xtol: f64) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    let (a0, b0) = (lo, hi);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > xtol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    let mut best = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    for x in [a0, b0] {
        let v = f(x);
        if v > best.1 {
            best = (x, v);
        }
    }
    best
}

/// Minimizer counterpart of [`golden_max`].
pub fn golden_min<F>(mut f: F, lo: f64, hi: f64, xtol: f64) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    let (x, v) = golden_max(|x| -f(x), lo, hi, xtol);
    (x, -v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_sqrt_two() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-13);
    }

    #[test]
    fn bisect_rejects_same_sign() {
        assert!(matches!(bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-9), Err(Error::Bracketing { .. })));
    }

    #[test]
    fn golden_finds_parabola_peak() {
        let (x, v) = golden_max(|x| -(x - 0.3) * (x - 0.3) + 2.0, 0.0, 1.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-7);
        assert!((v - 2.0).abs() < 1e-15);
    }

    #[test]
    fn golden_handles_monotone_endpoint() {
        let (x, v) = golden_max(|x| x, 0.0, 1.0, 1e-10);
        assert_eq!(x, 1.0);
        assert_eq!(v, 1.0);
        let (x, _) = golden_min(|x| x, 0.0, 1.0, 1e-10);
        assert_eq!(x, 0.0);
    }
}
