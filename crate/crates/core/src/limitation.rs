//! Where the upper bound `B(ξ, W)` stops the method.
//!
//! For `r` consecutive gaps the method can certify `λ_r ≥ ξ` only while
//! `ξ − B(ξ, W) < r`, and `μ_r ≤ ξ` only while `ξ + B(ξ, W) > r`. The
//! crossings `ξ₀` are the limitations; normalized by `r` they approach
//! `1 ± √2/√r`.

use std::f64::consts::SQRT_2;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::optimize::{bisect, golden_min};
use crate::tau::{decreasing_beyond, SincProfile};

/// Bisection tolerance on `ξ`.
pub const XI_TOL: f64 = 1e-7;

/// Log-spaced points in the coarse `W` scan.
pub const W_SCAN_POINTS: usize = 256;

pub const W_SCAN_MIN: f64 = 0.1;

/// Grid points used to verify monotonicity and locate the sign change.
const BRACKET_SCAN_POINTS: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Lambda,
    Mu,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Lambda => "lambda",
            Direction::Mu => "mu",
        })
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lambda" => Ok(Direction::Lambda),
            "mu" => Ok(Direction::Mu),
            other => Err(Error::domain(format!("direction must be lambda or mu, got {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum WChoice {
    Fixed(f64),
    /// Minimize `B(ξ, W)` over `W` at every `ξ`.
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitationResult {
    pub r: u64,
    pub direction: Direction,
    /// The fixed `W`, or the optimal `W` at `xi0`.
    pub w: f64,
    pub xi0: f64,
    /// `|ξ₀ ∓ B(ξ₀, W) − r|`.
    pub residual: f64,
    pub w_optimized: bool,
}

impl LimitationResult {
    /// `ξ₀ / r`, comparable with `1 ± √2/√r`.
    pub fn normalized(&self) -> f64 {
        self.xi0 / self.r as f64
    }
}

/// Upper end of the `W` scan at `ξ`; the optimal `W` grows roughly like `8ξ`.
pub fn w_scan_max(xi: f64) -> f64 {
    1e3 * xi.max(1.0)
}

/// `min_W B(ξ, W)` over `[0.1, 10³·max(1, ξ)]` with its minimizer.
pub fn min_bound_over_w(xi: f64) -> Result<(f64, f64)> {
    if !(xi > 0.0 && xi.is_finite()) {
        return Err(Error::domain(format!("xi must be positive and finite, got {xi}")));
    }
    let w_hi = w_scan_max(xi);
    let profile = SincProfile::new(xi, decreasing_beyond(w_hi));
    Ok(min_over_w(&profile, xi, w_hi))
}

fn bound_at(profile: &SincProfile, xi: f64, w: f64) -> f64 {
    profile.maximize(w, 2.0 * xi / w.sqrt()).bound
}

fn min_over_w(profile: &SincProfile, xi: f64, w_hi: f64) -> (f64, f64) {
    let (lo, hi) = (W_SCAN_MIN.ln(), w_hi.ln());
    let step = (hi - lo) / (W_SCAN_POINTS - 1) as f64;
    let values: Vec<f64> =
        (0..W_SCAN_POINTS).into_par_iter().map(|i| bound_at(profile, xi, (lo + i as f64 * step).exp())).collect();
    let mut best = 0;
    for (i, &v) in values.iter().enumerate() {
        if v < values[best] {
            best = i;
        }
    }
    let a = lo + best.saturating_sub(1) as f64 * step;
    let b = lo + (best + 1).min(W_SCAN_POINTS - 1) as f64 * step;
    let (log_w, v) = golden_min(|t| bound_at(profile, xi, t.exp()), a, b, 1e-9);
    if v <= values[best] {
        (v, log_w.exp())
    } else {
        (values[best], (lo + best as f64 * step).exp())
    }
}

fn bound(xi: f64, w: WChoice) -> (f64, f64) {
    match w {
        WChoice::Fixed(w) => (bound_at(&SincProfile::for_weight(xi, w), xi, w), w),
        WChoice::Auto => {
            let w_hi = w_scan_max(xi);
            min_over_w(&SincProfile::new(xi, decreasing_beyond(w_hi)), xi, w_hi)
        }
    }
}

/// Solves `ξ − B(ξ, W) = r` (lambda) or `ξ + B(ξ, W) = r` (mu, smallest root).
pub fn limitation_solve(r: u64, direction: Direction, w: WChoice) -> Result<LimitationResult> {
    if r == 0 {
        return Err(Error::domain("r must be ≥ 1"));
    }
    if let WChoice::Fixed(w) = w {
        if !(w > 0.0 && w.is_finite()) {
            return Err(Error::domain(format!("W must be positive and finite, got {w}")));
        }
    }
    let rf = r as f64;
    let sign = match direction {
        Direction::Lambda => -1.0,
        Direction::Mu => 1.0,
    };
    let g = |xi: f64| xi + sign * bound(xi, w).0 - rf;

    let (lo, hi) = match direction {
        Direction::Lambda => (rf, rf + 4.0 * rf.sqrt() + 4.0),
        Direction::Mu => (0.0, rf),
    };
    let (lo, hi) = scan_bracket(&g, lo, hi, direction)?;
    let xi0 = bisect(g, lo, hi, XI_TOL)?;
    let (b, w_used) = bound(xi0, w);
    let residual = (xi0 + sign * b - rf).abs();
    Ok(LimitationResult { r, direction, w: w_used, xi0, residual, w_optimized: matches!(w, WChoice::Auto) })
}

// Checks that g is nondecreasing on a grid over the bracket and returns the
// first grid cell with a sign change.
fn scan_bracket<G>(g: &G, lo: f64, hi: f64, direction: Direction) -> Result<(f64, f64)>
where
    G: Fn(f64) -> f64 + Sync,
{
    // the mu equation is evaluated on (0, r]: g(0+) = −r
    let start = match direction {
        Direction::Lambda => lo,
        Direction::Mu => hi / BRACKET_SCAN_POINTS as f64 * 1e-3,
    };
    let xs: Vec<f64> =
        (0..=BRACKET_SCAN_POINTS).map(|i| start + (hi - start) * i as f64 / BRACKET_SCAN_POINTS as f64).collect();
    let gs: Vec<f64> = xs.par_iter().map(|&x| g(x)).collect();
    for i in 1..xs.len() {
        let slack = 1e-9 * (1.0 + xs[i].abs());
        if gs[i] < gs[i - 1] - slack {
            return Err(Error::Monotonicity {
                at: xs[i],
                detail: format!("g({}) = {} < g({}) = {}", xs[i], gs[i], xs[i - 1], gs[i - 1]),
            });
        }
    }
    if gs[0] > 0.0 {
        return Err(Error::Bracketing {
            lo: xs[0],
            hi,
            detail: format!("equation is already positive at the lower end ({})", gs[0]),
        });
    }
    match (1..xs.len()).find(|&i| gs[i] > 0.0) {
        Some(i) => Ok((xs[i - 1], xs[i])),
        None => Err(Error::Bracketing {
            lo: xs[0],
            hi,
            detail: format!("equation stays ≤ 0, reaching {} at the upper end", gs[gs.len() - 1]),
        }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymptoteRow {
    pub r: u64,
    pub lambda: LimitationResult,
    pub mu: LimitationResult,
    /// `(ξ_λ/r − 1)√r − √2`.
    pub lambda_deviation: f64,
    /// `(1 − ξ_μ/r)√r − √2`.
    pub mu_deviation: f64,
}

/// Both limitations with optimized `W` for each `r ≥ 10`, and their distance
/// from the `1 ± √2/√r` asymptote.
pub fn sqrt2_asymptote_check(r_list: &[u64]) -> Result<Vec<AsymptoteRow>> {
    if let Some(&r) = r_list.iter().find(|&&r| r < 10) {
        return Err(Error::domain(format!("asymptote check needs r ≥ 10, got {r}")));
    }
    r_list
        .iter()
        .map(|&r| {
            let lambda = limitation_solve(r, Direction::Lambda, WChoice::Auto)?;
            let mu = limitation_solve(r, Direction::Mu, WChoice::Auto)?;
            let root = (r as f64).sqrt();
            Ok(AsymptoteRow {
                r,
                lambda,
                mu,
                lambda_deviation: (lambda.normalized() - 1.0) * root - SQRT_2,
                mu_deviation: (1.0 - mu.normalized()) * root - SQRT_2,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tau::theorem3_bound_xi;

    #[test]
    fn lambda_one_with_fixed_w() {
        let res = limitation_solve(1, Direction::Lambda, WChoice::Fixed(22.6)).unwrap();
        // scipy brentq on the same functional
        assert!((res.xi0 - 3.021_809_964_6).abs() < 1e-6);
        assert!(res.residual <= 1e-6);
        assert!(!res.w_optimized);
    }

    #[test]
    fn mu_one_with_fixed_w() {
        let res = limitation_solve(1, Direction::Mu, WChoice::Fixed(4.9)).unwrap();
        assert!((res.xi0 - 0.508_126_121_7).abs() < 1e-6);
        assert!(res.residual <= 1e-6);
        assert!(res.xi0 > 0.0 && res.xi0 < 1.0);
    }

    #[test]
    fn auto_w_improves_lambda_one() {
        let res = limitation_solve(1, Direction::Lambda, WChoice::Auto).unwrap();
        assert!((res.xi0 - 3.021_321_0).abs() < 1e-5);
        assert!((15.0..=35.0).contains(&res.w));
        assert!(res.w_optimized);
    }

    #[test]
    fn auto_w_never_worse_than_fixed() {
        for xi in [0.3, 1.0, 3.0, 12.0, 150.0] {
            let (best, _) = min_bound_over_w(xi).unwrap();
            let fixed = theorem3_bound_xi(xi, 22.6).unwrap().bound;
            assert!(best <= fixed + 1e-12);
        }
    }

    #[test]
    fn repeated_runs_are_bit_identical() {
        let a = limitation_solve(7, Direction::Mu, WChoice::Auto).unwrap();
        let b = limitation_solve(7, Direction::Mu, WChoice::Auto).unwrap();
        assert_eq!(a.xi0.to_bits(), b.xi0.to_bits());
        assert_eq!(a.w.to_bits(), b.w.to_bits());
    }

    #[test]
    fn normalized_limits_straddle_one() {
        for r in [2, 5, 30] {
            let lam = limitation_solve(r, Direction::Lambda, WChoice::Auto).unwrap();
            let mu = limitation_solve(r, Direction::Mu, WChoice::Auto).unwrap();
            assert!(lam.normalized() > 1.0);
            assert!(mu.normalized() > 0.0 && mu.normalized() < 1.0);
        }
    }

    #[test]
    fn small_r_rejected_by_asymptote_check() {
        assert!(matches!(sqrt2_asymptote_check(&[5]), Err(Error::Domain(_))));
    }

    #[test]
    fn asymptote_at_one_hundred() {
        let rows = sqrt2_asymptote_check(&[100]).unwrap();
        assert!((rows[0].lambda_deviation - 0.05605).abs() < 1e-4);
        assert!((rows[0].mu_deviation + 0.13714).abs() < 1e-4);
    }
}
