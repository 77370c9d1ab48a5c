//! Explicit forms of the short-interval lower bound for `S(t + h) − S(t)` and
//! of the gap bounds it implies.
//!
//! Unspecified absolute constants are taken as configurable envelopes with
//! default 1; they are not claims about the true constants.

use std::f64::consts::{PI, SQRT_2};

use crate::error::{Error, Result};
use crate::limitation::Direction;
use crate::optimize::bisect;

/// Default constant for every envelope term.
pub const DEFAULT_ENVELOPE_CONSTANT: f64 = 1.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShortIntervalBound {
    /// `√(h log T / π)`.
    pub main: f64,
    /// `√(h log log T) + min{√(log³(h log T)/(h log T)), (log log T)^{3/2}/(h^{3/2} log T)}`.
    pub envelope: f64,
}

/// Lower bound for `sup_{T≤t≤2T} ±(S(t+h) − S(t))`, as main term and
/// relative error envelope (unit constant).
pub fn theorem1_lower(t: f64, h: f64) -> Result<ShortIntervalBound> {
    if !(t >= 16.0 && t.is_finite()) {
        return Err(Error::domain(format!("T must be finite and ≥ 16, got {t}")));
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::domain(format!("h must be positive and finite, got {h}")));
    }
    let log_t = t.ln();
    let h_log_t = h * log_t;
    if h_log_t <= 1.0 {
        return Err(Error::domain(format!("h·log T = {h_log_t} must exceed 1")));
    }
    let loglog_t = log_t.ln();
    let short = (h_log_t.ln().powi(3) / h_log_t).sqrt();
    let long = loglog_t.powf(1.5) / (h.powf(1.5) * log_t);
    Ok(ShortIntervalBound { main: (h_log_t / PI).sqrt(), envelope: (h * loglog_t).sqrt() + short.min(long) })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GapBound {
    pub r: u64,
    /// `1 + √2/√r`.
    pub lambda_lower_main: f64,
    /// `1 − √2/√r`.
    pub mu_upper_main: f64,
    /// `C₁ (log r)^{3/2} / r`.
    pub lambda_correction: f64,
    /// `C₂ (log r)^{3/2} / r`.
    pub mu_correction: f64,
}

impl GapBound {
    pub fn lambda_lower(&self) -> f64 {
        self.lambda_lower_main - self.lambda_correction
    }

    pub fn mu_upper(&self) -> f64 {
        self.mu_upper_main + self.mu_correction
    }
}

/// `λ_r ≥ 1 + √2/√r − C₁(log r)^{3/2}/r` and `μ_r ≤ 1 − √2/√r + C₂(log r)^{3/2}/r`.
pub fn theorem2_bounds(r: u64, c1: f64, c2: f64) -> Result<GapBound> {
    if r < 2 {
        return Err(Error::domain(format!("r must be ≥ 2, got {r}")));
    }
    if !(c1 >= 0.0 && c2 >= 0.0 && c1.is_finite() && c2.is_finite()) {
        return Err(Error::domain(format!("envelope constants must be finite and ≥ 0, got {c1}, {c2}")));
    }
    let rf = r as f64;
    let main = SQRT_2 / rf.sqrt();
    let scale = rf.ln().powf(1.5) / rf;
    Ok(GapBound {
        r,
        lambda_lower_main: 1.0 + main,
        mu_upper_main: 1.0 - main,
        lambda_correction: c1 * scale,
        mu_correction: c2 * scale,
    })
}

/// Side conditions turning an `S`-increment of size `b` over a window of
/// normalized length `rθ'` into a gap statement (strict inequalities):
/// lambda needs `θ' > 1` and `b > r(θ' − 1)`, mu needs `0 < θ' < 1` and
/// `b > r(1 − θ')`.
pub fn prop5_check(b: f64, theta_prime: f64, r: u64, direction: Direction) -> Result<bool> {
    if !(b > 0.0 && theta_prime > 0.0 && b.is_finite() && theta_prime.is_finite()) {
        return Err(Error::domain(format!("need b > 0 and θ' > 0, got b = {b}, θ' = {theta_prime}")));
    }
    if r == 0 {
        return Err(Error::domain("r must be ≥ 1"));
    }
    let rf = r as f64;
    Ok(match direction {
        Direction::Lambda => theta_prime > 1.0 && b > rf * (theta_prime - 1.0),
        Direction::Mu => theta_prime < 1.0 && b > rf * (1.0 - theta_prime),
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChainedBound {
    pub r: u64,
    pub direction: Direction,
    /// The extreme `θ'` for which the side conditions still hold.
    pub theta_prime: f64,
    /// `|θ' − 1|`, to be compared with `√2/√r`.
    pub gap: f64,
    /// Window `h = 2πrθ'/log T` at that `θ'`.
    pub h: f64,
}

/// Chains [`theorem1_lower`] (main term, at `h = 2πrθ'/log T`) into
/// [`prop5_check`]: the largest (lambda) or smallest (mu) `θ'` for which the
/// increment `b = √(h log T/π)` satisfies the side conditions.
pub fn theorem2_from_theorem1(r: u64, t: f64, direction: Direction) -> Result<ChainedBound> {
    if r == 0 {
        return Err(Error::domain("r must be ≥ 1"));
    }
    let rf = r as f64;
    let log_t = t.ln();
    let window = |theta: f64| 2.0 * PI * rf * theta / log_t;
    let increment = |theta: f64| theorem1_lower(t, window(theta)).map(|b| b.main);
    // margin(θ') > 0 exactly when the side condition on b holds
    let margin = |theta: f64| {
        let b = increment(theta).unwrap_or(0.0);
        match direction {
            Direction::Lambda => b - rf * (theta - 1.0),
            Direction::Mu => b - rf * (1.0 - theta),
        }
    };
    let (lo, hi) = match direction {
        Direction::Lambda => (1.0, 1.0 + 4.0 / rf.sqrt() + 4.0 / rf),
        Direction::Mu => (1.0 / (PI * rf), 1.0),
    };
    // theorem1_lower's own preconditions must hold across the bracket
    increment(lo)?;
    let theta_prime = bisect(margin, lo, hi, 1e-14)?;
    Ok(ChainedBound { r, direction, theta_prime, gap: (theta_prime - 1.0).abs(), h: window(theta_prime) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn theorem1_values_at_ten_to_ten() {
        let b = theorem1_lower(1e10, 0.1).unwrap();
        assert!(rel(b.main, 0.856_116_580_191_873) < 1e-13);
        assert!(rel(b.envelope, 1.062_012_203_094_896) < 1e-13);
    }

    #[test]
    fn main_term_scales_as_sqrt_h() {
        let a = theorem1_lower(1e8, 0.3).unwrap().main;
        let b = theorem1_lower(1e8, 1.2).unwrap().main;
        assert!(rel(b, 2.0 * a) < 1e-14);
    }

    #[test]
    fn envelope_branches_meet_continuously() {
        let t: f64 = 1e12;
        let log_t = t.ln();
        let loglog = log_t.ln();
        let diff = |h: f64| {
            let x = h * log_t;
            (x.ln().powi(3) / x).sqrt() - loglog.powf(1.5) / (h.powf(1.5) * log_t)
        };
        let h_star = bisect(diff, 0.05, 50.0, 1e-14).unwrap();
        let below = theorem1_lower(t, h_star * (1.0 - 1e-9)).unwrap().envelope;
        let above = theorem1_lower(t, h_star * (1.0 + 1e-9)).unwrap().envelope;
        assert!((below - above).abs() < 1e-7);
    }

    #[test]
    fn theorem1_domain() {
        assert!(theorem1_lower(10.0, 1.0).is_err());
        assert!(theorem1_lower(1e6, 0.01).is_err());
    }

    #[test]
    fn theorem2_at_one_million() {
        let g = theorem2_bounds(1_000_000, 1.0, 1.0).unwrap();
        assert!(rel(g.lambda_lower_main, 1.001_414_213_562_373_1) < 1e-15);
        assert!(rel(g.lambda_correction, 5.135_117_774_318_66e-5) < 1e-12);
        assert!(g.lambda_lower_main > 1.0 && 1.0 > g.mu_upper_main);
    }

    #[test]
    fn theorem2_degenerates_where_terms_meet() {
        // choose C₁ = C₂ so that √2/√r = C (log r)^{3/2}/r at r = 5000
        let r = 5000u64;
        let rf = r as f64;
        let c = SQRT_2 * rf.sqrt() / rf.ln().powf(1.5);
        let g = theorem2_bounds(r, c, c).unwrap();
        assert!((g.lambda_lower() - 1.0).abs() < 1e-15);
        assert!((g.mu_upper() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn lambda_main_decreases_toward_one() {
        let mut prev = f64::INFINITY;
        for r in [2, 10, 100, 10_000, 1_000_000] {
            let g = theorem2_bounds(r, 1.0, 1.0).unwrap();
            assert!(g.lambda_lower_main < prev && g.lambda_lower_main > 1.0);
            prev = g.lambda_lower_main;
        }
    }

    #[test]
    fn side_conditions() {
        let r = 50;
        let theta = 1.2;
        let base = r as f64 * (theta - 1.0);
        assert!(prop5_check(base + 1.0 / 3.0, theta, r, Direction::Lambda).unwrap());
        assert!(!prop5_check(base, theta, r, Direction::Lambda).unwrap());
        assert!(!prop5_check(100.0, 0.9, r, Direction::Lambda).unwrap());
        let mu_theta = 0.8;
        let mu_base = r as f64 * (1.0 - mu_theta);
        assert!(prop5_check(mu_base + 1e-9, mu_theta, r, Direction::Mu).unwrap());
        assert!(!prop5_check(mu_base, mu_theta, r, Direction::Mu).unwrap());
        assert!(prop5_check(0.0, 1.1, r, Direction::Lambda).is_err());
    }

    #[test]
    fn instantiation_with_log_power_margin() {
        for r in [1_000u64, 100_000, 10_000_000] {
            let rf = r as f64;
            let corr = rf.ln().powf(1.5);
            let theta = 1.0 + SQRT_2 / rf.sqrt() - 0.5 * corr / rf;
            let b = rf * (theta - 1.0) + corr / 3.0;
            assert!(prop5_check(b, theta, r, Direction::Lambda).unwrap());
        }
    }

    #[test]
    fn chain_reproduces_sqrt2_over_sqrt_r() {
        for r in [100u64, 10_000, 1_000_000] {
            let envelope = theorem2_bounds(r, 1.0, 1.0).unwrap().lambda_correction;
            for dir in [Direction::Lambda, Direction::Mu] {
                let c = theorem2_from_theorem1(r, 1e30, dir).unwrap();
                assert!((c.gap - SQRT_2 / (r as f64).sqrt()).abs() <= envelope, "{r} {dir}");
            }
        }
    }

    #[test]
    fn main_term_matches_resonator_target() {
        // L = T/(log T)², target √(h log L/π); ratio is √(log L/log T)
        for t in [1e8f64, 1e20, 1e60] {
            let h = 0.4;
            let log_t = t.ln();
            let log_l = log_t - 2.0 * log_t.ln();
            let target = (h * log_l / PI).sqrt();
            let main = theorem1_lower(t, h).unwrap().main;
            assert!(rel(main * (log_l / log_t).sqrt(), target) < 1e-12);
        }
    }
}
