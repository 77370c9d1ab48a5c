//! `τ(ξ; f)` for arbitrary coefficient tables, and the upper bounds that
//! limit it.
//!
//! Both bounds have the shape `max_{x∈[0,1]} √W/2 · φ(c(1−x)) + b·x`; with
//! `u = c(1−x)` this is `a φ(u) + b(1 − u/c)`, `a = √W/2`. Since
//! `φ'(u) = sinc²(u) ≤ 1/(πu)²` and `b/(ac) = 4/W`, the objective decreases
//! for `u > √W/2π`, so only `[0, min(c, √W/2π + 1)]` is searched.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::coefficients::CoefficientTable;
use crate::error::{Error, Result};
use crate::optimize::golden_max;
use crate::primes::PrimeTable;
use crate::special::sinc_sq_integral;
use crate::summation::par_sum_by;

/// Largest `L` accepted by [`quotient_bruteforce`].
pub const BRUTEFORCE_MAX_L: u64 = 100_000;

/// Constant of the `O(h)` envelope reported with [`theorem3_bound_h`].
pub const C_ENV: f64 = 5.0;

/// Minimum number of grid cells across `x ∈ [0, 1]`.
pub const MIN_GRID: usize = 2048;

/// Minimum number of grid cells per unit of `u` (one sinc² lobe).
pub const CELLS_PER_LOBE: f64 = 16.0;

/// Literal double sum
/// `(2/π) Σ_{k=p^a ≤ L} Σ_{m ≤ L/k} Λ(k)/(√k log k) · sin((h/2) log k) · f(m) f(km)`
/// divided by `Σ_{n≤L} f(n)²`.
pub fn quotient_bruteforce(coeffs: &CoefficientTable, limit: u64, h: f64, table: &PrimeTable) -> Result<f64> {
    if limit > BRUTEFORCE_MAX_L {
        return Err(Error::domain(format!(
            "brute-force quotient is quadratic; L = {limit} exceeds {BRUTEFORCE_MAX_L}"
        )));
    }
    if !h.is_finite() {
        return Err(Error::domain(format!("window h must be finite, got {h}")));
    }
    table.require_limit(limit)?;
    let denominator = coeffs.norm_sq(limit);
    if denominator == 0.0 {
        return Err(Error::ZeroCoefficients);
    }
    let dense = coeffs.to_dense(limit);
    let support: Vec<(u64, f64)> = coeffs.entries().iter().copied().filter(|&(n, v)| n <= limit && v != 0.0).collect();
    let truncated = table.truncated(limit.max(2))?;
    let powers: Vec<(u64, f64)> = truncated
        .prime_powers()
        .map(|pp| {
            let k = pp.value as f64;
            // Λ(p^a)/log(p^a) = 1/a
            let w = (0.5 * h * k.ln()).sin() / (pp.exponent as f64 * k.sqrt());
            (pp.value, w)
        })
        .collect();

    let numerator = par_sum_by(&powers, |&(k, w)| {
        let top = limit / k;
        let mut inner = 0.0;
        for &(m, fm) in support.iter().take_while(|&&(m, _)| m <= top) {
            inner += fm * dense[(k * m) as usize];
        }
        w * inner
    });
    Ok(2.0 / PI * numerator / denominator)
}

/// `τ(ξ; f) = ξ − quotient` with `h = 2πξ / log T`.
pub fn tau_eval(xi: f64, coeffs: &CoefficientTable, limit: u64, log_t: f64, table: &PrimeTable) -> Result<f64> {
    if !(xi > 0.0 && xi.is_finite()) {
        return Err(Error::domain(format!("xi must be positive and finite, got {xi}")));
    }
    if !(log_t >= (limit as f64).ln()) {
        return Err(Error::domain(format!("log T = {log_t} must be ≥ log L")));
    }
    let h = 2.0 * PI * xi / log_t;
    Ok(xi - quotient_bruteforce(coeffs, limit, h, table)?)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundEvaluation {
    pub w: f64,
    /// `x = log l / log L` at the maximum.
    pub maximizer_x: f64,
    pub bound: f64,
    /// `C_ENV · h` for the window form; `None` otherwise.
    pub envelope: Option<f64>,
}

fn check_w(w: f64) -> Result<()> {
    if !(w > 0.0 && w.is_finite()) {
        return Err(Error::domain(format!("W must be positive and finite, got {w}")));
    }
    Ok(())
}

/// `max_x √W/2 · φ((h/2π) log L · (1−x)) + (h log L/(π√W)) · x`, plus the
/// `C_ENV · h` envelope.
pub fn theorem3_bound_h(h: f64, limit: u64, w: f64) -> Result<BoundEvaluation> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::domain(format!("window h must be positive and finite, got {h}")));
    }
    if limit < 2 {
        return Err(Error::domain(format!("L must be ≥ 2, got {limit}")));
    }
    check_w(w)?;
    let h_log_l = h * (limit as f64).ln();
    let c = h_log_l / (2.0 * PI);
    let b = h_log_l / (PI * w.sqrt());
    let mut eval = SincProfile::for_weight(c, w).maximize(w, b);
    eval.envelope = Some(C_ENV * h);
    Ok(eval)
}

/// `max_x √W/2 · φ(ξ(1−x)) + (2ξ/√W) · x`.
pub fn theorem3_bound_xi(xi: f64, w: f64) -> Result<BoundEvaluation> {
    if !(xi > 0.0 && xi.is_finite()) {
        return Err(Error::domain(format!("xi must be positive and finite, got {xi}")));
    }
    check_w(w)?;
    Ok(SincProfile::for_weight(xi, w).maximize(w, 2.0 * xi / w.sqrt()))
}

/// Beyond this `u` the bound objective is strictly decreasing.
pub fn decreasing_beyond(w: f64) -> f64 {
    w.sqrt() / (2.0 * PI) + 1.0
}

/// Bound on `|d²/du² sinc²|` over `[u, ∞)`.
fn sinc_sq_curvature_bound(u: f64) -> f64 {
    if u < 1.0 {
        7.0
    } else {
        (4.0 / (u * u)).min(7.0)
    }
}

/// `φ` tabulated on the search grid `u_i = iΔ`, `Δ = min(c/2048, 1/16)`, for
/// one scale `c`. Reused across many weights `W` at fixed `c`.
#[derive(Clone, Debug)]
pub struct SincProfile {
    scale: f64,
    step: f64,
    phi: Vec<f64>,
}

impl SincProfile {
    /// Tabulates `[0, min(c, u_cover)]`.
    pub fn new(scale: f64, u_cover: f64) -> Self {
        Self::with_step(scale, u_cover, (scale / MIN_GRID as f64).min(1.0 / CELLS_PER_LOBE))
    }

    /// Same with an explicit grid step, for refinement studies.
    pub fn with_step(scale: f64, u_cover: f64, step: f64) -> Self {
        let upper = scale.min(u_cover);
        let cells = (upper / step).floor() as usize;
        let phi = (0..=cells).into_par_iter().map(|i| sinc_sq_integral(i as f64 * step)).collect();
        Self { scale, step, phi }
    }

    /// A profile wide enough for weight `w`.
    pub fn for_weight(scale: f64, w: f64) -> Self {
        Self::new(scale, decreasing_beyond(w))
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    fn covered(&self) -> f64 {
        (self.phi.len() - 1) as f64 * self.step
    }

    /// Maximizes `√w/2 · φ(u) + b(1 − u/c)` over `u ∈ [0, c]`.
    ///
    /// Panics if the profile does not reach `min(c, decreasing_beyond(w))`.
    pub fn maximize(&self, w: f64, b: f64) -> BoundEvaluation {
        let a = 0.5 * w.sqrt();
        let c = self.scale;
        let upper = c.min(decreasing_beyond(w));
        let cells = (upper / self.step).floor() as usize;
        assert!(
            cells < self.phi.len() && self.covered() + self.step > upper,
            "profile covers u ≤ {} but {upper} is needed",
            self.covered()
        );
        let objective = |u: f64| a * sinc_sq_integral(u) + b * (1.0 - u / c);

        let mut us: Vec<f64> = (0..=cells).map(|i| i as f64 * self.step).collect();
        let mut vals: Vec<f64> = (0..=cells).map(|i| a * self.phi[i] + b * (1.0 - us[i] / c)).collect();
        if upper - us[cells] > 1e-12 * upper.max(1.0) {
            us.push(upper);
            vals.push(objective(upper));
        }
        let n = vals.len();
        let best_grid = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);

        let mut best_u = 0.0;
        let mut best_v = f64::NEG_INFINITY;
        for i in 0..n {
            if vals[i] > best_v {
                best_u = us[i];
                best_v = vals[i];
            }
        }
        // A cell can only beat its endpoints by a·|sinc²''|·Δ²/8; refine those
        // that might beat the best value so far, most promising first.
        let mut cells: Vec<(usize, f64)> = (0..n.saturating_sub(1))
            .filter_map(|i| {
                let width = us[i + 1] - us[i];
                let hidden = a * sinc_sq_curvature_bound(us[i]) * width * width / 8.0;
                let potential = vals[i].max(vals[i + 1]) + hidden;
                (potential >= best_grid).then_some((i, potential))
            })
            .collect();
        cells.sort_by(|x, y| y.1.total_cmp(&x.1).then(x.0.cmp(&y.0)));
        for (i, potential) in cells {
            if potential <= best_v {
                continue;
            }
            let (u, v) = golden_max(objective, us[i], us[i + 1], 1e-6 * self.step);
            if v > best_v {
                best_u = u;
                best_v = v;
            }
        }
        BoundEvaluation { w, maximizer_x: (1.0 - best_u / c).clamp(0.0, 1.0), bound: best_v, envelope: None }
    }
}
