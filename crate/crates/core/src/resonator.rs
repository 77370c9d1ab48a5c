//! The explicit resonator: its parameters, its squarefree support, and the
//! resonance quotient it produces.
//!
//! For a cutoff `L` and window `h` the resonator is the multiplicative
//! function supported on squarefree `n ≤ L` whose prime factors lie in
//! `(M, L]`, with
//!
//! ```text
//! f(p) = ±√Q · sin((h/2) log p) / (p^{1/2+κh} · h log p)
//! M = exp(√(log log L / h)),   y = √(log(h log L) / (h log L)),
//! κ = log(h log L) / (y h log L),   ℒ = h log L / 2π,
//! Q = 4κ(1 − y) h log L / (π φ₃(ℒ; κ)).
//! ```

use std::f64::consts::PI;
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::coefficients::{CoefficientTable, FactorLink};
use crate::error::{Error, Result};
use crate::primes::PrimeTable;
use crate::quadrature::{self, DEFAULT_TOL};
use crate::summation::CompensatedSum;

/// Default cap on the number of support elements.
pub const DEFAULT_SUPPORT_CAP: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Why a parameter set lies outside the regime where the asymptotics apply.
///
/// Non-fatal: every quantity is still well defined.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RangeWarning {
    /// `h log L < 8`.
    WindowTooShort { h_log_l: f64 },
    /// `h log log L > 1/4`.
    WindowTooLong { h_loglog_l: f64 },
}

impl fmt::Display for RangeWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RangeWarning::WindowTooShort { h_log_l } => {
                write!(f, "h·log L = {h_log_l:.4} < 8: below the asymptotic window")
            }
            RangeWarning::WindowTooLong { h_loglog_l } => {
                write!(f, "h·log log L = {h_loglog_l:.4} > 1/4: above the asymptotic window")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResonatorParams {
    pub limit: u64,
    pub h: f64,
    pub sign: Sign,
    /// `M`; primes `≤ M` are excluded from the support.
    pub lower_cutoff: f64,
    pub y: f64,
    pub kappa: f64,
    /// `α = κh`.
    pub alpha: f64,
    /// `Q`.
    pub amplitude_sq: f64,
    /// `ℒ = h log L / 2π`.
    pub scaled_length: f64,
    /// `φ₃(ℒ; κ)` as used for `Q`.
    pub phi3: f64,
    pub warnings: Vec<RangeWarning>,
}

/// Derives the resonator parameters for cutoff `limit`, window `h` and `sign`.
pub fn derive_params(limit: u64, h: f64, sign: Sign) -> Result<ResonatorParams> {
    if limit < 16 {
        return Err(Error::domain(format!("resonator cutoff L must be ≥ 16, got {limit}")));
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::domain(format!("window h must be positive and finite, got {h}")));
    }
    let log_l = (limit as f64).ln();
    let h_log_l = h * log_l;
    if h_log_l <= 1.0 {
        return Err(Error::domain(format!("h·log L = {h_log_l} must exceed 1")));
    }
    let log_h_log_l = h_log_l.ln();
    let loglog_l = log_l.ln();
    let lower_cutoff = (loglog_l / h).sqrt().exp();
    let y = (log_h_log_l / h_log_l).sqrt();
    let kappa = log_h_log_l / (y * h_log_l);
    let alpha = kappa * h;
    let scaled_length = h_log_l / (2.0 * PI);
    let phi3 = quadrature::phi3(scaled_length, kappa, DEFAULT_TOL)?.value;
    let amplitude_sq = 4.0 * kappa * (1.0 - y) * h_log_l / (PI * phi3);

    let mut warnings = Vec::new();
    if h_log_l < 8.0 {
        warnings.push(RangeWarning::WindowTooShort { h_log_l });
    }
    if h * loglog_l > 0.25 {
        warnings.push(RangeWarning::WindowTooLong { h_loglog_l: h * loglog_l });
    }

    Ok(ResonatorParams { limit, h, sign, lower_cutoff, y, kappa, alpha, amplitude_sq, scaled_length, phi3, warnings })
}

impl ResonatorParams {
    /// `f_±(p)` for a prime `p` in the support range; callers check the range.
    #[inline]
    pub fn prime_coefficient(&self, p: u64) -> f64 {
        let pf = p as f64;
        let log_p = pf.ln();
        self.sign.factor() * self.amplitude_sq.sqrt() * (0.5 * self.h * log_p).sin()
            / (pf.powf(0.5 + self.alpha) * self.h * log_p)
    }

    pub fn in_support_range(&self, p: u64) -> bool {
        (p as f64) > self.lower_cutoff && p <= self.limit
    }

    pub fn with_sign(&self, sign: Sign) -> ResonatorParams {
        ResonatorParams { sign, ..self.clone() }
    }

    /// Overrides `M`, for experiments on the support alone.
    pub fn with_lower_cutoff(&self, lower_cutoff: f64) -> ResonatorParams {
        ResonatorParams { lower_cutoff, ..self.clone() }
    }

    pub fn h_log_l(&self) -> f64 {
        self.h * (self.limit as f64).ln()
    }

    /// `√(h log L / π)`, the size the quotient is compared with.
    pub fn target_scale(&self) -> f64 {
        (self.h_log_l() / PI).sqrt()
    }
}

struct Node {
    n: u64,
    value: f64,
    parent: u64,
    prime: u64,
}

/// Enumerates the squarefree support with its coefficients, ascending in `n`.
pub fn enumerate_support(params: &ResonatorParams, table: &PrimeTable) -> Result<CoefficientTable> {
    enumerate_support_capped(params, table, DEFAULT_SUPPORT_CAP)
}

pub fn enumerate_support_capped(params: &ResonatorParams, table: &PrimeTable, cap: u64) -> Result<CoefficientTable> {
    table.require_limit(params.limit)?;
    let limit = params.limit;
    let primes = table.range(params.lower_cutoff, limit);
    let coeffs: Vec<f64> = primes.iter().map(|&p| params.prime_coefficient(p)).collect();

    let count = AtomicU64::new(1);
    let overflow = AtomicBool::new(false);

    let branches: Vec<Vec<Node>> = (0..primes.len())
        .into_par_iter()
        .map(|i| {
            let mut out = Vec::new();
            dfs(primes, &coeffs, i, 1, 1.0, limit, &mut out, &count, &overflow, cap);
            out
        })
        .collect();

    if overflow.load(Ordering::Relaxed) {
        return Err(Error::Capacity { what: "resonator support size", reached: count.load(Ordering::Relaxed), cap });
    }

    let mut nodes: Vec<Node> = Vec::with_capacity(count.load(Ordering::Relaxed) as usize);
    nodes.push(Node { n: 1, value: 1.0, parent: 0, prime: 0 });
    for b in branches {
        nodes.extend(b);
    }
    nodes.sort_unstable_by_key(|node| node.n);

    let ns: Vec<u64> = nodes.iter().map(|node| node.n).collect();
    let mut entries = Vec::with_capacity(nodes.len());
    let mut links = Vec::with_capacity(nodes.len());
    for node in &nodes {
        entries.push((node.n, node.value));
        let parent = if node.n == 1 { 0 } else { ns.binary_search(&node.parent).expect("parent is in the support") };
        links.push(FactorLink { parent, prime: node.prime });
    }
    Ok(CoefficientTable::resonator(entries, links))
}

// Extends `n` (whose largest prime factor precedes index `i`) by primes[i..].
#[allow(clippy::too_many_arguments)]
fn dfs(
    primes: &[u64],
    coeffs: &[f64],
    i: usize,
    n: u64,
    value: f64,
    limit: u64,
    out: &mut Vec<Node>,
    count: &AtomicU64,
    overflow: &AtomicBool,
    cap: u64,
) {
    let q = primes[i];
    let m = n * q;
    if overflow.load(Ordering::Relaxed) {
        return;
    }
    if count.fetch_add(1, Ordering::Relaxed) + 1 > cap {
        overflow.store(true, Ordering::Relaxed);
        return;
    }
    let v = value * coeffs[i];
    out.push(Node { n: m, value: v, parent: n, prime: q });
    for j in (i + 1)..primes.len() {
        match m.checked_mul(primes[j]) {
            Some(next) if next <= limit => dfs(primes, coeffs, j, m, v, limit, out, count, overflow, cap),
            _ => break,
        }
    }
}

/// Exact resonance quotient of the resonator table:
///
/// `(2/π) Σ_{km≤L} Λ(k)/(√k log k) · sin((h/2) log k) · f(m) f(km) / Σ_{n≤L} f(n)²`.
///
/// On a squarefree support only `k = p` prime with `p ∤ m` contributes, so the
/// numerator is `Σ_n f(n) D(n)` with `D(n) = Σ_{p|n} sin((h/2) log p) f(n/p)/√p`,
/// which satisfies `D(nq) = s(q) f(n) + f(q) D(n)` along the table's factor links.
pub fn resonance_quotient_exact(coeffs: &CoefficientTable, params: &ResonatorParams) -> Result<f64> {
    let Some(links) = coeffs.links() else {
        return Err(Error::precondition("resonance_quotient_exact needs a table from enumerate_support"));
    };
    let entries = coeffs.entries();
    if entries.is_empty() {
        return Err(Error::ZeroCoefficients);
    }
    let half_h = 0.5 * params.h;
    let mut d = vec![0.0; entries.len()];
    let mut numerator = CompensatedSum::new();
    for idx in 1..entries.len() {
        let FactorLink { parent, prime } = links[idx];
        let pf = prime as f64;
        let s = (half_h * pf.ln()).sin() / pf.sqrt();
        let f_q = params.prime_coefficient(prime);
        d[idx] = s * entries[parent].1 + f_q * d[parent];
        numerator += entries[idx].1 * d[idx];
    }
    let denominator = coeffs.norm_sq(params.limit);
    if denominator == 0.0 {
        return Err(Error::ZeroCoefficients);
    }
    Ok(2.0 / PI * numerator.value() / denominator)
}

/// Main-term estimate of the quotient for the resonator with all error terms dropped:
///
/// `{φ₂(ℒ;κ) − φ(ℒ) e^{−κ y h log L}} · √(4κ(1−y) / (π φ₃(ℒ;κ))) · √(h log L)`.
///
/// Since `κ y h log L = log(h log L)` the exponential is `1/(h log L)`.
pub fn prop6_main_term(params: &ResonatorParams) -> Result<f64> {
    let h_log_l = params.h_log_l();
    let phi = quadrature::phi(params.scaled_length, DEFAULT_TOL)?.value;
    let phi2 = quadrature::phi2(params.scaled_length, params.kappa, DEFAULT_TOL)?.value;
    let decay = (-params.kappa * params.y * h_log_l).exp();
    let bracket = phi2 - phi * decay;
    let scale = (4.0 * params.kappa * (1.0 - params.y) / (PI * params.phi3)).sqrt();
    Ok(bracket * scale * h_log_l.sqrt())
}
