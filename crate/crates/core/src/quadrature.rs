//! Panel quadrature for the sinc²-type integrals φ, φ₂ and φ₃.
//!
//! The range is cut at the integers (the zeros of `sin πu`), each unit panel
//! is integrated with a 7/15-point Gauss–Kronrod pair, and the panel with the
//! largest error estimate is bisected until the summed estimate meets the
//! tolerance. Panel values are added in panel order with compensation, so a
//! result does not depend on the order in which panels were refined.
//!
//! An infinite upper limit is truncated at a power of two `U` chosen so that
//! an explicit tail bound fits in half of the tolerance; that bound is part of
//! the reported error estimate.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::special::sinc_sq;
use crate::summation::CompensatedSum;

pub const DEFAULT_TOL: f64 = 1e-10;

/// Default cap on the number of live panels.
pub const DEFAULT_MAX_PANELS: usize = 1 << 22;

/// Below this abscissa the φ₃ integrand is replaced by its Taylor polynomial.
const PHI3_SERIES_CUTOFF: f64 = 1.0 / 1_048_576.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureValue {
    pub value: f64,
    /// Absolute, nonnegative.
    pub error_estimate: f64,
}

// Kronrod abscissae and weights (QUADPACK qk15); Gauss weights for the
// embedded 7-point rule at the odd Kronrod nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Clone, Copy, Debug)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error).then_with(|| other.a.total_cmp(&self.a))
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_sum = fc.abs() * WGK[7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        kronrod += WGK[j] * (f1 + f2);
        abs_sum += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let value = kronrod * half;
    let raw = ((kronrod - gauss) * half).abs();
    let floor = 50.0 * f64::EPSILON * abs_sum * half.abs();
    Panel { a, b, value, error: raw.max(floor) }
}

/// Globally adaptive panel integrator.
#[derive(Clone, Copy, Debug)]
pub struct PanelQuadrature {
    pub tol: f64,
    pub max_panels: usize,
    /// Initial panels per unit length; 1 puts breakpoints at the integers.
    pub panels_per_unit: usize,
}

impl Default for PanelQuadrature {
    fn default() -> Self {
        Self { tol: DEFAULT_TOL, max_panels: DEFAULT_MAX_PANELS, panels_per_unit: 1 }
    }
}

impl PanelQuadrature {
    pub fn with_tol(tol: f64) -> Self {
        Self { tol, ..Self::default() }
    }

    /// `∫_a^b f` for finite `0 ≤ a ≤ b`.
    pub fn integrate<F>(&self, f: F, a: f64, b: f64) -> Result<QuadratureValue>
    where
        F: Fn(f64) -> f64,
    {
        self.integrate_within(f, a, b, self.tol)
    }

    fn integrate_within<F>(&self, f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureValue>
    where
        F: Fn(f64) -> f64,
    {
        if !(tol > 0.0) {
            return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
        }
        if !(a.is_finite() && b.is_finite()) || b < a {
            return Err(Error::domain(format!("invalid interval [{a}, {b}]")));
        }
        if a == b {
            return Ok(QuadratureValue { value: 0.0, error_estimate: 0.0 });
        }
        let step = 1.0 / self.panels_per_unit.max(1) as f64;
        let initial = ((b - a) / step).ceil() as usize;
        if initial > self.max_panels {
            return Err(Error::Convergence { tol, estimate: f64::INFINITY, panels: initial });
        }

        let mut heap = BinaryHeap::with_capacity(initial + 64);
        let mut total_error = 0.0;
        let mut lo = a;
        for k in 1..=initial {
            let hi = if k == initial { b } else { a + k as f64 * step };
            let p = gauss_kronrod(&f, lo, hi);
            total_error += p.error;
            heap.push(p);
            lo = hi;
        }

        while total_error > tol {
            if heap.len() >= self.max_panels {
                return Err(Error::Convergence { tol, estimate: total_error, panels: heap.len() });
            }
            let worst = heap.pop().expect("heap holds at least one panel");
            let mid = 0.5 * (worst.a + worst.b);
            if mid <= worst.a || mid >= worst.b {
                // cannot split further in double precision
                return Err(Error::Convergence { tol, estimate: total_error, panels: heap.len() + 1 });
            }
            let left = gauss_kronrod(&f, worst.a, mid);
            let right = gauss_kronrod(&f, mid, worst.b);
            total_error += left.error + right.error - worst.error;
            heap.push(left);
            heap.push(right);
        }

        let mut panels = heap.into_vec();
        panels.sort_by(|p, q| p.a.total_cmp(&q.a));
        let mut value = CompensatedSum::new();
        let mut error = CompensatedSum::new();
        for p in &panels {
            value += p.value;
            error += p.error;
        }
        Ok(QuadratureValue { value: value.value(), error_estimate: error.value() })
    }

    /// `∫_a^∞ f` given a bound `tail(U) ≥ |∫_U^∞ f|` that decreases in `U`.
    pub fn integrate_to_infinity<F, T>(&self, f: F, a: f64, tail: T) -> Result<QuadratureValue>
    where
        F: Fn(f64) -> f64,
        T: Fn(f64) -> f64,
    {
        let budget = 0.5 * self.tol;
        let mut upper = 16.0_f64.max(a.ceil());
        while tail(upper) > budget {
            upper *= 2.0;
            if (upper - a) * self.panels_per_unit.max(1) as f64 > self.max_panels as f64 {
                return Err(Error::Convergence { tol: self.tol, estimate: tail(upper), panels: self.max_panels });
            }
        }
        let head = self.integrate_within(f, a, upper, budget)?;
        Ok(QuadratureValue { value: head.value, error_estimate: head.error_estimate + tail(upper) })
    }
}

fn check_args(name: &str, x: f64, kappa: f64, tol: f64) -> Result<()> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::domain(format!("{name}: upper limit must be ≥ 0, got {x}")));
    }
    if !kappa.is_finite() || kappa < 0.0 {
        return Err(Error::domain(format!("{name}: kappa must be finite and ≥ 0, got {kappa}")));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(format!("{name}: tolerance must be positive, got {tol}")));
    }
    Ok(())
}

/// `φ(x) = ∫₀^x (sin πu / πu)² du`; `x` may be `f64::INFINITY`.
pub fn phi(x: f64, tol: f64) -> Result<QuadratureValue> {
    check_args("phi", x, 0.0, tol)?;
    let q = PanelQuadrature::with_tol(tol);
    if x.is_infinite() {
        return phi_infinite(&q);
    }
    q.integrate(sinc_sq, 0.0, x)
}

// The 1/u² tail decays too slowly to truncate at a tight tolerance. At an
// integer U, ∫_U^∞ = 1/(2π²U) − (1/2π²)∫_U^∞ cos(2πu)/u² du, and the last
// integral is at most 1/(2πU²) after one integration by parts.
fn phi_infinite(q: &PanelQuadrature) -> Result<QuadratureValue> {
    let budget = 0.5 * q.tol;
    let remainder = |u: f64| 1.0 / (4.0 * PI * PI * PI * u * u);
    let mut upper = 16.0_f64;
    while remainder(upper) > budget {
        upper *= 2.0;
    }
    let head = q.integrate_within(sinc_sq, 0.0, upper, budget)?;
    Ok(QuadratureValue {
        value: head.value + 1.0 / (2.0 * PI * PI * upper),
        error_estimate: head.error_estimate + remainder(upper),
    })
}

/// `φ₂(ℒ; κ) = ∫₀^ℒ (sin πu / πu)² e^{−2πκu} du`.
pub fn phi2(scaled_length: f64, kappa: f64, tol: f64) -> Result<QuadratureValue> {
    check_args("phi2", scaled_length, kappa, tol)?;
    let rate = 2.0 * PI * kappa;
    let integrand = move |u: f64| sinc_sq(u) * (-rate * u).exp();
    let q = PanelQuadrature::with_tol(tol);
    if scaled_length.is_infinite() && rate == 0.0 {
        return phi_infinite(&q);
    }
    if scaled_length.is_infinite() {
        let tail = move |u: f64| {
            let undamped = 1.0 / (PI * PI * u);
            if rate > 0.0 {
                undamped.min((-rate * u).exp() / (PI * PI * u * u * rate))
            } else {
                undamped
            }
        };
        return q.integrate_to_infinity(integrand, 0.0, tail);
    }
    q.integrate(integrand, 0.0, scaled_length)
}

/// `φ₃(ℒ; κ) = ∫₀^ℒ sin²(πu)/(πu)³ · (e^{2πκu} − 1)/e^{4πκu} du`.
pub fn phi3(scaled_length: f64, kappa: f64, tol: f64) -> Result<QuadratureValue> {
    check_args("phi3", scaled_length, kappa, tol)?;
    if kappa == 0.0 {
        return Ok(QuadratureValue { value: 0.0, error_estimate: 0.0 });
    }
    let rate = 2.0 * PI * kappa;
    let integrand = move |u: f64| phi3_integrand(u, kappa, rate);
    let q = PanelQuadrature::with_tol(tol);
    if scaled_length.is_infinite() {
        let tail = move |u: f64| (-rate * u).exp() / (2.0 * PI * PI * PI * u * u);
        return q.integrate_to_infinity(integrand, 0.0, tail);
    }
    q.integrate(integrand, 0.0, scaled_length)
}

#[inline]
fn phi3_integrand(u: f64, kappa: f64, rate: f64) -> f64 {
    if u < PHI3_SERIES_CUTOFF {
        return 2.0 * kappa - 6.0 * PI * kappa * kappa * u;
    }
    let damped = (-rate * u).exp();
    // (e^{au} − 1)/e^{2au} = e^{−au}(1 − e^{−au})
    let shape = damped * -(-rate * u).exp_m1();
    sinc_sq(u) * shape / (PI * u)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Golden values from an independent adaptive-Simpson evaluation at 1e-13
    // in 30-digit arithmetic.
    const PHI_1: f64 = 0.451_411_666_790_140_3;
    const PHI2_1_1: f64 = 0.139_677_691_145_895_93;
    const PHI3_1_1: f64 = 0.204_425_742_189_043_72;

    #[test]
    fn phi_at_zero_is_zero() {
        let v = phi(0.0, DEFAULT_TOL).unwrap();
        assert_eq!(v.value, 0.0);
        assert_eq!(v.error_estimate, 0.0);
    }

    #[test]
    fn golden_values() {
        assert!((phi(1.0, 1e-12).unwrap().value - PHI_1).abs() < 2e-12);
        assert!((phi2(1.0, 1.0, 1e-12).unwrap().value - PHI2_1_1).abs() < 2e-12);
        assert!((phi3(1.0, 1.0, 1e-12).unwrap().value - PHI3_1_1).abs() < 2e-12);
    }

    #[test]
    fn error_estimate_within_tolerance() {
        for &x in &[0.3, 1.0, 7.5, 250.0] {
            let v = phi(x, 1e-11).unwrap();
            assert!(v.error_estimate >= 0.0 && v.error_estimate <= 1e-11);
        }
    }

    #[test]
    fn phi_large_argument_approaches_half() {
        let v = phi(1e6, DEFAULT_TOL).unwrap();
        assert!((v.value - 0.5).abs() < DEFAULT_TOL + 1e-6);
        let inf = phi(f64::INFINITY, 1e-6).unwrap();
        assert!((inf.value - 0.5).abs() <= 2e-6);
        let tight = phi(f64::INFINITY, 1e-12).unwrap();
        assert!((tight.value - 0.5).abs() <= 1e-12);
        assert!(tight.error_estimate <= 1e-12);
    }

    #[test]
    fn phi2_without_damping_is_phi() {
        for &x in &[0.5, 1.7, 12.0] {
            let a = phi(x, DEFAULT_TOL).unwrap().value;
            let b = phi2(x, 0.0, DEFAULT_TOL).unwrap().value;
            assert!((a - b).abs() <= 2.0 * DEFAULT_TOL);
        }
    }

    #[test]
    fn phi3_without_damping_is_exactly_zero() {
        assert_eq!(phi3(5.0, 0.0, DEFAULT_TOL).unwrap().value, 0.0);
    }

    #[test]
    fn phi3_series_joins_exact_integrand() {
        let kappa = 0.37;
        let rate = 2.0 * PI * kappa;
        let below = phi3_integrand(PHI3_SERIES_CUTOFF * (1.0 - 1e-9), kappa, rate);
        let above = phi3_integrand(PHI3_SERIES_CUTOFF * (1.0 + 1e-9), kappa, rate);
        assert!((below - above).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(matches!(phi(-1.0, 1e-8), Err(Error::Domain(_))));
        assert!(matches!(phi(1.0, 0.0), Err(Error::Domain(_))));
        assert!(matches!(phi2(1.0, -0.1, 1e-8), Err(Error::Domain(_))));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let q = PanelQuadrature { tol: 1e-10, max_panels: 100, panels_per_unit: 1 };
        assert!(matches!(q.integrate(sinc_sq, 0.0, 1000.0), Err(Error::Convergence { .. })));
    }

    #[test]
    fn doubling_panels_stays_within_previous_estimate() {
        for &x in &[0.9, 3.3, 40.0] {
            let coarse = PanelQuadrature { panels_per_unit: 1, ..PanelQuadrature::with_tol(1e-9) };
            let fine = PanelQuadrature { panels_per_unit: 2, ..coarse };
            let c = coarse.integrate(sinc_sq, 0.0, x).unwrap();
            let f = fine.integrate(sinc_sq, 0.0, x).unwrap();
            assert!((c.value - f.value).abs() <= c.error_estimate, "x = {x}");
        }
    }
}
