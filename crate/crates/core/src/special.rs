//! Sine integral and the closed form of the integrated sinc² kernel.
//!
//! `sinc_sq_integral(x) = ∫₀^x (sin πu / πu)² du = Si(2πx)/π − sin²(πx)/(π²x)`,
//! which follows from one integration by parts. This is the evaluator used in
//! the hot loops of the bound and limitation code; the panel quadrature in
//! [`crate::quadrature`] is the reference it is tested against.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

const EPS: f64 = 1e-16;
const SERIES_LIMIT: f64 = 2.0;
const MAX_ITER: usize = 200;

/// Sine integral `Si(x) = ∫₀^x sin t / t dt`.
pub fn sine_integral(x: f64) -> f64 {
    if x < 0.0 {
        return -sine_integral(-x);
    }
    if x == 0.0 {
        return 0.0;
    }
    if x.is_infinite() {
        return FRAC_PI_2;
    }
    if x <= SERIES_LIMIT {
        // Si(x) = Σ (−1)^k x^{2k+1} / ((2k+1)(2k+1)!)
        let x2 = x * x;
        let mut term = x; // x^{2k+1}/(2k+1)!
        let mut sum = x;
        for k in 1..MAX_ITER {
            let n = (2 * k) as f64;
            term *= -x2 / (n * (n + 1.0));
            let contribution = term / (n + 1.0);
            sum += contribution;
            if contribution.abs() < EPS * sum.abs() {
                break;
            }
        }
        return sum;
    }
    // E₁(ix) by the modified Lentz continued fraction; Si(x) = π/2 + Im E₁(ix).
    let mut b = Complex64::new(1.0, x);
    let mut c = Complex64::new(1.0 / f64::MIN_POSITIVE, 0.0);
    let mut d = Complex64::new(1.0, 0.0) / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let a = -((i * i) as f64);
        b += 2.0;
        d = Complex64::new(1.0, 0.0) / (a * d + b);
        c = b + a / c;
        let del = c * d;
        h *= del;
        if (del.re - 1.0).abs() + del.im.abs() < EPS {
            break;
        }
    }
    let e1 = Complex64::new(x.cos(), -x.sin()) * h;
    FRAC_PI_2 + e1.im
}

/// `∫₀^x (sin πu / πu)² du` in closed form; 0 for `x ≤ 0`, ½ at infinity.
pub fn sinc_sq_integral(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x.is_infinite() {
        return 0.5;
    }
    if x < 1e-6 {
        // x − π²x³/9 + O(x⁵)
        return x - PI * PI * x * x * x / 9.0;
    }
    let s = (PI * x).sin();
    sine_integral(2.0 * PI * x) / PI - s * s / (PI * PI * x)
}

/// `(sin πu / πu)²`, equal to 1 at `u = 0`.
#[inline]
pub fn sinc_sq(u: f64) -> f64 {
    let v = PI * u;
    if v.abs() < 1e-8 {
        1.0 - v * v / 3.0
    } else {
        let s = v.sin() / v;
        s * s
    }
}
