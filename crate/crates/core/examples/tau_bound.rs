//! τ(ξ; f) for the resonator and for an arbitrary coefficient table, next to
//! the upper bound that no choice of coefficients can beat.
//!
//! ```text
//! cargo run --release --example tau_bound
//! ```

use zeta_resonance::resonator::enumerate_support;
use zeta_resonance::tau::{quotient_bruteforce, tau_eval, theorem3_bound_h, theorem3_bound_xi, C_ENV};
use zeta_resonance::{build_prime_table, derive_params, CoefficientTable, Sign};

fn main() -> zeta_resonance::Result<()> {
    let limit = 5_000u64;
    let log_l = (limit as f64).ln();
    let log_t = (limit as f64 * log_l * log_l).ln();
    let table = build_prime_table(limit)?;
    let xi = 1.0;
    let h = 2.0 * std::f64::consts::PI * xi / log_t;

    let resonator = enumerate_support(&derive_params(limit, h, Sign::Plus)?, &table)?;
    let tau = tau_eval(xi, &resonator, limit, log_t, &table)?;
    println!("resonator at h = {h:.4}: tau = {tau:.10}");

    // a hand-made table: f(n) = 1/√n on n ≤ 30
    let entries = (1..=30u64).map(|n| (n, 1.0 / (n as f64).sqrt())).collect();
    let user = CoefficientTable::new(entries)?;
    let q = quotient_bruteforce(&user, limit, h, &table)?;
    println!("f(n) = n^(-1/2), n <= 30: quotient = {q:.10}");

    for w in [1.0, 5.0, 22.6, 100.0] {
        let b = theorem3_bound_h(h, limit, w)?;
        println!(
            "W = {w:>5}: bound = {:.6} (maximizer x = {:.4}), with envelope {:.6}",
            b.bound,
            b.maximizer_x,
            b.bound + C_ENV * h
        );
    }
    for xi in [0.5, 3.0, 30.0] {
        let b = theorem3_bound_xi(xi, 22.6)?;
        println!("xi = {xi:>4}: B(xi, 22.6) = {:.6}", b.bound);
    }
    Ok(())
}
