//! The sinc² integrals behind every main term.
//!
//! ```text
//! cargo run --example phi_integrals
//! ```

use zeta_resonance::quadrature::{phi, phi2, phi3, DEFAULT_TOL};
use zeta_resonance::special::sinc_sq_integral;

fn main() -> zeta_resonance::Result<()> {
    println!("{:>8} {:>20} {:>20} {:>10}", "x", "phi (panels)", "phi (closed form)", "err est");
    for x in [0.25, 1.0, 3.5, 40.0, f64::INFINITY] {
        let q = phi(x, DEFAULT_TOL)?;
        let closed = if x.is_finite() { sinc_sq_integral(x) } else { 0.5 };
        println!("{x:>8} {:>20.15} {closed:>20.15} {:>10.2e}", q.value, q.error_estimate);
    }

    // damping by e^{−2πκu} pulls φ₂ below φ; φ₃ vanishes without it
    let length = 1.1;
    for kappa in [0.0, 0.1, 0.5, 1.0] {
        let a = phi2(length, kappa, DEFAULT_TOL)?.value;
        let b = phi3(length, kappa, DEFAULT_TOL)?.value;
        println!("kappa = {kappa:<4}  phi2 = {a:.12}  phi3 = {b:.12}");
    }
    Ok(())
}
