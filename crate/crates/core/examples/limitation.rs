//! Where the upper bound stops the method: the limitations ξ₀ for λ_r and μ_r
//! and their approach to `1 ± √2/√r`.
//!
//! ```text
//! cargo run --release --example limitation
//! ```

use zeta_resonance::limitation::{limitation_solve, sqrt2_asymptote_check, Direction, WChoice};

fn main() -> zeta_resonance::Result<()> {
    let lam = limitation_solve(1, Direction::Lambda, WChoice::Fixed(22.6))?;
    let mu = limitation_solve(1, Direction::Mu, WChoice::Fixed(4.9))?;
    println!("r = 1, W fixed: lambda xi0 = {:.6}, mu xi0 = {:.6}", lam.xi0, mu.xi0);

    for r in [1u64, 2, 5] {
        let lam = limitation_solve(r, Direction::Lambda, WChoice::Auto)?;
        let mu = limitation_solve(r, Direction::Mu, WChoice::Auto)?;
        println!(
            "r = {r}: lambda xi0/r = {:.6} (W = {:.2}), mu xi0/r = {:.6} (W = {:.2})",
            lam.normalized(),
            lam.w,
            mu.normalized(),
            mu.w
        );
    }

    println!("{:>6} {:>12} {:>12}", "r", "lambda dev", "mu dev");
    for row in sqrt2_asymptote_check(&[100, 1_000, 10_000])? {
        println!("{:>6} {:>12.6} {:>12.6}", row.r, row.lambda_deviation, row.mu_deviation);
    }
    Ok(())
}
