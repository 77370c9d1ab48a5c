//! Build the resonator, evaluate its quotient two ways and compare with the
//! target scale `√(h log L/π)`.
//!
//! ```text
//! cargo run --release --example resonator_quotient
//! ```

use zeta_resonance::resonator::{enumerate_support, prop6_main_term, resonance_quotient_exact};
use zeta_resonance::tau::quotient_bruteforce;
use zeta_resonance::{build_prime_table, derive_params, Sign};

fn main() -> zeta_resonance::Result<()> {
    let h = 0.8;
    for limit in [10_000u64, 100_000, 1_000_000] {
        let table = build_prime_table(limit)?;
        let params = derive_params(limit, h, Sign::Plus)?;
        let support = enumerate_support(&params, &table)?;
        let exact = resonance_quotient_exact(&support, &params)?;
        println!(
            "L = {limit:>8}  |support| = {:>7}  quotient = {exact:.10}  ratio to target = {:.4}  main-term ratio = {:.4}",
            support.len(),
            exact / params.target_scale(),
            prop6_main_term(&params)? / params.target_scale(),
        );
        if limit <= 100_000 {
            let brute = quotient_bruteforce(&support, limit, h, &table)?;
            println!(
                "             literal double sum = {brute:.10}  (rel diff {:.1e})",
                (brute - exact).abs() / exact.abs()
            );
        }
        let minus = resonance_quotient_exact(
            &enumerate_support(&params.with_sign(Sign::Minus), &table)?,
            &params.with_sign(Sign::Minus),
        )?;
        println!("             sign flipped       = {minus:.10}");
    }
    Ok(())
}
