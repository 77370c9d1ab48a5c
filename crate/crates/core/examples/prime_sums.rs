//! Exact prime sums over the resonator support against their integral main
//! terms, with a cached sieve.
//!
//! ```text
//! cargo run --release --example prime_sums -- 10000000
//! ```

use zeta_resonance::primes::{build_prime_table_cached, main_term, prime_sum, s3_integral_with_cutoff, PrimeSumKind};
use zeta_resonance::{derive_params, Sign};

fn main() -> zeta_resonance::Result<()> {
    let limit: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1_000_000);
    let h = 0.5;
    let cache = std::env::temp_dir().join(format!("zeta-resonance-primes-{limit}.bin"));
    let table = build_prime_table_cached(limit, &cache)?;
    println!("pi({limit}) = {} (cache {})", table.len(), cache.display());

    let params = derive_params(limit, h, Sign::Plus)?;
    for w in &params.warnings {
        println!("note: {w}");
    }
    println!(
        "M = {:.4}, kappa = {:.4}, scaled length = {:.4}",
        params.lower_cutoff, params.kappa, params.scaled_length
    );
    for kind in [PrimeSumKind::S1, PrimeSumKind::S2, PrimeSumKind::S3] {
        let exact = prime_sum(kind, &params, &table)?;
        let main = main_term(kind, &params)?;
        println!("{kind}: exact {exact:.8}  main term {main:.8}  ratio {:.4}", exact / main);
    }
    // the main term for S3 ignores the cutoff M; restoring it removes most of the gap
    let s3 = prime_sum(PrimeSumKind::S3, &params, &table)?;
    let cut = s3_integral_with_cutoff(&params)?;
    println!("S3 vs integral above log M: {s3:.8} / {cut:.8} = {:.4}", s3 / cut);
    Ok(())
}
