//! Gap statistics and S-increment extremes from a table of zero ordinates.
//!
//! ```text
//! cargo run --release --example zero_gaps -- path/to/zeros.txt
//! ```

use std::path::PathBuf;

use zeta_resonance::gapbounds::theorem1_lower;
use zeta_resonance::zerodata::{empirical_extremes, load_zeros, normalized_r_gaps, GapNormalization};

fn main() -> zeta_resonance::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/zeros_1e4.txt"));
    let table = load_zeros(&path)?;
    let (lo, hi) = table.coverage();
    println!("{} ordinates in [{lo:.3}, {hi:.3}] ({})", table.len(), table.source());

    for r in [1, 2, 5] {
        for norm in [GapNormalization::LogGamma, GapNormalization::LocalDensity] {
            let s = normalized_r_gaps(&table, r, 0..table.len(), norm)?;
            println!(
                "r = {r} {norm:?}: mean {:.6}, max {:.4} (#{}), min {:.4} (#{})",
                s.mean_norm, s.max_norm, s.argmax_index, s.min_norm, s.argmin_index
            );
        }
    }

    let (t, h) = (4_000.0, 0.5);
    let e = empirical_extremes(&table, t, h, h / 4.0)?;
    let main = theorem1_lower(t, h)?.main;
    println!(
        "S(t+h) - S(t) on [{t}, {}]: sup {:.4} at {:.3}, inf {:.4} at {:.3}",
        2.0 * t,
        e.sup,
        e.sup_at,
        e.inf,
        e.inf_at
    );
    println!("sqrt(h log T / pi) = {main:.4}");
    Ok(())
}
