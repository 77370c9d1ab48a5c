//! Explicit gap bounds, the short-interval bound they come from, and the
//! chain between the two.
//!
//! ```text
//! cargo run --example gap_bounds
//! ```

use std::f64::consts::SQRT_2;

use zeta_resonance::gapbounds::{prop5_check, theorem1_lower, theorem2_bounds, theorem2_from_theorem1};
use zeta_resonance::limitation::Direction;

fn main() -> zeta_resonance::Result<()> {
    for r in [10u64, 1_000, 100_000] {
        let g = theorem2_bounds(r, 1.0, 1.0)?;
        println!("r = {r:>6}: lambda >= {:.6}, mu <= {:.6}", g.lambda_lower(), g.mu_upper());
    }

    let b = theorem1_lower(1e12, 0.2)?;
    println!("T = 1e12, h = 0.2: main {:.6}, envelope {:.6}", b.main, b.envelope);

    let r = 50;
    println!("b = 11, theta' = 1.2, r = 50: {}", prop5_check(11.0, 1.2, r, Direction::Lambda)?);

    for r in [100u64, 10_000] {
        for dir in [Direction::Lambda, Direction::Mu] {
            let c = theorem2_from_theorem1(r, 1e30, dir)?;
            println!(
                "chain r = {r}, {dir}: |theta' - 1| = {:.8} vs sqrt2/sqrt r = {:.8}",
                c.gap,
                SQRT_2 / (r as f64).sqrt()
            );
        }
    }
    Ok(())
}
