//! Exact binomial entropy against ½ ln(2πeNpq), out to a million trials.
//!
//! Run with `cargo run --example binomial_asymptotics`.

use qme::collective::{binomial_entropy_asymptotic, binomial_entropy_exact};

fn main() -> qme::Result<()> {
    for p in [0.5, 0.3, 0.05] {
        println!("p = {p}");
        for n in [10u64, 100, 1_000, 10_000, 100_000, 1_000_000] {
            let exact = binomial_entropy_exact(n, p)?;
            let approx = binomial_entropy_asymptotic(n, p)?;
            println!("  N = {n:>8}: H = {exact:.12}, gap = {:+.3e}", exact - approx);
        }
    }
    Ok(())
}
