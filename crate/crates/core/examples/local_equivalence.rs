//! Every qubit ends up exactly where the independent measurement would have
//! left it; only the correlations differ.
//!
//! Run with `cargo run --example local_equivalence`.

use qme::collective::{verify_local_equivalence, CollectiveStrategy};

fn main() -> qme::Result<()> {
    let strategies = [
        CollectiveStrategy::two_qubit(0.3)?,
        CollectiveStrategy::dicke(5, 0.3)?,
        CollectiveStrategy::dicke(8, 0.8)?,
        CollectiveStrategy::ghz(6)?,
    ];
    for s in &strategies {
        let check = verify_local_equivalence(s, 1e-12)?;
        println!(
            "{:<13} N = {}: max trace distance {:.2e} -> {}",
            s.kind().name(),
            s.n(),
            check.max_deviation,
            if check.passed { "equivalent" } else { "NOT equivalent" }
        );
    }
    Ok(())
}
