//! The GHZ basis on |+>^N: two outcomes, one bit of record, whatever N is.
//!
//! Run with `cargo run --example ghz_strategy`.

use qme::collective::{evaluate_strategy, CollectiveStrategy, ComputationPath};
use qme::Hamiltonian;

fn main() -> qme::Result<()> {
    let h = Hamiltonian::qubit(1.0);
    let t = 0.1;
    for n in 1..=8 {
        let s = CollectiveStrategy::ghz(n)?;
        let r = evaluate_strategy(&s, &h, t, ComputationPath::ExactState)?;
        println!(
            "N = {n}: S = {:.6}, I = {:.6}, η_∥ = {:.6}, η_♯ = {:.6}",
            r.s_total,
            r.i_mutual,
            r.eta_parallel.unwrap(),
            r.eta.unwrap()
        );
    }
    for n in [100, 10_000, 1_000_000] {
        let r = evaluate_strategy(&CollectiveStrategy::ghz(n)?, &h, t, ComputationPath::Analytic)?;
        println!("N = {n}: 1 - η_♯ = {:.3e}", 1.0 - r.eta.unwrap());
    }
    Ok(())
}
