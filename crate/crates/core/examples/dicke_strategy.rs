//! Measuring N qubits in the Dicke basis only reveals how many were found
//! in |1'>, so the record costs a binomial entropy instead of N binary ones.
//!
//! Run with `cargo run --example dicke_strategy`.

use std::f64::consts::FRAC_PI_4;

use qme::collective::{evaluate_strategy, measurement_frame_hamiltonian, CollectiveStrategy, ComputationPath};

fn main() -> qme::Result<()> {
    let h1 = measurement_frame_hamiltonian(1.0, FRAC_PI_4);
    let (q, t) = (0.3, 0.1);
    println!(
        "{:>3} {:>10} {:>10} {:>10} {:>12}",
        "N", "η_∥", "η_♯", "I (nats)", "exact-analytic"
    );
    for n in 1..=10 {
        let s = CollectiveStrategy::dicke(n, q)?;
        let exact = evaluate_strategy(&s, &h1, t, ComputationPath::ExactState)?;
        let analytic = evaluate_strategy(&s, &h1, t, ComputationPath::Analytic)?;
        println!(
            "{n:>3} {:>10.6} {:>10.6} {:>10.6} {:>12.2e}",
            exact.eta_parallel.unwrap(),
            exact.eta.unwrap(),
            exact.i_mutual,
            (exact.eta.unwrap() - analytic.eta.unwrap()).abs()
        );
    }
    // the analytic path has no state-size limit
    let big = evaluate_strategy(
        &CollectiveStrategy::dicke(1_000_000, q)?,
        &h1,
        t,
        ComputationPath::Analytic,
    )?;
    println!("N = 1e6: η_♯ = {:.9}", big.eta.unwrap());
    Ok(())
}
