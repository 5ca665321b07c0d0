//! Collective efficiency splits into the parallel efficiency plus the
//! mutual information the collective measurement avoids recording.
//!
//! Run with `cargo run --example decomposition`.

use qme::config::{ExperimentConfig, ExperimentKind, Grid};
use qme::experiments::decomposition_points;

fn main() -> qme::Result<()> {
    let mut config = ExperimentConfig::defaults(ExperimentKind::Decomposition);
    config.n_list = vec![2, 4, 6];
    config.q_grid = Grid::single(0.3);
    for p in decomposition_points(&config)? {
        let r = &p.report;
        let gain = config.temperature * r.i_mutual / (r.n as f64 * r.per_subsystem.delta_e);
        println!(
            "{:<13} N = {}  η_♯ = {:.6}  η_∥ + T·I/(N·ΔE_1) = {:.6}  residual = {:+.1e}",
            p.strategy,
            r.n,
            r.eta.unwrap(),
            r.eta_parallel.unwrap() + gain,
            r.decomposition_residual.unwrap()
        );
    }
    Ok(())
}
