//! Which (q, θ) pairs make a single-qubit engine, and where is it best.
//!
//! Run with `cargo run --example engine_region`.

use qme::config::{ExperimentConfig, ExperimentKind, Grid};
use qme::experiments::region_points;

fn main() -> qme::Result<()> {
    let mut config = ExperimentConfig::defaults(ExperimentKind::Region);
    config.q_grid = Grid::new(0.05, 0.95, 19);
    config.theta_grid = Grid::new(0.0, std::f64::consts::FRAC_PI_2, 19);

    for t in [0.05, 0.2, 0.5] {
        config.temperature = t;
        let points = region_points(&config)?;
        let engines: Vec<_> = points.iter().filter(|p| p.w > 0.0).collect();
        let best = engines.iter().max_by(|a, b| a.w.total_cmp(&b.w));
        print!("T = {t:<4}: {:>3}/{} points produce work", engines.len(), points.len());
        match best {
            Some(p) => println!(", best W = {:.4} at q = {:.2}, θ = {:.3}", p.w, p.q, p.theta),
            None => println!(),
        }
    }
    Ok(())
}
