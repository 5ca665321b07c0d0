//! Work per qubit of the Dicke strategy built on the best single-qubit
//! engine, as a function of the energy each qubit hands over.
//!
//! Run with `cargo run --example collective_work_curves`.

use qme::config::{ExperimentConfig, ExperimentKind, Grid};
use qme::experiments::fig2_points;

fn main() -> qme::Result<()> {
    let mut config = ExperimentConfig::defaults(ExperimentKind::Fig2);
    config.de_grid = Grid::new(0.05, 0.5, 10);
    let points = fig2_points(&config)?;

    print!("{:>6}", "ΔE_1");
    for n in &config.n_list {
        print!(" {:>10}", format!("N={n}"));
    }
    println!();
    for chunk in 0..config.de_grid.n {
        let row: Vec<_> = points.iter().skip(chunk).step_by(config.de_grid.n).collect();
        print!("{:>6.3}", row[0].delta_e1);
        for p in row {
            print!(" {:>10.6}", p.w_per_system);
        }
        println!();
    }
    Ok(())
}
