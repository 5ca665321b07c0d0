//! One qubit, one measurement, one feedback step: the full energy ledger.
//!
//! Run with `cargo run --example single_cycle`.

use std::f64::consts::FRAC_PI_4;

use qme::engine::{efficiency_via_free_energy, run_cycle, EngineSpec};

fn main() -> qme::Result<()> {
    // |ψ> = |g> measured in the |±> basis, gap 1, bath at T = 0.1
    let spec = EngineSpec::rotated_qubit(0.5, FRAC_PI_4, 1.0, 0.1)?;
    let r = run_cycle(&spec)?;

    println!("E_i   = {:.6}", r.e_i);
    println!("E_f   = {:.6}", r.e_f);
    println!("ΔE    = {:.6}  (extracted by the feedback)", r.delta_e);
    println!("S_f   = {:.6} nats", r.s_f);
    println!("W_er  = {:.6}  (erasing the record)", r.w_er);
    println!("W_net = {:.6}", r.w_net);
    for (label, p) in r.outcomes.labels().iter().zip(r.outcomes.probabilities()) {
        println!("  p({label}) = {p:.6}");
    }
    println!("η     = {:.6}", r.efficiency()?);
    println!("ΔF/ΔE = {:.6}", efficiency_via_free_energy(&spec)?);
    Ok(())
}
