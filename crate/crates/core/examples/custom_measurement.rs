//! Any orthonormal family of N-qubit vectors can drive the engine; missing
//! directions are lumped into one complement outcome.
//!
//! Run with `cargo run --example custom_measurement`.

use std::f64::consts::FRAC_PI_4;

use qme::collective::{evaluate_strategy, measurement_frame_hamiltonian, CollectiveStrategy, ComputationPath};
use qme::{ProjectiveMeasurement, StateVector};

fn main() -> qme::Result<()> {
    let s = 0.5_f64.sqrt();
    // Bell basis on two qubits
    let vectors = vec![
        StateVector::from_real(&[s, 0.0, 0.0, s])?,
        StateVector::from_real(&[s, 0.0, 0.0, -s])?,
        StateVector::from_real(&[0.0, s, s, 0.0])?,
        StateVector::from_real(&[0.0, s, -s, 0.0])?,
    ];
    let labels = ["Phi+", "Phi-", "Psi+", "Psi-"].map(String::from);
    let bell = ProjectiveMeasurement::new(vectors.clone(), labels.to_vec())?;
    // only the two even-parity Bell states; the odd sector becomes the complement
    let partial = ProjectiveMeasurement::new(vectors[..2].to_vec(), labels[..2].to_vec())?;

    let h = measurement_frame_hamiltonian(1.0, FRAC_PI_4);
    for (name, m) in [("full Bell", bell), ("even-parity + complement", partial)] {
        println!("{name}: outcomes {:?}", m.outcome_labels());
        let strategy = CollectiveStrategy::custom(m, 2, 0.3)?;
        let r = evaluate_strategy(&strategy, &h, 0.1, ComputationPath::ExactState)?;
        println!(
            "  ΔE = {:.6}, S = {:.6}, W = {:.6}, η = {}",
            r.delta_e_total,
            r.s_total,
            r.w_net_total,
            r.eta.map_or("undefined".into(), |e| format!("{e:.6}"))
        );
    }
    Ok(())
}
