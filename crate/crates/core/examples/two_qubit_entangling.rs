//! Two qubits measured in {|00>, |11>, (|01>±|10>)/√2}: the same local
//! energy as measuring each qubit alone, but less outcome entropy.
//!
//! Run with `cargo run --example two_qubit_entangling`.

use std::f64::consts::FRAC_PI_4;

use qme::collective::{
    evaluate_strategy, measurement_frame_hamiltonian, work_gain_two_qubit, CollectiveStrategy, ComputationPath,
};

fn main() -> qme::Result<()> {
    let h1 = measurement_frame_hamiltonian(1.0, FRAC_PI_4);
    let t = 0.2;
    println!(
        "{:>5} {:>10} {:>10} {:>10} {:>10}",
        "q", "W_par", "W_ent", "gain", "T·I"
    );
    for q in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let par = evaluate_strategy(
            &CollectiveStrategy::parallel(2, q)?,
            &h1,
            t,
            ComputationPath::ExactState,
        )?;
        let ent = evaluate_strategy(&CollectiveStrategy::two_qubit(q)?, &h1, t, ComputationPath::ExactState)?;
        let gain = ent.w_net_total - par.w_net_total;
        println!(
            "{q:>5.2} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
            par.w_net_total,
            ent.w_net_total,
            gain,
            t * ent.i_mutual
        );
        assert!((gain - work_gain_two_qubit(q, t)).abs() < 1e-12);
    }
    Ok(())
}
