//! Ledger of one measurement-engine cycle.
//!
//! The cycle is: measure a pure state in a basis that does not commute with
//! the Hamiltonian (energy `ΔE` goes in), restore the initial state by
//! feedback (on average `W_ext = ΔE` comes out), then erase the outcome record
//! at Landauer cost `T·S_f`. Feedback unitaries are not built; only the
//! averaged energetics enter. `k_B = 1`, so temperature is an energy.

use crate::error::{Error, Result};
use crate::numerics::{StateVector, C64};
use crate::quantum::{
    self, entropy_of_diagonal_state, mean_energy, DensityMatrix, Hamiltonian, OutcomeDistribution,
    ProjectiveMeasurement, PureState,
};

/// `ΔE` at or below this counts as zero energy input.
pub const MIN_DELTA_E: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq)]
pub struct EngineSpec {
    initial_state: PureState,
    hamiltonian: Hamiltonian,
    measurement: ProjectiveMeasurement,
    temperature: f64,
}

impl EngineSpec {
    pub fn new(
        initial_state: PureState,
        hamiltonian: Hamiltonian,
        measurement: ProjectiveMeasurement,
        temperature: f64,
    ) -> Result<Self> {
        if !(temperature.is_finite() && temperature >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "temperature must be finite and >= 0, got {temperature}"
            )));
        }
        let dim = initial_state.dim();
        for found in [hamiltonian.dim(), measurement.dim()] {
            if found != dim {
                return Err(Error::DimensionMismatch { expected: dim, found });
            }
        }
        Ok(Self {
            initial_state,
            hamiltonian,
            measurement,
            temperature,
        })
    }

    pub fn initial_state(&self) -> &PureState {
        &self.initial_state
    }

    pub fn hamiltonian(&self) -> &Hamiltonian {
        &self.hamiltonian
    }

    pub fn measurement(&self) -> &ProjectiveMeasurement {
        &self.measurement
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    /// Single qubit with `h = diag(0, gap)` prepared in `√q|0'> + √p|1'>` and
    /// measured in the rotated basis `|0'> = cos θ|g> + sin θ|e>`,
    /// `|1'> = sin θ|g> - cos θ|e>`.
    ///
    /// The sign of `|1'>` makes `Re<0'|h|1'> = -(gap/2) sin 2θ <= 0` on
    /// `θ ∈ [0, π/2]`, so `ΔE_1 = gap·√(qp)·sin 2θ >= 0`.
    pub fn rotated_qubit(q: f64, theta: f64, gap: f64, temperature: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::InvalidParameter(format!("q must lie in [0, 1], got {q}")));
        }
        let (s, c) = theta.sin_cos();
        let zero = StateVector::from_real(&[c, s])?;
        let one = StateVector::from_real(&[s, -c])?;
        let (a, b) = (q.sqrt(), (1.0 - q).sqrt());
        let psi = StateVector::normalized(vec![C64::new(a * c + b * s, 0.0), C64::new(a * s - b * c, 0.0)])?;
        let m = ProjectiveMeasurement::new(vec![zero, one], vec!["0'".into(), "1'".into()])?;
        Self::new(psi, Hamiltonian::qubit(gap), m, temperature)
    }

    pub fn with_temperature(&self, temperature: f64) -> Result<Self> {
        Self::new(
            self.initial_state.clone(),
            self.hamiltonian.clone(),
            self.measurement.clone(),
            temperature,
        )
    }
}

/// Energy, entropy and work accounting of one averaged cycle.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleReport {
    pub e_i: f64,
    pub e_f: f64,
    pub delta_e: f64,
    pub w_ext: f64,
    /// Outcome entropy in nats.
    pub s_f: f64,
    pub w_er: f64,
    pub w_net: f64,
    /// `W_net / ΔE`; `None` when `ΔE <= 0` (not an engine).
    pub eta: Option<f64>,
    pub outcomes: OutcomeDistribution,
}

impl CycleReport {
    pub fn is_engine(&self) -> bool {
        self.eta.is_some()
    }

    /// Efficiency, or [`Error::NotAnEngine`] when `ΔE <= 0`.
    pub fn efficiency(&self) -> Result<f64> {
        self.eta.ok_or(Error::NotAnEngine { delta_e: self.delta_e })
    }

    /// Positive net work per cycle.
    pub fn produces_work(&self) -> bool {
        self.w_net > 0.0
    }
}

/// Runs the averaged cycle. A non-positive `ΔE` is reported with `eta = None`
/// rather than rejected.
pub fn run_cycle(spec: &EngineSpec) -> Result<CycleReport> {
    let (report, _) = run_cycle_with_state(spec)?;
    Ok(report)
}

/// [`run_cycle`] that also returns the post-measurement state `ρ_f`.
pub fn run_cycle_with_state(spec: &EngineSpec) -> Result<(CycleReport, DensityMatrix)> {
    let (outcomes, rho_f) = quantum::measure(&spec.initial_state, &spec.measurement)?;
    let e_i = mean_energy(&spec.initial_state, &spec.hamiltonian)?;
    let e_f = mean_energy(&rho_f, &spec.hamiltonian)?;
    let delta_e = e_f - e_i;
    let s_f = quantum::shannon_entropy(&outcomes);
    let w_ext = delta_e;
    let w_er = spec.temperature * s_f;
    let w_net = w_ext - w_er;
    let eta = (delta_e > MIN_DELTA_E).then(|| w_net / delta_e);
    let report = CycleReport {
        e_i,
        e_f,
        delta_e,
        w_ext,
        s_f,
        w_er,
        w_net,
        eta,
        outcomes,
    };
    Ok((report, rho_f))
}

/// `F = Tr[hρ] - T·S(ρ)`.
pub fn free_energy(rho: &DensityMatrix, h: &Hamiltonian, temperature: f64) -> Result<f64> {
    Ok(mean_energy(rho, h)? - temperature * entropy_of_diagonal_state(rho)?)
}

/// `η = ΔF/ΔE` between `ρ_f` and `ρ_i = |ψ_i><ψ_i|`, computed from the two
/// density operators without going through the cycle ledger.
pub fn efficiency_via_free_energy(spec: &EngineSpec) -> Result<f64> {
    let rho_i = DensityMatrix::from_pure(&spec.initial_state);
    let (_, rho_f) = quantum::measure(&spec.initial_state, &spec.measurement)?;
    let h = &spec.hamiltonian;
    let t = spec.temperature;
    let delta_e = mean_energy(&rho_f, h)? - mean_energy(&rho_i, h)?;
    if delta_e <= MIN_DELTA_E {
        return Err(Error::NotAnEngine { delta_e });
    }
    let delta_f = free_energy(&rho_f, h, t)? - free_energy(&rho_i, h, t)?;
    Ok(delta_f / delta_e)
}
