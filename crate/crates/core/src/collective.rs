//! Parallel versus collective measurement strategies on `N` identical qubits.
//!
//! Every strategy starts from a product state and is compared with the
//! parallel engine that measures each qubit locally. Strategies whose
//! post-measurement marginals equal the local ones receive the same energy
//! `N·ΔE_1`, and their efficiency gain over the parallel engine is
//! `T·I/(N·ΔE_1)` with `I` the multipartite mutual information of the
//! post-measurement state.
//!
//! Two evaluation paths exist. [`ComputationPath::ExactState`] builds the
//! `2^N` state vector and measurement and runs the full engine ledger; it is
//! capped at [`EXACT_PATH_CAP`] qubits. [`ComputationPath::Analytic`] uses the
//! outcome statistics directly (binomial for the Dicke basis, two equiprobable
//! outcomes for GHZ) and works for any `N`.
//!
//! Local Hamiltonians are expressed in the local measurement basis
//! `{|0>, |1>}` for the parallel, two-qubit and Dicke strategies, and in the
//! energy basis `{|g>, |e>}` for GHZ.

use std::f64::consts::LN_2;

use crate::engine::{self, EngineSpec, MIN_DELTA_E};
use crate::error::{Error, Result};
use crate::numerics::{StateVector, C64, ZERO};
use crate::quantum::{self, reduced_state, DensityMatrix, Hamiltonian, ProjectiveMeasurement};

/// Largest `N` simulated on the full state.
pub const EXACT_PATH_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub enum StrategyKind {
    /// Each qubit measured locally in `{|0>, |1>}`.
    Parallel,
    /// `{|00>, |11>, (|01>+|10>)/√2, (|01>-|10>)/√2}` on two qubits.
    TwoQubitEntangling,
    /// Dicke states of every Hamming weight plus the non-symmetric complement.
    DickeSymmetric,
    /// `(|g..g> ± |e..e>)/√2` plus complement, from `|g>^{⊗N}`.
    Ghz,
    /// Any measurement on `(√q|0> + √p|1>)^{⊗N}`; exact path only.
    Custom(ProjectiveMeasurement),
}

impl StrategyKind {
    pub fn name(&self) -> &'static str {
        match self {
            StrategyKind::Parallel => "parallel",
            StrategyKind::TwoQubitEntangling => "two-qubit",
            StrategyKind::DickeSymmetric => "dicke",
            StrategyKind::Ghz => "ghz",
            StrategyKind::Custom(_) => "custom",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CollectiveStrategy {
    kind: StrategyKind,
    n: usize,
    q: f64,
}

impl CollectiveStrategy {
    /// `q` is the weight on `|0>`; it is ignored (set to 1/2) for GHZ, whose
    /// local reference is `|g>` measured in `{|±>}`.
    pub fn new(kind: StrategyKind, n: usize, q: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("N must be at least 1".into()));
        }
        if kind == StrategyKind::TwoQubitEntangling && n != 2 {
            return Err(Error::InvalidParameter(format!(
                "two-qubit strategy needs N = 2, got {n}"
            )));
        }
        if let StrategyKind::Custom(m) = &kind {
            if n > EXACT_PATH_CAP {
                return Err(Error::ExactPathCap { n, cap: EXACT_PATH_CAP });
            }
            if m.dim() != 1 << n {
                return Err(Error::DimensionMismatch {
                    expected: 1 << n,
                    found: m.dim(),
                });
            }
        }
        let q = if kind == StrategyKind::Ghz { 0.5 } else { q };
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::InvalidParameter(format!("q must lie in (0, 1), got {q}")));
        }
        Ok(Self { kind, n, q })
    }

    pub fn parallel(n: usize, q: f64) -> Result<Self> {
        Self::new(StrategyKind::Parallel, n, q)
    }

    pub fn two_qubit(q: f64) -> Result<Self> {
        Self::new(StrategyKind::TwoQubitEntangling, 2, q)
    }

    pub fn dicke(n: usize, q: f64) -> Result<Self> {
        Self::new(StrategyKind::DickeSymmetric, n, q)
    }

    pub fn ghz(n: usize) -> Result<Self> {
        Self::new(StrategyKind::Ghz, n, 0.5)
    }

    pub fn custom(m: ProjectiveMeasurement, n: usize, q: f64) -> Result<Self> {
        Self::new(StrategyKind::Custom(m), n, q)
    }

    pub fn kind(&self) -> &StrategyKind {
        &self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn p(&self) -> f64 {
        1.0 - self.q
    }

    /// Single-qubit initial state.
    pub fn local_state(&self) -> StateVector {
        match self.kind {
            StrategyKind::Ghz => StateVector::basis(2, 0),
            _ => StateVector::normalized(vec![C64::new(self.q.sqrt(), 0.0), C64::new(self.p().sqrt(), 0.0)])
                .expect("q in (0, 1)"),
        }
    }

    /// Local measurement of the equivalent parallel engine.
    pub fn local_measurement(&self) -> ProjectiveMeasurement {
        match self.kind {
            StrategyKind::Ghz => hadamard_basis(),
            _ => ProjectiveMeasurement::computational(2),
        }
    }

    /// Post-measurement single-qubit state of the parallel engine.
    pub fn local_target(&self) -> DensityMatrix {
        match self.kind {
            StrategyKind::Ghz => DensityMatrix::maximally_mixed(2),
            _ => DensityMatrix::from_diagonal(&[self.q, self.p()]).expect("valid weights"),
        }
    }

    pub fn initial_state(&self) -> Result<StateVector> {
        self.check_cap()?;
        self.local_state().tensor_power(self.n)
    }

    pub fn measurement(&self) -> Result<ProjectiveMeasurement> {
        self.check_cap()?;
        match &self.kind {
            StrategyKind::Parallel => Ok(ProjectiveMeasurement::computational(1 << self.n)),
            StrategyKind::TwoQubitEntangling => Ok(two_qubit_basis()),
            StrategyKind::DickeSymmetric => dicke_basis(self.n),
            StrategyKind::Ghz => ghz_basis(self.n),
            StrategyKind::Custom(m) => Ok(m.clone()),
        }
    }

    fn check_cap(&self) -> Result<()> {
        if self.n > EXACT_PATH_CAP {
            Err(Error::ExactPathCap {
                n: self.n,
                cap: EXACT_PATH_CAP,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComputationPath {
    ExactState,
    Analytic,
}

impl ComputationPath {
    pub fn name(&self) -> &'static str {
        match self {
            ComputationPath::ExactState => "exact_state",
            ComputationPath::Analytic => "analytic",
        }
    }
}

/// Ledger of one subsystem in the equivalent parallel engine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubsystemLedger {
    pub delta_e: f64,
    pub s: f64,
    pub w: f64,
    pub eta: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StrategyReport {
    pub n: usize,
    pub delta_e_total: f64,
    pub s_total: f64,
    pub w_net_total: f64,
    /// Collective efficiency; `None` when `delta_e_total <= 0`.
    pub eta: Option<f64>,
    /// Efficiency of the equivalent parallel engine, `η_1`.
    pub eta_parallel: Option<f64>,
    pub i_mutual: f64,
    pub per_subsystem: SubsystemLedger,
    pub path: ComputationPath,
    /// `η_♯ - η_∥ - T·I/(N·ΔE_1)` when both efficiencies exist.
    pub decomposition_residual: Option<f64>,
}

/// Evaluates `strategy` with local Hamiltonian `h1` at temperature `t`.
pub fn evaluate_strategy(
    strategy: &CollectiveStrategy,
    h1: &Hamiltonian,
    t: f64,
    path: ComputationPath,
) -> Result<StrategyReport> {
    if h1.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: h1.dim(),
        });
    }
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::InvalidParameter(format!("temperature must be >= 0, got {t}")));
    }
    match path {
        ComputationPath::ExactState => evaluate_exact(strategy, h1, t),
        ComputationPath::Analytic => evaluate_analytic(strategy, h1, t),
    }
}

fn evaluate_exact(s: &CollectiveStrategy, h1: &Hamiltonian, t: f64) -> Result<StrategyReport> {
    let n = s.n();
    let local_spec = EngineSpec::new(s.local_state(), h1.clone(), s.local_measurement(), t)?;
    let local = engine::run_cycle(&local_spec)?;
    let per_subsystem = SubsystemLedger {
        delta_e: local.delta_e,
        s: local.s_f,
        w: local.w_net,
        eta: local.eta,
    };

    let spec = EngineSpec::new(s.initial_state()?, Hamiltonian::local_sum(h1, n)?, s.measurement()?, t)?;
    let (report, rho_f) = engine::run_cycle_with_state(&spec)?;
    let i_mutual = quantum::multipartite_mutual_information(&rho_f, &vec![2; n])?;
    Ok(finish(
        n,
        report.delta_e,
        report.s_f,
        i_mutual,
        per_subsystem,
        t,
        ComputationPath::ExactState,
    ))
}

fn evaluate_analytic(s: &CollectiveStrategy, h1: &Hamiltonian, t: f64) -> Result<StrategyReport> {
    let n = s.n();
    let h = h1.to_dense();
    let (q, p) = (s.q(), s.p());
    let (delta_e1, s1) = match s.kind() {
        StrategyKind::Ghz => ((h.get(1, 1).re - h.get(0, 0).re) / 2.0, LN_2),
        _ => (-2.0 * (q * p).sqrt() * h.get(0, 1).re, binary_entropy(q)),
    };
    let s_total = match s.kind() {
        StrategyKind::Parallel => n as f64 * s1,
        StrategyKind::TwoQubitEntangling => 2.0 * s1 - 2.0 * p * q * LN_2,
        StrategyKind::DickeSymmetric => binomial_entropy_exact(n as u64, p)?,
        StrategyKind::Ghz => LN_2,
        StrategyKind::Custom(_) => return Err(Error::NoAnalyticPath("custom measurements")),
    };
    let w1 = delta_e1 - t * s1;
    let per_subsystem = SubsystemLedger {
        delta_e: delta_e1,
        s: s1,
        w: w1,
        eta: (delta_e1 > MIN_DELTA_E).then(|| w1 / delta_e1),
    };
    let i_mutual = n as f64 * s1 - s_total;
    Ok(finish(
        n,
        n as f64 * delta_e1,
        s_total,
        i_mutual,
        per_subsystem,
        t,
        ComputationPath::Analytic,
    ))
}

fn finish(
    n: usize,
    delta_e_total: f64,
    s_total: f64,
    i_mutual: f64,
    per_subsystem: SubsystemLedger,
    t: f64,
    path: ComputationPath,
) -> StrategyReport {
    let w_net_total = delta_e_total - t * s_total;
    let eta = (delta_e_total > MIN_DELTA_E).then(|| w_net_total / delta_e_total);
    let eta_parallel = per_subsystem.eta;
    let decomposition_residual = match (eta, eta_parallel) {
        (Some(c), Some(par)) => Some(c - par - t * i_mutual / (n as f64 * per_subsystem.delta_e)),
        _ => None,
    };
    StrategyReport {
        n,
        delta_e_total,
        s_total,
        w_net_total,
        eta,
        eta_parallel,
        i_mutual,
        per_subsystem,
        path,
        decomposition_residual,
    }
}

/// `-q ln q - p ln p` in nats.
pub fn binary_entropy(q: f64) -> f64 {
    quantum::shannon_entropy_of(&[q, 1.0 - q])
}

/// `{(|0>+|1>)/√2, (|0>-|1>)/√2}`.
pub fn hadamard_basis() -> ProjectiveMeasurement {
    let s = 0.5_f64.sqrt();
    ProjectiveMeasurement::new(
        vec![
            StateVector::from_real(&[s, s]).expect("normalized"),
            StateVector::from_real(&[s, -s]).expect("normalized"),
        ],
        vec!["+".into(), "-".into()],
    )
    .expect("orthonormal")
}

/// `{|00>, |11>, (|01>+|10>)/√2, (|01>-|10>)/√2}`.
pub fn two_qubit_basis() -> ProjectiveMeasurement {
    let s = 0.5_f64.sqrt();
    ProjectiveMeasurement::new(
        vec![
            StateVector::basis(4, 0),
            StateVector::basis(4, 3),
            StateVector::from_real(&[0.0, s, s, 0.0]).expect("normalized"),
            StateVector::from_real(&[0.0, s, -s, 0.0]).expect("normalized"),
        ],
        vec!["00".into(), "11".into(), "sym".into(), "antisym".into()],
    )
    .expect("orthonormal")
}

/// Normalized Dicke state of `n` qubits with Hamming weight `weight`: equal
/// amplitude `1/√C(n, weight)` on every bitstring of that weight.
pub fn dicke_state(n: usize, weight: usize) -> Result<StateVector> {
    if n == 0 || n > EXACT_PATH_CAP {
        return Err(Error::ExactPathCap { n, cap: EXACT_PATH_CAP });
    }
    if weight > n {
        return Err(Error::InvalidParameter(format!("weight {weight} exceeds N = {n}")));
    }
    let dim = 1usize << n;
    let count = (0..dim).filter(|x| x.count_ones() as usize == weight).count();
    let amp = C64::new(1.0 / (count as f64).sqrt(), 0.0);
    let amps = (0..dim)
        .map(|x| if x.count_ones() as usize == weight { amp } else { ZERO })
        .collect();
    StateVector::normalized(amps)
}

/// The `N + 1` Dicke states ordered by weight, plus the complement projector
/// onto the non-symmetric sector when `N >= 2`.
pub fn dicke_basis(n: usize) -> Result<ProjectiveMeasurement> {
    let vectors = (0..=n).map(|w| dicke_state(n, w)).collect::<Result<Vec<_>>>()?;
    let labels = (0..=n).map(|w| format!("D{w}")).collect();
    ProjectiveMeasurement::new(vectors, labels)
}

/// `(|g>^{⊗N} ± |e>^{⊗N})/√2` plus the complement projector when `N >= 2`.
pub fn ghz_basis(n: usize) -> Result<ProjectiveMeasurement> {
    if n == 0 || n > EXACT_PATH_CAP {
        return Err(Error::ExactPathCap { n, cap: EXACT_PATH_CAP });
    }
    let dim = 1usize << n;
    let s = 0.5_f64.sqrt();
    let mut plus = vec![ZERO; dim];
    let mut minus = vec![ZERO; dim];
    plus[0] = C64::new(s, 0.0);
    plus[dim - 1] = C64::new(s, 0.0);
    minus[0] = C64::new(s, 0.0);
    minus[dim - 1] = C64::new(-s, 0.0);
    ProjectiveMeasurement::new(
        vec![StateVector::new(plus)?, StateVector::new(minus)?],
        vec!["GHZ+".into(), "GHZ-".into()],
    )
}

/// Entropy in nats of `Binomial(n, p)`:
/// `-Σ_i b(i) ln b(i)`, `b(i) = C(n, i) q^{n-i} p^i`.
///
/// Log-weights are accumulated outward from the mode with the ratio
/// `b(i+1)/b(i) = (n-i)/(i+1) · p/q` and normalized at the end, which stays
/// accurate for `n` in the millions. Terms below `e^{-745}` underflow and are
/// dropped.
pub fn binomial_entropy_exact(n: u64, p: f64) -> Result<f64> {
    check_probability(p)?;
    if n == 0 || p == 0.0 || p == 1.0 {
        return Ok(0.0);
    }
    let q = 1.0 - p;
    let log_ratio = (p / q).ln();
    let mode = (((n + 1) as f64 * p).floor() as u64).min(n);
    const CUTOFF: f64 = -745.0;

    let mut log_w = Vec::new();
    let mut lw = 0.0;
    let mut i = mode;
    loop {
        log_w.push(lw);
        if i == n {
            break;
        }
        lw += ((n - i) as f64).ln() - ((i + 1) as f64).ln() + log_ratio;
        i += 1;
        if lw < CUTOFF {
            break;
        }
    }
    let mut lw = 0.0;
    let mut i = mode;
    while i > 0 {
        // b(i-1)/b(i) = i/(n-i+1) · q/p
        lw += (i as f64).ln() - ((n - i + 1) as f64).ln() - log_ratio;
        i -= 1;
        if lw < CUTOFF {
            break;
        }
        log_w.push(lw);
    }

    let z: f64 = log_w.iter().map(|l| l.exp()).sum();
    let ln_z = z.ln();
    Ok(log_w
        .iter()
        .map(|&l| {
            let ln_b = l - ln_z;
            -ln_b.exp() * ln_b
        })
        .sum())
}

/// Leading large-`n` form `½ ln(2πe·n·p·q)` of the binomial entropy.
pub fn binomial_entropy_asymptotic(n: u64, p: f64) -> Result<f64> {
    check_probability(p)?;
    if n == 0 || p == 0.0 || p == 1.0 {
        return Ok(0.0);
    }
    Ok(0.5 * (2.0 * std::f64::consts::PI * std::f64::consts::E * n as f64 * p * (1.0 - p)).ln())
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("p must lie in [0, 1], got {p}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LocalEquivalence {
    /// Trace distance of each site's marginal from the parallel marginal.
    pub deviations: Vec<f64>,
    pub max_deviation: f64,
    pub passed: bool,
}

/// Checks `Tr_{-μ}[ρ_f] = ρ_{f,μ}` site by site on the exact state.
pub fn verify_local_equivalence(strategy: &CollectiveStrategy, tol: f64) -> Result<LocalEquivalence> {
    let (_, rho_f) = quantum::measure(&strategy.initial_state()?, &strategy.measurement()?)?;
    let target = strategy.local_target();
    let dims = vec![2; strategy.n()];
    let deviations = (0..strategy.n())
        .map(|mu| reduced_state(&rho_f, mu, &dims)?.trace_distance(&target))
        .collect::<Result<Vec<_>>>()?;
    let max_deviation = deviations.iter().copied().fold(0.0, f64::max);
    Ok(LocalEquivalence {
        passed: max_deviation <= tol,
        deviations,
        max_deviation,
    })
}

/// Net-work gain of the two-qubit entangling strategy over the parallel one,
/// `W_♯ - W_∥ = T·(2S_1 - S^{(2)}) = 2pq·T·ln 2`.
pub fn work_gain_two_qubit(q: f64, t: f64) -> f64 {
    2.0 * q * (1.0 - q) * t * LN_2
}

/// `h1` written in the local measurement basis `{|0'>, |1'>}` of
/// [`EngineSpec::rotated_qubit`] for a qubit with `h = diag(0, gap)`.
pub fn measurement_frame_hamiltonian(gap: f64, theta: f64) -> Hamiltonian {
    let (s, c) = theta.sin_cos();
    let h = crate::numerics::ComplexMatrix::from_real(2, 2, &[gap * s * s, -gap * s * c, -gap * s * c, gap * c * c])
        .expect("2x2");
    Hamiltonian::new(h).expect("real symmetric")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn h_opt() -> Hamiltonian {
        measurement_frame_hamiltonian(1.0, FRAC_PI_4)
    }

    #[test]
    fn dicke_basis_small_cases() {
        let m = dicke_basis(1).unwrap();
        assert!(!m.has_complement());
        assert_eq!(m.vectors(), ProjectiveMeasurement::computational(2).vectors());

        let m = dicke_basis(2).unwrap();
        assert_eq!(m.vectors().len(), 3);
        assert!(m.has_complement());
        let q = m.complement_projector().unwrap();
        // Complement is |ψ-><ψ-| with ψ- = (|01>-|10>)/√2.
        let anti = StateVector::from_real(&[0.0, 0.5_f64.sqrt(), -(0.5_f64.sqrt()), 0.0]).unwrap();
        assert!(q.max_abs_diff(&anti.projector()).unwrap() < 1e-15);

        let d = dicke_state(3, 2).unwrap();
        let s = 1.0 / 3.0_f64.sqrt();
        let expected = StateVector::from_real(&[0.0, 0.0, 0.0, s, 0.0, s, s, 0.0]).unwrap();
        assert!(d.inner(&expected).unwrap().re > 1.0 - 1e-15);
    }

    #[test]
    fn ghz_basis_small_cases() {
        let m = ghz_basis(1).unwrap();
        assert!(!m.has_complement());
        assert!(m.gram_deviation() < 1e-15);
        let m = ghz_basis(2).unwrap();
        let q = m.complement_projector().unwrap();
        assert!((q.trace().re - 2.0).abs() < 1e-15);
        for n in 1..=EXACT_PATH_CAP {
            let m = ghz_basis(n).unwrap();
            assert!(m.vectors()[0].inner(&m.vectors()[1]).unwrap().norm() < 1e-15);
        }
        assert!(matches!(ghz_basis(13), Err(Error::ExactPathCap { .. })));
        assert!(matches!(dicke_basis(13), Err(Error::ExactPathCap { .. })));
    }

    #[test]
    fn binomial_entropy_reduces_to_binary() {
        for q in [0.1, 0.37, 0.5, 0.9] {
            let s = binomial_entropy_exact(1, 1.0 - q).unwrap();
            assert!((s - binary_entropy(q)).abs() < 1e-15);
        }
        assert!((binomial_entropy_exact(2, 0.5).unwrap() - 1.5 * LN_2).abs() < 1e-15);
        assert_eq!(binomial_entropy_exact(10, 0.0).unwrap(), 0.0);
        assert_eq!(binomial_entropy_exact(10, 1.0).unwrap(), 0.0);
        assert!(binomial_entropy_exact(10, 1.5).is_err());
    }

    #[test]
    fn asymptotic_at_one() {
        let a = binomial_entropy_asymptotic(1, 0.5).unwrap();
        let expected = 0.5 * (std::f64::consts::PI * std::f64::consts::E / 2.0).ln();
        assert!((a - expected).abs() < 1e-15);
        assert!((a - 0.7258).abs() < 1e-4);
    }

    #[test]
    fn strategy_validation() {
        assert!(CollectiveStrategy::dicke(0, 0.5).is_err());
        assert!(CollectiveStrategy::dicke(3, 0.0).is_err());
        assert!(CollectiveStrategy::dicke(3, 1.0).is_err());
        assert!(CollectiveStrategy::new(StrategyKind::TwoQubitEntangling, 3, 0.5).is_err());
        assert!(CollectiveStrategy::custom(two_qubit_basis(), 3, 0.5).is_err());
        let big = CollectiveStrategy::dicke(20, 0.3).unwrap();
        assert!(matches!(
            evaluate_strategy(&big, &h_opt(), 0.1, ComputationPath::ExactState),
            Err(Error::ExactPathCap { .. })
        ));
        assert!(evaluate_strategy(&big, &h_opt(), 0.1, ComputationPath::Analytic).is_ok());
    }

    #[test]
    fn custom_strategy_has_no_analytic_path() {
        let s = CollectiveStrategy::custom(two_qubit_basis(), 2, 0.3).unwrap();
        assert!(matches!(
            evaluate_strategy(&s, &h_opt(), 0.1, ComputationPath::Analytic),
            Err(Error::NoAnalyticPath(_))
        ));
        let exact = evaluate_strategy(&s, &h_opt(), 0.1, ComputationPath::ExactState).unwrap();
        let two = CollectiveStrategy::two_qubit(0.3).unwrap();
        let reference = evaluate_strategy(&two, &h_opt(), 0.1, ComputationPath::ExactState).unwrap();
        assert!((exact.s_total - reference.s_total).abs() < 1e-14);
    }

    #[test]
    fn parallel_exact_matches_single_engine() {
        let s = CollectiveStrategy::parallel(3, 0.2).unwrap();
        let r = evaluate_strategy(&s, &h_opt(), 0.1, ComputationPath::ExactState).unwrap();
        assert!((r.s_total - 3.0 * binary_entropy(0.2)).abs() < 1e-12);
        assert!(r.i_mutual.abs() < 1e-12);
        assert!((r.eta.unwrap() - r.eta_parallel.unwrap()).abs() < 1e-12);
    }

    #[test]
    fn work_gain_limits() {
        assert!((work_gain_two_qubit(0.5, 1.0) - 0.5 * LN_2).abs() < 1e-15);
        assert!(work_gain_two_qubit(1e-12, 1.0) < 1e-11);
        assert!(work_gain_two_qubit(1.0 - 1e-12, 1.0) < 1e-11);
    }
}
