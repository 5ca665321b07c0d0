//! Deterministic parameter sweeps producing CSV tables.
//!
//! Every table starts with `#` header lines recording the experiment, crate
//! version, units and configuration, then a column row, then data. Floats are
//! written with 15 significant digits; undefined efficiencies are `nan`. Grid
//! points may be evaluated in parallel but rows are always emitted in grid
//! order.

use std::f64::consts::{E, FRAC_PI_4, PI};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::collective::{
    self, binary_entropy, evaluate_strategy, measurement_frame_hamiltonian, CollectiveStrategy, ComputationPath,
    StrategyReport,
};
use crate::config::{ExperimentConfig, ExperimentKind};
use crate::engine::{self, EngineSpec};
use crate::error::Result;
use crate::quantum::Hamiltonian;

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentOutput {
    pub csv: String,
    /// Human-readable one-line summary.
    pub summary: String,
    /// Largest decomposition residual that exceeded the tolerance, if any.
    pub residual_failure: Option<f64>,
}

pub fn run(config: &ExperimentConfig) -> Result<ExperimentOutput> {
    match config.kind {
        ExperimentKind::Cycle => cmd_cycle(config),
        ExperimentKind::Region => cmd_region(config),
        ExperimentKind::Fig2 => cmd_fig2(config),
        ExperimentKind::Scaling => cmd_scaling(config),
        ExperimentKind::GhzScaling => cmd_ghz_scaling(config),
        ExperimentKind::Decomposition => cmd_decomposition(config),
    }
}

/// Float with 15 significant digits.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else {
        format!("{x:.14e}")
    }
}

fn fmt_opt(x: Option<f64>) -> String {
    fmt_f64(x.unwrap_or(f64::NAN))
}

struct Table {
    text: String,
}

impl Table {
    fn new(config: &ExperimentConfig, extra: &[String], columns: &[&str]) -> Self {
        let mut text = String::new();
        let _ = writeln!(text, "# qme {} v{}", config.kind, env!("CARGO_PKG_VERSION"));
        let _ = writeln!(
            text,
            "# units: energies with k_B = 1 (T in energy units), entropies in nats"
        );
        let _ = writeln!(text, "# T = {}", config.temperature);
        let _ = writeln!(text, "# eps = {}", config.eps);
        for line in extra {
            let _ = writeln!(text, "# {line}");
        }
        text.push_str(&columns.join(","));
        text.push('\n');
        Self { text }
    }

    fn row(&mut self, fields: &[String]) {
        self.text.push_str(&fields.join(","));
        self.text.push('\n');
    }
}

fn grid_pairs(config: &ExperimentConfig) -> Vec<(f64, f64)> {
    let thetas = config.theta_grid.points();
    config
        .q_grid
        .points()
        .into_iter()
        .flat_map(|q| thetas.iter().map(move |&th| (q, th)))
        .collect()
}

/// Full ledger of single-qubit cycles on the `q × θ` grid.
pub fn cmd_cycle(config: &ExperimentConfig) -> Result<ExperimentOutput> {
    let reports = grid_pairs(config)
        .into_par_iter()
        .map(|(q, th)| {
            let spec = EngineSpec::rotated_qubit(q, th, config.eps, config.temperature)?;
            Ok((q, th, engine::run_cycle(&spec)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut t = Table::new(
        config,
        &[
            format!("q-grid = {}", config.q_grid),
            format!("theta-grid = {} (radians)", config.theta_grid),
        ],
        &[
            "q", "theta", "E_i", "E_f", "delta_E", "W_ext", "S_f", "W_er", "W_net", "eta",
        ],
    );
    for (q, th, r) in &reports {
        t.row(&[
            fmt_f64(*q),
            fmt_f64(*th),
            fmt_f64(r.e_i),
            fmt_f64(r.e_f),
            fmt_f64(r.delta_e),
            fmt_f64(r.w_ext),
            fmt_f64(r.s_f),
            fmt_f64(r.w_er),
            fmt_f64(r.w_net),
            fmt_opt(r.eta),
        ]);
    }
    Ok(ExperimentOutput {
        summary: format!("cycle: {} grid points", reports.len()),
        csv: t.text,
        residual_failure: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionPoint {
    pub q: f64,
    pub theta: f64,
    pub delta_e: f64,
    pub s: f64,
    pub w: f64,
    pub eta: Option<f64>,
}

/// Single-qubit engines over initial-state weight and basis angle.
pub fn region_points(config: &ExperimentConfig) -> Result<Vec<RegionPoint>> {
    grid_pairs(config)
        .into_par_iter()
        .map(|(q, theta)| {
            let spec = EngineSpec::rotated_qubit(q, theta, config.eps, config.temperature)?;
            let r = engine::run_cycle(&spec)?;
            Ok(RegionPoint {
                q,
                theta,
                delta_e: r.delta_e,
                s: r.s_f,
                w: r.w_net,
                eta: r.eta,
            })
        })
        .collect()
}

pub fn cmd_region(config: &ExperimentConfig) -> Result<ExperimentOutput> {
    let points = region_points(config)?;
    let engines = points.iter().filter(|p| p.w > 0.0).count();
    let mut extra = vec![
        format!("q-grid = {}", config.q_grid),
        format!("theta-grid = {} (radians)", config.theta_grid),
        "h = diag(0, eps); basis |0'> = cos(theta)|g> + sin(theta)|e>, |1'> = sin(theta)|g> - cos(theta)|e>".into(),
    ];
    if engines == 0 {
        extra.push("engine region: empty (W_1 <= 0 everywhere)".into());
    }
    let mut t = Table::new(config, &extra, &["q", "theta", "delta_E_1", "S_1", "W_1", "eta"]);
    for p in &points {
        t.row(&[
            fmt_f64(p.q),
            fmt_f64(p.theta),
            fmt_f64(p.delta_e),
            fmt_f64(p.s),
            fmt_f64(p.w),
            fmt_opt(p.eta),
        ]);
    }
    Ok(ExperimentOutput {
        summary: format!("region: {} points, {} with positive work", points.len(), engines),
        csv: t.text,
        residual_failure: None,
    })
}

/// Weight `q* <= 1/2` on `|0'>` of the optimal single-qubit engine (basis
/// angle π/4) that receives `ΔE_1 = x·eps`, i.e. `√(q*(1-q*)) = x`.
pub fn optimal_parallel_q(x: f64) -> f64 {
    let disc = (1.0 - 4.0 * x * x).max(0.0);
    // (1 - √disc)/2 written without cancellation
    2.0 * x * x / (1.0 + disc.sqrt())
}

/// Work of the best single-qubit engine receiving `ΔE_1 = x·eps`, from the
/// engine ledger.
pub fn parallel_envelope_work(x: f64, eps: f64, t: f64) -> Result<f64> {
    let spec = EngineSpec::rotated_qubit(optimal_parallel_q(x), FRAC_PI_4, eps, t)?;
    Ok(engine::run_cycle(&spec)?.w_net)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fig2Point {
    pub n: u64,
    pub delta_e1: f64,
    pub q_star: f64,
    pub s_total: f64,
    pub w_per_system: f64,
    pub w_parallel: f64,
    pub eta: Option<f64>,
}

/// Dicke strategy locally equivalent to the optimal parallel engine, per
/// system, for each `N` and `ΔE_1`.
pub fn fig2_points(config: &ExperimentConfig) -> Result<Vec<Fig2Point>> {
    let h1 = measurement_frame_hamiltonian(config.eps, FRAC_PI_4);
    let xs = config.de_grid.points();
    let jobs: Vec<(u64, f64)> = config
        .n_list
        .iter()
        .flat_map(|&n| xs.iter().map(move |&x| (n, x)))
        .collect();
    jobs.into_par_iter()
        .map(|(n, x)| {
            let q_star = optimal_parallel_q(x);
            let s = CollectiveStrategy::dicke(n as usize, q_star)?;
            let r = evaluate_strategy(&s, &h1, config.temperature, ComputationPath::Analytic)?;
            Ok(Fig2Point {
                n,
                delta_e1: r.per_subsystem.delta_e,
                q_star,
                s_total: r.s_total,
                w_per_system: r.w_net_total / n as f64,
                w_parallel: parallel_envelope_work(x, config.eps, config.temperature)?,
                eta: r.eta,
            })
        })
        .collect()
}

pub fn cmd_fig2(config: &ExperimentConfig) -> Result<ExperimentOutput> {
    let points = fig2_points(config)?;
    let mut t = Table::new(
        config,
        &[
            format!("N-list = {}", join_u64(&config.n_list)),
            format!("de-grid = {} (delta_E_1 / eps)", config.de_grid),
            "Dicke strategy locally equivalent to the optimal parallel engine (basis angle pi/4)".into(),
        ],
        &[
            "N",
            "delta_E_1",
            "q_star",
            "S_total",
            "W_per_system",
            "W_parallel",
            "eta",
        ],
    );
    for p in &points {
        t.row(&[
            p.n.to_string(),
            fmt_f64(p.delta_e1),
            fmt_f64(p.q_star),
            fmt_f64(p.s_total),
            fmt_f64(p.w_per_system),
            fmt_f64(p.w_parallel),
            fmt_opt(p.eta),
        ]);
    }
    Ok(ExperimentOutput {
        summary: format!("fig2: {} curves x {} points", config.n_list.len(), config.de_grid.n),
        csv: t.text,
        residual_failure: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingPoint {
    pub n: u64,
    pub delta_e1: f64,
    pub s_total: f64,
    pub eta: Option<f64>,
    /// Efficiency predicted by the closed form.
    pub eta_theory: f64,
    /// `N·(1 - η)·ΔE_1 / T`, i.e. the collective entropy.
    pub entropy_scaled: f64,
    /// `entropy_scaled` minus its predicted large-`N` value.
    pub residual: f64,
}

/// Dicke strategy at fixed `q` on the analytic path; the theory value is
/// `1 - (T/ΔE_1)·½ln(2πeNpq)/N`.
pub fn scaling_points(config: &ExperimentConfig) -> Result<Vec<ScalingPoint>> {
    let h1 = measurement_frame_hamiltonian(config.eps, FRAC_PI_4);
    let t = config.temperature;
    let (q, p) = (config.q, 1.0 - config.q);
    config
        .n_list
        .par_iter()
        .map(|&n| {
            let s = CollectiveStrategy::dicke(n as usize, q)?;
            let r = evaluate_strategy(&s, &h1, t, ComputationPath::Analytic)?;
            let de1 = r.per_subsystem.delta_e;
            let predicted = 0.5 * (2.0 * PI * E * n as f64 * p * q).ln();
            let entropy_scaled = scaled_entropy(r.eta, n, de1, t);
            Ok(ScalingPoint {
                n,
                delta_e1: de1,
                s_total: r.s_total,
                eta: r.eta,
                eta_theory: 1.0 - t * predicted / (n as f64 * de1),
                entropy_scaled,
                residual: entropy_scaled - predicted,
            })
        })
        .collect()
}

fn scaled_entropy(eta: Option<f64>, n: u64, de1: f64, t: f64) -> f64 {
    match eta {
        Some(eta) if t > 0.0 => n as f64 * (1.0 - eta) * de1 / t,
        _ => f64::NAN,
    }
}

pub fn cmd_scaling(config: &ExperimentConfig) -> Result<ExperimentOutput> {
    let points = scaling_points(config)?;
    let mut t = Table::new(
        config,
        &[
            format!("q = {}", config.q),
            format!("N-list = {}", join_u64(&config.n_list)),
            "Dicke strategy, analytic path; residual = N(1-eta)dE_1/T - ln(2 pi e N p q)/2".into(),
        ],
        &[
            "N",
            "delta_E_1",
            "S_total",
            "eta",
            "eta_asymptotic",
            "entropy_scaled",
            "residual",
        ],
    );
    for p in &points {
        t.row(&[
            p.n.to_string(),
            fmt_f64(p.delta_e1),
            fmt_f64(p.s_total),
            fmt_opt(p.eta),
            fmt_f64(p.eta_theory),
            fmt_f64(p.entropy_scaled),
            fmt_f64(p.residual),
        ]);
    }
    Ok(ExperimentOutput {
        summary: format!("scaling: {} values of N", points.len()),
        csv: t.text,
        residual_failure: None,
    })
}

/// GHZ strategy with `h = diag(0, eps)`; theory `1 - (T/ΔE_1)·ln 2/N`.
pub fn ghz_scaling_points(config: &ExperimentConfig) -> Result<Vec<ScalingPoint>> {
    let h1 = Hamiltonian::qubit(config.eps);
    let t = config.temperature;
    config
        .n_list
        .par_iter()
        .map(|&n| {
            let s = CollectiveStrategy::ghz(n as usize)?;
            let r = evaluate_strategy(&s, &h1, t, ComputationPath::Analytic)?;
            let de1 = r.per_subsystem.delta_e;
            let entropy_scaled = scaled_entropy(r.eta, n, de1, t);
            Ok(ScalingPoint {
                n,
                delta_e1: de1,
                s_total: r.s_total,
                eta: r.eta,
                eta_theory: 1.0 - t / de1 * std::f64::consts::LN_2 / n as f64,
                entropy_scaled,
                residual: entropy_scaled - std::f64::consts::LN_2,
            })
        })
        .collect()
}

pub fn cmd_ghz_scaling(config: &ExperimentConfig) -> Result<ExperimentOutput> {
    let points = ghz_scaling_points(config)?;
    let mut t = Table::new(
        config,
        &[
            format!("N-list = {}", join_u64(&config.n_list)),
            "GHZ strategy from |g>^N, analytic path; residual = N(1-eta)dE_1/T - ln 2".into(),
        ],
        &[
            "N",
            "delta_E_1",
            "S_total",
            "eta",
            "eta_theory",
            "entropy_scaled",
            "residual",
        ],
    );
    for p in &points {
        t.row(&[
            p.n.to_string(),
            fmt_f64(p.delta_e1),
            fmt_f64(p.s_total),
            fmt_opt(p.eta),
            fmt_f64(p.eta_theory),
            fmt_f64(p.entropy_scaled),
            fmt_f64(p.residual),
        ]);
    }
    Ok(ExperimentOutput {
        summary: format!("ghz-scaling: {} values of N", points.len()),
        csv: t.text,
        residual_failure: None,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionPoint {
    pub strategy: &'static str,
    pub q: f64,
    pub report: StrategyReport,
}

/// Exact-state strategies on the `N × q` grid: parallel and Dicke for every
/// point, the two-qubit basis at `N = 2`, GHZ once per `N`.
pub fn decomposition_points(config: &ExperimentConfig) -> Result<Vec<DecompositionPoint>> {
    let h_z = measurement_frame_hamiltonian(config.eps, FRAC_PI_4);
    let h_ghz = Hamiltonian::qubit(config.eps);
    let qs = config.q_grid.points();
    let mut jobs: Vec<CollectiveStrategy> = Vec::new();
    for &n in &config.n_list {
        let n = n as usize;
        for &q in &qs {
            jobs.push(CollectiveStrategy::parallel(n, q)?);
            if n == 2 {
                jobs.push(CollectiveStrategy::two_qubit(q)?);
            }
            jobs.push(CollectiveStrategy::dicke(n, q)?);
        }
        jobs.push(CollectiveStrategy::ghz(n)?);
    }
    jobs.into_par_iter()
        .map(|s| {
            let h = match s.kind() {
                collective::StrategyKind::Ghz => &h_ghz,
                _ => &h_z,
            };
            let report = evaluate_strategy(&s, h, config.temperature, ComputationPath::ExactState)?;
            Ok(DecompositionPoint {
                strategy: s.kind().name(),
                q: s.q(),
                report,
            })
        })
        .collect()
}

pub fn cmd_decomposition(config: &ExperimentConfig) -> Result<ExperimentOutput> {
    let points = decomposition_points(config)?;
    let mut t = Table::new(
        config,
        &[
            format!("N-list = {}", join_u64(&config.n_list)),
            format!("q-grid = {}", config.q_grid),
            format!("tol = {}", config.tol),
            "exact-state path; residual = eta_collective - eta_parallel - T*I/(N*delta_E_1)".into(),
        ],
        &[
            "strategy",
            "N",
            "q",
            "delta_E_total",
            "S_total",
            "eta_parallel",
            "eta_collective",
            "I_mutual",
            "residual",
        ],
    );
    let mut worst: f64 = 0.0;
    for p in &points {
        let r = &p.report;
        if let Some(res) = r.decomposition_residual {
            worst = worst.max(res.abs());
        }
        t.row(&[
            p.strategy.to_string(),
            r.n.to_string(),
            fmt_f64(p.q),
            fmt_f64(r.delta_e_total),
            fmt_f64(r.s_total),
            fmt_opt(r.eta_parallel),
            fmt_opt(r.eta),
            fmt_f64(r.i_mutual),
            fmt_opt(r.decomposition_residual),
        ]);
    }
    Ok(ExperimentOutput {
        summary: format!(
            "decomposition: {} strategies, max |residual| = {worst:e} (tol {:e})",
            points.len(),
            config.tol
        ),
        csv: t.text,
        residual_failure: (worst > config.tol).then_some(worst),
    })
}

fn join_u64(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// `S_1` of the optimal parallel engine at `ΔE_1 = x·eps`.
pub fn parallel_envelope_entropy(x: f64) -> f64 {
    binary_entropy(optimal_parallel_q(x))
}
