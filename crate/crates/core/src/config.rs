//! Experiment configuration: flat `key = value` files plus command-line
//! overrides, resolved into an [`ExperimentConfig`] with per-experiment
//! defaults.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use crate::collective::EXACT_PATH_CAP;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config file {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: expected `key = value`, found {text:?}")]
    Syntax { line: usize, text: String },
    #[error("unknown key {0:?}")]
    UnknownKey(String),
    #[error("bad value {value:?} for {key}: {reason}")]
    Value { key: String, value: String, reason: String },
    #[error("{0}")]
    Invalid(String),
}

pub const KEYS: &[&str] = &[
    "T",
    "eps",
    "N-list",
    "q-grid",
    "theta-grid",
    "de-grid",
    "q",
    "out",
    "tol",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentKind {
    Cycle,
    Region,
    Fig2,
    Scaling,
    GhzScaling,
    Decomposition,
}

impl ExperimentKind {
    pub const ALL: [ExperimentKind; 6] = [
        ExperimentKind::Cycle,
        ExperimentKind::Region,
        ExperimentKind::Fig2,
        ExperimentKind::Scaling,
        ExperimentKind::GhzScaling,
        ExperimentKind::Decomposition,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ExperimentKind::Cycle => "cycle",
            ExperimentKind::Region => "region",
            ExperimentKind::Fig2 => "fig2",
            ExperimentKind::Scaling => "scaling",
            ExperimentKind::GhzScaling => "ghz-scaling",
            ExperimentKind::Decomposition => "decomposition",
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentKind {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| ConfigError::Invalid(format!("unknown experiment {s:?}")))
    }
}

/// Inclusive evenly spaced grid `lo:hi:n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl Grid {
    pub fn new(lo: f64, hi: f64, n: usize) -> Self {
        Self { lo, hi, n }
    }

    pub fn single(x: f64) -> Self {
        Self { lo: x, hi: x, n: 1 }
    }

    pub fn points(&self) -> Vec<f64> {
        match self.n {
            0 => Vec::new(),
            1 => vec![self.lo],
            n => (0..n)
                .map(|k| {
                    if k == n - 1 {
                        self.hi
                    } else {
                        self.lo + (self.hi - self.lo) * k as f64 / (n - 1) as f64
                    }
                })
                .collect(),
        }
    }
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        let num = |t: &str| t.parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
        match parts.as_slice() {
            [x] => Ok(Grid::single(num(x)?)),
            [lo, hi, n] => {
                let n: usize = n.parse().map_err(|e| format!("{n:?}: {e}"))?;
                Ok(Grid::new(num(lo)?, num(hi)?, n))
            }
            _ => Err("expected lo:hi:n or a single value".into()),
        }
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.lo, self.hi, self.n)
    }
}

/// Raw settings before per-experiment resolution. Later inserts win.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Settings {
    values: BTreeMap<String, String>,
}

impl Settings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut s = Self::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| ConfigError::Syntax {
                line: idx + 1,
                text: raw.to_string(),
            })?;
            s.set(k.trim(), v.trim())?;
        }
        Ok(s)
    }

    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Accepts `N_list`-style underscores as aliases of the dashed keys.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let key = key.replace('_', "-");
        if !KEYS.contains(&key.as_str()) {
            return Err(ConfigError::UnknownKey(key));
        }
        self.values.insert(key, value.to_string());
        Ok(())
    }

    pub fn merge(&mut self, other: &Settings) {
        for (k, v) in &other.values {
            self.values.insert(k.clone(), v.clone());
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    fn parsed<T: FromStr>(&self, key: &str) -> Result<Option<T>, ConfigError>
    where
        T::Err: fmt::Display,
    {
        self.get(key)
            .map(|v| {
                v.parse::<T>().map_err(|e| ConfigError::Value {
                    key: key.into(),
                    value: v.into(),
                    reason: e.to_string(),
                })
            })
            .transpose()
    }

    fn n_list(&self) -> Result<Option<Vec<u64>>, ConfigError> {
        let Some(v) = self.get("N-list") else {
            return Ok(None);
        };
        let bad = |reason: String| ConfigError::Value {
            key: "N-list".into(),
            value: v.into(),
            reason,
        };
        v.split(',')
            .map(|t| {
                let x: f64 = t.trim().parse().map_err(|e| bad(format!("{t:?}: {e}")))?;
                if x < 1.0 || x.fract() != 0.0 || x > 1e12 {
                    return Err(bad(format!("{t:?} is not a positive integer")));
                }
                Ok(x as u64)
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub kind: ExperimentKind,
    /// Bath temperature in energy units (`k_B = 1`).
    pub temperature: f64,
    /// Qubit gap; `h = diag(0, eps)`.
    pub eps: f64,
    pub n_list: Vec<u64>,
    pub q_grid: Grid,
    /// Measurement-basis angle in radians.
    pub theta_grid: Grid,
    /// `ΔE_1 / eps` grid for fig2, inside `(0, 1/2]`.
    pub de_grid: Grid,
    pub q: f64,
    pub out: Option<PathBuf>,
    pub tol: f64,
}

impl ExperimentConfig {
    pub fn defaults(kind: ExperimentKind) -> Self {
        let n_list: Vec<u64> = match kind {
            ExperimentKind::Cycle | ExperimentKind::Region => vec![1],
            ExperimentKind::Fig2 => vec![1, 2, 6, 10, 20],
            ExperimentKind::Scaling => vec![
                1, 2, 5, 10, 20, 50, 100, 200, 500, 1_000, 2_000, 5_000, 10_000, 20_000, 50_000, 100_000,
            ],
            ExperimentKind::GhzScaling => {
                vec![1, 2, 10, 100, 1_000, 10_000, 100_000, 1_000_000]
            }
            ExperimentKind::Decomposition => (1..=8).collect(),
        };
        let q_grid = match kind {
            ExperimentKind::Cycle => Grid::single(0.5),
            ExperimentKind::Region => Grid::new(0.01, 0.99, 99),
            _ => Grid::new(0.1, 0.9, 5),
        };
        let theta_grid = match kind {
            ExperimentKind::Region => Grid::new(0.0, FRAC_PI_2, 91),
            _ => Grid::single(FRAC_PI_4),
        };
        Self {
            kind,
            temperature: 0.1,
            eps: 1.0,
            n_list,
            q_grid,
            theta_grid,
            de_grid: Grid::new(0.005, 0.5, 100),
            q: 0.5,
            out: None,
            tol: 1e-9,
        }
    }

    pub fn resolve(kind: ExperimentKind, s: &Settings) -> Result<Self, ConfigError> {
        let mut c = Self::defaults(kind);
        if let Some(t) = s.parsed("T")? {
            c.temperature = t;
        }
        if let Some(e) = s.parsed("eps")? {
            c.eps = e;
        }
        if let Some(n) = s.n_list()? {
            c.n_list = n;
        }
        if let Some(g) = s.parsed("q-grid")? {
            c.q_grid = g;
        }
        if let Some(g) = s.parsed("theta-grid")? {
            c.theta_grid = g;
        }
        if let Some(g) = s.parsed("de-grid")? {
            c.de_grid = g;
        }
        if let Some(q) = s.parsed("q")? {
            c.q = q;
        }
        if let Some(o) = s.get("out") {
            c.out = Some(PathBuf::from(o));
        }
        if let Some(t) = s.parsed("tol")? {
            c.tol = t;
        }
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let invalid = |m: String| Err(ConfigError::Invalid(m));
        if !(self.temperature.is_finite() && self.temperature >= 0.0) {
            return invalid(format!("T must be >= 0, got {}", self.temperature));
        }
        if !(self.eps.is_finite() && self.eps > 0.0) {
            return invalid(format!("eps must be > 0, got {}", self.eps));
        }
        if self.n_list.is_empty() {
            return invalid("N-list is empty".into());
        }
        for (name, g) in [
            ("q-grid", &self.q_grid),
            ("theta-grid", &self.theta_grid),
            ("de-grid", &self.de_grid),
        ] {
            if g.n == 0 || !g.lo.is_finite() || !g.hi.is_finite() {
                return invalid(format!("{name} must be non-empty and finite, got {g}"));
            }
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return invalid(format!("tol must be > 0, got {}", self.tol));
        }
        let q_open = |x: f64| x > 0.0 && x < 1.0;
        match self.kind {
            ExperimentKind::Cycle | ExperimentKind::Region => {
                if self.q_grid.lo < 0.0 || self.q_grid.hi > 1.0 || self.q_grid.lo > self.q_grid.hi {
                    return invalid(format!("q-grid must lie in [0, 1], got {}", self.q_grid));
                }
            }
            ExperimentKind::Fig2 => {
                if !(self.de_grid.lo > 0.0 && self.de_grid.hi <= 0.5 && self.de_grid.lo <= self.de_grid.hi) {
                    return invalid(format!("de-grid must lie in (0, 0.5], got {}", self.de_grid));
                }
            }
            ExperimentKind::Scaling => {
                if !q_open(self.q) {
                    return invalid(format!("q must lie in (0, 1), got {}", self.q));
                }
            }
            ExperimentKind::GhzScaling => {}
            ExperimentKind::Decomposition => {
                if !(q_open(self.q_grid.lo) && q_open(self.q_grid.hi)) {
                    return invalid(format!("q-grid must lie in (0, 1), got {}", self.q_grid));
                }
                if let Some(&n) = self.n_list.iter().find(|&&n| n as usize > EXACT_PATH_CAP) {
                    return invalid(format!(
                        "decomposition runs on the exact state; N = {n} exceeds the cap of {EXACT_PATH_CAP}"
                    ));
                }
            }
        }
        Ok(())
    }
}
