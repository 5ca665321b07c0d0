use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use qme::config::{ConfigError, ExperimentConfig, ExperimentKind, Settings};
use qme::experiments;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Command {
    Cycle,
    Region,
    Fig2,
    Scaling,
    GhzScaling,
    Decomposition,
}

impl From<Command> for ExperimentKind {
    fn from(c: Command) -> Self {
        match c {
            Command::Cycle => ExperimentKind::Cycle,
            Command::Region => ExperimentKind::Region,
            Command::Fig2 => ExperimentKind::Fig2,
            Command::Scaling => ExperimentKind::Scaling,
            Command::GhzScaling => ExperimentKind::GhzScaling,
            Command::Decomposition => ExperimentKind::Decomposition,
        }
    }
}

/// Measurement-engine experiments. Writes CSV to --out or stdout.
#[derive(Debug, Parser)]
#[command(name = "qme", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Flat `key = value` config file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Bath temperature (k_B = 1).
    #[arg(long = "T")]
    temperature: Option<String>,
    /// Qubit gap.
    #[arg(long)]
    eps: Option<String>,
    /// Comma-separated subsystem counts.
    #[arg(long = "N-list")]
    n_list: Option<String>,
    /// lo:hi:n
    #[arg(long = "q-grid")]
    q_grid: Option<String>,
    /// lo:hi:n in radians
    #[arg(long = "theta-grid")]
    theta_grid: Option<String>,
    /// lo:hi:n for delta_E_1 / eps (fig2)
    #[arg(long = "de-grid")]
    de_grid: Option<String>,
    /// Initial-state weight on |0> (scaling)
    #[arg(long)]
    q: Option<String>,
    /// Residual tolerance (decomposition)
    #[arg(long)]
    tol: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn settings(cli: &Cli) -> Result<Settings, ConfigError> {
    let mut s = match &cli.config {
        Some(path) => Settings::from_file(path)?,
        None => Settings::new(),
    };
    let flags = [
        ("T", &cli.temperature),
        ("eps", &cli.eps),
        ("N-list", &cli.n_list),
        ("q-grid", &cli.q_grid),
        ("theta-grid", &cli.theta_grid),
        ("de-grid", &cli.de_grid),
        ("q", &cli.q),
        ("tol", &cli.tol),
    ];
    for (key, value) in flags {
        if let Some(v) = value {
            s.set(key, v)?;
        }
    }
    if let Some(out) = &cli.out {
        s.set("out", &out.to_string_lossy())?;
    }
    Ok(s)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match settings(&cli).and_then(|s| ExperimentConfig::resolve(cli.command.into(), &s)) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("qme: config error: {e}");
            return ExitCode::from(2);
        }
    };
    let output = match experiments::run(&config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("qme: {e}");
            return ExitCode::from(1);
        }
    };
    match &config.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &output.csv) {
                eprintln!("qme: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{}", output.csv),
    }
    eprintln!("{}", output.summary);
    if let Some(worst) = output.residual_failure {
        eprintln!(
            "qme: decomposition residual {worst:e} exceeds tolerance {:e}",
            config.tol
        );
        return ExitCode::from(3);
    }
    ExitCode::SUCCESS
}
