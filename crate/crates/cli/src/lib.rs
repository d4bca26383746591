//! Dataset generator behind the `uswqed` binary. Every command evaluates
//! one sweep and emits it as CSV or JSON with the resolved configuration
//! embedded in the header. All quantities are in units of `omega_b`.

pub mod commands;
pub mod dataset;
pub mod error;
pub mod grid;

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};

pub use dataset::{Cell, Dataset, Format};
pub use error::CliError;
pub use grid::GridSpec;

pub const TOLERANCE_ENV: &str = "USWQED_TOL";
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Renormalized frequency and decay rate against coupling.
    Renorm,
    /// Dressed poles lambda_1,2,3 against coupling.
    Roots,
    /// Cavity amplitude <b(t)> over time.
    Trajectory,
    /// Ellipse radii against drive frequency.
    Ellipse,
    /// Quadrature fluctuations against coupling.
    Fluct,
    /// Normalized real-space waveguide field, rigorous and approximate.
    Field,
    /// Unwrapped reflection phase against drive frequency.
    Reflection,
    /// Open-waveguide transmissivity against drive frequency.
    Transmission,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Renorm => "renorm",
            Command::Roots => "roots",
            Command::Trajectory => "trajectory",
            Command::Ellipse => "ellipse",
            Command::Fluct => "fluct",
            Command::Field => "field",
            Command::Reflection => "reflection",
            Command::Transmission => "transmission",
        }
    }
}

#[derive(Debug, Clone, Parser)]
#[command(name = "uswqed", version, about = "Datasets for a cavity coupled to a semi-infinite waveguide")]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,

    /// Drude cutoff omega_x.
    #[arg(long, default_value_t = 5.0)]
    pub omega_x: f64,

    /// Coupling kappa; a comma-separated list for reflection and transmission.
    #[arg(long)]
    pub kappa: Option<String>,

    /// Drive frequency k_d.
    #[arg(long)]
    pub kd: Option<f64>,

    /// Drive amplitude |E_d|; defaults to sqrt(2.5 kappa).
    #[arg(long)]
    pub ed_abs: Option<f64>,

    /// Drive phase theta_d in radians.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub ed_phase: f64,

    /// Evaluation time for the field profile.
    #[arg(long)]
    pub t: Option<f64>,

    /// Sweep grid START:STOP:N (coupling, time, frequency or position,
    /// depending on the command).
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<GridSpec>,

    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

/// Everything a command needs after defaults are filled in.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub omega_x: f64,
    pub kappas: Vec<f64>,
    pub kd: Option<f64>,
    pub ed_abs: Option<f64>,
    pub ed_phase: f64,
    pub t: Option<f64>,
    pub grid: GridSpec,
    pub format: Format,
    pub rel_tol: f64,
}

fn parse_kappas(list: &str) -> Result<Vec<f64>, CliError> {
    list.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Config(format!("bad kappa value {s:?}")))
        })
        .collect()
}

pub fn tolerance_from_env(value: Option<&str>) -> Result<f64, CliError> {
    match value {
        None => Ok(DEFAULT_TOLERANCE),
        Some(s) => match s.trim().parse::<f64>() {
            Ok(x) if x > 0.0 && x < 1.0 => Ok(x),
            _ => Err(CliError::Config(format!("{TOLERANCE_ENV} must be a number in (0, 1), got {s:?}"))),
        },
    }
}

impl RunConfig {
    pub fn resolve(args: &Args, rel_tol: f64) -> Result<Self, CliError> {
        let command = args.command;
        let default_kappas: &[f64] = match command {
            Command::Reflection | Command::Transmission => &[0.01, 0.05, 0.1, 0.15],
            Command::Trajectory | Command::Ellipse => &[0.15],
            Command::Field => &[0.1],
            _ => &[],
        };
        let kappas = match &args.kappa {
            Some(list) => parse_kappas(list)?,
            None => default_kappas.to_vec(),
        };
        let sweeps_kappa = matches!(command, Command::Renorm | Command::Roots | Command::Fluct);
        if sweeps_kappa && args.kappa.is_some() {
            return Err(CliError::Config(format!(
                "{} sweeps kappa over --grid; --kappa is not accepted",
                command.name()
            )));
        }
        let single = matches!(command, Command::Trajectory | Command::Ellipse | Command::Field);
        if single && kappas.len() != 1 {
            return Err(CliError::Config(format!("{} takes exactly one kappa", command.name())));
        }
        if let Some(k) = kappas.iter().find(|k| !(k.is_finite() && **k >= 0.0)) {
            return Err(CliError::Config(format!("kappa must be >= 0, got {k}")));
        }
        let needs_drive = matches!(command, Command::Trajectory | Command::Field);
        if needs_drive && args.kd.is_none() {
            return Err(CliError::Config(format!("{} needs --kd", command.name())));
        }
        let t = match command {
            Command::Field => Some(args.t.unwrap_or(300.0)),
            _ => args.t,
        };
        let grid = match args.grid {
            Some(g) => g,
            None => default_grid(command, args.kd, t)?,
        };
        Ok(Self {
            command,
            omega_x: args.omega_x,
            kappas,
            kd: args.kd,
            ed_abs: args.ed_abs,
            ed_phase: args.ed_phase,
            t,
            grid,
            format: args.format,
            rel_tol,
        })
    }

    /// Drive amplitude actually used: explicit, or sqrt(2.5 kappa).
    pub fn resolved_ed_abs(&self) -> Option<f64> {
        match (self.ed_abs, self.kappas.as_slice()) {
            (Some(e), _) => Some(e),
            (None, [kappa]) if matches!(self.command, Command::Trajectory | Command::Ellipse | Command::Field) => {
                Some((2.5 * kappa).sqrt())
            }
            _ => None,
        }
    }

    /// Sorted-key JSON of the configuration, reproduced verbatim in every
    /// output header.
    pub fn canonical_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command.name()));
        m.insert("omega_b".into(), json!(1.0));
        m.insert("omega_x".into(), json!(self.omega_x));
        m.insert("kappa".into(), json!(self.kappas));
        m.insert("kd".into(), json!(self.kd));
        m.insert("ed_abs".into(), json!(self.resolved_ed_abs()));
        m.insert("ed_phase".into(), json!(self.ed_phase));
        m.insert("t".into(), json!(self.t));
        m.insert("grid".into(), self.grid.to_json());
        m.insert("format".into(), json!(self.format.name()));
        m.insert("rel_tol".into(), json!(self.rel_tol));
        m.insert("phase_convention".into(), json!("no_mirror_factor"));
        Value::Object(m)
    }
}

fn default_grid(command: Command, kd: Option<f64>, t: Option<f64>) -> Result<GridSpec, CliError> {
    let g = |a, b, n| GridSpec::new(a, b, n).map_err(CliError::Config);
    match command {
        Command::Renorm | Command::Roots | Command::Fluct => g(0.0, 0.19, 96),
        Command::Trajectory => {
            let period = 2.0 * std::f64::consts::PI / kd.unwrap_or(1.0);
            g(0.0, 20.0 * period, 1281)
        }
        Command::Ellipse => g(0.05, 2.0, 196),
        Command::Field => {
            let t = t.unwrap_or(300.0);
            g(-50.0, t + 50.0, 400)
        }
        Command::Reflection | Command::Transmission => g(0.005, 2.0, 400),
    }
}

/// Parses, resolves and runs one invocation, writing the dataset to the
/// requested destination.
pub fn run(args: &Args, env_tolerance: Option<&str>) -> Result<(), CliError> {
    let rel_tol = tolerance_from_env(env_tolerance)?;
    let config = RunConfig::resolve(args, rel_tol)?;
    let dataset = commands::execute(&config)?;
    let text = dataset.render(config.format, &config.canonical_json())?;
    match &args.out {
        Some(path) => dataset::write_atomic(path, &text),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}
