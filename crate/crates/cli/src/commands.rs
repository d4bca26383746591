use rayon::prelude::*;
use uswqed::dynamics::{self, Drive, TrajectoryMode};
use uswqed::field::{self, FieldMethod};
use uswqed::fluctuations;
use uswqed::model::{self, ModelParams};
use uswqed::numerics::QuadratureConfig;

use crate::{Cell, CliError, Command, Dataset, RunConfig};

/// Rows below this fraction of the strict coupling bound must have the two
/// renormalized-frequency columns agree to 1e-2.
const AGREEMENT_FRACTION: f64 = 0.5;

pub fn execute(config: &RunConfig) -> Result<Dataset, CliError> {
    match config.command {
        Command::Renorm => renorm(config),
        Command::Roots => roots(config),
        Command::Trajectory => trajectory(config),
        Command::Ellipse => ellipse(config),
        Command::Fluct => fluct(config),
        Command::Field => field_profile(config),
        Command::Reflection => scattering(config, Scattering::Phase),
        Command::Transmission => scattering(config, Scattering::Transmissivity),
    }
}

fn params(config: &RunConfig, kappa: f64) -> Result<ModelParams, CliError> {
    Ok(ModelParams::dimensionless(config.omega_x, kappa)?)
}

fn single_kappa(config: &RunConfig) -> f64 {
    config.kappas[0]
}

fn quadrature(config: &RunConfig) -> QuadratureConfig {
    QuadratureConfig::for_cutoff(config.omega_x).with_rel_tol(config.rel_tol)
}

fn drive(config: &RunConfig, kd: f64) -> Result<Drive, CliError> {
    let e = config
        .resolved_ed_abs()
        .ok_or_else(|| CliError::Config("drive amplitude unresolved".into()))?;
    Ok(Drive::new(e, config.ed_phase, kd)?)
}

fn renorm_row(config: &RunConfig, kappa: f64, marker: &str) -> Result<Vec<Cell>, CliError> {
    let p = params(config, kappa)?;
    let r = model::renormalize(&p)?;
    let closed = model::renormalized_frequency_closed_form(&p)?;
    let kappa_ratio = if kappa == 0.0 { 1.0 } else { r.kappa_tilde / kappa };
    let rel_diff = (r.omega_b_tilde - closed).abs() / closed;
    let bound = model::coupling_bound(1.0, config.omega_x).map(|b| b.strict).unwrap_or(f64::INFINITY);
    if kappa <= AGREEMENT_FRACTION * bound && rel_diff > 1e-2 {
        return Err(CliError::Numerical(format!(
            "renormalized frequencies disagree by {rel_diff:.3e} at kappa {kappa}"
        )));
    }
    Ok(vec![
        kappa.into(),
        kappa_ratio.into(),
        r.omega_b_tilde.into(),
        closed.into(),
        rel_diff.into(),
        r.ratio().into(),
        marker.into(),
    ])
}

fn renorm(config: &RunConfig) -> Result<Dataset, CliError> {
    let mut out = Dataset::new([
        "kappa_ratio",
        "kappa_tilde_over_kappa",
        "omega_tilde_over_omega",
        "omega_tilde_closed_over_omega",
        "omega_tilde_rel_diff",
        "kappa_tilde_over_omega_tilde",
        "marker",
    ]);
    let rows = config
        .grid
        .points()
        .par_iter()
        .map(|&kappa| renorm_row(config, kappa, "grid"))
        .collect::<Result<Vec<_>, _>>()?;
    rows.into_iter().for_each(|r| out.push(r));
    match model::coupling_regime_thresholds(1.0, config.omega_x) {
        Ok(t) => {
            out.push(renorm_row(config, t.ultrastrong, "ultrastrong_onset")?);
            out.push(renorm_row(config, t.deepstrong, "deepstrong_onset")?);
        }
        // the crossing can lie beyond the bound for small omega_x
        Err(uswqed::Error::Domain(_)) => {}
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}

fn roots(config: &RunConfig) -> Result<Dataset, CliError> {
    let mut out = Dataset::new([
        "kappa_ratio",
        "re_lambda1",
        "im_lambda1",
        "re_lambda2",
        "im_lambda2",
        "re_lambda3",
        "im_lambda3",
    ]);
    let rows = config
        .grid
        .points()
        .par_iter()
        .map(|&kappa| {
            let poles = model::solve_cubic(&params(config, kappa)?)?;
            let mut row: Vec<Cell> = vec![kappa.into()];
            for l in poles.as_array() {
                row.push(l.re.into());
                row.push(l.im.into());
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    rows.into_iter().for_each(|r| out.push(r));
    Ok(out)
}

fn trajectory(config: &RunConfig) -> Result<Dataset, CliError> {
    let p = params(config, single_kappa(config))?;
    let kd = config.kd.ok_or_else(|| CliError::Config("trajectory needs --kd".into()))?;
    let d = drive(config, kd)?;
    let times = config.grid.points();
    if times[0] < 0.0 {
        return Err(CliError::Config("trajectory times must be >= 0".into()));
    }
    let full = dynamics::trajectory_with(&d, &p, &times, TrajectoryMode::Full, quadrature(config))?;
    let geo = dynamics::ellipse(&d, &p);
    let mut out = Dataset::new([
        "t",
        "re_b_stationary",
        "im_b_stationary",
        "re_b",
        "im_b",
        "radius_x",
        "radius_y",
        "short_over_long",
    ]);
    for (t, b) in times.iter().zip(&full.values) {
        let s = dynamics::stationary_amplitude(*t, &d, &p);
        out.push(vec![
            (*t).into(),
            s.re.into(),
            s.im.into(),
            b.re.into(),
            b.im.into(),
            geo.radius_x.into(),
            geo.radius_y.into(),
            geo.aspect().into(),
        ]);
    }
    Ok(out)
}

fn ellipse(config: &RunConfig) -> Result<Dataset, CliError> {
    let p = params(config, single_kappa(config))?;
    let mut out = Dataset::new(["kd", "radius_x", "radius_y", "long", "short", "short_over_long"]);
    for kd in config.grid.points() {
        let geo = dynamics::ellipse(&drive(config, kd)?, &p);
        out.push(vec![
            kd.into(),
            geo.radius_x.into(),
            geo.radius_y.into(),
            geo.long.into(),
            geo.short.into(),
            geo.aspect().into(),
        ]);
    }
    Ok(out)
}

fn fluct(config: &RunConfig) -> Result<Dataset, CliError> {
    let mut out = Dataset::new(["kappa_ratio", "n_virtual", "anomalous", "dx", "dy", "dx_times_dy"]);
    let rows = config
        .grid
        .points()
        .par_iter()
        .map(|&kappa| {
            let m = fluctuations::moments_closed_form(&params(config, kappa)?)?;
            let f = fluctuations::QuadratureFluct::from(m);
            Ok(vec![
                kappa.into(),
                m.n_virtual.into(),
                m.anomalous.re.into(),
                f.dx.into(),
                f.dy.into(),
                (f.dx * f.dy).into(),
            ])
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    rows.into_iter().for_each(|r| out.push(r));
    Ok(out)
}

fn field_profile(config: &RunConfig) -> Result<Dataset, CliError> {
    let p = params(config, single_kappa(config))?;
    let kd = config.kd.ok_or_else(|| CliError::Config("field needs --kd".into()))?;
    let d = drive(config, kd)?;
    let t = config.t.unwrap_or(300.0);
    if !(t > 0.0) {
        return Err(CliError::Config(format!("field needs t > 0, got {t}")));
    }
    let positions = config.grid.points();
    let rigorous = field::field_profile_with(&positions, t, &d, &p, FieldMethod::Rigorous, quadrature(config))?;
    let approx = field::field_profile(&positions, t, &d, &p, FieldMethod::Approximate)?;
    let mut out = Dataset::new(["r", "re_rigorous", "im_rigorous", "re_approx", "im_approx"]);
    for ((r, a), b) in positions.iter().zip(&rigorous.normalized).zip(&approx.normalized) {
        out.push(vec![(*r).into(), a.re.into(), a.im.into(), b.re.into(), b.im.into()]);
    }
    Ok(out)
}

#[derive(Clone, Copy)]
enum Scattering {
    Phase,
    Transmissivity,
}

fn scattering(config: &RunConfig, what: Scattering) -> Result<Dataset, CliError> {
    let grid = config.grid.points();
    if grid[0] <= 0.0 {
        return Err(CliError::Config("drive frequencies must be > 0".into()));
    }
    let prefix = match what {
        Scattering::Phase => "phase_kappa_",
        Scattering::Transmissivity => "transmissivity_kappa_",
    };
    let mut columns = vec!["kd".to_owned()];
    let mut series = Vec::new();
    for &kappa in &config.kappas {
        let p = params(config, kappa)?;
        columns.push(format!("{prefix}{kappa}"));
        series.push(match what {
            Scattering::Phase => field::phase_spectrum(&grid, &p)?,
            Scattering::Transmissivity => grid.iter().map(|&k| field::open_waveguide(k, &p).transmissivity()).collect(),
        });
    }
    let mut out = Dataset::new(columns);
    for (i, kd) in grid.iter().enumerate() {
        let mut row: Vec<Cell> = vec![(*kd).into()];
        row.extend(series.iter().map(|s| Cell::from(s[i])));
        out.push(row);
    }
    Ok(out)
}
