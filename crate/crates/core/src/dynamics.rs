//! Cavity amplitude `<b(t)>` under a monochromatic drive: the stationary
//! elliptical orbit and the transient that relaxes onto it.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fano::FanoCoefficients;
use crate::model::{self, ModelParams};
use crate::numerics::{Interval, PoleSpec, Prescription, Quadrature, QuadratureConfig};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Drive {
    e_d_abs: f64,
    theta_d: f64,
    k_d: f64,
}

impl Drive {
    pub fn new(e_d_abs: f64, theta_d: f64, k_d: f64) -> Result<Self> {
        if !(e_d_abs >= 0.0) || !e_d_abs.is_finite() {
            return Err(Error::InvalidParameter(format!("drive amplitude must be >= 0, got {e_d_abs}")));
        }
        if !theta_d.is_finite() {
            return Err(Error::InvalidParameter(format!("drive phase must be finite, got {theta_d}")));
        }
        if !(k_d > 0.0) || !k_d.is_finite() {
            return Err(Error::InvalidParameter(format!("drive frequency must be > 0, got {k_d}")));
        }
        Ok(Self { e_d_abs, theta_d, k_d })
    }

    /// `|E_d|^2 = 2.5 kappa`, which puts about ten photons in a weakly
    /// coupled cavity driven on resonance.
    pub fn with_default_amplitude(p: &ModelParams, theta_d: f64, k_d: f64) -> Result<Self> {
        Self::new((2.5 * p.kappa()).sqrt(), theta_d, k_d)
    }

    pub fn e_d_abs(&self) -> f64 {
        self.e_d_abs
    }

    pub fn theta_d(&self) -> f64 {
        self.theta_d
    }

    pub fn k_d(&self) -> f64 {
        self.k_d
    }

    /// `E_d = |E_d| e^{i theta_d}`
    pub fn amplitude(&self) -> C64 {
        C64::from_polar(self.e_d_abs, self.theta_d)
    }
}

/// `sqrt(2 pi) [beta1*(k_d) E_d e^{-i k_d t} - beta2(k_d) E_d* e^{i k_d t}]`
pub fn stationary_amplitude(t: f64, d: &Drive, p: &ModelParams) -> C64 {
    let fano = FanoCoefficients::new(*p);
    let e = d.amplitude();
    let phase = C64::from_polar(1.0, -d.k_d * t);
    (2.0 * PI).sqrt() * (fano.beta1(d.k_d).conj() * e * phase - fano.beta2(d.k_d) * e.conj() * phase.conj())
}

/// Real and imaginary parts of the stationary amplitude written out
/// separately; each is a single harmonic, so the orbit is an ellipse with
/// axes along Re and Im.
pub fn stationary_components(t: f64, d: &Drive, p: &ModelParams) -> (f64, f64) {
    let u = C64::from_polar(1.0, d.k_d * t - d.theta_d) / model::denominator(d.k_d, p);
    let scale = (8.0 * PI).sqrt() * d.e_d_abs * model::coupling(d.k_d, p);
    (scale * p.omega_b() * u.re, -scale * d.k_d * u.im)
}

fn transient_quadrature(p: &ModelParams) -> Quadrature {
    transient_quadrature_from(p, QuadratureConfig::for_cutoff(p.omega_x()))
}

fn transient_quadrature_from(p: &ModelParams, config: QuadratureConfig) -> Quadrature {
    Quadrature::new(config).with_breakpoints(&model::resonance_points(p, true))
}

/// Transient part of `<b(t)>` from the two contour-ready integrals
///
/// `T1 = (i E_d xi_kd / sqrt(2 pi)) int e^{-iqt} (q + omega_b) / [D*(q) (q - k_d - i0)] dq`,
/// `T2 = (i E_d* xi_kd / sqrt(2 pi)) int e^{iqt} (q - omega_b) / [D(q) (q - k_d + i0)] dq`,
///
/// with `D(q) = q^2 - omega_b^2 z(q)`, over the whole real line.
pub fn transient_amplitude(t: f64, d: &Drive, p: &ModelParams) -> Result<C64> {
    transient_amplitude_with(t, d, p, &transient_quadrature(p))
}

pub fn transient_amplitude_with(t: f64, d: &Drive, p: &ModelParams, quad: &Quadrature) -> Result<C64> {
    if !(t >= 0.0) {
        return Err(Error::Domain(format!("transient is defined for t >= 0, got {t}")));
    }
    if d.e_d_abs == 0.0 || p.kappa() == 0.0 {
        return Ok(C64::new(0.0, 0.0));
    }
    let (wb, kd) = (p.omega_b(), d.k_d);
    let e = d.amplitude();
    let prefactor = C64::new(0.0, model::coupling(kd, p) / (2.0 * PI).sqrt());
    let first = quad.oscillatory_pole_integral(
        |q| (q + wb) / model::denominator_conj(q, p),
        t,
        -1.0,
        Interval::WholeLine,
        PoleSpec::new(kd, Prescription::MinusI0),
    )?;
    let second = quad.oscillatory_pole_integral(
        |q| (q - wb) / model::denominator(q, p),
        t,
        1.0,
        Interval::WholeLine,
        PoleSpec::new(kd, Prescription::PlusI0),
    )?;
    Ok(prefactor * (e * first.value + e.conj() * second.value))
}

/// The same transient from residues at the dressed poles: `T1` closes in
/// the lower half-plane around `conj(lambda_j)`, `T2` in the upper one
/// around `lambda_j`.
pub fn transient_amplitude_residues(t: f64, d: &Drive, p: &ModelParams) -> Result<C64> {
    if !(t >= 0.0) {
        return Err(Error::Domain(format!("transient is defined for t >= 0, got {t}")));
    }
    if d.e_d_abs == 0.0 || p.kappa() == 0.0 {
        return Ok(C64::new(0.0, 0.0));
    }
    let poles = model::solve_cubic(p)?;
    let separation = poles.min_separation();
    if separation < 1e-8 * p.omega_b() {
        return Err(Error::IllConditioned(separation));
    }
    let (wb, wx, kd) = (p.omega_b(), p.omega_x(), d.k_d);
    let iwx = C64::new(0.0, wx);
    let lambda = poles.as_array();
    let e = d.amplitude();
    let mut first = C64::new(0.0, 0.0);
    let mut second = C64::new(0.0, 0.0);
    for j in 0..3 {
        let l = lambda[j];
        let m = l.conj();
        let dl = poles.cubic_derivative_at(j);
        first += (C64::new(0.0, -t) * m).exp() * (m + wb) * (m + iwx) / ((m - kd) * dl.conj());
        second += (C64::new(0.0, t) * l).exp() * (l - wb) * (l - iwx) / ((l - kd) * dl);
    }
    let scale = (2.0 * PI).sqrt() * model::coupling(kd, p);
    Ok(scale * (e * first - e.conj() * second))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrajectoryMode {
    Stationary,
    Full,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub values: Vec<C64>,
    pub mode: TrajectoryMode,
}

pub fn trajectory(d: &Drive, p: &ModelParams, t_grid: &[f64], mode: TrajectoryMode) -> Result<Trajectory> {
    trajectory_with(d, p, t_grid, mode, QuadratureConfig::for_cutoff(p.omega_x()))
}

pub fn trajectory_with(
    d: &Drive,
    p: &ModelParams,
    t_grid: &[f64],
    mode: TrajectoryMode,
    config: QuadratureConfig,
) -> Result<Trajectory> {
    if t_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidParameter("time grid must be strictly ascending".into()));
    }
    let quad = transient_quadrature_from(p, config);
    let values = t_grid
        .par_iter()
        .map(|&t| {
            let stationary = stationary_amplitude(t, d, p);
            match mode {
                TrajectoryMode::Stationary => Ok(stationary),
                TrajectoryMode::Full => Ok(stationary + transient_amplitude_with(t, d, p, &quad)?),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Trajectory {
        times: t_grid.to_vec(),
        values,
        mode,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseGeometry {
    pub radius_x: f64,
    pub radius_y: f64,
    pub long: f64,
    pub short: f64,
}

impl EllipseGeometry {
    pub fn aspect(&self) -> f64 {
        if self.long == 0.0 {
            1.0
        } else {
            self.short / self.long
        }
    }
}

pub fn ellipse(d: &Drive, p: &ModelParams) -> EllipseGeometry {
    let common = (8.0 * PI).sqrt() * d.e_d_abs * model::coupling(d.k_d, p) / model::denominator(d.k_d, p).norm();
    let radius_x = common * p.omega_b();
    let radius_y = common * d.k_d;
    EllipseGeometry {
        radius_x,
        radius_y,
        long: radius_x.max(radius_y),
        short: radius_x.min(radius_y),
    }
}
