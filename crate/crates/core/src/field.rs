//! Waveguide side: the stationary wavenumber amplitude `<c_k(t)>`, its
//! real-space transform, and the reflection coefficient.
//!
//! Real-space fields use `c_r = (1/sqrt(2 pi)) int_0^inf e^{ikr} c_k dk`
//! without the mirror phase factors `±i`; `r < 0` is the input port and
//! `r > 0` the output port.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use rayon::prelude::*;

use crate::dynamics::Drive;
use crate::error::{Error, Result};
use crate::model::{self, ModelParams};
use crate::numerics::{DeltaPlusRegular, PoleSpec, Prescription, Quadrature, QuadratureConfig, SpectralTerm};

/// The three stationary pieces of `<c_k(t)>` at one `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CkStationary {
    /// Weight of `delta(k - k_d)`: the drive itself.
    pub delta_weight: C64,
    pub delta_location: f64,
    /// Cavity emission; finite at `k = k_d`, where the removable limit is
    /// returned.
    pub component2: C64,
    /// Counter-rotating contribution; smooth for `k > 0`.
    pub component3: C64,
}

impl CkStationary {
    pub fn regular(&self) -> C64 {
        self.component2 + self.component3
    }
}

fn prefactor(d: &Drive, p: &ModelParams) -> f64 {
    (8.0 * PI).sqrt() * p.omega_b() * model::coupling(d.k_d(), p)
}

pub fn ck_stationary(k: f64, t: f64, d: &Drive, p: &ModelParams) -> Result<CkStationary> {
    if !(k > 0.0) {
        return Err(Error::Domain(format!("waveguide wavenumber must be > 0, got {k}")));
    }
    let kd = d.k_d();
    let e = d.amplitude();
    let a = prefactor(d, p) * e;
    let b = prefactor(d, p) * e.conj();
    let xi = model::coupling(k, p);
    let f = |q: f64| C64::from_polar(1.0, -q * t) / model::denominator_conj(q, p);

    let delta_k = k - kd;
    let component2 = if delta_k.abs() <= 1e-9 * kd.max(1.0) {
        let dc = model::denominator_conj(kd, p);
        let derivative = C64::from_polar(1.0, -kd * t)
            * (C64::new(0.0, -t) / dc - model::denominator_conj_derivative(kd, p) / (dc * dc));
        a * xi * derivative
    } else {
        a * xi * (f(k) - f(kd)) / delta_k
    };
    let component3 = b * xi / (k + kd)
        * (f(k) - C64::from_polar(1.0, kd * t) / model::denominator(kd, p));
    Ok(CkStationary {
        delta_weight: (2.0 * PI).sqrt() * e * C64::from_polar(1.0, -kd * t),
        delta_location: kd,
        component2,
        component3,
    })
}

/// Which pieces of the stationary spectrum to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Components {
    All,
    /// Drive plus cavity emission, without the counter-rotating piece.
    Propagating,
}

/// The stationary spectrum at time `t`, split into pole terms for the
/// half-line transform. The emission term is divided into its two halves,
/// each carrying its own `k_d + i0` pole; their delta parts cancel.
pub fn stationary_spectrum(t: f64, d: &Drive, p: &ModelParams, which: Components) -> DeltaPlusRegular<'static> {
    let (p, kd) = (*p, d.k_d());
    let e = d.amplitude();
    let a = prefactor(d, &p) * e;
    let b = prefactor(d, &p) * e.conj();
    let pole = Some(PoleSpec::new(kd, Prescription::MinusI0));
    let emitted_at_kd = C64::from_polar(1.0, -kd * t) / model::denominator_conj(kd, &p);
    let mut regular = vec![
        SpectralTerm::new(move |k| a * model::coupling(k, &p) / model::denominator_conj(k, &p), t, pole),
        SpectralTerm::new(move |k| -a * model::coupling(k, &p) * emitted_at_kd, 0.0, pole),
    ];
    if which == Components::All {
        let counter_at_kd = C64::from_polar(1.0, kd * t) / model::denominator(kd, &p);
        regular.push(SpectralTerm::new(
            move |k| b * model::coupling(k, &p) / ((k + kd) * model::denominator_conj(k, &p)),
            t,
            None,
        ));
        regular.push(SpectralTerm::new(
            move |k| -b * model::coupling(k, &p) * counter_at_kd / (k + kd),
            0.0,
            None,
        ));
    }
    DeltaPlusRegular {
        delta_weight: (2.0 * PI).sqrt() * e * C64::from_polar(1.0, -kd * t),
        delta_location: kd,
        regular,
    }
}

/// `R = 1 - 4 pi i omega_b xi_kd^2 / [k_d^2 - omega_b^2 z*(k_d)]`
pub fn reflection(k_d: f64, p: &ModelParams) -> C64 {
    let xi2 = model::coupling_squared(k_d, p);
    if xi2 == 0.0 {
        return C64::new(1.0, 0.0);
    }
    C64::new(1.0, 0.0) - C64::new(0.0, 4.0 * PI * p.omega_b() * xi2) / model::denominator_conj(k_d, p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldMethod {
    /// Numerical transform of the full stationary spectrum.
    Rigorous,
    /// Step-function form: the input wave everywhere, times `R` in the
    /// region `0 < r < t` already reached by the cavity emission.
    Approximate,
}

fn field_quadrature(d: &Drive, p: &ModelParams) -> Quadrature {
    field_quadrature_from(d, p, QuadratureConfig::for_cutoff(p.omega_x()))
}

fn field_quadrature_from(d: &Drive, p: &ModelParams, config: QuadratureConfig) -> Quadrature {
    let mut points = model::resonance_points(p, false);
    points.push(d.k_d());
    Quadrature::new(config).with_breakpoints(&points)
}

fn step(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        0.0
    } else {
        0.5
    }
}

/// Unnormalized `<c_r(t)>` from the stationary spectrum.
pub fn realspace_amplitude(r: f64, t: f64, d: &Drive, p: &ModelParams, which: Components) -> Result<C64> {
    realspace_amplitude_with(r, t, d, p, which, &field_quadrature(d, p))
}

fn realspace_amplitude_with(
    r: f64,
    t: f64,
    d: &Drive,
    p: &ModelParams,
    which: Components,
    quad: &Quadrature,
) -> Result<C64> {
    Ok(quad.halfline_fourier(&stationary_spectrum(t, d, p, which), r)?.value)
}

/// `<c_r(t)> / E(r, t)` with `E(r, t) = E_d e^{i k_d (r - t)}`.
pub fn realspace_field(r: f64, t: f64, d: &Drive, p: &ModelParams, method: FieldMethod) -> Result<C64> {
    realspace_field_with(r, t, d, p, method, &field_quadrature(d, p))
}

fn realspace_field_with(
    r: f64,
    t: f64,
    d: &Drive,
    p: &ModelParams,
    method: FieldMethod,
    quad: &Quadrature,
) -> Result<C64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("field profile needs t > 0, got {t}")));
    }
    match method {
        FieldMethod::Approximate => {
            let r_coeff = reflection(d.k_d(), p);
            Ok(1.0 + (r_coeff - 1.0) * step(r) * step(t - r))
        }
        FieldMethod::Rigorous => {
            if d.e_d_abs() == 0.0 {
                return Err(Error::InvalidParameter("normalized field needs a nonzero drive".into()));
            }
            let input = d.amplitude() * C64::from_polar(1.0, d.k_d() * (r - t));
            Ok(realspace_amplitude_with(r, t, d, p, Components::All, quad)? / input)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldProfile {
    pub positions: Vec<f64>,
    pub normalized: Vec<C64>,
    pub t: f64,
    pub method: FieldMethod,
}

pub fn field_profile(positions: &[f64], t: f64, d: &Drive, p: &ModelParams, method: FieldMethod) -> Result<FieldProfile> {
    field_profile_with(positions, t, d, p, method, QuadratureConfig::for_cutoff(p.omega_x()))
}

pub fn field_profile_with(
    positions: &[f64],
    t: f64,
    d: &Drive,
    p: &ModelParams,
    method: FieldMethod,
    config: QuadratureConfig,
) -> Result<FieldProfile> {
    let quad = field_quadrature_from(d, p, config);
    let normalized = positions
        .par_iter()
        .map(|&r| realspace_field_with(r, t, d, p, method, &quad))
        .collect::<Result<Vec<_>>>()?;
    Ok(FieldProfile {
        positions: positions.to_vec(),
        normalized,
        t,
        method,
    })
}

/// Projections of `<c_r(t)>` over one drive period starting at `t0` onto
/// `e^{-i k_d t}` (co-rotating) and `e^{+i k_d t}` (counter-rotating).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationContent {
    pub co: C64,
    pub counter: C64,
}

impl RotationContent {
    pub fn counter_fraction(&self) -> f64 {
        self.counter.norm() / self.co.norm()
    }
}

pub fn output_rotation(r: f64, t0: f64, d: &Drive, p: &ModelParams, samples: usize) -> Result<RotationContent> {
    if samples < 4 {
        return Err(Error::InvalidParameter("need at least 4 samples per period".into()));
    }
    let quad = field_quadrature(d, p);
    let period = 2.0 * PI / d.k_d();
    let values = (0..samples)
        .into_par_iter()
        .map(|j| {
            let t = t0 + period * j as f64 / samples as f64;
            Ok((t, realspace_amplitude_with(r, t, d, p, Components::All, &quad)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let n = samples as f64;
    let mut content = RotationContent {
        co: C64::new(0.0, 0.0),
        counter: C64::new(0.0, 0.0),
    };
    for (t, c) in values {
        content.co += c * C64::from_polar(1.0, d.k_d() * t) / n;
        content.counter += c * C64::from_polar(1.0, -d.k_d() * t) / n;
    }
    Ok(content)
}

/// `arg R` along an ascending grid, unwrapped onto the branch nearest the
/// previous sample.
pub fn phase_spectrum(k_grid: &[f64], p: &ModelParams) -> Result<Vec<f64>> {
    if k_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidParameter("frequency grid must be strictly ascending".into()));
    }
    if k_grid.first().is_some_and(|&k| !(k > 0.0)) {
        return Err(Error::InvalidParameter("frequencies must be > 0".into()));
    }
    Ok(unwrap(k_grid.iter().map(|&k| reflection(k, p).arg())))
}

fn unwrap(phases: impl Iterator<Item = f64>) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for raw in phases {
        let value = match out.last() {
            Some(&prev) => raw + 2.0 * PI * ((prev - raw) / (2.0 * PI)).round(),
            None => raw,
        };
        out.push(value);
    }
    out
}

/// `max_delta |arg R(w + delta) + arg R(w - delta) - 2 arg R(w)|` about the
/// pi-shift frequency `w`, for `delta` up to `3 kappa_tilde` (clipped to keep
/// `w - delta > 0`). Zero for a spectrum antisymmetric about `w`.
pub fn phase_asymmetry(p: &ModelParams, samples: usize) -> Result<f64> {
    let centre = model::renormalized_frequency_closed_form(p)?;
    let kappa_tilde = model::renormalize(p)?.kappa_tilde;
    let reach = (3.0 * kappa_tilde).min(0.99 * centre);
    let n = samples.max(2);
    let grid: Vec<f64> = (-(n as i64)..=n as i64)
        .map(|i| centre + reach * i as f64 / n as f64)
        .collect();
    let phase = phase_spectrum(&grid, p)?;
    let mid = phase[n];
    Ok((1..=n)
        .map(|i| (phase[n + i] + phase[n - i] - 2.0 * mid).abs())
        .fold(0.0, f64::max))
}

/// Even/odd decomposition of a mirror-terminated response into an open
/// waveguide with the cavity side-coupled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringPoint {
    pub k_d: f64,
    pub r: C64,
    pub r_prime: C64,
    pub t_prime: C64,
}

impl ScatteringPoint {
    pub fn transmissivity(&self) -> f64 {
        self.t_prime.norm_sqr()
    }
}

pub fn open_waveguide(k_d: f64, p: &ModelParams) -> ScatteringPoint {
    let r = reflection(k_d, p);
    ScatteringPoint {
        k_d,
        r,
        r_prime: (r - 1.0) / 2.0,
        t_prime: (r + 1.0) / 2.0,
    }
}
