//! Second moments and quadrature fluctuations of the cavity mode.
//!
//! The drive only displaces the eigenmodes, so the connected moments are
//! those of the dressed vacuum and do not depend on time.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::fano::FanoCoefficients;
use crate::model::{self, DressedPoles, ModelParams};
use crate::numerics::{Interval, Quadrature, QuadratureConfig};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moments {
    /// `<b^†, b> = int |beta2|^2`, the virtual photon number.
    pub n_virtual: f64,
    /// `<b, b> = -int beta1* beta2`.
    pub anomalous: C64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureFluct {
    pub dx: f64,
    pub dy: f64,
}

impl From<Moments> for QuadratureFluct {
    fn from(m: Moments) -> Self {
        let (n, a) = (m.n_virtual, m.anomalous.re);
        Self {
            dx: (1.0 + 2.0 * n + 2.0 * a).sqrt() / 2.0,
            dy: (1.0 + 2.0 * n - 2.0 * a).sqrt() / 2.0,
        }
    }
}

/// Residues at `lambda_j` of `N(q) / prod_i (q - lambda_i)`.
fn residues(poles: &DressedPoles, numerator: impl Fn(C64) -> C64) -> [C64; 3] {
    let lambda = poles.as_array();
    std::array::from_fn(|j| numerator(lambda[j]) / poles.cubic_derivative_at(j))
}

/// Residues of `f(q) = (q - omega_b)^2 (q - i omega_x) / prod_j (q - lambda_j)`.
pub fn residues_f(poles: &DressedPoles, p: &ModelParams) -> [C64; 3] {
    let (wb, iwx) = (p.omega_b(), C64::new(0.0, p.omega_x()));
    residues(poles, |q| (q - wb) * (q - wb) * (q - iwx))
}

/// Residues of `g(q) = (omega_b^2 - q^2) (q - i omega_x) / prod_j (q - lambda_j)`.
pub fn residues_g(poles: &DressedPoles, p: &ModelParams) -> [C64; 3] {
    let (wb, iwx) = (p.omega_b(), C64::new(0.0, p.omega_x()));
    residues(poles, |q| (wb * wb - q * q) * (q - iwx))
}

/// `-(1 / 2 pi omega_b) sum_j Im[r_j log(-lambda_j)]`
fn log_sum(poles: &DressedPoles, r: &[C64; 3], p: &ModelParams) -> Result<f64> {
    let mut sum = 0.0;
    for (lambda, r) in poles.as_array().iter().zip(r) {
        let w = -lambda;
        if !(w.im < 0.0 || w.re > 0.0) {
            return Err(Error::Domain(format!("log(-lambda) at {w} sits on the branch cut")));
        }
        sum += (r * w.ln()).im;
    }
    Ok(-sum / (2.0 * PI * p.omega_b()))
}

pub fn moments_closed_form(p: &ModelParams) -> Result<Moments> {
    if p.kappa() == 0.0 {
        return Ok(Moments {
            n_virtual: 0.0,
            anomalous: C64::new(0.0, 0.0),
        });
    }
    let poles = model::solve_cubic(p)?;
    let separation = poles.min_separation();
    if separation < 1e-8 * p.omega_b() {
        return Err(Error::IllConditioned(separation));
    }
    let n = log_sum(&poles, &residues_f(&poles, p), p)?;
    let a = log_sum(&poles, &residues_g(&poles, p), p)?;
    Ok(Moments {
        n_virtual: n,
        anomalous: C64::new(a, 0.0),
    })
}

fn moments_quadrature_rule(p: &ModelParams) -> Quadrature {
    let quad = Quadrature::new(QuadratureConfig::for_cutoff(p.omega_x()).with_rel_tol(1e-10));
    FanoCoefficients::new(*p).resonance_breakpoints(&quad)
}

/// Direct quadrature of `int |beta2|^2` and `-int beta1* beta2` over `(0, inf)`.
pub fn moments_quadrature(p: &ModelParams) -> Result<Moments> {
    connected_moments(0.0, p)
}

/// Connected moments `<b^†(t), b(t)>` and `<b(t), b(t)>` from the eigenmode
/// expansion `b(t) = int dk [beta1*(k) d_k e^{-ikt} - beta2(k) d_k^† e^{ikt}]`
/// with the `d_k` displaced by the drive; the displacement drops out of
/// connected moments and the phases of each term cancel pairwise.
pub fn connected_moments(t: f64, p: &ModelParams) -> Result<Moments> {
    let fano = FanoCoefficients::new(*p);
    let quad = moments_quadrature_rule(p);
    let n = quad.integrate(
        |k| {
            let rot = C64::from_polar(1.0, k * t);
            C64::new((fano.beta2(k) * rot).norm_sqr(), 0.0)
        },
        Interval::HalfLine(0.0),
    )?;
    let a = quad.integrate(
        |k| {
            let forward = C64::from_polar(1.0, -k * t);
            -(fano.beta1(k).conj() * forward) * (fano.beta2(k) * forward.conj())
        },
        Interval::HalfLine(0.0),
    )?;
    Ok(Moments {
        n_virtual: n.value.re,
        anomalous: a.value,
    })
}

pub fn quadrature_fluctuations(p: &ModelParams) -> Result<QuadratureFluct> {
    Ok(moments_closed_form(p)?.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(kappa: f64) -> ModelParams {
        ModelParams::dimensionless(5.0, kappa).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn vacuum_without_coupling() {
        let f = quadrature_fluctuations(&params(0.0)).unwrap();
        assert_eq!((f.dx, f.dy), (0.5, 0.5));
    }

    #[test]
    fn residue_sums() {
        let p = params(0.11);
        let poles = model::solve_cubic(&p).unwrap();
        let c: C64 = residues_f(&poles, &p).iter().sum();
        let d: C64 = residues_g(&poles, &p).iter().sum();
        // q^2 coefficients: numerator minus monic cubic
        assert!((c + 2.0).norm() < 1e-12, "{c}");
        assert!(d.norm() < 1e-12, "{d}");
    }

    #[test]
    fn closed_form_matches_quadrature() {
        for kappa in [0.02, 0.1, 0.18] {
            let p = params(kappa);
            let c = moments_closed_form(&p).unwrap();
            let q = moments_quadrature(&p).unwrap();
            assert!(rel(c.n_virtual, q.n_virtual) < 1e-6, "kappa {kappa}: {c:?} {q:?}");
            assert!(rel(c.anomalous.re, q.anomalous.re) < 1e-6, "kappa {kappa}: {c:?} {q:?}");
            assert!(q.anomalous.im.abs() < 1e-12);
        }
    }

    #[test]
    fn near_bound_quadrature_converges() {
        let p = params(0.19);
        let c = moments_closed_form(&p).unwrap();
        let q = moments_quadrature(&p).unwrap();
        assert!(rel(c.n_virtual, q.n_virtual) < 1e-6);
    }

    #[test]
    fn drive_free_and_time_independent() {
        let p = params(0.1);
        let c = moments_closed_form(&p).unwrap();
        for t in [0.0, 7.0, 31.0] {
            let m = connected_moments(t, &p).unwrap();
            assert!(rel(m.n_virtual, c.n_virtual) < 1e-6);
            assert!((m.anomalous - c.anomalous).norm() < 1e-6 * c.anomalous.norm());
        }
    }

    #[test]
    fn gaussian_state_bound() {
        for kappa in [0.01, 0.08, 0.15, 0.189] {
            let m = moments_closed_form(&params(kappa)).unwrap();
            assert!(m.n_virtual > 0.0);
            assert!(m.anomalous.norm() <= (m.n_virtual * (m.n_virtual + 1.0)).sqrt());
        }
    }

    #[test]
    fn squeezed_in_y_and_monotone() {
        let mut last: Option<QuadratureFluct> = None;
        for i in 1..=9 {
            let f = quadrature_fluctuations(&params(0.02 * i as f64)).unwrap();
            assert!(f.dy < 0.5 && f.dx > 0.5);
            assert!(f.dx * f.dy > 0.25);
            if let Some(prev) = last {
                assert!(f.dy < prev.dy && f.dx > prev.dx);
            }
            last = Some(f);
        }
    }
}
