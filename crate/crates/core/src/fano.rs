//! Fano eigenmode coefficients of the diagonalized Hamiltonian.
//!
//! The eigenmode operator is
//! `d_k = beta1(k) b + beta2(k) b^† + int dq [gamma1(k,q) c_q + gamma2(k,q) c_q^†]`,
//! with `gamma1(k, q) = delta(k - q) + regular part`. The delta part is never
//! discretized: [`FanoCoefficients::gamma1`] hands it out symbolically.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::model::{self, ModelParams};
use crate::numerics::{DeltaPlusRegular, Estimate, Interval, PoleSpec, Prescription, Quadrature, SpectralTerm};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FanoCoefficients {
    params: ModelParams,
}

impl FanoCoefficients {
    pub fn new(params: ModelParams) -> Self {
        Self { params }
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    fn xi(&self, k: f64) -> f64 {
        model::coupling(k, &self.params)
    }

    fn denominator(&self, k: f64) -> C64 {
        model::denominator(k, &self.params)
    }

    /// `(k + omega_b) xi_k / [k^2 - omega_b^2 z(k)]`
    pub fn beta1(&self, k: f64) -> C64 {
        (k + self.params.omega_b()) * self.xi(k) / self.denominator(k)
    }

    /// `(k - omega_b) xi_k / [k^2 - omega_b^2 z(k)]`; vanishes at the bare
    /// frequency.
    pub fn beta2(&self, k: f64) -> C64 {
        (k - self.params.omega_b()) * self.xi(k) / self.denominator(k)
    }

    pub fn gamma2(&self, k: f64, q: f64) -> C64 {
        2.0 * self.params.omega_b() * self.xi(k) * self.xi(q) / ((k + q) * self.denominator(k))
    }

    /// Regular part of `gamma1(k, q)` away from `q = k`.
    pub fn gamma1_regular(&self, k: f64, q: f64) -> Result<C64> {
        if k == q {
            return Err(Error::Domain(format!(
                "regular part of gamma1 evaluated on its pole k = q = {k} without a prescription"
            )));
        }
        Ok(self.gamma1_numerator(k, q) / (k - q))
    }

    /// `2 omega_b xi_k xi_q / [k^2 - omega_b^2 z(k)]`, the residue-free
    /// numerator shared by the regular parts of `gamma1` and `gamma2`.
    fn gamma1_numerator(&self, k: f64, q: f64) -> C64 {
        2.0 * self.params.omega_b() * self.xi(k) * self.xi(q) / self.denominator(k)
    }

    /// `gamma1(k, q)` as a function of `q`: a unit delta at `q = k` plus
    /// `numerator / (k - q - i0) = -numerator / (q - k + i0)`.
    pub fn gamma1(&self, k: f64) -> DeltaPlusRegular<'static> {
        let this = *self;
        DeltaPlusRegular {
            delta_weight: C64::new(1.0, 0.0),
            delta_location: k,
            regular: vec![SpectralTerm::new(
                move |q| -this.gamma1_numerator(k, q),
                0.0,
                Some(PoleSpec::new(k, Prescription::PlusI0)),
            )],
        }
    }

    /// Cavity self-energy `Sigma(k) = omega_b (z(k) - 1) / 2` from the closed
    /// Drude form.
    pub fn self_energy(&self, k: f64) -> C64 {
        let wb = self.params.omega_b();
        let z = model::z_of_k(C64::new(k, 0.0), &self.params).expect("real k is never i omega_x");
        wb * (z - 1.0) / 2.0
    }

    /// `y(k) = [(k^2 - omega_b^2) / (2 omega_b) - Sigma(k)] / xi_k^2`.
    pub fn y(&self, k: f64) -> C64 {
        self.y_with(k, self.self_energy(k))
    }

    fn y_with(&self, k: f64, sigma: C64) -> C64 {
        let wb = self.params.omega_b();
        ((k * k - wb * wb) / (2.0 * wb) - sigma) / model::coupling_squared(k, &self.params)
    }

    /// `2 omega_b xi_k |beta1(k)| |y(k)| / (k + omega_b)`, which the
    /// eigenmode normalization fixes to one.
    pub fn normalization(&self, k: f64) -> f64 {
        self.normalization_with(k, self.self_energy(k))
    }

    fn normalization_with(&self, k: f64, sigma: C64) -> f64 {
        let wb = self.params.omega_b();
        2.0 * wb * self.xi(k) * self.beta1(k).norm() * self.y_with(k, sigma).norm() / (k + wb)
    }

    /// Self-energy by principal-value quadrature of
    /// `int_{-inf}^{inf} xi_q^2 / (k - q - i0) dq`, used to cross-check the
    /// closed form.
    pub fn self_energy_quadrature(&self, k: f64, quad: &Quadrature) -> Result<C64> {
        let p = self.params;
        // 1/(k - q - i0) = -1/(q - k + i0)
        let e = quad.pv_pole_integral(
            |q| C64::new(-model::coupling_squared(q, &p), 0.0),
            Interval::WholeLine,
            PoleSpec::new(k, Prescription::PlusI0),
        )?;
        Ok(e.value)
    }

    /// `int_0^inf xi_q [gamma1(k,q) - gamma2(k,q)] dq`, with the delta part of
    /// `gamma1` taken analytically. Both sides of the first two eigen-relations
    /// equal this.
    pub fn coupling_projection(&self, k: f64, quad: &Quadrature) -> Result<Estimate> {
        let this = *self;
        let gamma1 = self.gamma1(k);
        let delta = gamma1.delta_weight * self.xi(k);
        let term = &gamma1.regular[0];
        let regular = quad.pv_pole_integral(
            |q| this.xi(q) * (term.envelope)(q),
            Interval::HalfLine(0.0),
            term.pole.expect("gamma1 carries a pole"),
        )?;
        let counter = quad.integrate(|q| this.xi(q) * this.gamma2(k, q), Interval::HalfLine(0.0))?;
        Ok(Estimate {
            value: delta + regular.value - counter.value,
            error: regular.error + counter.error,
        })
    }

    /// `(k - omega_b) beta1(k) - int xi_q [gamma1 - gamma2] dq`.
    pub fn relation_a1_residual(&self, k: f64, quad: &Quadrature) -> Result<C64> {
        Ok((k - self.params.omega_b()) * self.beta1(k) - self.coupling_projection(k, quad)?.value)
    }

    /// `(k + omega_b) beta2(k) - int xi_q [gamma1 - gamma2] dq`.
    pub fn relation_a2_residual(&self, k: f64, quad: &Quadrature) -> Result<C64> {
        Ok((k + self.params.omega_b()) * self.beta2(k) - self.coupling_projection(k, quad)?.value)
    }

    /// `(k - q) gamma1(k,q) - xi_q [beta1(k) - beta2(k)]` for `q != k`.
    pub fn relation_a3_residual(&self, k: f64, q: f64) -> Result<C64> {
        Ok((k - q) * self.gamma1_regular(k, q)? - self.xi(q) * (self.beta1(k) - self.beta2(k)))
    }

    /// `(k + q) gamma2(k,q) - xi_q [beta1(k) - beta2(k)]`.
    pub fn relation_a4_residual(&self, k: f64, q: f64) -> C64 {
        (k + q) * self.gamma2(k, q) - self.xi(q) * (self.beta1(k) - self.beta2(k))
    }

    /// `(k - omega_b) beta1(k) - 2 int_0^inf q xi_q gamma1(k,q) / (k + q) dq`.
    pub fn relation_a5_residual(&self, k: f64, quad: &Quadrature) -> Result<C64> {
        let this = *self;
        let gamma1 = self.gamma1(k);
        // the delta contributes 2 k xi_k / (2k)
        let delta = gamma1.delta_weight * self.xi(k);
        let term = &gamma1.regular[0];
        let regular = quad.pv_pole_integral(
            |q| 2.0 * q * this.xi(q) * (term.envelope)(q) / (k + q),
            Interval::HalfLine(0.0),
            term.pole.expect("gamma1 carries a pole"),
        )?;
        Ok((k - self.params.omega_b()) * self.beta1(k) - delta - regular.value)
    }

    /// `int_0^inf [|beta1|^2 - |beta2|^2] dq`, equal to `[b, b^†] = 1`.
    pub fn commutator_sum(&self, quad: &Quadrature) -> Result<Estimate> {
        let this = *self;
        let quad = self.resonance_breakpoints(quad);
        quad.integrate(
            |q| C64::new(this.beta1(q).norm_sqr() - this.beta2(q).norm_sqr(), 0.0),
            Interval::HalfLine(0.0),
        )
    }

    /// Adds breakpoints around the dressed resonance so narrow lines are
    /// resolved from the first panel split on.
    pub fn resonance_breakpoints(&self, quad: &Quadrature) -> Quadrature {
        quad.clone().with_breakpoints(&model::resonance_points(&self.params, false))
    }
}

/// Spectral weight of the bare cavity in eigenmode `k`: a Lorentzian-like
/// line at the dressed resonance for weak coupling.
pub fn cavity_weight(k: f64, p: &ModelParams) -> f64 {
    FanoCoefficients::new(*p).beta1(k).norm_sqr()
}

/// `2 pi xi_k^2 / omega_b`, the imaginary part of `z(k)` on the real axis.
pub fn golden_rule_width(k: f64, p: &ModelParams) -> f64 {
    2.0 * PI * model::coupling_squared(k, p) / p.omega_b()
}
