//! Cavity-waveguide model parameters, the Drude coupling spectrum and the
//! dressed poles of the cavity propagator.
//!
//! The coupling is `xi_k^2 = C k / (k^2 + omega_x^2)` with the constant `C`
//! fixed so that the golden-rule decay rate at the bare frequency equals
//! `kappa`. All closed forms below are specific to this family.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Relative width of the band around the imaginary axis in which a root is
/// considered purely imaginary.
const IMAGINARY_AXIS_BAND: f64 = 1e-12;

/// The triple `(omega_b, omega_x, kappa)` fixing the whole model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    omega_b: f64,
    omega_x: f64,
    kappa: f64,
}

impl ModelParams {
    /// Validates positivity and rejects couplings at or above the strict
    /// bound from [`coupling_bound`]. When `omega_x^2 < 3 omega_b^2` the
    /// strict bound does not exist and the admissibility bound is used.
    pub fn new(omega_b: f64, omega_x: f64, kappa: f64) -> Result<Self> {
        if !(omega_b.is_finite() && omega_b > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "omega_b must be positive and finite, got {omega_b}"
            )));
        }
        if !(omega_x.is_finite() && omega_x > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "omega_x must be positive and finite, got {omega_x}"
            )));
        }
        if !(kappa.is_finite() && kappa >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "kappa must be non-negative and finite, got {kappa}"
            )));
        }
        let bound = admissible_ratio(omega_b, omega_x);
        let ratio = kappa / omega_b;
        if ratio >= bound {
            return Err(Error::OvercriticalCoupling { ratio, bound });
        }
        Ok(Self {
            omega_b,
            omega_x,
            kappa,
        })
    }

    /// Parameters in units of the bare cavity frequency (`omega_b = 1`).
    pub fn dimensionless(omega_x: f64, kappa: f64) -> Result<Self> {
        Self::new(1.0, omega_x, kappa)
    }

    pub fn omega_b(&self) -> f64 {
        self.omega_b
    }

    pub fn omega_x(&self) -> f64 {
        self.omega_x
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// `kappa / omega_b`, the dimensionless coupling strength.
    pub fn coupling_ratio(&self) -> f64 {
        self.kappa / self.omega_b
    }

    /// The Drude prefactor `C = kappa (omega_b^2 + omega_x^2) / (2 pi omega_b)`.
    pub fn coupling_constant(&self) -> f64 {
        let (wb, wx) = (self.omega_b, self.omega_x);
        self.kappa * (wb * wb + wx * wx) / (2.0 * PI * wb)
    }

    /// `int_0^inf xi_k^2 / k dk = pi C / (2 omega_x)`; must stay below
    /// `omega_b / 4` for the diagonalization to exist.
    pub fn admissibility_integral(&self) -> f64 {
        PI * self.coupling_constant() / (2.0 * self.omega_x)
    }

    /// Same parameters with a different coupling rate.
    pub fn with_kappa(&self, kappa: f64) -> Result<Self> {
        Self::new(self.omega_b, self.omega_x, kappa)
    }
}

fn admissible_ratio(omega_b: f64, omega_x: f64) -> f64 {
    match coupling_bound(omega_b, omega_x) {
        Ok(b) => b.strict,
        Err(_) => naive_bound(omega_b, omega_x),
    }
}

fn naive_bound(omega_b: f64, omega_x: f64) -> f64 {
    omega_b * omega_x / (omega_b * omega_b + omega_x * omega_x)
}

/// Squared coupling `xi_k^2`, extended to `k < 0` as an odd function.
pub fn coupling_squared(k: f64, p: &ModelParams) -> f64 {
    p.coupling_constant() * k / (k * k + p.omega_x * p.omega_x)
}

/// The (real, non-negative) coupling `xi_k` for `k >= 0`.
pub fn coupling(k: f64, p: &ModelParams) -> f64 {
    coupling_squared(k, p).max(0.0).sqrt()
}

/// Self-energy factor `z(k) = 1 + 2 pi i C / (omega_b (k - i omega_x))`,
/// analytic everywhere except at `k = i omega_x`.
pub fn z_of_k(k: C64, p: &ModelParams) -> Result<C64> {
    let shifted = k - C64::new(0.0, p.omega_x);
    if shifted.norm() <= f64::EPSILON * p.omega_x {
        return Err(Error::Domain(format!(
            "z(k) has a pole at k = i omega_x = {}i",
            p.omega_x
        )));
    }
    Ok(z_unchecked(k, p))
}

fn z_unchecked(k: C64, p: &ModelParams) -> C64 {
    let c = p.coupling_constant();
    C64::new(1.0, 0.0)
        + C64::new(0.0, 2.0 * PI * c) / (p.omega_b * (k - C64::new(0.0, p.omega_x)))
}

/// The propagator denominator `k^2 - omega_b^2 z(k)` at real `k`.
pub fn denominator(k: f64, p: &ModelParams) -> C64 {
    let k = C64::new(k, 0.0);
    k * k - p.omega_b * p.omega_b * z_unchecked(k, p)
}

/// `k^2 - omega_b^2 z*(k)`: the complex conjugate of [`denominator`] for
/// real `k`, continued analytically (zeros at the conjugated dressed poles).
pub fn denominator_conj(k: f64, p: &ModelParams) -> C64 {
    denominator(k, p).conj()
}

/// `d/dk [k^2 - omega_b^2 z*(k)]` at real `k`.
pub fn denominator_conj_derivative(k: f64, p: &ModelParams) -> C64 {
    let c = p.coupling_constant();
    let shifted = C64::new(k, p.omega_x);
    C64::new(2.0 * k, 0.0) - C64::new(0.0, 2.0 * PI * c * p.omega_b) / (shifted * shifted)
}

/// Coefficients `[a0, a1, a2]` of the monic cubic
/// `k^3 + a2 k^2 + a1 k + a0` whose roots are the dressed poles.
pub fn cubic_coefficients(p: &ModelParams) -> [C64; 3] {
    let (wb, wx) = (p.omega_b, p.omega_x);
    let c = p.coupling_constant();
    [
        C64::new(0.0, wx * wb * wb - 2.0 * PI * c * wb),
        C64::new(-wb * wb, 0.0),
        C64::new(0.0, -wx),
    ]
}

/// Evaluates the dressed-pole cubic at `k`.
pub fn cubic_polynomial(k: C64, p: &ModelParams) -> C64 {
    let [a0, a1, a2] = cubic_coefficients(p);
    ((k + a2) * k + a1) * k + a0
}

/// Roots of the monic cubic `k^3 + a2 k^2 + a1 k + a0` by Cardano's formula
/// over the complex numbers, each followed by one Newton step.
pub fn cubic_roots(a2: C64, a1: C64, a0: C64) -> [C64; 3] {
    let shift = a2 / 3.0;
    let p = a1 - a2 * a2 / 3.0;
    let q = a2 * a2 * a2 * (2.0 / 27.0) - a2 * a1 / 3.0 + a0;

    let sq = (q * q / 4.0 + p * p * p / 27.0).sqrt();
    let (w_plus, w_minus) = (-q / 2.0 + sq, -q / 2.0 - sq);
    let w = if w_plus.norm() >= w_minus.norm() {
        w_plus
    } else {
        w_minus
    };

    let depressed = if w.norm() == 0.0 {
        [C64::new(0.0, 0.0); 3]
    } else {
        let u = w.powf(1.0 / 3.0);
        let v = -p / (3.0 * u);
        let omega = C64::new(-0.5, 3f64.sqrt() / 2.0);
        let omega2 = omega.conj();
        [u + v, omega * u + omega2 * v, omega2 * u + omega * v]
    };

    depressed.map(|y| {
        let k = y - shift;
        let value = ((k + a2) * k + a1) * k + a0;
        let slope = (3.0 * k + 2.0 * a2) * k + a1;
        if slope.norm() == 0.0 {
            return k;
        }
        let polished = k - value / slope;
        let polished_value = ((polished + a2) * polished + a1) * polished + a0;
        if polished_value.norm() <= value.norm() {
            polished
        } else {
            k
        }
    })
}

/// The three roots of the dressed-pole cubic, labelled by quadrant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DressedPoles {
    /// First quadrant: `omega_b_tilde + i kappa_tilde / 2`.
    pub lambda1: C64,
    /// Second quadrant, `-conj(lambda1)`.
    pub lambda2: C64,
    /// Positive imaginary axis, near `i omega_x` for weak coupling.
    pub lambda3: C64,
}

impl DressedPoles {
    pub fn as_array(&self) -> [C64; 3] {
        [self.lambda1, self.lambda2, self.lambda3]
    }

    /// `prod_{i != j} (lambda_j - lambda_i)`, the derivative of the monic
    /// cubic at root `j`.
    pub fn cubic_derivative_at(&self, j: usize) -> C64 {
        let roots = self.as_array();
        (0..3)
            .filter(|&i| i != j)
            .map(|i| roots[j] - roots[i])
            .product()
    }

    /// Smallest pairwise distance between the poles.
    pub fn min_separation(&self) -> f64 {
        let r = self.as_array();
        (r[0] - r[1])
            .norm()
            .min((r[0] - r[2]).norm())
            .min((r[1] - r[2]).norm())
    }
}

/// Solves the dressed-pole cubic and labels the roots by quadrant.
///
/// Near the strict coupling bound `lambda1` and `lambda2` approach the
/// imaginary axis, where the quadrant test is ill-conditioned; there the
/// labels are carried over by continuation in `kappa` from the uncoupled
/// roots `(omega_b, -omega_b, i omega_x)`.
pub fn solve_cubic(p: &ModelParams) -> Result<DressedPoles> {
    let [a0, a1, a2] = cubic_coefficients(p);
    let roots = cubic_roots(a2, a1, a0);
    let band = IMAGINARY_AXIS_BAND * p.omega_x;

    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| roots[i].re.abs().total_cmp(&roots[j].re.abs()));
    let on_axis = roots[order[0]];
    let nearest_off_axis = roots[order[1]].re.abs();

    let poles = if nearest_off_axis > 1e3 * band && on_axis.re.abs() <= band {
        let (a, b) = (roots[order[1]], roots[order[2]]);
        let (lambda1, lambda2) = if a.re > 0.0 { (a, b) } else { (b, a) };
        DressedPoles {
            lambda1,
            lambda2,
            lambda3: on_axis,
        }
    } else {
        track_from_uncoupled(p)
    };

    validate_quadrants(&poles, band, p)?;
    Ok(poles)
}

/// Labels the roots at `p.kappa` by following each uncoupled root along a
/// ramp of the coupling.
fn track_from_uncoupled(p: &ModelParams) -> DressedPoles {
    const STEPS: usize = 400;
    let mut tracked = [
        C64::new(p.omega_b, 0.0),
        C64::new(-p.omega_b, 0.0),
        C64::new(0.0, p.omega_x),
    ];
    for step in 1..=STEPS {
        let kappa = p.kappa * step as f64 / STEPS as f64;
        let ramp = ModelParams {
            kappa,
            ..*p
        };
        let [a0, a1, a2] = cubic_coefficients(&ramp);
        let fresh = cubic_roots(a2, a1, a0);
        tracked = best_assignment(&tracked, &fresh);
    }
    DressedPoles {
        lambda1: tracked[0],
        lambda2: tracked[1],
        lambda3: tracked[2],
    }
}

fn best_assignment(previous: &[C64; 3], fresh: &[C64; 3]) -> [C64; 3] {
    const PERMUTATIONS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let cost = |perm: &[usize; 3]| -> f64 {
        (0..3).map(|i| (previous[i] - fresh[perm[i]]).norm_sqr()).sum()
    };
    let best = PERMUTATIONS
        .iter()
        .min_by(|a, b| cost(a).total_cmp(&cost(b)))
        .expect("non-empty permutation table");
    [fresh[best[0]], fresh[best[1]], fresh[best[2]]]
}

fn validate_quadrants(poles: &DressedPoles, band: f64, p: &ModelParams) -> Result<()> {
    let DressedPoles {
        lambda1,
        lambda2,
        lambda3,
    } = *poles;
    let ok = lambda1.re > band
        && lambda1.im > 0.0
        && lambda2.re < -band
        && lambda2.im > 0.0
        && lambda3.re.abs() <= band
        && lambda3.im > 0.0;
    if ok {
        Ok(())
    } else {
        Err(Error::OvercriticalCoupling {
            ratio: p.coupling_ratio(),
            bound: admissible_ratio(p.omega_b, p.omega_x),
        })
    }
}

/// Renormalized (Lamb-shifted) frequency and actual decay rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Renormalization {
    pub omega_b_tilde: f64,
    pub kappa_tilde: f64,
}

impl Renormalization {
    /// `kappa_tilde / omega_b_tilde`; exceeds 0.1 in the ultrastrong regime.
    pub fn ratio(&self) -> f64 {
        self.kappa_tilde / self.omega_b_tilde
    }
}

/// `omega_b_tilde = Re(lambda1)`, `kappa_tilde = 2 Im(lambda1)`.
pub fn renormalize(p: &ModelParams) -> Result<Renormalization> {
    let poles = solve_cubic(p)?;
    Ok(Renormalization {
        omega_b_tilde: poles.lambda1.re,
        kappa_tilde: 2.0 * poles.lambda1.im,
    })
}

/// The drive frequency at which the reflection phase is exactly `pi`.
pub fn renormalized_frequency_closed_form(p: &ModelParams) -> Result<f64> {
    let (wb2, wx2) = (p.omega_b * p.omega_b, p.omega_x * p.omega_x);
    let radicand = (wb2 + wx2) * (wb2 + wx2 - 4.0 * p.kappa * p.omega_x);
    if radicand < 0.0 {
        return Err(Error::OvercriticalCoupling {
            ratio: p.coupling_ratio(),
            bound: admissible_ratio(p.omega_b, p.omega_x),
        });
    }
    let squared = 0.5 * (wb2 - wx2 + radicand.sqrt());
    if squared <= 0.0 {
        return Err(Error::OvercriticalCoupling {
            ratio: p.coupling_ratio(),
            bound: admissible_ratio(p.omega_b, p.omega_x),
        });
    }
    Ok(squared.sqrt())
}

/// Points around the dressed line `Re(lambda1)` (and its mirror image when
/// `mirrored`), spaced in units of the half-width, for seeding quadrature
/// panels.
pub(crate) fn resonance_points(p: &ModelParams, mirrored: bool) -> Vec<f64> {
    let Ok(poles) = solve_cubic(p) else {
        return Vec::new();
    };
    let (centre, width) = (poles.lambda1.re, poles.lambda1.im.max(1e-12));
    let mut points: Vec<f64> = [-8.0, -2.0, -0.5, 0.0, 0.5, 2.0, 8.0]
        .iter()
        .map(|s| centre + s * width)
        .filter(|&x| x > 0.0)
        .collect();
    if mirrored {
        let mirror: Vec<f64> = points.iter().map(|x| -x).collect();
        points.extend(mirror);
    }
    points
}

/// Upper bounds on `kappa / omega_b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingBound {
    /// From the admissibility integral: `omega_b omega_x / (omega_b^2 + omega_x^2)`.
    pub naive: f64,
    /// From requiring `Re(lambda1) > 0`.
    pub strict: f64,
}

/// Writing `k = i w`, the cubic becomes `f(w) = omega_x omega_b^2 -
/// kappa (omega_b^2 + omega_x^2)` with `f(w) = w^3 - omega_x w^2 + omega_b^2 w`.
/// `lambda1,2` leave the imaginary axis while the right side stays above the
/// local maximum `f(mu_-)`.
pub fn coupling_bound(omega_b: f64, omega_x: f64) -> Result<CouplingBound> {
    let disc = omega_x * omega_x - 3.0 * omega_b * omega_b;
    if disc < 0.0 {
        return Err(Error::NoRealStationaryPoint { omega_b, omega_x });
    }
    let mu = (omega_x - disc.sqrt()) / 3.0;
    let f_mu = mu * mu * mu - omega_x * mu * mu + omega_b * omega_b * mu;
    let wb2_plus_wx2 = omega_b * omega_b + omega_x * omega_x;
    Ok(CouplingBound {
        naive: naive_bound(omega_b, omega_x),
        strict: (omega_b * omega_b * omega_x - f_mu) / (omega_b * wb2_plus_wx2),
    })
}

/// Couplings `kappa / omega_b` at which `kappa_tilde / omega_b_tilde` crosses
/// 0.1 (ultrastrong) and 1 (deep-strong).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeThresholds {
    pub ultrastrong: f64,
    pub deepstrong: f64,
}

pub fn coupling_regime_thresholds(omega_b: f64, omega_x: f64) -> Result<RegimeThresholds> {
    let upper = admissible_ratio(omega_b, omega_x) * (1.0 - 1e-9);
    let crossing = |target: f64| -> Result<f64> {
        let ratio_at = |x: f64| -> Result<f64> {
            Ok(renormalize(&ModelParams::new(omega_b, omega_x, x * omega_b)?)?.ratio())
        };
        let (mut lo, mut hi) = (0.0, upper);
        if ratio_at(hi)? < target {
            return Err(Error::Domain(format!(
                "kappa_tilde / omega_b_tilde never reaches {target} below the coupling bound"
            )));
        }
        while hi - lo > 1e-12 {
            let mid = 0.5 * (lo + hi);
            if ratio_at(mid)? < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    };
    Ok(RegimeThresholds {
        ultrastrong: crossing(0.1)?,
        deepstrong: crossing(1.0)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn params(kappa: f64) -> ModelParams {
        ModelParams::dimensionless(5.0, kappa).unwrap()
    }

    #[test]
    fn golden_rule_normalization() {
        for kappa in [0.01, 0.1, 0.18] {
            let p = params(kappa);
            assert_relative_eq!(
                2.0 * PI * coupling_squared(1.0, &p),
                kappa,
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn coupling_is_odd() {
        let p = params(0.1);
        assert_eq!(coupling_squared(0.0, &p), 0.0);
        assert_relative_eq!(coupling_squared(-1.0, &p), -0.1 / (2.0 * PI), max_relative = 1e-14);
        for k in [0.3, 1.7, 12.0] {
            assert_eq!(coupling_squared(-k, &p), -coupling_squared(k, &p));
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(matches!(
            ModelParams::new(0.0, 5.0, 0.1),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            ModelParams::new(1.0, -5.0, 0.1),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            ModelParams::new(1.0, 5.0, -0.1),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            ModelParams::new(1.0, 5.0, f64::NAN),
            Err(Error::InvalidParameter(_))
        ));
        // between the strict and the naive bound
        assert!(matches!(
            ModelParams::dimensionless(5.0, 0.191),
            Err(Error::OvercriticalCoupling { .. })
        ));
    }

    #[test]
    fn z_is_unity_without_coupling() {
        let p = params(0.0);
        for k in [C64::new(0.3, 0.0), C64::new(2.0, -1.0), C64::new(-4.0, 0.2)] {
            assert_eq!(z_of_k(k, &p).unwrap(), C64::new(1.0, 0.0));
        }
    }

    #[test]
    fn z_has_pole_at_cutoff() {
        let p = params(0.1);
        assert!(matches!(
            z_of_k(C64::new(0.0, 5.0), &p),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn imaginary_part_of_z_is_golden_rule() {
        let p = params(0.12);
        for k in [0.2, 1.0, 3.5, 40.0] {
            let z = z_of_k(C64::new(k, 0.0), &p).unwrap();
            assert_relative_eq!(z.im, 2.0 * PI * coupling_squared(k, &p), max_relative = 1e-13);
        }
    }

    #[test]
    fn denominator_at_bare_resonance() {
        let p = params(0.07);
        let c = p.coupling_constant();
        let expected = C64::new(0.0, -2.0 * PI * c) / C64::new(1.0, -5.0);
        let got = denominator(1.0, &p);
        assert_relative_eq!(got.re, expected.re, max_relative = 1e-13);
        assert_relative_eq!(got.im, expected.im, max_relative = 1e-13);
    }

    #[test]
    fn conj_derivative_matches_finite_difference() {
        let p = params(0.1);
        let h = 1e-6;
        for k in [0.4, 1.1, 3.0] {
            let fd = (denominator_conj(k + h, &p) - denominator_conj(k - h, &p)) / (2.0 * h);
            assert!((fd - denominator_conj_derivative(k, &p)).norm() < 1e-8);
        }
    }

    #[test]
    fn cardano_recovers_known_roots() {
        let expected = [C64::new(1.0, 2.0), C64::new(-3.0, 0.5), C64::new(0.0, -1.0)];
        let [r1, r2, r3] = expected;
        let a2 = -(r1 + r2 + r3);
        let a1 = r1 * r2 + r1 * r3 + r2 * r3;
        let a0 = -(r1 * r2 * r3);
        let roots = cubic_roots(a2, a1, a0);
        for e in expected {
            let nearest = roots.iter().map(|r| (r - e).norm()).fold(f64::INFINITY, f64::min);
            assert!(nearest < 1e-13, "missing root {e}");
        }
    }

    #[test]
    fn cardano_handles_triple_root() {
        let roots = cubic_roots(C64::new(-3.0, 0.0), C64::new(3.0, 0.0), C64::new(-1.0, 0.0));
        for r in roots {
            assert!((r - 1.0).norm() < 1e-5);
        }
    }

    #[test]
    fn uncoupled_poles() {
        let poles = solve_cubic(&params(0.0)).unwrap();
        assert_relative_eq!(poles.lambda1.re, 1.0, max_relative = 1e-14);
        assert_relative_eq!(poles.lambda2.re, -1.0, max_relative = 1e-14);
        assert_relative_eq!(poles.lambda3.im, 5.0, max_relative = 1e-14);
        assert!(poles.lambda1.im.abs() < 1e-14);
        assert!(poles.lambda3.re.abs() < 1e-14);
    }

    #[test]
    fn first_order_perturbative_slope() {
        let kappa = 1e-4;
        let poles = solve_cubic(&params(kappa)).unwrap();
        // lambda1 ~ (1 - kappa omega_x / 2) + i kappa / 2, lambda3 ~ i(omega_x - kappa)
        let slope1 = (poles.lambda1 - C64::new(1.0, 0.0)) / kappa;
        let slope3 = (poles.lambda3 - C64::new(0.0, 5.0)) / kappa;
        assert!((slope1 - C64::new(-2.5, 0.5)).norm() < 1e-2);
        assert!((slope3 - C64::new(0.0, -1.0)).norm() < 1e-2);
    }

    #[test]
    fn poles_satisfy_cubic_and_vieta() {
        for kappa in [0.001, 0.03, 0.1, 0.15, 0.185, 0.1899] {
            let p = params(kappa);
            let poles = solve_cubic(&p).unwrap();
            for l in poles.as_array() {
                assert!(cubic_polynomial(l, &p).norm() < 1e-10, "kappa {kappa}");
            }
            let [a0, _, a2] = cubic_coefficients(&p);
            let [l1, l2, l3] = poles.as_array();
            assert!((l1 + l2 + l3 + a2).norm() < 1e-10);
            assert!((l1 * l2 * l3 + a0).norm() < 1e-10);
            assert!((poles.lambda2 + poles.lambda1.conj()).norm() < 1e-10);
            assert!(poles.lambda3.re.abs() <= 1e-12 * 5.0);
        }
    }

    #[test]
    fn factorized_denominator() {
        let p = params(0.11);
        let poles = solve_cubic(&p).unwrap();
        for k in [0.05, 0.5, 0.9, 1.3, 7.0, -2.0] {
            let lhs = denominator(k, &p);
            let kc = C64::new(k, 0.0);
            let rhs = (kc - poles.lambda1) * (kc - poles.lambda2) * (kc - poles.lambda3)
                / (kc - C64::new(0.0, 5.0));
            assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm());
        }
    }

    #[test]
    fn fig4_operating_points() {
        // The exact pole sits below the closed-form 0.476 at this coupling.
        assert_relative_eq!(
            solve_cubic(&params(0.15)).unwrap().lambda1.re,
            0.469_983_392,
            max_relative = 1e-8
        );
        assert!((renormalize(&params(0.01)).unwrap().omega_b_tilde - 0.975).abs() < 1e-3);
    }

    #[test]
    fn closed_form_renormalized_frequency() {
        assert!((renormalized_frequency_closed_form(&params(0.01)).unwrap() - 0.9748).abs() < 5e-4);
        assert!((renormalized_frequency_closed_form(&params(0.15)).unwrap() - 0.4764).abs() < 5e-4);
        assert_eq!(renormalized_frequency_closed_form(&params(0.0)).unwrap(), 1.0);
    }

    #[test]
    fn two_renormalized_frequencies_agree() {
        for i in 0..=28 {
            let kappa = 0.005 * i as f64;
            let p = params(kappa);
            let exact = renormalize(&p).unwrap().omega_b_tilde;
            let closed = renormalized_frequency_closed_form(&p).unwrap();
            assert!((exact - closed).abs() <= 1e-2 * closed, "kappa {kappa}");
        }
    }

    #[test]
    fn weak_coupling_limit_of_decay_rate() {
        let r = renormalize(&params(1e-6)).unwrap();
        assert_relative_eq!(r.kappa_tilde / 1e-6, 1.0, max_relative = 1e-4);
        assert_relative_eq!(r.omega_b_tilde, 1.0, max_relative = 1e-5);
    }

    #[test]
    fn decay_rate_regression_at_strong_coupling() {
        let r = renormalize(&params(0.15)).unwrap();
        assert!((r.kappa_tilde / 0.15 - 1.0).abs() < 0.15);
        assert_relative_eq!(r.kappa_tilde, KAPPA_TILDE_AT_015, max_relative = 1e-9);
    }

    // First computed value of 2 Im(lambda1) at kappa = 0.15, omega_x = 5.
    const KAPPA_TILDE_AT_015: f64 = 0.159_646_156_455_374_9;

    #[test]
    fn bounds_for_default_cutoff() {
        let b = coupling_bound(1.0, 5.0).unwrap();
        assert_relative_eq!(b.naive, 5.0 / 26.0, max_relative = 1e-15);
        assert!((b.strict - 0.190).abs() < 5e-4);
    }

    #[test]
    fn strict_bound_below_naive() {
        for i in 0..=480 {
            let wx = 2.0 + 0.1 * i as f64;
            let b = coupling_bound(1.0, wx).unwrap();
            assert!(b.strict < b.naive, "omega_x {wx}");
        }
    }

    #[test]
    fn bound_needs_real_stationary_point() {
        assert!(matches!(
            coupling_bound(1.0, 1.5),
            Err(Error::NoRealStationaryPoint { .. })
        ));
    }

    #[test]
    fn admissibility_equivalence() {
        let naive = coupling_bound(1.0, 5.0).unwrap().naive;
        let p = params(0.18);
        assert!(p.admissibility_integral() < 0.25);
        // closed form at exactly the naive bound reaches omega_b / 4
        let c = naive * 26.0 / (2.0 * PI);
        assert_relative_eq!(PI * c / 10.0, 0.25, max_relative = 1e-14);
    }

    #[test]
    fn regime_thresholds() {
        let t = coupling_regime_thresholds(1.0, 5.0).unwrap();
        assert!((t.ultrastrong - 0.076).abs() < 1e-3, "{}", t.ultrastrong);
        assert!((t.deepstrong - 0.183).abs() < 1e-3, "{}", t.deepstrong);
    }

    #[test]
    fn ratio_is_monotone_in_coupling() {
        let strict = coupling_bound(1.0, 5.0).unwrap().strict;
        let mut last = -1.0;
        for i in 0..200 {
            let kappa = strict * i as f64 / 200.0;
            let ratio = renormalize(&params(kappa)).unwrap().ratio();
            assert!(ratio > last);
            last = ratio;
        }
    }

    #[test]
    fn tracking_agrees_with_quadrant_labels() {
        let p = params(0.12);
        let direct = solve_cubic(&p).unwrap();
        let tracked = track_from_uncoupled(&p);
        for (a, b) in direct.as_array().iter().zip(tracked.as_array()) {
            assert!((a - b).norm() < 1e-12);
        }
    }
}
