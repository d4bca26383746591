use num_complex::Complex64 as C64;
use proptest::prelude::*;
use uswqed::dynamics::{self, Drive};
use uswqed::fano::FanoCoefficients;
use uswqed::field;
use uswqed::fluctuations;
use uswqed::model::{self, ModelParams};
use uswqed::numerics::{self, Interval, PoleSpec, Prescription};

fn admissible() -> impl Strategy<Value = ModelParams> {
    (3.0f64..20.0, 0.0f64..0.97).prop_map(|(omega_x, fraction)| {
        let bound = model::coupling_bound(1.0, omega_x).unwrap().strict;
        ModelParams::dimensionless(omega_x, fraction * bound).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poles_satisfy_vieta_and_mirror_symmetry(p in admissible()) {
        let poles = model::solve_cubic(&p).unwrap();
        let [a0, _, a2] = model::cubic_coefficients(&p);
        let [l1, l2, l3] = poles.as_array();
        prop_assert!((l2 + l1.conj()).norm() < 1e-10);
        prop_assert!((l1 + l2 + l3 + a2).norm() < 1e-10 * p.omega_x());
        prop_assert!((l1 * l2 * l3 + a0).norm() < 1e-10 * p.omega_x());
        for l in [l1, l2, l3] {
            prop_assert!(model::cubic_polynomial(l, &p).norm() < 1e-10 * p.omega_x().powi(2));
        }
        prop_assert!(l1.re > 0.0 && l1.im >= 0.0 && l3.im > 0.0);
    }

    #[test]
    fn reflection_is_a_pure_phase(p in admissible(), k in 1e-3f64..20.0) {
        prop_assert!((field::reflection(k, &p).norm() - 1.0).abs() < 1e-12);
        let s = field::open_waveguide(k, &p);
        prop_assert!((s.transmissivity() + s.r_prime.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn beta_ratio(p in admissible(), k in 1e-3f64..20.0) {
        let f = FanoCoefficients::new(p);
        let lhs = f.beta2(k) * (k + 1.0);
        let rhs = f.beta1(k) * (k - 1.0);
        prop_assert!((lhs - rhs).norm() <= 1e-13 * lhs.norm().max(rhs.norm()) + 1e-300);
    }

    #[test]
    fn normalization_holds(p in admissible(), k in 1e-2f64..10.0) {
        prop_assume!(p.kappa() > 1e-6);
        prop_assert!((FanoCoefficients::new(p).normalization(k) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn ellipse_axis_ratio(p in admissible(), kd in 0.05f64..3.0, e in 0.0f64..2.0, theta in -3.0f64..3.0) {
        let d = Drive::new(e, theta, kd).unwrap();
        let g = dynamics::ellipse(&d, &p);
        prop_assume!(g.radius_x > 0.0);
        prop_assert!((g.radius_y / g.radius_x - kd).abs() < 1e-12 * kd.max(1.0));
        prop_assert!(g.long >= g.short);
    }

    #[test]
    fn fluctuations_are_squeezed_not_minimal(p in admissible()) {
        prop_assume!(p.kappa() > 1e-4);
        let m = fluctuations::moments_closed_form(&p).unwrap();
        prop_assert!(m.n_virtual > 0.0);
        prop_assert!(m.anomalous.norm() <= (m.n_virtual * (m.n_virtual + 1.0)).sqrt());
        let f = fluctuations::quadrature_fluctuations(&p).unwrap();
        prop_assert!(f.dy < 0.5 && 0.5 < f.dx);
        prop_assert!(f.dx * f.dy > 0.25);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pv_is_linear_and_prescriptions_differ_by_the_delta(
        a in -2.0f64..2.0, b in -2.0f64..2.0, x0 in 0.3f64..2.7, s in 0.5f64..3.0,
    ) {
        let f = |x: f64| C64::new((s * x).cos(), x * x);
        let g = |x: f64| C64::new(1.0 / (1.0 + x), (s * x).sin());
        let interval = Interval::Finite(0.0, 3.0);
        let minus = PoleSpec::new(x0, Prescription::MinusI0);
        let pf = numerics::pv_pole_integral(f, interval, minus).unwrap().value;
        let pg = numerics::pv_pole_integral(g, interval, minus).unwrap().value;
        let combined = numerics::pv_pole_integral(|x| a * f(x) + b * g(x), interval, minus).unwrap().value;
        prop_assert!((combined - (a * pf + b * pg)).norm() < 1e-7 * (1.0 + combined.norm()));
        let plus = numerics::pv_pole_integral(f, interval, minus.flipped()).unwrap().value;
        let jump = pf - plus;
        prop_assert!((jump - C64::new(0.0, 2.0 * std::f64::consts::PI) * f(x0)).norm() < 1e-7);
    }

    #[test]
    fn oscillatory_conjugation_symmetry(t in 0.0f64..40.0, c in 0.2f64..3.0) {
        let g = |q: f64| C64::new(1.0, q) / (q * q + c * c) / (1.0 + q * q).sqrt();
        let forward = numerics::oscillatory_integral(g, t, 1.0, Interval::WholeLine).unwrap().value;
        let backward = numerics::oscillatory_integral(|q| g(q).conj(), t, -1.0, Interval::WholeLine)
            .unwrap()
            .value;
        prop_assert!((forward - backward.conj()).norm() < 1e-7 * (1.0 + forward.norm()));
    }

    #[test]
    fn stationary_orbit_phase_covariance(p in admissible(), kd in 0.1f64..2.0, phi in -3.0f64..3.0, t in 0.0f64..50.0) {
        let d0 = Drive::new(0.4, 0.2, kd).unwrap();
        let d1 = Drive::new(0.4, 0.2 + phi, kd).unwrap();
        let a = dynamics::stationary_amplitude(t, &d1, &p);
        let b = dynamics::stationary_amplitude(t - phi / kd, &d0, &p);
        prop_assert!((a - b).norm() < 1e-12 * (1.0 + a.norm()));
    }
}
