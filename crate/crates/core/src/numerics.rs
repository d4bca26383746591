//! Quadrature kernels: globally adaptive Gauss-Kronrod on panels, principal
//! values with an explicit `±i0` prescription, oscillatory integrals with an
//! `e^{±iqt}` factor, and half-line Fourier transforms whose delta part is
//! carried analytically.
//!
//! Every integrand is split into a non-oscillatory envelope `g(q)` times
//! `e^{i omega q}`. Finite panels are capped at a quarter oscillation period.
//! Tails beyond the panel region are either mapped onto a finite interval
//! (`omega = 0`) or summed asymptotically by repeated integration by parts.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077208292394880,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

// Weights of the embedded 10-point Gauss rule at XGK[1], XGK[3], ..., XGK[9].
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

/// A quadrature result with its (conservative) absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: C64,
    pub error: f64,
}

impl Estimate {
    pub fn zero() -> Self {
        Self {
            value: C64::new(0.0, 0.0),
            error: 0.0,
        }
    }

    pub fn scale(self, factor: C64) -> Self {
        Self {
            value: self.value * factor,
            error: self.error * factor.norm(),
        }
    }
}

impl std::ops::Add for Estimate {
    type Output = Estimate;

    fn add(self, rhs: Estimate) -> Estimate {
        Estimate {
            value: self.value + rhs.value,
            error: self.error + rhs.error,
        }
    }
}

impl std::iter::Sum for Estimate {
    fn sum<I: Iterator<Item = Estimate>>(iter: I) -> Estimate {
        iter.fold(Estimate::zero(), |a, b| a + b)
    }
}

/// Which side of the real axis the pole is displaced to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prescription {
    /// Denominator `x - x0 + i0`: `PV - i pi delta`.
    PlusI0,
    /// Denominator `x - x0 - i0`: `PV + i pi delta`.
    MinusI0,
}

/// A simple pole `1 / (x - location ∓ i0)` on the real axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleSpec {
    pub location: f64,
    pub prescription: Prescription,
}

impl PoleSpec {
    pub fn new(location: f64, prescription: Prescription) -> Self {
        Self {
            location,
            prescription,
        }
    }

    /// Coefficient `s` in `1/(x - x0 ∓ i0) = PV 1/(x - x0) + s i pi delta(x - x0)`.
    pub fn delta_sign(&self) -> f64 {
        match self.prescription {
            Prescription::MinusI0 => 1.0,
            Prescription::PlusI0 => -1.0,
        }
    }

    pub fn flipped(&self) -> Self {
        let prescription = match self.prescription {
            Prescription::MinusI0 => Prescription::PlusI0,
            Prescription::PlusI0 => Prescription::MinusI0,
        };
        Self {
            location: self.location,
            prescription,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Interval {
    Finite(f64, f64),
    /// `[a, inf)`
    HalfLine(f64),
    WholeLine,
}

impl Interval {
    fn lower(&self) -> f64 {
        match *self {
            Interval::Finite(a, _) | Interval::HalfLine(a) => a,
            Interval::WholeLine => f64::NEG_INFINITY,
        }
    }

    fn upper(&self) -> f64 {
        match *self {
            Interval::Finite(_, b) => b,
            _ => f64::INFINITY,
        }
    }

    fn contains_interior(&self, x: f64) -> bool {
        x > self.lower() && x < self.upper()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Upper limit on the number of panels the adaptive refinement may hold.
    pub max_panels: usize,
    /// Initial panel width near the origin; panels widen geometrically
    /// away from it unless capped by the oscillation period.
    pub panel_width: f64,
    /// Where the panel region ends and the tail treatment starts.
    pub tail_start: f64,
    /// The asymptotic tail is only used once `|omega| q` exceeds this.
    pub tail_phase: f64,
    /// Half-width of the subtraction window around a pole.
    pub pole_window: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-8,
            abs_tol: 1e-14,
            max_panels: 2_000_000,
            panel_width: 0.5,
            tail_start: 50.0,
            tail_phase: 64.0,
            pole_window: 0.5,
        }
    }
}

impl QuadratureConfig {
    /// Scales the panel region to the spectral cutoff `omega_x`.
    pub fn for_cutoff(omega_x: f64) -> Self {
        Self {
            tail_start: 10.0 * omega_x,
            ..Self::default()
        }
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Self {
        Self { rel_tol, ..self }
    }
}

/// Quadrature driver: a configuration plus optional breakpoints at which
/// panels are split (sharp resonances, kinks).
#[derive(Debug, Clone, Default)]
pub struct Quadrature {
    pub config: QuadratureConfig,
    breakpoints: Vec<f64>,
}

impl Quadrature {
    pub fn new(config: QuadratureConfig) -> Self {
        Self {
            config,
            breakpoints: Vec::new(),
        }
    }

    pub fn with_breakpoints(mut self, points: &[f64]) -> Self {
        self.breakpoints
            .extend(points.iter().copied().filter(|x| x.is_finite()));
        self
    }

    /// Plain adaptive integral of `f` over `interval`.
    pub fn integrate<F>(&self, f: F, interval: Interval) -> Result<Estimate>
    where
        F: Fn(f64) -> C64,
    {
        self.envelope_integral(&f, 0.0, interval, &self.breakpoints, C64::new(0.0, 0.0))
    }

    /// `int f(x) / (x - x0 ∓ i0) dx` over `interval`.
    ///
    /// The principal value uses the subtraction `[f(x) - f(x0)] / (x - x0)` on
    /// a window symmetric about the pole, where the constant part integrates
    /// to zero; the delta part contributes `± i pi f(x0)`. A pole outside the
    /// interval gives an ordinary integral.
    pub fn pv_pole_integral<F>(&self, f: F, interval: Interval, pole: PoleSpec) -> Result<Estimate>
    where
        F: Fn(f64) -> C64,
    {
        self.pole_integral(&f, 0.0, interval, pole)
    }

    /// `int g(q) e^{i sign q t} dq` over `interval`.
    pub fn oscillatory_integral<F>(
        &self,
        g: F,
        t: f64,
        sign: f64,
        interval: Interval,
    ) -> Result<Estimate>
    where
        F: Fn(f64) -> C64,
    {
        self.envelope_integral(&g, sign.signum() * t, interval, &self.breakpoints, C64::new(0.0, 0.0))
    }

    /// `int g(q) e^{i sign q t} / (q - x0 ∓ i0) dq` over `interval`.
    pub fn oscillatory_pole_integral<F>(
        &self,
        g: F,
        t: f64,
        sign: f64,
        interval: Interval,
        pole: PoleSpec,
    ) -> Result<Estimate>
    where
        F: Fn(f64) -> C64,
    {
        self.pole_integral(&g, sign.signum() * t, interval, pole)
    }

    /// `(1/sqrt(2 pi)) int_0^inf e^{ikr} S(k) dk` for a spectrum made of a
    /// delta line and regular terms.
    pub fn halfline_fourier(&self, spectrum: &DeltaPlusRegular<'_>, r: f64) -> Result<Estimate> {
        let norm = 1.0 / (2.0 * PI).sqrt();
        let mut total = Estimate::zero();
        if spectrum.delta_weight != C64::new(0.0, 0.0) {
            let k0 = spectrum.delta_location;
            if !(k0 > 0.0) {
                return Err(Error::Domain(format!(
                    "delta line at k = {k0} is not inside (0, inf)"
                )));
            }
            total.value += spectrum.delta_weight * C64::from_polar(1.0, k0 * r);
        }
        for term in &spectrum.regular {
            let omega = r - term.delay;
            let envelope = |k: f64| (term.envelope)(k);
            let part = match term.pole {
                Some(pole) => self.pole_integral(&envelope, omega, Interval::HalfLine(0.0), pole)?,
                None => self.envelope_integral(
                    &envelope,
                    omega,
                    Interval::HalfLine(0.0),
                    &self.breakpoints,
                    C64::new(0.0, 0.0),
                )?,
            };
            total = total + part;
        }
        Ok(total.scale(C64::new(norm, 0.0)))
    }

    fn pole_integral(
        &self,
        g: &dyn Fn(f64) -> C64,
        omega: f64,
        interval: Interval,
        pole: PoleSpec,
    ) -> Result<Estimate> {
        let x0 = pole.location;
        if !x0.is_finite() {
            return Err(Error::Domain("pole location must be finite".into()));
        }
        if !interval.contains_interior(x0) {
            let shifted = |q: f64| g(q) / (q - x0);
            return self.envelope_integral(&shifted, omega, interval, &self.breakpoints, C64::new(0.0, 0.0));
        }
        let g0 = g(x0);
        if !(g0.re.is_finite() && g0.im.is_finite()) {
            return Err(Error::Domain(format!("integrand is not finite at the pole {x0}")));
        }
        let half = self
            .config
            .pole_window
            .min(0.5 * (x0 - interval.lower()))
            .min(0.5 * (interval.upper() - x0));
        let (lo, hi) = (x0 - half, x0 + half);

        // Inside the window the envelope is chosen so that envelope * e^{i omega q}
        // equals [g(q) e^{i omega q} - g(x0) e^{i omega x0}] / (q - x0).
        let subtracted = |q: f64| {
            if q > lo && q < hi {
                let d = q - x0;
                if d == 0.0 {
                    return C64::new(0.0, 0.0);
                }
                (g(q) - g0 * C64::from_polar(1.0, -omega * d)) / d
            } else {
                g(q) / (q - x0)
            }
        };
        let mut points = self.breakpoints.clone();
        points.extend([lo, x0, hi]);
        let delta = C64::new(0.0, pole.delta_sign() * PI) * g0 * C64::from_polar(1.0, omega * x0);
        let pv = self.envelope_integral(&subtracted, omega, interval, &points, delta)?;
        Ok(Estimate {
            value: pv.value + delta,
            error: pv.error,
        })
    }

    /// `int g(q) e^{i omega q} dq` with panels, tails and global refinement.
    /// `offset` is an exactly known addend (a delta contribution) that only
    /// sets the scale for the relative tolerance.
    fn envelope_integral(
        &self,
        g: &dyn Fn(f64) -> C64,
        omega: f64,
        interval: Interval,
        points: &[f64],
        offset: C64,
    ) -> Result<Estimate> {
        const MAX_REACH_DOUBLINGS: u32 = 10;
        let cfg = &self.config;
        let (a, b) = (interval.lower(), interval.upper());
        if a.is_finite() && b.is_finite() && a >= b {
            return Ok(Estimate::zero());
        }

        let base_reach = if omega == 0.0 {
            cfg.tail_start
        } else {
            cfg.tail_start.max(cfg.tail_phase / omega.abs())
        }
        .max(points_extent(points));

        let mut doubling = 0;
        loop {
            let reach = base_reach * f64::from(1u32 << doubling);
            let lo = if a.is_finite() { a } else { -reach };
            let hi = if b.is_finite() { b } else { reach.max(lo + reach) };

            let mut fixed = Estimate {
                value: offset,
                error: 0.0,
            };
            let mut segments: Vec<Segment> = Vec::new();
            let upper_tail = !b.is_finite();
            let lower_tail = !a.is_finite();
            if omega == 0.0 {
                if upper_tail {
                    segments.push(Segment::new(Map::Upper(hi), 0.0, 1.0));
                }
                if lower_tail {
                    segments.push(Segment::new(Map::Lower(lo), 0.0, 1.0));
                }
            } else {
                if upper_tail {
                    fixed = fixed + asymptotic_tail(g, omega, hi, 1.0);
                }
                if lower_tail {
                    fixed = fixed + asymptotic_tail(g, omega, lo, -1.0);
                }
            }
            for (u, v) in build_panels(lo, hi, points, omega, cfg) {
                segments.push(Segment::new(Map::Identity, u, v));
            }

            match adaptive(g, omega, segments, fixed, cfg) {
                Ok(mut estimate) => {
                    estimate.value -= offset;
                    return Ok(estimate);
                }
                Err(Failure::Tail) if doubling < MAX_REACH_DOUBLINGS => doubling += 1,
                Err(Failure::Tail) => {
                    return Err(Error::Quadrature {
                        requested: cfg.rel_tol,
                        achieved: f64::NAN,
                    })
                }
                Err(Failure::Other(e)) => return Err(e),
            }
        }
    }
}

fn points_extent(points: &[f64]) -> f64 {
    points.iter().fold(0.0f64, |m, x| m.max(x.abs() * 1.5))
}

/// Convenience wrappers with the default configuration.
pub fn pv_pole_integral<F>(f: F, interval: Interval, pole: PoleSpec) -> Result<Estimate>
where
    F: Fn(f64) -> C64,
{
    Quadrature::default().pv_pole_integral(f, interval, pole)
}

pub fn oscillatory_integral<F>(g: F, t: f64, sign: f64, interval: Interval) -> Result<Estimate>
where
    F: Fn(f64) -> C64,
{
    Quadrature::default().oscillatory_integral(g, t, sign, interval)
}

pub fn halfline_fourier(spectrum: &DeltaPlusRegular<'_>, r: f64) -> Result<Estimate> {
    Quadrature::default().halfline_fourier(spectrum, r)
}

/// One regular contribution `envelope(k) e^{-ik delay} / (k - x0 ∓ i0)` to a
/// wavenumber-space amplitude; the pole factor is absent when `pole` is
/// `None`.
pub struct SpectralTerm<'a> {
    pub envelope: Box<dyn Fn(f64) -> C64 + Send + Sync + 'a>,
    pub delay: f64,
    pub pole: Option<PoleSpec>,
}

impl<'a> SpectralTerm<'a> {
    pub fn new<F>(envelope: F, delay: f64, pole: Option<PoleSpec>) -> Self
    where
        F: Fn(f64) -> C64 + Send + Sync + 'a,
    {
        Self {
            envelope: Box::new(envelope),
            delay,
            pole,
        }
    }

    /// Value at `k` away from the pole.
    pub fn at(&self, k: f64) -> Result<C64> {
        let base = (self.envelope)(k) * C64::from_polar(1.0, -k * self.delay);
        match self.pole {
            Some(pole) if k == pole.location => Err(Error::Domain(format!(
                "regular part evaluated on its pole at k = {k} without a prescription"
            ))),
            Some(pole) => Ok(base / (k - pole.location)),
            None => Ok(base),
        }
    }
}

/// `delta_weight * delta(k - delta_location) + sum of regular terms`.
pub struct DeltaPlusRegular<'a> {
    pub delta_weight: C64,
    pub delta_location: f64,
    pub regular: Vec<SpectralTerm<'a>>,
}

impl<'a> DeltaPlusRegular<'a> {
    pub fn regular_at(&self, k: f64) -> Result<C64> {
        self.regular.iter().map(|t| t.at(k)).sum()
    }
}

#[derive(Debug, Clone, Copy)]
enum Map {
    Identity,
    /// `q = L / u^2` on `u in (0, 1]`, covering `[L, inf)`.
    Upper(f64),
    /// `q = L / u^2` with `L < 0`, covering `(-inf, L]`.
    Lower(f64),
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    map: Map,
    a: f64,
    b: f64,
    value: C64,
    error: f64,
    magnitude: f64,
}

impl Segment {
    fn new(map: Map, a: f64, b: f64) -> Self {
        Self {
            map,
            a,
            b,
            value: C64::new(0.0, 0.0),
            error: 0.0,
            magnitude: 0.0,
        }
    }

    fn evaluate(mut self, g: &dyn Fn(f64) -> C64, omega: f64) -> Self {
        let (value, error, magnitude) = match self.map {
            Map::Identity => gauss_kronrod(|q| g(q) * C64::from_polar(1.0, omega * q), self.a, self.b),
            Map::Upper(l) => gauss_kronrod(|u| mapped(g, l, u), self.a, self.b),
            Map::Lower(l) => {
                let (v, e, m) = gauss_kronrod(|u| mapped(g, l, u), self.a, self.b);
                // dq = -2L/u^3 du with L < 0 runs from -inf up to L: flip orientation
                (-v, e, m)
            }
        };
        self.value = value;
        self.error = error;
        self.magnitude = magnitude;
        self
    }

    fn can_split(&self) -> bool {
        let mid = 0.5 * (self.a + self.b);
        mid > self.a && mid < self.b
    }
}

fn mapped(g: &dyn Fn(f64) -> C64, l: f64, u: f64) -> C64 {
    let q = l / (u * u);
    g(q) * (2.0 * l / (u * u * u))
}

struct Ranked(Segment);

impl PartialEq for Ranked {
    fn eq(&self, other: &Self) -> bool {
        self.0.error.total_cmp(&other.0.error) == Ordering::Equal
    }
}

impl Eq for Ranked {}

impl PartialOrd for Ranked {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ranked {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.error.total_cmp(&other.0.error)
    }
}

enum Failure {
    /// The asymptotic tail alone exceeds the error budget.
    Tail,
    Other(Error),
}

fn adaptive(
    g: &dyn Fn(f64) -> C64,
    omega: f64,
    initial: Vec<Segment>,
    fixed: Estimate,
    cfg: &QuadratureConfig,
) -> std::result::Result<Estimate, Failure> {
    let mut heap = BinaryHeap::with_capacity(initial.len() * 2);
    let mut settled = Estimate::zero();
    let mut settled_magnitude = 0.0;
    for s in initial {
        heap.push(Ranked(s.evaluate(g, omega)));
    }

    let totals = |heap: &BinaryHeap<Ranked>, settled: &Estimate, settled_magnitude: f64| {
        let mut t = fixed + *settled;
        let mut magnitude = settled_magnitude + fixed.value.norm();
        for Ranked(s) in heap.iter() {
            t.value += s.value;
            t.error += s.error;
            magnitude += s.magnitude;
        }
        (t, magnitude)
    };
    // below this the panel sums are dominated by cancellation round-off
    let target_for = |total: &Estimate, magnitude: f64| {
        cfg.abs_tol
            .max(cfg.rel_tol * total.value.norm())
            .max(100.0 * f64::EPSILON * magnitude)
    };

    let (mut total, mut magnitude) = totals(&heap, &settled, settled_magnitude);
    let mut since_resum = 0usize;
    loop {
        if !(total.value.re.is_finite() && total.value.im.is_finite()) {
            return Err(Failure::Other(Error::Domain(
                "integrand produced a non-finite value".into(),
            )));
        }
        let target = target_for(&total, magnitude);
        if total.error <= target {
            // the incremental sums drift; confirm against a fresh summation
            let (fresh, fresh_magnitude) = totals(&heap, &settled, settled_magnitude);
            if fresh.error <= target_for(&fresh, fresh_magnitude) {
                return Ok(fresh);
            }
            total = fresh;
            magnitude = fresh_magnitude;
            continue;
        }
        if fixed.error > 0.5 * target {
            return Err(Failure::Tail);
        }
        let Some(Ranked(worst)) = heap.pop().filter(|_| heap.len() < cfg.max_panels) else {
            return Err(Failure::Other(Error::Quadrature {
                requested: target,
                achieved: total.error,
            }));
        };
        if !worst.can_split() {
            settled.value += worst.value;
            settled.error += worst.error;
            settled_magnitude += worst.magnitude;
            continue;
        }
        let mid = 0.5 * (worst.a + worst.b);
        let left = Segment::new(worst.map, worst.a, mid).evaluate(g, omega);
        let right = Segment::new(worst.map, mid, worst.b).evaluate(g, omega);
        total.value += left.value + right.value - worst.value;
        total.error += left.error + right.error - worst.error;
        magnitude += left.magnitude + right.magnitude - worst.magnitude;
        heap.push(Ranked(left));
        heap.push(Ranked(right));

        since_resum += 1;
        if since_resum >= 4096 {
            (total, magnitude) = totals(&heap, &settled, settled_magnitude);
            since_resum = 0;
        }
    }
}

/// Splits `[lo, hi]` at the breakpoints and into panels no wider than a
/// quarter period of `e^{i omega q}`.
fn build_panels(lo: f64, hi: f64, points: &[f64], omega: f64, cfg: &QuadratureConfig) -> Vec<(f64, f64)> {
    let mut cuts: Vec<f64> = points
        .iter()
        .copied()
        .chain(std::iter::once(0.0))
        .filter(|&x| x > lo && x < hi)
        .collect();
    cuts.push(lo);
    cuts.push(hi);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    let cap = if omega == 0.0 {
        f64::INFINITY
    } else {
        PI / (4.0 * omega.abs())
    };
    let width_at = |x: f64| cap.min(cfg.panel_width.max(0.25 * x.abs()));

    let mut panels = Vec::new();
    for pair in cuts.windows(2) {
        let (u, v) = (pair[0], pair[1]);
        let mut x = u;
        while x < v {
            let w = width_at(x);
            let mut next = (x + w).min(v);
            if v - next < 0.25 * w {
                next = v;
            }
            panels.push((x, next));
            x = next;
        }
    }
    panels
}

/// `int_L^inf g e^{i omega q} dq` (direction `+1`) or `int_{-inf}^L` (`-1`)
/// by three rounds of integration by parts; the last retained term doubles
/// as the error estimate.
fn asymptotic_tail(g: &dyn Fn(f64) -> C64, omega: f64, l: f64, direction: f64) -> Estimate {
    let h = 0.01 * l.abs();
    let g0 = g(l);
    let (gp, gm) = (g(l + h), g(l - h));
    let (gpp, gmm) = (g(l + 2.0 * h), g(l - 2.0 * h));
    let d1 = (gm * 8.0 - gp * 8.0 + gpp - gmm) / (-12.0 * h);
    let d2 = (gp + gm - g0 * 2.0) / (h * h);

    let iw = C64::new(0.0, omega);
    let phase = C64::from_polar(1.0, omega * l);
    let terms = [g0 / iw, -d1 / (iw * iw), d2 / (iw * iw * iw)];
    let series: C64 = terms.iter().sum();
    // upper tail: -e^{i w L} sum; lower tail: +e^{i w L} sum
    let value = -direction * phase * series;
    Estimate {
        value,
        // next term of the series is smaller by roughly 3 / (|omega| L)
        error: terms[2].norm() * (3.0 / (omega * l).abs()).min(1.0)
            + 1e-4 * terms[2].norm()
            + 1e-8 * terms[1].norm()
            + f64::EPSILON * terms[0].norm(),
    }
}

/// 21-point Gauss-Kronrod on `[a, b]` with the QUADPACK error heuristic.
fn gauss_kronrod<F: Fn(f64) -> C64>(f: F, a: f64, b: f64) -> (C64, f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut kronrod = f_center * WGK[10];
    let mut gauss = C64::new(0.0, 0.0);
    let mut abs_sum = f_center.norm() * WGK[10];
    let mut values = [(C64::new(0.0, 0.0), C64::new(0.0, 0.0)); 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let (f1, f2) = (f(center - dx), f(center + dx));
        values[j] = (f1, f2);
        kronrod += (f1 + f2) * WGK[j];
        abs_sum += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            gauss += (f1 + f2) * WG[j / 2];
        }
    }
    let mean = kronrod * 0.5;
    let mut asc = WGK[10] * (f_center - mean).norm();
    for j in 0..10 {
        asc += WGK[j] * ((values[j].0 - mean).norm() + (values[j].1 - mean).norm());
    }

    let result = kronrod * half;
    let abs_result = abs_sum * half.abs();
    let asc = asc * half.abs();
    let mut err = ((kronrod - gauss) * half).norm();
    if asc != 0.0 && err != 0.0 {
        err = asc * (200.0 * err / asc).powf(1.5).min(1.0);
    }
    if abs_result > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * abs_result);
    }
    (result, err, abs_result)
}
