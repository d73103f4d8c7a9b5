//! Mass-dependent QED running coupling.
//!
//! Each charged fermion contributes the one-loop vacuum-polarization beta
//! function
//!
//! ```text
//! β(α, Q) = 2α²/3π − (4α²m²/πQ²)·[1 + (2m²/s)·ln((s − Q²)/(s + Q²))],  s = √(Q⁴ + 4m²Q²)
//! ```
//!
//! weighted by N_c·Q_f². It rises from 2α²Q²/(15πm²) well below the mass to
//! the massless 2α²/3π far above it, so α(Q) stays frozen at its Thomson
//! value until the lightest fermion threshold is crossed.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::curve::{CouplingCurve, CurveSample};
use crate::error::{Error, Result};
use crate::numerics::ode::{self, OdeOptions};
use crate::numerics::roots::brent;
use crate::units::ParticleTable;

/// Q/m below which the small-Q expansion replaces the closed form.
pub const DEFAULT_CROSSOVER: f64 = 0.01;

/// Light quarks rescaled by [`fit_light_quarks`].
pub const LIGHT_QUARKS: [&str; 3] = ["u", "d", "s"];

/// β for one unit-charge fermion divided by its massless limit 2α²/3π.
///
/// Runs from y·(1/5) at small y = Q²/m² up to 1 for Q ≫ m.
pub fn mass_function(q: f64, m: f64, crossover_ratio: f64) -> f64 {
    if q <= 0.0 {
        return 0.0;
    }
    let ratio = q / m;
    let y = ratio * ratio;
    if ratio < crossover_ratio {
        return 6.0 * small_q_series(y);
    }
    let s = (y * y + 4.0 * y).sqrt();
    // ln((s − y)/(s + y)) written as −2 atanh(y/s) for small y, where it
    // halves the cancellation, and via s − y = 4y/(s + y) for large y.
    let log = if y < 1.0 {
        -2.0 * (y / s).atanh()
    } else {
        (4.0 * y).ln() - 2.0 * (s + y).ln()
    };
    1.0 - 6.0 / y * (1.0 + 2.0 / s * log)
}

/// Σ_k (−1)^k y^{k+1} ((k+2)!)²/(2k+5)!, the Taylor series of β·π/(4α²).
fn small_q_series(y: f64) -> f64 {
    // c_0 = (2!)²/5! ; c_{k+1}/c_k = (k+3)²/((2k+6)(2k+7))
    let mut coeff = 4.0 / 120.0;
    let mut power = y;
    let mut sum = 0.0;
    for k in 0..40 {
        let term = coeff * power;
        sum += if k % 2 == 0 { term } else { -term };
        if term.abs() <= 1e-18 * sum.abs() {
            break;
        }
        let kf = k as f64;
        coeff *= (kf + 3.0).powi(2) / ((2.0 * kf + 6.0) * (2.0 * kf + 7.0));
        power *= y;
    }
    sum
}

/// Massless one-loop coefficient 2α²/3π.
pub fn massless_beta(alpha: f64) -> f64 {
    2.0 * alpha * alpha / (3.0 * PI)
}

/// Single unit-charge fermion contribution, default crossover.
pub fn beta_single(alpha: f64, q: f64, m: f64) -> f64 {
    massless_beta(alpha) * mass_function(q, m, DEFAULT_CROSSOVER)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BetaModel {
    pub table: ParticleTable,
    pub crossover_ratio: f64,
}

impl Default for BetaModel {
    fn default() -> Self {
        Self {
            table: ParticleTable::default(),
            crossover_ratio: DEFAULT_CROSSOVER,
        }
    }
}

impl BetaModel {
    pub fn new(table: ParticleTable, crossover_ratio: f64) -> Result<Self> {
        let model = Self {
            table,
            crossover_ratio,
        };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.crossover_ratio > 0.0 && self.crossover_ratio <= 0.1) {
            return Err(Error::Validation(format!(
                "crossover_ratio must lie in (0, 0.1], got {}",
                self.crossover_ratio
            )));
        }
        self.table.validate()
    }

    pub fn beta_single(&self, alpha: f64, q: f64, m: f64) -> f64 {
        massless_beta(alpha) * mass_function(q, m, self.crossover_ratio)
    }

    /// Σ_f N_c Q_f² β(α, Q, m_f).
    pub fn beta_total(&self, alpha: f64, q: f64) -> f64 {
        let shape: f64 = self
            .table
            .species
            .iter()
            .map(|f| f.charge_weight() * mass_function(q, f.mass, self.crossover_ratio))
            .sum();
        massless_beta(alpha) * shape
    }

    fn id(&self) -> String {
        let names: Vec<_> = self.table.species.iter().map(|s| s.name.as_str()).collect();
        format!("qed-mass-dependent[{}]", names.join(","))
    }
}

/// Free-function form of [`BetaModel::beta_total`].
pub fn beta_total(alpha: f64, q: f64, model: &BetaModel) -> f64 {
    model.beta_total(alpha, q)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolveOptions {
    /// Coupling at Q → 0.
    pub alpha0: f64,
    /// Where the numerical integration starts [GeV].
    pub q_start: f64,
    pub ode: OdeOptions,
}

impl Default for EvolveOptions {
    fn default() -> Self {
        Self {
            alpha0: crate::units::ALPHA_THOMSON,
            q_start: 1e-6,
            ode: OdeOptions::default(),
        }
    }
}

/// Integrates Q dα/dQ = β_total(α, Q) from the Thomson limit up to `q_max`.
///
/// Below `q_start` every β is ∝ Q², so the increment from Q = 0 is taken
/// as β_total(α₀, q_start)/2 instead of being integrated.
pub fn evolve_alpha(q_max: f64, model: &BetaModel, opts: &EvolveOptions) -> Result<CouplingCurve> {
    model.validate()?;
    if !(q_max > 0.0 && q_max.is_finite()) {
        return Err(Error::Domain(format!("q_max must be positive, got {q_max}")));
    }
    let q0 = opts.q_start.min(q_max);
    let alpha_start = opts.alpha0 + 0.5 * model.beta_total(opts.alpha0, q0);
    let mut samples = vec![CurveSample {
        q: q0,
        alpha: alpha_start,
    }];
    if q_max > q0 {
        let rhs = |t: f64, alpha: f64| model.beta_total(alpha, t.exp());
        let traj = ode::integrate(rhs, q0.ln(), alpha_start, q_max.ln(), &opts.ode, |_, _| false)?;
        samples.extend(traj.points.iter().skip(1).map(|&(t, alpha)| CurveSample { q: t.exp(), alpha }));
        // t = ln q_max round-trips through exp with rounding; pin the endpoint.
        if let Some(last) = samples.last_mut() {
            last.q = q_max;
        }
    }
    CouplingCurve::new(model.id(), samples)
}

/// Massless solution α₀/(1 − (2α₀/3π) ln(Q/m)).
pub fn landau_solution(q: f64, m: f64, alpha0: f64) -> Result<f64> {
    if !(q > 0.0 && m > 0.0) {
        return Err(Error::Domain(format!("need Q > 0 and m > 0 (Q = {q}, m = {m})")));
    }
    let denom = 1.0 - 2.0 * alpha0 / (3.0 * PI) * (q / m).ln();
    if denom <= 1e-6 {
        let pole = m * (3.0 * PI / (2.0 * alpha0)).exp();
        return Err(Error::Singular(format!(
            "Landau pole: Q = {q} GeV is at or beyond the pole scale {pole:e} GeV"
        )));
    }
    Ok(alpha0 / denom)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub scale_factor: f64,
    pub achieved_inverse_alpha: f64,
    pub iterations: usize,
}

fn scaled_model(model: &BetaModel, scale: f64) -> BetaModel {
    let mut m = model.clone();
    for sp in m.table.species.iter_mut() {
        if LIGHT_QUARKS.contains(&sp.name.as_str()) {
            sp.mass *= scale;
        }
    }
    m
}

/// 1/α at `q` with u, d, s masses multiplied by `scale`.
pub fn inverse_alpha_at(model: &BetaModel, scale: f64, q: f64, opts: &EvolveOptions) -> Result<f64> {
    let curve = evolve_alpha(q, &scaled_model(model, scale), opts)?;
    Ok(1.0 / curve.last().alpha)
}

/// Finds a common factor on (m_u, m_d, m_s) reproducing 1/α(m_z) = target.
pub fn fit_light_quarks(
    model: &BetaModel,
    target_inverse_alpha: f64,
    m_z: f64,
    opts: &EvolveOptions,
) -> Result<FitResult> {
    for name in LIGHT_QUARKS {
        if model.table.get(name).is_none() {
            return Err(Error::Validation(format!("particle table lacks light quark {name:?}")));
        }
    }
    let (lo, hi) = (1e-3f64, 1e3f64);
    let at_lo = inverse_alpha_at(model, lo, m_z, opts)?;
    let at_hi = inverse_alpha_at(model, hi, m_z, opts)?;
    let (min, max) = (at_lo.min(at_hi), at_lo.max(at_hi));
    if !(target_inverse_alpha >= min && target_inverse_alpha <= max) {
        return Err(Error::Root(format!(
            "target 1/α = {target_inverse_alpha} unreachable: scale factors in [{lo}, {hi}] give 1/α(M_Z) in [{min:.6}, {max:.6}]"
        )));
    }
    let mut iterations = 2;
    let mut failure = None;
    let log_scale = brent(
        |ls| {
            iterations += 1;
            match inverse_alpha_at(model, ls.exp(), m_z, opts) {
                Ok(v) => v - target_inverse_alpha,
                Err(e) => {
                    failure.get_or_insert(e);
                    f64::NAN
                }
            }
        },
        lo.ln(),
        hi.ln(),
        0.0,
        1e-9,
        100,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    let scale_factor = log_scale?.exp();
    let achieved = inverse_alpha_at(model, scale_factor, m_z, opts)?;
    if (achieved - target_inverse_alpha).abs() > 1e-3 {
        return Err(Error::Root(format!(
            "fit stalled at 1/α = {achieved} (target {target_inverse_alpha})"
        )));
    }
    Ok(FitResult {
        scale_factor,
        achieved_inverse_alpha: achieved,
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::quadrature::{integrate, QuadratureSpec};
    use crate::units::{Charge, FermionSpecies, ALPHA_THOMSON as ALPHA};

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    /// Independent route: Feynman-parameter integral of the vacuum polarization,
    /// β = (4α²/π) ∫₀¹ [x(1−x)]² y / (1 + x(1−x) y) dx.
    fn beta_oracle(alpha: f64, q: f64, m: f64) -> f64 {
        let y = (q / m).powi(2);
        let spec = QuadratureSpec::new(1e-13, 1e-300, 100_000).unwrap();
        let v = integrate(
            |x| {
                let u = x * (1.0 - x);
                u * u * y / (1.0 + u * y)
            },
            0.0,
            1.0,
            &spec,
        )
        .unwrap()
        .value;
        4.0 * alpha * alpha / PI * v
    }

    fn electron_only() -> BetaModel {
        let table = ParticleTable::new(vec![FermionSpecies {
            name: "e".into(),
            mass: 0.510_998_95e-3,
            charge: Charge::new(-1, 1),
            color: 1,
        }])
        .unwrap();
        BetaModel::new(table, DEFAULT_CROSSOVER).unwrap()
    }

    #[test]
    fn zero_momentum_gives_zero() {
        assert_eq!(beta_single(ALPHA, 0.0, 1.0), 0.0);
        assert_eq!(BetaModel::default().beta_total(ALPHA, 0.0), 0.0);
    }

    #[test]
    fn small_q_leading_term() {
        let b = beta_single(ALPHA, 0.01, 1.0);
        assert!(rel(b, 2.2600e-10) < 1e-4);
        let leading = 2.0 * ALPHA * ALPHA * 1e-4 / (15.0 * PI);
        assert!(rel(b, leading) < 1e-4);
    }

    #[test]
    fn asymptote_is_massless() {
        let b = beta_single(ALPHA, 1e6, 1.0);
        // 2α²/3π = 1.130029e-5 for α = 1/137.03599
        assert!(rel(b, 1.130029e-5) < 1e-6);
        for r in [1.1e4, 1e5, 1e8, 1e12] {
            let ratio = beta_single(ALPHA, r, 1.0) / massless_beta(ALPHA);
            assert!((0.999..=1.0).contains(&ratio), "{r}: {ratio}");
        }
    }

    #[test]
    fn closed_form_matches_feynman_integral() {
        for r in [1e-3, 0.005, 0.0099, 0.01, 0.02, 0.3, 1.0, 4.0, 30.0, 1e3, 1e5] {
            let b = beta_single(ALPHA, r, 1.0);
            assert!(rel(b, beta_oracle(ALPHA, r, 1.0)) < 1e-6, "Q/m = {r}");
        }
    }

    #[test]
    fn continuous_at_crossover() {
        let c = DEFAULT_CROSSOVER;
        let below = beta_single(ALPHA, c * (1.0 - 1e-12), 1.0);
        let above = beta_single(ALPHA, c * (1.0 + 1e-12), 1.0);
        assert!(rel(below, above) < 1e-6);
    }

    #[test]
    fn leading_term_agrees_below_crossover() {
        for i in 0..=20 {
            let r = 10f64.powf(-3.0 + i as f64 / 20.0);
            let closed = beta_single(ALPHA, r, 1.0);
            let leading = 2.0 * ALPHA * ALPHA * r * r / (15.0 * PI);
            assert!(rel(closed, leading) < 1e-3, "Q/m = {r}");
        }
    }

    #[test]
    fn total_weights_and_bounds() {
        let model = BetaModel::default();
        // Σ N_c Q_f² = 3·1 + 3·3·(4/9) + 3·3·(1/9) = 8
        let high = model.beta_total(ALPHA, 1e7);
        assert!(rel(high, 8.0 * massless_beta(ALPHA)) < 1e-3);
        let mid = model.beta_total(ALPHA, 1.0);
        assert!(mid > 2.0 * massless_beta(ALPHA) && mid < 8.0 * massless_beta(ALPHA));
    }

    #[test]
    fn bad_crossover_rejected() {
        assert!(BetaModel::new(ParticleTable::default(), 0.2).is_err());
        assert!(BetaModel::new(ParticleTable::default(), 0.0).is_err());
    }

    #[test]
    fn frozen_below_all_masses() {
        let curve = evolve_alpha(1e-6, &BetaModel::default(), &EvolveOptions::default()).unwrap();
        assert!((curve.last().alpha - ALPHA).abs() < 1e-10);
        assert_eq!(curve.len(), 1);
    }

    #[test]
    fn runs_to_z_mass() {
        let curve = evolve_alpha(91.1880, &BetaModel::default(), &EvolveOptions::default()).unwrap();
        assert!(curve.samples.windows(2).all(|w| w[1].alpha >= w[0].alpha && w[1].q > w[0].q));
        assert_eq!(curve.last().q, 91.1880);
        let inv = 1.0 / curve.last().alpha;
        // N_c·Q² weighting with the default masses; see the fit test for 128.89.
        assert!((inv - 128.165).abs() < 0.01, "{inv}");
    }

    #[test]
    fn electron_curve_stays_below_massless_solution() {
        let model = electron_only();
        let me = model.table.species[0].mass;
        let curve = evolve_alpha(1e3, &model, &EvolveOptions::default()).unwrap();
        for s in curve.samples.iter().filter(|s| s.q >= 10.0 * me) {
            let landau = landau_solution(s.q, me, ALPHA).unwrap();
            assert!(s.alpha <= landau * (1.0 + 1e-6), "Q = {}", s.q);
        }
    }

    #[test]
    fn tolerance_halving_is_stable() {
        let model = BetaModel::default();
        let base = EvolveOptions::default();
        let fine = EvolveOptions {
            ode: OdeOptions {
                rel_tol: base.ode.rel_tol / 2.0,
                ..base.ode
            },
            ..base
        };
        let a = inverse_alpha_at(&model, 1.0, 91.188, &base).unwrap();
        let b = inverse_alpha_at(&model, 1.0, 91.188, &fine).unwrap();
        assert!((a - b).abs() < 1e-4);
    }

    #[test]
    fn landau_values() {
        assert_eq!(landau_solution(1.0, 1.0, ALPHA).unwrap(), ALPHA);
        let e = std::f64::consts::E;
        let v = landau_solution(e, 1.0, ALPHA).unwrap();
        assert!(rel(v, ALPHA / (1.0 - 2.0 * ALPHA / (3.0 * PI))) < 1e-15);
        let pole = (3.0 * PI / (2.0 * ALPHA)).exp();
        assert!(matches!(landau_solution(0.999_999 * pole, 1.0, ALPHA), Err(Error::Singular(_))));
    }

    #[test]
    fn fit_reaches_target() {
        let opts = EvolveOptions::default();
        let fit = fit_light_quarks(&BetaModel::default(), 128.89, 91.188, &opts).unwrap();
        assert!((fit.achieved_inverse_alpha - 128.89).abs() < 1e-3);
        assert!((fit.scale_factor - 5.515).abs() < 0.01, "{}", fit.scale_factor);
    }

    #[test]
    fn fit_direction_and_failure() {
        let opts = EvolveOptions::default();
        let fit = fit_light_quarks(&BetaModel::default(), 129.5, 91.188, &opts).unwrap();
        assert!(fit.scale_factor > 1.0);
        let err = fit_light_quarks(&BetaModel::default(), 137.0, 91.188, &opts).unwrap_err();
        match err {
            Error::Root(msg) => assert!(msg.contains("unreachable")),
            other => panic!("unexpected {other:?}"),
        }
    }
}
