//! Strong coupling: the one-loop Λ_QCD scheme, the μ-anchored solution and
//! its inverse, and a flavor-resolved evolution that keeps quark masses.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::curve::{CouplingCurve, CurveSample};
use crate::error::{Error, Result};
use crate::numerics::ode::{self, OdeOptions};
use crate::qed::{mass_function, DEFAULT_CROSSOVER};
use crate::units::ParticleTable;

/// Z mass used by the strong-coupling routines [GeV].
pub const M_Z: f64 = 91.1876;

/// ħc [GeV·fm].
pub const HBAR_C: f64 = 0.197_326_980_4;

/// Coupling beyond which the massive evolution is abandoned.
pub const BLOW_UP_ALPHA: f64 = 4.0 * PI;

pub fn beta0(n_f: u32) -> f64 {
    11.0 - 2.0 * n_f as f64 / 3.0
}

fn check_nf(n_f: u32) -> Result<()> {
    if !(3..=6).contains(&n_f) {
        return Err(Error::Validation(format!("n_f must be in 3..=6, got {n_f}")));
    }
    Ok(())
}

fn check_alpha(alpha: f64, what: &str) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Validation(format!("{what} must lie in (0, 1), got {alpha}")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QcdScheme {
    pub n_f: u32,
    pub beta0: f64,
    /// [GeV]
    pub lambda: f64,
}

impl QcdScheme {
    pub fn new(n_f: u32, lambda: f64) -> Result<Self> {
        check_nf(n_f)?;
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::Validation(format!("Λ must be positive, got {lambda}")));
        }
        Ok(Self {
            n_f,
            beta0: beta0(n_f),
            lambda,
        })
    }

    /// Scheme whose Λ reproduces `alpha_s_mz` at the Z mass.
    pub fn from_alpha_mz(alpha_s_mz: f64, n_f: u32) -> Result<Self> {
        Self::new(n_f, lambda_qcd(alpha_s_mz, n_f)?)
    }
}

/// Λ = M_Z·exp(−2π/(α_s(M_Z)·β₀)) in GeV.
pub fn lambda_qcd(alpha_s_mz: f64, n_f: u32) -> Result<f64> {
    check_alpha(alpha_s_mz, "α_s(M_Z)")?;
    check_nf(n_f)?;
    Ok(M_Z * (-2.0 * PI / (alpha_s_mz * beta0(n_f))).exp())
}

/// 2π/(β₀ ln(Q/Λ)).
pub fn alpha_s_lambda(q: f64, scheme: &QcdScheme) -> Result<f64> {
    if !(q > scheme.lambda) {
        return Err(Error::Singular(format!(
            "α_s diverges at Q ≤ Λ (Q = {q} GeV, Λ = {} GeV)",
            scheme.lambda
        )));
    }
    Ok(2.0 * PI / (scheme.beta0 * (q / scheme.lambda).ln()))
}

/// α_s(Q) from α_s(μ): α/(1 + α(β₀/2π)ln(Q/μ)).
pub fn alpha_s_mu(q: f64, mu: f64, alpha_mu: f64, n_f: u32) -> Result<f64> {
    check_nf(n_f)?;
    if !(q > 0.0 && mu > 0.0) {
        return Err(Error::Domain(format!("scales must be positive (Q = {q}, μ = {mu})")));
    }
    if !(alpha_mu > 0.0) {
        return Err(Error::Validation(format!("α_s(μ) must be positive, got {alpha_mu}")));
    }
    let denom = 1.0 + alpha_mu * beta0(n_f) / (2.0 * PI) * (q / mu).ln();
    if denom <= 0.0 {
        return Err(Error::Singular(format!(
            "pole between μ = {mu} GeV and Q = {q} GeV (denominator {denom:e})"
        )));
    }
    Ok(alpha_mu / denom)
}

/// Inverse map: α_s(μ) from α_s(Q). Same form with the scales swapped.
pub fn alpha_s_mu_inverse(q: f64, mu: f64, alpha_q: f64, n_f: u32) -> Result<f64> {
    alpha_s_mu(mu, q, alpha_q, n_f)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MassiveQcdModel {
    pub table: ParticleTable,
    pub alpha_s_mz: f64,
    /// Name of the probed quark. Quarks no heavier than it are active.
    pub flavor: String,
}

impl MassiveQcdModel {
    /// Bundled quark masses, anchored at α_s(M_Z) = 0.118.
    pub fn for_flavor(flavor: &str) -> Result<Self> {
        let model = Self {
            table: quarks_only(&ParticleTable::default())?,
            alpha_s_mz: 0.118,
            flavor: flavor.to_string(),
        };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<()> {
        check_alpha(self.alpha_s_mz, "α_s(M_Z)")?;
        self.table.validate()?;
        if let Some(s) = self.table.species.iter().find(|s| !s.is_quark()) {
            return Err(Error::Validation(format!("{} is not a quark", s.name)));
        }
        self.probe_mass().map(|_| ())
    }

    fn probe_mass(&self) -> Result<f64> {
        self.table
            .get(&self.flavor)
            .map(|s| s.mass)
            .ok_or_else(|| Error::Validation(format!("unknown quark flavor {:?}", self.flavor)))
    }

    /// Masses of the quarks that run in the loop for this probe.
    pub fn active_masses(&self) -> Result<Vec<f64>> {
        let probe = self.probe_mass()?;
        Ok(self
            .table
            .species
            .iter()
            .filter(|s| s.mass <= probe)
            .map(|s| s.mass)
            .collect())
    }

    /// Q dα_s/dQ = −(α_s²/2π)[11 − (2/3)Σ F(Q, m_q)].
    pub fn beta(&self, alpha: f64, q: f64, masses: &[f64]) -> f64 {
        let quarks: f64 = masses.iter().map(|&m| mass_function(q, m, DEFAULT_CROSSOVER)).sum();
        -alpha * alpha / (2.0 * PI) * (11.0 - 2.0 / 3.0 * quarks)
    }
}

/// Keeps the quarks of a table.
pub fn quarks_only(table: &ParticleTable) -> Result<ParticleTable> {
    ParticleTable::new(table.quarks().cloned().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlowUp {
    /// Lowest Q reached with α_s ≤ 4π [GeV].
    pub q_last: f64,
    pub alpha_last: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MassiveRun {
    /// Ordered by increasing Q.
    pub curve: CouplingCurve,
    /// Interior maximum (Λ_i, α_max), when the curve turns over.
    pub peak: Option<CurveSample>,
    pub blow_up: Option<BlowUp>,
}

/// Evolves α_s downward from M_Z to `q_min` on `steps` log-spaced intervals.
///
/// Stops early if α_s exceeds 4π; the run then carries a [`BlowUp`] with the
/// last valid point rather than failing.
pub fn evolve_alpha_s_massive(
    model: &MassiveQcdModel,
    q_min: f64,
    steps: usize,
    opts: &OdeOptions,
) -> Result<MassiveRun> {
    model.validate()?;
    if !(q_min > 0.0 && q_min < M_Z) {
        return Err(Error::Domain(format!("q_min must lie in (0, {M_Z}), got {q_min}")));
    }
    if steps == 0 {
        return Err(Error::Validation("steps must be positive".into()));
    }
    let masses = model.active_masses()?;
    let rhs = |t: f64, a: f64| model.beta(a, t.exp(), &masses);
    let (t_hi, t_lo) = (M_Z.ln(), q_min.ln());
    let dt = (t_lo - t_hi) / steps as f64;

    let mut down = vec![CurveSample {
        q: M_Z,
        alpha: model.alpha_s_mz,
    }];
    let mut blow_up = None;
    let (mut t, mut a) = (t_hi, model.alpha_s_mz);
    for i in 1..=steps {
        let t_next = if i == steps { t_lo } else { t_hi + dt * i as f64 };
        let traj = ode::integrate(rhs, t, a, t_next, opts, |_, y| !(y <= BLOW_UP_ALPHA))?;
        if traj.stopped {
            let (tl, al) = traj.last();
            blow_up = Some(BlowUp {
                q_last: tl.exp(),
                alpha_last: al,
            });
            if tl < t {
                down.push(CurveSample { q: tl.exp(), alpha: al });
            }
            break;
        }
        t = t_next;
        a = traj.last().1;
        let q = if i == steps { q_min } else { t.exp() };
        down.push(CurveSample { q, alpha: a });
    }
    down.reverse();
    let curve = CouplingCurve::new(format!("qcd-massive[{}]", model.flavor), down)?;
    let peak = interior_peak(&curve);
    Ok(MassiveRun {
        curve,
        peak,
        blow_up,
    })
}

fn interior_peak(curve: &CouplingCurve) -> Option<CurveSample> {
    let n = curve.len();
    let best = curve.maximum();
    let at_edge = best == curve.first() || best == curve.last();
    (n >= 3 && !at_edge).then_some(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdEstimate {
    /// [GeV]
    pub lambda_i: f64,
    pub alpha_max: f64,
    /// ħc/Λ_i [fm]
    pub length_scale: f64,
    /// α_max·Λ_i [GeV]
    pub energy: f64,
}

pub fn hadronization_threshold(lambda_i: f64, alpha_max: f64) -> Result<ThresholdEstimate> {
    if !(lambda_i > 0.0 && alpha_max > 0.0) {
        return Err(Error::Validation(format!(
            "Λ_i and α_max must be positive (got {lambda_i}, {alpha_max})"
        )));
    }
    Ok(ThresholdEstimate {
        lambda_i,
        alpha_max,
        length_scale: HBAR_C / lambda_i,
        energy: alpha_max * lambda_i,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lambda_values() {
        let mev: Vec<f64> = (3..=6).map(|nf| lambda_qcd(0.1176, nf).unwrap() * 1e3).collect();
        for (got, want) in mev.iter().zip([240.85, 149.79, 85.777, 44.170]) {
            assert!((got - want).abs() < 5e-3 * want, "{got} vs {want}");
        }
        assert!(mev.windows(2).all(|w| w[1] < w[0]));
        assert!(lambda_qcd(0.1176, 7).is_err());
        assert!(lambda_qcd(1.2, 5).is_err());
    }

    #[test]
    fn lambda_round_trip() {
        for x in [0.10, 0.1176, 0.13] {
            let s = QcdScheme::from_alpha_mz(x, 5).unwrap();
            assert!((alpha_s_lambda(M_Z, &s).unwrap() - x).abs() < 1e-12);
        }
    }

    #[test]
    fn lambda_form_at_10_gev() {
        let s = QcdScheme::new(5, 0.0858).unwrap();
        assert!((alpha_s_lambda(10.0, &s).unwrap() - 0.1722).abs() < 5e-4);
        assert!(matches!(alpha_s_lambda(0.0858, &s), Err(Error::Singular(_))));
    }

    #[test]
    fn mu_form_examples() {
        assert_eq!(alpha_s_mu(5.0, 5.0, 0.2, 5).unwrap(), 0.2);
        // 0.1176/(1 − 0.1176·(23/3)/(2π)·ln(91.1876/10))
        let v = alpha_s_mu(10.0, M_Z, 0.1176, 5).unwrap();
        assert!((v - 0.172_22).abs() < 1e-5, "{v}");
        assert!(matches!(alpha_s_mu(1e-30, 10.0, 0.5, 5), Err(Error::Singular(_))));
    }

    #[test]
    fn inversion_grid() {
        let grid: Vec<f64> = (0..5).map(|i| 1.0 + (M_Z - 1.0) * i as f64 / 4.0).collect();
        for &q in &grid {
            for &mu in &grid {
                let aq = alpha_s_mu(q, mu, 0.1176, 5).unwrap();
                let back = alpha_s_mu_inverse(q, mu, aq, 5).unwrap();
                assert!((back - 0.1176).abs() < 1e-12);
            }
        }
    }

    proptest! {
        #[test]
        fn inversion_is_identity(lq in 0.0f64..5.0, lmu in 0.0f64..5.0, a in 0.05f64..0.3, nf in 3u32..=6) {
            let (q, mu) = (lq.exp(), lmu.exp());
            if let Ok(aq) = alpha_s_mu(q, mu, a, nf) {
                if let Ok(back) = alpha_s_mu_inverse(q, mu, aq, nf) {
                    prop_assert!((back - a).abs() < 1e-12 * a.max(1.0));
                }
            }
        }

        #[test]
        fn lambda_decreases_with_flavors(a in 0.05f64..0.5, nf in 3u32..6) {
            prop_assert!(lambda_qcd(a, nf + 1).unwrap() < lambda_qcd(a, nf).unwrap());
        }
    }

    #[test]
    fn massive_b_matches_five_flavor_form_at_high_q() {
        let model = MassiveQcdModel::for_flavor("b").unwrap();
        let run = evolve_alpha_s_massive(&model, 1.0, 400, &OdeOptions::default()).unwrap();
        let scheme = QcdScheme::from_alpha_mz(0.118, 5).unwrap();
        for s in run.curve.samples.iter().filter(|s| s.q >= 10.0) {
            let one_loop = alpha_s_lambda(s.q, &scheme).unwrap();
            assert!((s.alpha / one_loop - 1.0).abs() < 0.05, "Q = {}", s.q);
        }
        let over_10: Vec<_> = run.curve.samples.iter().filter(|s| s.q > 10.0).collect();
        assert!(over_10.windows(2).all(|w| w[1].alpha < w[0].alpha));
    }

    #[test]
    fn massive_runs_share_anchor_and_blow_up() {
        for f in ["u", "d", "s", "c", "b"] {
            let model = MassiveQcdModel::for_flavor(f).unwrap();
            let run = evolve_alpha_s_massive(&model, 1e-3, 200, &OdeOptions::default()).unwrap();
            assert_eq!(run.curve.last().q, M_Z);
            assert_eq!(run.curve.last().alpha, 0.118);
            let b = run.blow_up.expect("one-loop running diverges before 1 MeV");
            assert!(b.q_last > 0.1 && b.q_last < 1.0, "{f}: {}", b.q_last);
            assert!(b.alpha_last <= BLOW_UP_ALPHA);
            assert_eq!(run.curve.first().q, b.q_last);
        }
    }

    #[test]
    fn massive_rejects_bad_input() {
        assert!(MassiveQcdModel::for_flavor("e").is_err());
        let model = MassiveQcdModel::for_flavor("c").unwrap();
        assert!(evolve_alpha_s_massive(&model, 0.0, 10, &OdeOptions::default()).is_err());
        assert!(evolve_alpha_s_massive(&model, 1.0, 0, &OdeOptions::default()).is_err());
    }

    #[test]
    fn threshold_upsilon() {
        let t = hadronization_threshold(7.04, 0.161).unwrap();
        assert!((t.length_scale - 0.02805).abs() < 1e-4);
        assert!((t.energy - 1.13344).abs() < 1e-12);
        assert!((t.energy - 1.12).abs() / 1.12 < 0.02);
        let tiny = hadronization_threshold(1e-12, 0.161).unwrap();
        assert!(tiny.energy < 1e-12 && tiny.length_scale > 1e10);
        assert!(hadronization_threshold(0.0, 0.1).is_err());
    }
}
