//! Hydrogenlike levels: Dirac energies with the electron mass replaced by
//! the reduced mass, and the noncovariant radiative p⁴ shift behind the
//! 2S₁/₂–2P₁/₂ Lamb shift.
//!
//! Energies are in MeV unless a name says otherwise.

use std::f64::consts::{LN_2, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::EV_TO_HZ;

/// Coefficient of α/(πμ³) quoted for the renormalized b₂.
pub const QUOTED_B2R_COEFFICIENT: f64 = 1.99808;

/// Default nuclear-size contribution to the 2S–2P splitting [MHz].
pub const DEFAULT_NUCLEAR_MHZ: f64 = 0.10;

pub fn mev_to_hz(e: f64) -> f64 {
    e * 1e6 * EV_TO_HZ
}

pub fn mev_to_mhz(e: f64) -> f64 {
    mev_to_hz(e) * 1e-6
}

pub fn mhz_to_mev(f: f64) -> f64 {
    f * 1e6 / EV_TO_HZ * 1e-6
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AtomConfig {
    pub z: u32,
    /// [MeV]
    pub nuclear_mass: f64,
    pub n: u32,
    pub l: u32,
    /// 2j, so that j = 1/2 is stored as 1.
    pub two_j: u32,
}

impl AtomConfig {
    pub fn new(z: u32, nuclear_mass: f64, n: u32, l: u32, two_j: u32) -> Result<Self> {
        let cfg = Self {
            z,
            nuclear_mass,
            n,
            l,
            two_j,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.z == 0 || !(self.nuclear_mass > 0.0) {
            return Err(Error::Validation("need Z ≥ 1 and a positive nuclear mass".into()));
        }
        if self.n == 0 || self.l >= self.n {
            return Err(Error::Validation(format!(
                "need n ≥ 1 and 0 ≤ l < n (n = {}, l = {})",
                self.n, self.l
            )));
        }
        let ok = self.two_j == 2 * self.l + 1 || (self.l > 0 && self.two_j == 2 * self.l - 1);
        if !ok {
            return Err(Error::Validation(format!(
                "j = {}/2 is not l ± 1/2 for l = {}",
                self.two_j, self.l
            )));
        }
        Ok(())
    }

    pub fn j(&self) -> f64 {
        self.two_j as f64 / 2.0
    }
}

/// m_e·m_N/(m_e + m_N).
pub fn reduced_mass(m_e: f64, m_n: f64) -> Result<f64> {
    if !(m_e > 0.0 && m_n > 0.0) {
        return Err(Error::Validation(format!("masses must be positive ({m_e}, {m_n})")));
    }
    if m_n.is_infinite() {
        return Ok(m_e);
    }
    Ok(m_e * m_n / (m_e + m_n))
}

/// Z²α²μ/(2n²).
pub fn bohr_binding(z: u32, n: u32, mu: f64, alpha: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Validation("n must be at least 1".into()));
    }
    let za = z as f64 * alpha;
    Ok(za * za * mu / (2.0 * (n as f64).powi(2)))
}

/// Dirac point-nucleus energy (binding part, negative) with m → μ.
pub fn rde_level(cfg: &AtomConfig, m_e: f64, alpha: f64) -> Result<f64> {
    cfg.validate()?;
    let mu = reduced_mass(m_e, cfg.nuclear_mass)?;
    let za = cfg.z as f64 * alpha;
    let k = cfg.j() + 0.5;
    if za >= k {
        return Err(Error::Domain(format!("Zα = {za} ≥ j + 1/2 = {k}")));
    }
    let delta = k - (k * k - za * za).sqrt();
    let x = za / (cfg.n as f64 - delta);
    // (1 + x²)^(−1/2) − 1 without cancellation
    let s = (1.0 + x * x).sqrt();
    Ok(-mu * x * x / (s * (1.0 + s)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Atom {
    H,
    D,
}

impl FromStr for Atom {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" | "h" => Ok(Atom::H),
            "D" | "d" => Ok(Atom::D),
            _ => Err(Error::Validation(format!("unknown atom {s:?} (H|D)"))),
        }
    }
}

/// 1S₁/₂ → 2S₁/₂ frequency [Hz] for a nucleus of mass `m_n`.
pub fn rde_1s2s_hz(m_e: f64, m_n: f64, alpha: f64) -> Result<f64> {
    let s1 = AtomConfig::new(1, m_n, 1, 0, 1)?;
    let s2 = AtomConfig::new(1, m_n, 2, 0, 1)?;
    Ok(mev_to_hz(rde_level(&s2, m_e, alpha)? - rde_level(&s1, m_e, alpha)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientMode {
    Formula,
    PaperConstant,
}

impl FromStr for CoefficientMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" => Ok(Self::Formula),
            "paper" | "paper_constant" => Ok(Self::PaperConstant),
            _ => Err(Error::Validation(format!("unknown b2r mode {s:?} (formula|paper_constant)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiativeCoefficients {
    /// Zero once C₁ = ln 2μ reconfirms μ. [MeV⁻¹]
    pub b1: f64,
    /// [MeV⁻³]
    pub b2: f64,
    /// Zero once C₃, C₄ are fixed.
    pub b0p: f64,
    /// [MeV⁻¹]
    pub b1p: f64,
    /// [MeV⁻³]
    pub b2p: f64,
    /// μ = μ_obs(1 + β)
    pub beta: f64,
    /// [MeV⁻³]
    pub b2r: f64,
    pub coefficient_mode: CoefficientMode,
}

impl RadiativeCoefficients {
    /// b2r in units of α/(πμ³).
    pub fn b2r_coefficient(&self, mu: f64, alpha: f64) -> f64 {
        self.b2r * PI * mu.powi(3) / alpha
    }
}

/// (g²α/2π)(4 ln 2/3 + 2)
pub fn mass_shift_ratio(g: f64, alpha: f64) -> f64 {
    g * g * alpha / (2.0 * PI) * (4.0 * LN_2 / 3.0 + 2.0)
}

/// Coefficients of the p² and p⁴ terms after the constants are fixed.
///
/// `mu` is used for μ and μ_obs alike, keeping only the lowest order in β.
pub fn radiative_coefficients(mu: f64, g: f64, alpha: f64, mode: CoefficientMode) -> Result<RadiativeCoefficients> {
    if !(mu > 0.0) {
        return Err(Error::Validation(format!("μ must be positive, got {mu}")));
    }
    let unit = alpha / (PI * mu.powi(3));
    let b2 = -2.0 / 15.0 * unit;
    let b2p = -(g * g / 4.0) / 15.0 * unit;
    let beta = mass_shift_ratio(g, alpha);
    // with C₂ = ln μ the p² coefficient keeps 2 + (4/3) ln 2
    let b1p = g * g / 4.0 * alpha / (PI * mu) * (4.0 / 3.0 * LN_2 + 2.0);
    let b2r = match mode {
        CoefficientMode::Formula => {
            b2 + b2p + (3.0 * beta + 3.0 * beta * beta + beta.powi(3)) / (8.0 * mu.powi(3))
        }
        CoefficientMode::PaperConstant => QUOTED_B2R_COEFFICIENT * unit,
    };
    Ok(RadiativeCoefficients {
        b1: 0.0,
        b2,
        b0p: 0.0,
        b1p,
        b2p,
        beta,
        b2r,
        coefficient_mode: mode,
    })
}

/// Denominator of the ⟨p⁴⟩ bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum P4Convention {
    /// 8n/(3l+1) − 3, the originally quoted form.
    Paper3l,
    /// 8n/(2l+1) − 3, the textbook hydrogenic expectation.
    Standard2l,
}

impl FromStr for P4Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "3l" | "paper_3l" => Ok(Self::Paper3l),
            "2l" | "standard_2l" => Ok(Self::Standard2l),
            _ => Err(Error::Validation(format!("unknown convention {s:?} (2l|3l)"))),
        }
    }
}

impl fmt::Display for P4Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Paper3l => "paper_3l",
            Self::Standard2l => "standard_2l",
        })
    }
}

pub fn p4_bracket(n: u32, l: u32, convention: P4Convention) -> f64 {
    let k = match convention {
        P4Convention::Paper3l => 3.0,
        P4Convention::Standard2l => 2.0,
    };
    8.0 * n as f64 / (k * l as f64 + 1.0) - 3.0
}

/// ⟨b₂ᴿ p⁴⟩ = bracket·b₂ᴿ Z⁴α⁴μ_obs⁴/n⁴ [MeV].
pub fn p4_level_shift(cfg: &AtomConfig, mu_obs: f64, b2r: f64, alpha: f64, convention: P4Convention) -> Result<f64> {
    cfg.validate()?;
    let za = cfg.z as f64 * alpha;
    Ok(p4_bracket(cfg.n, cfg.l, convention) * b2r * za.powi(4) * mu_obs.powi(4) / (cfg.n as f64).powi(4))
}

/// One-loop Uehling shift of an nS level, −4α(Zα)⁴m_e/(15πn³) [MeV].
pub fn uehling_s_shift(z: u32, n: u32, m_e: f64, alpha: f64) -> f64 {
    let za = z as f64 * alpha;
    -4.0 * alpha * za.powi(4) * m_e / (15.0 * PI * (n as f64).powi(3))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransitionReport {
    /// [Hz]
    pub baseline: f64,
    pub radiative: f64,
    pub vacuum_polarization: f64,
    pub nuclear_size: f64,
    pub total: f64,
}

impl TransitionReport {
    pub fn new(baseline: f64, radiative: f64, vacuum_polarization: f64, nuclear_size: f64) -> Self {
        Self {
            baseline,
            radiative,
            vacuum_polarization,
            nuclear_size,
            total: baseline + radiative + vacuum_polarization + nuclear_size,
        }
    }
}

/// 2S₁/₂ − 2P₁/₂ in hydrogen. `vp_mhz` and `nuclear_mhz` are external inputs.
///
/// The Dirac baseline is zero for this pair (same n and j).
pub fn lamb_2s_2p(
    mu_obs: f64,
    b2r: f64,
    alpha: f64,
    vp_mhz: f64,
    nuclear_mhz: f64,
    convention: P4Convention,
) -> Result<TransitionReport> {
    if ![mu_obs, b2r, vp_mhz, nuclear_mhz].iter().all(|v| v.is_finite()) {
        return Err(Error::Validation("Lamb shift inputs must be finite".into()));
    }
    // the nuclear mass only enters through mu_obs here
    let s = AtomConfig::new(1, f64::INFINITY, 2, 0, 1)?;
    let p = AtomConfig::new(1, f64::INFINITY, 2, 1, 1)?;
    let radiative = p4_level_shift(&s, mu_obs, b2r, alpha, convention)? - p4_level_shift(&p, mu_obs, b2r, alpha, convention)?;
    Ok(TransitionReport::new(
        0.0,
        mev_to_hz(radiative),
        vp_mhz * 1e6,
        nuclear_mhz * 1e6,
    ))
}
