//! λφ⁴ effective potential with a wrong-sign mass term, at tree level plus
//! one loop, for the two choices of regulator constants.
//!
//! With M²(φ) = −σ + λφ²/2 the one-loop piece is the regulated quartic
//! integral evaluated at M²(φ). Derivatives in φ follow from the chain rule
//! with u = M², u' = λφ, u'' = λ:
//!
//! ```text
//! V₁'    = K G₁ u'
//! V₁''   = K (G₂ u'² + G₁ u'')
//! V₁'''  = K (G₃ u'³ + 3 G₂ u' u'')
//! V₁'''' = K (G₄ u'⁴ + 6 G₃ u'² u'' + 3 G₂ u''²)
//! ```
//!
//! where K G_k is the k-th M²-derivative of the regulated integral.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::regulator::{RegulatedQuarticIntegral, FOUR_PI_SQ};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialParams {
    /// [GeV²]
    pub sigma: f64,
    pub lambda: f64,
}

impl PotentialParams {
    pub fn new(sigma: f64, lambda: f64) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite() && lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::Validation(format!(
                "σ and λ must be positive (σ = {sigma}, λ = {lambda})"
            )));
        }
        Ok(Self { sigma, lambda })
    }

    /// Tree-level minimum √(6σ/λ).
    pub fn phi1(&self) -> f64 {
        (6.0 * self.sigma / self.lambda).sqrt()
    }

    pub fn m_sq(&self, phi: f64) -> f64 {
        -self.sigma + 0.5 * self.lambda * phi * phi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sector {
    Ssb,
    Symmetric,
}

impl Sector {
    pub fn name(self) -> &'static str {
        match self {
            Sector::Ssb => "ssb",
            Sector::Symmetric => "symmetric",
        }
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ssb" => Ok(Sector::Ssb),
            "symmetric" => Ok(Sector::Symmetric),
            _ => Err(Error::Validation(format!("unknown sector {s:?} (ssb|symmetric)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchemeConstants {
    /// −ln μ²; complex in the symmetric sector.
    pub c1: Complex64,
    /// [GeV²]
    pub c2: f64,
    /// [GeV⁴]
    pub c3: f64,
    pub sector: Sector,
}

impl SchemeConstants {
    pub fn for_sector(sector: Sector, p: &PotentialParams) -> Self {
        match sector {
            Sector::Ssb => ssb_scheme(p),
            Sector::Symmetric => symmetric_scheme(p),
        }
    }
}

/// Constants that keep the tree-level minimum and mass: V(φ₁) = V'(φ₁) = 0,
/// V''(φ₁) = 2σ.
pub fn ssb_scheme(p: &PotentialParams) -> SchemeConstants {
    let s = p.sigma;
    SchemeConstants {
        c1: Complex64::new(-(2.0 * s).ln(), 0.0),
        c2: 2.0 * s,
        c3: -s * s + FOUR_PI_SQ * 3.0 * s * s / p.lambda,
        sector: Sector::Ssb,
    }
}

/// Constants that make φ = 0 a real stationary point. C₁ = −ln(−σ) taken on
/// the principal branch, i.e. −ln σ − iπ.
pub fn symmetric_scheme(p: &PotentialParams) -> SchemeConstants {
    let s = p.sigma;
    SchemeConstants {
        c1: Complex64::new(-s.ln(), -std::f64::consts::PI),
        c2: -s,
        c3: -0.25 * s * s,
        sector: Sector::Symmetric,
    }
}

pub fn tree_potential(phi: f64, p: &PotentialParams) -> f64 {
    let phi2 = phi * phi;
    -0.5 * p.sigma * phi2 + p.lambda * phi2 * phi2 / 24.0
}

fn tree_derivative(phi: f64, order: u8, p: &PotentialParams) -> f64 {
    match order {
        0 => tree_potential(phi, p),
        1 => -p.sigma * phi + p.lambda * phi.powi(3) / 6.0,
        2 => -p.sigma + 0.5 * p.lambda * phi * phi,
        3 => p.lambda * phi,
        _ => p.lambda,
    }
}

fn regulated(phi: f64, p: &PotentialParams, c: &SchemeConstants) -> Result<RegulatedQuarticIntegral> {
    let m_sq = p.m_sq(phi);
    if m_sq == 0.0 {
        let root = (2.0 * p.sigma / p.lambda).sqrt();
        return Err(Error::Domain(format!(
            "M² vanishes at φ = ±{root}; the one-loop term is undefined there"
        )));
    }
    Ok(RegulatedQuarticIntegral::new(m_sq, c.c1, c.c2.into(), c.c3.into()))
}

/// V₀ + V₁ at φ.
pub fn one_loop_potential(phi: f64, p: &PotentialParams, c: &SchemeConstants) -> Result<Complex64> {
    potential_derivative(phi, 0, p, c)
}

/// dⁿV/dφⁿ for n in 0..=4.
pub fn potential_derivative(phi: f64, order: u8, p: &PotentialParams, c: &SchemeConstants) -> Result<Complex64> {
    if order > 4 {
        return Err(Error::Validation(format!("derivative order {order} not supported (0..=4)")));
    }
    let reg = regulated(phi, p, c)?;
    let g = |k: u8| reg.derivative(k);
    let (u1, u2) = (p.lambda * phi, p.lambda);
    let loop_part = match order {
        0 => g(0)?,
        1 => g(1)? * u1,
        2 => g(2)? * u1 * u1 + g(1)? * u2,
        3 => g(3)? * u1.powi(3) + g(2)? * (3.0 * u1 * u2),
        _ => g(4)? * u1.powi(4) + g(3)? * (6.0 * u1 * u1 * u2) + g(2)? * (3.0 * u2 * u2),
    };
    Ok(loop_part + tree_derivative(phi, order, p))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SectorReport {
    pub sector: Sector,
    pub phi: f64,
    pub v: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
    pub d3: Complex64,
    pub d4: Complex64,
}

impl SectorReport {
    pub fn derivative(&self, order: u8) -> Option<Complex64> {
        match order {
            0 => Some(self.v),
            1 => Some(self.d1),
            2 => Some(self.d2),
            3 => Some(self.d3),
            4 => Some(self.d4),
            _ => None,
        }
    }
}

pub fn sector_report(phi: f64, p: &PotentialParams, c: &SchemeConstants) -> Result<SectorReport> {
    let d = |k| potential_derivative(phi, k, p, c);
    Ok(SectorReport {
        sector: c.sector,
        phi,
        v: d(0)?,
        d1: d(1)?,
        d2: d(2)?,
        d3: d(3)?,
        d4: d(4)?,
    })
}

/// Both columns of the SSB table: φ₁ and φ₀ = 0 under the given constants.
pub fn phase_table(p: &PotentialParams, c: &SchemeConstants) -> Result<[SectorReport; 2]> {
    Ok([sector_report(p.phi1(), p, c)?, sector_report(0.0, p, c)?])
}

/// d⁴V/dφ⁴ at φ₁ in the SSB sector: λ(1 + 9λ/(2(4π)²)).
pub fn lambda_renormalized(p: &PotentialParams) -> f64 {
    p.lambda * (1.0 + 9.0 * p.lambda / (2.0 * FOUR_PI_SQ))
}

/// 3m_σ²/φ₁².
pub fn mass_ratio_identity(m_sigma: f64, phi1: f64) -> Result<f64> {
    if !(phi1 > 0.0) {
        return Err(Error::Validation(format!("φ₁ must be positive, got {phi1}")));
    }
    Ok(3.0 * m_sigma * m_sigma / (phi1 * phi1))
}
