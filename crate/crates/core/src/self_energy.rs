//! One-loop electron self-energy Σ(p) = A + B·p̸ with the regulated
//! constant μ₂ fixed on the mass shell, and the off-shell parameter ζ
//! schemes for bound electrons.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::roots::brent;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SigmaCoefficients {
    /// Scalar part A, same unit as m.
    pub a: f64,
    /// Coefficient B of p̸.
    pub b: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MassRenormalization {
    pub delta_m: f64,
    pub z2: f64,
    pub mu2: f64,
}

/// One row of the off-shell parameter table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZetaRow {
    pub z: u32,
    pub n: u32,
    pub z_sq_over_n_sq: f64,
    pub zeta_s: f64,
    pub zeta_v: f64,
    pub zeta_sv_mean: f64,
    pub zeta_sv_geo: f64,
    pub minus_log_s: f64,
    pub minus_log_v: f64,
    pub minus_log_sv_mean: f64,
    pub minus_log_sv_geo: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZetaScheme {
    /// From the one-loop self-energy matched to the Bohr binding energy.
    S,
    /// From the virial theorem.
    V,
    /// Arithmetic mean of S and V.
    SPlusV,
    /// Geometric mean of S and V.
    SV,
}

impl ZetaScheme {
    pub const ALL: [ZetaScheme; 4] = [Self::S, Self::V, Self::SPlusV, Self::SV];

    pub fn label(&self) -> &'static str {
        match self {
            Self::S => "S",
            Self::V => "V",
            Self::SPlusV => "S+V",
            Self::SV => "SV",
        }
    }
}

impl std::str::FromStr for ZetaScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(Self::S),
            "V" | "v" => Ok(Self::V),
            "S+V" | "s+v" => Ok(Self::SPlusV),
            "SV" | "sv" => Ok(Self::SV),
            other => Err(Error::Validation(format!("unknown ζ scheme {other:?} (S, V, S+V, SV)"))),
        }
    }
}

impl ZetaRow {
    pub fn zeta(&self, scheme: ZetaScheme) -> f64 {
        match scheme {
            ZetaScheme::S => self.zeta_s,
            ZetaScheme::V => self.zeta_v,
            ZetaScheme::SPlusV => self.zeta_sv_mean,
            ZetaScheme::SV => self.zeta_sv_geo,
        }
    }

    pub fn minus_log(&self, scheme: ZetaScheme) -> f64 {
        match scheme {
            ZetaScheme::S => self.minus_log_s,
            ZetaScheme::V => self.minus_log_v,
            ZetaScheme::SPlusV => self.minus_log_sv_mean,
            ZetaScheme::SV => self.minus_log_sv_geo,
        }
    }
}

fn check_masses(m: f64, mu2: f64) -> Result<()> {
    if !(m > 0.0) || !(mu2 > 0.0) {
        return Err(Error::Domain(format!("need m > 0 and μ₂ > 0 (m = {m}, μ₂ = {mu2})")));
    }
    Ok(())
}

/// Σ(p) coefficients for 0 < p² ≤ m².
///
/// p² = m² takes the on-shell branch where the (m²−p²)ln(m²−p²) terms
/// are replaced by their zero limit.
pub fn sigma_coefficients(p_sq: f64, m: f64, mu2: f64, alpha: f64) -> Result<SigmaCoefficients> {
    check_masses(m, mu2)?;
    let m_sq = m * m;
    if p_sq > m_sq {
        return Err(Error::Domain(format!("p² = {p_sq} exceeds m² = {m_sq}")));
    }
    if !(p_sq > 0.0) {
        return Err(Error::Domain(format!("p² must be positive, got {p_sq}")));
    }
    let log_m = (m / mu2).ln();
    if p_sq == m_sq {
        return Ok(SigmaCoefficients {
            a: alpha / PI * m * (2.0 - 2.0 * log_m),
            b: alpha / (4.0 * PI) * (2.0 * log_m - 3.0),
        });
    }
    let gap = m_sq - p_sq;
    let r = gap / p_sq;
    let log_gap = (gap / m_sq).ln();
    Ok(SigmaCoefficients {
        a: alpha / PI * m * (2.0 - 2.0 * log_m + r * log_gap),
        b: alpha / (4.0 * PI) * (2.0 * log_m - 3.0 - r * (1.0 + (m_sq + p_sq) / p_sq * log_gap)),
    })
}

/// δm = (A + mB)/(1 − B).
pub fn mass_increment(p_sq: f64, m: f64, mu2: f64, alpha: f64) -> Result<f64> {
    let SigmaCoefficients { a, b } = sigma_coefficients(p_sq, m, mu2, alpha)?;
    if (1.0 - b).abs() < 1e-12 {
        return Err(Error::Singular(format!("B = {b} makes 1 − B vanish")));
    }
    Ok((a + m * b) / (1.0 - b))
}

/// Fixes μ₂ so that δm vanishes on the mass shell.
pub fn fix_on_shell(m: f64, alpha: f64) -> Result<MassRenormalization> {
    let mu2 = m * (-5.0f64 / 6.0).exp();
    let coeffs = sigma_coefficients(m * m, m, mu2, alpha)?;
    Ok(MassRenormalization {
        delta_m: mass_increment(m * m, m, mu2, alpha)?,
        z2: 1.0 / (1.0 - coeffs.b),
        mu2,
    })
}

fn delta_mu_ratio(zeta: f64, alpha: f64) -> f64 {
    alpha / (4.0 * PI) * (-zeta + 2.0 * zeta * zeta.ln()) / (1.0 + alpha / (3.0 * PI))
}

/// Leading-order mass shift of a bound electron with p² = μ²(1 − ζ).
pub fn delta_mu_off_shell(zeta: f64, mu: f64, alpha: f64) -> Result<f64> {
    if !(zeta > 0.0 && zeta < 0.1) {
        return Err(Error::Domain(format!(
            "ζ = {zeta} outside the small-ζ regime (0, 0.1)"
        )));
    }
    Ok(mu * delta_mu_ratio(zeta, alpha))
}

fn check_quantum_numbers(z: u32, n: u32) -> Result<()> {
    if z == 0 || n == 0 {
        return Err(Error::Validation(format!("need Z ≥ 1 and n ≥ 1 (Z = {z}, n = {n})")));
    }
    Ok(())
}

/// ζ^<S>: the ζ whose off-shell mass shift equals the Bohr level −Z²α²μ/(2n²).
pub fn zeta_self_energy(z: u32, n: u32, alpha: f64) -> Result<f64> {
    check_quantum_numbers(z, n)?;
    let ratio = (z as f64 / n as f64).powi(2);
    let target = -ratio * alpha * alpha / 2.0;
    // δμ/μ is monotone decreasing in ζ on this bracket; search in ln ζ.
    let f = |s: f64| delta_mu_ratio(s.exp(), alpha) - target;
    let s = brent(f, 1e-12f64.ln(), 0.099f64.ln(), 1e-15, 1e-14, 200)?;
    Ok(s.exp())
}

/// ζ^<V> = 2Z²α²/n².
pub fn zeta_virial(z: u32, n: u32, alpha: f64) -> Result<f64> {
    check_quantum_numbers(z, n)?;
    Ok(2.0 * (z as f64 / n as f64).powi(2) * alpha * alpha)
}

/// All four schemes for each (Z, n) pair.
pub fn zeta_table(rows: &[(u32, u32)], alpha: f64) -> Result<Vec<ZetaRow>> {
    rows.iter()
        .map(|&(z, n)| {
            check_quantum_numbers(z, n)?;
            if z > n {
                return Err(Error::Validation(format!("Z²/n² = {z}²/{n}² exceeds 1")));
            }
            let zeta_s = zeta_self_energy(z, n, alpha)?;
            let zeta_v = zeta_virial(z, n, alpha)?;
            let zeta_sv_mean = 0.5 * (zeta_s + zeta_v);
            let zeta_sv_geo = (zeta_s * zeta_v).sqrt();
            Ok(ZetaRow {
                z,
                n,
                z_sq_over_n_sq: (z as f64 / n as f64).powi(2),
                zeta_s,
                zeta_v,
                zeta_sv_mean,
                zeta_sv_geo,
                minus_log_s: -zeta_s.ln(),
                minus_log_v: -zeta_v.ln(),
                minus_log_sv_mean: -zeta_sv_mean.ln(),
                minus_log_sv_geo: -zeta_sv_geo.ln(),
            })
        })
        .collect()
}
