//! Regulated divergent loop integrals.
//!
//! A divergent integral is differentiated with respect to its mass-square
//! parameter until it converges, then integrated back. Each integration
//! leaves an arbitrary constant, and those constants are kept as explicit
//! fields here; fixing them is the job of the physics modules.
//!
//! Two families are covered:
//!
//! * the two-propagator logarithmic integral ∫d⁴K/(2π)⁴ (K² − M²)⁻², whose
//!   M²-derivative is −i/((4π)² M²);
//! * the one-loop vacuum energy ½∫d⁴k_E/(2π)⁴ ln(k_E² + M²), whose third
//!   M²-derivative is 1/(2(4π)² M²).
//!
//! The oracles evaluate the convergent derivatives as Euclidean radial
//! integrals after mapping k = M·tan θ onto θ ∈ [0, π/2).

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::quadrature::{self, QuadratureSpec};

/// (4π)²
pub const FOUR_PI_SQ: f64 = 16.0 * PI * PI;

/// Principal-branch logarithm of a real mass-square: ln|x| + iπ for x < 0.
pub fn ln_mass_sq(m_sq: f64) -> Result<Complex64> {
    if m_sq == 0.0 || !m_sq.is_finite() {
        return Err(Error::Domain(format!("ln M² undefined at M² = {m_sq}")));
    }
    Ok(if m_sq > 0.0 {
        Complex64::new(m_sq.ln(), 0.0)
    } else {
        Complex64::new((-m_sq).ln(), PI)
    })
}

/// Regulated ∫d⁴K/(2π)⁴ (K² − M²)⁻² with constant C₁ = −ln μ².
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegulatedLogIntegral {
    /// M² [GeV²]
    pub m_sq: f64,
    pub c1: f64,
}

impl RegulatedLogIntegral {
    pub fn new(m_sq: f64, c1: f64) -> Self {
        Self { m_sq, c1 }
    }

    /// Closed form (−i/(4π)²)(ln M² + C₁).
    pub fn value(&self) -> Result<Complex64> {
        if !(self.m_sq > 0.0) {
            return Err(Error::Domain(format!(
                "log-divergent integral needs M² > 0, got {}",
                self.m_sq
            )));
        }
        let real_part = self.m_sq.ln() + self.c1;
        Ok(Complex64::new(0.0, -real_part / FOUR_PI_SQ))
    }

    /// ∂/∂M² of the closed form, −i/((4π)² M²).
    pub fn derivative(&self) -> Result<Complex64> {
        if !(self.m_sq > 0.0) {
            return Err(Error::Domain(format!("M² must be positive, got {}", self.m_sq)));
        }
        Ok(Complex64::new(0.0, -1.0 / (FOUR_PI_SQ * self.m_sq)))
    }
}

/// Free-function form of [`RegulatedLogIntegral::value`].
pub fn log_integral_value(i: &RegulatedLogIntegral) -> Result<Complex64> {
    i.value()
}

/// Regulated one-loop vacuum energy with constants C₁, C₂, C₃.
///
/// C₁ may be complex: a constant written as −ln(−σ) lives on the same
/// principal branch as [`ln_mass_sq`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegulatedQuarticIntegral {
    /// M² [GeV²]; negative values select the principal branch of ln M².
    pub m_sq: f64,
    pub c1: Complex64,
    /// [GeV²]
    pub c2: Complex64,
    /// [GeV⁴]
    pub c3: Complex64,
}

impl RegulatedQuarticIntegral {
    pub fn new(m_sq: f64, c1: Complex64, c2: Complex64, c3: Complex64) -> Self {
        Self { m_sq, c1, c2, c3 }
    }

    pub fn real(m_sq: f64, c1: f64, c2: f64, c3: f64) -> Self {
        Self::new(m_sq, c1.into(), c2.into(), c3.into())
    }

    /// (1/(2(4π)²))·{ (M⁴/2)(ln M² − ½) − M⁴/2 + C₁M⁴/2 + C₂M² + C₃ }
    pub fn value(&self) -> Result<Complex64> {
        self.derivative(0)
    }

    /// `order`-th derivative with respect to M², for `order` in 0..=4.
    pub fn derivative(&self, order: u8) -> Result<Complex64> {
        let ln = ln_mass_sq(self.m_sq)?;
        let m2 = self.m_sq;
        let m4 = m2 * m2;
        let g = match order {
            0 => 0.5 * m4 * (ln - 0.5) - 0.5 * m4 + 0.5 * self.c1 * m4 + self.c2 * m2 + self.c3,
            1 => m2 * (ln - 1.0 + self.c1) + self.c2,
            2 => ln + self.c1,
            3 => Complex64::new(1.0 / m2, 0.0),
            4 => Complex64::new(-1.0 / m4, 0.0),
            _ => {
                return Err(Error::Validation(format!(
                    "derivative order {order} not supported (0..=4)"
                )))
            }
        };
        Ok(g / (2.0 * FOUR_PI_SQ))
    }
}

/// Free-function form of [`RegulatedQuarticIntegral::value`].
pub fn quartic_integral_value(i: &RegulatedQuarticIntegral) -> Result<Complex64> {
    i.value()
}

/// ∫₀^∞ k³/(k²+M²)³ dk via k = M tan θ; the integrand becomes sin³θ cosθ / M².
fn radial_cubic_propagator(m_sq: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !(m_sq > 0.0 && m_sq.is_finite()) {
        return Err(Error::Domain(format!("oracle needs M² > 0, got {m_sq}")));
    }
    let m = m_sq.sqrt();
    let integrand = |theta: f64| {
        let k = m * theta.tan();
        let sec2 = 1.0 / theta.cos().powi(2);
        let denom = k * k + m_sq;
        if denom.is_finite() {
            k.powi(3) / denom.powi(3) * m * sec2
        } else {
            0.0
        }
    };
    Ok(quadrature::integrate(integrand, 0.0, FRAC_PI_2, spec)?.value)
}

/// Quadrature value of 2∫d⁴K_E/(2π)⁴ (K_E² + M²)⁻³, the magnitude of ∂I/∂M².
pub fn log_derivative_oracle(m_sq: f64, spec: &QuadratureSpec) -> Result<f64> {
    let solid_angle = 2.0 * PI * PI / (2.0 * PI).powi(4);
    Ok(2.0 * solid_angle * radial_cubic_propagator(m_sq, spec)?)
}

/// Quadrature value of ∫d⁴k_E/(2π)⁴ (k_E² + M²)⁻³.
pub fn quartic_third_derivative_oracle(m_sq: f64, spec: &QuadratureSpec) -> Result<f64> {
    let solid_angle = 2.0 * PI * PI / (2.0 * PI).powi(4);
    Ok(solid_angle * radial_cubic_propagator(m_sq, spec)?)
}
