//! Regularization by differentiation with respect to a mass parameter,
//! and the renormalization case studies built on it: electron self-energy
//! and off-shell ζ schemes, QED and QCD running couplings, the λφ⁴
//! effective potential, and hydrogenic level shifts.

pub mod curve;
pub mod effpot;
pub mod error;
pub mod fixtures;
pub mod lamb;
pub mod numerics;
pub mod qcd;
pub mod qed;
pub mod regulator;
pub mod self_energy;
pub mod units;

pub use curve::{CouplingCurve, CurveSample};
pub use error::{Error, Result};
pub use units::{ParticleTable, PhysicalConstants};
