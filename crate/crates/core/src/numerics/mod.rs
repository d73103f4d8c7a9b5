//! Numerical building blocks shared by the physics modules.

pub mod ode;
pub mod quadrature;
pub mod roots;

pub use ode::{OdeOptions, Trajectory};
pub use quadrature::{Quadrature, QuadratureSpec};
