use std::path::{Path, PathBuf};

use serde::Deserialize;

use rrm_core::numerics::OdeOptions;
use rrm_core::units::load_particle_table;
use rrm_core::{Error, ParticleTable, PhysicalConstants, Result};

use crate::output::Format;

/// Contents of a `--config` file. Every field is optional.
///
/// ```toml
/// format = "csv"
/// table = "my_particles.toml"
///
/// [constants]
/// alpha = 0.0072973525
///
/// [tolerances]
/// ode_rel_tol = 1e-11
/// ```
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub table: Option<PathBuf>,
    #[serde(default)]
    pub constants: PhysicalConstants,
    #[serde(default)]
    pub tolerances: Tolerances,
}

#[derive(Debug, Default, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    pub ode_rel_tol: Option<f64>,
    pub ode_abs_tol: Option<f64>,
    pub crossover_ratio: Option<f64>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Validation(format!("cannot read config {}: {e}", path.display())))?;
        let cfg: Self = toml::from_str(&text).map_err(|e| Error::Parse {
            line: e.span().map(|s| text[..s.start].matches('\n').count() + 1).unwrap_or(0),
            message: format!("{}: {}", path.display(), e.message()),
        })?;
        cfg.constants.validate()?;
        Ok(cfg)
    }

    pub fn ode_options(&self, rel_tol: Option<f64>) -> Result<OdeOptions> {
        let mut opts = OdeOptions::default();
        if let Some(r) = rel_tol.or(self.tolerances.ode_rel_tol) {
            opts.rel_tol = r;
        }
        if let Some(a) = self.tolerances.ode_abs_tol {
            opts.abs_tol = a;
        }
        if !(opts.rel_tol > 0.0 && opts.abs_tol > 0.0) {
            return Err(Error::Validation("ODE tolerances must be positive".into()));
        }
        Ok(opts)
    }

    /// `flag` wins over the config file, which wins over the bundled table.
    pub fn particle_table(&self, flag: Option<&Path>) -> Result<ParticleTable> {
        match flag.or(self.table.as_deref()) {
            None => Ok(ParticleTable::default()),
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Error::Validation(format!("cannot read particle table {}: {e}", path.display()))
                })?;
                load_particle_table(&text)
            }
        }
    }
}
