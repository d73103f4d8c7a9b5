//! Physical constants, unit conversions and the charged-fermion table.
//!
//! Energies are carried in GeV inside the running-coupling code. Atomic
//! quantities (electron, proton and deuteron masses) are kept in MeV, and
//! eV/Hz only appear when a level difference is turned into a frequency.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hz per eV (e/h).
pub const EV_TO_HZ: f64 = 2.417_989_242e14;

/// Fine-structure constant at the Thomson limit used as the QED boundary value.
pub const ALPHA_THOMSON: f64 = 1.0 / 137.035_99;

/// CODATA 2006 fine-structure constant, used for bound-state quantities.
pub const ALPHA_CODATA: f64 = 1.0 / 137.035_999_679;

const DEFAULT_TABLE: &str = include_str!("../data/particles.toml");

/// Value object holding every constant the physics modules read.
///
/// Nothing reads constants from global state; callers pass this around so
/// that tests can vary α or g independently.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PhysicalConstants {
    pub alpha: f64,
    pub alpha_codata: f64,
    /// Z mass at which α(M_Z) is quoted [GeV].
    pub m_z_qed: f64,
    /// Z mass at which α_s(M_Z) is quoted [GeV].
    pub m_z_qcd: f64,
    pub sin2_theta_w: f64,
    pub ev_to_hz: f64,
    /// [MeV]
    pub electron_mass: f64,
    /// [MeV]
    pub proton_mass: f64,
    /// [MeV]
    pub deuteron_mass: f64,
    pub g_factor: f64,
    /// ħc [GeV·fm]
    pub hbar_c: f64,
    pub alpha_s_mz: f64,
    /// Common anchor of the mass-dependent α_s curves.
    pub alpha_s_anchor: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            alpha: ALPHA_THOMSON,
            alpha_codata: ALPHA_CODATA,
            m_z_qed: 91.1880,
            m_z_qcd: 91.1876,
            sin2_theta_w: 0.2317,
            ev_to_hz: EV_TO_HZ,
            electron_mass: 0.510_998_95,
            proton_mass: 938.272_088_16,
            deuteron_mass: 1875.612_942_57,
            g_factor: 2.0 * 1.001_159_652_2,
            hbar_c: 0.197_326_980_4,
            alpha_s_mz: 0.1176,
            alpha_s_anchor: 0.118,
        }
    }
}

impl PhysicalConstants {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("alpha", self.alpha),
            ("alpha_codata", self.alpha_codata),
            ("m_z_qed", self.m_z_qed),
            ("m_z_qcd", self.m_z_qcd),
            ("ev_to_hz", self.ev_to_hz),
            ("electron_mass", self.electron_mass),
            ("proton_mass", self.proton_mass),
            ("deuteron_mass", self.deuteron_mass),
            ("hbar_c", self.hbar_c),
            ("alpha_s_mz", self.alpha_s_mz),
            ("alpha_s_anchor", self.alpha_s_anchor),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Validation(format!("{name} must be positive, got {v}")));
            }
        }
        if !(2.0..=2.01).contains(&self.g_factor) {
            return Err(Error::Validation(format!(
                "g_factor must lie in [2.0, 2.01], got {}",
                self.g_factor
            )));
        }
        if !(0.0..1.0).contains(&self.sin2_theta_w) {
            return Err(Error::Validation(format!(
                "sin2_theta_w must lie in [0, 1), got {}",
                self.sin2_theta_w
            )));
        }
        Ok(())
    }

    /// Converts an energy in eV to a frequency in Hz.
    pub fn energy_to_frequency(&self, ev: f64) -> f64 {
        ev * self.ev_to_hz
    }
}

/// Converts an energy in eV to Hz with the default conversion factor.
pub fn energy_to_frequency(ev: f64) -> f64 {
    ev * EV_TO_HZ
}

/// Electric charge in units of e, stored exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Charge(pub Ratio<i32>);

impl Charge {
    pub fn new(numer: i32, denom: i32) -> Self {
        Self(Ratio::new(numer, denom))
    }

    /// Q² as an exact rational.
    pub fn squared(&self) -> Ratio<i32> {
        self.0 * self.0
    }

    fn is_allowed(&self) -> bool {
        [Ratio::from_integer(-1), Ratio::new(2, 3), Ratio::new(-1, 3)].contains(&self.0)
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Charge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ratio::<i32>::from_str(s.trim())
            .map(Charge)
            .map_err(|_| Error::Validation(format!("charge {s:?} is not a rational like \"-1/3\"")))
    }
}

impl Serialize for Charge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Charge {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FermionSpecies {
    pub name: String,
    /// [GeV]
    #[serde(rename = "mass_gev")]
    pub mass: f64,
    pub charge: Charge,
    pub color: u32,
}

impl FermionSpecies {
    /// N_c·Q², the weight of this species in a vacuum-polarization sum.
    pub fn charge_weight(&self) -> f64 {
        let q2 = self.charge.squared();
        self.color as f64 * (*q2.numer() as f64) / (*q2.denom() as f64)
    }

    pub fn is_quark(&self) -> bool {
        self.color == 3
    }

    fn validate(&self) -> Result<()> {
        if !(self.mass > 0.0 && self.mass.is_finite()) {
            return Err(Error::Validation(format!(
                "species {:?}: mass must be positive, got {} GeV",
                self.name, self.mass
            )));
        }
        if !self.charge.is_allowed() {
            return Err(Error::Validation(format!(
                "species {:?}: illegal charge {} (allowed: -1, 2/3, -1/3)",
                self.name, self.charge
            )));
        }
        if self.color != 1 && self.color != 3 {
            return Err(Error::Validation(format!(
                "species {:?}: color multiplicity must be 1 or 3, got {}",
                self.name, self.color
            )));
        }
        Ok(())
    }
}

/// Ordered list of charged fermions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParticleTable {
    #[serde(default)]
    pub species: Vec<FermionSpecies>,
}

impl Default for ParticleTable {
    fn default() -> Self {
        load_particle_table(DEFAULT_TABLE).expect("bundled particle table is valid")
    }
}

impl ParticleTable {
    pub fn new(species: Vec<FermionSpecies>) -> Result<Self> {
        let table = Self { species };
        table.validate()?;
        Ok(table)
    }

    pub fn validate(&self) -> Result<()> {
        if self.species.is_empty() {
            return Err(Error::Validation("particle table has no species".into()));
        }
        let mut seen = HashSet::new();
        for sp in &self.species {
            sp.validate()?;
            if !seen.insert(sp.name.as_str()) {
                return Err(Error::Validation(format!("species {:?} listed twice", sp.name)));
            }
        }
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&FermionSpecies> {
        self.species.iter().find(|s| s.name == name)
    }

    pub fn quarks(&self) -> impl Iterator<Item = &FermionSpecies> {
        self.species.iter().filter(|s| s.is_quark())
    }

    pub fn len(&self) -> usize {
        self.species.len()
    }

    pub fn is_empty(&self) -> bool {
        self.species.is_empty()
    }

    /// Renders the table in the same format `load_particle_table` reads.
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("particle table serializes")
    }
}

/// Parses and validates a particle table document.
pub fn load_particle_table(source: &str) -> Result<ParticleTable> {
    let table: ParticleTable = toml::from_str(source).map_err(|e| {
        let line = e
            .span()
            .map(|span| source[..span.start.min(source.len())].lines().count().max(1))
            .unwrap_or(0);
        Error::Parse {
            line,
            message: e.message().to_string(),
        }
    })?;
    table.validate()?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn default_table_has_nine_species() {
        let t = ParticleTable::default();
        assert_eq!(t.len(), 9);
        let names: Vec<_> = t.species.iter().map(|s| s.name.as_str()).collect();
        assert_eq!(names, ["e", "mu", "tau", "u", "d", "s", "c", "b", "t"]);
        assert_eq!(t.get("b").unwrap().mass, 4.326);
        assert_eq!(t.get("u").unwrap().mass, 0.008);
        assert_eq!(t.get("d").unwrap().mass, 0.010);
        assert_eq!(t.get("s").unwrap().mass, 0.200);
        assert_eq!(t.get("c").unwrap().mass, 1.031);
        assert_eq!(t.get("t").unwrap().mass, 175.0);
        assert_eq!(t.quarks().count(), 6);
    }

    #[test]
    fn charge_weights_sum_to_eight() {
        let total: f64 = ParticleTable::default().species.iter().map(|s| s.charge_weight()).sum();
        assert!((total - 8.0).abs() < 1e-14);
    }

    #[test]
    fn empty_document_rejected() {
        let err = load_particle_table("").unwrap_err();
        assert_eq!(err, Error::Validation("particle table has no species".into()));
    }

    #[test]
    fn negative_mass_names_species() {
        let doc = DEFAULT_TABLE.replace("mass_gev = 0.008", "mass_gev = -0.008");
        match load_particle_table(&doc).unwrap_err() {
            Error::Validation(msg) => assert!(msg.contains("\"u\""), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn illegal_charge_rejected() {
        let doc = "[[species]]\nname = \"x\"\nmass_gev = 1.0\ncharge = \"1/2\"\ncolor = 1\n";
        match load_particle_table(doc).unwrap_err() {
            Error::Validation(msg) => assert!(msg.contains("\"x\"") && msg.contains("1/2")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_error_reports_line() {
        let doc = "[[species]]\nname = \"e\"\nmass_gev = = 1\n";
        match load_particle_table(doc).unwrap_err() {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_field_is_a_parse_error() {
        let doc = "[[species]]\nname = \"e\"\nmass_gev = 1.0\ncolor = 1\n";
        assert!(matches!(load_particle_table(doc), Err(Error::Parse { .. })));
    }

    #[test]
    fn frequency_conversion() {
        assert_eq!(energy_to_frequency(0.0), 0.0);
        assert!((energy_to_frequency(1.0) - 2.417989e14).abs() / 2.417989e14 < 1e-6);
        assert!((energy_to_frequency(4.136e-9) - 1.0e6).abs() / 1.0e6 < 1e-3);
    }

    #[test]
    fn default_constants_valid() {
        let c = PhysicalConstants::default();
        c.validate().unwrap();
        assert_eq!(c.alpha, 1.0 / 137.03599);
        let bad = PhysicalConstants {
            g_factor: 2.5,
            ..c
        };
        assert!(bad.validate().is_err());
    }

    fn species_strategy() -> impl Strategy<Value = FermionSpecies> {
        (
            "[a-z]{1,6}",
            1e-6f64..1e3,
            prop::sample::select(vec![Charge::new(-1, 1), Charge::new(2, 3), Charge::new(-1, 3)]),
            prop::sample::select(vec![1u32, 3]),
        )
            .prop_map(|(name, mass, charge, color)| FermionSpecies {
                name,
                mass,
                charge,
                color,
            })
    }

    proptest! {
        #[test]
        fn table_round_trips(species in prop::collection::vec(species_strategy(), 1..12)) {
            let mut seen = HashSet::new();
            let species: Vec<_> = species.into_iter().filter(|s| seen.insert(s.name.clone())).collect();
            let table = ParticleTable::new(species).unwrap();
            let back = load_particle_table(&table.to_toml()).unwrap();
            prop_assert_eq!(back, table);
        }

        #[test]
        fn frequency_is_linear(a in -1e6f64..1e6, e in -1e3f64..1e3) {
            let lhs = energy_to_frequency(a * e);
            let rhs = a * energy_to_frequency(e);
            prop_assert!((lhs - rhs).abs() <= 1e-15 * rhs.abs().max(f64::MIN_POSITIVE));
        }
    }
}
