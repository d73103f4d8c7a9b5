//! Checks that cut across module boundaries, through the public API only.

use rrm_core::effpot::{self, PotentialParams};
use rrm_core::numerics::{OdeOptions, QuadratureSpec};
use rrm_core::qcd::{self, MassiveQcdModel, QcdScheme};
use rrm_core::qed::{self, BetaModel, EvolveOptions};
use rrm_core::regulator::{self, RegulatedQuarticIntegral, FOUR_PI_SQ};
use rrm_core::units::{load_particle_table, ALPHA_CODATA};
use rrm_core::{lamb, self_energy, Error, ParticleTable};

#[test]
fn bundled_table_survives_a_file_round_trip() {
    let table = ParticleTable::default();
    assert_eq!(table.len(), 9);
    assert_eq!(table.get("b").unwrap().mass, 4.326);
    let dir = std::env::temp_dir().join(format!("rrm-core-table-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("particles.toml");
    std::fs::write(&path, table.to_toml()).unwrap();
    let back = load_particle_table(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(back, table);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn bad_tables_name_the_culprit() {
    assert!(matches!(load_particle_table(""), Err(Error::Validation(m)) if m.contains("no species")));
    let neg = ParticleTable::default()
        .to_toml()
        .replace("mass_gev = 0.008", "mass_gev = -0.008");
    assert!(matches!(load_particle_table(&neg), Err(Error::Validation(m)) if m.contains("\"u\"") || m.contains(" u")));
}

#[test]
fn regulator_oracle_ignores_scheme_constants() {
    let spec = QuadratureSpec::default();
    for m_sq in [0.01, 0.5, 7.0] {
        let oracle = regulator::quartic_third_derivative_oracle(m_sq, &spec).unwrap();
        let closed = RegulatedQuarticIntegral::real(m_sq, 0.3, -1.0, 2.0).derivative(3).unwrap().re;
        assert!((oracle / closed - 1.0).abs() < 1e-8);
        assert!((closed - 1.0 / (2.0 * FOUR_PI_SQ * m_sq)).abs() < 1e-15 / m_sq);
    }
}

#[test]
fn ssb_constants_feed_through_to_renormalized_coupling() {
    for (s, l) in [(1.0, 0.5), (0.25, 1.0), (4.0, 0.1)] {
        let p = PotentialParams::new(s, l).unwrap();
        let r = effpot::sector_report(p.phi1(), &p, &effpot::ssb_scheme(&p)).unwrap();
        assert!((r.d4.re - effpot::lambda_renormalized(&p)).abs() < 1e-12);
        let m_sigma = r.d2.re.sqrt();
        assert!((effpot::mass_ratio_identity(m_sigma, p.phi1()).unwrap() - l).abs() < 1e-12);
    }
}

#[test]
fn qed_curve_interpolates_between_thresholds() {
    let curve = qed::evolve_alpha(10.0, &BetaModel::default(), &EvolveOptions::default()).unwrap();
    let a1 = curve.interpolate(1.0).unwrap();
    let a5 = curve.interpolate(5.0).unwrap();
    assert!(a1 < a5 && a5 < curve.last().alpha);
    assert!(curve.interpolate(20.0).is_none());
    // no charged fermion below 0.1 MeV: still at the Thomson value to 1e-9
    assert!((curve.interpolate(1e-5).unwrap() - rrm_core::units::ALPHA_THOMSON).abs() < 1e-9);
}

#[test]
fn massive_qcd_curves_share_the_anchor() {
    let mut last = Vec::new();
    for flavor in ["u", "c", "b", "t"] {
        let m = MassiveQcdModel::for_flavor(flavor).unwrap();
        let r = qcd::evolve_alpha_s_massive(&m, 5.0, 50, &OdeOptions::default()).unwrap();
        last.push(r.curve.last());
    }
    assert!(last.iter().all(|s| s.q == qcd::M_Z && s.alpha == 0.118));
    let scheme = QcdScheme::from_alpha_mz(0.118, 5).unwrap();
    assert!((qcd::alpha_s_lambda(qcd::M_Z, &scheme).unwrap() - 0.118).abs() < 1e-12);
}

#[test]
fn self_energy_and_lamb_share_the_bohr_scale() {
    // ζ^<S> reproduces −Z²α²μ/2n² and the Bohr binding uses the same expression.
    let mu = lamb::reduced_mass(0.510_998_95, 938.272_088_16).unwrap();
    for n in [1, 2, 4] {
        let zeta = self_energy::zeta_self_energy(1, n, ALPHA_CODATA).unwrap();
        let shift = self_energy::delta_mu_off_shell(zeta, mu, ALPHA_CODATA).unwrap();
        let bohr = lamb::bohr_binding(1, n, mu, ALPHA_CODATA).unwrap();
        assert!((shift + bohr).abs() < 1e-10 * bohr);
    }
}
