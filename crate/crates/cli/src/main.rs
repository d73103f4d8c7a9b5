mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rrm_core::effpot::{self, PotentialParams, SchemeConstants, Sector};
use rrm_core::fixtures::Fixtures;
use rrm_core::lamb::{self, Atom, CoefficientMode, P4Convention};
use rrm_core::qcd::{self, MassiveQcdModel};
use rrm_core::qed::{self, BetaModel, EvolveOptions};
use rrm_core::self_energy::{self, ZetaRow, ZetaScheme};
use rrm_core::Error;

use config::RunConfig;
use output::{aligned, csv, human, human_complex, json as to_json, key_values, num, Format, Sink};

const EXIT_VALIDATION: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;
const EXIT_USAGE: u8 = 64;

/// Regularization-renormalization lab: self-energy, running couplings,
/// effective potential and hydrogenic levels.
#[derive(Parser)]
#[command(name = "rrm-lab", version)]
struct Cli {
    /// TOML file with constants, tolerances and output defaults
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the result here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Suppress diagnostics on stderr
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the physical constants in effect
    Constants,
    /// Electron self-energy: off-shell ζ schemes and on-shell fixing
    #[command(subcommand)]
    Selfenergy(SelfEnergyCmd),
    /// QED running coupling with massive fermion loops
    #[command(subcommand)]
    Qed(QedCmd),
    /// QCD coupling: Λ, scale transfer, massive running, threshold
    #[command(subcommand)]
    Qcd(QcdCmd),
    /// One-loop λφ⁴ effective potential
    #[command(subcommand)]
    Effpot(EffpotCmd),
    /// Hydrogenic levels and the 2S–2P Lamb shift
    #[command(subcommand)]
    Lamb(LambCmd),
    /// Read-only reference values
    #[command(subcommand)]
    Fixtures(FixturesCmd),
}

#[derive(Subcommand)]
enum SelfEnergyCmd {
    /// Off-shell ζ for one (Z, n)
    Zeta {
        #[arg(long = "Z")]
        z: u32,
        #[arg(long)]
        n: u32,
        /// S, V, S+V, SV or all
        #[arg(long, default_value = "all")]
        scheme: String,
    },
    /// ζ for Z²/n² = 1/16, 1/4, 1
    Table,
    /// On-shell mass fixing for a fermion of mass m
    Onshell {
        #[arg(long, default_value_t = 1.0)]
        m: f64,
    },
}

#[derive(Subcommand)]
enum QedCmd {
    /// Evolve α from the Thomson limit to qmax
    Run {
        #[arg(long)]
        qmax: f64,
        #[command(flatten)]
        model: QedModelArgs,
    },
    /// Rescale the u, d, s masses to hit 1/α(M_Z) = target
    Fit {
        #[arg(long)]
        target: f64,
        #[command(flatten)]
        model: QedModelArgs,
    },
}

#[derive(Args)]
struct QedModelArgs {
    /// Particle table overriding the bundled one
    #[arg(long)]
    table: Option<PathBuf>,
    /// ODE relative tolerance
    #[arg(long)]
    rtol: Option<f64>,
}

#[derive(Subcommand)]
enum QcdCmd {
    /// Λ_QCD from α_s(M_Z)
    Lambda {
        #[arg(long, default_value_t = 0.1176)]
        alpha: f64,
        #[arg(long)]
        nf: u32,
    },
    /// α_s(Q) from α_s(μ) at one loop; --inverse maps back
    Mu {
        #[arg(long)]
        q: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        nf: u32,
        #[arg(long)]
        inverse: bool,
    },
    /// Mass-dependent α_s curve for one probed flavor
    Run {
        #[arg(long)]
        flavor: String,
        #[arg(long)]
        qmin: f64,
        #[arg(long, default_value_t = 400)]
        steps: usize,
        #[arg(long)]
        rtol: Option<f64>,
    },
    /// Confinement length and threshold energy
    Threshold {
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        alphamax: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SectorArg {
    Ssb,
    Symmetric,
}

impl From<SectorArg> for Sector {
    fn from(s: SectorArg) -> Self {
        match s {
            SectorArg::Ssb => Sector::Ssb,
            SectorArg::Symmetric => Sector::Symmetric,
        }
    }
}

#[derive(Subcommand)]
enum EffpotCmd {
    /// V and its derivatives at φ₁ and φ = 0
    Table {
        #[arg(long)]
        sigma: f64,
        #[arg(long)]
        lambda: f64,
        #[arg(long, value_enum, default_value = "ssb")]
        sector: SectorArg,
    },
    /// V(φ) on n equally spaced points in [0, phimax]
    Scan {
        #[arg(long)]
        phimax: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[arg(long, default_value_t = 0.5)]
        lambda: f64,
        #[arg(long, value_enum, default_value = "ssb")]
        sector: SectorArg,
    },
}

#[derive(Subcommand)]
enum LambCmd {
    /// Hydrogen 2S₁/₂ − 2P₁/₂ splitting
    #[command(name = "2s2p")]
    TwoS2P {
        /// 2l or 3l denominator in the ⟨p⁴⟩ bracket
        #[arg(long, default_value = "2l")]
        convention: String,
        /// formula, or paper_constant for the quoted coefficient 1.99808
        #[arg(long, default_value = "paper_constant")]
        b2r: String,
        /// Vacuum polarization [MHz]; default is the one-loop Uehling value
        #[arg(long, allow_negative_numbers = true)]
        vp: Option<f64>,
        /// Nuclear size [MHz]
        #[arg(long, allow_negative_numbers = true, default_value_t = lamb::DEFAULT_NUCLEAR_MHZ)]
        nuclear: f64,
    },
    /// Reduced-mass Dirac transition frequency
    Rde {
        #[arg(long, default_value = "H")]
        atom: String,
        #[arg(long, default_value = "1s2s")]
        transition: String,
    },
}

#[derive(Subcommand)]
enum FixturesCmd {
    /// Print one reference value
    Show { key: String },
    /// Print every key and value
    List,
}

enum CliError {
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

struct Ctx {
    cfg: RunConfig,
    format: Format,
    sink: Sink,
    quiet: bool,
}

impl Ctx {
    fn emit(&self, text: &str) -> Result<(), CliError> {
        Ok(self.sink.emit(text)?)
    }

    fn note(&self, msg: &str) {
        if !self.quiet {
            eprintln!("{msg}");
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                ErrorKind::InvalidSubcommand
                | ErrorKind::MissingSubcommand
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => EXIT_USAGE,
                _ => EXIT_VALIDATION,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Core(e)) => {
            eprintln!("rrm-lab: {e}");
            ExitCode::from(if e.is_numerical() { EXIT_NUMERICAL } else { EXIT_VALIDATION })
        }
        Err(CliError::Io(e)) => {
            eprintln!("rrm-lab: I/O error: {e}");
            ExitCode::from(EXIT_NUMERICAL)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    let ctx = Ctx {
        format: cli.format.or(cfg.format).unwrap_or(Format::Table),
        sink: Sink {
            path: cli.out.clone().or_else(|| cfg.out.clone()),
        },
        quiet: cli.quiet,
        cfg,
    };
    match cli.command {
        Command::Constants => constants(&ctx),
        Command::Selfenergy(c) => selfenergy(&ctx, c),
        Command::Qed(c) => qed_cmd(&ctx, c),
        Command::Qcd(c) => qcd_cmd(&ctx, c),
        Command::Effpot(c) => effpot_cmd(&ctx, c),
        Command::Lamb(c) => lamb_cmd(&ctx, c),
        Command::Fixtures(c) => fixtures_cmd(&ctx, c),
    }
}

/// Scalar results: `key = value` table, `key,value` CSV or a JSON object.
fn emit_record(ctx: &Ctx, pairs: &[(&str, f64)]) -> Result<(), CliError> {
    let text = match ctx.format {
        Format::Table => key_values(&pairs.iter().map(|&(k, v)| (k, human(v))).collect::<Vec<_>>()),
        Format::Csv => csv(&["key", "value"], &pairs.iter().map(|&(k, v)| vec![k.to_string(), num(v)]).collect::<Vec<_>>()),
        Format::Json => {
            let map: serde_json::Map<_, _> = pairs.iter().map(|&(k, v)| (k.to_string(), json!(v))).collect();
            to_json(&serde_json::Value::Object(map))
        }
    };
    ctx.emit(&text)
}

fn constants(ctx: &Ctx) -> Result<(), CliError> {
    let c = &ctx.cfg.constants;
    emit_record(
        ctx,
        &[
            ("alpha", c.alpha),
            ("alpha_codata", c.alpha_codata),
            ("m_z_qed", c.m_z_qed),
            ("m_z_qcd", c.m_z_qcd),
            ("sin2_theta_w", c.sin2_theta_w),
            ("ev_to_hz", c.ev_to_hz),
            ("electron_mass", c.electron_mass),
            ("proton_mass", c.proton_mass),
            ("deuteron_mass", c.deuteron_mass),
            ("g_factor", c.g_factor),
            ("hbar_c", c.hbar_c),
            ("alpha_s_mz", c.alpha_s_mz),
            ("alpha_s_anchor", c.alpha_s_anchor),
        ],
    )
}

fn zeta_schemes(arg: &str) -> Result<Vec<ZetaScheme>, CliError> {
    if arg.eq_ignore_ascii_case("all") {
        Ok(ZetaScheme::ALL.to_vec())
    } else {
        Ok(vec![arg.parse()?])
    }
}

fn scheme_key(s: ZetaScheme) -> &'static str {
    match s {
        ZetaScheme::S => "s",
        ZetaScheme::V => "v",
        ZetaScheme::SPlusV => "s_plus_v",
        ZetaScheme::SV => "sv",
    }
}

/// Powers of ten used for each ζ column in the tabular layout.
fn zeta_exponent(s: ZetaScheme) -> i32 {
    match s {
        ZetaScheme::S => 4,
        ZetaScheme::V => 6,
        ZetaScheme::SPlusV | ZetaScheme::SV => 5,
    }
}

fn emit_zeta_rows(ctx: &Ctx, rows: &[ZetaRow], schemes: &[ZetaScheme]) -> Result<(), CliError> {
    let text = match ctx.format {
        Format::Table => {
            let mut header = vec!["Z^2/n^2".to_string()];
            for &s in schemes {
                header.push(format!("zeta<{}> x 1e{}", s.label(), zeta_exponent(s)));
                header.push(format!("-ln zeta<{}>", s.label()));
            }
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut v = vec![format!("{}/{}", r.z * r.z, r.n * r.n)];
                    for &s in schemes {
                        v.push(human(r.zeta(s) * 10f64.powi(zeta_exponent(s))));
                        v.push(human(r.minus_log(s)));
                    }
                    v
                })
                .collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            aligned(&header, &body)
        }
        Format::Csv => {
            let mut header = vec!["z".to_string(), "n".to_string(), "z_sq_over_n_sq".to_string()];
            for &s in schemes {
                header.push(format!("zeta_{}", scheme_key(s)));
                header.push(format!("minus_log_{}", scheme_key(s)));
            }
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut v = vec![r.z.to_string(), r.n.to_string(), num(r.z_sq_over_n_sq)];
                    for &s in schemes {
                        v.push(num(r.zeta(s)));
                        v.push(num(r.minus_log(s)));
                    }
                    v
                })
                .collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            csv(&header, &body)
        }
        Format::Json => {
            let list: Vec<_> = rows
                .iter()
                .map(|r| {
                    let mut m = serde_json::Map::new();
                    m.insert("z".into(), json!(r.z));
                    m.insert("n".into(), json!(r.n));
                    m.insert("z_sq_over_n_sq".into(), json!(r.z_sq_over_n_sq));
                    for &s in schemes {
                        m.insert(format!("zeta_{}", scheme_key(s)), json!(r.zeta(s)));
                        m.insert(format!("minus_log_{}", scheme_key(s)), json!(r.minus_log(s)));
                    }
                    serde_json::Value::Object(m)
                })
                .collect();
            to_json(&json!(list))
        }
    };
    ctx.emit(&text)
}

fn selfenergy(ctx: &Ctx, cmd: SelfEnergyCmd) -> Result<(), CliError> {
    let alpha = ctx.cfg.constants.alpha_codata;
    match cmd {
        SelfEnergyCmd::Zeta { z, n, scheme } => {
            let schemes = zeta_schemes(&scheme)?;
            let rows = self_energy::zeta_table(&[(z, n)], alpha)?;
            emit_zeta_rows(ctx, &rows, &schemes)
        }
        SelfEnergyCmd::Table => {
            let rows = self_energy::zeta_table(&[(1, 4), (1, 2), (1, 1)], alpha)?;
            emit_zeta_rows(ctx, &rows, &ZetaScheme::ALL)
        }
        SelfEnergyCmd::Onshell { m } => {
            let r = self_energy::fix_on_shell(m, alpha)?;
            emit_record(ctx, &[("delta_m", r.delta_m), ("z2", r.z2), ("mu2", r.mu2)])
        }
    }
}

fn qed_setup(ctx: &Ctx, args: &QedModelArgs) -> Result<(BetaModel, EvolveOptions), CliError> {
    let table = ctx.cfg.particle_table(args.table.as_deref())?;
    let crossover = ctx.cfg.tolerances.crossover_ratio.unwrap_or(qed::DEFAULT_CROSSOVER);
    let model = BetaModel::new(table, crossover)?;
    let opts = EvolveOptions {
        alpha0: ctx.cfg.constants.alpha,
        ode: ctx.cfg.ode_options(args.rtol)?,
        ..EvolveOptions::default()
    };
    Ok((model, opts))
}

fn qed_cmd(ctx: &Ctx, cmd: QedCmd) -> Result<(), CliError> {
    match cmd {
        QedCmd::Run { qmax, model } => {
            let (model, opts) = qed_setup(ctx, &model)?;
            let curve = qed::evolve_alpha(qmax, &model, &opts)?;
            let rows: Vec<[f64; 3]> = curve.samples.iter().map(|s| [s.q, s.alpha, 1.0 / s.alpha]).collect();
            let header = ["q_gev", "alpha", "inverse_alpha"];
            let text = match ctx.format {
                Format::Csv => csv(&header, &rows.iter().map(|r| r.map(num).to_vec()).collect::<Vec<_>>()),
                Format::Table => aligned(&header, &rows.iter().map(|r| r.map(human).to_vec()).collect::<Vec<_>>()),
                Format::Json => to_json(&json!({
                    "model_id": curve.model_id,
                    "samples": rows.iter().map(|r| json!({"q_gev": r[0], "alpha": r[1], "inverse_alpha": r[2]})).collect::<Vec<_>>(),
                })),
            };
            ctx.note(&format!(
                "1/alpha({}) = {}",
                human(qmax),
                human(1.0 / curve.last().alpha)
            ));
            ctx.emit(&text)
        }
        QedCmd::Fit { target, model } => {
            let (model, opts) = qed_setup(ctx, &model)?;
            let fit = qed::fit_light_quarks(&model, target, ctx.cfg.constants.m_z_qed, &opts)?;
            emit_record(
                ctx,
                &[
                    ("scale_factor", fit.scale_factor),
                    ("achieved_inverse_alpha", fit.achieved_inverse_alpha),
                    ("iterations", fit.iterations as f64),
                ],
            )
        }
    }
}

fn qcd_cmd(ctx: &Ctx, cmd: QcdCmd) -> Result<(), CliError> {
    match cmd {
        QcdCmd::Lambda { alpha, nf } => {
            let lambda = qcd::lambda_qcd(alpha, nf)?;
            match ctx.format {
                Format::Table => ctx.emit(&format!("{lambda:.4} GeV\n")),
                _ => emit_record(ctx, &[("lambda_gev", lambda)]),
            }
        }
        QcdCmd::Mu { q, mu, alpha, nf, inverse } => {
            let v = if inverse {
                qcd::alpha_s_mu_inverse(q, mu, alpha, nf)?
            } else {
                qcd::alpha_s_mu(q, mu, alpha, nf)?
            };
            emit_record(ctx, &[(if inverse { "alpha_s_mu" } else { "alpha_s_q" }, v)])
        }
        QcdCmd::Run { flavor, qmin, steps, rtol } => {
            let mut model = MassiveQcdModel::for_flavor(&flavor)?;
            model.alpha_s_mz = ctx.cfg.constants.alpha_s_anchor;
            let table = ctx.cfg.particle_table(None)?;
            model.table = qcd::quarks_only(&table)?;
            let run = qcd::evolve_alpha_s_massive(&model, qmin, steps, &ctx.cfg.ode_options(rtol)?)?;
            let header = ["q_gev", "alpha_s"];
            let rows: Vec<[f64; 2]> = run.curve.samples.iter().map(|s| [s.q, s.alpha]).collect();
            let text = match ctx.format {
                Format::Csv => csv(&header, &rows.iter().map(|r| r.map(num).to_vec()).collect::<Vec<_>>()),
                Format::Table => aligned(&header, &rows.iter().map(|r| r.map(human).to_vec()).collect::<Vec<_>>()),
                Format::Json => to_json(&json!({
                    "model_id": run.curve.model_id,
                    "peak": run.peak.map(|p| json!({"lambda_i": p.q, "alpha_max": p.alpha})),
                    "blow_up": run.blow_up.map(|b| json!({"q_last": b.q_last, "alpha_last": b.alpha_last})),
                    "samples": rows.iter().map(|r| json!({"q_gev": r[0], "alpha_s": r[1]})).collect::<Vec<_>>(),
                })),
            };
            match run.peak {
                Some(p) => ctx.note(&format!("maximum alpha_s = {} at Q = {} GeV", human(p.alpha), human(p.q))),
                None => ctx.note("no interior maximum in the evolved range"),
            }
            if let Some(b) = run.blow_up {
                ctx.note(&format!(
                    "alpha_s exceeded 4pi below Q = {} GeV (last valid alpha_s = {})",
                    human(b.q_last),
                    human(b.alpha_last)
                ));
            }
            ctx.emit(&text)
        }
        QcdCmd::Threshold { lambda, alphamax } => {
            let t = qcd::hadronization_threshold(lambda, alphamax)?;
            emit_record(
                ctx,
                &[
                    ("lambda_i", t.lambda_i),
                    ("alpha_max", t.alpha_max),
                    ("length_scale_fm", t.length_scale),
                    ("energy_gev", t.energy),
                ],
            )
        }
    }
}

const ROW_NAMES: [&str; 5] = ["V", "dV/dphi", "d2V/dphi2", "d3V/dphi3", "d4V/dphi4"];

fn effpot_cmd(ctx: &Ctx, cmd: EffpotCmd) -> Result<(), CliError> {
    match cmd {
        EffpotCmd::Table { sigma, lambda, sector } => {
            let p = PotentialParams::new(sigma, lambda)?;
            let c = SchemeConstants::for_sector(sector.into(), &p);
            let cols = effpot::phase_table(&p, &c)?;
            let text = match ctx.format {
                Format::Table => {
                    let mut rows = vec![vec!["phi".to_string(), human(cols[0].phi), human(cols[1].phi)]];
                    for (k, name) in ROW_NAMES.iter().enumerate() {
                        let d = |i: usize| cols[i].derivative(k as u8).expect("order ≤ 4");
                        rows.push(vec![name.to_string(), human_complex(d(0)), human_complex(d(1))]);
                    }
                    aligned(&["", "SSB phase", "symmetric phase"], &rows)
                }
                Format::Csv => {
                    let mut rows = Vec::new();
                    for (col, label) in cols.iter().zip(["ssb_phase", "symmetric_phase"]) {
                        rows.push(vec!["phi".into(), label.to_string(), num(col.phi), num(0.0)]);
                        for (k, name) in ROW_NAMES.iter().enumerate() {
                            let d = col.derivative(k as u8).expect("order ≤ 4");
                            rows.push(vec![name.to_string(), label.to_string(), num(d.re), num(d.im)]);
                        }
                    }
                    csv(&["quantity", "phase", "re", "im"], &rows)
                }
                Format::Json => to_json(&json!({
                    "sector": c.sector.name(),
                    "constants": {"c1": [c.c1.re, c.c1.im], "c2": c.c2, "c3": c.c3},
                    "ssb_phase": report_json(&cols[0]),
                    "symmetric_phase": report_json(&cols[1]),
                })),
            };
            ctx.emit(&text)
        }
        EffpotCmd::Scan { phimax, n, sigma, lambda, sector } => {
            if n < 2 || !(phimax > 0.0) {
                return Err(Error::Validation("scan needs n ≥ 2 and phimax > 0".into()).into());
            }
            let p = PotentialParams::new(sigma, lambda)?;
            let c = SchemeConstants::for_sector(sector.into(), &p);
            let mut rows = Vec::with_capacity(n);
            for i in 0..n {
                let phi = phimax * i as f64 / (n - 1) as f64;
                let v = effpot::one_loop_potential(phi, &p, &c)?;
                rows.push([phi, v.re, v.im]);
            }
            let header = ["phi", "re_v", "im_v"];
            let text = match ctx.format {
                Format::Csv => csv(&header, &rows.iter().map(|r| r.map(num).to_vec()).collect::<Vec<_>>()),
                Format::Table => aligned(&header, &rows.iter().map(|r| r.map(human).to_vec()).collect::<Vec<_>>()),
                Format::Json => to_json(&json!(rows
                    .iter()
                    .map(|r| json!({"phi": r[0], "re_v": r[1], "im_v": r[2]}))
                    .collect::<Vec<_>>())),
            };
            ctx.emit(&text)
        }
    }
}

fn report_json(r: &effpot::SectorReport) -> serde_json::Value {
    let c = |z: num_complex::Complex64| json!([z.re, z.im]);
    json!({"phi": r.phi, "v": c(r.v), "d1": c(r.d1), "d2": c(r.d2), "d3": c(r.d3), "d4": c(r.d4)})
}

fn lamb_cmd(ctx: &Ctx, cmd: LambCmd) -> Result<(), CliError> {
    let k = &ctx.cfg.constants;
    let alpha = k.alpha_codata;
    match cmd {
        LambCmd::TwoS2P { convention, b2r, vp, nuclear } => {
            let convention: P4Convention = convention.parse()?;
            let mode: CoefficientMode = b2r.parse()?;
            let mu_obs = lamb::reduced_mass(k.electron_mass, k.proton_mass)?;
            let coeffs = lamb::radiative_coefficients(mu_obs, k.g_factor, alpha, mode)?;
            let vp = vp.unwrap_or_else(|| lamb::mev_to_mhz(lamb::uehling_s_shift(1, 2, k.electron_mass, alpha)));
            let r = lamb::lamb_2s_2p(mu_obs, coeffs.b2r, alpha, vp, nuclear, convention)?;
            let fields = [
                ("baseline", r.baseline),
                ("radiative", r.radiative),
                ("vacuum_polarization", r.vacuum_polarization),
                ("nuclear_size", r.nuclear_size),
                ("total", r.total),
            ];
            match ctx.format {
                Format::Table => {
                    let mut pairs: Vec<(&str, String)> =
                        fields.iter().map(|&(k, v)| (k, format!("{} MHz", human(v * 1e-6)))).collect();
                    pairs.push(("convention", convention.to_string()));
                    pairs.push(("b2r_coefficient", human(coeffs.b2r_coefficient(mu_obs, alpha))));
                    ctx.emit(&key_values(&pairs))
                }
                _ => emit_record(ctx, &fields),
            }
        }
        LambCmd::Rde { atom, transition } => {
            if transition != "1s2s" {
                return Err(Error::Validation(format!("unknown transition {transition:?} (1s2s)")).into());
            }
            let m_n = match atom.parse::<Atom>()? {
                Atom::H => k.proton_mass,
                Atom::D => k.deuteron_mass,
            };
            let hz = lamb::rde_1s2s_hz(k.electron_mass, m_n, alpha)?;
            match ctx.format {
                Format::Table => ctx.emit(&format!("{} Hz\n", output::sci(hz, 10))),
                _ => emit_record(ctx, &[("frequency_hz", hz)]),
            }
        }
    }
}

fn fixtures_cmd(ctx: &Ctx, cmd: FixturesCmd) -> Result<(), CliError> {
    let f = Fixtures::bundled();
    match cmd {
        FixturesCmd::Show { key } => {
            let v = f.get(&key)?;
            match ctx.format {
                Format::Json => ctx.emit(&to_json(&json!({ key: v }))),
                _ => ctx.emit(&format!("{v}\n")),
            }
        }
        FixturesCmd::List => {
            let text = match ctx.format {
                Format::Json => to_json(&json!(f.iter().collect::<std::collections::BTreeMap<_, _>>())),
                Format::Csv => csv(
                    &["key", "value"],
                    &f.iter().map(|(k, v)| vec![k.to_string(), format!("\"{}\"", v.replace('"', "\"\""))]).collect::<Vec<_>>(),
                ),
                Format::Table => key_values(&f.iter().map(|(k, v)| (k, v.to_string())).collect::<Vec<_>>()),
            };
            ctx.emit(&text)
        }
    }
}
