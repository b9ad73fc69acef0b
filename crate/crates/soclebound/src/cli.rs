//! Command-line surface. Every subcommand is a thin adapter: it parses
//! inputs, calls one engine entry point, and serializes a report. Exit
//! codes: 0 success, 2 input error, 3 soundness-window exhaustion, 1
//! internal invariant violation.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::TruncatedAlgebra;
use crate::config::{with_escalation, EngineConfig, DEFAULT_SEED};
use crate::dim1::dim1_invariants;
use crate::error::{Error, Result};
use crate::limits::{limit_closure, power_quotient_system, verify_ps_consequence};
use crate::params::certify_sop;
use crate::probe::{family_xy, gorenstein_dim1, probe_ell, socle_of_parameter_ideal};
use crate::report::{Format, Report};
use crate::ring::{RingModel, RingSpec};
use crate::ringfile::{parse_element_list, parse_ring_file};
use crate::torsion::gamma_torsion;

#[derive(Parser, Debug)]
#[command(
    name = "soclebound",
    version,
    about = "Exact socle and local-cohomology-limit computations for monomial quotient rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Ring description file (JSON with fields vars, char, ideal)
    #[arg(long, global = true)]
    ring: Option<PathBuf>,
    /// Override the prime characteristic
    #[arg(long = "char", global = true)]
    characteristic: Option<u64>,
    /// Override the auto-selected truncation degree
    #[arg(long, global = true)]
    truncation: Option<usize>,
    /// Seed for all randomized searches (env: SOCLE_PROBE_SEED)
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: FormatArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Krull dimension of the ring
    Dim,
    /// Hilbert function values for degrees 0..=upto
    Hilbert {
        #[arg(long)]
        upto: usize,
    },
    /// Dimension-one invariants: reduction number c, torsion gap g, and the
    /// bound n = max{c,g}+1
    Invariants,
    /// Monomial basis of the m-torsion submodule
    Gamma,
    /// Socle of R/(ideal) for a certified homogeneous parameter system
    Socle {
        /// Comma-separated generators, e.g. "y^2" or "x+z, y"
        #[arg(long)]
        ideal: String,
    },
    /// Irreducibility of a parameter ideal (socle dimension 1)
    Irreducible {
        #[arg(long)]
        ideal: String,
    },
    /// Dimension-one Gorenstein verdict: depth via torsion, type via socle
    Gorenstein,
    /// Socle images along the direct system R/(x_1^i,...,x_d^i)
    LimitSocle {
        #[arg(long)]
        sop: String,
        #[arg(long)]
        imax: Option<usize>,
    },
    /// Limit closure of a system of parameters (colon chain)
    LimitClosure {
        #[arg(long)]
        sop: String,
        #[arg(long)]
        nmax: usize,
    },
    /// Socle-surjectivity consequence for an asserted p_s-standard system
    PsCheck {
        #[arg(long)]
        sop: String,
        #[arg(long = "s")]
        s: usize,
        #[arg(long)]
        imax: Option<usize>,
    },
    /// Randomized irreducibility probe with degree-L generators
    Probe {
        #[arg(long)]
        power: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Reproduce the family Q_a = k[x,y]/(x^{a+1}, x*y^a)
    FamilyXy {
        #[arg(long = "a-min")]
        a_min: u32,
        #[arg(long = "a-max")]
        a_max: u32,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

/// Run the CLI against explicit streams; returns the process exit code.
pub fn run<O: Write, E: Write>(
    args: impl IntoIterator<Item = OsString>,
    out: &mut O,
    err: &mut E,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let start = Instant::now();
    match dispatch(&cli) {
        Ok(report) => {
            let format = match cli.format {
                FormatArg::Json => Format::Json,
                FormatArg::Table => Format::Table,
            };
            let _ = out.write_all(report.emit(format).as_bytes());
            let _ = writeln!(err, "elapsed_ms: {}", start.elapsed().as_millis());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn resolve_seed(cli: &Cli) -> u64 {
    if let Some(s) = cli.seed {
        return s;
    }
    if let Ok(env) = std::env::var("SOCLE_PROBE_SEED") {
        if let Ok(s) = env.trim().parse() {
            return s;
        }
    }
    DEFAULT_SEED
}

fn load_model(cli: &Cli) -> Result<RingModel> {
    let path = cli
        .ring
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("--ring FILE is required".into()))?;
    let text = std::fs::read_to_string(path)?;
    let mut spec = parse_ring_file(&text)?;
    if let Some(p) = cli.characteristic {
        spec = RingSpec::new(spec.vars().to_vec(), p, spec.generators().to_vec())?;
    }
    RingModel::new(spec)
}

fn input_echo(model: &RingModel, seed: u64, truncation: Option<usize>, extra: Value) -> Value {
    let mut inputs = json!({
        "ring": model.signature(),
        "char": model.spec().char_p(),
        "seed": seed,
        "truncation": truncation,
    });
    if let Value::Object(more) = extra {
        let obj = inputs.as_object_mut().expect("inputs object");
        for (k, v) in more {
            obj.insert(k, v);
        }
    }
    inputs
}

fn certified_sop_or_error(
    model: &RingModel,
    terms: &[Vec<(crate::monomial::Monomial, i64)>],
    cfg: &EngineConfig,
) -> Result<(TruncatedAlgebra, crate::params::ParameterSystem)> {
    let (alg, verdict) = certify_sop(model, terms, cfg)?;
    match verdict {
        crate::params::SopVerdict::Certified(p) => Ok((alg, p)),
        crate::params::SopVerdict::NotASop { checked_upto } => Err(Error::InvalidArgument(
            format!("not a system of parameters: ideal slices never fill (checked degrees <= {checked_upto})"),
        )),
    }
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let seed = resolve_seed(cli);
    let cfg = EngineConfig { truncation: cli.truncation, ..EngineConfig::default() };
    match &cli.command {
        Command::Dim => {
            let model = load_model(cli)?;
            Ok(Report::new(
                "dim",
                input_echo(&model, seed, None, json!({})),
                json!({ "dim": model.dim() }),
                json!({ "dim": "exact" }),
            ))
        }
        Command::Hilbert { upto } => {
            let model = load_model(cli)?;
            let n = crate::algebra::auto_truncation(&model, cfg.truncation).max(upto + 1);
            let alg = TruncatedAlgebra::new(&model, n)?;
            let values: Vec<usize> = (0..=*upto).map(|d| alg.hilbert(d)).collect();
            Ok(Report::new(
                "hilbert",
                input_echo(&model, seed, Some(n), json!({ "upto": upto })),
                json!({ "upto": upto, "values": values }),
                json!({ "values": "exact" }),
            ))
        }
        Command::Invariants => {
            let model = load_model(cli)?;
            let (inv, witness, n) = with_escalation(&model, &cfg, 0, |alg| {
                let inv = dim1_invariants(alg, cfg.attempts, seed)?;
                let witness = alg.display(&inv.c_witness);
                Ok((inv.clone(), witness, alg.truncation()))
            })?;
            let n_cert = if inv.c > inv.g { inv.c_certainty.as_str() } else { "exact" };
            Ok(Report::new(
                "invariants",
                input_echo(&model, seed, Some(n), json!({})),
                json!({
                    "c": inv.c,
                    "c_witness": witness,
                    "g": inv.g,
                    "n": inv.bound_n,
                }),
                json!({
                    "c": inv.c_certainty.as_str(),
                    "g": "exact",
                    "n": n_cert,
                }),
            ))
        }
        Command::Gamma => {
            let model = load_model(cli)?;
            let (dim, basis, maxdeg, n) = with_escalation(&model, &cfg, 0, |alg| {
                let g = gamma_torsion(alg)?;
                let basis: Vec<String> =
                    g.monomials().iter().map(|m| m.display(model.spec().vars())).collect();
                Ok((g.dim(), basis, g.max_degree(), alg.truncation()))
            })?;
            Ok(Report::new(
                "gamma",
                input_echo(&model, seed, Some(n), json!({})),
                json!({ "dim": dim, "basis": basis, "max_degree": maxdeg }),
                json!({ "dim": "exact", "basis": "exact" }),
            ))
        }
        Command::Socle { ideal } => {
            let model = load_model(cli)?;
            let terms = parse_element_list(ideal, model.spec().vars())?;
            let (alg, sop) = certified_sop_or_error(&model, &terms, &cfg)?;
            let soc = socle_of_parameter_ideal(&alg, &sop)?;
            let basis: Vec<String> = soc.reps.iter().map(|e| alg.display(e)).collect();
            Ok(Report::new(
                "socle",
                input_echo(&model, seed, Some(alg.truncation()), json!({ "ideal": ideal })),
                json!({
                    "ideal": sop.display(&alg),
                    "artinian_degree": sop.artinian_degree(),
                    "socle_dim": soc.dim,
                    "socle_basis": basis,
                    "per_degree": soc.per_degree,
                }),
                json!({ "socle_dim": "exact" }),
            ))
        }
        Command::Irreducible { ideal } => {
            let model = load_model(cli)?;
            let terms = parse_element_list(ideal, model.spec().vars())?;
            let (alg, sop) = certified_sop_or_error(&model, &terms, &cfg)?;
            let soc = socle_of_parameter_ideal(&alg, &sop)?;
            Ok(Report::new(
                "irreducible",
                input_echo(&model, seed, Some(alg.truncation()), json!({ "ideal": ideal })),
                json!({
                    "ideal": sop.display(&alg),
                    "irreducible": soc.dim == 1,
                    "socle_dim": soc.dim,
                }),
                json!({ "irreducible": "exact", "socle_dim": "exact" }),
            ))
        }
        Command::Gorenstein => {
            let model = load_model(cli)?;
            let v = gorenstein_dim1(&model, &cfg, seed)?;
            let witness = v.witness.as_ref().map(|w| w.display(model.spec().vars()));
            Ok(Report::new(
                "gorenstein",
                input_echo(&model, seed, None, json!({})),
                json!({
                    "gorenstein": v.gorenstein,
                    "depth_ok": v.depth_ok,
                    "type": v.cm_type,
                    "witness": witness,
                }),
                json!({ "gorenstein": "exact" }),
            ))
        }
        Command::LimitSocle { sop, imax } => {
            let model = load_model(cli)?;
            let terms = parse_element_list(sop, model.spec().vars())?;
            let i_max = match imax {
                Some(i) => *i,
                None if model.dim() == 1 => {
                    let bound = with_escalation(&model, &cfg, 0, |alg| {
                        Ok(dim1_invariants(alg, cfg.attempts, seed)?.bound_n)
                    })?;
                    2 * bound + cfg.window
                }
                None => 8 + cfg.window,
            };
            let rep = power_quotient_system(&model, &terms, i_max, &cfg)?;
            Ok(Report::new(
                "limit-socle",
                input_echo(
                    &model,
                    seed,
                    Some(rep.truncation),
                    json!({ "sop": sop, "imax": rep.i_max }),
                ),
                json!({
                    "i_max": rep.i_max,
                    "extra_stages": rep.extra_stages,
                    "socle_dims": rep.socle_dims,
                    "stage_artinian_degrees": rep.stage_tops,
                    "image_dims_at_imax": rep.image_dims_at_imax,
                    "limit_image_dims": rep.limit_image_dims,
                    "stable_socle_dim": rep.stable_socle_dim,
                    "surjectivity_index": rep.surjectivity_index,
                }),
                json!({
                    "stable_socle_dim": rep.certification.as_str(),
                    "surjectivity_index": rep.certification.as_str(),
                }),
            ))
        }
        Command::LimitClosure { sop, nmax } => {
            let model = load_model(cli)?;
            let terms = parse_element_list(sop, model.spec().vars())?;
            let lc = limit_closure(&model, &terms, *nmax, &cfg)?;
            let closure_dims: Vec<usize> = lc.slices.iter().map(|s| s.dim()).collect();
            Ok(Report::new(
                "limit-closure",
                input_echo(
                    &model,
                    seed,
                    Some(lc.truncation),
                    json!({ "sop": sop, "nmax": nmax }),
                ),
                json!({
                    "horizon_degree": lc.horizon,
                    "chain_terms_computed": lc.n_last + 1,
                    "closure_slice_dims": closure_dims,
                    "chain_slice_dims": lc.chain_dims,
                    "stabilized": lc.stabilized_at.is_some(),
                    "stabilized_at": lc.stabilized_at,
                }),
                json!({
                    "closure_slice_dims": if lc.certified { "certified" } else { "empirical-window" },
                }),
            ))
        }
        Command::PsCheck { sop, s, imax } => {
            let model = load_model(cli)?;
            let terms = parse_element_list(sop, model.spec().vars())?;
            let i_max = imax.unwrap_or(2 * s + cfg.window);
            let rep = verify_ps_consequence(&model, &terms, *s, i_max, &cfg)?;
            Ok(Report::new(
                "ps-check",
                input_echo(
                    &model,
                    seed,
                    Some(rep.system.truncation),
                    json!({ "sop": sop, "s": s }),
                ),
                json!({
                    "s": rep.s,
                    "surjective_from_s": rep.surjective_from_s,
                    "observed_index": rep.observed_index,
                    "stable_socle_dim": rep.system.stable_socle_dim,
                    "socle_dims": rep.system.socle_dims,
                }),
                json!({
                    "surjective_from_s": rep.system.certification.as_str(),
                    "hypothesis": "asserted-by-user",
                }),
            ))
        }
        Command::Probe { power, samples } => {
            let model = load_model(cli)?;
            let rep = probe_ell(&model, *power, *samples, seed, &cfg)?;
            Ok(Report::new(
                "probe",
                input_echo(
                    &model,
                    seed,
                    Some(rep.truncation),
                    json!({ "power": power, "samples": samples }),
                ),
                json!({
                    "level": rep.level,
                    "samples": rep.samples,
                    "deterministic_trials": rep.deterministic_trials,
                    "certified": rep.certified,
                    "sop_failures": rep.sop_failures,
                    "irreducible_count": rep.irreducible_count,
                    "irreducible_found": rep.irreducible_found,
                    "all_reducible": rep.all_reducible,
                    "first_deterministic_irreducible": rep.first_deterministic_irreducible,
                    "ell_lower_bound": rep.ell_lower_bound,
                    "ell_upper_bound": rep.ell_upper_bound,
                    "gorenstein": rep.gorenstein,
                }),
                json!({
                    "irreducible_found": "exact",
                    "all_reducible": "empirical-sample",
                    "ell_lower_bound": "exact",
                    "ell_upper_bound": "exact",
                }),
            ))
        }
        Command::FamilyXy { a_min, a_max, samples } => {
            let p = cli.characteristic.unwrap_or(32003);
            let rows = family_xy(*a_min, *a_max, p, *samples, seed, &cfg)?;
            let row_values: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "a": r.a,
                        "c": r.c,
                        "g": r.g,
                        "n": r.bound_n,
                        "gamma_dim": r.gamma_dim,
                        "ya_irreducible": r.ya_irreducible,
                        "probe_L": r.probe_level,
                        "probe_all_reducible": r.probe_all_reducible,
                        "index": r.surjectivity_index,
                        "stable_socle_dim": r.stable_socle_dim,
                        "expected_c": r.expected_c,
                        "expected_g": r.expected_g,
                        "expected_n": r.expected_n,
                        "expected_gamma": r.expected_gamma,
                        "matches": r.matches_expected,
                    })
                })
                .collect();
            let all_match = rows.iter().all(|r| r.matches_expected);
            Ok(Report::new(
                "family-xy",
                json!({
                    "a_min": a_min,
                    "a_max": a_max,
                    "char": p,
                    "samples": samples,
                    "seed": seed,
                }),
                json!({ "rows": row_values, "all_match": all_match }),
                json!({
                    "c": "exact (dimension count)",
                    "g": "exact",
                    "probe_all_reducible": "empirical-sample",
                    "index": "certified (dim 1 survival)",
                }),
            ))
        }
    }
}
