//! Batch command-line front end: catalog browsing, model classification,
//! identity verification suites, and report generation with machine-readable
//! output.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 usage, 3 domain, 4 internal
//! engine mismatch.

use clap::{Args, Parser, Subcommand};
use hopflab_core::catalog::{Family, ModelSpec, Param, SpaceForm};
use hopflab_core::classify::{theorem_report, TheoremId};
use hopflab_core::error::HopfError;
use hopflab_core::report::{self, Format};
use hopflab_core::scalar::parse_exact;
use serde_json::json;

mod verify;

const EXIT_VERIFY: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_DOMAIN: i32 = 3;
const EXIT_MISMATCH: i32 = 4;

#[derive(Parser)]
#[command(
    name = "hopflab",
    about = "Exact classification and verification of low-type Hopf hypersurfaces of complex space forms",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SpaceArgs {
    /// Ambient space: "cp" (projective) or "ch" (hyperbolic).
    #[arg(long)]
    space: String,
    /// Complex dimension m >= 2.
    #[arg(long)]
    m: usize,
}

impl SpaceArgs {
    fn space_form(&self) -> Result<SpaceForm, HopfError> {
        let c = match self.space.to_ascii_lowercase().as_str() {
            "cp" => 1,
            "ch" => -1,
            other => {
                return Err(HopfError::Parse(format!(
                    "space must be cp or ch, got {other}"
                )))
            }
        };
        SpaceForm::new(c, self.m)
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the model families for a space form with constraints and spectra.
    Catalog {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value = "md")]
        format: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Classify one model hypersurface: exact eigenvalues, type, mass symmetry.
    Classify {
        #[command(flatten)]
        space: SpaceArgs,
        /// Family: A0, A1, A1'', A2, B, C, D, E.
        #[arg(long)]
        family: String,
        /// Focal complex dimension (A2 only).
        #[arg(long)]
        k: Option<usize>,
        /// Exact slope parameter t (sphere families), e.g. "1/2".
        #[arg(long)]
        t: Option<String>,
        /// Exact squared Hopf curvature, e.g. "8" or "2*sqrt(7)-2".
        #[arg(long)]
        kappa2: Option<String>,
        /// Exact Hopf curvature; squared internally.
        #[arg(long)]
        kappa: Option<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Run an exact verification suite.
    Verify {
        /// One of: embedding, iterates, block, type-equations, traces, all.
        #[arg(long)]
        suite: String,
        /// Exact samples per space form in the embedding suite.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Largest k + l for the block suite.
        #[arg(long, default_value_t = 3)]
        max_kl: usize,
        /// Restrict the iterate suite to one family.
        #[arg(long)]
        family: Option<String>,
        /// Largest complex dimension for symbolic sweeps.
        #[arg(long, default_value_t = 6)]
        max_m: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// Reproduce a classification theorem as a table.
    Report {
        /// Theorem id: 1, 2, 3, 4, C1, or C2-note.
        #[arg(long)]
        theorem: String,
        /// Complex dimension (defaults to 2 for the surface theorems).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value = "md")]
        format: String,
        #[arg(long)]
        out: Option<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    };
    std::process::exit(code);
}

fn exit_code_for(e: &HopfError) -> i32 {
    match e {
        HopfError::Parse(_) => EXIT_USAGE,
        HopfError::ParamOutOfRange(_) | HopfError::FamilyMismatch(_) => EXIT_DOMAIN,
        HopfError::EngineMismatch(_) => EXIT_MISMATCH,
        _ => EXIT_DOMAIN,
    }
}

fn emit(out: &Option<String>, text: &str) -> Result<(), HopfError> {
    match out {
        None => {
            println!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| HopfError::Parse(format!("cannot write {path}: {e}"))),
    }
}

fn run(cli: Cli) -> Result<i32, HopfError> {
    match cli.command {
        Command::Catalog { space, format, out } => {
            let sf = space.space_form()?;
            let format = Format::parse(&format)?;
            let text = match format {
                Format::Json => {
                    serde_json::to_string_pretty(&report::catalog_json(sf)?).unwrap()
                }
                Format::Markdown => report::catalog_markdown(sf)?,
                Format::Csv => {
                    let j = report::catalog_json(sf)?;
                    let mut s = String::from("family,k,constraints,spectrum\n");
                    for row in j["families"].as_array().unwrap() {
                        s.push_str(&format!(
                            "{},{},\"{}\",\"{}\"\n",
                            row["family"].as_str().unwrap(),
                            row["k"].as_u64().map(|k| k.to_string()).unwrap_or_default(),
                            row["constraints"].as_str().unwrap(),
                            row["spectrum"]
                                .as_array()
                                .unwrap()
                                .iter()
                                .map(|v| v.as_str().unwrap())
                                .collect::<Vec<_>>()
                                .join("; ")
                        ));
                    }
                    s
                }
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Command::Classify {
            space,
            family,
            k,
            t,
            kappa2,
            kappa,
            out,
        } => {
            let sf = space.space_form()?;
            let family = Family::parse(&family)?;
            let param = parse_param(family, t, kappa2, kappa)?;
            let spec = ModelSpec::new(family, sf, k, param);
            let text = classify_one(&spec)?;
            emit(&out, &text)?;
            Ok(0)
        }
        Command::Verify {
            suite,
            samples,
            seed,
            max_kl,
            family,
            max_m,
            out,
        } => {
            let config = verify::SuiteConfig {
                samples,
                seed,
                max_kl,
                family: family.map(|f| Family::parse(&f)).transpose()?,
                max_m,
            };
            let results = verify::run_suite(&suite, &config)?;
            let mut text = String::new();
            let mut failed = 0usize;
            for (name, outcome) in &results {
                match outcome {
                    Ok(()) => text.push_str(&format!("ok   {name}\n")),
                    Err(e) => {
                        failed += 1;
                        text.push_str(&format!("FAIL {name}: {e}\n"));
                    }
                }
            }
            text.push_str(&format!("{} checks, {} failed", results.len(), failed));
            emit(&out, &text)?;
            Ok(if failed > 0 { EXIT_VERIFY } else { 0 })
        }
        Command::Report {
            theorem,
            m,
            format,
            out,
        } => {
            let id = TheoremId::parse(&theorem)?;
            let m = m.unwrap_or(2);
            let format = Format::parse(&format)?;
            let rep = theorem_report(id, m)?;
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&report::theorem_json(&rep)).unwrap(),
                Format::Csv => report::entries_csv(&rep.entries),
                Format::Markdown => {
                    report::entries_markdown(rep.id.title(), &rep.banner, &rep.entries)
                }
            };
            emit(&out, &text)?;
            Ok(0)
        }
    }
}

fn parse_param(
    family: Family,
    t: Option<String>,
    kappa2: Option<String>,
    kappa: Option<String>,
) -> Result<Param, HopfError> {
    let count = t.is_some() as u8 + kappa2.is_some() as u8 + kappa.is_some() as u8;
    if family == Family::A0 {
        if count > 0 {
            return Err(HopfError::Parse(
                "the horosphere takes no radius parameter".into(),
            ));
        }
        return Ok(Param::None);
    }
    if count != 1 {
        return Err(HopfError::Parse(
            "give exactly one of --t, --kappa2, --kappa".into(),
        ));
    }
    if family.is_class_a() {
        let Some(ts) = t else {
            return Err(HopfError::Parse(
                "sphere families take --t (the squared slope)".into(),
            ));
        };
        if ts == "symbolic" {
            return Ok(Param::Symbolic);
        }
        return Ok(Param::Exact(parse_exact(&ts)?));
    }
    if let Some(ks) = kappa2 {
        if ks == "symbolic" {
            return Ok(Param::Symbolic);
        }
        return Ok(Param::Exact(parse_exact(&ks)?));
    }
    if let Some(ks) = kappa {
        let kv = parse_exact(&ks)?;
        return Ok(Param::Exact(&kv * &kv));
    }
    Err(HopfError::Parse(
        "curvature families take --kappa2 or --kappa".into(),
    ))
}

fn classify_one(spec: &ModelSpec) -> Result<String, HopfError> {
    let j = match spec.family {
        Family::A0 | Family::B => {
            let report = hopflab_core::frame::chen_type_evidence(spec)?;
            // class-B parameters also pass the cubic certificate
            if spec.family == Family::B {
                let k2 = spec.param_scalar()?;
                hopflab_core::classify::b_three_type(spec.sf, &k2)?;
            }
            let mut j = report::type_report_json(&report);
            j["verified_by"] = json!(["frame-module"]);
            j
        }
        Family::A1 | Family::A1Tube => {
            hopflab_core::blocks::cross_check_frame_vs_block(spec)?;
            let report = hopflab_core::frame::chen_type_evidence(spec)?;
            let mut j = report::type_report_json(&report);
            j["verified_by"] = json!(["frame-module", "block-oracle"]);
            j
        }
        Family::A2 => {
            let constraints = hopflab_core::catalog::family_constraints(spec);
            if !constraints.valid {
                return Err(HopfError::ParamOutOfRange(constraints.messages.join("; ")));
            }
            let k = spec.k.unwrap();
            let l = spec.sf.m - 1 - k;
            let t = spec.param_scalar()?;
            let a = hopflab_core::blocks::a2_type_analysis(k, l, spec.sf.c, &t)?;
            if !a.cubic_residual_zero {
                return Err(HopfError::EngineMismatch(
                    "cubic identity failed at this slope".into(),
                ));
            }
            json!({
                "schema_version": report::SCHEMA_VERSION,
                "family": "A2",
                "space": if spec.sf.c == 1 { format!("cp{}", spec.sf.m) } else { format!("ch{}", spec.sf.m) },
                "m": spec.sf.m,
                "k": k,
                "param": { "exact": t.to_string(), "decimal": t.to_f64() },
                "type": a.verdict.to_string(),
                "eigenvalues": a
                    .eigenvalues
                    .iter()
                    .map(|s| json!({"exact": s.to_string(), "decimal": s.to_f64()}))
                    .collect::<Vec<_>>(),
                "mass_symmetric": a.mass_symmetric,
                "verified_by": ["block-oracle"],
            })
        }
        Family::C | Family::D | Family::E => {
            let witness = hopflab_core::classify::cde_exclude(spec.sf.m, spec.family)?;
            json!({
                "schema_version": report::SCHEMA_VERSION,
                "family": spec.family.name(),
                "m": spec.sf.m,
                "type": "2-type excluded; full Chen type undetermined by the engines",
                "witness": format!("{}", witness.witness),
                "positive_roots": witness.positive_roots,
                "verified_by": ["elimination"],
            })
        }
    };
    Ok(serde_json::to_string_pretty(&j).unwrap())
}
