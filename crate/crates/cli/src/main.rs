//! Command-line front end. Every verb reads one JSON problem file and writes
//! JSON to stdout.
//!
//! Exit codes: 0 dense (or success for verbs without a verdict), 1 not
//! dense, 2 unknown, 3 unreadable input or bad arguments, 4 degree cap
//! exceeded, 5 arrangement not defined over k, 6 any other error.
//!
//! Nothing here is random; `HYPERDENSE_SEED` and similar variables are
//! ignored.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hyperdense::cmfields::{contains_cm_subfield_over, maximal_cm_subfield_via_group, same_field, CmReport};
use hyperdense::density::{decide_general_s, decide_s_infinity};
use hyperdense::embeddings::{embeddings_of, is_totally_imaginary, is_totally_real, signature, unit_rank};
use hyperdense::galois::{splitting_field, GaloisGroup};
use hyperdense::io::{ProblemFile, DEFAULT_BOX_BOUND, DEFAULT_EXPONENT_BOUND, DEFAULT_PROBE_DEGREE};
use hyperdense::witness::{
    cm_vanishing_forms, empirical_density, product_points, split_basis, unit_coordinates, ProjectivePointSet,
};
use hyperdense::exact::rational;
use hyperdense::{Error, Rational, Result, SubfieldEmbedding};

#[derive(Parser)]
#[command(name = "hyperdense", version, about = "Density of integral points on hyperplane complements")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Clone, Default)]
struct Flags {
    /// Largest Galois closure degree before giving up.
    #[arg(long)]
    max_closure_degree: Option<usize>,
    /// Exponent bound for unit witnesses.
    #[arg(long)]
    exponent_bound: Option<u32>,
    /// Highest degree of the Veronese rank probe.
    #[arg(long)]
    probe_degree: Option<u32>,
    /// Root boxes in `signature` output are refined to width 2^-bits.
    #[arg(long)]
    precision_floor: Option<u64>,
}

#[derive(Subcommand)]
enum Verb {
    /// Decide density of the integral points (archimedean S unless "S" is given).
    Decide { path: PathBuf, #[command(flatten)] flags: Flags },
    /// List the irreducible components over k.
    Components { path: PathBuf, #[command(flatten)] flags: Flags },
    /// Look for a CM subfield over k with both methods.
    Cm { path: PathBuf, #[command(flatten)] flags: Flags },
    /// Galois group of a polynomial over Q.
    Galois { path: PathBuf, #[command(flatten)] flags: Flags },
    /// Signature, unit rank and certified roots of a field.
    Signature { path: PathBuf, #[command(flatten)] flags: Flags },
    /// Points built from the supplied units.
    Witness {
        path: PathBuf,
        #[command(flatten)]
        flags: Flags,
        /// One JSON line per point after a header line.
        #[arg(long)]
        jsonl: bool,
    },
    /// Veronese rank probe of the unit points.
    ProbeDensity { path: PathBuf, #[command(flatten)] flags: Flags },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 3,
        Error::DegreeCap { .. } => 4,
        Error::NotDefinedOverK { .. } => 5,
        _ => 6,
    }
}

fn load(path: &PathBuf, flags: &Flags) -> Result<ProblemFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let mut p = ProblemFile::parse(&text)?;
    let o = &mut p.options;
    o.max_closure_degree = flags.max_closure_degree.or(o.max_closure_degree);
    o.exponent_bound = flags.exponent_bound.or(o.exponent_bound);
    o.probe_degree = flags.probe_degree.or(o.probe_degree);
    o.precision_floor = flags.precision_floor.or(o.precision_floor);
    Ok(p)
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable output")
}

fn decide(p: &ProblemFile) -> Result<(Value, u8)> {
    let k = p.base_field()?;
    let a = p.arrangement()?;
    let s = p.places();
    let v = if s.finite.is_empty() {
        decide_s_infinity(&k, &a, p.cap())?
    } else {
        decide_general_s(&k, &a, &s, p.unit_action.as_ref(), p.cap())?
    };
    Ok((to_json(&v), v.exit_code() as u8))
}

fn components(p: &ProblemFile) -> Result<Value> {
    let a = p.arrangement()?;
    let comps = a
        .components_over_k()
        .iter()
        .map(|c| {
            let mut o = json!({
                "degree": c.degree,
                "field": c.field.defining_polynomial(),
                "orbit": c.orbit,
                "representative": a.forms()[c.representative].iter().map(|x| x.coord_strings()).collect::<Vec<_>>(),
            });
            if a.base_field().is_rationals() {
                o["norm_form"] = to_json(&a.component_norm_form_q(c)?);
            }
            Ok(o)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({
        "base_field": a.base_field().defining_polynomial(),
        "ambient_dim": a.ambient_dim(),
        "hyperplanes": a.len(),
        "working_field": a.working_field().defining_polynomial(),
        "linear_rank": a.linear_rank(),
        "components": comps,
    }))
}

fn reports_agree(a: &CmReport, b: &CmReport) -> Result<bool> {
    Ok(match (&a.cm, &b.cm) {
        (Some(x), Some(y)) => same_field(&x.field, &y.field)?,
        (None, None) => true,
        _ => false,
    } && a.contains == b.contains)
}

fn cm(p: &ProblemFile) -> Result<Value> {
    let k_in_m = p.field_over_k()?;
    let en = contains_cm_subfield_over(&k_in_m, p.cap())?;
    let gr = maximal_cm_subfield_via_group(&k_in_m, p.cap())?;
    Ok(json!({
        "field": k_in_m.target().defining_polynomial(),
        "base_field": k_in_m.source().defining_polynomial(),
        "contains": en.contains,
        "agree": reports_agree(&en, &gr)?,
        "enumeration": en,
        "group": gr,
    }))
}

fn galois(p: &ProblemFile) -> Result<Value> {
    let f = p.galois_polynomial()?;
    let split = splitting_field(&f, p.cap())?;
    let g = GaloisGroup::new(split)?;
    let s = g.splitting_field();
    Ok(json!({
        "polynomial": f,
        "splitting_field": g.field().defining_polynomial(),
        "degree": g.field().degree(),
        "tower": s.tower,
        "roots": s.roots.iter().map(|r| r.coord_strings()).collect::<Vec<_>>(),
        "group": g.to_permutation_group(&g.whole()),
    }))
}

fn signature_report(p: &ProblemFile) -> Result<Value> {
    let k_in_m = p.field_over_k()?;
    let m = k_in_m.target();
    let (r1, r2) = signature(m);
    let bits = p.options.precision_floor.unwrap_or(16);
    let width = Rational::from_integer(2.into()).pow(-(bits.min(4096) as i32));
    let e = embeddings_of(m, &width)?;
    Ok(json!({
        "field": m.defining_polynomial(),
        "r1": r1,
        "r2": r2,
        "totally_real": is_totally_real(m),
        "totally_imaginary": is_totally_imaginary(m),
        "unit_rank": unit_rank(m, 0),
        "conjugation": e.conjugation(),
        "boxes": e.boxes(),
    }))
}

/// The point set of the supplied unit blocks, padded with free integer
/// coordinates up to the ambient dimension when one is given.
fn witness_points(p: &ProblemFile) -> Result<(ProjectivePointSet, Vec<Vec<Vec<Rational>>>)> {
    let bound = p.options.exponent_bound.unwrap_or(DEFAULT_EXPONENT_BOUND);
    let supplies = p.unit_supplies()?;
    if supplies.is_empty() {
        return Err(Error::Parse("missing \"units\"".into()));
    }
    let blocks = supplies
        .iter()
        .map(|(s, b)| unit_coordinates(s, b, bound))
        .collect::<Result<Vec<_>>>()?;
    let used: usize = supplies.iter().map(|(s, _)| s.field().degree()).sum();
    let n = p.ambient_dim.unwrap_or(used - 1);
    if n + 1 < used {
        return Err(Error::DimensionMismatch(format!("units need {used} coordinates, P^{n} has {}", n + 1)));
    }
    let pts = product_points(&blocks, n + 1 - used, p.options.box_bound.unwrap_or(DEFAULT_BOX_BOUND))?;
    Ok((pts, blocks))
}

fn probe(p: &ProblemFile) -> Result<Value> {
    let (pts, blocks) = witness_points(p)?;
    let depth = p.options.probe_degree.unwrap_or(DEFAULT_PROBE_DEGREE);
    let report = empirical_density(&pts, depth);
    let mut cm_checks = Vec::new();
    for (i, ((supply, basis), coords)) in p.unit_supplies()?.iter().zip(&blocks).enumerate() {
        let m = supply.field();
        let r = contains_cm_subfield_over(&SubfieldEmbedding::of_rationals(m), p.cap())?;
        let Some(cm) = r.cm else { continue };
        let forms = cm_vanishing_forms(&cm, basis, &split_basis(&cm), p.cap())?;
        let vanish = forms.iter().all(|f| coords.iter().all(|x| is_zero(&f.eval(x))));
        cm_checks.push(json!({
            "block": i,
            "cm_field": cm.field.defining_polynomial(),
            "real_subfield": cm.real.defining_polynomial(),
            "forms": forms.len(),
            "degree": forms.first().and_then(|f| f.homogeneous_degree()),
            "vanish_on_points": vanish,
        }));
    }
    Ok(json!({ "report": report, "cm_vanishing_forms": cm_checks }))
}

fn is_zero(x: &Rational) -> bool {
    x == &Rational::default()
}

/// Write errors (a closed pipe, typically) end output quietly.
fn emit(v: &Value) {
    let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(v).expect("json"));
}

fn run(cli: Cli) -> Result<u8> {
    match cli.verb {
        Verb::Decide { path, flags } => {
            let (v, code) = decide(&load(&path, &flags)?)?;
            emit(&v);
            Ok(code)
        }
        Verb::Components { path, flags } => {
            emit(&components(&load(&path, &flags)?)?);
            Ok(0)
        }
        Verb::Cm { path, flags } => {
            emit(&cm(&load(&path, &flags)?)?);
            Ok(0)
        }
        Verb::Galois { path, flags } => {
            emit(&galois(&load(&path, &flags)?)?);
            Ok(0)
        }
        Verb::Signature { path, flags } => {
            emit(&signature_report(&load(&path, &flags)?)?);
            Ok(0)
        }
        Verb::Witness { path, flags, jsonl } => {
            let (pts, _) = witness_points(&load(&path, &flags)?)?;
            if jsonl {
                let mut out = std::io::stdout().lock();
                let header = json!({ "ambient_dim": pts.ambient_dim, "count": pts.len() });
                let _ = writeln!(out, "{header}");
                for q in &pts.points {
                    let line = Value::from(q.iter().map(rational::to_string).collect::<Vec<_>>());
                    if writeln!(out, "{line}").is_err() {
                        break;
                    }
                }
            } else {
                emit(&to_json(&pts));
            }
            Ok(0)
        }
        Verb::ProbeDensity { path, flags } => {
            emit(&probe(&load(&path, &flags)?)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{}", json!({ "error": e.to_string(), "exit_code": exit_code(&e) }));
            ExitCode::from(exit_code(&e))
        }
    }
}
