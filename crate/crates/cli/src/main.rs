//! `galois-hull`: construct GRS codes with prescribed Galois hulls, re-verify
//! them from their JSON, and derive EAQECC parameters.
//!
//! Exit codes: 0 success, 2 usage or parameters, 3 internal verification
//! failure, 4 failed check on a supplied code.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use galois_hulls::constructions::Construction;
use galois_hulls::eaqecc::{
    derive_eaqecc, param_table, parse_range, singleton_check, table_bounds, write_csv, write_json, EaqeccParams,
    Part, TableSpec, TableTheorem,
};
use galois_hulls::field::DEFAULT_DLOG_LIMIT;
use galois_hulls::grs::{mds_check, GrsCodeJson, EXACT_DISTANCE_GUARD};
use galois_hulls::hull::hull_dim;
use galois_hulls::request::{run_request, ConstructionOutput, ConstructionRequest, Theorem};
use galois_hulls::{Error, FieldOptions, GrsCode};
use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "galois-hull", version, about = "GRS codes with prescribed Galois hulls")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code from one of the four constructions.
    Construct(ConstructArgs),
    /// Re-check a serialized code.
    Verify(VerifyArgs),
    /// Report the e-Galois hull of a serialized code.
    Hull(CodeArgs),
    /// Derive both EAQECC parameter tuples of a serialized code.
    Eaqecc(CodeArgs),
    /// Emit symbolic EAQECC parameter tables.
    Table(TableArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// 3.1, 3.2, 4.1 or 4.2
    #[arg(long, required_unless_present = "request")]
    theorem: Option<String>,
    /// JSON construction request instead of flags.
    #[arg(long, conflicts_with = "theorem")]
    request: Option<PathBuf>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    e: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    h: Option<u32>,
    #[arg(long)]
    t: Option<u64>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    /// `full-field`, `mu:N`, or a seed JSON file.
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    no_verify: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CodeArgs {
    code: PathBuf,
    #[arg(long)]
    e: u32,
}

#[derive(Args)]
struct VerifyArgs {
    code: PathBuf,
    #[arg(long)]
    e: u32,
    /// Enumerate column subsets instead of relying on the GRS structure.
    #[arg(long)]
    exact_distance: bool,
    /// Expected hull dimension.
    #[arg(long)]
    hull: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PartArg {
    I,
    Ii,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    /// 5.5, 5.6, 5.7 or 5.8
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    p: u64,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    h: Option<u32>,
    #[arg(long)]
    e: u32,
    #[arg(long)]
    t: Option<u64>,
    #[arg(long)]
    r: Option<u32>,
    /// Seed length (5.7 and 5.8).
    #[arg(long)]
    n: Option<u64>,
    /// `a..b` or a single value.
    #[arg(long)]
    k: String,
    #[arg(long)]
    l: String,
    #[arg(long, value_enum, default_value = "both")]
    part: PartArg,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: u8,
    message: String,
    /// Whatever was computed before the failure, kept for the report.
    partial: Option<Box<Outcome>>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into(), partial: None }
    }

    fn internal(message: impl Into<String>) -> Failure {
        Failure { code: 3, message: message.into(), partial: None }
    }

    fn check(message: impl Into<String>) -> Failure {
        Failure { code: 4, message: message.into(), partial: None }
    }

    fn with(self, outcome: Outcome) -> Failure {
        Failure { partial: Some(Box::new(outcome)), ..self }
    }
}

/// What a command produced, before timing and status are attached.
#[derive(Default)]
struct Outcome {
    inputs: Value,
    outputs: Value,
    verification: Value,
}

#[derive(Serialize)]
struct RunReport {
    command: Vec<String>,
    inputs: Value,
    outputs: Value,
    verification: Value,
    elapsed_ms: f64,
    exit_status: u8,
    error: Option<String>,
}

fn field_options() -> Result<FieldOptions, Failure> {
    match std::env::var("GHC_DLOG_LIMIT") {
        Ok(s) => s
            .trim()
            .parse()
            .map(|dlog_limit| FieldOptions { dlog_limit })
            .map_err(|_| Failure::usage(format!("GHC_DLOG_LIMIT must be an integer, got {s:?}"))),
        Err(_) => Ok(FieldOptions { dlog_limit: DEFAULT_DLOG_LIMIT }),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Stable pretty JSON with a trailing newline.
fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn load_code(path: &Path, opts: FieldOptions) -> Result<(GrsCodeJson, GrsCode), Failure> {
    let json: GrsCodeJson = read_json(path)?;
    // a file that parses but does not describe a valid code fails the check
    let code = GrsCode::from_json(&json, opts).map_err(|e| Failure::check(e.to_string()))?;
    Ok((json, code))
}

fn elements(code: &GrsCode) -> Value {
    let f = code.field();
    let show = |xs: &[galois_hulls::FieldElement]| xs.iter().map(|&x| f.display(x)).collect::<Vec<_>>();
    json!({ "a": show(code.points()), "v": show(code.multipliers()) })
}

fn construct_failure(err: Error) -> Failure {
    match err {
        Error::VerificationFailed(_) | Error::NormEquationFailed(_) => Failure::internal(err.to_string()),
        _ => Failure::usage(err.to_string()),
    }
}

fn construct(args: &ConstructArgs, opts: FieldOptions) -> Result<Outcome, Failure> {
    let mut req = match &args.request {
        Some(path) => read_json::<ConstructionRequest>(path)?,
        None => {
            let theorem = Theorem::parse(args.theorem.as_deref().unwrap_or_default()).map_err(construct_failure)?;
            let mut params = Map::new();
            let mut put = |key: &str, v: Option<Value>| {
                if let Some(v) = v {
                    params.insert(key.to_string(), v);
                }
            };
            put("p", args.p.map(Value::from));
            put("e", args.e.map(Value::from));
            put("m", args.m.map(Value::from));
            put("h", args.h.map(Value::from));
            put("t", args.t.map(Value::from));
            put("r", args.r.map(Value::from));
            put("k", args.k.map(Value::from));
            put("l", args.l.map(Value::from));
            put("seed", args.seed.as_deref().map(seed_value).transpose()?);
            ConstructionRequest { theorem, params: Value::Object(params), verify: true }
        }
    };
    if args.no_verify {
        req.verify = false;
    }
    let c: Construction = run_request(&req, opts).map_err(construct_failure)?;
    let summary = ConstructionOutput::new(req.theorem, &c);
    let mut outputs = json!({
        "length": summary.length,
        "dimension": summary.dimension,
        "e": summary.e,
        "l": summary.l,
        "elements": elements(&c.code),
    });
    match &args.out {
        Some(path) => {
            write_file(path, &pretty(&summary.code))?;
            outputs["code_path"] = json!(path);
        }
        None => outputs["code"] = json!(summary.code),
    }
    let verification = if summary.verified { json!({ "hull": summary.hull, "mds": summary.mds }) } else { Value::Null };
    Ok(Outcome { inputs: json!(req), outputs, verification })
}

fn seed_value(s: &str) -> Result<Value, Failure> {
    if s == "full-field" || s.starts_with("mu:") {
        Ok(Value::String(s.to_string()))
    } else {
        read_json(Path::new(s))
    }
}

fn verify(args: &VerifyArgs, opts: FieldOptions) -> Result<Outcome, Failure> {
    let inputs = json!({ "code": args.code, "e": args.e, "exact_distance": args.exact_distance, "hull": args.hull });
    let (_, code) = load_code(&args.code, opts)?;
    let guard = if args.exact_distance { EXACT_DISTANCE_GUARD } else { 0 };
    if args.exact_distance && code.length() > guard {
        return Err(Failure::usage(Error::TooLargeForExact(code.length(), guard).to_string()));
    }
    let (n, k) = (code.length(), code.dimension());
    let report = hull_dim(&code, args.e % code.field().degree());
    let mds = mds_check(&code, guard);
    let mut checks = vec![
        ("generator rank", code.generator_matrix().rank() == k),
        ("dual dimension", report.dual_dim == n - k),
        ("hull methods agree", report.method_agreement),
        ("mds", mds.mds),
    ];
    if let Some(l) = args.hull {
        checks.push(("hull dimension", report.hull_dim == l));
    }
    let verification = json!({
        "hull": report,
        "mds": mds,
        "checks": checks.iter().map(|(name, ok)| json!({ "name": name, "ok": ok })).collect::<Vec<_>>(),
    });
    let outcome = Outcome { inputs, outputs: json!({ "length": n, "dimension": k, "elements": elements(&code) }), verification };
    match checks.iter().find(|(_, ok)| !ok) {
        Some((name, _)) => Err(Failure::check(format!("check failed: {name}")).with(outcome)),
        None => Ok(outcome),
    }
}

fn hull(args: &CodeArgs, opts: FieldOptions) -> Result<Outcome, Failure> {
    let (_, code) = load_code(&args.code, opts)?;
    let report = hull_dim(&code, args.e % code.field().degree());
    let outcome = Outcome {
        inputs: json!({ "code": args.code, "e": args.e }),
        outputs: json!({ "length": code.length(), "dimension": code.dimension() }),
        verification: json!({ "hull": report }),
    };
    if report.method_agreement {
        Ok(outcome)
    } else {
        Err(Failure::check("check failed: hull methods agree").with(outcome))
    }
}

fn describe(params: &EaqeccParams) -> Value {
    let s = singleton_check(params.n, params.kq, params.d, params.c);
    json!({ "params": params.to_string(), "mds": params.mds, "singleton": s, "detail": params })
}

fn eaqecc(args: &CodeArgs, opts: FieldOptions) -> Result<Outcome, Failure> {
    let (_, code) = load_code(&args.code, opts)?;
    let d = derive_eaqecc(&code, args.e % code.field().degree()).map_err(|e| Failure::check(e.to_string()))?;
    Ok(Outcome {
        inputs: json!({ "code": args.code, "e": args.e }),
        outputs: json!({ "primal": describe(&d.primal), "dual": describe(&d.dual) }),
        verification: json!({ "l": d.l, "l_dual": d.l_dual, "exhaustive": d.exhaustive }),
    })
}

fn table(args: &TableArgs) -> Result<Outcome, Failure> {
    let bad = |e: Error| Failure::usage(e.to_string());
    let h_or_m = match (args.m, args.h) {
        (Some(m), None) => m,
        (None, Some(h)) => h,
        _ => return Err(Failure::usage("exactly one of --m or --h is required")),
    };
    let spec = TableSpec {
        theorem: TableTheorem::parse(&args.theorem).map_err(bad)?,
        p: args.p,
        h_or_m,
        e: args.e,
        t: args.t,
        r: args.r,
        n: args.n,
        parts: match args.part {
            PartArg::I => vec![Part::Primal],
            PartArg::Ii => vec![Part::Dual],
            PartArg::Both => vec![Part::Primal, Part::Dual],
        },
        k: parse_range(&args.k).map_err(bad)?,
        l: parse_range(&args.l).map_err(bad)?,
    };
    let bounds = table_bounds(&spec).map_err(bad)?;
    let rows = param_table(&spec).map_err(bad)?;
    let mut buf = Vec::new();
    match args.format {
        Format::Csv => write_csv(&rows, &mut buf),
        Format::Json => write_json(&rows, &mut buf),
    }
    .map_err(|e| Failure::internal(e.to_string()))?;
    let mut outputs = json!({
        "rows": rows.len(),
        "q": bounds.q.to_string(),
        "length": bounds.length.to_string(),
        "primal_k_bound": bounds.primal_k_bound.to_string(),
        "dual_k_bound": bounds.dual_k_bound.to_string(),
    });
    match &args.out {
        Some(path) => {
            fs::write(path, &buf).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            outputs["path"] = json!(path);
        }
        None => std::io::stdout().write_all(&buf).map_err(|e| Failure::internal(e.to_string()))?,
    }
    let inputs = json!({
        "theorem": args.theorem, "p": args.p, "h_or_m": h_or_m, "e": args.e,
        "t": args.t, "r": args.r, "n": args.n, "k": args.k, "l": args.l,
    });
    Ok(Outcome { inputs, outputs, verification: Value::Null })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let to_stderr = matches!(&cli.command, Command::Table(t) if t.out.is_none());
    let result = field_options().and_then(|opts| match &cli.command {
        Command::Construct(a) => construct(a, opts),
        Command::Verify(a) => verify(a, opts),
        Command::Hull(a) => hull(a, opts),
        Command::Eaqecc(a) => eaqecc(a, opts),
        Command::Table(a) => table(a),
    });
    let (outcome, status, error) = match result {
        Ok(o) => (o, 0, None),
        Err(f) => (f.partial.map(|o| *o).unwrap_or_default(), f.code, Some(f.message)),
    };
    let report = RunReport {
        command: std::env::args().collect(),
        inputs: outcome.inputs,
        outputs: outcome.outputs,
        verification: outcome.verification,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        exit_status: status,
        error: error.clone(),
    };
    if to_stderr {
        eprint!("{}", pretty(&report));
    } else {
        print!("{}", pretty(&report));
    }
    if let Some(msg) = error {
        eprintln!("error: {msg}");
    }
    ExitCode::from(status)
}
