//! Command-line surface of `hbf`: argument definitions, the truth-table file
//! format, JSON reports and one function per subcommand.
//!
//! Every command returns a [`Report`] (or CSV text for `count --csv`); the
//! binary prints it and exits with [`Report::exit_code`].

pub mod error;
pub mod report;
pub mod table;

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hyperbent::enumeration::{count_formula, enumerate_g_functions, exhaustive_count_oracle, CountReport};
use hyperbent::gf2n::gcd;
use hyperbent::msequence::{corollary2_search, spectrum};
use hyperbent::psap::{
    balanced_compose, check_psap_symmetry_vectorial, dickson_construction, restriction_sum, t_construction,
    trace_form_eval, TraceForm,
};
use hyperbent::vectorial::{check_condition2, check_condition3, restriction_multiset, vectorial_hyperbent_witness};
use hyperbent::walsh::full_spectrum;
use hyperbent::{lift_g_to_f, make_field, make_ugroup, Limits, UGroup, VectorialFunction};

pub use error::{CliError, CliResult};
pub use report::{Report, Status};
pub use table::TruthTableFile;

/// Largest `n` at which `construct` runs the definitional oracle.
pub const AUTO_ORACLE_MAX_DEGREE: u32 = 12;

#[derive(Debug, Parser)]
#[command(name = "hbf", version, about = "Vectorial hyper-bent functions of the PS_ap# class")]
pub struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Add elapsed wall time to the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a function, write its truth table and verify it.
    Construct(ConstructArgs),
    /// Check a truth-table file.
    Verify(VerifyArgs),
    /// Count hyper-bent functions of the trace form.
    Count(CountArgs),
    /// Walsh or crosscorrelation spectrum.
    #[command(subcommand)]
    Spectrum(SpectrumCommand),
    /// Write every canonical core function, lifted, as a truth-table file.
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    Tconstruction,
    Dickson,
    Balanced,
    Tracecoeffs,
    Corollary2,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub kind: ConstructKind,
    /// Extension degree n = 2m.
    #[arg(long)]
    pub n: u32,
    /// `u0 = (gamma^(2^m-1))^e` with `e` in `[1, 2^m]`.
    #[arg(long = "u0-exp")]
    pub u0_exp: Option<u64>,
    /// Dickson index.
    #[arg(long)]
    pub r: Option<u64>,
    /// Balanced map: 2^m whitespace-separated k-bit words.
    #[arg(long = "h-file")]
    pub h_file: Option<PathBuf>,
    /// Output dimension of the balanced map.
    #[arg(long)]
    pub k: Option<u32>,
    /// Trace-form coefficients: one row of 2^m+1 field elements per line.
    #[arg(long = "coeff-file")]
    pub coeff_file: Option<PathBuf>,
    /// Decimation for corollary2.
    #[arg(long)]
    pub d: Option<u64>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    Oracle,
    Psap,
    Condition2,
    Condition3,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub file: PathBuf,
    #[arg(long, value_enum)]
    pub mode: VerifyMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountMode {
    Formula,
    Exhaustive,
    Both,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub k: u32,
    #[arg(long, value_enum, default_value = "formula")]
    pub mode: CountMode,
    /// Emit `m,k,method,core,total` rows instead of JSON.
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Subcommand)]
pub enum SpectrumCommand {
    /// Extended Walsh spectrum of one component at exponent t.
    Walsh {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        t: u64,
        /// Component mask; defaults to 1.
        #[arg(long, default_value_t = 1)]
        v: u32,
    },
    /// Crosscorrelation of an m-sequence with its d-decimation.
    Crosscorr {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d: u64,
    },
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub k: u32,
    #[arg(long = "out-dir")]
    pub out_dir: PathBuf,
    /// Stop after this many files.
    #[arg(long)]
    pub limit: Option<u64>,
}

/// What the binary prints, and its exit code.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub exit_code: i32,
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    let limits = Limits::from_env();
    let start = Instant::now();
    if let Command::Count(args) = &cli.command {
        if args.csv {
            let text = count_csv(args, limits)?;
            return Ok(Output { text, exit_code: 0 });
        }
    }
    let mut report = match &cli.command {
        Command::Construct(args) => construct(args, limits)?,
        Command::Verify(args) => verify(&args.file, args.mode, limits)?,
        Command::Count(args) => count(args, limits)?,
        Command::Spectrum(SpectrumCommand::Walsh { file, t, v }) => spectrum_walsh(file, *t, *v)?,
        Command::Spectrum(SpectrumCommand::Crosscorr { m, d }) => spectrum_crosscorr(*m, *d)?,
        Command::Enumerate(args) => enumerate(args)?,
    };
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(Output { text: report.to_json(), exit_code: report.exit_code() })
}

fn even_half(n: u32) -> CliResult<u32> {
    if !n.is_multiple_of(2) {
        return Err(hyperbent::Error::OddDegree(n).into());
    }
    Ok(n / 2)
}

fn need<T: Copy>(value: Option<T>, flag: &str, kind: &str) -> CliResult<T> {
    value.ok_or_else(|| CliError::Usage(format!("{kind} needs --{flag}")))
}

fn u0_from_exp(u: &UGroup, e: u64) -> CliResult<u32> {
    let m = u.half_degree();
    if e == 0 || e > 1 << m {
        return Err(CliError::Usage(format!("--u0-exp must lie in [1, 2^m] = [1, {}]", 1u64 << m)));
    }
    Ok(u.ctx().pow(u.generator(), e))
}

fn parse_number(token: &str) -> CliResult<u64> {
    let parsed = match token.strip_prefix("0x").or_else(|| token.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => token.parse(),
    };
    parsed.map_err(|_| CliError::Parse(format!("not a number: {token:?}")))
}

/// Non-empty lines with `#` comments stripped, each split into numbers.
fn read_number_rows(path: &Path) -> CliResult<Vec<Vec<u64>>> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(parse_number).collect())
        .collect()
}

fn to_u32(x: u64) -> CliResult<u32> {
    u32::try_from(x).map_err(|_| CliError::Parse(format!("{x} does not fit in 32 bits")))
}

/// Condition 2, condition 3, symmetry and, at small `n`, the oracle.
fn auto_verify(f: &VectorialFunction, u: &UGroup, limits: Limits) -> CliResult<(Value, bool)> {
    let symmetric = check_psap_symmetry_vectorial(f)?;
    let c2 = check_condition2(f, u)?;
    let c3 = check_condition3(f, u)?;
    let oracle = if f.ctx().degree() <= AUTO_ORACLE_MAX_DEGREE {
        Some(vectorial_hyperbent_witness(f, limits)?.is_none())
    } else {
        None
    };
    let verdict = symmetric && c2 && c3 && oracle.unwrap_or(true);
    let details = json!({
        "psap_symmetry": symmetric,
        "condition2": c2,
        "condition3": c3,
        "oracle": oracle,
    });
    Ok((details, verdict))
}

pub fn construct(args: &ConstructArgs, limits: Limits) -> CliResult<Report> {
    let kind = args.kind;
    let name = kind.to_possible_value().expect("no skipped variants").get_name().to_owned();
    even_half(args.n)?;
    let ctx = make_field(args.n)?;
    let u = make_ugroup(ctx.clone())?;
    let mut extra = serde_json::Map::new();
    let mut parameters = json!({ "kind": name, "n": args.n });
    let f = match kind {
        ConstructKind::Tconstruction => {
            let e = need(args.u0_exp, "u0-exp", &name)?;
            parameters["u0_exp"] = json!(e);
            t_construction(&u, u0_from_exp(&u, e)?)?
        }
        ConstructKind::Dickson => {
            let e = need(args.u0_exp, "u0-exp", &name)?;
            let r = need(args.r, "r", &name)?;
            parameters["u0_exp"] = json!(e);
            parameters["r"] = json!(r);
            dickson_construction(&u, u0_from_exp(&u, e)?, r)?
        }
        ConstructKind::Balanced => {
            let e = need(args.u0_exp, "u0-exp", &name)?;
            let k = need(args.k, "k", &name)?;
            let path = args.h_file.as_deref().ok_or_else(|| CliError::Usage("balanced needs --h-file".into()))?;
            parameters["u0_exp"] = json!(e);
            parameters["k"] = json!(k);
            parameters["h_file"] = json!(path.display().to_string());
            let h = read_number_rows(path)?.into_iter().flatten().map(to_u32).collect::<CliResult<Vec<u32>>>()?;
            let t = t_construction(&u, u0_from_exp(&u, e)?)?;
            balanced_compose(&h, k, &t)?
        }
        ConstructKind::Tracecoeffs => {
            let path =
                args.coeff_file.as_deref().ok_or_else(|| CliError::Usage("tracecoeffs needs --coeff-file".into()))?;
            parameters["coeff_file"] = json!(path.display().to_string());
            let rows = read_number_rows(path)?
                .into_iter()
                .map(|row| row.into_iter().map(to_u32).collect())
                .collect::<CliResult<Vec<Vec<u32>>>>()?;
            trace_form_eval(&TraceForm::new(ctx.clone(), rows)?)?
        }
        ConstructKind::Corollary2 => {
            let e = need(args.u0_exp, "u0-exp", &name)?;
            let d = need(args.d, "d", &name)?;
            parameters["u0_exp"] = json!(e);
            parameters["d"] = json!(d);
            let found = corollary2_search(&u, u0_from_exp(&u, e)?, d)?;
            extra.insert("lambda_word".into(), json!(found.lambda));
            extra.insert("lambda_element".into(), json!(found.lambda_ambient));
            let table = found.function.table().iter().map(|&b| b as u32).collect();
            VectorialFunction::new(ctx.clone(), 1, table)?
        }
    };
    parameters["out"] = json!(args.out.display().to_string());
    TruthTableFile::from_function(&f).write(&args.out)?;

    let (mut details, verdict) = auto_verify(&f, &u, limits)?;
    details["k"] = json!(f.k());
    details["entries"] = json!(f.table().len());
    for (key, value) in extra {
        details[key] = value;
    }
    let mut report = Report::new("construct", parameters);
    report.verdict = Some(verdict);
    report.details = details;
    Ok(report)
}

pub fn verify(path: &Path, mode: VerifyMode, limits: Limits) -> CliResult<Report> {
    let file = TruthTableFile::read(path)?;
    let f = file.to_function()?;
    let mode_name = mode.to_possible_value().expect("no skipped variants").get_name().to_owned();
    let mut report = Report::new(
        "verify",
        json!({ "file": path.display().to_string(), "mode": mode_name, "n": file.n, "k": file.k }),
    );
    match mode {
        VerifyMode::Oracle => {
            let witness = vectorial_hyperbent_witness(&f, limits)?;
            report.verdict = Some(witness.is_none());
            report.details = json!({
                "witness": witness.map(|w| json!({
                    "v": w.v,
                    "lambda": w.spectrum.lambda,
                    "t": w.spectrum.t,
                    "value": w.spectrum.value,
                })),
            });
        }
        VerifyMode::Psap => {
            even_half(file.n)?;
            if !check_psap_symmetry_vectorial(&f)? {
                report.status = Status::PreconditionFailed;
                report.details = json!({ "reason": "symmetry precondition failed" });
                return Ok(report);
            }
            let u = make_ugroup(f.ctx().clone())?;
            let sums = (1u32..1 << f.k())
                .map(|v| Ok(json!({ "v": v, "sum": restriction_sum(&f.component(v)?, &u)? })))
                .collect::<CliResult<Vec<Value>>>()?;
            report.verdict = Some(sums.iter().all(|s| s["sum"] == 1));
            report.details = json!({ "restriction_sums": sums });
        }
        VerifyMode::Condition2 | VerifyMode::Condition3 => {
            even_half(file.n)?;
            let u = make_ugroup(f.ctx().clone())?;
            let symmetric = check_psap_symmetry_vectorial(&f)?;
            if mode == VerifyMode::Condition2 {
                report.verdict = Some(check_condition2(&f, &u)?);
                report.details = json!({ "psap_symmetry": symmetric });
            } else {
                let multiset = restriction_multiset(&f, &u)?;
                let histogram: Vec<Value> = multiset
                    .coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(w, &c)| json!({ "value": w, "count": c }))
                    .collect();
                report.verdict = Some(check_condition3(&f, &u)?);
                report.details = json!({ "psap_symmetry": symmetric, "multiset": histogram });
            }
        }
    }
    Ok(report)
}

fn count_json(r: &CountReport) -> Value {
    json!({ "core": r.core.to_string(), "total": r.total.to_string() })
}

fn count_reports(args: &CountArgs, limits: Limits) -> CliResult<Vec<CountReport>> {
    let mut out = Vec::new();
    if args.mode != CountMode::Exhaustive {
        out.push(count_formula(args.m, args.k)?);
    }
    if args.mode != CountMode::Formula {
        out.push(exhaustive_count_oracle(args.m, args.k, limits)?);
    }
    Ok(out)
}

pub fn count(args: &CountArgs, limits: Limits) -> CliResult<Report> {
    let mode = args.mode.to_possible_value().expect("no skipped variants").get_name().to_owned();
    let reports = count_reports(args, limits)?;
    let mut report = Report::new("count", json!({ "m": args.m, "k": args.k, "mode": mode }));
    let mut details = serde_json::Map::new();
    for r in &reports {
        details.insert(r.method.to_string(), count_json(r));
    }
    if let [a, b] = reports.as_slice() {
        let matched = a.total == b.total && a.core == b.core;
        details.insert("match".into(), json!(matched));
        report.verdict = Some(matched);
    }
    report.details = Value::Object(details);
    Ok(report)
}

pub fn count_csv(args: &CountArgs, limits: Limits) -> CliResult<String> {
    let mut out = String::from("m,k,method,core,total\n");
    for r in count_reports(args, limits)? {
        out.push_str(&format!("{},{},{},{},{}\n", r.m, r.k, r.method, r.core, r.total));
    }
    Ok(out)
}

pub fn spectrum_walsh(path: &Path, t: u64, v: u32) -> CliResult<Report> {
    let f = TruthTableFile::read(path)?.to_function()?;
    let walsh = full_spectrum(&f.component(v)?, t)?;
    let mut report =
        Report::new("spectrum", json!({ "kind": "walsh", "file": path.display().to_string(), "t": t, "v": v }));
    report.details = json!({ "histogram": report::histogram_json(&walsh.histogram()) });
    Ok(report)
}

pub fn spectrum_crosscorr(m: u32, d: u64) -> CliResult<Report> {
    let ctx = make_field(m)?;
    let cc = spectrum(&ctx, d)?;
    let mut report = Report::new("spectrum", json!({ "kind": "crosscorr", "m": m, "d": d }));
    report.details = json!({
        "histogram": report::histogram_json(&cc.values),
        "distinct": cc.distinct(),
        "three_valued": cc.is_three_valued(),
        "contains_minus_one": cc.contains_minus_one(),
        "gcd": gcd(d, ctx.order() as u64),
    });
    Ok(report)
}

pub fn enumerate(args: &EnumerateArgs) -> CliResult<Report> {
    let u: Arc<UGroup> = make_ugroup(make_field(2 * args.m)?)?;
    let generator = enumerate_g_functions(&u, args.k, hyperbent::enumeration::DEFAULT_ENUMERATION_CAP)?;
    std::fs::create_dir_all(&args.out_dir).map_err(|e| CliError::io(&args.out_dir, e))?;
    let mut written = 0u64;
    for g in generator.take(args.limit.map_or(usize::MAX, |l| l as usize)) {
        let path = args.out_dir.join(format!("g_{written:06}.hbf"));
        TruthTableFile::from_function(&lift_g_to_f(&g)).write(&path)?;
        written += 1;
    }
    let core = count_formula(args.m, args.k)?.core;
    let mut report = Report::new(
        "enumerate",
        json!({ "m": args.m, "k": args.k, "out_dir": args.out_dir.display().to_string(), "limit": args.limit }),
    );
    report.details = json!({ "written": written, "core_count": core.to_string() });
    Ok(report)
}
