//! Command-line workbench tying the library into reproducible runs.
//!
//! Exit codes: 0 ok, 2 invalid input, 3 inconclusive (budget ran out),
//! 4 invariant violation (from `verify`). Every failure prints a single
//! `error[<reason>]: <message>` line on stderr. Output for a fixed
//! invocation and version is byte-identical across runs.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fcbsc::bounds::{sandwich_report, BoundReport, Rational, ReportOptions};
use fcbsc::bsymbol::ChannelParams;
use fcbsc::codesearch::{min_length_search, SearchResult, SearchStatus, DEFAULT_BUDGET};
use fcbsc::field::{Field, Word};
use fcbsc::linfunc::LinearFunction;
use fcbsc::oracle::{decode_failures_at_weight, EncoderMap, OracleResult, OracleStatus};
use fcbsc::reqmatrix::{build_b1, build_b2, RequirementMatrix, MESSAGE_CAP};

const CSV_HEADER: &str = "q,k,l,b,t,s,plotkin_num,plotkin_den,ceiling,nb_B1,oracle,nb_B2";

#[derive(Parser)]
#[command(name = "fcbsc", version, about = "Workbench for function-correcting codes over b-symbol read channels", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the redundancy lower bound at one parameter point
    Bound(BoundCmd),
    /// Print a cross-class demand matrix
    Matrix(MatrixCmd),
    /// Search the minimal word length meeting a demand matrix
    NbSearch(NbSearchCmd),
    /// Exhaustively determine the optimal redundancy and an optimal encoder
    Oracle(OracleCmd),
    /// Decode every error pattern up to a weight against the optimal encoder
    Simulate(SimulateCmd),
    /// Run bound, searches, and oracle; check every inequality and the decoder
    Verify(VerifyCmd),
    /// Sweep parameters and emit one CSV row per point
    Table(TableCmd),
}

#[derive(Args)]
struct FieldArgs {
    /// Field order q = p^m, a prime power at most 256
    #[arg(long, conflicts_with_all = ["p", "m"])]
    q: Option<u64>,
    /// Field characteristic (with --m)
    #[arg(long, requires = "m")]
    p: Option<u64>,
    /// Extension degree (with --p)
    #[arg(long, requires = "p")]
    m: Option<u32>,
    /// Irreducible modulus coefficients, constant term first, e.g. "1,1,1"
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Args)]
struct FuncArg {
    /// Function matrix: inline CSV rows ("1,0;0,1"), @path to a CSV file,
    /// or identity:K for the bijective case
    #[arg(long)]
    f: String,
}

#[derive(Args)]
struct OutArgs {
    /// Output format; single reports default to json, matrices and sweeps to csv
    #[arg(long, value_parser = ["json", "csv"])]
    format: Option<String>,
    /// Write output to PATH instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    /// Necessary demands (threshold 2t - b + 2)
    B1,
    /// Sufficient demands (threshold 2t + b)
    B2,
}

#[derive(Args)]
struct BoundCmd {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    func: FuncArg,
    /// Read-window width
    #[arg(long, default_value_t = 1)]
    b: usize,
    /// Number of correctable window errors
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct MatrixCmd {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    func: FuncArg,
    #[arg(long, default_value_t = 1)]
    b: usize,
    #[arg(long, default_value_t = 1)]
    t: usize,
    /// Which demand matrix to build
    #[arg(long, value_enum, default_value_t = KindArg::B1)]
    kind: KindArg,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct NbSearchCmd {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    func: FuncArg,
    #[arg(long, default_value_t = 1)]
    b: usize,
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[arg(long, value_enum, default_value_t = KindArg::B1)]
    kind: KindArg,
    /// Pairwise-check budget before the search gives up
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct OracleCmd {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    func: FuncArg,
    #[arg(long, default_value_t = 1)]
    b: usize,
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct SimulateCmd {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    func: FuncArg,
    #[arg(long, default_value_t = 1)]
    b: usize,
    #[arg(long, default_value_t = 1)]
    t: usize,
    /// Largest error weight to sweep (defaults to t)
    #[arg(long)]
    max_weight: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct VerifyCmd {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    func: FuncArg,
    #[arg(long, default_value_t = 1)]
    b: usize,
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct TableCmd {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    func: FuncArg,
    /// Read-window width or inclusive range, e.g. "2" or "1..3"
    #[arg(long, default_value = "1")]
    b: String,
    /// Error weight or inclusive range, e.g. "2" or "1..3"
    #[arg(long, default_value = "1")]
    t: String,
    /// Also run the two demand searches per row
    #[arg(long)]
    search: bool,
    /// Also run the exhaustive encoder oracle per row
    #[arg(long)]
    oracle: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(flatten)]
    out: OutArgs,
}

/// Failure with its exit code and machine-readable reason tag.
enum CmdError {
    Invalid(String),
    Inconclusive(String),
    Invariant(String),
}

impl CmdError {
    fn reason(&self) -> &'static str {
        match self {
            CmdError::Invalid(_) => "invalid-input",
            CmdError::Inconclusive(_) => "inconclusive",
            CmdError::Invariant(_) => "invariant",
        }
    }

    fn code(&self) -> u8 {
        match self {
            CmdError::Invalid(_) => 2,
            CmdError::Inconclusive(_) => 3,
            CmdError::Invariant(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CmdError::Invalid(m) | CmdError::Inconclusive(m) | CmdError::Invariant(m) => m,
        }
    }
}

impl From<fcbsc::Error> for CmdError {
    fn from(e: fcbsc::Error) -> CmdError {
        match e {
            fcbsc::Error::BudgetExhausted { .. } => CmdError::Inconclusive(e.to_string()),
            _ => CmdError::Invalid(e.to_string()),
        }
    }
}

fn invalid(msg: impl fmt::Display) -> CmdError {
    CmdError::Invalid(msg.to_string())
}

/// Print without panicking when the reader hangs up mid-pipe.
fn print_out(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print_out(&e.to_string());
                return ExitCode::SUCCESS;
            }
            // first paragraph of the clap rendering, flattened to one line
            let line = e
                .to_string()
                .lines()
                .take_while(|l| !l.trim().is_empty())
                .map(|l| l.trim_start_matches("error: ").trim())
                .collect::<Vec<_>>()
                .join(" ");
            eprintln!("error[invalid-input]: {line}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            // single line, machine parseable
            let msg = e.message().replace('\n', "; ");
            eprintln!("error[{}]: {msg}", e.reason());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CmdError> {
    match cli.command {
        Command::Bound(a) => cmd_bound(a),
        Command::Matrix(a) => cmd_matrix(a),
        Command::NbSearch(a) => cmd_nb_search(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Simulate(a) => cmd_simulate(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Table(a) => cmd_table(a),
    }
}

// ---- config assembly ----------------------------------------------------

fn build_field(args: &FieldArgs) -> Result<Field, CmdError> {
    let modulus = args
        .modulus
        .as_deref()
        .map(parse_u8_list)
        .transpose()?;
    let (p, m) = match (args.q, args.p, args.m) {
        (Some(q), None, None) => factor_prime_power(q)
            .ok_or_else(|| invalid(format!("--q {q} is not a prime power")))?,
        (None, Some(p), Some(m)) => (p, m),
        _ => return Err(invalid("specify the field as --q Q or as --p P --m M")),
    };
    Ok(Field::new(p, m, modulus.as_deref())?)
}

fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if p * p > q {
        return Some((q, 1));
    }
    let mut m = 0;
    let mut x = q;
    while x % p == 0 {
        x /= p;
        m += 1;
    }
    (x == 1).then_some((p, m))
}

fn build_function(arg: &str, field: &Field) -> Result<LinearFunction, CmdError> {
    if let Some(kstr) = arg.strip_prefix("identity:") {
        let k: usize = kstr
            .trim()
            .parse()
            .map_err(|_| invalid(format!("bad identity dimension {kstr:?}")))?;
        return Ok(LinearFunction::identity(k, field)?);
    }
    let text;
    let source = if let Some(path) = arg.strip_prefix('@') {
        text = fs::read_to_string(path)
            .map_err(|e| invalid(format!("cannot read {path}: {e}")))?;
        text.as_str()
    } else {
        arg
    };
    let rows = source
        .split(|c| c == ';' || c == '\n')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(parse_u8_list)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LinearFunction::new(rows, field)?)
}

fn parse_u8_list(s: &str) -> Result<Vec<u8>, CmdError> {
    s.split(',')
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .map(|v| {
            v.parse::<u8>()
                .map_err(|_| invalid(format!("bad integer {v:?} in {s:?}")))
        })
        .collect()
}

fn messages_for(f: &LinearFunction) -> Result<Vec<Word>, CmdError> {
    let field = f.field();
    let size = (field.q() as u128).pow(f.k() as u32);
    if size > MESSAGE_CAP {
        return Err(invalid(format!(
            "q^k = {size} messages exceeds the cap {MESSAGE_CAP}"
        )));
    }
    Ok(Word::enumerate(f.k(), field).collect())
}

fn build_matrix(
    f: &LinearFunction,
    params: ChannelParams,
    kind: KindArg,
) -> Result<RequirementMatrix, CmdError> {
    let messages = messages_for(f)?;
    let m = match kind {
        KindArg::B1 => build_b1(&messages, f, params)?,
        KindArg::B2 => build_b2(&messages, f, params)?,
    };
    Ok(m)
}

// ---- serialization ------------------------------------------------------

fn rational_json(r: &Rational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

fn search_json(r: &SearchResult) -> Value {
    json!({
        "status": match r.status { SearchStatus::Exact => "exact", SearchStatus::Timeout => "timeout" },
        "min_length": r.min_length,
        "witness": r.witness.as_ref().map(|w| w.digit_strings()),
        "refuted_below": r.refuted_below,
        "upper_bound": r.upper_bound,
        "nodes_explored": r.nodes_explored,
    })
}

fn encoder_json(e: &EncoderMap) -> Value {
    let mut map = serde_json::Map::new();
    for (msg, red) in e.table() {
        map.insert(msg, Value::String(red));
    }
    Value::Object(map)
}

fn oracle_json(r: &OracleResult) -> Value {
    json!({
        "status": match r.status { OracleStatus::Exact => "exact", OracleStatus::Timeout => "timeout" },
        "optimal_redundancy": r.optimal_redundancy,
        "witness": r.witness.as_ref().map(encoder_json),
        "refuted_below": r.refuted_below,
        "encoders_examined": r.encoders_examined,
        "cap": r.cap,
    })
}

fn params_json(rep: &BoundReport) -> Value {
    json!({ "q": rep.q, "k": rep.k, "l": rep.l, "b": rep.b, "t": rep.t })
}

fn report_json(rep: &BoundReport) -> Value {
    json!({
        "params": params_json(rep),
        "s": rep.s,
        "plotkin_value": rational_json(&rep.plotkin_value),
        "plotkin_ceiling": rep.plotkin_ceiling,
        "n_b_B1": rep.nb_b1.as_ref().map(search_json),
        "n_b_B2": rep.nb_b2.as_ref().map(search_json),
        "oracle_r": rep.oracle_redundancy(),
        "degenerate": rep.degenerate,
    })
}

/// One sweep row. Cells for components that ran out of budget read
/// "timeout"; components that were not requested stay empty.
fn report_csv_row(rep: &BoundReport) -> String {
    let search_cell = |r: &Option<SearchResult>| match r {
        None => String::new(),
        Some(s) => match s.min_length {
            Some(n) => n.to_string(),
            None => "timeout".to_string(),
        },
    };
    let oracle_cell = match &rep.oracle {
        None => String::new(),
        Some(o) => match (o.optimal_redundancy, o.status) {
            (Some(r), _) => r.to_string(),
            (None, OracleStatus::Timeout) => "timeout".to_string(),
            (None, OracleStatus::Exact) => "none".to_string(),
        },
    };
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{}",
        rep.q,
        rep.k,
        rep.l,
        rep.b,
        rep.t,
        rep.s,
        rep.plotkin_value.numer(),
        rep.plotkin_value.denom(),
        rep.plotkin_ceiling,
        search_cell(&rep.nb_b1),
        oracle_cell,
        search_cell(&rep.nb_b2),
    )
}

fn emit(out: &OutArgs, text: String) -> Result<(), CmdError> {
    match &out.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            print_out(&text);
            Ok(())
        }
    }
}

fn pick_format<'a>(out: &'a OutArgs, default: &'a str, allowed: &[&str]) -> Result<&'a str, CmdError> {
    let fmt = out.format.as_deref().unwrap_or(default);
    if allowed.contains(&fmt) {
        Ok(fmt)
    } else {
        Err(invalid(format!(
            "format {fmt:?} is not available for this command"
        )))
    }
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

// ---- subcommands --------------------------------------------------------

fn cmd_bound(a: BoundCmd) -> Result<(), CmdError> {
    let field = build_field(&a.field)?;
    let f = build_function(&a.func.f, &field)?;
    let params = channel(a.b, a.t)?;
    let rep = sandwich_report(
        &f,
        params,
        &ReportOptions {
            run_search: false,
            run_oracle: false,
            ..Default::default()
        },
    )?;
    match pick_format(&a.out, "json", &["json", "csv"])? {
        "json" => emit(&a.out, pretty(report_json(&rep))),
        _ => emit(&a.out, format!("{CSV_HEADER}\n{}\n", report_csv_row(&rep))),
    }
}

fn cmd_matrix(a: MatrixCmd) -> Result<(), CmdError> {
    let field = build_field(&a.field)?;
    let f = build_function(&a.func.f, &field)?;
    let params = channel(a.b, a.t)?;
    let matrix = build_matrix(&f, params, a.kind)?;
    match pick_format(&a.out, "csv", &["json", "csv"])? {
        "csv" => emit(&a.out, matrix.to_csv() + "\n"),
        _ => {
            let rows: Vec<Vec<u32>> =
                (0..matrix.size()).map(|i| matrix.row(i).to_vec()).collect();
            emit(
                &a.out,
                pretty(json!({
                    "kind": format!("{:?}", a.kind),
                    "size": matrix.size(),
                    "entries": rows,
                })),
            )
        }
    }
}

fn cmd_nb_search(a: NbSearchCmd) -> Result<(), CmdError> {
    let field = build_field(&a.field)?;
    let f = build_function(&a.func.f, &field)?;
    let params = channel(a.b, a.t)?;
    let matrix = build_matrix(&f, params, a.kind)?;
    let res = min_length_search(&matrix, &field, a.b, a.budget);
    pick_format(&a.out, "json", &["json"])?;
    let mut doc = search_json(&res);
    doc.as_object_mut()
        .unwrap()
        .insert("kind".into(), json!(format!("{:?}", a.kind)));
    emit(&a.out, pretty(doc))?;
    if res.status == SearchStatus::Timeout {
        return Err(CmdError::Inconclusive(format!(
            "search budget {} exhausted; bracket [{}, {}]",
            a.budget,
            res.refuted_below,
            res.upper_bound.map_or_else(|| "?".into(), |u| u.to_string()),
        )));
    }
    Ok(())
}

fn full_report(
    f: &LinearFunction,
    params: ChannelParams,
    budget: u64,
) -> Result<BoundReport, CmdError> {
    Ok(sandwich_report(
        f,
        params,
        &ReportOptions {
            run_search: true,
            run_oracle: true,
            search_budget: budget,
            oracle_budget: budget,
        },
    )?)
}

fn cmd_oracle(a: OracleCmd) -> Result<(), CmdError> {
    let field = build_field(&a.field)?;
    let f = build_function(&a.func.f, &field)?;
    let params = channel(a.b, a.t)?;
    let rep = full_report(&f, params, a.budget)?;
    let res = rep.oracle.as_ref().expect("oracle requested");
    pick_format(&a.out, "json", &["json"])?;
    let mut doc = oracle_json(res);
    doc.as_object_mut()
        .unwrap()
        .insert("params".into(), params_json(&rep));
    emit(&a.out, pretty(doc))?;
    if res.status == OracleStatus::Timeout {
        return Err(CmdError::Inconclusive(format!(
            "oracle budget {} exhausted; refuted below {}",
            a.budget, res.refuted_below
        )));
    }
    Ok(())
}

fn cmd_simulate(a: SimulateCmd) -> Result<(), CmdError> {
    let field = build_field(&a.field)?;
    let f = build_function(&a.func.f, &field)?;
    let params = channel(a.b, a.t)?;
    let rep = full_report(&f, params, a.budget)?;
    let res = rep.oracle.as_ref().expect("oracle requested");
    if res.status == OracleStatus::Timeout {
        return Err(CmdError::Inconclusive(format!(
            "oracle budget {} exhausted before an optimal encoder was pinned",
            a.budget
        )));
    }
    let enc = res
        .witness
        .as_ref()
        .ok_or_else(|| invalid(format!("no valid encoder up to redundancy {}", res.cap)))?;
    let max_weight = a.max_weight.unwrap_or(params.t);
    let mut checks = Vec::new();
    for w in 0..=max_weight {
        let failures = decode_failures_at_weight(enc, &f, params, w, a.budget)?;
        checks.push(json!({ "weight": w, "failures": failures }));
    }
    pick_format(&a.out, "json", &["json"])?;
    emit(
        &a.out,
        pretty(json!({
            "params": params_json(&rep),
            "redundancy": enc.r(),
            "encoder": encoder_json(enc),
            "max_weight": max_weight,
            "checks": checks,
        })),
    )
}

fn cmd_verify(a: VerifyCmd) -> Result<(), CmdError> {
    let field = build_field(&a.field)?;
    let f = build_function(&a.func.f, &field)?;
    let params = channel(a.b, a.t)?;
    let rep = full_report(&f, params, a.budget)?;
    if rep.inconclusive() {
        return Err(CmdError::Inconclusive(format!(
            "budget {} exhausted before the chain was pinned",
            a.budget
        )));
    }
    let violations = rep.chain_violations();
    if !violations.is_empty() {
        return Err(CmdError::Invariant(violations.join("; ")));
    }
    let enc = rep
        .oracle
        .as_ref()
        .and_then(|o| o.witness.as_ref())
        .expect("conclusive oracle carries a witness");
    let mut decode_failures = 0u64;
    for w in 0..=params.t {
        decode_failures += decode_failures_at_weight(enc, &f, params, w, a.budget)?;
    }
    if decode_failures > 0 {
        return Err(CmdError::Invariant(format!(
            "optimal encoder mis-decodes {decode_failures} error patterns of weight <= {}",
            params.t
        )));
    }
    pick_format(&a.out, "json", &["json"])?;
    emit(
        &a.out,
        pretty(json!({
            "params": params_json(&rep),
            "s": rep.s,
            "plotkin_value": rational_json(&rep.plotkin_value),
            "chain": {
                "ceiling": rep.plotkin_ceiling,
                "nb_B1": rep.nb_b1_length(),
                "oracle": rep.oracle_redundancy(),
                "nb_B2": rep.nb_b2_length(),
            },
            "decode_failures": decode_failures,
            "degenerate": rep.degenerate,
        })),
    )
}

fn cmd_table(a: TableCmd) -> Result<(), CmdError> {
    let field = build_field(&a.field)?;
    let f = build_function(&a.func.f, &field)?;
    let bs = parse_range(&a.b)?;
    let ts = parse_range(&a.t)?;
    let opts = ReportOptions {
        run_search: a.search,
        run_oracle: a.oracle,
        search_budget: a.budget,
        oracle_budget: a.budget,
    };
    // compute everything before emitting so a bad point never leaves a
    // partial table behind
    let mut rows = Vec::new();
    let mut saw_timeout = false;
    for &b in &bs {
        for &t in &ts {
            let rep = sandwich_report(&f, channel(b, t)?, &opts)?;
            saw_timeout |= rep.inconclusive();
            rows.push(report_csv_row(&rep));
        }
    }
    pick_format(&a.out, "csv", &["csv"])?;
    let mut text = String::from(CSV_HEADER);
    text.push('\n');
    for row in rows {
        text.push_str(&row);
        text.push('\n');
    }
    emit(&a.out, text)?;
    if saw_timeout {
        return Err(CmdError::Inconclusive(
            "one or more rows hit the budget; cells marked timeout".to_string(),
        ));
    }
    Ok(())
}

fn channel(b: usize, t: usize) -> Result<ChannelParams, CmdError> {
    if b == 0 {
        return Err(invalid("--b must be at least 1"));
    }
    Ok(ChannelParams::new(b, t))
}

/// "3" -> [3]; "1..3" -> [1, 2, 3]; an empty range is allowed.
fn parse_range(s: &str) -> Result<Vec<usize>, CmdError> {
    let parse_one = |v: &str| {
        v.trim()
            .parse::<usize>()
            .map_err(|_| invalid(format!("bad integer {v:?} in range {s:?}")))
    };
    match s.split_once("..") {
        Some((lo, hi)) => Ok((parse_one(lo)?..=parse_one(hi)?).collect()),
        None => Ok(vec![parse_one(s)?]),
    }
}
