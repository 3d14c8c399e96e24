mod corpus;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cylkit::cylindric::{CylType, CylindricShape};
use cylkit::stanley::{expand_cylindric, gromov_witten, toric_gw_oracle, Expander, Strategy};
use cylkit::suites::{run, Suite, SuiteReport, VerifyScale};
use cylkit::{Error, GeneratorWord, Partition};
use serde::Serialize;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "cylkit", version, about = "Cylindric and affine Schur expansions")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand F_w into affine Schur functions.
    Expand(ExpandArgs),
    /// Expand a cylindric skew Schur function into cylindric Schur functions.
    Cylindric(ShapeArgs),
    /// Gromov-Witten invariant C^{lambda,d}_{mu,nu} of Gr(m,n).
    Gw(GwArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
    /// Write or resume a JSON-lines corpus of expansions.
    Corpus(CorpusArgs),
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[arg(long)]
    n: usize,
    /// Reduced word read left to right, e.g. 5,3,1,4,2,0 or 531420.
    #[arg(long)]
    word: String,
    /// Largest length accepted.
    #[arg(long, default_value_t = cylkit::stanley::DEFAULT_LENGTH_CAP)]
    cap: usize,
    /// Use the c-statistic completion everywhere.
    #[arg(long)]
    general: bool,
}

#[derive(Args, Debug)]
struct ShapeArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_partition, default_value = "")]
    lambda: Partition,
    #[arg(long, default_value_t = 0)]
    d: usize,
    #[arg(long, value_parser = parse_partition, default_value = "")]
    mu: Partition,
    /// Largest cell count accepted.
    #[arg(long, default_value_t = cylkit::stanley::DEFAULT_LENGTH_CAP)]
    cap: usize,
}

#[derive(Args, Debug)]
struct GwArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long, value_parser = parse_partition, default_value = "")]
    nu: Partition,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suites to run (default: all).
    #[arg(long = "suite", value_parser = parse_suite)]
    suites: Vec<Suite>,
    /// Restrict every suite to this period.
    #[arg(long)]
    n: Option<usize>,
    /// Longest word, or largest cell count for shape suites.
    #[arg(long)]
    maxlen: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    maxlen: usize,
    /// Corpus file; CYLKIT_CACHE takes precedence when set.
    #[arg(long)]
    cache: Option<PathBuf>,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let parts = s
        .split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// Failure with its exit code.
#[derive(Debug)]
enum Failure {
    Input(String),
    Cap(String),
    Internal(String),
    Io(String),
    Verify,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verify => 1,
            Failure::Input(_) => 2,
            Failure::Cap(_) => 3,
            Failure::Internal(_) => 4,
            Failure::Io(_) => 5,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            Error::Internal(_) | Error::Solve(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn emit(output: Output, text: String, value: serde_json::Value) {
    match output {
        Output::Text => print!("{text}"),
        Output::Json => println!("{}", serde_json::to_string_pretty(&value).expect("serializable")),
    }
}

fn cmd_expand(args: &ExpandArgs, output: Output) -> Result<(), Failure> {
    let word = GeneratorWord::parse(args.n, &args.word)?;
    if !word.is_reduced() {
        return Err(Failure::Input(format!("word {word} is not reduced")));
    }
    let w = word.to_permutation();
    let strategy = if args.general { Strategy::General } else { Strategy::Auto };
    let exp = Expander::with_strategy(strategy).with_cap(args.cap).expand(&w)?;
    let terms = exp.rendered();
    let mut text = format!("F_{word}  n={}  length {}  window {w}\n", args.n, w.length());
    for t in &terms {
        let lambda = Partition::new(t.partition.clone()).expect("k-bounded");
        text.push_str(&format!("{:>6}  F_{}  {lambda}\n", t.coeff, t.word));
    }
    let value = json!({
        "n": args.n,
        "word": word.to_string(),
        "window": w.window(),
        "length": w.length(),
        "terms": terms,
    });
    emit(output, text, value);
    Ok(())
}

fn shape_of(args: &ShapeArgs) -> Result<(CylType, CylindricShape), Failure> {
    let ty = CylType::new(args.m, args.n)?;
    let shape = CylindricShape::new(ty, args.lambda.clone(), args.d, args.mu.clone())?;
    if shape.cell_count() > args.cap {
        return Err(Error::CapExceeded {
            what: "cell count",
            value: shape.cell_count(),
            cap: args.cap,
        }
        .into());
    }
    Ok((ty, shape))
}

fn cmd_cylindric(args: &ShapeArgs, output: Output) -> Result<(), Failure> {
    let (ty, shape) = shape_of(args)?;
    let word = shape.skew_word().reduced_word();
    let exp = expand_cylindric(&shape)?;
    let mut text = format!("s_{shape}  type ({},{})  skew word {word}\n", ty.m(), ty.n());
    for (k, c) in exp.iter() {
        text.push_str(&format!("{c:>6}  s_{}/{}/()\n", k.partition, k.e));
    }
    let value = json!({
        "m": ty.m(),
        "n": ty.n(),
        "shape": shape,
        "skew_word": word.to_string(),
        "terms": exp,
    });
    emit(output, text, value);
    Ok(())
}

fn cmd_gw(args: &GwArgs, output: Output) -> Result<(), Failure> {
    let s = &args.shape;
    let ty = CylType::new(s.m, s.n)?;
    let lhs = s.lambda.size() + s.n * s.d;
    let rhs = s.mu.size() + args.nu.size();
    let value = gromov_witten(ty, &s.lambda, s.d, &s.mu, &args.nu)?;
    let shape = CylindricShape::new(ty, s.lambda.clone(), s.d, s.mu.clone()).ok();
    let toric = match shape.filter(|sh| sh.is_toric() && lhs == rhs) {
        Some(_) => {
            let table = toric_gw_oracle(ty, &s.lambda, s.d, &s.mu)?;
            Some(table.get(&args.nu).copied().unwrap_or(0))
        }
        None => None,
    };
    let mut text = format!("C^{{{},{}}}_{{{},{}}} = {value}\n", s.lambda, s.d, s.mu, args.nu);
    text.push_str(&format!(
        "degree check: |lambda| + n d = {lhs}, |mu| + |nu| = {rhs} ({})\n",
        if lhs == rhs { "ok" } else { "mismatch, invariant is 0" }
    ));
    if let Some(t) = toric {
        let verdict = if t == value { "agrees" } else { "DISAGREES" };
        text.push_str(&format!("toric oracle: {t} ({verdict})\n"));
    }
    let json_value = json!({
        "value": value,
        "degree_check": { "lhs": lhs, "rhs": rhs, "ok": lhs == rhs },
        "toric_oracle": toric.map(|t| json!({ "value": t, "agrees": t == value })),
    });
    emit(output, text, json_value);
    if toric.is_some_and(|t| t != value) {
        return Err(Failure::Internal("toric oracle disagrees".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    passed: bool,
    suites: &'a [SuiteReport],
}

fn cmd_verify(args: &VerifyArgs, output: Output) -> Result<(), Failure> {
    let scale = VerifyScale {
        n: args.n,
        max_len: args.maxlen,
        seed: args.seed,
    };
    let suites = if args.suites.is_empty() { Suite::ALL.to_vec() } else { args.suites.clone() };
    let mut reports = Vec::new();
    for suite in suites {
        let report = run(suite, &scale);
        if output == Output::Text {
            println!("{}: {report}", suite.name());
        }
        reports.push(report);
    }
    let passed = reports.iter().all(SuiteReport::passed);
    if output == Output::Json {
        let out = VerifyOutput { passed, suites: &reports };
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn cmd_corpus(args: &CorpusArgs, output: Output) -> Result<(), Failure> {
    let path = std::env::var_os("CYLKIT_CACHE")
        .map(PathBuf::from)
        .or_else(|| args.cache.clone())
        .ok_or_else(|| Failure::Input("no corpus path: pass --cache or set CYLKIT_CACHE".into()))?;
    let summary = corpus::build(&path, args.n, args.maxlen)?;
    let text = format!(
        "{}: {} records ({} cached, {} new)\n",
        path.display(),
        summary.total,
        summary.cached,
        summary.written
    );
    emit(output, text, serde_json::to_value(&summary).expect("serializable"));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Expand(a) => cmd_expand(a, cli.output),
        Command::Cylindric(a) => cmd_cylindric(a, cli.output),
        Command::Gw(a) => cmd_gw(a, cli.output),
        Command::Verify(a) => cmd_verify(a, cli.output),
        Command::Corpus(a) => cmd_corpus(a, cli.output),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Verify => eprintln!("error: verification failed"),
                Failure::Input(m) | Failure::Cap(m) | Failure::Internal(m) | Failure::Io(m) => {
                    eprintln!("error: {m}")
                }
            }
            ExitCode::from(f.code())
        }
    }
}
