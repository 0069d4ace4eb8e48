//! `alexsum`: Alexander-Conway polynomials of braid closures.

use std::process::ExitCode;

use alexsum_core::braid::{component_count, exponent_sum, parse_braid_word, BraidWord};
use alexsum_core::hecke::alexander_via_trace;
use alexsum_core::laurent::{to_alexander_t, to_conway, LaurentPoly, PolyJson};
use alexsum_core::oracle::cross_validate;
use alexsum_core::state_sum::{
    evaluate_dp, list_states, render_state_table, state_sum, EnumBounds, StateRowJson,
};
use alexsum_core::verify::{run_verification, SuiteConfig, VerifyOptions};
use alexsum_core::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "alexsum",
    version,
    about = "Alexander-Conway polynomials of braid closures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the polynomial of a braid closure.
    Compute(ComputeArgs),
    /// List the admissible states and their weights.
    States(StatesArgs),
    /// Run the relation, agreement, invariance and oracle checks.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct WordArgs {
    /// Braid word such as "-2 1 -2 1" (k for sigma_k, -k for its inverse).
    #[arg(long, allow_hyphen_values = true)]
    word: String,
    /// Number of strands; defaults to one more than the largest index.
    #[arg(long)]
    strands: Option<usize>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    word: WordArgs,
    #[arg(long, value_enum, default_value_t = Method::Dp)]
    method: Method,
    #[arg(long = "var", value_enum, default_value_t = Var::Z)]
    var: Var,
    #[arg(long)]
    json: bool,
    /// Also print the state table (exhaustive bounds apply).
    #[arg(long)]
    list_states: bool,
    /// Cross-check against the reduced Burau determinant.
    #[arg(long)]
    validate: bool,
}

#[derive(Args)]
struct StatesArgs {
    #[command(flatten)]
    word: WordArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Check Hecke relations on hook modules up to this many strands.
    #[arg(long = "hecke-n", default_value_t = 6)]
    hecke_n: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Statesum,
    Trace,
    Dp,
    All,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Statesum => "statesum",
            Method::Trace => "trace",
            Method::Dp => "dp",
            Method::All => "all",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Var {
    V,
    Z,
    T,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidToken(_)
            | Error::IndexOutOfRange { .. }
            | Error::ZeroStrands
            | Error::StrandMismatch { .. } => 1,
            Error::BoundExceeded { .. } => 3,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

#[derive(Serialize)]
struct ComputeJson {
    word: String,
    strands: usize,
    exponent_sum: i64,
    components: usize,
    method: &'static str,
    polynomial: PolyJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    states: Option<Vec<StateRowJson>>,
}

/// Bounds from `ALEXSUM_MAX_ENUM`, given as `letters` or `letters,strands`.
fn bounds() -> Result<EnumBounds, Failure> {
    let mut b = EnumBounds::default();
    let Ok(raw) = std::env::var("ALEXSUM_MAX_ENUM") else {
        return Ok(b);
    };
    let bad = || {
        Failure::new(
            1,
            format!("ALEXSUM_MAX_ENUM: expected `letters[,strands]`, got `{raw}`"),
        )
    };
    let mut parts = raw.split(',').map(str::trim);
    b.max_letters = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
    if let Some(s) = parts.next() {
        b.max_strands = s.parse().map_err(|_| bad())?;
    }
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(b)
}

fn parse_word(args: &WordArgs) -> Result<BraidWord, Failure> {
    parse_braid_word(&args.word, args.strands).map_err(Failure::from)
}

fn render(p: &LaurentPoly, var: Var, components: usize) -> Result<(String, PolyJson), Failure> {
    Ok(match var {
        Var::V => (p.to_string(), p.into()),
        Var::Z => {
            let c = to_conway(p)?;
            (c.to_string(), (&c).into())
        }
        Var::T => {
            let a = to_alexander_t(&to_conway(p)?, components);
            if a.has_half_integer_exponents() {
                eprintln!("warning: half-integer powers of t ({components} components)");
            }
            (a.to_string(), (&a).into())
        }
    })
}

fn compute(args: &ComputeArgs) -> CmdResult {
    let w = parse_word(&args.word)?;
    let bounds = bounds()?;
    let components = component_count(&w);
    let mut values: Vec<(&str, LaurentPoly)> = Vec::new();
    if matches!(args.method, Method::Statesum | Method::All) {
        values.push(("statesum", state_sum(&w, &bounds)?));
    }
    if matches!(args.method, Method::Trace | Method::All) {
        values.push(("trace", alexander_via_trace(&w)?));
    }
    if matches!(args.method, Method::Dp | Method::All) {
        values.push(("dp", evaluate_dp(&w)?));
    }
    let value = values[0].1.clone();
    let states = if args.list_states {
        Some(list_states(&w, &bounds)?)
    } else {
        None
    };
    let (text, poly) = render(&value, args.var, components)?;

    if args.json {
        let out = ComputeJson {
            word: w.to_string(),
            strands: w.strands(),
            exponent_sum: exponent_sum(&w),
            components,
            method: args.method.name(),
            polynomial: poly,
            states: states
                .as_ref()
                .map(|rows| rows.iter().map(StateRowJson::from).collect()),
        };
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        if values.len() > 1 {
            for (name, v) in &values {
                println!("{name}: {}", render(v, args.var, components)?.0);
            }
        } else {
            println!("{text}");
        }
        if let Some(rows) = &states {
            print!("{}", render_state_table(rows));
        }
    }

    if let Some((name, v)) = values.iter().find(|(_, v)| *v != value) {
        return Err(Failure::new(
            2,
            format!(
                "methods disagree: {} gives {value}, {name} gives {v}",
                values[0].0
            ),
        ));
    }
    if args.validate && w.strands() >= 2 && !cross_validate(&w)? {
        return Err(Failure::new(2, "Burau oracle disagrees"));
    }
    Ok(())
}

fn states(args: &StatesArgs) -> CmdResult {
    let w = parse_word(&args.word)?;
    let rows = list_states(&w, &bounds()?)?;
    if args.json {
        let json: Vec<StateRowJson> = rows.iter().map(StateRowJson::from).collect();
        println!("{}", serde_json::to_string(&json).expect("serializable"));
    } else {
        print!("{}", render_state_table(&rows));
    }
    Ok(())
}

fn verify(args: &VerifyArgs) -> CmdResult {
    let opts = VerifyOptions {
        suite: SuiteConfig {
            seed: args.seed,
            samples: args.samples,
            ..SuiteConfig::default()
        },
        hecke_max_n: args.hecke_n,
        bounds: bounds()?,
    };
    let report = run_verification(&opts)?;
    for c in &report.checks {
        let status = if c.ok() { "ok" } else { "FAILED" };
        println!(
            "{:<22} {status:<6} {} passed, {} failed",
            c.name,
            c.passed,
            c.failures.len()
        );
        for f in c.failures.iter().take(5) {
            println!("    {f}");
        }
    }
    if report.ok() {
        Ok(())
    } else {
        Err(Failure::new(2, "verification failed"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::States(a) => states(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
