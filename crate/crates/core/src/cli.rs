//! Command-line front end. [`run`] does all the work and returns the exit
//! code with captured output, so the binary is a thin wrapper and tests can
//! drive every subcommand in-process.
//!
//! Exit codes: 0 success, 1 identity or domain check failed, 2 usage or
//! parse error.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bijection::{self, BijectionTrace};
use crate::error::PartitionError;
use crate::identities::{
    self, oracle_cap_from_env, Identity, IdentityReport, PartitionClass, DEFAULT_ENUMERATION_CAP,
    DEFAULT_TRUNCATION,
};
use crate::modular::k_modular_diagram;
use crate::partition::Partition;
use crate::selftest::{self, SelftestReport};
use crate::series::SeriesComparison;
use crate::strips::decompose;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kstrips",
    version,
    about = "k-strip decompositions, the initial k-repetition bijection, and q-series identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Map a partition with multiplicities below 2k to one with initial k-repetitions.
    Map(MapArgs),
    /// Inverse of `map`.
    Unmap(MapArgs),
    /// Split a partition into its k-flat remainder and removed k-strips.
    Decompose(PartitionArgs),
    /// Print the k-modular diagram.
    Diagram(DiagramArgs),
    /// Check one of the three identities up to q^limit.
    Verify(VerifyArgs),
    /// Count partitions of n in a class by brute force.
    Count(CountArgs),
    /// Exhaustive roundtrip and counting sweep.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
struct PartitionArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    /// Comma-separated parts, `a^m` for m copies of a; "" is the empty partition.
    #[arg(long, allow_hyphen_values = true)]
    input: String,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct MapArgs {
    #[command(flatten)]
    common: PartitionArgs,
    /// Skip the domain check and run the map on any partition.
    #[arg(long)]
    lax: bool,
    /// Print every intermediate partition.
    #[arg(long)]
    trace: bool,
}

#[derive(Debug, Args)]
struct DiagramArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    #[arg(long, allow_hyphen_values = true)]
    input: String,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    identity: u8,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    /// Cut-off for identity 2; required there and rejected elsewhere.
    #[arg(long)]
    m: Option<u64>,
    /// Truncation order N.
    #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
    limit: usize,
    /// Largest n for the brute-force cross-check; defaults to $KSTRIPS_ORACLE_CAP or 30.
    #[arg(long)]
    oracle_cap: Option<u64>,
    /// Print the named form as `n<TAB>coefficient` lines instead of the summary.
    #[arg(long)]
    table: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassName {
    RepetitionBounded,
    InitialReps,
    InitialRepsCapped,
    StrongInitialReps,
    KFlatConjugate,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    #[arg(long, value_enum)]
    class: ClassName,
    /// Cap for `initial-reps-capped`.
    #[arg(long)]
    m: Option<u64>,
}

#[derive(Debug, Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 20)]
    max_n: u64,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    max_k: u64,
    #[arg(long)]
    json: bool,
}

/// Exit code plus everything the invocation would print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stdout: String, stderr: String) -> Self {
        CommandResult {
            code,
            stdout,
            stderr,
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        CommandResult::fail(EXIT_USAGE, String::new(), message.into() + "\n")
    }
}

fn error_result(err: PartitionError) -> CommandResult {
    let code = match err {
        PartitionError::DomainViolation(_) | PartitionError::MalformedDecomposition(_) => EXIT_FAILED,
        _ => EXIT_USAGE,
    };
    CommandResult::fail(code, String::new(), format!("error: {err}\n"))
}

pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CommandResult::fail(EXIT_USAGE, String::new(), rendered)
            } else {
                CommandResult::ok(rendered)
            };
        }
    };
    let outcome = match cli.command {
        Command::Map(args) => cmd_map(&args, Direction::Forward),
        Command::Unmap(args) => cmd_map(&args, Direction::Inverse),
        Command::Decompose(args) => cmd_decompose(&args),
        Command::Diagram(args) => cmd_diagram(&args),
        Command::Verify(args) => return cmd_verify(&args),
        Command::Count(args) => return cmd_count(&args),
        Command::Selftest(args) => return cmd_selftest(&args),
    };
    outcome.unwrap_or_else(error_result)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Forward,
    Inverse,
}

fn trace_lines(t: &BijectionTrace) -> String {
    let rows = [
        ("lambda", &t.lambda),
        ("lambda'", &t.lambda_conj),
        ("pi", &t.pi),
        ("delta", &t.delta),
        ("alpha", &t.alpha),
        ("alpha'", &t.alpha_conj),
    ];
    rows.iter()
        .map(|(label, p)| format!("{label}: {p}").trim_end().to_string() + "\n")
        .collect()
}

fn cmd_map(args: &MapArgs, direction: Direction) -> Result<CommandResult, PartitionError> {
    let PartitionArgs { k, ref input, json } = args.common;
    let strict = !args.lax;
    let given: Partition = input.parse()?;
    let (output, preimage) = match direction {
        Direction::Forward => (bijection::forward(&given, k, strict)?, given.clone()),
        Direction::Inverse => {
            let pre = bijection::inverse(&given, k, strict)?;
            (pre.clone(), pre)
        }
    };
    let trace = args.trace.then(|| bijection::trace(&preimage, k)).transpose()?;

    if json {
        let doc = json!({
            "command": if direction == Direction::Forward { "map" } else { "unmap" },
            "k": k,
            "strict": strict,
            "input": given,
            "output": output,
            "trace": trace,
        });
        return Ok(CommandResult::ok(doc.to_string() + "\n"));
    }
    let mut out = String::new();
    if let Some(t) = &trace {
        out.push_str(&trace_lines(t));
    }
    writeln!(out, "{output}").unwrap();
    Ok(CommandResult::ok(out))
}

fn cmd_decompose(args: &PartitionArgs) -> Result<CommandResult, PartitionError> {
    let p: Partition = args.input.parse()?;
    let d = decompose(&p, args.k);
    if args.json {
        let doc = json!({
            "command": "decompose",
            "k": args.k,
            "input": p,
            "pi": d.pi,
            "delta": d.delta,
            "strip_lengths": d.strip_lengths().collect::<Vec<_>>(),
        });
        return Ok(CommandResult::ok(doc.to_string() + "\n"));
    }
    let out = format!("pi: {}", d.pi).trim_end().to_string()
        + "\n"
        + format!("delta: {}", d.delta).trim_end()
        + "\n";
    Ok(CommandResult::ok(out))
}

fn cmd_diagram(args: &DiagramArgs) -> Result<CommandResult, PartitionError> {
    let p: Partition = args.input.parse()?;
    let text = k_modular_diagram(&p, args.k).render_text();
    Ok(CommandResult::ok(if text.is_empty() { text } else { text + "\n" }))
}

fn comparison_line(what: &str, result: &SeriesComparison, up_to: usize) -> String {
    match result {
        SeriesComparison::Equal => format!("  {what}: equal up to q^{up_to}\n"),
        SeriesComparison::Mismatch {
            exponent,
            left,
            right,
        } => format!("  {what}: MISMATCH at q^{exponent}: {left} vs {right}\n"),
    }
}

fn report_text(r: &IdentityReport) -> String {
    let mut out = format!("identity {}, k={}", r.identity, r.k);
    if let Some(m) = r.m {
        write!(out, ", m={m}").unwrap();
    }
    writeln!(out, ", N={}", r.truncation).unwrap();
    for f in &r.forms {
        writeln!(out, "  form {}: {}", f.name, f.description).unwrap();
    }
    for c in &r.comparisons {
        out.push_str(&comparison_line(&format!("{} vs {}", c.left, c.right), &c.result, r.truncation));
    }
    for c in &r.oracle_checks {
        out.push_str(&comparison_line(
            &format!("{} vs {} counts", c.form, c.class),
            &c.result,
            c.up_to as usize,
        ));
    }
    out.push_str(if r.holds { "holds\n" } else { "FAILS\n" });
    out
}

fn cmd_verify(args: &VerifyArgs) -> CommandResult {
    let Some(identity) = Identity::from_number(args.identity, args.m) else {
        return CommandResult::usage(if args.identity == 2 {
            "error: identity 2 requires --m"
        } else {
            "error: --m applies only to identity 2"
        });
    };
    let cap = args.oracle_cap.unwrap_or_else(oracle_cap_from_env);
    let report = match identities::verify(identity, args.k, args.limit, cap) {
        Ok(r) => r,
        Err(e) => return error_result(e),
    };
    let code = if report.holds { EXIT_OK } else { EXIT_FAILED };
    let stdout = if let Some(name) = &args.table {
        match report.forms.iter().find(|f| f.name == name.as_str()) {
            Some(f) => f.series.to_table(),
            None => {
                let names: Vec<_> = report.forms.iter().map(|f| f.name).collect();
                return CommandResult::usage(format!(
                    "error: unknown form {name:?}; expected one of {}",
                    names.join(", ")
                ));
            }
        }
    } else if args.json {
        serde_json::to_string(&report).expect("report serializes") + "\n"
    } else {
        report_text(&report)
    };
    let stderr = report
        .first_failure()
        .map(|f| format!("first mismatch: {f}\n"))
        .unwrap_or_default();
    CommandResult::fail(code, stdout, stderr)
}

fn cmd_count(args: &CountArgs) -> CommandResult {
    let class = match (args.class, args.m) {
        (ClassName::InitialRepsCapped, Some(m)) => PartitionClass::InitialRepsCapped(m),
        (ClassName::InitialRepsCapped, None) => {
            return CommandResult::usage("error: class initial-reps-capped requires --m")
        }
        (_, Some(_)) => return CommandResult::usage("error: --m applies only to initial-reps-capped"),
        (ClassName::RepetitionBounded, None) => PartitionClass::RepetitionBounded,
        (ClassName::InitialReps, None) => PartitionClass::InitialReps,
        (ClassName::StrongInitialReps, None) => PartitionClass::StrongInitialReps,
        (ClassName::KFlatConjugate, None) => PartitionClass::KFlatConjugate,
    };
    match identities::count_class(args.n, args.k, class) {
        Ok(count) => CommandResult::ok(format!("{count}\n")),
        Err(e) => error_result(e),
    }
}

fn selftest_text(r: &SelftestReport) -> String {
    let mut out = format!("selftest n <= {}, k <= {}\n", r.max_n, r.max_k);
    for c in &r.checks {
        writeln!(out, "  {:<15} {:>8} passed {:>4} failed", c.name, c.passed, c.failed).unwrap();
    }
    match &r.counterexample {
        None => out.push_str("ok\n"),
        Some(ce) => writeln!(
            out,
            "FAILED {}: n={} k={} partition=({}): {}",
            ce.check, ce.n, ce.k, ce.partition, ce.detail
        )
        .unwrap(),
    }
    out
}

fn cmd_selftest(args: &SelftestArgs) -> CommandResult {
    if args.max_n > DEFAULT_ENUMERATION_CAP {
        return CommandResult::usage(format!(
            "error: --max-n {} exceeds the enumeration cap {DEFAULT_ENUMERATION_CAP}",
            args.max_n
        ));
    }
    let report = match selftest::run(args.max_n, args.max_k) {
        Ok(r) => r,
        Err(e) => return error_result(e),
    };
    let code = if report.passed() { EXIT_OK } else { EXIT_FAILED };
    let stdout = if args.json {
        serde_json::to_string(&report).expect("report serializes") + "\n"
    } else {
        selftest_text(&report)
    };
    CommandResult::fail(code, stdout, String::new())
}
