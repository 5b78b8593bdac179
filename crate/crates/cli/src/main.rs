//! `smoothwords`: count smooth words, smooth cyclic words and smooth necklaces.
//!
//! Exit statuses: 0 success, 1 check failure, 2 usage error, 3 precision
//! exhausted.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use smooth_core::check::run_check;
use smooth_core::genfunc::{scw_gf, sw_gf};
use smooth_core::spectral::{cyclic_proportion_limit, scw_asymptotic, sw_asymptotic};
use smooth_core::{count, transfer, CountError, Family, Method};

use render::{render, Format, Record, Row};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PRECISION: u8 = 3;

/// Largest n for which `asymptotics` also computes the exact count.
const ASYMPTOTICS_EXACT_MAX_N: usize = 20_000;

#[derive(Parser, Debug)]
#[command(
    name = "smoothwords",
    version,
    about = "Exact and spectral counts of smooth words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one exact count.
    Count(CountArgs),
    /// Print a table of counts, rows per alphabet size and columns per length.
    Table(TableArgs),
    /// Print a generating function and its first coefficients.
    Gf(GfArgs),
    /// Cross-check every pipeline against every other.
    Check(CheckArgs),
    /// Compare leading-term estimates with exact counts.
    Asymptotics(AsymptoticsArgs),
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "auto", value_parser = parse_method)]
    method: Method,
    /// Only `jsonl` changes the output; other formats print the bare count.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFamily {
    Sw,
    Scw,
    Sn,
    /// sw and scw rows interleaved per k.
    Both,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(value_enum)]
    family: TableFamily,
    #[arg(value_name = "K_MIN", conflicts_with = "k_min")]
    k_min_pos: Option<usize>,
    #[arg(value_name = "K_MAX", conflicts_with = "k_max")]
    k_max_pos: Option<usize>,
    #[arg(value_name = "N_MAX", conflicts_with = "n_max")]
    n_max_pos: Option<usize>,
    #[arg(value_name = "FORMAT", value_enum, conflicts_with = "format")]
    format_pos: Option<Format>,
    /// Defaults to 3 for sw, scw and both; 1 for sn.
    #[arg(long)]
    k_min: Option<usize>,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, default_value = "auto", value_parser = parse_method)]
    method: Method,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GfFamily {
    Sw,
    Scw,
}

#[derive(Args, Debug)]
struct GfArgs {
    #[arg(value_enum)]
    family: GfFamily,
    #[arg(long)]
    k: usize,
    /// Number of series coefficients to print.
    #[arg(long, default_value_t = 12)]
    terms: usize,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long)]
    n_max: usize,
    #[arg(long)]
    k_max: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AsymptoticFamily {
    Sw,
    Scw,
    Proportion,
}

#[derive(Args, Debug)]
struct AsymptoticsArgs {
    #[arg(value_enum)]
    family: AsymptoticFamily,
    #[arg(long)]
    k: usize,
    /// Required for sw and scw; optional for proportion.
    #[arg(long)]
    n: Option<usize>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

/// A failed command: message for stderr and the exit status.
struct Failure {
    message: String,
    status: u8,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            status: EXIT_USAGE,
        }
    }
}

impl From<CountError> for Failure {
    fn from(e: CountError) -> Self {
        let status = match e {
            CountError::Spectral(_) => EXIT_PRECISION,
            CountError::EmptyAlphabet | CountError::Word(_) => EXIT_USAGE,
        };
        Self {
            message: e.to_string(),
            status,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Table(args) => cmd_table(args),
        Command::Gf(args) => cmd_gf(args),
        Command::Check(args) => cmd_check(args),
        Command::Asymptotics(args) => cmd_asymptotics(args),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.status)
        }
    }
}

fn cmd_count(args: CountArgs) -> Result<String, Failure> {
    let counted = count(args.family, args.n, args.k, args.method)?;
    Ok(match args.format {
        Some(Format::Jsonl) => {
            let rec = Record::new(args.family, args.n, args.k, counted.method, &counted.value);
            format!("{}\n", rec.to_line())
        }
        _ => format!("{}\n", counted.value),
    })
}

fn cmd_table(args: TableArgs) -> Result<String, Failure> {
    let default_k_min = if args.family == TableFamily::Sn { 1 } else { 3 };
    let k_min = args.k_min.or(args.k_min_pos).unwrap_or(default_k_min);
    let k_max = args.k_max.or(args.k_max_pos).unwrap_or(7);
    let n_max = args.n_max.or(args.n_max_pos).unwrap_or(11);
    let format = args.format.or(args.format_pos).unwrap_or(Format::Md);
    if k_min == 0 || k_min > k_max {
        return Err(Failure::usage(format!(
            "bad alphabet range {k_min}..={k_max}"
        )));
    }
    let families: &[Family] = match args.family {
        TableFamily::Sw => &[Family::Sw],
        TableFamily::Scw => &[Family::Scw],
        TableFamily::Sn => &[Family::Sn],
        TableFamily::Both => &[Family::Sw, Family::Scw],
    };
    let mut rows = Vec::new();
    for k in k_min..=k_max {
        for &family in families {
            let mut counts = Vec::with_capacity(n_max + 1);
            let mut method = args.method;
            for n in 0..=n_max {
                let c = count(family, n, k, args.method)?;
                method = c.method;
                counts.push(c.value);
            }
            rows.push(Row {
                family,
                k,
                method,
                counts,
            });
        }
    }
    Ok(render(&rows, n_max, format, families.len() > 1))
}

fn cmd_gf(args: GfArgs) -> Result<String, Failure> {
    if args.k == 0 {
        return Err(Failure::usage("alphabet size must be at least 1"));
    }
    let series = match args.family {
        GfFamily::Sw => sw_gf(args.k),
        GfFamily::Scw => scw_gf(args.k),
    };
    let coeffs: Vec<String> = if args.terms == 0 {
        Vec::new()
    } else {
        series
            .coeffs(args.terms - 1)
            .iter()
            .map(|c| c.to_string())
            .collect()
    };
    Ok(format!("{series}\n{}\n", coeffs.join(",")))
}

fn cmd_check(args: CheckArgs) -> Result<String, Failure> {
    if args.k_max == 0 {
        return Err(Failure::usage("--k-max must be at least 1"));
    }
    let report = run_check(args.n_max, args.k_max);
    let mut out = String::new();
    for m in &report.mismatches {
        out.push_str(&m.to_string());
        out.push('\n');
    }
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    out.push_str(&format!(
        "{verdict}: {} instances, {} comparisons, {} mismatches\n",
        report.instances,
        report.comparisons,
        report.mismatches.len()
    ));
    if report.passed() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure {
            message: "pipelines disagree".into(),
            status: EXIT_CHECK_FAILED,
        })
    }
}

fn ratio_line(estimate: f64, exact: &smooth_core::BigCount) -> String {
    match exact
        .to_f64()
        .filter(|x| x.is_finite() && estimate.is_finite())
    {
        Some(x) => format!("ratio: {:.12}\n", estimate / x),
        None => "ratio: n/a (outside double range)\n".into(),
    }
}

fn cmd_asymptotics(args: AsymptoticsArgs) -> Result<String, Failure> {
    let k = args.k;
    if k == 0 {
        return Err(Failure::usage("alphabet size must be at least 1"));
    }
    let mut out = String::new();
    match args.family {
        AsymptoticFamily::Sw | AsymptoticFamily::Scw => {
            let n = args
                .n
                .ok_or_else(|| Failure::usage("--n is required for sw and scw"))?;
            if n == 0 {
                return Err(Failure::usage("--n must be at least 1"));
            }
            let (name, estimate) = if args.family == AsymptoticFamily::Sw {
                ("sw", sw_asymptotic(n, k))
            } else {
                ("scw", scw_asymptotic(n, k))
            };
            out.push_str(&format!(
                "family: {name}\nk: {k}\nn: {n}\nestimate: {estimate:.6}\n"
            ));
            if n <= ASYMPTOTICS_EXACT_MAX_N {
                let exact = if name == "sw" {
                    transfer::sw_exact(n, k)
                } else {
                    transfer::scw_exact(n, k)
                };
                out.push_str(&format!("exact: {exact}\n"));
                out.push_str(&ratio_line(estimate, &exact));
            }
        }
        AsymptoticFamily::Proportion => {
            let limit = cyclic_proportion_limit(k);
            out.push_str(&format!("family: proportion\nk: {k}\nlimit: {limit:.12}\n"));
            if let Some(n) = args.n.filter(|n| (1..=ASYMPTOTICS_EXACT_MAX_N).contains(n)) {
                let scw = transfer::scw_exact(n, k);
                let sw = transfer::sw_exact(n, k);
                out.push_str(&format!("n: {n}\nexact: {scw}/{sw}\n"));
                // scale both down to keep the quotient inside double range
                let shift = sw.bits().saturating_sub(1000);
                let (a, b) = ((scw >> shift).to_f64(), (sw >> shift).to_f64());
                if let (Some(a), Some(b)) = (a, b) {
                    out.push_str(&format!("exact ratio: {:.12}\n", a / b));
                }
            }
        }
    }
    Ok(out)
}
