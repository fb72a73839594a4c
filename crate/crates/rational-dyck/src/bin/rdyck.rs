//! Command-line front end: exact counts, reducibility-level tables, the
//! word/path bijection, exhaustive listings, the factor-free table, and the
//! verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::bigint::BigInt;

use rational_dyck::bell::Rational;
use rational_dyck::bijection::{from_colored, to_colored, ColoredDyckPath};
use rational_dyck::oracle;
use rational_dyck::sequences::{f_n, phi_bizley, psi_n, r_row, theta_n};
use rational_dyck::verify::{self, VerifyConfig};
use rational_dyck::words::{DyckWord, Slope};

#[derive(Parser)]
#[command(
    name = "rdyck",
    version,
    about = "Exact rational Dyck path computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print exact sequence values for one size.
    Count(CountArgs),
    /// Print the reducibility-level counts r_{n,1..n}.
    Rl(RlArgs),
    /// Map a word to its colored Dyck path, or a path JSON back to a word.
    Map(MapArgs),
    /// List all Dyck words of one size, optionally filtered.
    List(ListArgs),
    /// Print the factor-free count table for the built-in slope set.
    Table(TableArgs),
    /// Run the full identity and oracle cross-check suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqName {
    F,
    Phi,
    Theta,
    Psi,
}

#[derive(Args)]
struct CountArgs {
    /// Slope written beta/alpha, e.g. 3/2.
    #[arg(long, value_parser = parse_slope)]
    slope: Slope,
    #[arg(long)]
    n: usize,
    /// Which sequence to print; omitted prints all four, labeled.
    #[arg(long, value_enum)]
    seq: Option<SeqName>,
}

#[derive(Args)]
struct RlArgs {
    #[arg(long, value_parser = parse_slope)]
    slope: Slope,
    #[arg(long)]
    n: usize,
    /// One value per line instead of a single row.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct MapArgs {
    #[arg(long, value_parser = parse_slope, required_unless_present = "inverse")]
    slope: Option<Slope>,
    /// Word to map forward.
    #[arg(long, conflicts_with = "inverse")]
    word: Option<String>,
    /// Colored-path JSON to map back to a word.
    #[arg(long)]
    inverse: Option<String>,
    /// Print the compact text rendering instead of JSON.
    #[arg(long)]
    text: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum WordFilter {
    #[value(name = "factor-free")]
    FactorFree,
    #[value(name = "strongly-below")]
    StronglyBelow,
}

#[derive(Args)]
struct ListArgs {
    #[arg(long, value_parser = parse_slope)]
    slope: Slope,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    filter: Option<WordFilter>,
}

#[derive(Args)]
struct TableArgs {
    /// Output as CSV (slope,oeis,terms...).
    #[arg(long)]
    csv: bool,
    /// Output as a JSON object keyed by slope.
    #[arg(long, conflicts_with = "csv")]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated slopes, e.g. "3/2,1/1". Default: the built-in set.
    #[arg(long, value_delimiter = ',', value_parser = parse_slope)]
    slope_set: Vec<Slope>,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Enumeration budget per report; RD_BUDGET overrides the default.
    #[arg(long)]
    budget: Option<u64>,
    /// Negative control: perturb theta so the Duchon check must fail.
    #[arg(long)]
    perturb_theta: bool,
}

fn parse_slope(text: &str) -> Result<Slope, String> {
    Slope::parse(text).map_err(|e| e.to_string())
}

/// Rationals render as `p` or `p/q`; integrality failures stay visible.
fn render(value: &Rational) -> String {
    use num::One;
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        value.to_string()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Rl(args) => cmd_rl(args),
        Command::Map(args) => cmd_map(args),
        Command::List(args) => cmd_list(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn cmd_count(args: CountArgs) -> Result<ExitCode, String> {
    if args.n == 0 {
        return Err("--n must be at least 1".into());
    }
    let one = |seq: SeqName| -> Result<String, String> {
        let value = match seq {
            SeqName::F => render(&f_n(args.slope, args.n)),
            SeqName::Phi => phi_bizley(args.slope, args.n)
                .map_err(|e| e.to_string())?
                .to_string(),
            SeqName::Theta => theta_n(args.slope, args.n)
                .map_err(|e| e.to_string())?
                .to_string(),
            SeqName::Psi => psi_n(args.slope, args.n)
                .map_err(|e| e.to_string())?
                .to_string(),
        };
        Ok(value)
    };
    match args.seq {
        Some(seq) => println!("{}", one(seq)?),
        None => {
            for (name, seq) in [
                ("f", SeqName::F),
                ("phi", SeqName::Phi),
                ("theta", SeqName::Theta),
                ("psi", SeqName::Psi),
            ] {
                println!("{name} {}", one(seq)?);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_rl(args: RlArgs) -> Result<ExitCode, String> {
    if args.n == 0 {
        return Err("--n must be at least 1".into());
    }
    let row = r_row(args.slope, args.n).map_err(|e| e.to_string())?;
    let rendered: Vec<String> = row.iter().map(BigInt::to_string).collect();
    if args.csv {
        for v in rendered {
            println!("{v}");
        }
    } else {
        println!("{}", rendered.join(" "));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_map(args: MapArgs) -> Result<ExitCode, String> {
    if let Some(json) = args.inverse {
        let path = ColoredDyckPath::from_json(&json).map_err(|e| e.to_string())?;
        let word = from_colored(&path).map_err(|e| e.to_string())?;
        println!("{word}");
        return Ok(ExitCode::SUCCESS);
    }
    let word_text = args.word.ok_or("either --word or --inverse is required")?;
    let slope = args.slope.ok_or("--slope is required with --word")?;
    let word = DyckWord::validate(slope, &word_text).map_err(|e| e.to_string())?;
    let path = to_colored(&word).map_err(|e| e.to_string())?;
    if args.text {
        println!("{path}");
    } else {
        println!("{}", path.to_json());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_list(args: ListArgs) -> Result<ExitCode, String> {
    if args.n == 0 {
        return Err("--n must be at least 1".into());
    }
    let mut lines = Vec::new();
    oracle::for_each_word(args.slope, args.n, &mut |w| {
        let keep = match args.filter {
            None => true,
            Some(WordFilter::FactorFree) => w.is_factor_free().unwrap_or(false),
            Some(WordFilter::StronglyBelow) => {
                let heights = w.height_profile();
                heights[..heights.len() - 1].iter().all(|&h| h > 0)
            }
        };
        if keep {
            lines.push(w.to_string());
        }
    });
    for line in lines {
        println!("{line}");
    }
    Ok(ExitCode::SUCCESS)
}

/// Built-in table rows: slope, OEIS id, number of terms shown.
const TABLE_ROWS: &[(&str, &str, usize)] = &[
    ("3/2", "A005807", 12),
    ("5/2", "A274052", 10),
    ("7/2", "A274244", 9),
    ("9/2", "A274256", 8),
    ("4/3", "A274257", 8),
    ("5/3", "A274258", 8),
    ("7/3", "A274259", 7),
];

fn cmd_table(args: TableArgs) -> Result<ExitCode, String> {
    let mut rows = Vec::new();
    for &(slope_text, oeis, terms) in TABLE_ROWS {
        let slope = Slope::parse(slope_text).map_err(|e| e.to_string())?;
        let values: Result<Vec<String>, String> = (1..=terms)
            .map(|n| {
                theta_n(slope, n)
                    .map(|v| v.to_string())
                    .map_err(|e| e.to_string())
            })
            .collect();
        rows.push((slope_text, oeis, values?));
    }
    if args.json {
        let object: serde_json::Map<String, serde_json::Value> = rows
            .into_iter()
            .map(|(slope, oeis, values)| {
                (
                    slope.to_string(),
                    serde_json::json!({ "oeis": oeis, "theta": values }),
                )
            })
            .collect();
        println!("{}", serde_json::Value::Object(object));
    } else if args.csv {
        for (slope, oeis, values) in rows {
            println!("{slope},{oeis},{}", values.join(","));
        }
    } else {
        for (slope, oeis, values) in rows {
            println!("{slope} [{oeis}]: {}", values.join(", "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let budget = args
        .budget
        .or_else(|| std::env::var("RD_BUDGET").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(oracle::DEFAULT_BUDGET);
    let config = VerifyConfig {
        slopes: if args.slope_set.is_empty() {
            verify::default_slopes()
        } else {
            args.slope_set
        },
        n_max: args.n_max,
        budget,
        perturb_theta: args.perturb_theta,
    };
    let results = verify::run(&config);
    let mut all_passed = true;
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("{status} {} ({})", r.name, r.detail);
        all_passed &= r.passed;
    }
    println!(
        "{}/{} checks passed",
        results.iter().filter(|r| r.passed).count(),
        results.len()
    );
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
