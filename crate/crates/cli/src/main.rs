//! `wcx`: build weighted Coxeter complexes, certify their shellability
//! and ball/sphere type, and verify the alternating-sum identities by
//! independent routes, all in exact rational arithmetic.
//!
//! Exit codes: 0 when every check passes, 1 when checks ran and at
//! least one failed, 2 on usage, parse, precondition, or cap errors
//! (with a machine-readable error object on stdout).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wcx_core::EnumerationCaps;
use wcx_io::parse::{parse_lambda, parse_order_file, parse_rat};
use wcx_io::report::{
    complex_report, compute_report, shell_report, sweep_report, JsonReport, OrderSource,
    Population, Which,
};
use wcx_io::{IoError, IoResult};

#[derive(Parser)]
#[command(name = "wcx", version, about = "Weighted Coxeter complex toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the face-side and matching-side sums by one or more routes
    Compute {
        /// Comma-separated exact weights, e.g. 5,1,-2,-3 or 1/2,-3/4
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Values to compute: S, T, Tpf, Srec, Sdec (default: all)
        #[arg(value_name = "VALUE")]
        values: Vec<String>,
        /// Compute every applicable route
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        caps: CapArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build the weighted complex: f-vector, facets, classification
    Complex {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Include the full face list (needed to re-parse the complex)
        #[arg(long)]
        export: bool,
        #[command(flatten)]
        caps: CapArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Produce a facet order and verify that it shells the complex
    Shell {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Where the facet order comes from
        #[arg(long, value_enum, default_value_t = OrderSourceArg::LinearExtensionSample)]
        order_source: OrderSourceArg,
        /// Facet order file (one permutation per line) for --order-source file
        #[arg(long)]
        order_file: Option<PathBuf>,
        /// Seed for the sampled linear extension
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Perturb repeated weights before the lexicographic order
        #[arg(long)]
        perturb: bool,
        #[command(flatten)]
        caps: CapArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the invariant suites over a grid or random population
    Sweep {
        /// Ground set size
        #[arg(long)]
        n: usize,
        /// Comma-separated grid values; every vector over them is tested
        #[arg(long, conflicts_with = "random", allow_hyphen_values = true)]
        grid: Option<String>,
        /// Number of seeded random weight vectors
        #[arg(long)]
        random: Option<usize>,
        /// Seed for the random population
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        caps: CapArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OrderSourceArg {
    LinearExtensionSample,
    LexEl,
    File,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct CapArgs {
    /// Override the ordered-partition enumeration cap
    #[arg(long)]
    cap_faces: Option<usize>,
    /// Override the matching enumeration cap
    #[arg(long)]
    cap_matchings: Option<usize>,
}

impl CapArgs {
    fn to_caps(&self) -> EnumerationCaps {
        let defaults = EnumerationCaps::default();
        EnumerationCaps {
            max_partition_n: self.cap_faces.unwrap_or(defaults.max_partition_n),
            max_matching_n: self.cap_matchings.unwrap_or(defaults.max_matching_n),
        }
    }
}

fn run(command: &Command) -> IoResult<(JsonReport, Format, Option<PathBuf>)> {
    match command {
        Command::Compute {
            lambda,
            values,
            all,
            caps,
            output,
        } => {
            let lambda = parse_lambda(lambda)?;
            let which: Vec<Which> = values
                .iter()
                .map(|v| Which::parse(v))
                .collect::<IoResult<_>>()?;
            let all = *all || which.is_empty();
            let report = compute_report(&lambda, &which, all, &caps.to_caps())?;
            Ok((report, output.format, output.out.clone()))
        }
        Command::Complex {
            lambda,
            export,
            caps,
            output,
        } => {
            let lambda = parse_lambda(lambda)?;
            let report = complex_report(&lambda, *export, &caps.to_caps())?;
            Ok((report, output.format, output.out.clone()))
        }
        Command::Shell {
            lambda,
            order_source,
            order_file,
            seed,
            perturb,
            caps,
            output,
        } => {
            let lambda = parse_lambda(lambda)?;
            let source = match order_source {
                OrderSourceArg::LinearExtensionSample => OrderSource::LinearExtensionSample,
                OrderSourceArg::LexEl => OrderSource::LexEl,
                OrderSourceArg::File => {
                    let path = order_file
                        .as_ref()
                        .ok_or_else(|| IoError::Parse("--order-source file needs --order-file".into()))?;
                    let text = fs::read_to_string(path)
                        .map_err(|e| IoError::OrderFile(format!("{}: {e}", path.display())))?;
                    OrderSource::Explicit(parse_order_file(&text)?)
                }
            };
            let report = shell_report(&lambda, &source, *seed, *perturb, &caps.to_caps())?;
            Ok((report, output.format, output.out.clone()))
        }
        Command::Sweep {
            n,
            grid,
            random,
            seed,
            caps,
            output,
        } => {
            let population = match (grid, random) {
                (Some(values), None) => Population::Grid(
                    values
                        .split(',')
                        .map(parse_rat)
                        .collect::<IoResult<Vec<_>>>()?,
                ),
                (None, Some(count)) => Population::Random(*count),
                _ => {
                    return Err(IoError::Parse(
                        "exactly one of --grid or --random is required".into(),
                    ))
                }
            };
            let report = sweep_report(*n, &population, *seed, &caps.to_caps())?;
            Ok((report, output.format, output.out.clone()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((report, format, out)) => {
            let rendered = match format {
                Format::Json => report.to_json_string(),
                Format::Text => report.to_text(),
            };
            match out {
                Some(path) => {
                    if let Err(e) = fs::write(&path, &rendered) {
                        eprintln!("cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{rendered}"),
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            println!("{}", err.to_json());
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
