mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use jn_core::corpus::random_point_bases;
use jn_core::{PointBasis, Rational};

use commands::{Format, GraphFormat, InvertMode};
use input::{Failure, InputArgs};

#[derive(Parser)]
#[command(
    name = "jn",
    version,
    about = "Jumping numbers of simple complete ideals and plane branches, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the jumping numbers up to a bound with their decompositions
    Jumps {
        #[command(flatten)]
        input: InputArgs,
        /// Upper bound, an exact rational such as 3/2
        #[arg(long, value_name = "P/Q", default_value = "2")]
        up_to: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the dual graph of the resolution
    DualGraph {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Recover the ideal or branch from its jumping numbers
    Invert {
        /// Comma-separated jumps; ideal mode needs all of (0, 2], curve mode all of (0, 1)
        #[arg(long, value_name = "P/Q,...", conflicts_with = "file", required_unless_present = "file")]
        jumps: Option<String>,
        /// File with one jump per line; `#` starts a comment
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = InvertMode::Ideal)]
        mode: InvertMode,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare the closed form with the brute-force oracle and the c_R evaluators
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Seeded random corpus instead of a single input
        #[arg(
            long,
            num_args = 4,
            value_names = ["N_MAX", "A_MAX", "COUNT", "SEED"],
            conflicts_with = "source"
        )]
        random: Option<Vec<u64>>,
        #[arg(long, value_name = "P/Q", default_value = "2")]
        up_to: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the structural invariants of the ideal
    Info {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn bound(text: &str) -> Result<Rational, Failure> {
    input::rational(text)
}

fn run(command: Command) -> Result<(String, Option<Failure>), Failure> {
    let plain = |s: String| (s, None);
    match command {
        Command::Jumps { input, up_to, format } => {
            let bound = bound(&up_to)?;
            commands::jumps(&input.resolve()?, &bound, format).map(plain)
        }
        Command::DualGraph { input, format } => commands::dual_graph(&input.resolve()?, format).map(plain),
        Command::Info { input, format } => commands::info(&input.resolve()?, format).map(plain),
        Command::Invert { jumps, file, mode, format } => {
            let values = match (jumps, file) {
                (Some(text), _) => input::rationals(&text)?,
                (None, Some(path)) => {
                    let content = std::fs::read_to_string(&path)
                        .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))?;
                    input::jump_file(&content)?
                }
                (None, None) => return Err(Failure::Parse("--jumps or --file is required".into())),
            };
            commands::invert(&values, mode, format).map(plain)
        }
        Command::Verify { input, random, up_to, format } => {
            let bound = bound(&up_to)?;
            let instances: Vec<(String, PointBasis)> = match random {
                Some(args) => {
                    let (n_max, a_max, count, seed) = (args[0] as usize, args[1], args[2] as usize, args[3]);
                    if n_max == 0 || a_max == 0 {
                        return Err(Failure::Validation("N_MAX and A_MAX must be positive".into()));
                    }
                    random_point_bases(n_max, a_max, count, seed).into_iter().map(|b| (b.to_string(), b)).collect()
                }
                None => {
                    let r = input.resolve()?;
                    let b = r.ideal.basis().clone();
                    vec![(b.to_string(), b)]
                }
            };
            let report = commands::verify(&instances, &bound, format)?;
            let failure =
                (report.failed > 0).then(|| Failure::Mismatch(format!("{} instance(s) failed", report.failed)));
            Ok((report.text, failure))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, failure)) => {
            print!("{out}");
            match failure {
                None => ExitCode::SUCCESS,
                Some(f) => {
                    eprintln!("jn: {f}");
                    ExitCode::from(f.code() as u8)
                }
            }
        }
        Err(f) => {
            eprintln!("jn: {f}");
            ExitCode::from(f.code() as u8)
        }
    }
}
