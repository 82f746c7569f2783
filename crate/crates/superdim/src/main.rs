use std::process::ExitCode;

use clap::{Parser, Subcommand};

use superdim::query::{self, Format};
use superdim::Error;

/// Exact dimensions and Hilbert series for typical representations of basic
/// classical Lie superalgebras.
#[derive(Parser)]
#[command(name = "superdim", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the distinguished root datum: roots, simple system, rho vectors
    Info {
        /// Algebra name, e.g. "sl(3|2)", "osp(3|2)", "D(2,1;1/2)", "F(4)"
        algebra: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Hilbert series, dimension polynomial, and typicality for one weight
    Series {
        algebra: String,
        /// Numerical marks, e.g. "0,1,1,1"
        #[arg(long, conflicts_with_all = ["coords", "weight"], allow_hyphen_values = true)]
        marks: Option<String>,
        /// Coordinate expression, e.g. "2e1+2e2+e3-1d2"
        #[arg(long, conflicts_with = "weight", allow_hyphen_values = true)]
        coords: Option<String>,
        /// Either form, prefixed: "marks=0,1,1,1" or "coords=2e1+e2"
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Number of expansion coefficients to print
        #[arg(long, default_value_t = 5)]
        terms: usize,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Enumerate the N-typical weights of a mark grid
    Scan {
        algebra: String,
        /// Inclusive integer range for one mark, e.g. --range a1=0..2
        #[arg(long = "range")]
        ranges: Vec<String>,
        /// Fixed rational value for one mark, e.g. --fix a3=1
        #[arg(long = "fix")]
        fixes: Vec<String>,
        #[arg(long, default_value_t = 4)]
        terms: usize,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Dimension sequence of a singly-atypical sl(m|n) weight, with the
    /// typical-formula upper bounds
    Atypical {
        algebra: String,
        #[arg(long, conflicts_with = "coords", allow_hyphen_values = true)]
        marks: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        coords: Option<String>,
        #[arg(long, default_value_t = 6)]
        terms: usize,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Run every series query in a TOML or JSON batch file
    Batch { file: std::path::PathBuf },
}

fn weight_arg(
    marks: Option<String>,
    coords: Option<String>,
    weight: Option<String>,
) -> Result<String, Error> {
    match (marks, coords, weight) {
        (Some(m), None, None) => Ok(format!("marks={m}")),
        (None, Some(c), None) => Ok(format!("coords={c}")),
        (None, None, Some(w)) => Ok(w),
        _ => Err(Error::Parse {
            position: 0,
            message: "specify the weight with exactly one of --marks, --coords, --weight"
                .to_string(),
        }),
    }
}

fn run(cli: Cli) -> Result<String, Error> {
    match cli.command {
        Command::Info { algebra, format } => query::run_info(&algebra, format.parse()?),
        Command::Series {
            algebra,
            marks,
            coords,
            weight,
            terms,
            format,
        } => {
            let weight = weight_arg(marks, coords, weight)?;
            query::run_series(&algebra, &weight, terms, format.parse()?)
        }
        Command::Scan {
            algebra,
            ranges,
            fixes,
            terms,
            format,
        } => query::run_scan(&algebra, &ranges, &fixes, terms, format.parse()?),
        Command::Atypical {
            algebra,
            marks,
            coords,
            terms,
            format,
        } => {
            let weight = weight_arg(marks, coords, None)?;
            let format: Format = format.parse()?;
            query::run_atypical(&algebra, &weight, terms, format)
        }
        Command::Batch { file } => {
            let content = std::fs::read_to_string(&file).map_err(|e| Error::Parse {
                position: 0,
                message: format!("cannot read {}: {e}", file.display()),
            })?;
            let is_toml = file.extension().is_none_or(|ext| ext != "json");
            query::run_batch(&content, is_toml)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e @ Error::Internal(_)) => {
            eprintln!("internal error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
