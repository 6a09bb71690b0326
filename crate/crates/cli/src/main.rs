use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use p3crank::cranks::CaseLabel;
use p3crank::partitions::Partition3;
use p3crank_cli::{
    cmd_count, cmd_cycles, cmd_decompose, cmd_histogram, cmd_hstar, cmd_rectangle, cmd_residues, cmd_tile,
    cmd_verify, configure_workers, CliError, CountMethod, CrankChoice, CycleFormat, Exit, Output, WORKERS_ENV,
};

/// Partitions into three parts: counting, box decomposition, divisibility and cranks.
///
/// Sweeps use one worker per logical core unless P3CRANK_WORKERS is set.
#[derive(Parser)]
#[command(name = "p3crank", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate p(n,3) with one method or all of them
    Count {
        n: u64,
        /// brute, nearest, monomial, binomial, circulator or all
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// Box decomposition of a partition, e.g. `decompose 13 4 3` or `decompose 13,4,3`
    Decompose {
        #[arg(required = true, num_args = 1..=3)]
        parts: Vec<String>,
    },
    /// Counts of fundamental-box points by height
    Hstar,
    /// Residues of n mod 6m for which m divides p(n,3)
    Residues { m: u64 },
    /// Check the residue characterization and crank uniformity for all n up to max_n
    Verify { m: u64, max_n: u64 },
    /// Crank value counts over P(n,3)
    Histogram {
        n: u64,
        m: u64,
        #[arg(long, value_enum, default_value_t = CrankArg::Ls)]
        crank: CrankArg,
    },
    /// Cycles of the row-walking permutation of P(n,3)
    Cycles {
        n: u64,
        m: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Rectangle plan for n = 6m·k' + r' and its cover check
    Rectangle {
        m: u64,
        k_prime: u64,
        /// one of 0, 1, 2, -1, -2, 2m-2, -(2m-2), 2m+1, -(2m+1)
        #[arg(allow_hyphen_values = true)]
        case: String,
        /// use a layout on which largest-minus-smallest is read off the rectangle
        #[arg(long)]
        labeled: bool,
        /// write the cell-to-partition mapping as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Draw P(n,3) coloured by box remainder as SVG
    Tile { n: u64, svg: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum CrankArg {
    Ls,
    Ehrhart,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

fn parse_parts(raw: &[String]) -> Result<[u64; 3], CliError> {
    let joined = raw.join(" ");
    let lambda: Partition3 = joined.parse()?;
    Ok(lambda.parts())
}

fn run(cmd: Cmd) -> Result<Output, CliError> {
    match cmd {
        Cmd::Count { n, method } => cmd_count(n, method.parse::<CountMethod>()?),
        Cmd::Decompose { parts } => cmd_decompose(parse_parts(&parts)?),
        Cmd::Hstar => cmd_hstar(),
        Cmd::Residues { m } => cmd_residues(m),
        Cmd::Verify { m, max_n } => cmd_verify(m, max_n),
        Cmd::Histogram { n, m, crank } => {
            let crank = match crank {
                CrankArg::Ls => CrankChoice::LargestMinusSmallest,
                CrankArg::Ehrhart => CrankChoice::Ehrhart,
            };
            cmd_histogram(n, m, crank)
        }
        Cmd::Cycles { n, m, format } => {
            let format = match format {
                FormatArg::Csv => CycleFormat::Csv,
                FormatArg::Json => CycleFormat::Json,
            };
            cmd_cycles(n, m, format)
        }
        Cmd::Rectangle { m, k_prime, case, labeled, csv } => {
            let case: CaseLabel = case.parse()?;
            cmd_rectangle(m, k_prime, case, labeled, csv.as_deref())
        }
        Cmd::Tile { n, svg } => cmd_tile(n, &svg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_workers(std::env::var(WORKERS_ENV).ok().as_deref()).and_then(|()| run(cli.command));
    let exit = match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(Exit::InputError as u8);
            }
            out.exit
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit()
        }
    };
    ExitCode::from(exit as u8)
}
