use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use weyl_cli::commands::{
    cmd_bench, cmd_normalize, cmd_table, cmd_verify, parse_rational_arg, TableKind,
};
use weyl_cli::{CliError, Format, Output};
use weyl_order::harness::DEFAULT_WORD_CAP;
use weyl_order::SweepConfig;

#[derive(Parser)]
#[command(name = "weyl", version, about = "Exact normal ordering and ordering-identity checks in the Weyl algebra")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Maximum number of words enumerated for one T_{m,n}.
    #[arg(long, global = true, default_value_t = DEFAULT_WORD_CAP)]
    cap: u64,
    /// Seed for randomized property sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical q-before-p form of an expression.
    Normalize { expr: String },
    /// Check an identity over a parameter grid.
    Verify {
        /// THM1, THM2, LEM1, LEM2_COMMUTANT, PROP_EXPAN, LEM3_1, LEM3_2,
        /// PROP_GENFUN, PROP_TMN, REMARK_14 or REMARK_15.
        identity: String,
        #[arg(long, default_value = "0..4")]
        m: String,
        #[arg(long, default_value = "0..4")]
        n: String,
    },
    /// Tabulate T_{m,n} for m+n <= K or the polynomials Q_n^(alpha) for n <= K.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long)]
        max: u32,
        #[arg(long, default_value = "1/2")]
        alpha: String,
    },
    /// Time closed-form block reduction against single-step rewriting.
    Bench {
        #[arg(long)]
        max: u32,
        #[arg(long, default_value_t = 3)]
        reps: u32,
    },
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let cfg = SweepConfig { word_cap: cli.cap, seed: cli.seed };
    match &cli.command {
        Command::Normalize { expr } => cmd_normalize(expr, cli.format),
        Command::Verify { identity, m, n } => cmd_verify(identity, m, n, &cfg, cli.format),
        Command::Table { kind, max, alpha } => {
            cmd_table(*kind, *max, &parse_rational_arg(alpha)?, cli.format)
        }
        Command::Bench { max, reps } => cmd_bench(*max, *reps, cli.cap, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
