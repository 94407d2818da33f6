use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use delsarte::commands::{self, ClassKind, CommandError, CountOptions, Group};
use delsarte::spotcheck::DEFAULT_SEED;
use delsarte::Outcome;

#[derive(Parser)]
#[command(name = "delsarte", version, about = "Monomial deformations of Delsarte hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    #[value(name = "G")]
    G,
    #[value(name = "Gmax")]
    Gmax,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Strong,
    Weak,
}

#[derive(Subcommand)]
enum Command {
    /// Cover degree, cover vector and the dimension triple of one family.
    Analyze { family: String },
    /// The table of the ten registry families as TSV.
    Table10 {
        /// Comma-separated registry indices to keep.
        #[arg(long, value_delimiter = ',', num_args = 0..=1)]
        only: Option<Vec<usize>>,
        /// Extra families (registry keys or JSON files) appended as rows.
        extra: Vec<String>,
    },
    /// Invariant monomial types, PF-marked.
    Invariants {
        family: String,
        #[arg(long, value_enum, default_value = "G")]
        group: GroupArg,
    },
    /// Equivalence classes of the invariant types.
    Classes {
        family: String,
        #[arg(long, value_enum, default_value = "strong")]
        kind: KindArg,
    },
    /// Common Frobenius factor at lambda = 0 over F_q.
    CommonFactor {
        #[arg(required = true)]
        families: Vec<String>,
        #[arg(long)]
        q: u64,
        /// Work at this multiple of the joint cover degree.
        #[arg(long, default_value_t = 1)]
        multiple: u64,
    },
    /// Points of X_lambda over F_{q^ext}.
    Count {
        family: String,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 0)]
        lambda: u64,
        #[arg(long, default_value_t = 1)]
        ext: u32,
        /// Every lambda of the prime field, with a general-position test of the cover.
        #[arg(long)]
        scan: bool,
        /// Extension degrees searched by the general-position test.
        #[arg(long, default_value_t = 1)]
        max_ext: u32,
    },
    /// Checklist for the del Pezzo bitangent computations.
    VerifyAppendix {
        /// Comma-separated check-name prefixes.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<Outcome, CommandError> {
    match cli.command {
        Command::Analyze { family } => commands::analyze(&family),
        Command::Table10 { only, extra } => Ok(commands::table10(only.as_deref(), &extra)),
        Command::Invariants { family, group } => commands::invariants(
            &family,
            match group {
                GroupArg::G => Group::G,
                GroupArg::Gmax => Group::Gmax,
            },
        ),
        Command::Classes { family, kind } => commands::classes(
            &family,
            match kind {
                KindArg::Strong => ClassKind::Strong,
                KindArg::Weak => ClassKind::Weak,
            },
        ),
        Command::CommonFactor { families, q, multiple } => commands::common_factor(&families, q, multiple),
        Command::Count { family, q, lambda, ext, scan, max_ext } => {
            commands::count(&family, &CountOptions { q, lambda, ext, scan, max_ext })
        }
        Command::VerifyAppendix { only, seed } => Ok(commands::verify_appendix(only.as_deref(), seed)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            print!("{}", outcome.out);
            if outcome.ok() {
                ExitCode::SUCCESS
            } else {
                eprint!("{}", outcome.failure_text());
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
