//! `legrack`: Legendrian rack invariants from front codes.
//!
//! Worker threads follow `RAYON_NUM_THREADS`; output does not depend on it.

mod commands;
mod input;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Debug, Parser)]
#[command(name = "legrack", version, about = "Legendrian rack invariants of front-projection codes")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CodeArg {
    /// Front code (e.g. "U,D") or a path to a knot file.
    #[arg(long)]
    code: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate a front code.
    Validate(CodeArg),
    /// Writhe, cusp counts, Thurston-Bennequin number and rotation number.
    Invariants(CodeArg),
    /// Rack presentation read off the front.
    Present(CodeArg),
    /// Count colorings into finite n-Legendrian racks.
    Color {
        #[command(flatten)]
        code: CodeArg,
        /// Legendrian index n.
        #[arg(long)]
        n: u32,
        /// Target rack: ck:<k>, dihedral:<k>, trivial:<m>, or a table JSON path. Repeatable.
        #[arg(long = "target", required = true)]
        targets: Vec<String>,
    },
    /// Try to separate two crossingless unknots with cyclic targets.
    Distinguish {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Odd prime powers to try, e.g. "3,5,3^2". Defaults to all up to the larger strand count.
        #[arg(long)]
        budget: Option<String>,
    },
    /// Search for a coloring proving the knot's n-Legendrian rack nontrivial.
    TrivialCheck {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long, default_value_t = 1)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        /// Largest enumerated target order.
        #[arg(long, default_value_t = 5)]
        max_order: usize,
    },
    /// Enumerate racks of one order up to isomorphism.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Keep only n-Legendrian racks.
        #[arg(long, conflicts_with = "quandle")]
        legendrian: Option<u32>,
        /// Keep only quandles.
        #[arg(long)]
        quandle: bool,
        /// Write one table JSON file per rack into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Legendrian Reidemeister moves.
    Moves {
        #[command(subcommand)]
        action: MovesCommand,
    },
    /// Exhaustive identity checks on a finite rack.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Nontriviality and coloring grid over a directory of knot files.
    Table {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long, default_value_t = 1)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long, default_value_t = 5)]
        max_order: usize,
        /// Extra coloring columns. Repeatable.
        #[arg(long = "target")]
        targets: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
enum MovesCommand {
    /// Every applicable move site.
    List { code: String },
    /// Apply one move, given as e.g. "LR1-A.0:fwd@3".
    Apply { code: String, site: String },
    /// Seeded random walk, checking invariants at every step.
    Fuzz {
        code: String,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coloring count to track, as "n=<n>,target=<t>". Repeatable.
        #[arg(long = "check")]
        checks: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Universal rack identities, plus the n-Legendrian ones with --n.
    Lemmas {
        #[arg(long)]
        target: String,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Cusp predicate axioms for the definable predicates.
    Predicates {
        #[arg(long)]
        target: String,
        #[arg(long)]
        n: u32,
    },
}

fn run(cli: Cli) -> Result<output::Output, commands::Failure> {
    use commands as c;
    match cli.command {
        Command::Validate(a) => c::validate(&a.code),
        Command::Invariants(a) => c::invariants(&a.code),
        Command::Present(a) => c::present(&a.code),
        Command::Color { code, n, targets } => c::color(&code.code, n, &targets),
        Command::Distinguish { a, b, budget } => c::distinguish(&a, &b, budget.as_deref()),
        Command::TrivialCheck { code, n_min, n_max, max_order } => {
            c::trivial_check(&code.code, n_min, n_max, max_order)
        }
        Command::Enumerate { order, legendrian, quandle, out } => {
            c::enumerate(order, legendrian, quandle, out.as_deref())
        }
        Command::Moves { action } => match action {
            MovesCommand::List { code } => c::moves_list(&code),
            MovesCommand::Apply { code, site } => c::moves_apply(&code, &site),
            MovesCommand::Fuzz { code, steps, seed, checks } => c::moves_fuzz(&code, steps, seed, &checks),
        },
        Command::Verify { what } => match what {
            VerifyCommand::Lemmas { target, n } => c::verify_lemmas(&target, n),
            VerifyCommand::Predicates { target, n } => c::verify_predicates(&target, n),
        },
        Command::Table { dir, n_min, n_max, max_order, targets } => {
            c::table(&dir, n_min, n_max, max_order, &targets)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => match out.render(format) {
            Some(text) => {
                let mut stdout = std::io::stdout().lock();
                if stdout.write_all(text.as_bytes()).is_err() {
                    return ExitCode::from(1);
                }
                ExitCode::SUCCESS
            }
            None => {
                eprintln!("error: this command has no {format:?} output");
                ExitCode::from(2)
            }
        },
        Err(commands::Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(commands::Failure::Domain(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(commands::Failure::Reported(out)) => {
            if let Some(text) = out.render(format) {
                print!("{text}");
            }
            ExitCode::from(1)
        }
    }
}
