use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use kercoker_cli::{run, CliError, Command, Options};

#[derive(Parser)]
#[command(name = "kercoker", version, about = "n-kernels, n-cokernels and global dimensions over path algebras")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Subcommand)]
enum Cmd {
    /// Global dimensions of mod Λ and mod Λ^op.
    Gldim { file: PathBuf },
    /// Construct and verify n-cokernels of seeded random morphisms.
    CheckTheorem { file: PathBuf },
    /// Minimal projective resolutions of the simple modules.
    Resolve { file: PathBuf },
    /// Run the built-in algebras end to end.
    Demo,
}

#[derive(Args)]
struct Flags {
    /// Resolution length cutoff [default: 8, or the file's `cap cutoff`].
    #[arg(long, global = true)]
    cutoff: Option<usize>,
    /// Length n of the constructed n-cokernel; 0 selects the 0-cokernel.
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long, global = true, default_value_t = 100)]
    trials: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include the full trace of the first failing trial.
    #[arg(long, global = true)]
    trace: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        Cmd::Gldim { file } => Command::Gldim { file },
        Cmd::CheckTheorem { file } => Command::CheckTheorem { file },
        Cmd::Resolve { file } => Command::Resolve { file },
        Cmd::Demo => Command::Demo,
    };
    let options = Options {
        cutoff: cli.flags.cutoff,
        n: cli.flags.n,
        trials: cli.flags.trials,
        seed: cli.flags.seed,
        trace: cli.flags.trace,
    };
    match run(&command, &options) {
        Ok(report) => {
            if cli.flags.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e @ CliError::Spec(_)) | Err(e @ CliError::Usage(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
