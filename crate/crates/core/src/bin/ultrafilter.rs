use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ultrafilter::cli::{
    run_check, run_enumerate, run_extend, CheckKind, EnumerateKind, ExtendTarget, Outcome,
    EXIT_INPUT,
};

#[derive(Parser)]
#[command(
    name = "ultrafilter",
    version,
    about = "Check and extend filters over finite sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a family document against a filter-related predicate.
    Check {
        #[arg(long, value_enum)]
        kind: CheckKind,
        #[arg(long)]
        input: PathBuf,
    },
    /// Extend a family to a filter base, a filter or an ultrafilter.
    Extend {
        #[arg(long = "to", value_enum)]
        target: ExtendTarget,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Print each greedy step of the ultrafilter extension to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Enumerate every filter or ultrafilter over an n-element set.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: EnumerateKind,
        #[arg(long)]
        count_only: bool,
    },
}

fn read_input(path: &PathBuf) -> Result<String, Outcome> {
    fs::read_to_string(path).map_err(|e| Outcome {
        stdout: String::new(),
        stderr: format!("error: cannot read {}: {e}\n", path.display()),
        code: EXIT_INPUT,
    })
}

fn dispatch(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { kind, input } => match read_input(&input) {
            Ok(text) => run_check(kind, &text),
            Err(o) => o,
        },
        Command::Extend {
            target,
            input,
            output,
            trace,
        } => {
            let mut outcome = match read_input(&input) {
                Ok(text) => run_extend(target, &text, trace),
                Err(o) => return o,
            };
            if let (Some(path), 0) = (output, outcome.code) {
                if let Err(e) = fs::write(&path, &outcome.stdout) {
                    outcome
                        .stderr
                        .push_str(&format!("error: cannot write {}: {e}\n", path.display()));
                    outcome.code = EXIT_INPUT;
                }
                outcome.stdout.clear();
            }
            outcome
        }
        Command::Enumerate {
            n,
            kind,
            count_only,
        } => run_enumerate(n, kind, count_only),
    }
}

fn main() -> ExitCode {
    let outcome = dispatch(Cli::parse());
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
