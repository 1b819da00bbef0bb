//! `skewpart`: command-line front end. Exit codes: 0 success (including
//! "nothing found"), 2 input error, 3 precondition failure, 1 internal error.

mod args;
mod report;
mod run;

use std::io::Write as _;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use run::CliError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Gen(g) => run::run_gen(g),
        cmd => set_threads(cmd).and_then(|()| run::run_graph_command(cmd)),
    };
    match out {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn set_threads(cmd: &Command) -> Result<(), CliError> {
    let threads = match cmd {
        Command::Verify { graph, .. } => graph.threads,
        Command::TightList(a)
        | Command::UnbalancedTightList(a)
        | Command::Loose(a)
        | Command::Balanced(a)
        | Command::KrList(a)
        | Command::CcTree(a)
        | Command::Colour(a)
        | Command::CheckBerge(a) => a.threads,
        Command::Gen(_) => None,
    };
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
            .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    Ok(())
}
