mod args;
mod commands;
mod error;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, DecomposeAction, ScenarioAction};
use commands::Outcome;

fn dispatch(cli: &Cli) -> error::Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::Scenarios { action } => match action {
            ScenarioAction::List => commands::scenarios::list(format),
            ScenarioAction::Run { name, tol } => commands::scenarios::run(name, *tol, format),
        },
        Command::Weakvalue(files) => commands::weakvalue::run(files, format),
        Command::Decompose { action } => match action {
            DecomposeAction::Solve { files, p, tol } => {
                commands::decompose::solve(files, *p, *tol, format)
            }
            DecomposeAction::Verify(args) => commands::decompose::verify(args, format),
        },
        Command::Pointer(args) => commands::pointer::run(args, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match dispatch(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("weakval: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
