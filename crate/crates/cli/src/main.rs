mod args;
mod commands;
mod error;
mod input;
mod render;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match &cli.command {
        Command::Decompose(a) => commands::decompose_cmd(a),
        Command::Geodesic(a) => commands::geodesic_cmd(a),
        Command::Npc(a) => commands::npc_cmd(a),
        Command::Verify(a) => commands::verify_cmd(a),
        Command::Render(a) => commands::render_cmd(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("msr: {e}");
            ExitCode::from(error::CliError::EXIT_CODE)
        }
    }
}
