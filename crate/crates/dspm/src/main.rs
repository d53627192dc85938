use std::io::Write;

use clap::Parser;
use dspm::cli::{execute, Cli};
use dspm::ExitCode;

fn main() {
    let cli = Cli::parse();
    let stdin = std::io::stdin();
    let outcome = execute(&cli, &mut stdin.lock(), &mut std::io::stderr());
    let written = match &cli.out {
        Some(path) => {
            std::fs::write(path, &outcome.stdout).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => std::io::stdout()
            .write_all(outcome.stdout.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        std::process::exit(ExitCode::Failure as i32);
    }
    std::process::exit(outcome.status as i32);
}
