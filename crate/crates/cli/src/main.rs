use std::process::ExitCode;

use clap::Parser;
use hmodpi_cli::{render, run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = run(&cli);
    print!("{}", render(&outcome.report, cli.format));
    if let Some(msg) = outcome.report.get("error").and_then(|e| e.as_str()) {
        eprintln!("error: {msg}");
    }
    ExitCode::from(outcome.code as u8)
}
