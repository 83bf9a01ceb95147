use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use qserre_cli::args::Cli;
use qserre_cli::{output_args, run};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    for w in &out.warnings {
        eprintln!("warning: {w}");
    }
    let written = match &output_args(&cli).output {
        Some(path) => fs::write(path, &out.body).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => io::stdout()
            .write_all(out.body.as_bytes())
            .map_err(|e| format!("cannot write output: {e}")),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(out.code)
}
