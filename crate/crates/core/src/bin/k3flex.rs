use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use k3flex::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (output, status) = run(&cli);
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(output.stdout.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(1);
    }
    if !output.stderr.is_empty() {
        eprint!("{}", output.stderr);
    }
    ExitCode::from(status.code())
}
