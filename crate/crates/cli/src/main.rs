use std::io::Write;
use std::panic;
use std::process::ExitCode;

use clap::Parser;
use qpart_cli::{run, Cli, Format};

const COUNTEREXAMPLE: u8 = 1;
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.command.format();

    let outcome = match panic::catch_unwind(|| run(&cli.command)) {
        Ok(Ok(outcome)) => outcome,
        Ok(Err(err)) => {
            eprintln!("error: {err:#}");
            return ExitCode::from(USAGE);
        }
        // the panic hook has already reported it
        Err(_) => return ExitCode::from(USAGE),
    };

    let text = match format {
        Format::Json => outcome.record.to_json() + "\n",
        Format::Csv => outcome.record.to_csv(),
    };
    if let Err(err) = std::io::stdout().lock().write_all(text.as_bytes()) {
        eprintln!("error: writing output: {err}");
        return ExitCode::from(USAGE);
    }
    if outcome.counterexample {
        ExitCode::from(COUNTEREXAMPLE)
    } else {
        ExitCode::SUCCESS
    }
}
