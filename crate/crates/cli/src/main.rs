use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use ticf_cli::{run, Cli, CliError, EXIT_OK, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::from(EXIT_OK);
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or_default();
            eprintln!("error[usage]: {}", first.trim_start_matches("error: "));
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::from(EXIT_OK)
        }
        Err(e) => {
            if let CliError::SelfTest { report, .. } = &e {
                print!("{report}");
            }
            eprintln!("{}", e.render());
            ExitCode::from(e.exit_code())
        }
    }
}
