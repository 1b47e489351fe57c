use std::process::ExitCode;

use clap::Parser;
use frustra_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, code)) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("reports serialize")
                );
            } else {
                print!("{report}");
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("frustra: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
