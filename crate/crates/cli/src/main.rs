use std::io::{Read, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use zeon_cli::{input_path, run, Cli, Failure};

fn fail(f: Failure) -> ExitCode {
    println!("{}", f.to_json());
    ExitCode::from(f.status as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };

    let text = match input_path(&cli) {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display())),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map(|_| s)
                .map_err(|e| format!("cannot read standard input: {e}"))
        }
    };
    let text = match text {
        Ok(t) => t,
        Err(detail) => {
            return fail(Failure {
                status: 1,
                code: "io_error".into(),
                detail,
            })
        }
    };

    match run(&cli, &text) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, out),
                None => std::io::stdout().write_all(out.as_bytes()),
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(Failure {
                    status: 1,
                    code: "io_error".into(),
                    detail: e.to_string(),
                }),
            }
        }
        Err(f) => fail(f),
    }
}
