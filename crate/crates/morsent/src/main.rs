use std::io;
use std::process::ExitCode;

use clap::Parser;
use morsent::cli::{run, threads_from_env, Cli, Exit, Io, RunConfig};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(Exit::Usage.code() as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let cfg = match RunConfig::try_from(cli) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(Exit::Usage.code() as u8);
        }
    };
    let mut stdout = io::stdout();
    let mut stderr = io::stderr();
    let exit = run(
        &cfg,
        threads_from_env(),
        &mut Io {
            stdout: &mut stdout,
            stderr: &mut stderr,
        },
    );
    ExitCode::from(exit.code() as u8)
}
