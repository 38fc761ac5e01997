use std::process::ExitCode;

use qclone::{emit, parse_args, run, CliError, ParseOutcome};

fn main() -> ExitCode {
    match try_main() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qclone: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn try_main() -> Result<(), CliError> {
    let cfg = match parse_args(std::env::args_os())? {
        ParseOutcome::Run(cfg) => cfg,
        ParseOutcome::Info(text) => {
            print!("{text}");
            return Ok(());
        }
    };
    let csv = run(&cfg)?;
    emit(&cfg, &csv)
}
