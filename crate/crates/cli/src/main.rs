use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = dcrystal_cli::run_from(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.output.as_bytes());
    let _ = stdout.flush();
    if let Some(msg) = &outcome.message {
        eprintln!("{msg}");
    }
    ExitCode::from(outcome.code as u8)
}
