use std::io::Write;
use std::process::ExitCode;

use beta_exact::cli;

fn main() -> ExitCode {
    let capacity = match cli::capacity_from_env() {
        Ok(c) => c,
        Err(m) => {
            eprintln!("error: {m}");
            return ExitCode::from(cli::EXIT_USAGE as u8);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut err = std::io::stderr();
    let code = cli::run(std::env::args_os(), capacity, &mut out, &mut err);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
