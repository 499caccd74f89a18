use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = framix_cli::run(std::env::args_os(), &mut out, &mut std::io::stderr());
    out.flush().ok();
    ExitCode::from(code as u8)
}
