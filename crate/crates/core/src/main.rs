use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = coprod::cli::run(std::env::args_os());
    // Usage and parse errors go to stderr; a closed pipe is not worth a panic.
    let _ = if code == 2 {
        std::io::stderr().lock().write_all(out.as_bytes())
    } else {
        std::io::stdout().lock().write_all(out.as_bytes())
    };
    ExitCode::from(code as u8)
}
