use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let r = eqlr_cli::run(std::env::args_os());
    std::io::stdout().write_all(r.stdout.as_bytes()).ok();
    std::io::stderr().write_all(r.stderr.as_bytes()).ok();
    ExitCode::from(r.status as u8)
}
