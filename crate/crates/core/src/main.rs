use std::process::ExitCode;

fn main() -> ExitCode {
    env_logger::init();
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    let code = cubic_count::cli::run(std::env::args_os(), &mut stdout, &mut stderr);
    ExitCode::from(code as u8)
}
