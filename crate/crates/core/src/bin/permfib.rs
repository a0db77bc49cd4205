use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let env_cap = std::env::var(permfib::cli::MAX_N_ENV).ok();
    let code = permfib::cli::run(
        std::env::args_os(),
        env_cap.as_deref(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
