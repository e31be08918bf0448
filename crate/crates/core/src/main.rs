use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(homcoh::cli::run())
}
