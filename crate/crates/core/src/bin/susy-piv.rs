use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(susy_piv::cli::main_with_args(std::env::args_os()))
}
