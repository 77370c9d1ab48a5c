use std::process::ExitCode;

fn main() -> ExitCode {
    zeta_resonance::cli::run()
}
