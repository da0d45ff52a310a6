use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    trinorm::run(std::env::args_os(), &mut stdout.lock())
}
