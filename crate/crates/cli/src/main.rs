use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let (out, err, status) = skewsym_cli::main_with(&args, &mut std::io::stdin().lock());
    // A closed stdout or stderr has nowhere left to report to.
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    ExitCode::from(status)
}
