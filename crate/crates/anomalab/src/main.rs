use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() || args.iter().any(|a| a == "--help" || a == "-h" || a == "--version" || a == "-V") {
        // Let clap print help or version and exit on its own.
        use clap::Parser;
        let _ = anomalab::commands::Cli::parse();
    }
    let has_out = args.iter().any(|a| a == "--out" || a.starts_with("--out="));
    match anomalab::run_args(&args) {
        Ok(outcome) => {
            if !has_out {
                let _ = std::io::stdout().write_all(outcome.json.as_bytes());
            }
            ExitCode::from(outcome.exit)
        }
        Err(e) => {
            eprintln!("anomalab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
