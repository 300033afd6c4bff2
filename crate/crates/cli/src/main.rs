use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use springergreen_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(springergreen_cli::EXIT_IO);
            }
            if let Some(t) = out.elapsed {
                eprintln!("elapsed {:.3}s", t.as_secs_f64());
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
