use std::process::exit;

use clap::Parser;

use flexalloc::cli::{self, Cli, EXIT_PARSE};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = err.print();
            exit(code);
        }
    };
    if let Err(fail) = cli::run(&cli) {
        eprintln!("error: {}", fail.message);
        exit(fail.code);
    }
}
