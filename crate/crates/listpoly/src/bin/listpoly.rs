use clap::Parser;

use listpoly::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.report);
            std::process::exit(outcome.code);
        }
        Err((err, code)) => {
            eprintln!("error: {err}");
            std::process::exit(code);
        }
    }
}
