use clap::error::ErrorKind;
use clap::Parser;

use zetalab::cli::{run, RunConfig};

fn main() {
    let config = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(e) = run(config) {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
