use clap::Parser;

use rainbow_connection::cli::{run, CommandConfig};

fn main() {
    let config = CommandConfig::parse();
    std::process::exit(run(config));
}
