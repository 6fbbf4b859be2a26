use btchow_cli::Args;
use clap::Parser;

fn main() {
    let args = Args::parse();
    std::process::exit(btchow_cli::run(&args));
}
