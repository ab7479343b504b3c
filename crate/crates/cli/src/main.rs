use clap::Parser;

fn main() {
    let cli = narayana_cli::Cli::parse();
    std::process::exit(narayana_cli::run(cli));
}
