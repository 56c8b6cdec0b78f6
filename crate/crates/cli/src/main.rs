use clap::Parser;

fn main() {
    let cli = tnosp_cli::Cli::parse();
    std::process::exit(tnosp_cli::run(cli));
}
