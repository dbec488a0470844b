use clap::Parser;

fn main() {
    // usage errors exit 2 via clap; domain errors exit 1 here
    let cli = anchorlab::cli::Cli::parse();
    let mut out = std::io::stdout().lock();
    if let Err(e) = anchorlab::cli::run(cli, &mut out) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
