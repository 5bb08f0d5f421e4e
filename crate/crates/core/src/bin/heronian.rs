use std::process::ExitCode;

use clap::Parser;
use heronian::cli::{run, Cli};

fn main() -> ExitCode {
    if let Some(threads) = std::env::var("HERONIAN_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
    {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("warning: {e}");
        }
    }
    let cli = Cli::parse();
    run(cli, &mut std::io::stdout().lock())
}
