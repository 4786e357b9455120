mod args;
mod commands;
mod config;
mod error;
mod output;
mod source;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::{CliError, CliResult, EXIT_OK, EXIT_USAGE};

fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    let cfg = config::resolve(&cli.opts)?;
    if let Some(n) = cfg.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot start {n} worker threads: {e}")))?;
    }
    match &cli.command {
        Command::Compute => commands::compute::run(&cfg, out),
        Command::Verify(a) => commands::verify::run(&cfg, a, out),
        Command::Scan => commands::scan::run(&cfg, out),
        Command::Zeros { command } => commands::zeros::run(&cfg, command, out),
        Command::Constants(a) => commands::constants::run(&cfg, a, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return ExitCode::from(code as u8);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let flushed = out.flush();
    match result.and_then(|()| flushed.map_err(CliError::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("licoef: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
