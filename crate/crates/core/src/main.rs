use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use fundseries::cli::{resolve_verb, run, CliError, Emit, JobSpec, Overrides, Verb};
use fundseries::rational::parse_q;

/// Exact k-type computations for reductive pairs of complex Lie algebras.
#[derive(Parser, Debug)]
#[command(name = "fundseries", version)]
struct Args {
    /// What to compute; may instead be given as `command` in the job file.
    #[arg(value_enum)]
    verb: Option<Verb>,

    /// Job description (TOML).
    #[arg(long)]
    config: PathBuf,

    /// Bound on |delta + 2 rho|^2 for the k-type table, as "p" or "p/q".
    #[arg(long)]
    cutoff: Option<String>,

    /// Largest Weyl group of k that may be enumerated.
    #[arg(long)]
    max_weyl: Option<usize>,

    #[arg(long, value_enum, default_value_t = Emit::Human)]
    emit: Emit,
}

fn execute(args: &Args) -> Result<String, CliError> {
    let job = JobSpec::load(&args.config)?;
    let verb = resolve_verb(args.verb, &job)?;
    let cutoff = args.cutoff.as_deref().map(parse_q).transpose()?;
    let overrides = Overrides {
        cutoff,
        max_weyl: args.max_weyl,
    };
    Ok(run(verb, &job, &overrides)?.render(args.emit))
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("fundseries: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
