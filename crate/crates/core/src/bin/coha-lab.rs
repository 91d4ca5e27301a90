//! Command-line front end for `coha_lab`.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use coha_lab::job::{parse_degree_window, parse_framing, run, Command, JobSpec, OutputFormat};
use coha_lab::quiver::Quiver;

#[derive(Parser, Debug)]
#[command(
    name = "coha-lab",
    version,
    about = "CoHA, DT-invariant and vertex-operator computations for symmetric quivers"
)]
struct Cli {
    /// Quiver JSON file `{"vertices": r, "arrows": [[...]]}`, or the JSON itself.
    #[arg(long)]
    quiver: String,

    #[arg(long, value_parser = Command::ALL.map(Command::name))]
    cmd: String,

    /// Largest total dimension |d|.
    #[arg(long, default_value_t = 3)]
    dmax: u32,

    /// Largest twice-weight kept [default: 2·max(1, max|χ|)·dmax²].
    #[arg(long, allow_negative_numbers = true)]
    weight_window: Option<i64>,

    /// Polynomial degrees of Λ_d examined, `A..B` inclusive.
    #[arg(long, default_value = "0..8", allow_hyphen_values = true)]
    degree_window: String,

    /// Framing vector `w1,w2,...`.
    #[arg(long)]
    framing: Option<String>,

    #[arg(long, default_value = "table", value_parser = ["json", "table"])]
    format: String,

    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn job_from(cli: &Cli) -> coha_lab::Result<JobSpec> {
    let text = if cli.quiver.trim_start().starts_with('{') {
        cli.quiver.clone()
    } else {
        fs::read_to_string(&cli.quiver)?
    };
    let mut job = JobSpec::new(Quiver::from_json(&text)?, cli.cmd.parse()?);
    job.dmax = cli.dmax;
    job.weight_window = cli.weight_window;
    job.degree_window = parse_degree_window(&cli.degree_window)?;
    job.framing = cli.framing.as_deref().map(parse_framing).transpose()?;
    job.format = cli.format.parse::<OutputFormat>()?;
    Ok(job)
}

fn configure_threads() {
    if let Some(n) = std::env::var("COHA_LAB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        // a second initialisation only happens in tests; ignore it
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let outcome = job_from(&cli).and_then(|job| run(&job));
    match outcome {
        Ok(out) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &out.report),
                None => {
                    print!("{}", out.report);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(out.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
