use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use amadirac::suite::{run_spectrum, run_table, run_verify, write_csv, Config, Sweep};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "amadirac", version, about = "Exact checks for Dirac operators on Dunkl angular momentum modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write a JSON report.
    Verify {
        #[arg(long)]
        config: PathBuf,
        /// Comma-separated subset of suites.
        #[arg(long, value_delimiter = ',')]
        suite: Option<Vec<String>>,
        /// Report path; defaults to the config's `report` field, then stdout.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Evaluate cohomology and unitarity data over a sweep and write CSV.
    Table {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        sweep: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Spectrum of D_C on one harmonic slice, as JSON.
    Spectrum {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long = "C", default_value = "zero")]
        admissible: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Exit status 2: bad usage, unreadable config, or unwritable output.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn open_out(path: Option<&Path>) -> Result<Box<dyn Write>, UsageError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| UsageError(format!("{}: {e}", p.display())))?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(cli: Cli) -> Result<bool, UsageError> {
    match cli.command {
        Command::Verify { config, suite, report } => {
            let mut cfg = Config::load(&config)?;
            if let Some(s) = suite {
                cfg = cfg.with_suites(s)?;
            }
            let path = report.or_else(|| cfg.report.as_ref().map(PathBuf::from));
            let mut out = open_out(path.as_deref())?;
            let rep = run_verify(&cfg)?;
            out.write_all(rep.to_json().as_bytes())?;
            out.flush()?;
            let s = &rep.summary;
            eprintln!("{} checks: {} passed, {} failed, {} skipped", s.total, s.pass, s.fail, s.skipped);
            for r in rep.records().filter(|r| r.status == amadirac::report::Status::Fail) {
                eprintln!("FAIL {}: {}", r.check_id, r.witness);
            }
            Ok(rep.passed())
        }
        Command::Table { config, sweep, out } => {
            let cfg = Config::load(&config)?;
            let text = std::fs::read_to_string(&sweep).map_err(|e| UsageError(format!("{}: {e}", sweep.display())))?;
            let sweep = Sweep::from_json(&text)?;
            let file = open_out(Some(&out))?;
            let rows = run_table(&cfg, &sweep)?;
            write_csv(&rows, file)?;
            eprintln!("{} rows written to {}", rows.len(), out.display());
            Ok(true)
        }
        Command::Spectrum { config, m, admissible, out } => {
            let cfg = Config::load(&config)?;
            let mut file = open_out(out.as_deref())?;
            let rep = run_spectrum(&cfg, m, &admissible)?;
            let json = serde_json::to_string_pretty(&rep)?;
            writeln!(file, "{json}")?;
            file.flush()?;
            Ok(rep.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
