use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use qgor_tool::commands::{run_command, Command, Options};
use qgor_tool::corpus::run_corpus;
use qgor_tool::report::{canonical_json, Envelope};
use qgor_tool::session::parse_session;
use qgor_tool::CliError;
use qgor_core::analysis::Budgets;

/// Batch verifier for graded quotient rings: Gröbner bases, resolutions,
/// canonical modules, limit closures and quasi-Gorenstein checks.
#[derive(Parser, Debug)]
#[command(name = "qgor", version)]
struct Cli {
    command: Command,
    /// Corpus directory (for `corpus`).
    dir: Option<PathBuf>,
    /// Session file.
    #[arg(short = 'f', long = "file")]
    file: Option<PathBuf>,
    #[arg(long)]
    ring: Option<String>,
    /// Ideal name; repeat for commands taking two ideals.
    #[arg(long = "ideal")]
    ideals: Vec<String>,
    /// Sequence name; repeat for `gcm`.
    #[arg(long = "seq")]
    seqs: Vec<String>,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    tmax: usize,
    #[arg(long, default_value_t = 6)]
    nmax: usize,
    #[arg(long, default_value_t = 2)]
    window: usize,
    /// Largest degree of random parameter candidates.
    #[arg(long, default_value_t = 3)]
    sop_degree: u32,
    /// Exponent cap for `gcm`.
    #[arg(long, default_value_t = 8)]
    gcm_cap: u32,
    /// Degree bound for `hilbert`.
    #[arg(long, default_value_t = 10)]
    degree: u32,
    /// Ext index for `ext`.
    #[arg(long)]
    index: Option<usize>,
    /// Power n for `limit-closure`.
    #[arg(long, default_value_t = 1)]
    power: u32,
    /// Number of quotients R/x^nR for `deform`.
    #[arg(long, default_value_t = 3)]
    count: u32,
    /// Record wall-clock timings (makes output non-reproducible).
    #[arg(long)]
    timings: bool,
}

impl Cli {
    fn options(&self) -> Options {
        Options {
            ring: self.ring.clone(),
            ideals: self.ideals.clone(),
            seqs: self.seqs.clone(),
            budgets: Budgets {
                t_max: self.tmax,
                n_max: self.nmax,
                window: self.window,
                seed: self.seed,
                sop_max_degree: self.sop_degree,
                gcm_cap: self.gcm_cap,
            },
            degree: self.degree,
            index: self.index,
            power: self.power,
            count: self.count,
            timings: self.timings,
        }
    }
}

/// Text for stdout, or the error to report.
fn run(cli: &Cli) -> Result<String, CliError> {
    let opts = cli.options();
    if cli.window == 0 {
        return Err(CliError::usage("--window must be at least 1"));
    }
    if cli.command == Command::Corpus {
        let dir = cli.dir.as_ref().ok_or_else(|| CliError::usage("corpus needs a directory"))?;
        let summary = run_corpus(dir, &opts)?;
        let text = if cli.json {
            let inputs = serde_json::json!({ "dir": dir.display().to_string() });
            let result = serde_json::to_value(&summary).expect("serializable");
            let env = Envelope::new("corpus", &opts.budgets, inputs, result, Default::default());
            canonical_json(&env.to_value())
        } else {
            summary.table()
        };
        if !summary.passed() {
            print!("{text}");
            return Err(CliError { code: 1, message: format!("{} corpus failures", summary.failures.len()) });
        }
        return Ok(text);
    }
    if cli.dir.is_some() {
        return Err(CliError::usage("unexpected positional argument; sessions are passed with -f"));
    }
    let file = cli.file.as_ref().ok_or_else(|| CliError::usage("missing -f FILE"))?;
    let text = std::fs::read_to_string(file).map_err(|e| CliError::usage(format!("{}: {e}", file.display())))?;
    let session = parse_session(&text).map_err(|e| CliError::usage(format!("{}:{e}", file.display())))?;
    let out = run_command(&session, cli.command, &opts)?;
    Ok(if cli.json { canonical_json(&out.report) } else { out.text })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("qgor: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}

#[cfg(test)]
mod tests;
