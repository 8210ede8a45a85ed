use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::mpsc;
use std::time::Duration;

use clap::Parser;
use symcirc_cli::cache::{default_dir, key, Cache};
use symcirc_cli::run::{error_report, EXIT_INDETERMINATE, EXIT_INPUT};
use symcirc_cli::{render, run, Command, Manifest, Outcome};

/// Symplectic obstructions for circle bundles over 3-manifolds.
#[derive(Parser, Debug)]
#[command(name = "symcirc", version)]
struct Cli {
    /// Computation to run.
    #[arg(value_enum)]
    command: Command,
    /// Manifest file (TOML).
    manifest: PathBuf,
    /// Write the report here instead of the manifest's `output` or stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Skip reading and writing the result cache.
    #[arg(long)]
    no_cache: bool,
    /// Worker threads for library computations.
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
    /// Give up after this many seconds (exit code 3).
    #[arg(long, value_name = "SECONDS")]
    timeout: Option<u64>,
}

fn emit(outcome: &Outcome, output: Option<&PathBuf>) -> ExitCode {
    let text = render(&outcome.report);
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("symcirc: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_INPUT as u8);
            }
        }
        None => print!("{text}"),
    }
    if let Some(msg) = outcome.report.get("error").and_then(|e| e.as_str()) {
        eprintln!("symcirc: {msg}");
    }
    ExitCode::from(outcome.exit_code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let manifest = match Manifest::load(&cli.manifest) {
        Ok(m) => m,
        Err(e) => {
            let outcome = Outcome {
                report: error_report(cli.command, &e.0, "error"),
                exit_code: EXIT_INPUT,
            };
            return emit(&outcome, cli.output.as_ref());
        }
    };
    let output = cli.output.clone().or_else(|| manifest.output.clone());
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            eprintln!("symcirc: cannot configure {n} workers: {e}");
        }
    }
    let cache = if cli.no_cache { None } else { default_dir().map(Cache::new) };
    let cache_key = manifest
        .manifold()
        .ok()
        .map(|m| key(cli.command, &manifest, &m.presentation.to_string()));
    if let (Some(c), Some(k)) = (&cache, &cache_key) {
        if let Some(hit) = c.get(k) {
            return emit(&hit, output.as_ref());
        }
    }
    let (tx, rx) = mpsc::channel();
    let command = cli.command;
    let job = manifest.clone();
    std::thread::spawn(move || {
        let _ = tx.send(run(command, &job));
    });
    let outcome = match cli.timeout {
        Some(s) => rx.recv_timeout(Duration::from_secs(s)).ok(),
        None => rx.recv().ok(),
    };
    let Some(outcome) = outcome else {
        let msg = format!("timed out after {} s", cli.timeout.unwrap_or(0));
        let outcome = Outcome {
            report: error_report(command, &msg, "timeout"),
            exit_code: EXIT_INDETERMINATE,
        };
        return emit(&outcome, output.as_ref());
    };
    if let (Some(c), Some(k)) = (&cache, &cache_key) {
        if outcome.exit_code != EXIT_INPUT {
            if let Err(e) = c.put(k, &outcome) {
                eprintln!("symcirc: cache write failed in {}: {e}", c.dir().display());
            }
        }
    }
    emit(&outcome, output.as_ref())
}
