use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qgrass::{parse_rows, run, RunConfig, Suite};
use qgrass_core::halgebra::DEFAULT_POSET_CAP;
use qgrass_core::projgeom::DEFAULT_TABLE_CAP;
use qgrass_core::qfield::verify_q_identities;
use serde::Serialize;

/// Exact verification of Grassmann-graph nucleus computations.
///
/// Exit status: 0 when every assertion passes, 1 when one fails, 2 for
/// invalid parameters, exceeded size caps and other errors.
#[derive(Parser)]
#[command(name = "qgrass", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build J_q(N,D) and run the selected verification suites.
    Verify {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Suites to run; may be repeated or comma-separated.
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        suite: Vec<Suite>,
        /// Write the JSON report here ("-" for stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "QGRASS_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TABLE_CAP)]
        max_vertices: usize,
        #[arg(long, default_value_t = DEFAULT_POSET_CAP)]
        max_poset: usize,
        /// Base vertex as semicolon-separated rows, e.g. "1 0 0 0 0;0 1 0 0 0".
        #[arg(long)]
        x_rows: Option<String>,
    },
    /// Check the q-binomial identities for every ℓ up to `lmax`.
    Identities {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 12)]
        lmax: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(std::io::Error::other)? + "\n";
    if path == Path::new("-") {
        print!("{text}");
        Ok(())
    } else {
        std::fs::write(path, text)
    }
}

fn fail(err: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify {
            q,
            n,
            d,
            suite,
            out,
            cache_dir,
            max_vertices,
            max_poset,
            x_rows,
        } => {
            let mut config = RunConfig::new(q, n, d, &suite);
            config.max_vertices = max_vertices;
            config.max_poset = max_poset;
            config.cache_dir = cache_dir;
            config.out = out.clone();
            if let Some(rows) = x_rows {
                match parse_rows(&rows) {
                    Ok(r) => config.x_rows = Some(r),
                    Err(e) => return fail(e),
                }
            }
            let report = match run(&config) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            if out.as_deref() != Some(Path::new("-")) {
                print!("{}", report.summary_table());
            }
            if let Some(path) = out {
                if let Err(e) = write_json(&path, &report) {
                    return fail(e);
                }
            }
            ExitCode::from(if report.passed() { 0 } else { 1 })
        }
        Command::Identities { q, lmax, out } => {
            let report = match verify_q_identities(lmax, q) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            if out.as_deref() != Some(Path::new("-")) {
                for v in report.verdicts() {
                    let status = if v.passed() { "pass" } else { "FAIL" };
                    println!("{:<22} {status}  ({} cases, q={q}, ℓ ≤ {lmax})", v.name, v.cases_checked);
                    if let Some(c) = &v.counterexample {
                        println!("  counterexample: {c}");
                    }
                }
            }
            if let Some(path) = out {
                if let Err(e) = write_json(&path, &report) {
                    return fail(e);
                }
            }
            ExitCode::from(if report.all_passed() { 0 } else { 1 })
        }
    }
}
