//! `verify`: run exact law checks for the Jordan-algebraic structures and
//! subspace geometries in this workspace.
//!
//! Every check draws its own deterministic sample stream from the run seed,
//! evaluates both sides of its laws in exact arithmetic, and reports counts
//! plus replayable witnesses for any failure.  Exit code 0 means every
//! requested check passed, 1 means at least one law failed on a sample, and
//! 2 means the run was misconfigured (unknown ring, target, or check).

mod registry;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::Parser;
use ring_core::{derive_seed, RingDescriptor};

use registry::{find, Mutation, RunCtx, REGISTRY};
use report::{CheckRecord, ConfigEcho, Report};

#[derive(Parser)]
#[command(
    name = "verify",
    about = "Exact verification of Jordan triple, graded Lie, and projective combination laws",
    version
)]
struct Cli {
    /// Base ring: Q, Qi, Zmod:<p>, or dual:<ring>
    #[arg(long, default_value = "Q")]
    ring: String,

    /// Family (full:2, sym:3, herm:2, skew:4, spin:4, rect:2x3) or geometry
    /// (gras:ExF, lagr-sym:n, lagr-skew:n, lagr-herm:n), depending on the check
    #[arg(long)]
    target: Option<String>,

    /// Comma-separated check names; see --list
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,

    /// Samples per randomized check
    #[arg(long, default_value_t = 100)]
    samples: usize,

    /// Seed for the deterministic sample streams
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Write the JSON report to this path
    #[arg(long)]
    out: Option<PathBuf>,

    /// Inject a deliberate defect to demonstrate the checkers catch it:
    /// jordan-flip, spin-drop, tkk-flip, or pi-drop
    #[arg(long)]
    mutate: Option<String>,

    /// List every check with a short description and exit
    #[arg(long)]
    list: bool,
}

/// Print a line, shrugging off a closed pipe (e.g. `verify ... | head`).
fn emit(args: std::fmt::Arguments<'_>) {
    let _ = writeln!(std::io::stdout(), "{args}");
}

macro_rules! emit {
    ($($arg:tt)*) => { emit(format_args!($($arg)*)) };
}

fn list_checks() {
    let mut defs: Vec<_> = REGISTRY.iter().collect();
    defs.sort_by_key(|def| def.name);
    for def in defs {
        emit!("{:<15} {}", def.name, def.describes);
    }
}

fn run() -> i32 {
    let cli = Cli::parse();

    if cli.list {
        list_checks();
        return 0;
    }

    let ring = match RingDescriptor::parse(&cli.ring) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: ring '{}': {e}", cli.ring);
            return 2;
        }
    };
    if cli.checks.is_empty() {
        eprintln!("error: no checks requested; use --checks or --list");
        return 2;
    }
    if cli.samples == 0 {
        eprintln!("error: --samples must be at least 1");
        return 2;
    }
    let mutation = match cli.mutate.as_deref() {
        None => None,
        Some(name) => match Mutation::parse(name) {
            Some(m) => Some(m),
            None => {
                eprintln!(
                    "error: unknown mutation '{name}'; expected one of {}",
                    Mutation::NAMES.join(", ")
                );
                return 2;
            }
        },
    };
    for name in &cli.checks {
        if find(name).is_none() {
            eprintln!("error: unknown check '{name}'; see --list");
            return 2;
        }
    }

    let mut records = Vec::new();
    let mut all_passed = true;
    for def in REGISTRY {
        if !cli.checks.iter().any(|name| name == def.name) {
            continue;
        }
        let seed = derive_seed(cli.seed, def.name);
        let ctx = RunCtx {
            ring: ring.clone(),
            target: cli.target.clone(),
            samples: cli.samples,
            seed,
            mutation,
        };
        let start = Instant::now();
        let result = match (def.run)(&ctx) {
            Ok(result) => result,
            Err(message) => {
                eprintln!("error: check {}: {message}", def.name);
                return 2;
            }
        };
        let elapsed_ms = start.elapsed().as_millis();
        let outcome = result.outcome;
        let ok = outcome.failed == 0;
        all_passed &= ok;
        emit!(
            "{} {:<14} target={} ring={} passed={} failed={} ({} ms)",
            if ok { "PASS" } else { "FAIL" },
            def.name,
            result.target,
            cli.ring,
            outcome.passed,
            outcome.failed,
            elapsed_ms
        );
        if let Some(note) = &result.note {
            emit!("  note: {note}");
        }
        for witness in &outcome.witnesses {
            emit!("  witness: {witness}");
        }
        records.push(CheckRecord {
            name: def.name.to_string(),
            target: result.target,
            ring: cli.ring.clone(),
            samples: cli.samples,
            passed: outcome.passed,
            failed: outcome.failed,
            witnesses: outcome.witnesses,
            seed,
            elapsed_ms,
        });
    }

    let total = records.len();
    if all_passed {
        emit!("{total} check{} run, all passed", if total == 1 { "" } else { "s" });
    } else {
        let failing = records.iter().filter(|r| r.failed > 0).count();
        emit!("{failing} of {total} checks failed");
    }

    let report = Report {
        schema: 1,
        config: ConfigEcho {
            ring: cli.ring.clone(),
            target: cli.target.clone(),
            checks: cli.checks.clone(),
            samples: cli.samples,
            seed: cli.seed,
            mutate: cli.mutate.clone(),
        },
        checks: records,
        all_passed,
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: writing report to {}: {e}", path.display());
            return 2;
        }
    }

    if all_passed {
        0
    } else {
        1
    }
}

fn main() {
    std::process::exit(run());
}
