//! The `dspm` command line.
//!
//! Exit statuses: 0 success, 2 size cap or unsupported order, 3 formula and
//! census disagree (or an internal consistency check failed), 4 invalid input.

use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::sync::mpsc;

use clap::{Parser, Subcommand, ValueEnum};
use dspm_core::census::CENSUS_CAP;
use dspm_core::sperm::{factorial, mask_words};
use dspm_core::{
    count_cliques, count_sudoku, decompose, enumerate_catalog, sample_family, sigma_3, sigma_size,
    z_from_sigma, FormulaTerms, Weighting,
};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::census::{degree_histogram, run_census_with, CensusMode, CensusOptions};
use crate::dot::entry_to_dot;
use crate::error::{CliError, ExitCode};
use crate::grid::{format_grid, parse_grid};
use crate::json::{CatalogJson, CensusJson, CommandResult, FamilyJson, FormulaJson};

pub const UNVERIFIED: &str = "unverified by census";

#[derive(Debug, Parser)]
#[command(
    name = "dspm",
    version,
    about = "Count disjoint pairs of S-permutation matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format; `dot` applies to `graphs` only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMode {
    Formula,
    Census,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairMode {
    Unordered,
    Ordered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SudokuAction {
    Count,
    Cliques,
    Decompose,
    Sample,
    Z,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the bipartite graph catalog with per-graph characteristics.
    Graphs {
        #[arg(long)]
        n: usize,
    },
    /// Count disjoint pairs by formula, by census, or both.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = CountMode::Formula)]
        mode: CountMode,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Brute-force census of disjoint pairs.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value_t = PairMode::Unordered)]
        mode: PairMode,
        /// Also report how many partners each matrix has.
        #[arg(long)]
        histogram: bool,
        /// Report progress on stderr every this many blocks of 64 matrices.
        #[arg(long)]
        progress_every: Option<usize>,
        /// Include elapsed time in the output.
        #[arg(long)]
        timing: bool,
        /// Raise the enumeration cap; asks for confirmation on stdin.
        #[arg(long, default_value_t = CENSUS_CAP)]
        enumeration_cap: usize,
    },
    /// Sudoku matrices and disjoint families.
    Sudoku {
        #[arg(value_enum)]
        action: SudokuAction,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Grid file for `decompose`.
        #[arg(long)]
        grid: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        max_restarts: u32,
        /// Sudoku count for `z`; defaults to the known value for n = 2 or 3.
        #[arg(long)]
        sigma: Option<BigUint>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Graphs { .. } => "graphs",
            Command::Count { .. } => "count",
            Command::Census { .. } => "census",
            Command::Sudoku { .. } => "sudoku",
        }
    }

    fn params(&self) -> Value {
        match self {
            Command::Graphs { n } => json!({ "n": n }),
            Command::Count { n, mode, workers } => {
                json!({ "n": n, "mode": format!("{mode:?}").to_lowercase(), "workers": workers })
            }
            Command::Census {
                n,
                workers,
                mode,
                histogram,
                enumeration_cap,
                ..
            } => json!({
                "n": n,
                "workers": workers,
                "mode": format!("{mode:?}").to_lowercase(),
                "histogram": histogram,
                "enumeration_cap": enumeration_cap,
            }),
            Command::Sudoku {
                action,
                n,
                grid,
                seed,
                max_restarts,
                sigma,
            } => json!({
                "action": format!("{action:?}").to_lowercase(),
                "n": n,
                "grid": grid.as_ref().map(|p| p.display().to_string()),
                "seed": seed.to_string(),
                "max_restarts": max_restarts,
                "sigma": sigma.as_ref().map(BigUint::to_string),
            }),
        }
    }
}

/// What a command produced: stdout text and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub status: ExitCode,
}

struct Report {
    payload: Value,
    text: String,
    status: ExitCode,
}

impl Report {
    fn ok(payload: Value, text: String) -> Self {
        Report {
            payload,
            text,
            status: ExitCode::Ok,
        }
    }
}

/// Runs a parsed command. `input` answers confirmation prompts; `log` receives
/// everything that is not the result itself.
pub fn execute(cli: &Cli, input: &mut dyn BufRead, log: &mut dyn Write) -> Outcome {
    let result = match &cli.command {
        Command::Graphs { n } => cmd_graphs(*n, cli.format),
        Command::Count { n, mode, workers } => cmd_count(*n, *mode, resolve_workers(*workers), log),
        Command::Census {
            n,
            workers,
            mode,
            histogram,
            progress_every,
            timing,
            enumeration_cap,
        } => cmd_census(
            *n,
            resolve_workers(*workers),
            *mode,
            *histogram,
            *progress_every,
            *timing,
            *enumeration_cap,
            input,
            log,
        ),
        Command::Sudoku {
            action,
            n,
            grid,
            seed,
            max_restarts,
            sigma,
        } => cmd_sudoku(
            *action,
            *n,
            grid.as_ref(),
            *seed,
            *max_restarts,
            sigma.as_ref(),
        ),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(log, "error: {e}");
            Report {
                payload: json!({ "error": e.to_string() }),
                text: String::new(),
                status: e.exit_code(),
            }
        }
    };
    if report.status == ExitCode::Mismatch {
        let _ = writeln!(log, "error: oracle mismatch");
    }
    let stdout = match cli.format {
        Format::Json => {
            let result = CommandResult {
                command: cli.command.name().into(),
                params: cli.command.params(),
                payload: report.payload,
                exit_status: report.status as i32,
            };
            let mut s = serde_json::to_string_pretty(&result).expect("serializable");
            s.push('\n');
            s
        }
        Format::Dot | Format::Table => report.text,
    };
    Outcome {
        stdout,
        status: report.status,
    }
}

fn resolve_workers(workers: Option<usize>) -> usize {
    workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn cmd_graphs(n: usize, format: Format) -> Result<Report, CliError> {
    let catalog = enumerate_catalog(n)?;
    let payload = serde_json::to_value(CatalogJson::new(&catalog))?;
    let text = if format == Format::Dot {
        catalog
            .iter()
            .map(|(k, e)| entry_to_dot(e, k))
            .collect::<Vec<_>>()
            .join("\n")
    } else {
        let listing = CatalogJson::new(&catalog);
        let mut t = String::new();
        let _ = writeln!(
            t,
            "{:>3} {:>5} {:<12} {:<22} {:>8} {:>5}",
            "k", "code", "psi", "[g]", "omega", "|Aut|"
        );
        for g in &listing.graphs {
            let _ = writeln!(
                t,
                "{:>3} {:>5} {:<12} {:<22} {:>8} {:>5}",
                g.k,
                g.code,
                format!("{:?}", g.psi),
                format!("{:?}", g.class_multiset),
                g.omega.trim_end_matches("/1"),
                g.automorphisms
            );
        }
        for b in &listing.buckets {
            let theta = b
                .theta
                .as_deref()
                .map_or("-".to_string(), |s| s.trim_end_matches("/1").to_string());
            let _ = writeln!(t, "k={:<3} graphs={:<4} theta={}", b.k, b.count, theta);
        }
        let _ = writeln!(t, "total={}", listing.total);
        t
    };
    Ok(Report::ok(payload, text))
}

fn cmd_count(
    n: usize,
    mode: CountMode,
    workers: usize,
    log: &mut dyn Write,
) -> Result<Report, CliError> {
    let mut payload = json!({ "n": n });
    let mut text = String::new();
    let formula = if mode != CountMode::Census {
        let catalog = enumerate_catalog(n)?;
        if mode == CountMode::Both && n > CENSUS_CAP {
            return Err(dspm_core::census::MaskTable::for_order(n)
                .unwrap_err()
                .into());
        }
        let spec = FormulaTerms::from_catalog(&catalog)?;
        let aut = FormulaTerms::from_catalog_with(&catalog, Weighting::Automorphisms)?;
        payload["formula"] = serde_json::to_value(FormulaJson::new(&spec)?)?;
        payload["automorphism_weighted"] = serde_json::to_value(FormulaJson::new(&aut)?)?;
        let _ = writeln!(
            text,
            "formula (twin-class weights):   D={} d={}",
            spec.ordered,
            spec.unordered()?
        );
        let _ = writeln!(
            text,
            "formula (automorphism weights): D={} d={}",
            aut.ordered,
            aut.unordered()?
        );
        Some((spec, aut))
    } else {
        None
    };
    let census = if mode != CountMode::Formula {
        let _ = writeln!(log, "running census for n={n} on {workers} worker(s)");
        let r = run_census_with(
            n,
            &CensusOptions {
                workers,
                ..CensusOptions::default()
            },
        )?;
        payload["census"] =
            serde_json::to_value(CensusJson::new(&r, CensusMode::Unordered, false))?;
        let _ = writeln!(
            text,
            "census:                         D={} d={}",
            r.ordered_pairs, r.unordered_pairs
        );
        Some(r)
    } else {
        None
    };
    let mut status = ExitCode::Ok;
    match (&formula, &census) {
        (Some((spec, aut)), Some(r)) => {
            let census_d = BigUint::from(r.ordered_pairs);
            let agrees = spec.ordered == census_d;
            payload["match"] = json!(agrees);
            payload["automorphism_weighted_match"] = json!(aut.ordered == census_d);
            payload["status"] = json!(if agrees {
                "verified by census"
            } else {
                "census disagrees"
            });
            let _ = writeln!(text, "match: {}", if agrees { "yes" } else { "NO" });
            if !agrees {
                let _ = writeln!(
                    log,
                    "{}",
                    CliError::Mismatch {
                        formula: spec.ordered.to_string(),
                        census: census_d.to_string()
                    }
                );
                status = ExitCode::Mismatch;
            }
        }
        (Some(_), None) => {
            payload["status"] = json!(UNVERIFIED);
            let _ = writeln!(text, "status: {UNVERIFIED}");
        }
        _ => {}
    }
    Ok(Report {
        payload,
        text,
        status,
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_census(
    n: usize,
    workers: usize,
    mode: PairMode,
    histogram: bool,
    progress_every: Option<usize>,
    timing: bool,
    enumeration_cap: usize,
    input: &mut dyn BufRead,
    log: &mut dyn Write,
) -> Result<Report, CliError> {
    if enumeration_cap > CENSUS_CAP && n > CENSUS_CAP && n <= enumeration_cap {
        confirm_large(n, input, log)?;
    }
    let mode = match mode {
        PairMode::Unordered => CensusMode::Unordered,
        PairMode::Ordered => CensusMode::Ordered,
    };
    let (tx, rx) = mpsc::channel();
    let opts = CensusOptions {
        workers,
        mode,
        cap: enumeration_cap,
        progress_every,
        progress: progress_every.map(|_| tx),
    };
    let result = std::thread::scope(|s| {
        let printer = s.spawn(move || rx.iter().collect::<Vec<_>>());
        let r = run_census_with(n, &opts);
        drop(opts);
        let progress = printer.join().expect("progress thread");
        (r, progress)
    });
    let (result, progress) = result;
    for p in progress {
        let _ = writeln!(
            log,
            "worker {}: {}/{} blocks",
            p.worker, p.blocks_done, p.blocks_total
        );
    }
    let result = result?;
    if timing {
        let _ = writeln!(log, "census took {:?}", result.elapsed);
    }
    let mut json = CensusJson::new(&result, mode, timing);
    let mut text = format!(
        "n={} matrices={} ordered={} unordered={}\n",
        result.n, result.matrices_scanned, result.ordered_pairs, result.unordered_pairs
    );
    if histogram {
        let h = degree_histogram(n, workers)?;
        for (k, v) in &h {
            let _ = writeln!(text, "partners={k} matrices={v}");
        }
        json.histogram = Some(
            h.iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        );
    }
    Ok(Report::ok(serde_json::to_value(json)?, text))
}

fn confirm_large(n: usize, input: &mut dyn BufRead, log: &mut dyn Write) -> Result<(), CliError> {
    let count = sigma_size(n);
    let per_matrix = mask_words(n) * 8 + 2 * n * (n + std::mem::size_of::<Vec<u8>>());
    let bytes = &count * BigUint::from(per_matrix);
    let _ = writeln!(
        log,
        "enumerating {count} matrices for n={n} needs about {bytes} bytes; type 'yes' to continue"
    );
    let mut answer = String::new();
    input.read_line(&mut answer).map_err(|e| CliError::Io {
        path: "<stdin>".into(),
        source: e,
    })?;
    if answer.trim() == "yes" {
        Ok(())
    } else {
        Err(CliError::Refused(format!(
            "enumeration for n={n} not confirmed"
        )))
    }
}

fn cmd_sudoku(
    action: SudokuAction,
    n: usize,
    grid: Option<&PathBuf>,
    seed: u64,
    max_restarts: u32,
    sigma: Option<&BigUint>,
) -> Result<Report, CliError> {
    match action {
        SudokuAction::Count => {
            let sigma = count_sudoku(n)?;
            let z = z_from_sigma(&sigma, n)?;
            let text = format!("sigma_{n}={sigma} z_{n}={z}\n");
            Ok(Report::ok(
                json!({ "n": n, "sigma": sigma.to_string(), "z": z.to_string() }),
                text,
            ))
        }
        SudokuAction::Cliques => {
            let z = count_cliques(n)?;
            let sigma = &z * factorial(n * n);
            let text = format!("z_{n}={z} z_{n}*({}!)={sigma}\n", n * n);
            Ok(Report::ok(
                json!({ "n": n, "cliques": z.to_string(), "sigma": sigma.to_string() }),
                text,
            ))
        }
        SudokuAction::Decompose => {
            let path = grid.ok_or_else(|| CliError::Parse {
                line: 0,
                message: "--grid FILE is required".into(),
            })?;
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                source: e,
            })?;
            let grid = parse_grid(&text)?;
            if let Some(v) = grid.first_violation() {
                return Err(CliError::InvalidGrid(v));
            }
            let family = decompose(&grid)?;
            let json = FamilyJson::new(&family);
            Ok(Report::ok(
                serde_json::to_value(&json)?,
                serde_json::to_string(&json)? + "\n",
            ))
        }
        SudokuAction::Sample => {
            let family = sample_family(n, seed, max_restarts)?;
            let json = FamilyJson::new(&family);
            let mut payload = serde_json::to_value(&json)?;
            let mut text = format!("family size {} of {}\n", family.len(), n * n);
            if family.is_complete() {
                let grid = family.recompose()?;
                payload["valid"] = json!(grid.is_valid());
                payload["grid"] = json!(format_grid(&grid));
                text.push_str(&format_grid(&grid));
            }
            Ok(Report::ok(payload, text))
        }
        SudokuAction::Z => {
            let sigma = match (sigma, n) {
                (Some(s), _) => s.clone(),
                (None, 2) => count_sudoku(2)?,
                (None, 3) => sigma_3(),
                (None, _) => {
                    return Err(CliError::Parse {
                        line: 0,
                        message: format!("no known sigma for n={n}; pass --sigma"),
                    })
                }
            };
            let z = z_from_sigma(&sigma, n)?;
            Ok(Report::ok(
                json!({ "n": n, "sigma": sigma.to_string(), "z": z.to_string() }),
                format!("z_{n}={z}\n"),
            ))
        }
    }
}
