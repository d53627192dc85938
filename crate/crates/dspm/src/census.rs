//! Threaded brute-force census of disjoint pairs.
//!
//! Outer indices are cut into fixed blocks and dealt round-robin to the
//! workers. Each worker owns its partial count; the totals are added once all
//! workers have joined, so the result does not depend on the worker count.

use std::collections::BTreeMap;
use std::sync::mpsc::Sender;
use std::thread;
use std::time::{Duration, Instant};

use dspm_core::census::{worker_blocks, CENSUS_CAP};
use dspm_core::MaskTable;

use crate::error::CliError;

const BLOCK: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CensusMode {
    /// Scan `j > i` and double.
    #[default]
    Unordered,
    /// Scan every `(i, j)` and halve.
    Ordered,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub n: usize,
    pub ordered_pairs: u64,
    pub unordered_pairs: u64,
    pub matrices_scanned: u64,
    pub elapsed: Duration,
}

/// Blocks finished by one worker so far.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Progress {
    pub worker: usize,
    pub blocks_done: usize,
    pub blocks_total: usize,
}

#[derive(Debug, Clone)]
pub struct CensusOptions {
    pub workers: usize,
    pub mode: CensusMode,
    /// Largest `n` accepted.
    pub cap: usize,
    /// Send a [`Progress`] every this many blocks; `None` keeps the scan silent.
    pub progress_every: Option<usize>,
    pub progress: Option<Sender<Progress>>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            workers: 1,
            mode: CensusMode::Unordered,
            cap: CENSUS_CAP,
            progress_every: None,
            progress: None,
        }
    }
}

pub fn run_census(n: usize, workers: usize) -> Result<CensusResult, CliError> {
    run_census_with(
        n,
        &CensusOptions {
            workers,
            ..CensusOptions::default()
        },
    )
}

pub fn run_census_with(n: usize, opts: &CensusOptions) -> Result<CensusResult, CliError> {
    if opts.workers == 0 {
        return Err(CliError::NoWorkers);
    }
    let start = Instant::now();
    let table = MaskTable::for_order_capped(n, opts.cap)?;
    let len = table.len();
    let counts = scatter(&table, opts, |t, range| match opts.mode {
        CensusMode::Unordered => t.count_upper(range),
        CensusMode::Ordered => t.count_ordered(range),
    });
    let total: u64 = counts.into_iter().sum();
    let (ordered_pairs, unordered_pairs) = match opts.mode {
        CensusMode::Unordered => (2 * total, total),
        CensusMode::Ordered => {
            assert!(total.is_multiple_of(2), "ordered pair count {total} is odd");
            (total, total / 2)
        }
    };
    Ok(CensusResult {
        n,
        ordered_pairs,
        unordered_pairs,
        matrices_scanned: len as u64,
        elapsed: start.elapsed(),
    })
}

/// Runs `scan` over each worker's blocks on its own thread and returns the per-worker sums.
fn scatter<F>(table: &MaskTable, opts: &CensusOptions, scan: F) -> Vec<u64>
where
    F: Fn(&MaskTable, std::ops::Range<usize>) -> u64 + Sync,
{
    let len = table.len();
    let blocks_total = len.div_ceil(BLOCK);
    thread::scope(|s| {
        let handles: Vec<_> = (0..opts.workers)
            .map(|w| {
                let scan = &scan;
                let tx = opts.progress.clone();
                let every = opts.progress_every.unwrap_or(0);
                s.spawn(move || {
                    let mut sum = 0u64;
                    for (done, range) in worker_blocks(len, BLOCK, w, opts.workers).enumerate() {
                        sum += scan(table, range);
                        if let Some(tx) = &tx {
                            if every > 0 && (done + 1) % every == 0 {
                                let _ = tx.send(Progress {
                                    worker: w,
                                    blocks_done: done + 1,
                                    blocks_total,
                                });
                            }
                        }
                    }
                    sum
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("census worker panicked"))
            .collect()
    })
}

/// For each matrix, how many matrices are disjoint from it; returns
/// `partner count → number of matrices with that count`.
pub fn degree_histogram(n: usize, workers: usize) -> Result<BTreeMap<u64, u64>, CliError> {
    if workers == 0 {
        return Err(CliError::NoWorkers);
    }
    let table = MaskTable::for_order(n)?;
    let len = table.len();
    let partials: Vec<Vec<u64>> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let table = &table;
                s.spawn(move || {
                    let mut degrees = vec![0u64; len];
                    for range in worker_blocks(len, BLOCK, w, workers) {
                        table.accumulate_degrees(range, &mut degrees);
                    }
                    degrees
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("histogram worker panicked"))
            .collect()
    });
    let mut histogram = BTreeMap::new();
    for i in 0..len {
        let degree: u64 = partials.iter().map(|p| p[i]).sum();
        *histogram.entry(degree).or_insert(0) += 1;
    }
    Ok(histogram)
}
