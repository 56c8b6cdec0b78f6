//! Benchmark / ablation grid: run every (algorithm, variant, minsup, query)
//! cell as an isolated mining run and collect statistics rows.

use std::time::Instant;

use crate::baseline;
use crate::bfs;
use crate::dfs;
use crate::io::{self, DataFormat};
use crate::mine::MinerConfig;
use crate::model::{GapConstraint, LengthConstraint, MiningParams, SequenceDatabase};
use crate::oracle;
use crate::preprocess::IprpMode;
use crate::stats;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    Bfs,
    Dfs,
    Baseline,
    Oracle,
}

impl Algo {
    pub fn name(&self) -> &'static str {
        match self {
            Algo::Bfs => "bfs",
            Algo::Dfs => "dfs",
            Algo::Baseline => "baseline",
            Algo::Oracle => "oracle",
        }
    }
}

/// Ablation variants: v1 keeps only the pre-extension strategy, v2 enables
/// every strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    V1,
    V2,
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::V1 => "v1",
            Variant::V2 => "v2",
        }
    }

    pub fn config(&self, iprp_mode: IprpMode) -> MinerConfig {
        match self {
            Variant::V1 => MinerConfig::pre_extension_only(),
            Variant::V2 => MinerConfig {
                iprp: Some(iprp_mode),
                ..MinerConfig::default()
            },
        }
    }
}

/// One grid cell to execute.
#[derive(Debug, Clone)]
pub struct BenchCell {
    pub algo: Algo,
    /// None for the baseline and the oracle, which have no strategy axis.
    pub variant: Option<Variant>,
    pub minsup: usize,
    pub query: String,
}

/// Constraints shared by every cell.
#[derive(Debug, Clone, Copy)]
pub struct BenchBase {
    pub gap: GapConstraint,
    pub len: LengthConstraint,
    pub iprp_mode: IprpMode,
    pub format: DataFormat,
}

/// Outcome of one cell. `time_ms` is None when timing was not measured
/// (parallel execution).
#[derive(Debug, Clone)]
pub struct BenchRow {
    pub algo: &'static str,
    pub variant: &'static str,
    pub minsup: usize,
    pub query: String,
    pub ok: bool,
    pub error: Option<String>,
    pub time_ms: Option<f64>,
    pub peak_memory_bytes: Option<u64>,
    pub netgap_calls: u64,
    pub presup_calls: u64,
    pub candidates: u64,
    pub patterns: u64,
}

/// Execute one cell against a copy of the database. Never panics on cell
/// failure; errors are recorded in the row.
pub fn run_cell(
    db: &SequenceDatabase,
    base: &BenchBase,
    cell: &BenchCell,
    timed: bool,
) -> BenchRow {
    let mut row = BenchRow {
        algo: cell.algo.name(),
        variant: cell.variant.map_or("-", |v| v.name()),
        minsup: cell.minsup,
        query: cell.query.clone(),
        ok: false,
        error: None,
        time_ms: None,
        peak_memory_bytes: None,
        netgap_calls: 0,
        presup_calls: 0,
        candidates: 0,
        patterns: 0,
    };
    // Each cell works on its own copy: query interning mutates the symbol
    // table, and isolation keeps cells order-independent.
    let mut local = db.clone();
    let query = match io::parse_query(&mut local, base.format, &cell.query) {
        Ok(q) => q,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    let params = match MiningParams::new(cell.minsup, base.gap, base.len, query) {
        Ok(p) => p,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };

    let started = Instant::now();
    let result = match cell.algo {
        Algo::Bfs => {
            let config = cell.variant.unwrap_or(Variant::V2).config(base.iprp_mode);
            Ok(bfs::mine_bfs(&local, &params, &config))
        }
        Algo::Dfs => {
            let config = cell.variant.unwrap_or(Variant::V2).config(base.iprp_mode);
            Ok(dfs::mine_dfs(&local, &params, &config))
        }
        Algo::Baseline => Ok(baseline::mine_baseline(&local, &params)),
        Algo::Oracle => oracle::mine_bruteforce(&local, &params),
    };
    let elapsed = started.elapsed();

    match result {
        Ok(res) => {
            row.ok = true;
            if timed {
                row.time_ms = Some(elapsed.as_secs_f64() * 1e3);
                row.peak_memory_bytes = stats::peak_memory_bytes();
            }
            row.netgap_calls = res.stats.netgap_calls;
            row.presup_calls = res.stats.presup_calls;
            row.candidates = res.stats.candidates_generated;
            row.patterns = res.patterns.len() as u64;
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

/// Run every cell in order. Cell failures are recorded and the grid
/// continues.
pub fn run_grid(db: &SequenceDatabase, base: &BenchBase, cells: &[BenchCell]) -> Vec<BenchRow> {
    cells.iter().map(|c| run_cell(db, base, c, true)).collect()
}

/// Run cells on worker threads; timing and memory columns are left blank
/// because concurrent cells distort them. Row order still follows the grid.
pub fn run_grid_parallel(
    db: &SequenceDatabase,
    base: &BenchBase,
    cells: &[BenchCell],
) -> Vec<BenchRow> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = cells
            .iter()
            .map(|cell| scope.spawn(move || run_cell(db, base, cell, false)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("bench cell panicked"))
            .collect()
    })
}

/// The full cartesian grid for a list of algorithms, variants, thresholds,
/// and queries. Baseline and oracle contribute one cell per (minsup, query).
pub fn grid(
    algos: &[Algo],
    variants: &[Variant],
    minsups: &[usize],
    queries: &[String],
) -> Vec<BenchCell> {
    let mut cells = Vec::new();
    for &algo in algos {
        let cell_variants: Vec<Option<Variant>> = match algo {
            Algo::Baseline | Algo::Oracle => vec![None],
            _ => variants.iter().map(|&v| Some(v)).collect(),
        };
        for variant in &cell_variants {
            for &minsup in minsups {
                for query in queries {
                    cells.push(BenchCell {
                        algo,
                        variant: *variant,
                        minsup,
                        query: query.clone(),
                    });
                }
            }
        }
    }
    cells
}
