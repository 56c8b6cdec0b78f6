//! Command-line front end: argument parsing, run orchestration, and result /
//! statistics / benchmark output.
//!
//! Exit codes: 0 success, 2 usage error, 3 format or load error, 4 refused
//! by the exhaustive miner's size limits.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tnosp_core::bench::{self, Algo, BenchBase, BenchCell, BenchRow, Variant};
use tnosp_core::io::{self, DataFormat};
use tnosp_core::mine::{MinerConfig, MiningResult};
use tnosp_core::model::{GapConstraint, LengthConstraint, MiningParams, SequenceDatabase};
use tnosp_core::preprocess::IprpMode;
use tnosp_core::stats::DatasetSummary;
use tnosp_core::{mine_baseline, mine_bfs, mine_dfs, oracle, Error};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FORMAT: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "tnosp",
    about = "Mine frequent target non-overlapping sequential patterns under gap and span constraints",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one mining job and write the frequent target patterns.
    Mine(MineArgs),
    /// Run a benchmark grid over minsup values, queries, algorithms, and
    /// strategy variants.
    Bench(BenchArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Chars,
    Spmf,
}

impl From<FormatArg> for DataFormat {
    fn from(f: FormatArg) -> DataFormat {
        match f {
            FormatArg::Chars => DataFormat::Chars,
            FormatArg::Spmf => DataFormat::Spmf,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Bfs,
    Dfs,
    Baseline,
    Oracle,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum IprpModeArg {
    Safe,
    Paper,
}

impl From<IprpModeArg> for IprpMode {
    fn from(m: IprpModeArg) -> IprpMode {
        match m {
            IprpModeArg::Safe => IprpMode::Safe,
            IprpModeArg::Paper => IprpMode::Paper,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormatArg {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct CommonArgs {
    /// Dataset path.
    #[arg(long)]
    pub input: PathBuf,
    /// Dataset format.
    #[arg(long, value_enum)]
    pub format: FormatArg,
    /// Minimum wildcards between adjacent pattern items.
    #[arg(long, default_value_t = 0)]
    pub mingap: usize,
    /// Maximum wildcards between adjacent pattern items.
    #[arg(long, default_value_t = 3)]
    pub maxgap: usize,
    /// Minimum occurrence span.
    #[arg(long, default_value_t = 1)]
    pub minlen: usize,
    /// Maximum occurrence span.
    #[arg(long, default_value_t = 10)]
    pub maxlen: usize,
    /// Item pre-read pruning mode.
    #[arg(long, value_enum, default_value = "safe")]
    pub iprp_mode: IprpModeArg,
    /// Split multi-item itemsets in spmf input into consecutive positions
    /// instead of rejecting them.
    #[arg(long)]
    pub flatten: bool,
}

#[derive(Args, Debug)]
pub struct MineArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Query sequence: characters for chars input ("TC"), comma-separated
    /// integers for spmf input ("3,5").
    #[arg(long)]
    pub query: String,
    /// Minimum support (absolute occurrence count over the database).
    #[arg(long)]
    pub minsup: usize,
    /// Search order / engine.
    #[arg(long, value_enum, default_value = "bfs")]
    pub algo: AlgoArg,
    /// Disable sequence pre-read pruning.
    #[arg(long)]
    pub no_sprp: bool,
    /// Disable item pre-read pruning.
    #[arg(long)]
    pub no_iprp: bool,
    /// Disable breadth-first pre-extension pruning.
    #[arg(long)]
    pub no_bpep: bool,
    /// Disable depth-first pre-extension pruning.
    #[arg(long)]
    pub no_dpep: bool,
    /// Result file (stdout when omitted).
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Result encoding.
    #[arg(long, value_enum, default_value = "csv")]
    pub output_format: OutputFormatArg,
    /// Write run statistics (JSON) here.
    #[arg(long)]
    pub stats: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Comma-separated minsup values.
    #[arg(long, value_delimiter = ',')]
    pub minsup_list: Vec<usize>,
    /// Comma-separated query sequences.
    #[arg(long, value_delimiter = ',')]
    pub query_list: Vec<String>,
    /// Algorithms to benchmark.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [AlgoArg::Baseline, AlgoArg::Bfs, AlgoArg::Dfs])]
    pub algo_list: Vec<AlgoArg>,
    /// Strategy variants for bfs/dfs cells: v1 = pre-extension pruning only,
    /// v2 = all strategies.
    #[arg(long, value_delimiter = ',', default_values_t = [String::from("v1"), String::from("v2")])]
    pub variant_list: Vec<String>,
    /// Run cells on worker threads; timing and memory columns are dropped.
    #[arg(long)]
    pub parallel_cells: bool,
    /// Grid CSV (stdout when omitted).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Error category → exit code, with a machine-readable stderr prefix.
pub fn report_error(err: &Error) -> i32 {
    let (category, code) = match err {
        Error::InvalidParams(_) => ("usage", EXIT_USAGE),
        Error::Load(_) | Error::Format { .. } | Error::Io(_) => ("format", EXIT_FORMAT),
        Error::OracleLimit(_) => ("limit", EXIT_LIMIT),
    };
    eprintln!("error[{category}]: {err}");
    code
}

pub fn run(cli: Cli) -> i32 {
    let outcome = match cli.command {
        Command::Mine(args) => run_mine(args),
        Command::Bench(args) => run_bench(args),
    };
    match outcome {
        Ok(()) => 0,
        Err(err) => report_error(&err),
    }
}

fn load(common: &CommonArgs) -> Result<SequenceDatabase, Error> {
    match DataFormat::from(common.format) {
        DataFormat::Chars => io::load_chars(&common.input),
        DataFormat::Spmf => io::load_spmf(&common.input, common.flatten),
    }
}

fn constraints(common: &CommonArgs) -> Result<(GapConstraint, LengthConstraint), Error> {
    Ok((
        GapConstraint::new(common.mingap, common.maxgap)?,
        LengthConstraint::new(common.minlen, common.maxlen)?,
    ))
}

fn run_mine(args: MineArgs) -> Result<(), Error> {
    let (gap, len) = constraints(&args.common)?;
    let format = DataFormat::from(args.common.format);

    let load_started = Instant::now();
    let mut db = load(&args.common)?;
    let load_time = load_started.elapsed();
    let summary = DatasetSummary::of(&db);

    let query = io::parse_query(&mut db, format, &args.query)?;
    let params = MiningParams::new(args.minsup, gap, len, query)?;
    if params.query_exceeds_maxlen() {
        eprintln!(
            "warning: query length {} exceeds maxlen {}; no pattern can contain it",
            params.query.len(),
            len.maxlen
        );
    }

    let config = MinerConfig {
        sprp: !args.no_sprp,
        iprp: if args.no_iprp {
            None
        } else {
            Some(args.common.iprp_mode.into())
        },
        bpep: !args.no_bpep,
        dpep: !args.no_dpep,
    };
    let mut result = match args.algo {
        AlgoArg::Bfs => mine_bfs(&db, &params, &config),
        AlgoArg::Dfs => mine_dfs(&db, &params, &config),
        AlgoArg::Baseline => mine_baseline(&db, &params),
        AlgoArg::Oracle => oracle::mine_bruteforce(&db, &params)?,
    };
    result.stats.load_time = load_time;
    result.stats.peak_memory_bytes = tnosp_core::stats::peak_memory_bytes();

    let rendered = render_result(&db, format, &result);
    let body = match args.output_format {
        OutputFormatArg::Csv => result_csv(&rendered),
        OutputFormatArg::Json => result_json(&rendered),
    };
    write_output(args.output.as_deref(), &body)?;

    if let Some(stats_path) = &args.stats {
        let stats = StatsFile::new(&args, &summary, &result);
        let json = serde_json::to_string_pretty(&stats).expect("stats serialize");
        std::fs::write(stats_path, json)?;
    }
    Ok(())
}

/// One result row, already rendered in external symbols.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResultRow {
    pub pattern: String,
    pub support: usize,
}

/// Report rows: sorted by pattern length, then dictionary order.
pub fn render_result(
    db: &SequenceDatabase,
    format: DataFormat,
    result: &MiningResult,
) -> Vec<ResultRow> {
    result
        .sorted_patterns()
        .into_iter()
        .map(|(p, s)| ResultRow {
            pattern: io::render_pattern(db, format, p),
            support: s,
        })
        .collect()
}

pub fn result_csv(rows: &[ResultRow]) -> String {
    let mut out = String::from("pattern,support\n");
    for row in rows {
        out.push_str(&format!("{},{}\n", row.pattern, row.support));
    }
    out
}

/// Parse a result CSV back into rows (round-trip checks and downstream
/// tooling).
pub fn parse_result_csv(content: &str) -> Result<Vec<ResultRow>, Error> {
    let mut lines = content.lines();
    match lines.next() {
        Some("pattern,support") => {}
        other => {
            return Err(Error::Format {
                line: 1,
                message: format!("expected result header, found {other:?}"),
            })
        }
    }
    let mut rows = Vec::new();
    for (idx, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let (pattern, support) = line.rsplit_once(',').ok_or(Error::Format {
            line: idx + 2,
            message: "expected pattern,support".into(),
        })?;
        let support = support.parse().map_err(|_| Error::Format {
            line: idx + 2,
            message: format!("bad support {support:?}"),
        })?;
        rows.push(ResultRow {
            pattern: pattern.to_string(),
            support,
        });
    }
    Ok(rows)
}

pub fn result_json(rows: &[ResultRow]) -> String {
    let mut body = serde_json::to_string_pretty(rows).expect("rows serialize");
    body.push('\n');
    body
}

fn write_output(path: Option<&std::path::Path>, body: &str) -> Result<(), Error> {
    match path {
        Some(path) => std::fs::write(path, body)?,
        None => {
            std::io::stdout().write_all(body.as_bytes())?;
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct StatsFile {
    dataset: DatasetStats,
    run: RunSection,
}

#[derive(Debug, Serialize)]
struct DatasetStats {
    total_length: u64,
    item_count: u64,
    sequence_count: u64,
    average_length: f64,
}

#[derive(Debug, Serialize)]
struct RunSection {
    algo: String,
    query: String,
    minsup: usize,
    mingap: usize,
    maxgap: usize,
    minlen: usize,
    maxlen: usize,
    load_ms: f64,
    preprocess_ms: f64,
    mine_ms: f64,
    netgap_calls: u64,
    presup_calls: u64,
    candidates_generated: u64,
    candidates_per_level: Vec<u64>,
    patterns_found: u64,
    sequences_removed: u64,
    items_trimmed: u64,
    peak_memory_bytes: Option<u64>,
    query_unsatisfiable: bool,
}

impl StatsFile {
    fn new(args: &MineArgs, summary: &DatasetSummary, result: &MiningResult) -> StatsFile {
        let s = &result.stats;
        StatsFile {
            dataset: DatasetStats {
                total_length: summary.total_length,
                item_count: summary.item_count,
                sequence_count: summary.sequence_count,
                average_length: summary.average_length,
            },
            run: RunSection {
                algo: format!("{:?}", args.algo).to_lowercase(),
                query: args.query.clone(),
                minsup: args.minsup,
                mingap: args.common.mingap,
                maxgap: args.common.maxgap,
                minlen: args.common.minlen,
                maxlen: args.common.maxlen,
                load_ms: s.load_time.as_secs_f64() * 1e3,
                preprocess_ms: s.preprocess_time.as_secs_f64() * 1e3,
                mine_ms: s.mine_time.as_secs_f64() * 1e3,
                netgap_calls: s.netgap_calls,
                presup_calls: s.presup_calls,
                candidates_generated: s.candidates_generated,
                candidates_per_level: s.candidates_per_level.clone(),
                patterns_found: s.patterns_found,
                sequences_removed: s.sequences_removed,
                items_trimmed: s.items_trimmed,
                peak_memory_bytes: s.peak_memory_bytes,
                query_unsatisfiable: result.query_unsatisfiable,
            },
        }
    }
}

fn run_bench(args: BenchArgs) -> Result<(), Error> {
    let (gap, len) = constraints(&args.common)?;
    if args.minsup_list.is_empty() || args.query_list.is_empty() {
        return Err(Error::InvalidParams(
            "bench needs at least one minsup and one query".into(),
        ));
    }
    let mut variants = Vec::new();
    for v in &args.variant_list {
        match v.as_str() {
            "v1" => variants.push(Variant::V1),
            "v2" => variants.push(Variant::V2),
            other => {
                return Err(Error::InvalidParams(format!(
                    "unknown variant {other:?} (expected v1 or v2)"
                )))
            }
        }
    }

    let db = load(&args.common)?;
    let base = BenchBase {
        gap,
        len,
        iprp_mode: args.common.iprp_mode.into(),
        format: args.common.format.into(),
    };
    let algos: Vec<Algo> = args
        .algo_list
        .iter()
        .map(|a| match a {
            AlgoArg::Bfs => Algo::Bfs,
            AlgoArg::Dfs => Algo::Dfs,
            AlgoArg::Baseline => Algo::Baseline,
            AlgoArg::Oracle => Algo::Oracle,
        })
        .collect();
    let cells: Vec<BenchCell> = bench::grid(&algos, &variants, &args.minsup_list, &args.query_list);
    let rows = if args.parallel_cells {
        bench::run_grid_parallel(&db, &base, &cells)
    } else {
        bench::run_grid(&db, &base, &cells)
    };
    write_output(args.output.as_deref(), &bench_csv(&rows))?;
    Ok(())
}

pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(
        "algo,variant,minsup,query,status,error,time_ms,peak_memory_bytes,netgap_calls,presup_calls,candidates,patterns\n",
    );
    for r in rows {
        let status = if r.ok { "ok" } else { "error" };
        // Keep the CSV single-token per field.
        let error = r.error.as_deref().unwrap_or("").replace([',', '\n'], ";");
        let time = r.time_ms.map(|t| format!("{t:.3}")).unwrap_or_default();
        let mem = r
            .peak_memory_bytes
            .map(|m| m.to_string())
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.algo,
            r.variant,
            r.minsup,
            r.query,
            status,
            error,
            time,
            mem,
            r.netgap_calls,
            r.presup_calls,
            r.candidates,
            r.patterns
        ));
    }
    out
}
