//! Targeted mining of non-overlapping sequential patterns.
//!
//! Given a sequence database, a minimum support threshold, per-adjacent-item
//! gap bounds, occurrence span bounds, and a query sequence, the miners in
//! this crate find every pattern that (a) reaches the support threshold when
//! support is counted as the maximum number of non-overlapping occurrences
//! summed over all sequences, and (b) contains the query as a subsequence.
//!
//! Support counting goes through [`nettree`], a NETGAP-style leveled graph
//! over matching positions. Two search orders are provided ([`bfs`] and
//! [`dfs`]) together with four pruning strategies: sequence pre-read pruning
//! (SPRP), item pre-read pruning (IPRP), and the pre-extension checks used by
//! the breadth-first and depth-first miners (BPEP / DPEP). A post-processing
//! [`baseline`] and an exhaustive [`oracle`] exist for cross-checking.
//!
//! ```
//! use tnosp_core::io::{parse_chars, parse_query, DataFormat};
//! use tnosp_core::{mine_bfs, GapConstraint, LengthConstraint, MinerConfig, MiningParams};
//!
//! let mut db = parse_chars("ATCACTCG\nTGGCT\nAGTAA\nGAGATG\n")?;
//! let query = parse_query(&mut db, DataFormat::Chars, "AT")?;
//! let params = MiningParams::new(
//!     2,
//!     GapConstraint::new(0, 2)?,
//!     LengthConstraint::new(1, 6)?,
//!     query,
//! )?;
//! let result = mine_bfs(&db, &params, &MinerConfig::default());
//!
//! let rows: Vec<String> = result
//!     .sorted_patterns()
//!     .iter()
//!     .map(|(p, sup)| {
//!         let name: String = p.items().iter().map(|&i| db.symbols.symbol(i)).collect();
//!         format!("{name}:{sup}")
//!     })
//!     .collect();
//! assert!(rows.contains(&"AT:4".to_string()));
//! assert!(rows.contains(&"ATA:2".to_string()));
//! # Ok::<(), tnosp_core::Error>(())
//! ```

pub mod baseline;
pub mod bench;
pub mod bfs;
pub mod dfs;
pub mod error;
pub mod io;
pub mod mine;
pub mod model;
pub mod nettree;
pub mod oracle;
pub mod preprocess;
pub mod stats;

pub use baseline::mine_baseline;
pub use bfs::mine_bfs;
pub use dfs::mine_dfs;
pub use error::{Error, Result};
pub use mine::{MinerConfig, MiningResult};
pub use model::{
    is_subsequence, match_backward, match_forward, GapConstraint, ItemId, LengthConstraint,
    MatchState, MiningParams, Occurrence, Pattern, SequenceDatabase, SequenceRecord, SymbolTable,
};
pub use nettree::{netgap, support_db, Nettree};
pub use oracle::mine_bruteforce;
pub use preprocess::IprpMode;
pub use stats::{DatasetSummary, RunStats};
