//! Post-processing baseline: plain breadth-first non-overlapping mining with
//! every pruning strategy disabled, keeping only patterns that contain the
//! query. Shares the breadth-first code path so that ablation comparisons
//! measure exactly the strategies.

use crate::bfs;
use crate::mine::{MinerConfig, MiningResult};
use crate::model::{MiningParams, SequenceDatabase};

/// Mine every frequent pattern, then report those containing the query.
/// Result content is identical to the targeted miners'.
pub fn mine_baseline(db: &SequenceDatabase, params: &MiningParams) -> MiningResult {
    bfs::mine_bfs(db, params, &MinerConfig::baseline())
}
