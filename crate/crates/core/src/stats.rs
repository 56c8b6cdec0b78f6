//! Run statistics and dataset summaries.

use std::time::Duration;

use crate::model::SequenceDatabase;

/// Counters and timings collected over one mining run.
///
/// `netgap_calls` counts support evaluations on the candidate path, one per
/// (pattern, sequence) pair, so that enabling a pruning strategy can only
/// lower it. Support evaluations performed by pre-read and pre-extension
/// checks are tracked separately in `presup_calls`.
#[derive(Debug, Clone, Default)]
pub struct RunStats {
    pub load_time: Duration,
    pub preprocess_time: Duration,
    pub mine_time: Duration,
    pub netgap_calls: u64,
    pub presup_calls: u64,
    pub candidates_generated: u64,
    /// Candidates per level (breadth-first) or per depth (depth-first);
    /// index 0 is pattern length 1.
    pub candidates_per_level: Vec<u64>,
    pub patterns_found: u64,
    pub sequences_removed: u64,
    pub items_trimmed: u64,
    pub peak_memory_bytes: Option<u64>,
}

impl RunStats {
    pub(crate) fn add_candidates(&mut self, length: usize, count: u64) {
        if self.candidates_per_level.len() < length {
            self.candidates_per_level.resize(length, 0);
        }
        self.candidates_per_level[length - 1] += count;
        self.candidates_generated += count;
    }
}

/// Shape of a loaded dataset: total length, distinct item count, sequence
/// count, and average sequence length.
#[derive(Debug, Clone, PartialEq)]
pub struct DatasetSummary {
    pub total_length: u64,
    pub item_count: u64,
    pub sequence_count: u64,
    pub average_length: f64,
}

impl DatasetSummary {
    pub fn of(db: &SequenceDatabase) -> DatasetSummary {
        let total: u64 = db.records.iter().map(|r| r.len() as u64).sum();
        let nos = db.records.len() as u64;
        let mut seen = std::collections::HashSet::new();
        for rec in &db.records {
            seen.extend(rec.items.iter().copied());
        }
        DatasetSummary {
            total_length: total,
            item_count: seen.len() as u64,
            sequence_count: nos,
            average_length: if nos == 0 {
                0.0
            } else {
                total as f64 / nos as f64
            },
        }
    }
}

/// Best-effort peak RSS of the current process, from /proc. Falls back to
/// the current RSS where the kernel exposes no high-water mark. Indicative
/// only.
pub fn peak_memory_bytes() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let read_kb = |prefix: &str| {
        status.lines().find_map(|line| {
            line.strip_prefix(prefix)?
                .trim()
                .trim_end_matches("kB")
                .trim()
                .parse::<u64>()
                .ok()
        })
    };
    read_kb("VmHWM:")
        .or_else(|| read_kb("VmRSS:"))
        .map(|kb| kb * 1024)
}
