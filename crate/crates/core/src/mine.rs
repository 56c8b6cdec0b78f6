//! Shared mining machinery: strategy configuration, the result type, and the
//! support-evaluation context used by both search orders.

use std::collections::{BTreeMap, HashMap};

use crate::model::{ItemId, LengthConstraint, MiningParams, Pattern, SequenceRecord};
use crate::nettree;
use crate::preprocess::IprpMode;
use crate::stats::RunStats;

/// Which pruning strategies a run uses. The default enables everything
/// (the headline configuration); the baseline disables everything and relies
/// purely on post-filtering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinerConfig {
    /// Sequence pre-read pruning: drop sequences that cannot host any target
    /// occurrence.
    pub sprp: bool,
    /// Item pre-read pruning mode, or None to disable trimming.
    pub iprp: Option<IprpMode>,
    /// Pre-extension pruning in the breadth-first miner.
    pub bpep: bool,
    /// Pre-extension pruning in the depth-first miner.
    pub dpep: bool,
}

impl Default for MinerConfig {
    fn default() -> Self {
        MinerConfig {
            sprp: true,
            iprp: Some(IprpMode::Safe),
            bpep: true,
            dpep: true,
        }
    }
}

impl MinerConfig {
    /// Post-processing baseline: no pruning at all.
    pub fn baseline() -> Self {
        MinerConfig {
            sprp: false,
            iprp: None,
            bpep: false,
            dpep: false,
        }
    }

    /// Pre-extension pruning only (the v1 ablation variant).
    pub fn pre_extension_only() -> Self {
        MinerConfig {
            sprp: false,
            iprp: None,
            bpep: true,
            dpep: true,
        }
    }
}

/// The frequent target pattern set with supports, plus run statistics.
#[derive(Debug, Clone, Default)]
pub struct MiningResult {
    /// Every reported pattern with its support.
    pub patterns: BTreeMap<Pattern, usize>,
    /// Patterns in discovery order: level order for breadth-first runs,
    /// depth-first preorder for depth-first runs.
    pub emitted: Vec<Pattern>,
    pub stats: RunStats,
    /// Set when the query is longer than maxlen, making every pattern
    /// unsatisfiable; the result is then empty by construction.
    pub query_unsatisfiable: bool,
}

impl MiningResult {
    pub(crate) fn record(&mut self, pattern: Pattern, support: usize) {
        if self.patterns.insert(pattern.clone(), support).is_none() {
            self.emitted.push(pattern);
        }
    }

    /// Patterns sorted by length, then lexicographically: the report order.
    pub fn sorted_patterns(&self) -> Vec<(&Pattern, usize)> {
        let mut rows: Vec<(&Pattern, usize)> = self.patterns.iter().map(|(p, &s)| (p, s)).collect();
        rows.sort_by_key(|(p, _)| (p.len(), p.items().to_vec()));
        rows
    }
}

/// Mutable state threaded through one mining run: the working record set,
/// counters, and the memo for relaxed pre-extension supports.
pub(crate) struct MineCtx<'a> {
    pub records: Vec<SequenceRecord>,
    pub params: &'a MiningParams,
    pub stats: RunStats,
    presup_memo: HashMap<(Vec<ItemId>, usize), usize>,
}

impl<'a> MineCtx<'a> {
    pub fn new(records: Vec<SequenceRecord>, params: &'a MiningParams) -> Self {
        MineCtx {
            records,
            params,
            stats: RunStats::default(),
            presup_memo: HashMap::new(),
        }
    }

    /// Candidate-path support of a pattern over the working set.
    pub fn support(&mut self, pattern: &[ItemId]) -> usize {
        self.stats.netgap_calls += self.records.len() as u64;
        nettree::support_records(pattern, &self.records, &self.params.gap, &self.params.len)
    }

    /// Support of a pre-extended pattern under relaxed bounds: gap
    /// [mingap, relaxed_maxgap] and span [|pattern|, maxlen]. Memoized per
    /// (pattern, relaxed_maxgap); an inverted gap window admits nothing.
    pub fn relaxed_support(&mut self, pattern: &[ItemId], relaxed_maxgap: usize) -> usize {
        if relaxed_maxgap < self.params.gap.mingap && pattern.len() > 1 {
            return 0;
        }
        let key = (pattern.to_vec(), relaxed_maxgap);
        if let Some(&sup) = self.presup_memo.get(&key) {
            return sup;
        }
        let gap = crate::model::GapConstraint {
            mingap: self.params.gap.mingap,
            maxgap: relaxed_maxgap,
        };
        let len = LengthConstraint {
            minlen: pattern.len().max(1),
            maxlen: self.params.len.maxlen,
        };
        self.stats.presup_calls += self.records.len() as u64;
        let sup = nettree::support_records(pattern, &self.records, &gap, &len);
        self.presup_memo.insert(key, sup);
        sup
    }
}
