//! Database reduction before mining: sequence pre-read pruning (SPRP) drops
//! sequences that cannot host any target occurrence, and item pre-read
//! pruning (IPRP) trims hopeless prefixes and suffixes from the survivors.

use crate::model::{GapConstraint, LengthConstraint, MiningParams, Pattern, SequenceRecord};
use crate::nettree;
use crate::stats::RunStats;

/// How IPRP decides what to trim.
///
/// `Safe` keeps exactly the positions that lie inside some window of span at
/// most maxlen containing the query as a subsequence; it provably preserves
/// every occurrence of every target pattern. `Paper` applies the literal
/// front/back cursor rules from the original formulation, calibrated on its
/// worked example; it can trim more aggressively and carries no preservation
/// guarantee.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IprpMode {
    Safe,
    Paper,
}

/// What preprocessing did to the database.
#[derive(Debug, Clone, Default)]
pub struct PreprocessReport {
    pub mode: Option<IprpMode>,
    pub sequences_removed: usize,
    /// Per surviving sequence, in order.
    pub items_trimmed_front: Vec<usize>,
    pub items_trimmed_back: Vec<usize>,
}

impl PreprocessReport {
    pub fn items_trimmed(&self) -> usize {
        self.items_trimmed_front.iter().sum::<usize>()
            + self.items_trimmed_back.iter().sum::<usize>()
    }
}

/// Pre-read support of the query inside one sequence: the query's own
/// support under the relaxed bounds any target occurrence would impose on
/// its embedded query items. Within an occurrence of span at most maxlen,
/// adjacent query items sit at most maxlen - |qs| wildcards apart, while the
/// embedding's own span may be anywhere in [|qs|, maxlen]; the span lower
/// bound is therefore |qs|, not minlen. Zero means the sequence cannot host
/// any target occurrence.
pub fn presup(query: &Pattern, record: &SequenceRecord, params: &MiningParams) -> usize {
    debug_assert!(params.len.maxlen >= query.len());
    let relaxed_maxgap = params.len.maxlen - query.len();
    if relaxed_maxgap < params.gap.mingap && query.len() > 1 {
        return 0;
    }
    let gap = GapConstraint {
        mingap: params.gap.mingap,
        maxgap: relaxed_maxgap,
    };
    let len = LengthConstraint {
        minlen: query.len().max(1),
        maxlen: params.len.maxlen,
    };
    nettree::netgap(query.items(), &record.items, &gap, &len)
}

/// Keep exactly the records whose pre-read support is at least one; record
/// order is preserved.
pub fn sprp_filter(records: &[SequenceRecord], params: &MiningParams) -> Vec<SequenceRecord> {
    records
        .iter()
        .filter(|r| presup(&params.query, r, params) >= 1)
        .cloned()
        .collect()
}

/// Trim hopeless front/back items from one sequence. Returns the trimmed
/// record plus the number of items removed at each end. Only prefixes and
/// suffixes are removed; interior positions are never touched, so gap
/// arithmetic between surviving positions is unchanged.
pub fn iprp_trim(
    record: &SequenceRecord,
    params: &MiningParams,
    mode: IprpMode,
) -> (SequenceRecord, usize, usize) {
    let n = record.items.len();
    let (keep_from, keep_to) = match mode {
        IprpMode::Safe => safe_window(record, params),
        IprpMode::Paper => paper_window(record, params),
    };
    match (keep_from, keep_to) {
        (Some(from), Some(to)) if from <= to => {
            let items = record.items[from..=to].to_vec();
            (SequenceRecord::new(record.sid, items), from, n - 1 - to)
        }
        _ => (SequenceRecord::new(record.sid, Vec::new()), n, 0),
    }
}

/// Safe rule: a 0-based position survives iff some window of span <= maxlen
/// contains it together with a complete query embedding. For each embedding
/// start the greedy (leftmost) completion minimizes the end, which maximizes
/// the window; surviving positions form the union of those windows, trimmed
/// to its outermost bounds to keep the output an infix.
fn safe_window(record: &SequenceRecord, params: &MiningParams) -> (Option<usize>, Option<usize>) {
    let qs = params.query.items();
    let maxlen = params.len.maxlen;
    let items = &record.items;
    let mut first: Option<usize> = None;
    let mut last: Option<usize> = None;
    for start in 0..items.len() {
        if items[start] != qs[0] {
            continue;
        }
        let mut q = 1;
        let mut end = start;
        while q < qs.len() {
            end += 1;
            if end >= items.len() || end - start + 1 > maxlen {
                break;
            }
            if items[end] == qs[q] {
                q += 1;
            }
        }
        if q < qs.len() || end - start + 1 > maxlen {
            continue;
        }
        let lo = (end + 1).saturating_sub(maxlen);
        let hi = (start + maxlen - 1).min(items.len() - 1);
        first = Some(first.map_or(lo, |f: usize| f.min(lo)));
        last = Some(last.map_or(hi, |l: usize| l.max(hi)));
    }
    (first, last)
}

/// Literal front/back cursor rules, calibrated on the original worked
/// example. Front: complete the greedy forward match; everything more than
/// maxlen positions before its end can belong to no target window. Back:
/// scan backwards matching the reversed query, trimming as soon as the
/// consumed tail plus the items still needed cannot fit in maxlen. An
/// incomplete scan on either side empties the sequence.
fn paper_window(record: &SequenceRecord, params: &MiningParams) -> (Option<usize>, Option<usize>) {
    let qs = params.query.items();
    let maxlen = params.len.maxlen;
    let items = &record.items;

    let forward = crate::model::match_forward(items, qs);
    if forward.q_match < qs.len() {
        return (None, None);
    }
    let from = forward.i_match.saturating_sub(maxlen); // 0-based keep start

    let tail = &items[from..];
    let mut consumed = 0usize;
    let mut matched = 0usize;
    let mut trim_back = None;
    for item in tail.iter().rev() {
        consumed += 1;
        if matched < qs.len() && *item == qs[qs.len() - 1 - matched] {
            matched += 1;
            if matched == qs.len() {
                break;
            }
        }
        if consumed + (qs.len() - 1 - matched) > maxlen {
            trim_back = Some(consumed);
            break;
        }
    }
    if matched < qs.len() && trim_back.is_none() {
        return (None, None); // back scan exhausted without completing
    }
    let to = match trim_back {
        Some(cut) => {
            if tail.len() <= cut {
                return (None, None);
            }
            from + tail.len() - 1 - cut
        }
        None => items.len() - 1,
    };
    (Some(from), Some(to))
}

/// The full pre-read pipeline as used by the miners: SPRP (optional), then
/// IPRP (optional) over the survivors. Counters for presup evaluations and
/// removed/trimmed items are added to `stats`.
pub fn preprocess(
    records: &[SequenceRecord],
    params: &MiningParams,
    sprp: bool,
    iprp: Option<IprpMode>,
    stats: &mut RunStats,
) -> (Vec<SequenceRecord>, PreprocessReport) {
    let mut report = PreprocessReport {
        mode: iprp,
        ..Default::default()
    };
    if !params.is_targeted() {
        return (records.to_vec(), report);
    }
    let mut working: Vec<SequenceRecord> = if sprp {
        stats.presup_calls += records.len() as u64;
        sprp_filter(records, params)
    } else {
        records.to_vec()
    };
    report.sequences_removed = records.len() - working.len();
    stats.sequences_removed = report.sequences_removed as u64;

    if let Some(mode) = iprp {
        let mut trimmed = Vec::with_capacity(working.len());
        for rec in &working {
            let (out, front, back) = iprp_trim(rec, params, mode);
            report.items_trimmed_front.push(front);
            report.items_trimmed_back.push(back);
            trimmed.push(out);
        }
        working = trimmed;
        stats.items_trimmed = report.items_trimmed() as u64;
    }
    (working, report)
}
