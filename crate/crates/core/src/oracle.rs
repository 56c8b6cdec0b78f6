//! Exhaustive ground truth: full occurrence enumeration, exact maximum
//! non-overlapping selection, and a size-limited brute-force miner.
//!
//! Everything here is deliberately independent of the Nettree code path so
//! the two can be checked against each other.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::mine::MiningResult;
use crate::model::{
    GapConstraint, ItemId, LengthConstraint, MiningParams, Occurrence, SequenceDatabase,
};

/// Largest alphabet the brute-force miner accepts.
pub const MAX_ORACLE_ALPHABET: usize = 6;
/// Largest span bound the brute-force miner accepts (also bounds pattern
/// length, since an occurrence spans at least the pattern size).
pub const MAX_ORACLE_MAXLEN: usize = 10;
/// Largest total database length the brute-force miner accepts.
pub const MAX_ORACLE_TOTAL_LENGTH: usize = 64;

/// Every occurrence of `pattern` in `seq` satisfying the gap and span
/// constraints, in lexicographic position order. Exponential-safe only for
/// short sequences.
pub fn enumerate_occurrences(
    pattern: &[ItemId],
    seq: &[ItemId],
    gap: &GapConstraint,
    len: &LengthConstraint,
) -> Vec<Occurrence> {
    assert!(
        !pattern.is_empty(),
        "occurrence enumeration needs a pattern item"
    );
    let mut out = Vec::new();
    let mut positions = Vec::with_capacity(pattern.len());
    search(pattern, seq, gap, len, &mut positions, &mut out, false);
    out
}

/// Whether at least one occurrence exists; stops at the first hit.
pub fn has_occurrence(
    pattern: &[ItemId],
    seq: &[ItemId],
    gap: &GapConstraint,
    len: &LengthConstraint,
) -> bool {
    let mut out = Vec::new();
    let mut positions = Vec::with_capacity(pattern.len());
    search(pattern, seq, gap, len, &mut positions, &mut out, true);
    !out.is_empty()
}

fn search(
    pattern: &[ItemId],
    seq: &[ItemId],
    gap: &GapConstraint,
    len: &LengthConstraint,
    positions: &mut Vec<usize>,
    out: &mut Vec<Occurrence>,
    first_only: bool,
) {
    if first_only && !out.is_empty() {
        return;
    }
    let depth = positions.len();
    if depth == pattern.len() {
        let occ = Occurrence {
            positions: positions.clone(),
        };
        debug_assert!(occ.positions.windows(2).all(|w| gap.admits(w[0], w[1])));
        debug_assert!(len.admits_span(occ.span()));
        out.push(occ);
        return;
    }
    let (lo, hi) = match positions.last() {
        Some(&prev) => (prev + gap.mingap + 1, prev + gap.maxgap + 1),
        None => (1, seq.len()),
    };
    for pos in lo..=hi.min(seq.len()) {
        if seq[pos - 1] != pattern[depth] {
            continue;
        }
        let first = *positions.first().unwrap_or(&pos);
        let span = pos - first + 1;
        if span > len.maxlen {
            break;
        }
        if depth + 1 == pattern.len() && span < len.minlen {
            continue;
        }
        positions.push(pos);
        search(pattern, seq, gap, len, positions, out, first_only);
        positions.pop();
        if first_only && !out.is_empty() {
            return;
        }
    }
}

/// Exact maximum number of occurrences such that, for every pattern index,
/// the positions at that index are pairwise distinct. Branch and bound over
/// occurrences ordered by first position, seeded with an earliest-finishing
/// greedy lower bound and capped by the per-index distinct-position count.
pub fn max_nonoverlapping(occurrences: &[Occurrence]) -> usize {
    if occurrences.is_empty() {
        return 0;
    }
    let mut sorted: Vec<&Occurrence> = occurrences.iter().collect();
    sorted.sort();

    // Upper bound: each selected occurrence consumes one distinct position
    // per pattern index.
    let width = sorted[0].positions.len();
    let upper = (0..width)
        .map(|k| {
            sorted
                .iter()
                .map(|o| o.positions[k])
                .collect::<std::collections::HashSet<_>>()
                .len()
        })
        .min()
        .unwrap_or(0);

    // Lower bound: greedy by last position, earliest-finishing first.
    let mut by_end: Vec<&Occurrence> = sorted.clone();
    by_end.sort_by_key(|o| (*o.positions.last().unwrap(), o.positions.clone()));
    let mut taken: Vec<&Occurrence> = Vec::new();
    for occ in by_end {
        if taken.iter().all(|t| t.disjoint_levelwise(occ)) {
            taken.push(occ);
        }
    }
    let mut best = taken.len();
    if best == upper {
        return best;
    }

    let mut chosen: Vec<&Occurrence> = Vec::new();
    branch(&sorted, 0, &mut chosen, &mut best);
    best
}

fn branch<'a>(
    sorted: &[&'a Occurrence],
    idx: usize,
    chosen: &mut Vec<&'a Occurrence>,
    best: &mut usize,
) {
    *best = (*best).max(chosen.len());
    if chosen.len() + (sorted.len() - idx) <= *best {
        return; // even taking everything left cannot improve
    }
    if idx == sorted.len() {
        return;
    }
    let cand = sorted[idx];
    if chosen.iter().all(|c| c.disjoint_levelwise(cand)) {
        chosen.push(cand);
        branch(sorted, idx + 1, chosen, best);
        chosen.pop();
    }
    branch(sorted, idx + 1, chosen, best);
}

/// Brute-force support of one pattern in one sequence.
pub fn bruteforce_support(
    pattern: &[ItemId],
    seq: &[ItemId],
    gap: &GapConstraint,
    len: &LengthConstraint,
) -> usize {
    max_nonoverlapping(&enumerate_occurrences(pattern, seq, gap, len))
}

/// Brute-force support summed over a database.
pub fn bruteforce_support_db(
    pattern: &[ItemId],
    db: &SequenceDatabase,
    gap: &GapConstraint,
    len: &LengthConstraint,
) -> usize {
    db.records
        .iter()
        .map(|r| bruteforce_support(pattern, &r.items, gap, len))
        .sum()
}

/// Exhaustive miner: every pattern over the items present in the database,
/// grown up to `maxlen` items, with support computed by full enumeration
/// plus exact maximum non-overlapping selection. Keeps patterns reaching
/// `minsup` that contain the query. Inputs beyond the size limits are
/// refused.
pub fn mine_bruteforce(db: &SequenceDatabase, params: &MiningParams) -> Result<MiningResult> {
    let mut alphabet: Vec<ItemId> = Vec::new();
    for rec in &db.records {
        for &it in &rec.items {
            if !alphabet.contains(&it) {
                alphabet.push(it);
            }
        }
    }
    alphabet.sort_unstable();

    if alphabet.len() > MAX_ORACLE_ALPHABET {
        return Err(Error::OracleLimit(format!(
            "alphabet size {} exceeds {MAX_ORACLE_ALPHABET}",
            alphabet.len()
        )));
    }
    if params.len.maxlen > MAX_ORACLE_MAXLEN {
        return Err(Error::OracleLimit(format!(
            "maxlen {} exceeds {MAX_ORACLE_MAXLEN}",
            params.len.maxlen
        )));
    }
    let total: usize = db.total_length();
    if total > MAX_ORACLE_TOTAL_LENGTH {
        return Err(Error::OracleLimit(format!(
            "total database length {total} exceeds {MAX_ORACLE_TOTAL_LENGTH}"
        )));
    }

    let mut result = MiningResult::default();
    if params.query_exceeds_maxlen() {
        result.query_unsatisfiable = true;
        return Ok(result);
    }

    // Growth is pruned only where a pattern has no occurrence at all under
    // the relaxed span [1, maxlen]; restriction to a prefix preserves gaps
    // and can only shrink the span, so extensions of a dead pattern are dead.
    let existence_len = LengthConstraint {
        minlen: 1,
        maxlen: params.len.maxlen,
    };
    let mut patterns = BTreeMap::new();
    let mut stack: Vec<Vec<ItemId>> = alphabet.iter().map(|&c| vec![c]).collect();
    stack.reverse();
    while let Some(pattern) = stack.pop() {
        let live = db
            .records
            .iter()
            .any(|r| has_occurrence(&pattern, &r.items, &params.gap, &existence_len));
        if !live {
            continue;
        }
        let sup = bruteforce_support_db(&pattern, db, &params.gap, &params.len);
        if sup >= params.minsup && crate::model::is_subsequence(params.query.items(), &pattern) {
            patterns.insert(crate::model::Pattern::new(pattern.clone()), sup);
        }
        if pattern.len() < params.len.maxlen {
            for &c in alphabet.iter().rev() {
                let mut next = pattern.clone();
                next.push(c);
                stack.push(next);
            }
        }
    }

    result.emitted = patterns.keys().cloned().collect();
    result.patterns = patterns;
    result.stats.patterns_found = result.patterns.len() as u64;
    Ok(result)
}
