//! Breadth-first targeted miner: level-wise growth with prefix/suffix
//! candidate joins, pre-extension pruning (BPEP), and the target filter
//! applied as patterns are found.

use std::collections::HashSet;

use crate::mine::{MineCtx, MinerConfig, MiningResult};
use crate::model::{is_subsequence, ItemId, MiningParams, Pattern, SequenceDatabase};
use crate::preprocess;

/// All patterns one item longer whose prefix and suffix both appear in the
/// (sorted, duplicate-free) level. For a level of single items this is the
/// full cross product; for longer levels each pattern `a` is joined with
/// every `b` such that suffix(a) == prefix(b), located by binary search.
/// The output is sorted and duplicate-free by construction.
pub fn gen_candidates(level: &[Pattern]) -> Vec<Pattern> {
    debug_assert!(
        level.windows(2).all(|w| w[0] < w[1]),
        "level must be sorted"
    );
    let mut out = Vec::new();
    if level.is_empty() {
        return out;
    }
    if level[0].len() == 1 {
        for a in level {
            for b in level {
                out.push(a.extended(b.items()[0]));
            }
        }
        return out;
    }
    for a in level {
        let join = a.suffix();
        // First level entry whose prefix equals suffix(a); entries sharing a
        // prefix are contiguous in the sorted level.
        let start = level.partition_point(|b| b.items()[..b.len() - 1] < *join.items());
        for b in &level[start..] {
            if b.items()[..b.len() - 1] != *join.items() {
                break;
            }
            out.push(a.extended(*b.items().last().unwrap()));
        }
    }
    out
}

/// Pre-extension check for a frequent pattern that does not itself contain
/// the query: can some super-pattern embedding the query still be frequent?
///
/// The query is split as L + M + R over every index pair; whenever M is a
/// subsequence of the pattern, the pre-extended pattern L + p + R is scored
/// under relaxed bounds (gap [mingap, maxlen - |pe|], span [|pe|, maxlen]).
/// Keeping requires some pre-extension to reach minsup; splits whose
/// pre-extension exceeds maxlen are skipped. Patterns containing the query
/// are kept without any computation.
pub fn bpep_keep(
    pattern: &Pattern,
    params: &MiningParams,
    records: &[crate::model::SequenceRecord],
) -> bool {
    let mut ctx = MineCtx::new(records.to_vec(), params);
    bpep_keep_ctx(pattern, params, &mut ctx)
}

pub(crate) fn bpep_keep_ctx(pattern: &Pattern, params: &MiningParams, ctx: &mut MineCtx) -> bool {
    let qs = params.query.items();
    if is_subsequence(qs, pattern.items()) {
        return true;
    }
    let mut seen: HashSet<Vec<ItemId>> = HashSet::new();
    for i in 0..=qs.len() {
        for j in i..=qs.len() {
            if !is_subsequence(&qs[i..j], pattern.items()) {
                continue;
            }
            let mut pe = Vec::with_capacity(pattern.len() + qs.len() - (j - i));
            pe.extend_from_slice(&qs[..i]);
            pe.extend_from_slice(pattern.items());
            pe.extend_from_slice(&qs[j..]);
            if pe.len() > params.len.maxlen || !seen.insert(pe.clone()) {
                continue;
            }
            let relaxed_maxgap = params.len.maxlen - pe.len();
            if ctx.relaxed_support(&pe, relaxed_maxgap) >= params.minsup {
                return true;
            }
        }
    }
    false
}

/// Every pre-extended pattern a split enumeration would score, deduplicated,
/// in enumeration order. Exposed for inspection and tests.
pub fn bpep_pre_extensions(pattern: &Pattern, query: &Pattern) -> Vec<Pattern> {
    let qs = query.items();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for i in 0..=qs.len() {
        for j in i..=qs.len() {
            if !is_subsequence(&qs[i..j], pattern.items()) {
                continue;
            }
            let mut pe = Vec::new();
            pe.extend_from_slice(&qs[..i]);
            pe.extend_from_slice(pattern.items());
            pe.extend_from_slice(&qs[j..]);
            if seen.insert(pe.clone()) {
                out.push(Pattern::new(pe));
            }
        }
    }
    out
}

/// Breadth-first mining of all frequent target patterns.
pub fn mine_bfs(
    db: &SequenceDatabase,
    params: &MiningParams,
    config: &MinerConfig,
) -> MiningResult {
    let started = std::time::Instant::now();
    let mut result = MiningResult::default();
    if params.query_exceeds_maxlen() {
        result.query_unsatisfiable = true;
        return result;
    }

    let mut stats = crate::stats::RunStats::default();
    let pre_started = std::time::Instant::now();
    let (working, _report) =
        preprocess::preprocess(&db.records, params, config.sprp, config.iprp, &mut stats);
    stats.preprocess_time = pre_started.elapsed();
    let mut ctx = MineCtx::new(working, params);
    ctx.stats = stats;

    // Frequent single items, in id (dictionary) order.
    let mut items: Vec<ItemId> = ctx
        .records
        .iter()
        .flat_map(|r| r.items.iter().copied())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    items.sort_unstable();
    ctx.stats.add_candidates(1, items.len() as u64);
    let mut level: Vec<(Pattern, usize)> = Vec::new();
    for item in items {
        let p = Pattern::new(vec![item]);
        let sup = ctx.support(p.items());
        if sup >= params.minsup {
            level.push((p, sup));
        }
    }

    while !level.is_empty() {
        for (p, sup) in &level {
            if params.is_targeted() && !p.contains(&params.query) {
                continue;
            }
            result.record(p.clone(), *sup);
        }
        // Pre-extension sweep before the join; patterns containing the query
        // are exempt.
        if config.bpep && params.is_targeted() {
            let mut kept = Vec::with_capacity(level.len());
            for (p, sup) in level {
                if bpep_keep_ctx(&p, params, &mut ctx) {
                    kept.push((p, sup));
                }
            }
            level = kept;
        }
        let patterns: Vec<Pattern> = level.iter().map(|(p, _)| p.clone()).collect();
        let candidates = gen_candidates(&patterns);
        if candidates.is_empty() {
            break;
        }
        ctx.stats
            .add_candidates(candidates[0].len(), candidates.len() as u64);
        let mut next = Vec::new();
        for cand in candidates {
            let sup = ctx.support(cand.items());
            if sup >= params.minsup {
                next.push((cand, sup));
            }
        }
        level = next;
    }

    result.stats = ctx.stats;
    result.stats.patterns_found = result.patterns.len() as u64;
    result.stats.mine_time = started.elapsed();
    result
}
