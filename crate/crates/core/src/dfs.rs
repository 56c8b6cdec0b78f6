//! Depth-first targeted miner: lexicographic recursive extension over the
//! frequent single items, with pre-extension pruning (DPEP) ending hopeless
//! branches.

use crate::mine::{MineCtx, MinerConfig, MiningResult};
use crate::model::{
    is_subsequence, match_forward, ItemId, MiningParams, Pattern, SequenceDatabase,
};
use crate::preprocess;

/// Pre-extension check for a frequent pattern: extensions append items at
/// the end, so the cheapest super-pattern containing the query is the
/// pattern followed by the query's unmatched tail. If even that pre-extended
/// pattern cannot reach minsup under relaxed bounds (gap
/// [mingap, maxlen - |qs|], span [|pe|, maxlen]), no extension can become a
/// frequent target pattern. Patterns already containing the query are kept
/// without computation.
pub fn dpep_keep(
    pattern: &Pattern,
    params: &MiningParams,
    records: &[crate::model::SequenceRecord],
) -> bool {
    let mut ctx = MineCtx::new(records.to_vec(), params);
    dpep_keep_ctx(pattern, params, &mut ctx)
}

pub(crate) fn dpep_keep_ctx(pattern: &Pattern, params: &MiningParams, ctx: &mut MineCtx) -> bool {
    let qs = params.query.items();
    let matched = match_forward(pattern.items(), qs).q_match;
    if matched == qs.len() {
        return true;
    }
    let pe = pattern.concat(&qs[matched..]);
    if pe.len() > params.len.maxlen {
        return false;
    }
    let relaxed_maxgap = params.len.maxlen - qs.len();
    ctx.relaxed_support(pe.items(), relaxed_maxgap) >= params.minsup
}

fn extend(
    pattern: &Pattern,
    support: usize,
    alphabet: &[ItemId],
    params: &MiningParams,
    config: &MinerConfig,
    ctx: &mut MineCtx,
    result: &mut MiningResult,
) {
    debug_assert!(pattern.len() <= params.len.maxlen);
    if !params.is_targeted() || is_subsequence(params.query.items(), pattern.items()) {
        result.record(pattern.clone(), support);
    }
    if config.dpep && params.is_targeted() && !dpep_keep_ctx(pattern, params, ctx) {
        return;
    }
    if pattern.len() == params.len.maxlen {
        return; // an occurrence spans at least the pattern size
    }
    ctx.stats
        .add_candidates(pattern.len() + 1, alphabet.len() as u64);
    for &c in alphabet {
        let child = pattern.extended(c);
        let sup = ctx.support(child.items());
        if sup >= params.minsup {
            extend(&child, sup, alphabet, params, config, ctx, result);
        }
    }
}

/// Depth-first mining of all frequent target patterns. The result set and
/// supports equal the breadth-first miner's; only discovery order differs.
pub fn mine_dfs(
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

    let items: Vec<ItemId> = ctx
        .records
        .iter()
        .flat_map(|r| r.items.iter().copied())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    ctx.stats.add_candidates(1, items.len() as u64);

    // The extension alphabet is the frequent single items: any pattern using
    // an infrequent item is itself infrequent.
    let mut roots = Vec::new();
    let mut alphabet = Vec::new();
    for item in items {
        let p = Pattern::new(vec![item]);
        let sup = ctx.support(p.items());
        if sup >= params.minsup {
            alphabet.push(item);
            roots.push((p, sup));
        }
    }

    for (root, sup) in roots {
        extend(&root, sup, &alphabet, params, config, &mut ctx, &mut result);
    }

    result.stats = ctx.stats;
    result.stats.patterns_found = result.patterns.len() as u64;
    result.stats.mine_time = started.elapsed();
    result
}
