//! Domain types shared by every module: items, patterns, sequences,
//! constraints, and the elementary subsequence / greedy-matching operations.
//!
//! Positions are 1-based wherever they are observable (occurrences, reports),
//! matching the usual presentation of non-overlapping occurrence examples;
//! sequence storage itself is 0-indexed.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Dense identifier for one alphabet symbol. Ids are assigned in sorted
/// symbol order at load time so that id order coincides with dictionary
/// order of the external symbols.
pub type ItemId = u32;

/// Bijection between external symbols and dense item ids.
#[derive(Debug, Clone, Default)]
pub struct SymbolTable {
    symbols: Vec<String>,
    index: HashMap<String, ItemId>,
}

impl SymbolTable {
    /// Build a table from symbols already sorted in the order ids should
    /// follow. Duplicates are rejected.
    pub fn from_sorted(symbols: Vec<String>) -> Result<Self> {
        let mut table = SymbolTable::default();
        for sym in symbols {
            if table.index.contains_key(&sym) {
                return Err(Error::Load(format!("duplicate symbol {sym:?}")));
            }
            table.push(sym);
        }
        Ok(table)
    }

    fn push(&mut self, sym: String) -> ItemId {
        let id = self.symbols.len() as ItemId;
        self.index.insert(sym.clone(), id);
        self.symbols.push(sym);
        id
    }

    /// Id of an existing symbol, or a fresh id appended past the sorted
    /// range. Used for query symbols that never occur in the data; such ids
    /// have no occurrences and cannot disturb mining order.
    pub fn intern(&mut self, sym: &str) -> ItemId {
        match self.index.get(sym) {
            Some(&id) => id,
            None => self.push(sym.to_string()),
        }
    }

    pub fn get(&self, sym: &str) -> Option<ItemId> {
        self.index.get(sym).copied()
    }

    pub fn symbol(&self, id: ItemId) -> &str {
        &self.symbols[id as usize]
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

/// An ordered list of items; the unit being mined, grown, and reported.
///
/// The derived ordering is plain element-wise lexicographic ordering on item
/// ids, which (given sorted id assignment) is dictionary order on symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern {
    items: Vec<ItemId>,
}

impl Pattern {
    pub fn new(items: Vec<ItemId>) -> Self {
        Pattern { items }
    }

    pub fn empty() -> Self {
        Pattern { items: Vec::new() }
    }

    pub fn items(&self) -> &[ItemId] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// The sub-pattern holding every item but the last.
    ///
    /// Panics when the pattern has fewer than two items; callers grow
    /// patterns level by level and only ever split length >= 2.
    pub fn prefix(&self) -> Pattern {
        assert!(self.items.len() >= 2, "prefix of a pattern shorter than 2");
        Pattern::new(self.items[..self.items.len() - 1].to_vec())
    }

    /// The sub-pattern holding every item but the first. Panics like
    /// [`Pattern::prefix`].
    pub fn suffix(&self) -> Pattern {
        assert!(self.items.len() >= 2, "suffix of a pattern shorter than 2");
        Pattern::new(self.items[1..].to_vec())
    }

    /// A copy of `self` with one item appended.
    pub fn extended(&self, item: ItemId) -> Pattern {
        let mut items = Vec::with_capacity(self.items.len() + 1);
        items.extend_from_slice(&self.items);
        items.push(item);
        Pattern::new(items)
    }

    /// A copy of `self` with `tail` appended.
    pub fn concat(&self, tail: &[ItemId]) -> Pattern {
        let mut items = Vec::with_capacity(self.items.len() + tail.len());
        items.extend_from_slice(&self.items);
        items.extend_from_slice(tail);
        Pattern::new(items)
    }

    /// True when `other` appears in `self` in order (not necessarily
    /// contiguously).
    pub fn contains(&self, other: &Pattern) -> bool {
        is_subsequence(other.items(), self.items())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, id) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{id}")?;
        }
        write!(f, ">")
    }
}

/// One database row: a stable identifier plus the item sequence. Every
/// element is a single item.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRecord {
    pub sid: u32,
    pub items: Vec<ItemId>,
}

impl SequenceRecord {
    pub fn new(sid: u32, items: Vec<ItemId>) -> Self {
        SequenceRecord { sid, items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// The full input: sequence records in load order plus the symbol table.
#[derive(Debug, Clone, Default)]
pub struct SequenceDatabase {
    pub records: Vec<SequenceRecord>,
    pub symbols: SymbolTable,
}

impl SequenceDatabase {
    pub fn total_length(&self) -> usize {
        self.records.iter().map(|r| r.len()).sum()
    }
}

/// Bounds on the number of wildcard positions allowed between adjacent
/// pattern items in an occurrence.
///
/// Internal pre-extension checks may build relaxed bounds where
/// `maxgap < mingap`; such a constraint simply admits nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GapConstraint {
    pub mingap: usize,
    pub maxgap: usize,
}

impl GapConstraint {
    pub fn new(mingap: usize, maxgap: usize) -> Result<Self> {
        if mingap > maxgap {
            return Err(Error::InvalidParams(format!(
                "mingap ({mingap}) must not exceed maxgap ({maxgap})"
            )));
        }
        Ok(GapConstraint { mingap, maxgap })
    }

    /// Whether two 1-based positions `a < b` may be adjacent in an
    /// occurrence: the gap is the count of positions strictly between them.
    pub fn admits(&self, a: usize, b: usize) -> bool {
        debug_assert!(a < b);
        let gap = b - a - 1;
        gap >= self.mingap && gap <= self.maxgap
    }
}

/// Bounds on an occurrence's span: last position - first position + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LengthConstraint {
    pub minlen: usize,
    pub maxlen: usize,
}

impl LengthConstraint {
    pub fn new(minlen: usize, maxlen: usize) -> Result<Self> {
        if minlen < 1 {
            return Err(Error::InvalidParams("minlen must be at least 1".into()));
        }
        if minlen > maxlen {
            return Err(Error::InvalidParams(format!(
                "minlen ({minlen}) must not exceed maxlen ({maxlen})"
            )));
        }
        Ok(LengthConstraint { minlen, maxlen })
    }

    pub fn admits_span(&self, span: usize) -> bool {
        span >= self.minlen && span <= self.maxlen
    }
}

/// One occurrence of a pattern: 1-based sequence positions, one per pattern
/// item, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Occurrence {
    pub positions: Vec<usize>,
}

impl Occurrence {
    pub fn span(&self) -> usize {
        match (self.positions.first(), self.positions.last()) {
            (Some(first), Some(last)) => last - first + 1,
            _ => 0,
        }
    }

    /// Non-overlap check: two occurrences may be counted together only when
    /// the positions at every pattern index differ.
    pub fn disjoint_levelwise(&self, other: &Occurrence) -> bool {
        debug_assert_eq!(self.positions.len(), other.positions.len());
        self.positions
            .iter()
            .zip(&other.positions)
            .all(|(a, b)| a != b)
    }
}

/// The full problem statement: threshold, constraints, and the query
/// sequence a reported pattern must contain.
#[derive(Debug, Clone)]
pub struct MiningParams {
    pub minsup: usize,
    pub gap: GapConstraint,
    pub len: LengthConstraint,
    pub query: Pattern,
}

impl MiningParams {
    /// Targeted parameters; the query must be non-empty.
    pub fn new(
        minsup: usize,
        gap: GapConstraint,
        len: LengthConstraint,
        query: Pattern,
    ) -> Result<Self> {
        if minsup < 1 {
            return Err(Error::InvalidParams("minsup must be at least 1".into()));
        }
        if query.is_empty() {
            return Err(Error::InvalidParams(
                "query sequence must be non-empty".into(),
            ));
        }
        Ok(MiningParams {
            minsup,
            gap,
            len,
            query,
        })
    }

    /// Parameters with no target filter: every frequent pattern is reported
    /// and pre-read/pre-extension pruning degenerates to no-ops.
    pub fn untargeted(minsup: usize, gap: GapConstraint, len: LengthConstraint) -> Result<Self> {
        if minsup < 1 {
            return Err(Error::InvalidParams("minsup must be at least 1".into()));
        }
        Ok(MiningParams {
            minsup,
            gap,
            len,
            query: Pattern::empty(),
        })
    }

    pub fn is_targeted(&self) -> bool {
        !self.query.is_empty()
    }

    /// True when no pattern can contain the query within the span bound, so
    /// mining is hopeless from the start.
    pub fn query_exceeds_maxlen(&self) -> bool {
        self.query.len() > self.len.maxlen
    }
}

/// Cursor state after a greedy forward match (see [`match_forward`]).
///
/// `i_match` is the 1-based position of the item that completed the latest
/// query match (0 when nothing matched yet); when the scanned subject is a
/// pattern rather than a sequence the same counter plays the `p_match` role.
/// `q_match` counts matched query items; `q_match` equal to the query length
/// means matching is completed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchState {
    pub i_match: usize,
    pub q_match: usize,
}

/// True iff `small` is a subsequence of `big` (empty `small` always matches).
pub fn is_subsequence(small: &[ItemId], big: &[ItemId]) -> bool {
    let mut it = big.iter();
    small.iter().all(|s| it.any(|b| b == s))
}

/// Greedy left-to-right scan of `subject` against `query`, taking the
/// leftmost possible position for every query item. The resulting `q_match`
/// is the length of the longest query prefix embeddable as a subsequence.
pub fn match_forward(subject: &[ItemId], query: &[ItemId]) -> MatchState {
    let mut state = MatchState {
        i_match: 0,
        q_match: 0,
    };
    for (idx, item) in subject.iter().enumerate() {
        if state.q_match == query.len() {
            break;
        }
        if *item == query[state.q_match] {
            state.q_match += 1;
            state.i_match = idx + 1;
        }
    }
    state
}

/// Greedy right-to-left scan of `pattern` against `query_prefix`, matching
/// from the last item of `query_prefix` backwards. Returns how many trailing
/// items of `query_prefix` were matched; the unmatched head is the part that
/// would still have to be supplied in front of the pattern.
pub fn match_backward(pattern: &[ItemId], query_prefix: &[ItemId]) -> usize {
    let mut matched = 0;
    let mut pat = pattern.iter().rev();
    for q in query_prefix.iter().rev() {
        if pat.any(|p| p == q) {
            matched += 1;
        } else {
            break;
        }
    }
    matched
}
