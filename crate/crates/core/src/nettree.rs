//! Nettree construction and NETGAP-style non-overlapping support counting.
//!
//! A Nettree is a leveled graph with one level per pattern item. A node holds
//! a sequence position where the item matches; an edge connects nodes of
//! adjacent levels whose positions satisfy the gap constraint. A full path
//! (root at level 1 down to an absolute leaf at the last level) is an
//! occurrence of the pattern. Support is counted by repeatedly extracting the
//! leftmost full path that satisfies the span constraint, deleting its nodes,
//! and pruning nodes that can no longer lie on any full path.

use crate::model::{
    GapConstraint, ItemId, LengthConstraint, Occurrence, SequenceDatabase, SequenceRecord,
};

#[derive(Debug, Clone)]
struct Node {
    /// 1-based sequence position.
    pos: usize,
    parents: Vec<u32>,
    children: Vec<u32>,
    alive: bool,
    alive_parents: u32,
    alive_children: u32,
}

/// Leveled occurrence graph for one (pattern, sequence) pair.
#[derive(Debug, Clone)]
pub struct Nettree {
    levels: Vec<Vec<Node>>,
}

impl Nettree {
    /// Build the tree for `pattern` over `seq`: one level per pattern item
    /// holding all matching positions, edges wherever the gap constraint
    /// holds between adjacent levels. Levels may be empty.
    pub fn build(pattern: &[ItemId], seq: &[ItemId], gap: &GapConstraint) -> Nettree {
        assert!(
            !pattern.is_empty(),
            "nettree needs at least one pattern item"
        );
        let mut levels: Vec<Vec<Node>> = pattern
            .iter()
            .map(|&want| {
                seq.iter()
                    .enumerate()
                    .filter(|(_, &it)| it == want)
                    .map(|(idx, _)| Node {
                        pos: idx + 1,
                        parents: Vec::new(),
                        children: Vec::new(),
                        alive: true,
                        alive_parents: 0,
                        alive_children: 0,
                    })
                    .collect()
            })
            .collect();

        // Connect adjacent levels. Child positions admitted for a parent at
        // position a lie in [a + mingap + 1, a + maxgap + 1]; both node lists
        // are in increasing position order, so a sliding window suffices.
        if gap.mingap <= gap.maxgap {
            for j in 0..levels.len().saturating_sub(1) {
                let (upper, lower) = {
                    let (a, b) = levels.split_at_mut(j + 1);
                    (&mut a[j], &mut b[0])
                };
                let mut lo = 0usize;
                for (pi, parent) in upper.iter_mut().enumerate() {
                    let first = parent.pos + gap.mingap + 1;
                    let last = parent.pos + gap.maxgap + 1;
                    while lo < lower.len() && lower[lo].pos < first {
                        lo += 1;
                    }
                    let mut ci = lo;
                    while ci < lower.len() && lower[ci].pos <= last {
                        parent.children.push(ci as u32);
                        lower[ci].parents.push(pi as u32);
                        ci += 1;
                    }
                }
            }
        }
        for level in &mut levels {
            for node in level.iter_mut() {
                node.alive_parents = node.parents.len() as u32;
                node.alive_children = node.children.len() as u32;
            }
        }
        Nettree { levels }
    }

    pub fn level_count(&self) -> usize {
        self.levels.len()
    }

    /// Alive positions of one level, for inspection.
    pub fn level_positions(&self, level: usize) -> Vec<usize> {
        self.levels[level]
            .iter()
            .filter(|n| n.alive)
            .map(|n| n.pos)
            .collect()
    }

    /// Whether an alive edge connects `from_pos` (at `level`) to `to_pos`.
    pub fn has_edge(&self, level: usize, from_pos: usize, to_pos: usize) -> bool {
        let Some(from) = self.levels[level]
            .iter()
            .find(|n| n.alive && n.pos == from_pos)
        else {
            return false;
        };
        from.children.iter().any(|&c| {
            self.levels[level + 1][c as usize].alive
                && self.levels[level + 1][c as usize].pos == to_pos
        })
    }

    fn is_lonely(&self, level: usize, idx: usize) -> bool {
        let node = &self.levels[level][idx];
        if !node.alive {
            return false;
        }
        (level > 0 && node.alive_parents == 0)
            || (level + 1 < self.levels.len() && node.alive_children == 0)
    }

    /// Kill the given nodes, then keep killing nodes that lost their last
    /// parent (non-roots) or last child (non-absolute-leaves) until a fixed
    /// point. The set of full paths is unchanged.
    fn remove_and_cascade(&mut self, seed: Vec<(usize, usize)>) {
        let mut work = seed;
        while let Some((level, idx)) = work.pop() {
            if !self.levels[level][idx].alive {
                continue;
            }
            self.levels[level][idx].alive = false;
            let parents = std::mem::take(&mut self.levels[level][idx].parents);
            let children = std::mem::take(&mut self.levels[level][idx].children);
            for p in &parents {
                let pn = &mut self.levels[level - 1][*p as usize];
                if pn.alive {
                    pn.alive_children -= 1;
                    if self.is_lonely(level - 1, *p as usize) {
                        work.push((level - 1, *p as usize));
                    }
                }
            }
            for c in &children {
                let cn = &mut self.levels[level + 1][*c as usize];
                if cn.alive {
                    cn.alive_parents -= 1;
                    if self.is_lonely(level + 1, *c as usize) {
                        work.push((level + 1, *c as usize));
                    }
                }
            }
            self.levels[level][idx].parents = parents;
            self.levels[level][idx].children = children;
        }
    }

    /// Remove every lonely node: non-roots with no parent and
    /// non-absolute-leaves with no child, iterated to a fixed point.
    pub fn prune_lonely(&mut self) {
        let mut seed = Vec::new();
        for level in 0..self.levels.len() {
            for idx in 0..self.levels[level].len() {
                if self.is_lonely(level, idx) {
                    seed.push((level, idx));
                }
            }
        }
        self.remove_and_cascade(seed);
    }

    /// Leftmost full path from the given root that satisfies the span
    /// constraint, as node indices per level. Children are tried in
    /// increasing position order with backtracking; a branch is cut as soon
    /// as the span bound is exceeded (positions only grow along a path).
    fn leftmost_path(&self, root: usize, len: &LengthConstraint) -> Option<Vec<usize>> {
        let root_pos = self.levels[0][root].pos;
        let mut path = vec![root];
        if self.descend(root_pos, 0, root, len, &mut path) {
            Some(path)
        } else {
            None
        }
    }

    fn descend(
        &self,
        root_pos: usize,
        level: usize,
        idx: usize,
        len: &LengthConstraint,
        path: &mut Vec<usize>,
    ) -> bool {
        if level + 1 == self.levels.len() {
            let span = self.levels[level][idx].pos - root_pos + 1;
            return len.admits_span(span);
        }
        for &c in &self.levels[level][idx].children {
            let child = &self.levels[level + 1][c as usize];
            if !child.alive {
                continue;
            }
            if child.pos - root_pos + 1 > len.maxlen {
                break; // children are in increasing position order
            }
            path.push(c as usize);
            if self.descend(root_pos, level + 1, c as usize, len, path) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// Extract non-overlapping occurrences: roots are visited left to right,
    /// each contributing at most the leftmost full path satisfying the span
    /// constraint; extracted nodes are deleted and newly lonely nodes pruned
    /// before the next root is tried.
    pub fn extract_paths(&mut self, len: &LengthConstraint) -> Vec<Occurrence> {
        let mut out = Vec::new();
        for root in 0..self.levels[0].len() {
            if !self.levels[0][root].alive {
                continue;
            }
            if let Some(path) = self.leftmost_path(root, len) {
                let positions: Vec<usize> = path
                    .iter()
                    .enumerate()
                    .map(|(level, &idx)| self.levels[level][idx].pos)
                    .collect();
                self.remove_and_cascade(path.into_iter().enumerate().collect());
                out.push(Occurrence { positions });
            }
        }
        out
    }

    /// Count of alive nodes in the smallest level; an upper bound for the
    /// number of extractable paths.
    pub fn min_level_size(&self) -> usize {
        self.levels
            .iter()
            .map(|l| l.iter().filter(|n| n.alive).count())
            .min()
            .unwrap_or(0)
    }
}

/// Non-overlapping support of `pattern` in one sequence: build, prune, and
/// extract. A single-item pattern counts its matching positions (span 1 must
/// satisfy the span lower bound).
pub fn netgap(
    pattern: &[ItemId],
    seq: &[ItemId],
    gap: &GapConstraint,
    len: &LengthConstraint,
) -> usize {
    netgap_paths(pattern, seq, gap, len).len()
}

/// Like [`netgap`] but returning the extracted occurrences themselves.
pub fn netgap_paths(
    pattern: &[ItemId],
    seq: &[ItemId],
    gap: &GapConstraint,
    len: &LengthConstraint,
) -> Vec<Occurrence> {
    let mut tree = Nettree::build(pattern, seq, gap);
    tree.prune_lonely();
    tree.extract_paths(len)
}

/// Support over a whole database: the sum of per-sequence supports.
pub fn support_db(
    pattern: &[ItemId],
    db: &SequenceDatabase,
    gap: &GapConstraint,
    len: &LengthConstraint,
) -> usize {
    support_records(pattern, &db.records, gap, len)
}

/// Support summed over a slice of records (the working set after pre-read
/// pruning).
pub fn support_records(
    pattern: &[ItemId],
    records: &[SequenceRecord],
    gap: &GapConstraint,
    len: &LengthConstraint,
) -> usize {
    records
        .iter()
        .map(|r| netgap(pattern, &r.items, gap, len))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Pattern;

    const A: ItemId = 0;
    const C: ItemId = 1;
    const G: ItemId = 2;
    const T: ItemId = 3;

    fn seq(s: &str) -> Vec<ItemId> {
        s.chars()
            .map(|c| match c {
                'A' => A,
                'C' => C,
                'G' => G,
                'T' => T,
                _ => panic!("bad symbol"),
            })
            .collect()
    }

    fn gap(mingap: usize, maxgap: usize) -> GapConstraint {
        GapConstraint { mingap, maxgap }
    }

    fn len(minlen: usize, maxlen: usize) -> LengthConstraint {
        LengthConstraint { minlen, maxlen }
    }

    // The worked instance used throughout: <T,C,A,G> over "GTCAAGTCTCTCAGGT"
    // with gap [0,2].
    fn worked_tree() -> Nettree {
        Nettree::build(&[T, C, A, G], &seq("GTCAAGTCTCTCAGGT"), &gap(0, 2))
    }

    #[test]
    fn build_levels_and_edges() {
        let t = worked_tree();
        assert_eq!(t.level_positions(0), vec![2, 7, 9, 11, 16]);
        assert_eq!(t.level_positions(1), vec![3, 8, 10, 12]);
        assert_eq!(t.level_positions(2), vec![4, 5, 13]);
        assert_eq!(t.level_positions(3), vec![1, 6, 14, 15]);
        assert!(t.has_edge(0, 2, 3));
        assert!(!t.has_edge(0, 2, 8)); // gap 5 exceeds maxgap 2
    }

    #[test]
    fn build_single_level() {
        let t = Nettree::build(&[A], &seq("GAGATG"), &gap(0, 2));
        assert_eq!(t.level_count(), 1);
        assert_eq!(t.level_positions(0), vec![2, 4]);
    }

    #[test]
    fn build_with_absent_symbol() {
        let t = Nettree::build(&[A, A], &seq("G"), &gap(0, 5));
        assert!(t.level_positions(0).is_empty());
        assert!(t.level_positions(1).is_empty());
    }

    #[test]
    fn lonely_pruning_fixed_point() {
        let mut t = worked_tree();
        t.prune_lonely();
        // Position 16 at level 1 has no child in range, position 8 at level 2
        // has no child, and position 1 at level 4 precedes every possible
        // parent. Everything else stays: node 7 keeps its child at 10.
        assert_eq!(t.level_positions(0), vec![2, 7, 9, 11]);
        assert_eq!(t.level_positions(1), vec![3, 10, 12]);
        assert_eq!(t.level_positions(2), vec![4, 5, 13]);
        assert_eq!(t.level_positions(3), vec![6, 14, 15]);

        // Pruning again changes nothing.
        let before: Vec<Vec<usize>> = (0..4).map(|l| t.level_positions(l)).collect();
        t.prune_lonely();
        let after: Vec<Vec<usize>> = (0..4).map(|l| t.level_positions(l)).collect();
        assert_eq!(before, after);
    }

    #[test]
    fn lonely_pruning_preserves_path_count() {
        let mut pruned = worked_tree();
        pruned.prune_lonely();
        let mut raw = worked_tree();
        let l = len(1, 5);
        assert_eq!(raw.extract_paths(&l).len(), pruned.extract_paths(&l).len());
    }

    #[test]
    fn chain_tree_unchanged_by_pruning() {
        let mut t = Nettree::build(&[A, C], &seq("AC"), &gap(0, 2));
        t.prune_lonely();
        assert_eq!(t.level_positions(0), vec![1]);
        assert_eq!(t.level_positions(1), vec![2]);
    }

    #[test]
    fn extraction_on_worked_instance() {
        let paths = netgap_paths(
            &[T, C, A, G],
            &seq("GTCAAGTCTCTCAGGT"),
            &gap(0, 2),
            &len(1, 5),
        );
        // The leftmost extraction is <2,3,4,6>. The candidate through the
        // root at 9 spans 6 and is rejected, but <11,12,13,14> (span 4) is a
        // second valid non-overlapping occurrence.
        assert_eq!(paths[0].positions, vec![2, 3, 4, 6]);
        assert_eq!(paths.len(), 2);
        assert_eq!(paths[1].positions, vec![11, 12, 13, 14]);
    }

    #[test]
    fn netgap_worked_examples() {
        // "the 4th occurrence can still be found": <1,2,3> and <3,4,5>.
        assert_eq!(netgap(&[C, T, C], &seq("CTCTC"), &gap(0, 2), &len(1, 5)), 2);
        // sup(<G,A>, "GAGATG") is 2 rather than 3.
        assert_eq!(netgap(&[G, A], &seq("GAGATG"), &gap(0, 2), &len(1, 6)), 2);
        // <A,A,G> in "ATCACTCG": the only gap-feasible occurrence spans 8.
        assert_eq!(
            netgap(&[A, A, G], &seq("ATCACTCG"), &gap(0, 3), &len(1, 6)),
            0
        );
        // <G,A,G> in "GAGATG": <1,2,3> and <3,4,6> both count.
        let paths = netgap_paths(&[G, A, G], &seq("GAGATG"), &gap(0, 2), &len(1, 6));
        assert_eq!(paths.len(), 2);
        assert_eq!(paths[0].positions, vec![1, 2, 3]);
        assert_eq!(paths[1].positions, vec![3, 4, 6]);
    }

    #[test]
    fn single_item_span_needs_minlen_one() {
        assert_eq!(netgap(&[A], &seq("GAGATG"), &gap(0, 2), &len(1, 6)), 2);
        // A single position spans 1, which fails minlen 2.
        assert_eq!(netgap(&[A], &seq("GAGATG"), &gap(0, 2), &len(2, 6)), 0);
    }

    #[test]
    fn empty_gap_window_yields_nothing() {
        // Relaxed pre-extension bounds can produce mingap > maxgap; the tree
        // then has no edges and multi-item patterns have no support.
        assert_eq!(netgap(&[G, A], &seq("GAGATG"), &gap(2, 1), &len(1, 6)), 0);
        assert_eq!(netgap(&[A], &seq("GAGATG"), &gap(2, 1), &len(1, 6)), 2);
    }

    #[test]
    fn support_db_table1() {
        let db = table1();
        let l18 = len(1, 8);
        assert_eq!(support_db(&[A, G], &db, &gap(0, 2), &l18), 3);
        assert_eq!(support_db(&[A], &db, &gap(0, 2), &len(1, 8)), 7);
        assert_eq!(support_db(&[A, A, G], &db, &gap(0, 3), &len(1, 6)), 1);
    }

    fn table1() -> SequenceDatabase {
        let records = ["ATCACTCG", "TGGCT", "AGTAA", "GAGATG"]
            .iter()
            .enumerate()
            .map(|(i, s)| SequenceRecord::new(i as u32, seq(s)))
            .collect();
        SequenceDatabase {
            records,
            symbols: Default::default(),
        }
    }

    #[test]
    fn extracted_paths_are_levelwise_disjoint_and_bounded() {
        // Dense instance with many overlapping candidates.
        let s = seq("CTCTCTCCTT");
        let mut tree = Nettree::build(&[C, T], &s, &gap(0, 3));
        tree.prune_lonely();
        let bound = tree.min_level_size();
        let paths = tree.extract_paths(&len(1, 6));
        assert!(paths.len() <= bound);
        for (i, a) in paths.iter().enumerate() {
            for b in &paths[i + 1..] {
                assert!(a.disjoint_levelwise(b));
            }
        }
    }

    #[test]
    fn pattern_helpers_roundtrip() {
        let p = Pattern::new(vec![T, C, A, G]);
        assert_eq!(p.prefix().items(), &[T, C, A]);
        assert_eq!(p.suffix().items(), &[C, A, G]);
    }
}
