//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Golden instances are the worked examples of the non-overlapping targeted
//! mining formulation: the four-sequence database (`table1`), the sixteen
//! item sequence "GTCAAGTCTCTCAGGT" (`worked`), and the five-sequence
//! preprocessing database (`table3`). Derived expectations were computed by
//! the exhaustive oracle and frozen here or in tests/golden/.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tnosp_core::bench::{grid, run_grid, Algo, BenchBase, Variant};
use tnosp_core::io::{self, DataFormat};
use tnosp_core::mine::{MinerConfig, MiningResult};
use tnosp_core::model::{
    GapConstraint, ItemId, LengthConstraint, MiningParams, Occurrence, Pattern, SequenceDatabase,
    SequenceRecord,
};
use tnosp_core::oracle;
use tnosp_core::preprocess::{self, IprpMode};
use tnosp_core::{mine_baseline, mine_bfs, mine_dfs, nettree};

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
            _ => panic!("bad symbol {c}"),
        })
        .collect()
}

fn pat(items: &[ItemId]) -> Pattern {
    Pattern::new(items.to_vec())
}

fn gap(mingap: usize, maxgap: usize) -> GapConstraint {
    GapConstraint { mingap, maxgap }
}

fn len(minlen: usize, maxlen: usize) -> LengthConstraint {
    LengthConstraint { minlen, maxlen }
}

fn db_of(rows: &[&str]) -> SequenceDatabase {
    let records = rows
        .iter()
        .enumerate()
        .map(|(i, s)| SequenceRecord::new(i as u32, seq(s)))
        .collect();
    SequenceDatabase {
        records,
        symbols: Default::default(),
    }
}

fn table1() -> SequenceDatabase {
    db_of(&["ATCACTCG", "TGGCT", "AGTAA", "GAGATG"])
}

fn worked() -> SequenceDatabase {
    db_of(&["GTCAAGTCTCTCAGGT"])
}

fn render(p: &Pattern) -> String {
    p.items()
        .iter()
        .map(|&i| ["A", "C", "G", "T"][i as usize])
        .collect()
}

fn rendered(result: &MiningResult) -> BTreeMap<String, usize> {
    result
        .patterns
        .iter()
        .map(|(p, &s)| (render(p), s))
        .collect()
}

#[test]
fn criterion_01_single_item_supports() {
    let db = table1();
    let g = gap(0, 2);
    let l = len(1, 8);
    assert_eq!(nettree::support_db(&[A], &db, &g, &l), 7);
    assert_eq!(nettree::support_db(&[C], &db, &g, &l), 4);
    assert_eq!(nettree::support_db(&[G], &db, &g, &l), 7);
    assert_eq!(nettree::support_db(&[T], &db, &g, &l), 6);
    println!("criterion 1: PASS: single-item supports 7/4/7/6");
}

#[test]
fn criterion_02_gap_constraint_semantics() {
    let db = table1();
    let g = gap(0, 2);
    assert_eq!(nettree::support_db(&[A, G], &db, &g, &len(1, 8)), 3);

    let s4 = &db.records[3].items;
    assert_eq!(nettree::netgap(&[G, A], s4, &g, &len(1, 6)), 2);

    let occs = oracle::enumerate_occurrences(&[G, A, G], s4, &g, &len(1, 6));
    let expected = vec![
        Occurrence {
            positions: vec![1, 2, 3],
        },
        Occurrence {
            positions: vec![1, 4, 6],
        },
        Occurrence {
            positions: vec![3, 4, 6],
        },
    ];
    assert_eq!(occs, expected);
    assert_eq!(oracle::max_nonoverlapping(&occs), 2);
    assert_eq!(nettree::netgap(&[G, A, G], s4, &g, &len(1, 6)), 2);
    println!("criterion 2: PASS: gap semantics on <A,G>, <G,A>, <G,A,G>");
}

#[test]
fn criterion_03_length_constraint_semantics() {
    let db = table1();
    assert_eq!(
        nettree::support_db(&[A, A, G], &db, &gap(0, 3), &len(1, 6)),
        1
    );
    println!("criterion 3: PASS: sup(<A,A,G>) = 1 under span [1,6]");
}

#[test]
fn criterion_04_netgap_worked_example() {
    let db = worked();
    let s = &db.records[0].items;
    let g = gap(0, 2);
    let l = len(1, 5);

    let paths = nettree::netgap_paths(&[T, C, A, G], s, &g, &l);
    assert_eq!(paths[0].positions, vec![2, 3, 4, 6], "first extracted path");

    // The extraction agrees with the exhaustive maximum.
    let brute = oracle::bruteforce_support(&[T, C, A, G], s, &g, &l);
    assert_eq!(paths.len(), brute, "netgap equals the exhaustive maximum");

    // Pinned expectation: support 1 on this instance. The exhaustive count
    // is 2: <2,3,4,6> and <11,12,13,14> are level-wise disjoint and both
    // satisfy gap [0,2] and span [1,5], so asserting 1 contradicts the
    // non-overlapping support definition (and criterion 9). Kept as stated.
    assert_eq!(
        paths.len(),
        1,
        "pinned support value 1 disagrees with the exhaustive maximum {} \
         (occurrences <2,3,4,6> and <11,12,13,14> are level-wise disjoint \
         and both satisfy gap [0,2], span [1,5])",
        brute
    );
    println!("criterion 4: PASS: netgap worked example");
}

#[test]
fn criterion_05_targeted_mining_on_table1() {
    let db = table1();
    let params = MiningParams::new(2, gap(0, 2), len(1, 6), pat(&[A, T])).unwrap();
    let result = mine_bfs(&db, &params, &MinerConfig::default());
    let out = rendered(&result);
    assert_eq!(out.get("AT"), Some(&4));
    assert_eq!(out.get("ATA"), Some(&2));
    assert!(!out.contains_key("AA"), "<A,A> misses the query");
    assert!(!out.contains_key("ATAA"), "<A,T,A,A> is infrequent");
    let depth_first = mine_dfs(&db, &params, &MinerConfig::default());
    assert_eq!(result.patterns, depth_first.patterns);
    println!("criterion 5: PASS: targeted semantics: AT:4, ATA:2 in; AA, ATAA out");
}

#[test]
fn criterion_06_post_processing_example() {
    let db = worked();

    // Span [1,10]: fifteen frequent patterns without a target filter.
    let untargeted = MiningParams::untargeted(3, gap(0, 3), len(1, 10)).unwrap();
    let all = mine_bfs(&db, &untargeted, &MinerConfig::default());
    let expected: BTreeMap<String, usize> = [
        ("A", 3),
        ("C", 4),
        ("G", 4),
        ("T", 5),
        ("AT", 3),
        ("CG", 3),
        ("CT", 4),
        ("GT", 3),
        ("TC", 4),
        ("CTC", 3),
        ("TCG", 3),
        ("TCT", 4),
        ("CTCT", 3),
        ("TCTC", 3),
        ("TCTCT", 3),
    ]
    .into_iter()
    .map(|(p, s)| (p.to_string(), s))
    .collect();
    assert_eq!(rendered(&all), expected);

    // Filtering on <T,C> keeps exactly seven.
    let targeted = MiningParams::new(3, gap(0, 3), len(1, 10), pat(&[T, C])).unwrap();
    let filtered = mine_bfs(&db, &targeted, &MinerConfig::default());
    let expected7: BTreeMap<String, usize> = [
        ("TC", 4),
        ("CTC", 3),
        ("TCG", 3),
        ("TCT", 4),
        ("CTCT", 3),
        ("TCTC", 3),
        ("TCTCT", 3),
    ]
    .into_iter()
    .map(|(p, s)| (p.to_string(), s))
    .collect();
    assert_eq!(rendered(&filtered), expected7);
    let oracle7 = oracle::mine_bruteforce(&db, &targeted).unwrap();
    assert_eq!(rendered(&oracle7), expected7);

    // Span [1,8]: the conflicted case. Expectation pinned by the exhaustive
    // oracle, frozen in the golden file, and cross-checked against a fresh
    // oracle run.
    let untargeted8 = MiningParams::untargeted(3, gap(0, 3), len(1, 8)).unwrap();
    let mined8 = mine_bfs(&db, &untargeted8, &MinerConfig::default());
    let golden = load_golden("untargeted_gap03_len08.txt");
    assert_eq!(rendered(&mined8), golden);
    let oracle8 = oracle::mine_bruteforce(&db, &untargeted8).unwrap();
    assert_eq!(rendered(&oracle8), golden);

    println!("criterion 6: PASS: 15 unfiltered, 7 filtered, span-8 golden holds");
}

fn load_golden(name: &str) -> BTreeMap<String, usize> {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    let content = std::fs::read_to_string(path).expect("golden file");
    content
        .lines()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (p, s) = l.split_once(':').expect("pattern:support line");
            (p.to_string(), s.parse().expect("support"))
        })
        .collect()
}

#[test]
fn criterion_07_preprocessing_example() {
    // Query <T,C>, gap [0,4], span [1,4] on the five-sequence database.
    let rows = ["ACCATGT", "TAGAACC", "AGGCAATCTC", "TCGCTTGAAG", "TAAGGAC"];
    let records: Vec<SequenceRecord> = rows
        .iter()
        .enumerate()
        .map(|(i, s)| SequenceRecord::new(i as u32 + 1, seq(s)))
        .collect();
    let params = MiningParams::new(3, gap(0, 4), len(1, 4), pat(&[T, C])).unwrap();

    let kept = preprocess::sprp_filter(&records, &params);
    let kept_sids: Vec<u32> = kept.iter().map(|r| r.sid).collect();
    assert!(!kept_sids.contains(&1), "S1 removed by SPRP");
    assert!(!kept_sids.contains(&2), "S2 removed by SPRP");
    assert!(
        kept_sids.contains(&3) && kept_sids.contains(&4),
        "S3, S4 survive"
    );

    let (s3, ..) = preprocess::iprp_trim(&records[2], &params, IprpMode::Paper);
    assert_eq!(s3.items, seq("AATCTC"));
    let (s4, ..) = preprocess::iprp_trim(&records[3], &params, IprpMode::Paper);
    assert_eq!(s4.items, seq("TCGCTT"));
    let (s5, ..) = preprocess::iprp_trim(&records[4], &params, IprpMode::Paper);
    assert!(s5.items.is_empty(), "S5 trims to the empty sequence");
    println!("criterion 7: PASS: SPRP drops S1/S2; trims AATCTC, TCGCTT, empty");
}

#[test]
fn criterion_08_dpep_example() {
    let db = worked();
    let params = MiningParams::new(3, gap(0, 3), len(1, 8), pat(&[T, C])).unwrap();
    assert!(
        !tnosp_core::dfs::dpep_keep(&pat(&[G]), &params, &db.records),
        "<G> must not be extended: <G,T,C> misses minsup even relaxed"
    );
    // And the full targeted run emits no pattern rooted at <G>.
    let res = mine_dfs(&db, &params, &MinerConfig::default());
    assert!(res.patterns.keys().all(|p| p.items()[0] != G));
    println!("criterion 8: PASS: DPEP stops <G> from extending");
}

#[test]
fn criterion_09_netgap_matches_bruteforce() {
    let mut rng = StdRng::seed_from_u64(0x9e3779b97f4a7c15);
    let trials = 1200;
    for trial in 0..trials {
        let alphabet = rng.random_range(1..=4u32);
        let n = rng.random_range(0..=15usize);
        let s: Vec<ItemId> = (0..n).map(|_| rng.random_range(0..alphabet)).collect();
        let plen = rng.random_range(1..=5usize);
        let p: Vec<ItemId> = (0..plen).map(|_| rng.random_range(0..alphabet)).collect();
        let mingap = rng.random_range(0..=3usize);
        let g = gap(mingap, mingap + rng.random_range(0..=4usize));
        let minlen = rng.random_range(1..=4usize);
        let l = len(minlen, minlen + rng.random_range(0..=11usize));

        let fast = nettree::netgap(&p, &s, &g, &l);
        let slow = oracle::bruteforce_support(&p, &s, &g, &l);
        assert_eq!(
            fast, slow,
            "trial {trial}: netgap {fast} != brute force {slow} \
             (s={s:?} p={p:?} gap=[{},{}] len=[{},{}])",
            g.mingap, g.maxgap, l.minlen, l.maxlen
        );
    }
    println!("criterion 9: PASS: netgap == exhaustive maximum on {trials} instances");
}

/// Random small mining instance shared by criteria 10–12; span lower bound
/// is 1 so that level-wise growth is closed under prefix/suffix.
fn random_instance(rng: &mut StdRng) -> (SequenceDatabase, MiningParams) {
    let alphabet = rng.random_range(2..=4u32);
    let n_seqs = rng.random_range(1..=4usize);
    let records = (0..n_seqs)
        .map(|sid| {
            let n = rng.random_range(0..=15usize);
            SequenceRecord::new(
                sid as u32,
                (0..n).map(|_| rng.random_range(0..alphabet)).collect(),
            )
        })
        .collect();
    let db = SequenceDatabase {
        records,
        symbols: Default::default(),
    };
    let qlen = rng.random_range(1..=3usize);
    let query = Pattern::new((0..qlen).map(|_| rng.random_range(0..alphabet)).collect());
    let minsup = rng.random_range(1..=4usize);
    let mingap = rng.random_range(0..=2usize);
    let g = gap(mingap, mingap + rng.random_range(0..=3usize));
    let l = len(1, rng.random_range(1..=10usize));
    let params = MiningParams::new(minsup, g, l, query).unwrap();
    (db, params)
}

#[test]
fn criterion_10_cross_algorithm_equivalence() {
    let mut rng = StdRng::seed_from_u64(0xa5a5a5a5);
    let trials = 250;
    for trial in 0..trials {
        let (db, params) = random_instance(&mut rng);
        let bfs = mine_bfs(&db, &params, &MinerConfig::default());
        let dfs = mine_dfs(&db, &params, &MinerConfig::default());
        let base = mine_baseline(&db, &params);
        let brute = oracle::mine_bruteforce(&db, &params).unwrap();
        assert_eq!(bfs.patterns, dfs.patterns, "trial {trial}: bfs vs dfs");
        assert_eq!(
            bfs.patterns, base.patterns,
            "trial {trial}: bfs vs baseline"
        );
        assert_eq!(
            bfs.patterns, brute.patterns,
            "trial {trial}: bfs vs brute force"
        );
    }
    println!("criterion 10: PASS: bfs == dfs == baseline == brute force on {trials} instances");
}

#[test]
fn criterion_11_strategy_safety() {
    let mut rng = StdRng::seed_from_u64(0x517cc1b727220a95);
    let trials = 200;
    for trial in 0..trials {
        let (db, params) = random_instance(&mut rng);
        let all_on = MinerConfig::default();

        let reference = mine_bfs(&db, &params, &all_on);
        let bfs_toggles = [
            MinerConfig {
                sprp: false,
                ..all_on
            },
            MinerConfig {
                iprp: None,
                ..all_on
            },
            MinerConfig {
                bpep: false,
                ..all_on
            },
        ];
        for (i, config) in bfs_toggles.iter().enumerate() {
            let toggled = mine_bfs(&db, &params, config);
            assert_eq!(
                reference.patterns, toggled.patterns,
                "trial {trial}: bfs result changed by toggle {i}"
            );
            assert!(
                reference.stats.netgap_calls <= toggled.stats.netgap_calls,
                "trial {trial}: bfs netgap calls grew with strategy enabled (toggle {i})"
            );
            assert!(
                reference.stats.candidates_generated <= toggled.stats.candidates_generated,
                "trial {trial}: bfs candidates grew with strategy enabled (toggle {i})"
            );
        }

        let dfs_reference = mine_dfs(&db, &params, &all_on);
        assert_eq!(reference.patterns, dfs_reference.patterns, "trial {trial}");
        let dfs_toggles = [
            MinerConfig {
                sprp: false,
                ..all_on
            },
            MinerConfig {
                iprp: None,
                ..all_on
            },
            MinerConfig {
                dpep: false,
                ..all_on
            },
        ];
        for (i, config) in dfs_toggles.iter().enumerate() {
            let toggled = mine_dfs(&db, &params, config);
            assert_eq!(
                dfs_reference.patterns, toggled.patterns,
                "trial {trial}: dfs result changed by toggle {i}"
            );
            assert!(
                dfs_reference.stats.netgap_calls <= toggled.stats.netgap_calls,
                "trial {trial}: dfs netgap calls grew with strategy enabled (toggle {i})"
            );
            assert!(
                dfs_reference.stats.candidates_generated <= toggled.stats.candidates_generated,
                "trial {trial}: dfs candidates grew with strategy enabled (toggle {i})"
            );
        }
    }
    println!("criterion 11: PASS: toggling SPRP/IPRP/BPEP/DPEP never changes results; counters monotone ({trials} instances)");
}

#[test]
fn criterion_12_apriori_closure_of_results() {
    let mut rng = StdRng::seed_from_u64(0xa5a5a5a5); // same stream as criterion 10
    let trials = 250;
    let mut checked = 0usize;
    for _ in 0..trials {
        let (db, params) = random_instance(&mut rng);
        let result = mine_bfs(&db, &params, &MinerConfig::default());
        for p in result.patterns.keys().filter(|p| p.len() >= 2) {
            let prefix_sup = nettree::support_db(p.prefix().items(), &db, &params.gap, &params.len);
            let suffix_sup = nettree::support_db(p.suffix().items(), &db, &params.gap, &params.len);
            assert!(prefix_sup >= params.minsup, "prefix of {p} infrequent");
            assert!(suffix_sup >= params.minsup, "suffix of {p} infrequent");
            checked += 1;
        }
    }
    println!("criterion 12: PASS: prefix/suffix frequent for {checked} reported patterns");
}

#[test]
fn criterion_13_bench_grid_shape() {
    let path =
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/synthetic_protein.chars");
    let db = io::load_chars(&path).unwrap();
    let base = BenchBase {
        gap: gap(0, 3),
        len: len(1, 10),
        iprp_mode: IprpMode::Safe,
        format: DataFormat::Chars,
    };
    let minsups = [40usize, 60, 100];
    let queries = ["AFH".to_string(), "AFHL".to_string(), "AFHLT".to_string()];
    let cells = grid(
        &[Algo::Baseline, Algo::Bfs, Algo::Dfs],
        &[Variant::V1, Variant::V2],
        &minsups,
        &queries,
    );
    let rows = run_grid(&db, &base, &cells);
    assert!(rows.iter().all(|r| r.ok), "every cell runs clean");

    let lookup = |algo: &str, variant: &str, minsup: usize, query: &str| {
        rows.iter()
            .find(|r| {
                r.algo == algo && r.variant == variant && r.minsup == minsup && r.query == query
            })
            .unwrap()
    };

    for &minsup in &minsups {
        for query in &queries {
            // Pattern counts agree across the algorithm axis.
            let reference = lookup("baseline", "-", minsup, query).patterns;
            for (algo, variant) in [("bfs", "v1"), ("bfs", "v2"), ("dfs", "v1"), ("dfs", "v2")] {
                let row = lookup(algo, variant, minsup, query);
                assert_eq!(row.patterns, reference, "{algo} {variant} count");
                assert!(
                    row.netgap_calls < lookup("baseline", "-", minsup, query).netgap_calls,
                    "{algo} {variant} must issue strictly fewer support calls than the baseline"
                );
            }
        }
    }

    // Counts shrink (weakly) as minsup rises and as the query lengthens.
    for query in &queries {
        for pair in minsups.windows(2) {
            assert!(
                lookup("baseline", "-", pair[0], query).patterns
                    >= lookup("baseline", "-", pair[1], query).patterns,
                "pattern count must not rise with minsup"
            );
        }
    }
    for &minsup in &minsups {
        for pair in queries.windows(2) {
            assert!(
                lookup("baseline", "-", minsup, &pair[0]).patterns
                    >= lookup("baseline", "-", minsup, &pair[1]).patterns,
                "pattern count must not rise as the query lengthens"
            );
        }
    }
    println!(
        "criterion 13: PASS: bench shape: monotone counts, variants beat baseline call counts"
    );
}

/// Depth-first discovery order on the span-8 instance, frozen from the
/// exhaustive-oracle-backed derivation.
#[test]
fn dfs_visit_order_matches_derived_golden() {
    let db = worked();
    let params = MiningParams::untargeted(3, gap(0, 3), len(1, 8)).unwrap();
    let res = mine_dfs(&db, &params, &MinerConfig::default());
    let order: Vec<String> = res.emitted.iter().map(render).collect();
    let expected = [
        "A", "AT", "C", "CG", "CT", "CTC", "CTCT", "G", "GT", "T", "TC", "TCG", "TCT", "TCTC",
        "TCTCT",
    ];
    assert_eq!(order, expected);
}

/// Anti-monotonicity with span lower bound 1: a pattern never out-supports
/// its prefix or suffix in any single sequence.
#[test]
fn netgap_antimonotone_at_minlen_one() {
    let mut rng = StdRng::seed_from_u64(0xc0ffee);
    for _ in 0..400 {
        let alphabet = rng.random_range(1..=4u32);
        let n = rng.random_range(0..=15usize);
        let s: Vec<ItemId> = (0..n).map(|_| rng.random_range(0..alphabet)).collect();
        let plen = rng.random_range(2..=5usize);
        let p: Vec<ItemId> = (0..plen).map(|_| rng.random_range(0..alphabet)).collect();
        let mingap = rng.random_range(0..=2usize);
        let g = gap(mingap, mingap + rng.random_range(0..=3usize));
        let l = len(1, rng.random_range(1..=12usize));
        let full = nettree::netgap(&p, &s, &g, &l);
        assert!(nettree::netgap(&p[..plen - 1], &s, &g, &l) >= full);
        assert!(nettree::netgap(&p[1..], &s, &g, &l) >= full);
    }
}

/// Unsatisfiable queries (longer than maxlen) yield a flagged empty result
/// from every miner.
#[test]
fn query_longer_than_maxlen_flags_empty_result() {
    let db = table1();
    let params = MiningParams::new(1, gap(0, 2), len(1, 2), pat(&[A, T, A])).unwrap();
    for res in [
        mine_bfs(&db, &params, &MinerConfig::default()),
        mine_dfs(&db, &params, &MinerConfig::default()),
        mine_baseline(&db, &params),
        oracle::mine_bruteforce(&db, &params).unwrap(),
    ] {
        assert!(res.query_unsatisfiable);
        assert!(res.patterns.is_empty());
    }
}
