mod common;

use std::collections::BTreeSet;

use common::{all_perms, is_quandle, is_rack, naive_canonical, Table};
use legrack_core::model_finder::{enumerate, Constraint};
use legrack_core::rack::LegendrianIndex;

/// Every `m x m` table with entries in `0..m`.
fn all_tables(m: usize) -> Vec<Table> {
    let cells = m * m;
    let total = m.pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let mut flat = vec![0; cells];
            for c in flat.iter_mut() {
                *c = code % m;
                code /= m;
            }
            flat.chunks(m).map(<[usize]>::to_vec).collect()
        })
        .collect()
}

/// Every table whose columns are permutations.
fn column_tables(m: usize) -> Vec<Table> {
    let perms = all_perms(m);
    let mut out = Vec::new();
    let mut idx = vec![0usize; m];
    loop {
        out.push((0..m).map(|x| (0..m).map(|y| perms[idx[y]][x]).collect()).collect());
        let mut i = 0;
        loop {
            if i == m {
                return out;
            }
            idx[i] += 1;
            if idx[i] < perms.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

struct Oracle {
    labeled: u64,
    classes: BTreeSet<Table>,
}

fn oracle(m: usize, keep: impl Fn(&Table) -> bool) -> Oracle {
    let tables = if m <= 3 { all_tables(m) } else { column_tables(m) };
    let mut labeled = 0;
    let mut classes = BTreeSet::new();
    for t in tables.iter().filter(|t| is_rack(t) && keep(t)) {
        labeled += 1;
        classes.insert(naive_canonical(t));
    }
    Oracle { labeled, classes }
}

fn check(m: usize, constraint: Constraint, keep: impl Fn(&Table) -> bool) -> usize {
    let want = oracle(m, keep);
    let got = enumerate(m, constraint).unwrap();
    assert_eq!(got.total_labeled, want.labeled, "order {m} {constraint}");
    let got_classes: BTreeSet<Table> = got.representatives.iter().map(|r| naive_canonical(&r.rows())).collect();
    assert_eq!(got.representatives.len(), got_classes.len(), "duplicate class at order {m}");
    assert_eq!(got_classes, want.classes, "order {m} {constraint}");
    want.classes.len()
}

#[test]
fn all_racks_match_brute_force() {
    let counts: Vec<usize> = (1..=4).map(|m| check(m, Constraint::AllRacks, |_| true)).collect();
    assert_eq!(counts, vec![1, 2, 6, 19]);
}

#[test]
fn quandles_match_brute_force() {
    let counts: Vec<usize> = (1..=4).map(|m| check(m, Constraint::Quandles, is_quandle)).collect();
    assert_eq!(counts, vec![1, 1, 3, 7]);
}

#[test]
fn legendrian_racks_match_brute_force() {
    for n in 0..=3u32 {
        for m in 1..=4 {
            check(m, Constraint::Legendrian(LegendrianIndex(n)), |t| common::is_legendrian(t, n));
        }
    }
}

#[test]
fn frozen_counts_up_to_six() {
    let racks: Vec<usize> =
        (1..=6).map(|m| enumerate(m, Constraint::AllRacks).unwrap().representatives.len()).collect();
    assert_eq!(racks, vec![1, 2, 6, 19, 74, 353]);
    let quandles: Vec<usize> =
        (1..=6).map(|m| enumerate(m, Constraint::Quandles).unwrap().representatives.len()).collect();
    assert_eq!(quandles, vec![1, 1, 3, 7, 22, 73]);
}
