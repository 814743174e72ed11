mod common;

use legrack_core::coloring::count_colorings;
use legrack_core::fixtures;
use legrack_core::front_code::{CuspDirection, Event, FrontCode, Sign};
use legrack_core::moves::{self, Direction};
use legrack_core::presentation::extract;
use legrack_core::rack::{FiniteRack, LegendrianIndex};
use legrack_core::target::NamedRack;
use proptest::prelude::*;

/// Random valid front codes: a shuffled set of cusps and crossing events.
fn arb_code(max_cusps: usize, max_crossings: u32) -> impl Strategy<Value = FrontCode> {
    (1..=max_cusps / 2, 0..=max_crossings)
        .prop_flat_map(|(half, crossings)| {
            let cusps = 2 * half;
            let len = cusps + 2 * crossings as usize;
            (
                Just(crossings),
                prop::collection::vec(any::<bool>(), cusps),
                prop::collection::vec(any::<bool>(), crossings as usize),
                Just((0..len).collect::<Vec<usize>>()).prop_shuffle(),
                0..len,
            )
        })
        .prop_map(|(crossings, dirs, signs, order, start)| {
            let mut events: Vec<Event> = dirs
                .iter()
                .map(|&up| Event::Cusp(if up { CuspDirection::Up } else { CuspDirection::Down }))
                .collect();
            for id in 1..=crossings {
                events.push(Event::OverPass(id));
                let sign = if signs[id as usize - 1] { Sign::Positive } else { Sign::Negative };
                events.push(Event::UnderPass(id, sign));
            }
            let shuffled: Vec<Event> = order.iter().map(|&i| events[i]).collect();
            FrontCode::with_start(shuffled, start).unwrap()
        })
}

fn small_targets(n: u32) -> Vec<NamedRack> {
    let mut out = vec![NamedRack::trivial(2).unwrap(), NamedRack::dihedral(3).unwrap()];
    for k in [3, 5, 7, 9] {
        if ((2 * n + 1) as usize).is_multiple_of(k) {
            out.push(NamedRack::cyclic(k).unwrap());
        }
    }
    out.push(NamedRack::new("perm", FiniteRack::permutation(&[1, 0, 2]).unwrap()));
    out.into_iter().filter(|t| t.rack.is_legendrian(LegendrianIndex(n))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn serialize_parse_roundtrip(code in arb_code(8, 5)) {
        let text = code.to_string();
        let back = FrontCode::parse(&text).unwrap();
        prop_assert_eq!(&back, &code);
        prop_assert_eq!(back.to_string(), text.clone());
        let spaced = text.replace(',', " , ");
        prop_assert_eq!(FrontCode::parse(&spaced).unwrap(), code);
    }

    #[test]
    fn invariants_ignore_start(code in arb_code(8, 5), k in 0usize..40) {
        let r = code.rotated(k);
        prop_assert_eq!(r.invariants(), code.invariants());
        prop_assert_eq!(r.traversal_word().len(), code.len());
    }

    #[test]
    fn colorings_ignore_start(code in arb_code(6, 4), k in 0usize..20, n in 0u32..4) {
        let a = extract(&code);
        let b = extract(&code.rotated(k));
        for t in small_targets(n) {
            let x = count_colorings(&a, LegendrianIndex(n), &t).unwrap();
            let y = count_colorings(&b, LegendrianIndex(n), &t).unwrap();
            prop_assert_eq!((x.count, x.surjective_count), (y.count, y.surjective_count));
        }
    }

    #[test]
    fn colorings_match_naive_enumeration(code in arb_code(6, 3), n in 0u32..4) {
        let p = extract(&code);
        prop_assume!(p.generators.len() <= 7);
        for t in small_targets(n) {
            let got = count_colorings(&p, LegendrianIndex(n), &t).unwrap();
            let want = common::naive_colorings(&p, n, &t.rack.rows());
            prop_assert_eq!((got.count, got.surjective_count), want, "{} {}", code, t.name);
            if let Some(sample) = &got.sample {
                prop_assert!(p.instantiate(LegendrianIndex(n)).iter().all(|r| r.holds(&t.rack, sample)));
            }
        }
    }

    #[test]
    fn random_walks_preserve_invariants(seed in any::<u64>(), steps in 1usize..12) {
        let start = fixtures::trefoil();
        let base = start.invariants();
        let p0 = extract(&start);
        let targets = [(1, NamedRack::cyclic(3).unwrap()), (2, NamedRack::cyclic(5).unwrap()), (1, NamedRack::dihedral(3).unwrap())];
        let before: Vec<u64> = targets.iter().map(|(n, t)| count_colorings(&p0, LegendrianIndex(*n), t).unwrap().count).collect();
        for (site, code) in moves::random_walk_trace(&start, steps, seed) {
            let inv = code.invariants();
            prop_assert_eq!((inv.tb, inv.rotation_numerator), (base.tb, base.rotation_numerator), "after {}", site);
            let p = extract(&code);
            let after: Vec<u64> = targets.iter().map(|(n, t)| count_colorings(&p, LegendrianIndex(*n), t).unwrap().count).collect();
            prop_assert_eq!(&after, &before, "after {}", site);
        }
    }
}

/// Every site of every family, checked against every n-Legendrian rack of
/// order at most 5 for n <= 4.
#[test]
fn every_move_site_preserves_colorings() {
    use legrack_core::model_finder::{enumerate, Constraint};
    let mut targets: Vec<(u32, NamedRack)> = Vec::new();
    for n in 0..=4u32 {
        for order in 1..=5 {
            let reps = enumerate(order, Constraint::Legendrian(LegendrianIndex(n))).unwrap().representatives;
            for (i, r) in reps.into_iter().enumerate() {
                targets.push((n, NamedRack::new(format!("{order}#{i}"), r)));
            }
        }
    }
    let bases = [fixtures::minimal_unknot(), fixtures::trefoil(), fixtures::get("triangle").unwrap().code];
    for base in &bases {
        let p0 = extract(base);
        let want: Vec<_> = targets
            .iter()
            .map(|(n, t)| count_colorings(&p0, LegendrianIndex(*n), t).unwrap().count)
            .collect();
        let sites = moves::applicable(base);
        for site in &sites {
            let after = moves::apply(base, site).unwrap();
            let p = extract(&after);
            for ((n, t), w) in targets.iter().zip(&want) {
                let got = count_colorings(&p, LegendrianIndex(*n), t).unwrap().count;
                assert_eq!(got, *w, "{base} {site} n={n} {}", t.name);
            }
        }
    }
}

#[test]
fn inverse_sites_of_forward_moves_restore_the_code() {
    for base in [fixtures::trefoil(), fixtures::crossingless_unknot(6)] {
        for site in moves::applicable(&base).into_iter().filter(|s| s.direction == Direction::Forward) {
            let after = moves::apply(&base, &site).unwrap();
            let undo = moves::inverse_site(&base, &site).unwrap();
            assert_eq!(moves::apply(&after, &undo).unwrap(), base, "{site}");
        }
    }
}
