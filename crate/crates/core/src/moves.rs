//! Legendrian Reidemeister moves as local rewrites of front codes.
//!
//! Token templates (`k`, `k1`, `k2` are fresh crossing ids, `C` a cusp):
//!
//! | family | forward rewrite |
//! |--------|-----------------|
//! | LR1-A  | insert `uk+, C, C', ok` into a strand |
//! | LR1-B  | insert `ok, C, C', uk+` into a strand |
//! | LR2-A  | cusp `C` becomes `uk1+, C, uk2-`; `ok2, ok1` inserted on another strand |
//! | LR2-B  | as LR2-A with the under-pass signs swapped |
//! | LR2-C  | cusp `C` becomes `ok1, C, ok2`; `uk1-, uk2+` inserted elsewhere |
//! | LR2-D  | cusp `C` becomes `ok2, C, ok1`; `uk1+, uk2-` inserted elsewhere |
//! | LR3    | swap the adjacent pairs on the three strands of a crossing triangle |
//!
//! The rotated variant of each family swaps the cusp order (LR1), the
//! over-pass order (LR2-A/B), or which side of the cusp carries `ok1`
//! (LR2-C/D). All templates keep `tb` and the rotation number fixed.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::front_code::{CuspDirection, Event, FrontCode, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveFamily {
    Lr1A,
    Lr1B,
    Lr2A,
    Lr2B,
    Lr2C,
    Lr2D,
    Lr3,
}

impl MoveFamily {
    pub const ALL: [MoveFamily; 7] = [
        MoveFamily::Lr1A,
        MoveFamily::Lr1B,
        MoveFamily::Lr2A,
        MoveFamily::Lr2B,
        MoveFamily::Lr2C,
        MoveFamily::Lr2D,
        MoveFamily::Lr3,
    ];

    pub fn label(self) -> &'static str {
        match self {
            MoveFamily::Lr1A => "LR1-A",
            MoveFamily::Lr1B => "LR1-B",
            MoveFamily::Lr2A => "LR2-A",
            MoveFamily::Lr2B => "LR2-B",
            MoveFamily::Lr2C => "LR2-C",
            MoveFamily::Lr2D => "LR2-D",
            MoveFamily::Lr3 => "LR3",
        }
    }

    fn variants(self) -> &'static [u8] {
        match self {
            MoveFamily::Lr3 => &[0],
            _ => &[0, 1],
        }
    }

    /// Under-pass signs `(first, second)` for the two-crossing LR2 templates.
    fn lr2_signs(self) -> (Sign, Sign) {
        match self {
            MoveFamily::Lr2A | MoveFamily::Lr2D => (Sign::Positive, Sign::Negative),
            MoveFamily::Lr2B | MoveFamily::Lr2C => (Sign::Negative, Sign::Positive),
            _ => unreachable!("not an LR2 family"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MoveKind {
    pub family: MoveFamily,
    /// 0 for the primary template, 1 for the rotated one.
    pub variant: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Where and how to apply a move.
///
/// `positions` index the traversal word:
/// * LR1 forward: `[gap]`; inverse: `[pattern start]`.
/// * LR2 forward: `[cusp, gap for the inserted pair]`; inverse: `[triple start, pair start]`.
/// * LR3: `[bottom pair, middle pair, top pair]` starts.
///
/// A gap `g` means "immediately before event `g`".
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MoveSite {
    pub kind: MoveKind,
    pub direction: Direction,
    pub positions: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("site {0} does not match the code")]
    InvalidSite(String),
    #[error("malformed site spec `{0}` (expected e.g. LR1-A.0:fwd@3)")]
    SiteSyntax(String),
    #[error("internal error: move produced an invalid code: {0}")]
    Internal(String),
}

impl fmt::Display for MoveSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = match self.direction {
            Direction::Forward => "fwd",
            Direction::Inverse => "inv",
        };
        let pos: Vec<String> = self.positions.iter().map(|p| p.to_string()).collect();
        write!(f, "{}.{}:{}@{}", self.kind.family.label(), self.kind.variant, dir, pos.join(","))
    }
}

impl FromStr for MoveSite {
    type Err = MoveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || MoveError::SiteSyntax(s.to_string());
        let s = s.trim();
        let (head, positions) = s.split_once('@').ok_or_else(bad)?;
        let (kind, dir) = head.split_once(':').ok_or_else(bad)?;
        let (family, variant) = kind.split_once('.').ok_or_else(bad)?;
        let family = MoveFamily::ALL.into_iter().find(|f| f.label() == family).ok_or_else(bad)?;
        let variant: u8 = variant.parse().map_err(|_| bad())?;
        if !family.variants().contains(&variant) {
            return Err(bad());
        }
        let direction = match dir {
            "fwd" => Direction::Forward,
            "inv" => Direction::Inverse,
            _ => return Err(bad()),
        };
        let positions = positions
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MoveSite { kind: MoveKind { family, variant }, direction, positions })
    }
}

/// Cyclic view of a traversal word with an over-pass index.
struct Word {
    events: Vec<Event>,
    over_at: HashMap<u32, usize>,
    cusps: usize,
}

impl Word {
    fn new(code: &FrontCode) -> Self {
        let events = code.traversal_word();
        let over_at = events
            .iter()
            .enumerate()
            .filter_map(|(i, e)| match *e {
                Event::OverPass(id) => Some((id, i)),
                _ => None,
            })
            .collect();
        let cusps = code.cusp_count();
        Word { events, over_at, cusps }
    }

    fn len(&self) -> usize {
        self.events.len()
    }

    fn at(&self, i: usize) -> Event {
        self.events[i % self.events.len()]
    }

    fn idx(&self, i: usize) -> usize {
        i % self.events.len()
    }

    fn prev(&self, i: usize) -> usize {
        (i + self.len() - 1) % self.len()
    }

    fn fresh(&self) -> (u32, u32) {
        let max = self.events.iter().filter_map(Event::crossing_id).max().unwrap_or(0);
        (max + 1, max + 2)
    }
}

fn lr1_cusps(variant: u8) -> (CuspDirection, CuspDirection) {
    if variant == 0 {
        (CuspDirection::Up, CuspDirection::Down)
    } else {
        (CuspDirection::Down, CuspDirection::Up)
    }
}

/// LR1 loop pattern starting at `i`, if any, respecting the cusp floor.
fn lr1_inverse_at(w: &Word, i: usize) -> Option<MoveKind> {
    if w.len() < 4 || w.cusps < 4 {
        return None;
    }
    let (a, c1, c2, d) = (w.at(i), w.at(i + 1), w.at(i + 2), w.at(i + 3));
    let (Event::Cusp(d1), Event::Cusp(d2)) = (c1, c2) else { return None };
    if d1 == d2 {
        return None;
    }
    let variant = if (d1, d2) == lr1_cusps(0) { 0 } else { 1 };
    let family = match (a, d) {
        (Event::UnderPass(k, Sign::Positive), Event::OverPass(k2)) if k == k2 => MoveFamily::Lr1A,
        (Event::OverPass(k), Event::UnderPass(k2, Sign::Positive)) if k == k2 => MoveFamily::Lr1B,
        _ => return None,
    };
    Some(MoveKind { family, variant })
}

/// LR2-A/B pattern: under-pass triple at `i`, over pair at `j`.
fn lr2ab_inverse_at(w: &Word, i: usize, j: usize) -> Option<MoveKind> {
    let (Event::UnderPass(p, s1), Event::Cusp(_), Event::UnderPass(q, s2)) = (w.at(i), w.at(i + 1), w.at(i + 2))
    else {
        return None;
    };
    let family = match (s1, s2) {
        (Sign::Positive, Sign::Negative) => MoveFamily::Lr2A,
        (Sign::Negative, Sign::Positive) => MoveFamily::Lr2B,
        _ => return None,
    };
    let variant = match (w.at(j), w.at(j + 1)) {
        (Event::OverPass(a), Event::OverPass(b)) if a == q && b == p => 0,
        (Event::OverPass(a), Event::OverPass(b)) if a == p && b == q => 1,
        _ => return None,
    };
    Some(MoveKind { family, variant })
}

/// LR2-C/D pattern: over triple at `i`, under pair at `j`.
fn lr2cd_inverse_at(w: &Word, i: usize, j: usize) -> Option<MoveKind> {
    let (Event::OverPass(before), Event::Cusp(_), Event::OverPass(after)) = (w.at(i), w.at(i + 1), w.at(i + 2))
    else {
        return None;
    };
    let (Event::UnderPass(r, s1), Event::UnderPass(t, s2)) = (w.at(j), w.at(j + 1)) else {
        return None;
    };
    let family = match (s1, s2) {
        (Sign::Negative, Sign::Positive) => MoveFamily::Lr2C,
        (Sign::Positive, Sign::Negative) => MoveFamily::Lr2D,
        _ => return None,
    };
    let first_before = if (r, t) == (before, after) {
        true
    } else if (r, t) == (after, before) {
        false
    } else {
        return None;
    };
    let variant = match (family, first_before) {
        (MoveFamily::Lr2C, true) | (MoveFamily::Lr2D, false) => 0,
        _ => 1,
    };
    Some(MoveKind { family, variant })
}

/// Start of the over pair `{o_a, o_b}` if the two are adjacent.
fn adjacent_overs(w: &Word, a: u32, b: u32) -> Option<usize> {
    let pa = w.over_at[&a];
    let pb = w.over_at[&b];
    if w.idx(pa + 1) == pb {
        Some(pa)
    } else if w.idx(pb + 1) == pa {
        Some(pb)
    } else {
        None
    }
}

/// LR3 triangle with the bottom pair at `i`: returns `[bottom, middle, top]`
/// pair starts and the direction.
fn lr3_at(w: &Word, i: usize) -> Vec<(Direction, [usize; 3])> {
    let mut out = Vec::new();
    let (Event::UnderPass(x, sx), Event::UnderPass(y, sy)) = (w.at(i), w.at(i + 1)) else {
        return out;
    };
    if x == y {
        return out;
    }
    // Forward: middle strand reads (u_r, o_y) with sign(r) = sign(x).
    let oy = w.over_at[&y];
    let before = w.prev(oy);
    if let Event::UnderPass(r, sr) = w.events[before] {
        if r != x && r != y && sr == sx {
            if let Some(t) = adjacent_overs(w, r, x) {
                out.push((Direction::Forward, [w.idx(i), before, t]));
            }
        }
    }
    // Inverse: middle strand reads (o_x, u_r) with sign(r) = sign(y).
    let ox = w.over_at[&x];
    let after = w.idx(ox + 1);
    if let Event::UnderPass(r, sr) = w.events[after] {
        if r != x && r != y && sr == sy {
            if let Some(t) = adjacent_overs(w, r, y) {
                out.push((Direction::Inverse, [w.idx(i), ox, t]));
            }
        }
    }
    out
}

/// Every applicable site, in a fixed order.
pub fn applicable(code: &FrontCode) -> Vec<MoveSite> {
    let w = Word::new(code);
    let n = w.len();
    let cusp_positions: Vec<usize> =
        (0..n).filter(|&i| matches!(w.events[i], Event::Cusp(_))).collect();
    let mut sites = Vec::new();
    let site = |family, variant, direction, positions: Vec<usize>| MoveSite {
        kind: MoveKind { family, variant },
        direction,
        positions,
    };

    for family in [MoveFamily::Lr1A, MoveFamily::Lr1B] {
        for &v in family.variants() {
            for g in 0..n {
                sites.push(site(family, v, Direction::Forward, vec![g]));
            }
        }
    }
    for family in [MoveFamily::Lr2A, MoveFamily::Lr2B, MoveFamily::Lr2C, MoveFamily::Lr2D] {
        for &v in family.variants() {
            for &c in &cusp_positions {
                for g in 0..n {
                    sites.push(site(family, v, Direction::Forward, vec![c, g]));
                }
            }
        }
    }

    for i in 0..n {
        if let Some(kind) = lr1_inverse_at(&w, i) {
            sites.push(MoveSite { kind, direction: Direction::Inverse, positions: vec![i] });
        }
    }
    for i in 0..n {
        let triple_ab = matches!(w.at(i), Event::UnderPass(..)) && matches!(w.at(i + 1), Event::Cusp(_));
        let triple_cd = matches!(w.at(i), Event::OverPass(_)) && matches!(w.at(i + 1), Event::Cusp(_));
        if !triple_ab && !triple_cd {
            continue;
        }
        for j in 0..n {
            let kind = if triple_ab { lr2ab_inverse_at(&w, i, j) } else { lr2cd_inverse_at(&w, i, j) };
            if let Some(kind) = kind {
                sites.push(MoveSite { kind, direction: Direction::Inverse, positions: vec![i, j] });
            }
        }
    }
    for i in 0..n {
        for (direction, pos) in lr3_at(&w, i) {
            sites.push(site(MoveFamily::Lr3, 0, direction, pos.to_vec()));
        }
    }
    sites
}

fn site_matches(w: &Word, site: &MoveSite) -> bool {
    let n = w.len();
    let p = &site.positions;
    if p.iter().any(|&x| x >= n) {
        return false;
    }
    let family = site.kind.family;
    if !family.variants().contains(&site.kind.variant) {
        return false;
    }
    match (family, site.direction) {
        (MoveFamily::Lr1A | MoveFamily::Lr1B, Direction::Forward) => p.len() == 1,
        (MoveFamily::Lr1A | MoveFamily::Lr1B, Direction::Inverse) => {
            p.len() == 1 && lr1_inverse_at(w, p[0]) == Some(site.kind)
        }
        (MoveFamily::Lr3, dir) => {
            p.len() == 3 && lr3_at(w, p[0]).iter().any(|(d, pos)| *d == dir && pos[..] == p[..])
        }
        (_, Direction::Forward) => p.len() == 2 && matches!(w.events[p[0]], Event::Cusp(_)),
        (MoveFamily::Lr2A | MoveFamily::Lr2B, Direction::Inverse) => {
            p.len() == 2 && lr2ab_inverse_at(w, p[0], p[1]) == Some(site.kind)
        }
        (_, Direction::Inverse) => p.len() == 2 && lr2cd_inverse_at(w, p[0], p[1]) == Some(site.kind),
    }
}

/// Apply a move; the result is anchored at the start of the rewritten word.
pub fn apply(code: &FrontCode, site: &MoveSite) -> Result<FrontCode, MoveError> {
    let w = Word::new(code);
    if !site_matches(&w, site) {
        return Err(MoveError::InvalidSite(site.to_string()));
    }
    let events = rewrite(&w, site);
    FrontCode::new(events).map_err(|e| MoveError::Internal(e.to_string()))
}

fn rewrite(w: &Word, site: &MoveSite) -> Vec<Event> {
    let n = w.len();
    let p = &site.positions;
    let family = site.kind.family;
    let variant = site.kind.variant;
    let (k1, k2) = w.fresh();

    // Rebuild with insertions before given indices and replacements at others.
    let splice = |inserts: &[(usize, Vec<Event>)], replace: &[(usize, Vec<Event>)]| {
        let mut out = Vec::with_capacity(n + 8);
        for j in 0..n {
            for (at, evs) in inserts {
                if *at == j {
                    out.extend_from_slice(evs);
                }
            }
            match replace.iter().find(|(at, _)| *at == j) {
                Some((_, evs)) => out.extend_from_slice(evs),
                None => out.push(w.events[j]),
            }
        }
        out
    };

    match (family, site.direction) {
        (MoveFamily::Lr1A | MoveFamily::Lr1B, Direction::Forward) => {
            let (d1, d2) = lr1_cusps(variant);
            let loop_events = if family == MoveFamily::Lr1A {
                vec![
                    Event::UnderPass(k1, Sign::Positive),
                    Event::Cusp(d1),
                    Event::Cusp(d2),
                    Event::OverPass(k1),
                ]
            } else {
                vec![
                    Event::OverPass(k1),
                    Event::Cusp(d1),
                    Event::Cusp(d2),
                    Event::UnderPass(k1, Sign::Positive),
                ]
            };
            splice(&[(p[0], loop_events)], &[])
        }
        (MoveFamily::Lr2A | MoveFamily::Lr2B, Direction::Forward) => {
            let (s1, s2) = family.lr2_signs();
            let cusp = w.events[p[0]];
            let triple = vec![Event::UnderPass(k1, s1), cusp, Event::UnderPass(k2, s2)];
            let overs = if variant == 0 {
                vec![Event::OverPass(k2), Event::OverPass(k1)]
            } else {
                vec![Event::OverPass(k1), Event::OverPass(k2)]
            };
            splice(&[(p[1], overs)], &[(p[0], triple)])
        }
        (MoveFamily::Lr2C | MoveFamily::Lr2D, Direction::Forward) => {
            let (s1, s2) = family.lr2_signs();
            let cusp = w.events[p[0]];
            let first_before = matches!(
                (family, variant),
                (MoveFamily::Lr2C, 0) | (MoveFamily::Lr2D, 1)
            );
            let triple = if first_before {
                vec![Event::OverPass(k1), cusp, Event::OverPass(k2)]
            } else {
                vec![Event::OverPass(k2), cusp, Event::OverPass(k1)]
            };
            let unders = vec![Event::UnderPass(k1, s1), Event::UnderPass(k2, s2)];
            splice(&[(p[1], unders)], &[(p[0], triple)])
        }
        (MoveFamily::Lr3, _) => {
            let mut out = w.events.clone();
            for &start in p {
                out.swap(start, w.idx(start + 1));
            }
            out
        }
        (MoveFamily::Lr1A | MoveFamily::Lr1B, Direction::Inverse) => {
            let drop: Vec<usize> = (0..4).map(|d| w.idx(p[0] + d)).collect();
            keep_except(w, &drop)
        }
        (_, Direction::Inverse) => {
            // LR2: drop the crossing tokens around the cusp and the pair.
            let drop = [w.idx(p[0]), w.idx(p[0] + 2), w.idx(p[1]), w.idx(p[1] + 1)];
            keep_except(w, &drop)
        }
    }
}

fn keep_except(w: &Word, drop: &[usize]) -> Vec<Event> {
    w.events
        .iter()
        .enumerate()
        .filter(|(i, _)| !drop.contains(i))
        .map(|(_, e)| *e)
        .collect()
}

/// The site that undoes a forward move, located in the rewritten code.
pub fn inverse_site(code: &FrontCode, site: &MoveSite) -> Option<MoveSite> {
    if site.direction == Direction::Inverse && site.kind.family != MoveFamily::Lr3 {
        return None;
    }
    let after = apply(code, site).ok()?;
    let p = &site.positions;
    let positions = match site.kind.family {
        MoveFamily::Lr1A | MoveFamily::Lr1B => vec![p[0]],
        MoveFamily::Lr3 => {
            let dir = match site.direction {
                Direction::Forward => Direction::Inverse,
                Direction::Inverse => Direction::Forward,
            };
            let candidate = MoveSite { kind: site.kind, direction: dir, positions: p.clone() };
            return applicable(&after).into_iter().find(|s| *s == candidate);
        }
        _ => {
            // Forward LR2 inserts a pair at gap p[1] and widens the cusp at p[0].
            let (cusp, gap) = (p[0], p[1]);
            let triple = if gap <= cusp { cusp + 2 } else { cusp };
            let pair = if gap <= cusp { gap } else { gap + 2 };
            vec![triple, pair]
        }
    };
    let candidate = MoveSite { kind: site.kind, direction: Direction::Inverse, positions };
    applicable(&after).into_iter().find(|s| *s == candidate)
}

/// Apply `steps` random moves, reproducibly from `seed`.
///
/// Each step first picks a (family, direction) group uniformly among those
/// with at least one site, then a site uniformly within it.
pub fn random_walk(code: &FrontCode, steps: usize, seed: u64) -> FrontCode {
    random_walk_trace(code, steps, seed).pop().map(|(_, c)| c).unwrap_or_else(|| code.clone())
}

/// Like [`random_walk`] but returns every intermediate `(site, code)`.
pub fn random_walk_trace(code: &FrontCode, steps: usize, seed: u64) -> Vec<(MoveSite, FrontCode)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = code.clone();
    let mut trace = Vec::with_capacity(steps);
    for _ in 0..steps {
        let sites = applicable(&current);
        let mut groups: Vec<((MoveFamily, Direction), Vec<&MoveSite>)> = Vec::new();
        for s in &sites {
            let key = (s.kind.family, s.direction);
            match groups.iter_mut().find(|(k, _)| *k == key) {
                Some((_, v)) => v.push(s),
                None => groups.push((key, vec![s])),
            }
        }
        let (_, group) = groups.choose(&mut rng).expect("LR1 insertion always applies");
        let site = (*group.choose(&mut rng).expect("non-empty group")).clone();
        current = apply(&current, &site).expect("sites from applicable() are valid");
        trace.push((site, current.clone()));
    }
    trace
}
