//! Colorings: homomorphisms from a presented rack into a finite rack.
//!
//! Every relation is functional (`dst` is fixed by `src` and `over`) and, in
//! an n-Legendrian target, also invertible in `src`. The search branches on
//! the lowest unassigned generator and propagates both directions, so most
//! generators get fixed without branching.

use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::front_code::FrontCode;
use crate::model_finder::{self, Constraint};
use crate::presentation::{GroundRelation, Presentation};
use crate::rack::{FiniteRack, LegendrianIndex, RackTable};
use crate::target::NamedRack;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("target {target} is not {n}-Legendrian; its coloring counts are not invariants")]
    NotLegendrian { target: String, n: LegendrianIndex },
    #[error("target {0} is not a quandle")]
    NotQuandle(String),
    #[error("presentation has {got} generators, limit is {limit}")]
    TooManyGenerators { got: usize, limit: usize },
    #[error("target has order {got}, limit is {limit}")]
    TargetTooLarge { got: usize, limit: usize },
    #[error("code is not crossingless: {0}")]
    NotCrossingless(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("enumeration: {0}")]
    Enumeration(#[from] model_finder::EnumerationError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColoringLimits {
    pub max_generators: usize,
    pub max_order: usize,
}

impl Default for ColoringLimits {
    fn default() -> Self {
        ColoringLimits { max_generators: 4096, max_order: FiniteRack::MAX_ORDER }
    }
}

/// Generator-to-element assignment satisfying every relation.
pub type Coloring = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringReport {
    pub target: String,
    pub n: LegendrianIndex,
    pub count: u64,
    pub surjective_count: u64,
    /// Lexicographically least coloring, if any.
    pub sample: Option<Coloring>,
}

/// Search state for one (relations, target) pair.
struct Solver<'a> {
    rack: &'a FiniteRack,
    relations: &'a [GroundRelation],
    generators: usize,
    /// Relations mentioning each generator.
    touching: Vec<Vec<usize>>,
    /// `x -> x^e` and its inverse (when a bijection) for every power exponent
    /// in use.
    powers: Vec<(i64, Vec<usize>, Option<Vec<usize>>)>,
    /// `x * y` when it does not depend on `y`.
    star_const: Vec<Option<usize>>,
    /// `x / y` when it does not depend on `y`.
    slash_const: Vec<Option<usize>>,
}

const UNSET: usize = usize::MAX;

impl<'a> Solver<'a> {
    fn new(rack: &'a FiniteRack, relations: &'a [GroundRelation], generators: usize) -> Self {
        let mut touching = vec![Vec::new(); generators];
        let mut powers: Vec<(i64, Vec<usize>, Option<Vec<usize>>)> = Vec::new();
        for (i, r) in relations.iter().enumerate() {
            let vars: &[usize] = match r {
                GroundRelation::Power { src, exponent, dst } => {
                    if !powers.iter().any(|(e, _, _)| e == exponent) {
                        let map: Vec<usize> =
                            (0..rack.order()).map(|x| rack.pow_unchecked(*exponent, x)).collect();
                        let inverse = invert(&map);
                        powers.push((*exponent, map, inverse));
                    }
                    &[*src, *dst]
                }
                GroundRelation::Star { src, over, dst } | GroundRelation::Slash { src, over, dst } => {
                    &[*src, *over, *dst]
                }
            };
            for &v in vars {
                if !touching[v].contains(&i) {
                    touching[v].push(i);
                }
            }
        }
        let constant = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Option<usize>> {
            (0..rack.order())
                .map(|x| {
                    let v = f(x, 0);
                    (1..rack.order()).all(|y| f(x, y) == v).then_some(v)
                })
                .collect()
        };
        let star_const = constant(&|x, y| rack.op(x, y));
        let slash_const = constant(&|x, y| rack.inv(x, y));
        Solver { rack, relations, generators, touching, powers, star_const, slash_const }
    }

    fn power(&self, exponent: i64) -> &(i64, Vec<usize>, Option<Vec<usize>>) {
        self.powers.iter().find(|(e, _, _)| *e == exponent).expect("power table")
    }

    /// Assign `var = value` and propagate. Returns false on conflict; every
    /// assignment made is pushed to `trail`.
    fn assign(&self, colors: &mut [usize], trail: &mut Vec<usize>, var: usize, value: usize) -> bool {
        let mut queue = vec![(var, value)];
        while let Some((v, val)) = queue.pop() {
            if colors[v] != UNSET {
                if colors[v] != val {
                    return false;
                }
                continue;
            }
            colors[v] = val;
            trail.push(v);
            for &ri in &self.touching[v] {
                if !self.examine(&self.relations[ri], colors, &mut queue) {
                    return false;
                }
            }
        }
        true
    }

    /// Derive forced values from one relation; false on violation.
    fn examine(&self, r: &GroundRelation, colors: &[usize], queue: &mut Vec<(usize, usize)>) -> bool {
        let get = |i: usize| colors[i];
        let mut force = |var: usize, val: usize| -> bool {
            let cur = get(var);
            if cur == UNSET {
                queue.push((var, val));
                true
            } else {
                cur == val
            }
        };
        match *r {
            GroundRelation::Power { src, exponent, dst } => {
                let (_, map, inverse) = self.power(exponent);
                if get(src) != UNSET {
                    force(dst, map[get(src)])
                } else if get(dst) != UNSET {
                    match inverse {
                        Some(inv) => force(src, inv[get(dst)]),
                        None => map.contains(&get(dst)),
                    }
                } else {
                    true
                }
            }
            GroundRelation::Star { src, over, dst } => {
                let (s, o, d) = (get(src), get(over), get(dst));
                if s != UNSET && o != UNSET {
                    force(dst, self.rack.op(s, o))
                } else if d != UNSET && o != UNSET {
                    force(src, self.rack.inv(d, o))
                } else if let Some(v) = (s != UNSET).then(|| self.star_const[s]).flatten() {
                    force(dst, v)
                } else if let Some(v) = (d != UNSET).then(|| self.slash_const[d]).flatten() {
                    force(src, v)
                } else {
                    true
                }
            }
            GroundRelation::Slash { src, over, dst } => {
                let (s, o, d) = (get(src), get(over), get(dst));
                if s != UNSET && o != UNSET {
                    force(dst, self.rack.inv(s, o))
                } else if d != UNSET && o != UNSET {
                    force(src, self.rack.op(d, o))
                } else if let Some(v) = (s != UNSET).then(|| self.slash_const[s]).flatten() {
                    force(dst, v)
                } else if let Some(v) = (d != UNSET).then(|| self.star_const[d]).flatten() {
                    force(src, v)
                } else {
                    true
                }
            }
        }
    }

    fn undo(colors: &mut [usize], trail: &mut Vec<usize>, mark: usize) {
        for v in trail.drain(mark..) {
            colors[v] = UNSET;
        }
    }

    /// An unassigned over-strand of a crossing with one side known, so that
    /// fixing it propagates; otherwise the lowest unassigned generator.
    fn branch_variable(&self, colors: &[usize]) -> Option<usize> {
        let frontier = self.relations.iter().find_map(|r| match *r {
            GroundRelation::Star { src, over, dst } | GroundRelation::Slash { src, over, dst }
                if colors[over] == UNSET && (colors[src] != UNSET) != (colors[dst] != UNSET) =>
            {
                Some(over)
            }
            _ => None,
        });
        frontier.or_else(|| colors.iter().position(|&c| c == UNSET))
    }

    /// Visit every coloring extending `colors`.
    fn search<F>(&self, colors: &mut Vec<usize>, trail: &mut Vec<usize>, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let Some(var) = self.branch_variable(colors) else {
            debug_assert!(self.relations.iter().all(|r| r.holds(self.rack, colors)));
            return visit(colors);
        };
        for value in 0..self.rack.order() {
            let mark = trail.len();
            if self.assign(colors, trail, var, value) {
                self.search(colors, trail, visit)?;
            }
            Self::undo(colors, trail, mark);
        }
        ControlFlow::Continue(())
    }

    fn for_each<F>(&self, mut visit: F)
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let mut colors = vec![UNSET; self.generators];
        let mut trail = Vec::with_capacity(self.generators);
        let _ = self.search(&mut colors, &mut trail, &mut visit);
    }

    /// Count colorings, fanning out over the value of generator 0.
    fn tally(&self) -> Tally {
        let m = self.rack.order();
        if self.generators == 0 {
            return Tally::default();
        }
        (0..m)
            .into_par_iter()
            .map(|first| {
                let mut tally = Tally::default();
                let mut colors = vec![UNSET; self.generators];
                let mut trail = Vec::with_capacity(self.generators);
                if self.assign(&mut colors, &mut trail, 0, first) {
                    let mut seen = vec![false; m];
                    let _ = self.search(&mut colors, &mut trail, &mut |c: &[usize]| {
                        tally.record(c, m, &mut seen);
                        ControlFlow::Continue(())
                    });
                }
                tally
            })
            .reduce(Tally::default, Tally::merge)
    }
}

fn invert(map: &[usize]) -> Option<Vec<usize>> {
    let mut inv = vec![UNSET; map.len()];
    for (x, &y) in map.iter().enumerate() {
        if inv[y] != UNSET {
            return None;
        }
        inv[y] = x;
    }
    Some(inv)
}

#[derive(Debug, Default)]
struct Tally {
    count: u64,
    surjective: u64,
    least: Option<Coloring>,
}

impl Tally {
    fn record(&mut self, colors: &[usize], order: usize, seen: &mut [bool]) {
        self.count += 1;
        seen.iter_mut().for_each(|s| *s = false);
        let mut distinct = 0;
        for &c in colors {
            if !seen[c] {
                seen[c] = true;
                distinct += 1;
            }
        }
        if distinct == order {
            self.surjective += 1;
        }
        if self.least.as_deref().is_none_or(|l| colors < l) {
            self.least = Some(colors.to_vec());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.count += other.count;
        self.surjective += other.surjective;
        self.least = match (self.least, other.least) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }
}

fn check_limits(p: &Presentation, t: &FiniteRack, limits: &ColoringLimits) -> Result<(), ColoringError> {
    if p.generator_count() > limits.max_generators {
        return Err(ColoringError::TooManyGenerators {
            got: p.generator_count(),
            limit: limits.max_generators,
        });
    }
    if t.order() > limits.max_order {
        return Err(ColoringError::TargetTooLarge { got: t.order(), limit: limits.max_order });
    }
    Ok(())
}

/// Count colorings of the n-instantiated presentation in `target`.
pub fn count_colorings(
    p: &Presentation,
    n: LegendrianIndex,
    target: &NamedRack,
) -> Result<ColoringReport, ColoringError> {
    count_colorings_with(p, n, target, &ColoringLimits::default())
}

pub fn count_colorings_with(
    p: &Presentation,
    n: LegendrianIndex,
    target: &NamedRack,
    limits: &ColoringLimits,
) -> Result<ColoringReport, ColoringError> {
    if !target.rack.is_legendrian(n) {
        return Err(ColoringError::NotLegendrian { target: target.name.clone(), n });
    }
    check_limits(p, &target.rack, limits)?;
    let relations = p.instantiate(n);
    let tally = Solver::new(&target.rack, &relations, p.generator_count()).tally();
    Ok(ColoringReport {
        target: target.name.clone(),
        n,
        count: tally.count,
        surjective_count: tally.surjective,
        sample: tally.least,
    })
}

/// Classical quandle coloring count: the `n = 0` instance.
pub fn quandle_colorings(p: &Presentation, target: &NamedRack) -> Result<u64, ColoringError> {
    if !target.rack.is_quandle() {
        return Err(ColoringError::NotQuandle(target.name.clone()));
    }
    Ok(count_colorings(p, LegendrianIndex(0), target)?.count)
}

/// Closed-form count of colorings of the `s`-strand crossingless unknot in
/// `C_k`: each cusp shifts by `n`, so a coloring exists iff `k | s*n`, and
/// then the value of the first strand is free.
pub fn unknot_arithmetic(s: u64, n: LegendrianIndex, k: u64) -> Result<u64, ColoringError> {
    let two_n_plus_one = 2 * n.0 as u64 + 1;
    if k == 0 || !two_n_plus_one.is_multiple_of(k) {
        return Err(ColoringError::Precondition(format!("{k} does not divide 2n+1 = {two_n_plus_one}")));
    }
    if s == 0 || !s.is_multiple_of(2) {
        return Err(ColoringError::Precondition(format!("strand count {s} must be positive and even")));
    }
    Ok(if (s * n.0 as u64).is_multiple_of(k) { k } else { 0 })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinguishingWitness {
    pub p: u64,
    pub k: u32,
    /// `p^k`, the order of the cyclic target.
    pub modulus: u64,
    pub n: LegendrianIndex,
    pub s_min_a: usize,
    pub s_min_b: usize,
    pub count_a: u64,
    pub count_b: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Distinguished { witness: DistinguishingWitness },
    Inconclusive { s_min_a: usize, s_min_b: usize },
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// All `(p, k)` with `p` an odd prime and `p^k <= limit`, ordered by `p^k`.
pub fn odd_prime_powers_up_to(limit: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for p in (3..=limit).step_by(2).filter(|&p| is_prime(p)) {
        let mut q = p;
        let mut k = 1;
        while q <= limit {
            out.push((q, p, k));
            q *= p;
            k += 1;
        }
    }
    out.sort();
    out.into_iter().map(|(_, p, k)| (p, k)).collect()
}

/// Try to separate two crossingless unknots with a cyclic target `C_{p^k}`
/// where `p^k` divides exactly one of the two strand counts.
pub fn distinguish_unknots(
    a: &FrontCode,
    b: &FrontCode,
    budget: &[(u64, u32)],
) -> Result<Verdict, ColoringError> {
    let s_a = a.s_min().ok_or_else(|| ColoringError::NotCrossingless(a.to_string()))?;
    let s_b = b.s_min().ok_or_else(|| ColoringError::NotCrossingless(b.to_string()))?;
    for &(p, k) in budget {
        if p % 2 == 0 || !is_prime(p) || k == 0 {
            return Err(ColoringError::Precondition(format!("({p}, {k}) is not an odd prime power")));
        }
        let modulus = p.checked_pow(k).ok_or_else(|| {
            ColoringError::Precondition(format!("{p}^{k} overflows"))
        })?;
        if (s_a as u64).is_multiple_of(modulus) == (s_b as u64).is_multiple_of(modulus) {
            continue;
        }
        if modulus as usize > FiniteRack::MAX_ORDER {
            return Err(ColoringError::TargetTooLarge {
                got: modulus as usize,
                limit: FiniteRack::MAX_ORDER,
            });
        }
        let n = LegendrianIndex(((modulus - 1) / 2) as u32);
        let target = NamedRack::cyclic(modulus as usize).expect("modulus checked");
        let count_a = count_colorings(&crate::presentation::extract(a), n, &target)?.count;
        let count_b = count_colorings(&crate::presentation::extract(b), n, &target)?.count;
        debug_assert_ne!(count_a, count_b);
        return Ok(Verdict::Distinguished {
            witness: DistinguishingWitness { p, k, modulus, n, s_min_a: s_a, s_min_b: s_b, count_a, count_b },
        });
    }
    Ok(Verdict::Inconclusive { s_min_a: s_a, s_min_b: s_b })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateReason {
    /// Two generators receive different colors.
    NonConstant,
    /// All generators share one color `x` with `x * x != x`.
    NonIdempotentConstant,
}

/// Witness that a presented n-Legendrian rack has more than one element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: LegendrianIndex,
    pub target: String,
    pub table: RackTable,
    pub coloring: Coloring,
    pub reason: CertificateReason,
}

/// Reusable target pool for nontriviality searches.
///
/// For each `n` the targets are `C_k` for every `k > 1` dividing `2n+1`,
/// then every n-Legendrian rack of order at most `max_order` up to
/// isomorphism, in enumeration order.
pub struct CertificateSearch {
    max_order: usize,
    racks_by_order: Vec<Vec<FiniteRack>>,
    limits: ColoringLimits,
}

impl CertificateSearch {
    pub fn new(max_order: usize) -> Result<Self, ColoringError> {
        let mut racks_by_order = Vec::new();
        for order in 1..=max_order {
            racks_by_order.push(model_finder::enumerate(order, Constraint::AllRacks)?.representatives);
        }
        Ok(CertificateSearch { max_order, racks_by_order, limits: ColoringLimits::default() })
    }

    pub fn with_limits(mut self, limits: ColoringLimits) -> Self {
        self.limits = limits;
        self
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn targets(&self, n: LegendrianIndex) -> Vec<NamedRack> {
        let two_n_plus_one = 2 * n.0 as usize + 1;
        let mut out: Vec<NamedRack> = (2..=two_n_plus_one.min(FiniteRack::MAX_ORDER))
            .filter(|k| two_n_plus_one.is_multiple_of(*k))
            .map(|k| NamedRack::cyclic(k).expect("k >= 2"))
            .collect();
        for (i, racks) in self.racks_by_order.iter().enumerate() {
            for (idx, rack) in racks.iter().filter(|r| r.is_legendrian(n)).enumerate() {
                out.push(NamedRack::new(format!("enum:{}#{}", i + 1, idx), rack.clone()));
            }
        }
        out
    }

    /// Look for a coloring that is not a constant idempotent one, for each
    /// `n` in turn. `None` means nothing was found within the bounds; it is
    /// not a proof of triviality.
    pub fn search(
        &self,
        p: &Presentation,
        n_range: &[LegendrianIndex],
    ) -> Result<Option<Certificate>, ColoringError> {
        for &n in n_range {
            for target in self.targets(n) {
                check_limits(p, &target.rack, &self.limits)?;
                if let Some((coloring, reason)) = find_nontrivial(p, n, &target.rack) {
                    return Ok(Some(Certificate {
                        n,
                        target: target.name.clone(),
                        table: target.rack.to_table(),
                        coloring,
                        reason,
                    }));
                }
            }
        }
        Ok(None)
    }
}

fn find_nontrivial(p: &Presentation, n: LegendrianIndex, rack: &FiniteRack) -> Option<(Coloring, CertificateReason)> {
    let relations = p.instantiate(n);
    let solver = Solver::new(rack, &relations, p.generator_count());
    let mut found = None;
    solver.for_each(|c| {
        let first = c[0];
        if c.iter().any(|&x| x != first) {
            found = Some((c.to_vec(), CertificateReason::NonConstant));
            ControlFlow::Break(())
        } else if rack.op(first, first) != first {
            found = Some((c.to_vec(), CertificateReason::NonIdempotentConstant));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

/// One-shot nontriviality search; see [`CertificateSearch`].
pub fn nontriviality_certificate(
    p: &Presentation,
    n_range: &[LegendrianIndex],
    max_order: usize,
) -> Result<Option<Certificate>, ColoringError> {
    CertificateSearch::new(max_order)?.search(p, n_range)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::extract;

    fn present(code: &str) -> Presentation {
        extract(&FrontCode::parse(code).unwrap())
    }

    fn unknot(s: usize) -> String {
        vec!["U,D"; s / 2].join(",")
    }

    // Independent oracle: every assignment in m^g, checked relation by relation.
    fn brute_force(p: &Presentation, n: LegendrianIndex, rack: &FiniteRack) -> (u64, u64) {
        let g = p.generator_count();
        let m = rack.order();
        let rels = p.instantiate(n);
        let mut colors = vec![0usize; g];
        let (mut count, mut surj) = (0, 0);
        loop {
            if rels.iter().all(|r| r.holds(rack, &colors)) {
                count += 1;
                let mut img = colors.clone();
                img.sort();
                img.dedup();
                if img.len() == m {
                    surj += 1;
                }
            }
            let mut i = 0;
            loop {
                if i == g {
                    return (count, surj);
                }
                colors[i] += 1;
                if colors[i] < m {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn minimal_unknot_into_c3() {
        let p = present("U,D");
        let c3 = NamedRack::cyclic(3).unwrap();
        let r = count_colorings(&p, LegendrianIndex(1), &c3).unwrap();
        assert_eq!(brute_force(&p, LegendrianIndex(1), &c3.rack), (0, 0));
        assert_eq!(r.count, 0);
        assert_eq!(r.sample, None);
    }

    #[test]
    fn six_and_four_strand_unknots_into_c3() {
        let c3 = NamedRack::cyclic(3).unwrap();
        let six = present(&unknot(6));
        let r = count_colorings(&six, LegendrianIndex(1), &c3).unwrap();
        assert_eq!(brute_force(&six, LegendrianIndex(1), &c3.rack), (3, 3));
        assert_eq!((r.count, r.surjective_count), (3, 3));
        assert_eq!(r.sample, Some(vec![0, 1, 2, 0, 1, 2]));
        let four = present(&unknot(4));
        assert_eq!(brute_force(&four, LegendrianIndex(1), &c3.rack), (0, 0));
        assert_eq!(count_colorings(&four, LegendrianIndex(1), &c3).unwrap().count, 0);
    }

    #[test]
    fn rejects_non_legendrian_target() {
        let p = present("U,D");
        let c3 = NamedRack::cyclic(3).unwrap();
        assert!(matches!(
            count_colorings(&p, LegendrianIndex(2), &c3),
            Err(ColoringError::NotLegendrian { .. })
        ));
    }

    #[test]
    fn limits_are_enforced() {
        let p = present(&unknot(10));
        let c3 = NamedRack::cyclic(3).unwrap();
        let limits = ColoringLimits { max_generators: 8, max_order: 255 };
        assert!(matches!(
            count_colorings_with(&p, LegendrianIndex(1), &c3, &limits),
            Err(ColoringError::TooManyGenerators { got: 10, limit: 8 })
        ));
        let limits = ColoringLimits { max_generators: 100, max_order: 2 };
        assert!(matches!(
            count_colorings_with(&p, LegendrianIndex(1), &c3, &limits),
            Err(ColoringError::TargetTooLarge { .. })
        ));
    }

    #[test]
    fn quandle_counts() {
        let r3 = NamedRack::dihedral(3).unwrap();
        let trefoil = present("U,u1+,o3,u2+,U,D,o1,u3+,o2,D");
        assert_eq!(brute_force(&trefoil, LegendrianIndex(0), &r3.rack).0, 9);
        assert_eq!(quandle_colorings(&trefoil, &r3).unwrap(), 9);
        assert_eq!(quandle_colorings(&present("U,D"), &r3).unwrap(), 3);
        let one = NamedRack::trivial(1).unwrap();
        assert_eq!(quandle_colorings(&trefoil, &one).unwrap(), 1);
        let c3 = NamedRack::cyclic(3).unwrap();
        assert!(matches!(quandle_colorings(&trefoil, &c3), Err(ColoringError::NotQuandle(_))));
    }

    #[test]
    fn arithmetic_shortcut() {
        assert_eq!(unknot_arithmetic(6, LegendrianIndex(1), 3).unwrap(), 3);
        assert_eq!(unknot_arithmetic(4, LegendrianIndex(1), 3).unwrap(), 0);
        for n in 1..8 {
            assert_eq!(unknot_arithmetic(2, LegendrianIndex(n), 2 * n as u64 + 1).unwrap(), 0);
        }
        assert!(unknot_arithmetic(4, LegendrianIndex(1), 5).is_err());
        assert!(unknot_arithmetic(3, LegendrianIndex(1), 3).is_err());
    }

    #[test]
    fn arithmetic_agrees_with_search() {
        for s in (2..=18).step_by(2) {
            let p = present(&unknot(s));
            for n in 0..6u32 {
                let t = 2 * n as u64 + 1;
                for k in (1..=t).filter(|k| t.is_multiple_of(*k)) {
                    let target = NamedRack::cyclic(k as usize).unwrap();
                    let got = count_colorings(&p, LegendrianIndex(n), &target).unwrap().count;
                    assert_eq!(got, unknot_arithmetic(s as u64, LegendrianIndex(n), k).unwrap());
                }
            }
        }
    }

    #[test]
    fn distinguish_six_from_four() {
        let a = FrontCode::parse(&unknot(6)).unwrap();
        let b = FrontCode::parse(&unknot(4)).unwrap();
        match distinguish_unknots(&a, &b, &[(3, 1)]).unwrap() {
            Verdict::Distinguished { witness } => {
                assert_eq!(witness.n, LegendrianIndex(1));
                assert_eq!((witness.count_a, witness.count_b), (3, 0));
            }
            v => panic!("unexpected {v:?}"),
        }
    }

    #[test]
    fn power_of_two_ratio_is_inconclusive() {
        let a = FrontCode::parse(&unknot(4)).unwrap();
        let b = FrontCode::parse(&unknot(8)).unwrap();
        let budget = odd_prime_powers_up_to(64);
        assert!(matches!(distinguish_unknots(&a, &b, &budget).unwrap(), Verdict::Inconclusive { .. }));
        assert!(matches!(distinguish_unknots(&a, &a, &budget).unwrap(), Verdict::Inconclusive { .. }));
        let trefoil = FrontCode::parse("U,u1+,o3,u2+,U,D,o1,u3+,o2,D").unwrap();
        assert!(matches!(distinguish_unknots(&a, &trefoil, &budget), Err(ColoringError::NotCrossingless(_))));
        assert!(distinguish_unknots(&a, &b, &[(9, 1)]).is_err());
    }

    #[test]
    fn prime_power_budget() {
        assert_eq!(odd_prime_powers_up_to(10), vec![(3, 1), (5, 1), (7, 1), (3, 2)]);
    }

    #[test]
    fn certificates() {
        let six = present(&unknot(6));
        let cert = nontriviality_certificate(&six, &[LegendrianIndex(1)], 3).unwrap().unwrap();
        assert_eq!(cert.target, "ck:3");
        assert_eq!(cert.reason, CertificateReason::NonConstant);
        let min = present("U,D");
        let range: Vec<_> = (1..=4).map(LegendrianIndex).collect();
        assert_eq!(nontriviality_certificate(&min, &range, 4).unwrap(), None);
    }

    #[test]
    fn sample_is_lexicographically_least() {
        let trefoil = present("U,u1+,o3,u2+,U,D,o1,u3+,o2,D");
        let r3 = NamedRack::dihedral(3).unwrap();
        let r = count_colorings(&trefoil, LegendrianIndex(0), &r3).unwrap();
        assert_eq!(r.sample, Some(vec![0; 7]));
        assert_eq!(r.surjective_count, 6);
    }
}
