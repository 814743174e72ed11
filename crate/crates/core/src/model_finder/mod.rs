//! Small finite racks: enumeration up to isomorphism and exhaustive checks
//! of rack identities and the cusp-predicate axioms.

mod canonical;
mod lemmas;
mod predicates;

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rack::{FiniteRack, LegendrianIndex};

pub use canonical::{canonical_form, canonical_table, is_isomorphic};
pub use lemmas::{check_lemma_suite, IdentityCheck, LemmaReport};
pub use predicates::{
    check_predicate_axioms, check_predicate_structure, AxiomCheck, PredicateCheckReport, PredicateStructure,
};

/// Default ceiling for [`enumerate`].
pub const DEFAULT_MAX_ORDER: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "n")]
pub enum Constraint {
    AllRacks,
    Legendrian(LegendrianIndex),
    Quandles,
}

impl Constraint {
    pub fn admits(&self, rack: &FiniteRack) -> bool {
        match *self {
            Constraint::AllRacks => true,
            Constraint::Legendrian(n) => rack.is_legendrian(n),
            Constraint::Quandles => rack.is_quandle(),
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::AllRacks => f.write_str("all-racks"),
            Constraint::Legendrian(n) => write!(f, "n-legendrian({n})"),
            Constraint::Quandles => f.write_str("quandles"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("order {order} exceeds the enumeration bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub order: usize,
    pub constraint: Constraint,
    /// Canonical forms, sorted by table.
    pub representatives: Vec<FiniteRack>,
    /// Number of labeled tables satisfying the constraint.
    pub total_labeled: u64,
}

pub fn enumerate(order: usize, constraint: Constraint) -> Result<EnumerationResult, EnumerationError> {
    enumerate_bounded(order, constraint, DEFAULT_MAX_ORDER)
}

/// Enumerate racks of the given order satisfying `constraint`, one per
/// isomorphism class.
///
/// A rack is a family of permutations `R_y: x -> x*y` with
/// `R_{R_z(y)} = R_z R_y R_z^-1`; fixing two of them forces a third, so
/// the search assigns `R_0, R_1, ...` in turn and propagates.
pub fn enumerate_bounded(
    order: usize,
    constraint: Constraint,
    bound: usize,
) -> Result<EnumerationResult, EnumerationError> {
    if order == 0 {
        return Err(EnumerationError::ZeroOrder);
    }
    if order > bound || order > FiniteRack::MAX_ORDER {
        return Err(EnumerationError::OrderTooLarge { order, bound });
    }
    let perms = permutations(order);
    let quandle = matches!(constraint, Constraint::Quandles)
        || matches!(constraint, Constraint::Legendrian(LegendrianIndex(0)));

    let batches: Vec<(u64, BTreeSet<Vec<u8>>)> = perms
        .par_iter()
        .filter(|p| !quandle || p[0] == 0)
        .map(|first| {
            let mut search = Search::new(order, &perms, quandle);
            let mut out = (0u64, BTreeSet::new());
            if search.assign(0, first.clone()) {
                search.run(&mut |rack: FiniteRack| {
                    if constraint.admits(&rack) {
                        out.0 += 1;
                        out.1.insert(canonical_table(&rack));
                    }
                });
            }
            out
        })
        .collect();

    let mut total_labeled = 0;
    let mut tables = BTreeSet::new();
    for (count, set) in batches {
        total_labeled += count;
        tables.extend(set);
    }
    let representatives = tables
        .into_iter()
        .map(|t| FiniteRack::from_flat_unchecked(order, t))
        .collect();
    Ok(EnumerationResult { order, constraint, representatives, total_labeled })
}

type Perm = Vec<u8>;

fn permutations(m: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (0..m as u8).collect();
    heap_permute(m, &mut current, &mut out);
    out.sort();
    out
}

fn heap_permute(k: usize, a: &mut Vec<u8>, out: &mut Vec<Perm>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, a, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permute(k - 1, a, out);
}

struct Search<'a> {
    m: usize,
    perms: &'a [Perm],
    quandle: bool,
    /// `right[y]` is `R_y` once assigned.
    right: Vec<Option<Perm>>,
    trail: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(m: usize, perms: &'a [Perm], quandle: bool) -> Self {
        Search { m, perms, quandle, right: vec![None; m], trail: Vec::new() }
    }

    fn conjugate(outer: &[u8], inner: &[u8]) -> Perm {
        // outer . inner . outer^-1
        let mut out = vec![0u8; outer.len()];
        for x in 0..outer.len() {
            out[outer[x] as usize] = outer[inner[x] as usize];
        }
        out
    }

    /// Assign `R_y = p` and everything it forces. On failure the caller
    /// must roll back to its trail mark.
    fn assign(&mut self, y: usize, p: Perm) -> bool {
        let mut queue = vec![(y, p)];
        while let Some((y, p)) = queue.pop() {
            if self.quandle && p[y] as usize != y {
                return false;
            }
            match &self.right[y] {
                Some(existing) => {
                    if *existing != p {
                        return false;
                    }
                    continue;
                }
                None => {
                    self.right[y] = Some(p.clone());
                    self.trail.push(y);
                }
            }
            for z in 0..self.m {
                let Some(rz) = self.right[z].clone() else { continue };
                // R_{R_z(y)} = R_z R_y R_z^-1 and R_{R_y(z)} = R_y R_z R_y^-1
                queue.push((rz[y] as usize, Self::conjugate(&rz, &p)));
                if z != y {
                    queue.push((p[z] as usize, Self::conjugate(&p, &rz)));
                }
            }
        }
        true
    }

    fn rollback(&mut self, mark: usize) {
        for y in self.trail.drain(mark..) {
            self.right[y] = None;
        }
    }

    fn run(&mut self, emit: &mut dyn FnMut(FiniteRack)) {
        let Some(y) = self.right.iter().position(Option::is_none) else {
            let mut star = vec![0u8; self.m * self.m];
            for (y, r) in self.right.iter().enumerate() {
                let r = r.as_ref().expect("complete assignment");
                for x in 0..self.m {
                    star[x * self.m + y] = r[x];
                }
            }
            emit(FiniteRack::from_flat_unchecked(self.m, star));
            return;
        };
        for p in self.perms {
            let mark = self.trail.len();
            if self.assign(y, p.clone()) {
                self.run(emit);
            }
            self.rollback(mark);
        }
    }
}
