//! Cusp predicates `U` (up) and `D` (down) over a finite rack.
//!
//! In an n-Legendrian rack the definable choice `U(x, y) = D(x, y) =
//! (y = x^(n+1))` satisfies the eight move axioms below; conversely the
//! axioms force `U = D` and that definable form.

use serde::Serialize;
use thiserror::Error;

use crate::rack::{FiniteRack, LegendrianIndex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredicateError {
    #[error("rack is not {0}-Legendrian")]
    NotLegendrian(LegendrianIndex),
}

/// A rack with two binary relations, stored as `m x m` boolean matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateStructure {
    pub rack: FiniteRack,
    pub n: LegendrianIndex,
    pub up: Vec<bool>,
    pub down: Vec<bool>,
}

impl PredicateStructure {
    /// `U = D = {(x, x^(n+1))}`.
    pub fn definable(rack: &FiniteRack, n: LegendrianIndex) -> Self {
        let m = rack.order();
        let mut rel = vec![false; m * m];
        for x in 0..m {
            rel[x * m + rack.pow_unchecked(n.cusp_exponent(), x)] = true;
        }
        PredicateStructure { rack: rack.clone(), n, up: rel.clone(), down: rel }
    }

    pub fn u(&self, x: usize, y: usize) -> bool {
        self.up[x * self.rack.order() + y]
    }

    pub fn d(&self, x: usize, y: usize) -> bool {
        self.down[x * self.rack.order() + y]
    }

    pub fn set_up(&mut self, x: usize, y: usize, value: bool) {
        let m = self.rack.order();
        self.up[x * m + y] = value;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: &'static str,
    /// First failing `(x, y, z)` (or `(x, y)` with `z` unused).
    pub witness: Option<(usize, usize, usize)>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredicateCheckReport {
    pub order: usize,
    pub n: LegendrianIndex,
    pub axioms: Vec<AxiomCheck>,
}

impl PredicateCheckReport {
    pub fn all_passed(&self) -> bool {
        self.axioms.iter().all(AxiomCheck::passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.axioms.iter().find(|a| a.name == name)
    }
}

/// Instantiate the definable predicates and check every axiom.
pub fn check_predicate_axioms(
    rack: &FiniteRack,
    n: LegendrianIndex,
) -> Result<PredicateCheckReport, PredicateError> {
    if !rack.is_legendrian(n) {
        return Err(PredicateError::NotLegendrian(n));
    }
    Ok(check_predicate_structure(&PredicateStructure::definable(rack, n)))
}

/// Check the move axioms and the collapse statements on arbitrary `U`, `D`.
pub fn check_predicate_structure(s: &PredicateStructure) -> PredicateCheckReport {
    let r = &s.rack;
    let m = r.order();
    let n = s.n;
    let up_exp = n.0 as i64 + 2;
    let pos = |x: usize| r.pow_unchecked(up_exp, x);
    let neg = |x: usize| r.pow_unchecked(-up_exp, x);
    let cusp = |x: usize| r.pow_unchecked(n.cusp_exponent(), x);

    type Triple<'a> = Box<dyn Fn(usize, usize, usize) -> bool + 'a>;
    let triples: Vec<(&'static str, Triple)> = vec![
        ("LR1a", Box::new(|x, y, z| (s.u(r.op(x, z), y) && s.d(y, z)) == (x == z && y == pos(x)))),
        ("LR1b", Box::new(|x, y, z| (s.d(y, r.inv(z, x)) && s.u(x, y)) == (x == z && y == neg(x)))),
        ("LR1c", Box::new(|x, y, z| (s.d(x, y) && s.u(y, r.inv(z, x))) == (x == z && y == neg(x)))),
        ("LR1d", Box::new(|x, y, z| (s.d(r.op(x, z), y) && s.u(y, z)) == (x == z && y == pos(x)))),
        ("LR2a", Box::new(|x, y, z| s.u(x, y) == s.u(r.op(x, z), r.op(y, z)))),
        ("LR2b", Box::new(|x, y, z| s.d(x, y) == s.d(r.op(x, z), r.op(y, z)))),
        ("LR2c", Box::new(|x, y, z| !s.u(x, y) || r.op(r.inv(z, x), y) == z)),
        ("LR2d", Box::new(|x, y, z| !s.d(x, y) || r.inv(r.op(z, y), x) == z)),
    ];
    let mut axioms = Vec::new();
    for (name, holds) in &triples {
        let mut witness = None;
        'search: for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    if !holds(x, y, z) {
                        witness = Some((x, y, z));
                        break 'search;
                    }
                }
            }
        }
        axioms.push(AxiomCheck { name, witness });
    }

    type Pair<'a> = Box<dyn Fn(usize, usize) -> bool + 'a>;
    let pairs: Vec<(&'static str, Pair)> = vec![
        ("D-is-cusp-power", Box::new(|a, b| s.d(a, b) == (b == cusp(a)))),
        ("U-is-cusp-power", Box::new(|a, b| s.u(a, b) == (b == cusp(a)))),
        ("U-equals-D", Box::new(|a, b| s.u(a, b) == s.d(a, b))),
    ];
    for (name, holds) in &pairs {
        let witness = (0..m)
            .flat_map(|a| (0..m).map(move |b| (a, b)))
            .find(|&(a, b)| !holds(a, b))
            .map(|(a, b)| (a, b, 0));
        axioms.push(AxiomCheck { name, witness });
    }

    PredicateCheckReport { order: m, n, axioms }
}
