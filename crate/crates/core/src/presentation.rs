//! Rack presentations read off a front code.
//!
//! Every strand is a generator. Each strand-breaking event relates the strand
//! entering it (`src`) to the strand leaving it (`dst`):
//!
//! * cusp: `dst = src^(n+1)`
//! * positive under-pass: `dst = src * over`
//! * negative under-pass: `dst = src / over`
//!
//! where `over` is the strand carrying the matching over-pass.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::front_code::{Event, FrontCode, Sign};
use crate::rack::{FiniteRack, LegendrianIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationKind {
    Cusp,
    Pos,
    Neg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Relation {
    pub kind: RelationKind,
    pub src: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub over: Option<usize>,
    pub dst: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
}

/// A relation with the cusp exponent fixed to a concrete value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroundRelation {
    /// `dst = src^exponent`
    Power { src: usize, exponent: i64, dst: usize },
    /// `dst = src * over`
    Star { src: usize, over: usize, dst: usize },
    /// `dst = src / over`
    Slash { src: usize, over: usize, dst: usize },
}

impl GroundRelation {
    pub fn dst(&self) -> usize {
        match *self {
            GroundRelation::Power { dst, .. }
            | GroundRelation::Star { dst, .. }
            | GroundRelation::Slash { dst, .. } => dst,
        }
    }

    pub fn holds(&self, rack: &FiniteRack, colors: &[usize]) -> bool {
        match *self {
            GroundRelation::Power { src, exponent, dst } => {
                rack.pow_unchecked(exponent, colors[src]) == colors[dst]
            }
            GroundRelation::Star { src, over, dst } => rack.op(colors[src], colors[over]) == colors[dst],
            GroundRelation::Slash { src, over, dst } => {
                rack.inv(colors[src], colors[over]) == colors[dst]
            }
        }
    }
}

/// Generator names: `a`..`z` when there are at most 26 strands, otherwise
/// `a_0`, `a_1`, ...
pub fn generator_names(count: usize) -> Vec<String> {
    if count <= 26 {
        (0..count).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..count).map(|i| format!("a_{i}")).collect()
    }
}

/// Read the presentation off a code, naming strands in traversal order from
/// the anchor.
pub fn extract(code: &FrontCode) -> Presentation {
    let word = code.traversal_word();
    let breaks = word.iter().filter(|e| e.breaks_strand()).count();
    debug_assert!(breaks >= 2);

    // strand_of[i]: strand on which event i sits, i.e. the strand entering it.
    let mut strand_of = Vec::with_capacity(word.len());
    let mut current = 0;
    for e in &word {
        strand_of.push(current);
        if e.breaks_strand() {
            current = (current + 1) % breaks;
        }
    }
    let over_strand: HashMap<u32, usize> = word
        .iter()
        .zip(&strand_of)
        .filter_map(|(e, &s)| match *e {
            Event::OverPass(id) => Some((id, s)),
            _ => None,
        })
        .collect();

    let relations = word
        .iter()
        .zip(&strand_of)
        .filter(|(e, _)| e.breaks_strand())
        .map(|(e, &src)| {
            let dst = (src + 1) % breaks;
            match *e {
                Event::Cusp(_) => Relation { kind: RelationKind::Cusp, src, over: None, dst },
                Event::UnderPass(id, sign) => Relation {
                    kind: match sign {
                        Sign::Positive => RelationKind::Pos,
                        Sign::Negative => RelationKind::Neg,
                    },
                    src,
                    over: Some(over_strand[&id]),
                    dst,
                },
                Event::OverPass(_) => unreachable!(),
            }
        })
        .collect();

    Presentation { generators: generator_names(breaks), relations }
}

impl Presentation {
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Fix the cusp exponent to `n + 1`.
    pub fn instantiate(&self, n: LegendrianIndex) -> Vec<GroundRelation> {
        self.relations
            .iter()
            .map(|r| match r.kind {
                RelationKind::Cusp => GroundRelation::Power {
                    src: r.src,
                    exponent: n.cusp_exponent(),
                    dst: r.dst,
                },
                RelationKind::Pos => GroundRelation::Star {
                    src: r.src,
                    over: r.over.expect("crossing relation without over-strand"),
                    dst: r.dst,
                },
                RelationKind::Neg => GroundRelation::Slash {
                    src: r.src,
                    over: r.over.expect("crossing relation without over-strand"),
                    dst: r.dst,
                },
            })
            .collect()
    }

    /// Check the structural invariants: one relation per generator, every
    /// generator the `dst` of exactly one relation, indices in range.
    pub fn is_well_formed(&self) -> bool {
        let g = self.generator_count();
        if g == 0 || self.relations.len() != g {
            return false;
        }
        let mut hit = vec![false; g];
        for r in &self.relations {
            let in_range = r.src < g && r.dst < g && r.over.is_none_or(|o| o < g);
            let shape_ok = (r.kind == RelationKind::Cusp) == r.over.is_none();
            if !in_range || !shape_ok || hit[r.dst] {
                return false;
            }
            hit[r.dst] = true;
        }
        true
    }

    /// Relations rendered one per line, e.g. `c = b * f` or `b = a^{n+1}`.
    pub fn relation_strings(&self) -> Vec<String> {
        self.relations.iter().map(|r| self.render(r)).collect()
    }

    fn render(&self, r: &Relation) -> String {
        let name = |i: usize| self.generators[i].as_str();
        match r.kind {
            RelationKind::Cusp => format!("{} = {}^{{n+1}}", name(r.dst), name(r.src)),
            RelationKind::Pos => {
                format!("{} = {} * {}", name(r.dst), name(r.src), name(r.over.unwrap()))
            }
            RelationKind::Neg => {
                format!("{} = {} / {}", name(r.dst), name(r.src), name(r.over.unwrap()))
            }
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | {} >", self.generators.join(", "), self.relation_strings().join(", "))
    }
}
