//! Textual front-projection codes.
//!
//! A front code is a cyclic word of events met while traversing an oriented
//! front: cusps (tagged with the traversal direction), over-passes, and signed
//! under-passes. Grammar:
//!
//! ```text
//! code   := event ("," event)*
//! event  := "U" | "D" | "o" INT | "u" INT SIGN
//! SIGN   := "+" | "-"
//! ```
//!
//! Whitespace is ignored everywhere.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CuspDirection {
    Up,
    Down,
}

impl CuspDirection {
    pub fn flipped(self) -> Self {
        match self {
            CuspDirection::Up => CuspDirection::Down,
            CuspDirection::Down => CuspDirection::Up,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Event {
    Cusp(CuspDirection),
    OverPass(u32),
    UnderPass(u32, Sign),
}

impl Event {
    /// Cusps and under-passes end a strand; over-passes do not.
    pub fn breaks_strand(&self) -> bool {
        !matches!(self, Event::OverPass(_))
    }

    pub fn crossing_id(&self) -> Option<u32> {
        match *self {
            Event::OverPass(id) | Event::UnderPass(id, _) => Some(id),
            Event::Cusp(_) => None,
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Event::Cusp(CuspDirection::Up) => f.write_str("U"),
            Event::Cusp(CuspDirection::Down) => f.write_str("D"),
            Event::OverPass(id) => write!(f, "o{id}"),
            Event::UnderPass(id, Sign::Positive) => write!(f, "u{id}+"),
            Event::UnderPass(id, Sign::Negative) => write!(f, "u{id}-"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("invalid front code: {0}")]
    Invalid(#[from] ValidationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("code has no events")]
    Empty,
    #[error("crossing id must be at least 1")]
    ZeroCrossingId,
    #[error("cusp count {0} violates \"even and >= 2\"")]
    CuspCount(usize),
    #[error("crossing {0} is missing its over-pass")]
    MissingOver(u32),
    #[error("crossing {0} is missing its under-pass")]
    MissingUnder(u32),
    #[error("crossing {0} has a duplicate over-pass")]
    DuplicateOver(u32),
    #[error("crossing {0} has a duplicate under-pass")]
    DuplicateUnder(u32),
}

/// A validated front code.
///
/// `events` is stored as written; `start_index` marks where the traversal,
/// and hence generator naming, begins. Two codes compare equal when their
/// traversal words (events read from the anchor) agree.
#[derive(Debug, Clone)]
pub struct FrontCode {
    events: Vec<Event>,
    start_index: usize,
}

impl PartialEq for FrontCode {
    fn eq(&self, other: &Self) -> bool {
        self.events.len() == other.events.len() && self.traversal().eq(other.traversal())
    }
}

impl Eq for FrontCode {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontInvariants {
    pub writhe: i64,
    pub cusp_count: usize,
    pub up_cusps: usize,
    pub down_cusps: usize,
    pub tb: i64,
    /// Rotation number times two (`down_cusps - up_cusps`).
    pub rotation_numerator: i64,
    pub strand_count: usize,
}

impl FrontCode {
    pub fn new(events: Vec<Event>) -> Result<Self, ValidationError> {
        Self::with_start(events, 0)
    }

    pub fn with_start(events: Vec<Event>, start_index: usize) -> Result<Self, ValidationError> {
        validate(&events)?;
        let start_index = start_index % events.len();
        Ok(FrontCode { events, start_index })
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let events = parse_events(text)?;
        Ok(FrontCode::new(events)?)
    }

    /// Events in stored order, ignoring the anchor.
    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn start_index(&self) -> usize {
        self.start_index
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Events in traversal order starting at the anchor.
    pub fn traversal(&self) -> impl Iterator<Item = Event> + '_ {
        let (head, tail) = self.events.split_at(self.start_index);
        tail.iter().chain(head.iter()).copied()
    }

    pub fn traversal_word(&self) -> Vec<Event> {
        self.traversal().collect()
    }

    /// The same cyclic word with the anchor moved `k` steps forward.
    pub fn rotated(&self, k: usize) -> FrontCode {
        FrontCode {
            events: self.events.clone(),
            start_index: (self.start_index + k) % self.events.len(),
        }
    }

    /// The same knot traversed in the opposite direction.
    ///
    /// Reversing the orientation reverses the word and swaps every cusp
    /// direction; crossing signs are unchanged.
    pub fn reversed(&self) -> FrontCode {
        let mut word = self.traversal_word();
        word.reverse();
        for e in word.iter_mut() {
            if let Event::Cusp(dir) = e {
                *dir = dir.flipped();
            }
        }
        FrontCode { events: word, start_index: 0 }
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::UnderPass(..))).count()
    }

    pub fn cusp_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::Cusp(_))).count()
    }

    pub fn is_crossingless(&self) -> bool {
        self.crossing_count() == 0
    }

    pub fn max_crossing_id(&self) -> u32 {
        self.events.iter().filter_map(Event::crossing_id).max().unwrap_or(0)
    }

    pub fn invariants(&self) -> FrontInvariants {
        let mut writhe = 0;
        let mut up = 0;
        let mut down = 0;
        let mut unders = 0;
        for e in &self.events {
            match e {
                Event::Cusp(CuspDirection::Up) => up += 1,
                Event::Cusp(CuspDirection::Down) => down += 1,
                Event::UnderPass(_, sign) => {
                    writhe += sign.value();
                    unders += 1;
                }
                Event::OverPass(_) => {}
            }
        }
        let cusp_count = up + down;
        FrontInvariants {
            writhe,
            cusp_count,
            up_cusps: up,
            down_cusps: down,
            tb: writhe - (cusp_count / 2) as i64,
            rotation_numerator: down as i64 - up as i64,
            strand_count: cusp_count + unders,
        }
    }

    /// Strand count of a crossingless code, which equals `2 |tb|`.
    /// `None` when the code has crossings.
    pub fn s_min(&self) -> Option<usize> {
        if !self.is_crossingless() {
            return None;
        }
        let inv = self.invariants();
        debug_assert_eq!(inv.strand_count as i64, 2 * inv.tb.abs());
        Some(inv.strand_count)
    }
}

impl fmt::Display for FrontCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.traversal().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for FrontCode {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FrontCode::parse(s)
    }
}

impl Serialize for FrontCode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FrontCode {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        FrontCode::parse(&text).map_err(serde::de::Error::custom)
    }
}

fn validate(events: &[Event]) -> Result<(), ValidationError> {
    if events.is_empty() {
        return Err(ValidationError::Empty);
    }
    // (over seen, under seen) per crossing id
    let mut roles: BTreeMap<u32, (bool, bool)> = BTreeMap::new();
    let mut cusps = 0;
    for e in events {
        match *e {
            Event::Cusp(_) => cusps += 1,
            Event::OverPass(id) => {
                if id == 0 {
                    return Err(ValidationError::ZeroCrossingId);
                }
                let slot = roles.entry(id).or_default();
                if slot.0 {
                    return Err(ValidationError::DuplicateOver(id));
                }
                slot.0 = true;
            }
            Event::UnderPass(id, _) => {
                if id == 0 {
                    return Err(ValidationError::ZeroCrossingId);
                }
                let slot = roles.entry(id).or_default();
                if slot.1 {
                    return Err(ValidationError::DuplicateUnder(id));
                }
                slot.1 = true;
            }
        }
    }
    for (&id, &(over, under)) in &roles {
        if !over {
            return Err(ValidationError::MissingOver(id));
        }
        if !under {
            return Err(ValidationError::MissingUnder(id));
        }
    }
    if cusps < 2 || cusps % 2 != 0 {
        return Err(ValidationError::CuspCount(cusps));
    }
    Ok(())
}

fn parse_events(text: &str) -> Result<Vec<Event>, ParseError> {
    let mut events = Vec::new();
    let mut offset = 0;
    for raw in text.split(',') {
        let start = offset;
        offset += raw.len() + 1;
        let token: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        let syntax = |message: String| ParseError::Syntax { position: start, message };
        let mut chars = token.chars();
        let event = match chars.next() {
            None => return Err(syntax("empty event".into())),
            Some('U') if token.len() == 1 => Event::Cusp(CuspDirection::Up),
            Some('D') if token.len() == 1 => Event::Cusp(CuspDirection::Down),
            Some('o') => Event::OverPass(parse_id(&token[1..]).map_err(syntax)?),
            Some('u') => {
                let body = &token[1..];
                let (digits, sign) = match body.chars().last() {
                    Some('+') => (&body[..body.len() - 1], Sign::Positive),
                    Some('-') => (&body[..body.len() - 1], Sign::Negative),
                    _ => return Err(syntax(format!("under-pass `{token}` lacks a sign"))),
                };
                Event::UnderPass(parse_id(digits).map_err(syntax)?, sign)
            }
            Some(_) => return Err(syntax(format!("unrecognised event `{token}`"))),
        };
        events.push(event);
    }
    Ok(events)
}

fn parse_id(digits: &str) -> Result<u32, String> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("expected a crossing number, found `{digits}`"));
    }
    digits.parse().map_err(|e| format!("crossing number `{digits}`: {e}"))
}
