//! Knot fixtures shipped with the crate.

use serde::{Deserialize, Serialize};

use crate::front_code::FrontCode;

/// On-disk form of a fixture: `{"name": ..., "code": ...}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotFixture {
    pub name: String,
    pub code: FrontCode,
}

macro_rules! fixture_files {
    ($($name:literal),* $(,)?) => {
        const RAW: &[&str] = &[$(include_str!(concat!("../fixtures/", $name, ".json"))),*];
    };
}

fixture_files!(
    "unknot_2",
    "unknot_4",
    "unknot_6",
    "unknot_8",
    "unknot_10_alt",
    "unknot_10_block",
    "unknot_16",
    "unknot_32",
    "trefoil",
    "triangle",
);

pub fn all() -> Vec<KnotFixture> {
    RAW.iter().map(|s| serde_json::from_str(s).expect("bundled fixture parses")).collect()
}

pub fn get(name: &str) -> Option<KnotFixture> {
    all().into_iter().find(|f| f.name == name)
}

/// Crossingless unknot with `strands` strands, as alternating cusps.
pub fn crossingless_unknot(strands: usize) -> FrontCode {
    assert!(strands >= 2 && strands.is_multiple_of(2), "strand count must be even and at least 2");
    let word: Vec<&str> = (0..strands).map(|i| if i % 2 == 0 { "U" } else { "D" }).collect();
    FrontCode::parse(&word.join(",")).expect("alternating cusps form a valid code")
}

pub fn minimal_unknot() -> FrontCode {
    crossingless_unknot(2)
}

pub fn trefoil() -> FrontCode {
    get("trefoil").expect("bundled").code
}

/// The pair of 10-strand unknots with equal presentations but different
/// cusp orientations.
pub fn ten_strand_pair() -> (FrontCode, FrontCode) {
    (get("unknot_10_alt").expect("bundled").code, get("unknot_10_block").expect("bundled").code)
}
