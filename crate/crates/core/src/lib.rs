//! Legendrian rack invariants computed from front-projection codes.
//!
//! A knot is given as a cyclic word of cusps and crossing events
//! ([`front_code`]). [`presentation`] turns it into generators and
//! relations, [`coloring`] counts homomorphisms into finite racks, and
//! [`moves`] rewrites codes by Legendrian Reidemeister moves.

pub mod coloring;
pub mod fixtures;
pub mod front_code;
pub mod model_finder;
pub mod moves;
pub mod presentation;
pub mod rack;
pub mod target;

pub use coloring::{count_colorings, distinguish_unknots, nontriviality_certificate, ColoringReport, Verdict};
pub use front_code::{CuspDirection, Event, FrontCode, Sign};
pub use presentation::{extract, Presentation};
pub use rack::{FiniteRack, LegendrianIndex};
pub use target::NamedRack;
