//! Named target racks and their textual descriptors.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::rack::{FiniteRack, RackError, RackTable};

#[derive(Debug, Error)]
pub enum TargetError {
    #[error("unrecognised rack descriptor `{0}` (expected ck:<k>, dihedral:<k>, trivial:<m> or a JSON file)")]
    Unrecognised(String),
    #[error("rack descriptor `{0}`: {1}")]
    Rack(String, RackError),
    #[error("reading rack table {0}: {1}")]
    Io(String, std::io::Error),
    #[error("parsing rack table {0}: {1}")]
    Json(String, serde_json::Error),
}

/// A finite rack together with the descriptor that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedRack {
    pub name: String,
    pub rack: FiniteRack,
}

impl NamedRack {
    pub fn new(name: impl Into<String>, rack: FiniteRack) -> Self {
        NamedRack { name: name.into(), rack }
    }

    pub fn cyclic(k: usize) -> Result<Self, RackError> {
        Ok(Self::new(format!("ck:{k}"), FiniteRack::cyclic(k)?))
    }

    pub fn dihedral(k: usize) -> Result<Self, RackError> {
        Ok(Self::new(format!("dihedral:{k}"), FiniteRack::dihedral(k)?))
    }

    pub fn trivial(m: usize) -> Result<Self, RackError> {
        Ok(Self::new(format!("trivial:{m}"), FiniteRack::trivial(m)?))
    }

    /// Resolve `ck:<k>`, `dihedral:<k>`, `trivial:<m>`, or a path to a rack
    /// table JSON file.
    pub fn resolve(descriptor: &str) -> Result<Self, TargetError> {
        let d = descriptor.trim();
        let wrap = |e: RackError| TargetError::Rack(d.to_string(), e);
        if let Some((kind, arg)) = d.split_once(':') {
            if let Ok(k) = arg.parse::<usize>() {
                match kind {
                    "ck" => return Self::cyclic(k).map_err(wrap),
                    "dihedral" => return Self::dihedral(k).map_err(wrap),
                    "trivial" => return Self::trivial(k).map_err(wrap),
                    _ => {}
                }
            }
        }
        let path = Path::new(d);
        if path.is_file() {
            let text = std::fs::read_to_string(path).map_err(|e| TargetError::Io(d.to_string(), e))?;
            let table: RackTable =
                serde_json::from_str(&text).map_err(|e| TargetError::Json(d.to_string(), e))?;
            let rack = FiniteRack::from_rack_table(&table).map_err(wrap)?;
            return Ok(Self::new(d, rack));
        }
        Err(TargetError::Unrecognised(d.to_string()))
    }
}

impl FromStr for NamedRack {
    type Err = TargetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::resolve(s)
    }
}

impl fmt::Display for NamedRack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}
