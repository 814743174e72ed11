use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use legrack_core::fixtures::KnotFixture;
use legrack_core::FrontCode;

/// A knot read from the command line or a file.
#[derive(Debug, Clone)]
pub struct Knot {
    pub name: String,
    pub code: FrontCode,
}

/// Accept either a code string or a path to a file holding one.
///
/// Files are JSON `{"name": ..., "code": ...}` or a bare code on one line.
pub fn knot(arg: &str) -> Result<Knot> {
    let path = Path::new(arg);
    if path.is_file() {
        return knot_file(path);
    }
    let code = FrontCode::parse(arg).with_context(|| format!("cannot parse front code `{arg}`"))?;
    Ok(Knot { name: code.to_string(), code })
}

pub fn knot_file(path: &Path) -> Result<Knot> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let fx: KnotFixture =
            serde_json::from_str(trimmed).with_context(|| format!("invalid knot file {}", path.display()))?;
        return Ok(Knot { name: fx.name, code: fx.code });
    }
    let code = FrontCode::parse(trimmed).with_context(|| format!("invalid front code in {}", path.display()))?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Ok(Knot { name, code })
}

/// Knot files of a directory (`*.json`, `*.txt`, `*.code`), sorted by name.
pub fn knot_dir(dir: &Path) -> Result<Vec<(PathBuf, Knot)>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("cannot list {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.is_file()
                && matches!(p.extension().and_then(|e| e.to_str()), Some("json" | "txt" | "code"))
        })
        .collect();
    paths.sort();
    paths.into_iter().map(|p| knot_file(&p).map(|k| (p, k))).collect()
}

/// `p^k` list such as `3,5,9` or `3^2`.
pub fn budget(spec: &str) -> Result<Vec<(u64, u32)>> {
    spec.split(',')
        .map(|item| {
            let item = item.trim();
            let (p, k) = match item.split_once('^') {
                Some((p, k)) => (p.parse::<u64>()?, k.parse::<u32>()?),
                None => (item.parse::<u64>()?, 1),
            };
            Ok((p, k))
        })
        .collect::<Result<Vec<_>, std::num::ParseIntError>>()
        .with_context(|| format!("invalid budget `{spec}` (expected e.g. 3,5,3^2)"))
}
