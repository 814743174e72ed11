use std::fmt;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use legrack_core::coloring::{
    count_colorings, distinguish_unknots, odd_prime_powers_up_to, CertificateSearch, ColoringReport, Verdict,
};
use legrack_core::model_finder::{self, check_lemma_suite, check_predicate_axioms, Constraint};
use legrack_core::moves::{self, MoveSite};
use legrack_core::presentation::extract;
use legrack_core::rack::LegendrianIndex;
use legrack_core::target::NamedRack;
use serde::Serialize;
use serde_json::json;

use crate::input;
use crate::output::Output;

/// How a command failed; decides the exit code.
pub enum Failure {
    Usage(String),
    Domain(anyhow::Error),
    /// The command ran but found a violation; the report is still printed.
    Reported(Output),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Domain(e)
    }
}

impl fmt::Debug for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "Usage({m})"),
            Failure::Domain(e) => write!(f, "Domain({e:#})"),
            Failure::Reported(_) => f.write_str("Reported"),
        }
    }
}

type CmdResult = std::result::Result<Output, Failure>;

fn target(descriptor: &str) -> Result<NamedRack> {
    NamedRack::resolve(descriptor).with_context(|| format!("bad target `{descriptor}`"))
}

fn n_range(n_min: u32, n_max: u32) -> std::result::Result<Vec<LegendrianIndex>, Failure> {
    if n_min > n_max {
        return Err(Failure::Usage(format!("--n-min {n_min} exceeds --n-max {n_max}")));
    }
    Ok((n_min..=n_max).map(LegendrianIndex).collect())
}

pub fn validate(code: &str) -> CmdResult {
    let knot = input::knot(code)?;
    let text = format!("valid: {}", knot.code);
    Ok(Output::new("validate", json!({ "valid": true, "code": knot.code.to_string() }), text))
}

pub fn invariants(code: &str) -> CmdResult {
    let knot = input::knot(code)?;
    let inv = knot.code.invariants();
    let s_min = knot.code.s_min();
    let text = format!(
        "code: {}\nwrithe: {}\ncusps: {} ({} up, {} down)\ntb: {}\nrotation: {}/2\nstrands: {}",
        knot.code, inv.writhe, inv.cusp_count, inv.up_cusps, inv.down_cusps, inv.tb, inv.rotation_numerator,
        inv.strand_count
    );
    let body = json!({
        "code": knot.code.to_string(),
        "invariants": inv,
        "crossings": knot.code.crossing_count(),
        "s_min": s_min,
    });
    Ok(Output::new("invariants", body, text))
}

pub fn present(code: &str) -> CmdResult {
    let knot = input::knot(code)?;
    let p = extract(&knot.code);
    let text = p.to_string();
    Ok(Output::new("presentation", json!({ "code": knot.code.to_string(), "presentation": p }), text))
}

fn report_row(code: &str, r: &ColoringReport) -> Vec<String> {
    vec![code.to_string(), r.n.to_string(), r.target.clone(), r.count.to_string(), r.surjective_count.to_string()]
}

fn coloring_header() -> Vec<String> {
    ["code", "n", "target", "count", "surjective_count"].map(String::from).to_vec()
}

pub fn color(code: &str, n: u32, targets: &[String]) -> CmdResult {
    let knot = input::knot(code)?;
    let p = extract(&knot.code);
    let n = LegendrianIndex(n);
    let mut reports = Vec::new();
    for t in targets {
        let t = target(t)?;
        reports.push(count_colorings(&p, n, &t).context("coloring failed")?);
    }
    let code_text = knot.code.to_string();
    let rows = reports.iter().map(|r| report_row(&code_text, r)).collect();
    let text = reports
        .iter()
        .map(|r| format!("{} n={}: {} colorings ({} surjective)", r.target, r.n, r.count, r.surjective_count))
        .collect::<Vec<_>>()
        .join("\n");
    let body = if reports.len() == 1 {
        json!({ "code": code_text, "report": reports[0] })
    } else {
        json!({ "code": code_text, "reports": reports })
    };
    Ok(Output::new("coloring", body, text).with_tsv(coloring_header(), rows))
}

pub fn distinguish(a: &str, b: &str, budget: Option<&str>) -> CmdResult {
    let (ka, kb) = (input::knot(a)?, input::knot(b)?);
    let budget = match budget {
        Some(spec) => input::budget(spec)?,
        None => {
            let s = |k: &input::Knot| k.code.s_min().unwrap_or(0);
            odd_prime_powers_up_to(s(&ka).max(s(&kb)) as u64)
        }
    };
    let verdict = distinguish_unknots(&ka.code, &kb.code, &budget).context("distinguish failed")?;
    let text = match &verdict {
        Verdict::Distinguished { witness: w } => format!(
            "DISTINGUISHED by C_{} (p={}, k={}, n={}): {} vs {} colorings",
            w.modulus, w.p, w.k, w.n, w.count_a, w.count_b
        ),
        Verdict::Inconclusive { s_min_a, s_min_b } => {
            format!("INCONCLUSIVE (strand counts {s_min_a} and {s_min_b})")
        }
    };
    let body = json!({ "a": ka.name, "b": kb.name, "result": verdict });
    Ok(Output::new("distinguish", body, text))
}

pub fn trivial_check(code: &str, n_min: u32, n_max: u32, max_order: usize) -> CmdResult {
    let knot = input::knot(code)?;
    let ns = n_range(n_min, n_max)?;
    let search = CertificateSearch::new(max_order).context("target enumeration failed")?;
    let cert = search.search(&extract(&knot.code), &ns).context("certificate search failed")?;
    let text = match &cert {
        None => "no certificate".to_string(),
        Some(c) => format!("certificate: n={} target={} coloring={:?} ({:?})", c.n, c.target, c.coloring, c.reason),
    };
    let body = json!({
        "code": knot.code.to_string(),
        "n_min": n_min,
        "n_max": n_max,
        "max_order": max_order,
        "certificate": cert,
    });
    Ok(Output::new("trivial-check", body, text))
}

pub fn enumerate(order: usize, legendrian: Option<u32>, quandle: bool, out: Option<&Path>) -> CmdResult {
    let constraint = match (legendrian, quandle) {
        (Some(n), _) => Constraint::Legendrian(LegendrianIndex(n)),
        (None, true) => Constraint::Quandles,
        (None, false) => Constraint::AllRacks,
    };
    let result = model_finder::enumerate(order, constraint).context("enumeration failed")?;
    let tables: Vec<_> = result.representatives.iter().map(|r| r.to_table()).collect();
    if let Some(dir) = out {
        fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
        for (i, t) in tables.iter().enumerate() {
            let path = dir.join(format!("rack_{order}_{i:04}.json"));
            let text = serde_json::to_string(t).expect("table json") + "\n";
            fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?;
        }
    }
    let count = tables.len();
    let text = format!("order {order}, {constraint}: {count} up to isomorphism ({} labeled)", result.total_labeled);
    let mut body = json!({
        "order": order,
        "constraint": constraint.to_string(),
        "count": count,
        "total_labeled": result.total_labeled,
    });
    if out.is_none() {
        body["racks"] = json!(tables);
    }
    let row = vec![order.to_string(), constraint.to_string(), count.to_string()];
    Ok(Output::new("enumerate", body, text)
        .with_tsv(["order", "constraint", "count"].map(String::from).to_vec(), vec![row]))
}

pub fn moves_list(code: &str) -> CmdResult {
    let knot = input::knot(code)?;
    let sites = moves::applicable(&knot.code);
    let specs: Vec<String> = sites.iter().map(ToString::to_string).collect();
    let text = specs.join("\n");
    let body = json!({ "code": knot.code.to_string(), "sites": specs });
    Ok(Output::new("moves-list", body, text))
}

pub fn moves_apply(code: &str, site: &str) -> CmdResult {
    let knot = input::knot(code)?;
    let site: MoveSite = site.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
    let result = moves::apply(&knot.code, &site).context("move not applicable")?;
    let text = result.to_string();
    let body = json!({ "code": knot.code.to_string(), "site": site.to_string(), "result": result.to_string() });
    Ok(Output::new("moves-apply", body, text))
}

fn parse_check(spec: &str) -> std::result::Result<(LegendrianIndex, String), Failure> {
    let bad = || Failure::Usage(format!("bad --check `{spec}` (expected n=<n>,target=<t>)"));
    let (mut n, mut t) = (None, None);
    for part in spec.split(',') {
        match part.trim().split_once('=') {
            Some(("n", v)) => n = Some(v.parse::<u32>().map_err(|_| bad())?),
            Some(("target", v)) => t = Some(v.to_string()),
            _ => return Err(bad()),
        }
    }
    Ok((LegendrianIndex(n.ok_or_else(bad)?), t.ok_or_else(bad)?))
}

#[derive(Serialize)]
struct Violation {
    step: usize,
    site: String,
    code: String,
    what: String,
}

pub fn moves_fuzz(code: &str, steps: usize, seed: u64, checks: &[String]) -> CmdResult {
    let knot = input::knot(code)?;
    let mut tracked = Vec::new();
    for spec in checks {
        let (n, t) = parse_check(spec)?;
        let t = target(&t)?;
        let base = count_colorings(&extract(&knot.code), n, &t).context("coloring failed")?.count;
        tracked.push((n, t, base));
    }
    let base = knot.code.invariants();
    let mut violations = Vec::new();
    let trace = moves::random_walk_trace(&knot.code, steps, seed);
    for (i, (site, code)) in trace.iter().enumerate() {
        let inv = code.invariants();
        let mut report = |what: String| {
            violations.push(Violation { step: i + 1, site: site.to_string(), code: code.to_string(), what })
        };
        if inv.tb != base.tb {
            report(format!("tb {} -> {}", base.tb, inv.tb));
        }
        if inv.rotation_numerator != base.rotation_numerator {
            report(format!("rotation {} -> {}", base.rotation_numerator, inv.rotation_numerator));
        }
        let p = extract(code);
        for (n, t, want) in &tracked {
            let got = count_colorings(&p, *n, t).context("coloring failed")?.count;
            if got != *want {
                report(format!("{} n={n}: {want} -> {got}", t.name));
            }
        }
    }
    let final_code = trace.last().map(|(_, c)| c.to_string()).unwrap_or_else(|| knot.code.to_string());
    let sites: Vec<String> = trace.iter().map(|(s, _)| s.to_string()).collect();
    let text = format!(
        "{} steps from {} (seed {seed}): {} violations\nfinal: {final_code}",
        trace.len(),
        knot.code,
        violations.len()
    );
    let clean = violations.is_empty();
    let body = json!({
        "code": knot.code.to_string(),
        "seed": seed,
        "steps": sites,
        "final": final_code,
        "checks": tracked.iter().map(|(n, t, c)| json!({ "n": n, "target": t.name, "count": c })).collect::<Vec<_>>(),
        "violations": violations,
    });
    let out = Output::new("moves-fuzz", body, text);
    if clean {
        Ok(out)
    } else {
        Err(Failure::Reported(out))
    }
}

pub fn verify_lemmas(descriptor: &str, n: Option<u32>) -> CmdResult {
    let t = target(descriptor)?;
    let report = check_lemma_suite(&t.rack, n.map(LegendrianIndex));
    let text = report
        .checks
        .iter()
        .map(|c| match &c.witness {
            None => format!("ok   {} ({} cases)", c.name, c.cases),
            Some(w) => format!("FAIL {}: {w}", c.name),
        })
        .collect::<Vec<_>>()
        .join("\n");
    let passed = report.all_passed();
    let out = Output::new("verify-lemmas", json!({ "target": t.name, "passed": passed, "report": report }), text);
    if passed {
        Ok(out)
    } else {
        Err(Failure::Reported(out))
    }
}

pub fn verify_predicates(descriptor: &str, n: u32) -> CmdResult {
    let t = target(descriptor)?;
    let report = check_predicate_axioms(&t.rack, LegendrianIndex(n)).context("predicate check failed")?;
    let text = report
        .axioms
        .iter()
        .map(|a| match a.witness {
            None => format!("ok   {}", a.name),
            Some(w) => format!("FAIL {} at {w:?}", a.name),
        })
        .collect::<Vec<_>>()
        .join("\n");
    let passed = report.all_passed();
    let out =
        Output::new("verify-predicates", json!({ "target": t.name, "passed": passed, "report": report }), text);
    if passed {
        Ok(out)
    } else {
        Err(Failure::Reported(out))
    }
}

pub fn table(dir: &Path, n_min: u32, n_max: u32, max_order: usize, targets: &[String]) -> CmdResult {
    let ns = n_range(n_min, n_max)?;
    let knots = input::knot_dir(dir)?;
    if knots.is_empty() {
        return Err(anyhow::anyhow!("no knot files in {}", dir.display()).into());
    }
    let targets = targets.iter().map(|t| target(t)).collect::<Result<Vec<_>>>()?;
    let search = CertificateSearch::new(max_order).context("target enumeration failed")?;

    let mut header: Vec<String> = ["knot", "code", "n", "certificate", "certificate_target"].map(String::from).to_vec();
    header.extend(targets.iter().map(|t| format!("count:{}", t.name)));
    let mut rows = Vec::new();
    let mut records = Vec::new();
    for (_, knot) in &knots {
        let p = extract(&knot.code);
        for &n in &ns {
            let cert = search.search(&p, &[n]).context("certificate search failed")?;
            let mut counts = Vec::new();
            for t in &targets {
                if t.rack.is_legendrian(n) {
                    counts.push(Some(count_colorings(&p, n, t).context("coloring failed")?.count));
                } else {
                    counts.push(None);
                }
            }
            let mut row = vec![
                knot.name.clone(),
                knot.code.to_string(),
                n.to_string(),
                u8::from(cert.is_some()).to_string(),
                cert.as_ref().map_or("-".to_string(), |c| c.target.clone()),
            ];
            row.extend(counts.iter().map(|c| c.map_or("-".to_string(), |c| c.to_string())));
            rows.push(row);
            records.push(json!({
                "knot": knot.name,
                "code": knot.code.to_string(),
                "n": n,
                "certificate": cert,
                "counts": targets.iter().zip(&counts).map(|(t, c)| json!({ "target": t.name, "count": c })).collect::<Vec<_>>(),
            }));
        }
    }
    let text = rows.iter().map(|r| r.join("  ")).collect::<Vec<_>>().join("\n");
    let body = json!({ "n_min": n_min, "n_max": n_max, "max_order": max_order, "rows": records });
    Ok(Output::new("table", body, text).with_tsv(header, rows))
}
