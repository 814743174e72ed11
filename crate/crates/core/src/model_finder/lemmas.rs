use serde::Serialize;

use crate::rack::{FiniteRack, LegendrianIndex};

/// Outcome of one identity checked over every element tuple and exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub cases: u64,
    /// First failing instance, as a readable assignment.
    pub witness: Option<String>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub order: usize,
    pub n: Option<LegendrianIndex>,
    pub checks: Vec<IdentityCheck>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

struct Checker {
    name: &'static str,
    statement: &'static str,
    cases: u64,
    witness: Option<String>,
}

impl Checker {
    fn new(name: &'static str, statement: &'static str) -> Self {
        Checker { name, statement, cases: 0, witness: None }
    }

    fn case(&mut self, holds: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !holds && self.witness.is_none() {
            self.witness = Some(describe());
        }
    }

    fn finish(self) -> IdentityCheck {
        IdentityCheck { name: self.name, statement: self.statement, cases: self.cases, witness: self.witness }
    }
}

/// Exhaustively check the universal rack identities, plus the n-Legendrian
/// ones when `n` is given. Exponents range over `1..=2m+2`.
pub fn check_lemma_suite(rack: &FiniteRack, n: Option<LegendrianIndex>) -> LemmaReport {
    let m = rack.order();
    let max_k = 2 * m as i64 + 2;
    let pow = |e: i64, x: usize| rack.pow_unchecked(e, x);
    let elems = || 0..m;
    let mut checks = Vec::new();

    let mut c = Checker::new("square-absorption", "x * (y * y) = x * y");
    for x in elems() {
        for y in elems() {
            c.case(rack.op(x, rack.op(y, y)) == rack.op(x, y), || format!("x={x}, y={y}"));
        }
    }
    checks.push(c.finish());

    let mut c = Checker::new("power-square", "a^(k+1) = a^k * a^k");
    for a in elems() {
        for k in 1..=max_k {
            let ak = pow(k, a);
            c.case(pow(k + 1, a) == rack.op(ak, ak), || format!("a={a}, k={k}"));
        }
    }
    checks.push(c.finish());

    let mut c = Checker::new("power-absorption", "x * y^(k+1) = x * y");
    for x in elems() {
        for y in elems() {
            for k in 1..=max_k {
                c.case(rack.op(x, pow(k + 1, y)) == rack.op(x, y), || format!("x={x}, y={y}, k={k}"));
            }
        }
    }
    checks.push(c.finish());

    let mut c = Checker::new("power-of-product", "(a * b)^k = a^k * b");
    for a in elems() {
        for b in elems() {
            for k in 1..=max_k {
                c.case(pow(k, rack.op(a, b)) == rack.op(pow(k, a), b), || format!("a={a}, b={b}, k={k}"));
            }
        }
    }
    checks.push(c.finish());

    let mut c = Checker::new("iterated-power", "(a^(k+1))^(k+1) = a^(2k+1)");
    for a in elems() {
        for k in 1..=max_k {
            c.case(pow(k + 1, pow(k + 1, a)) == pow(2 * k + 1, a), || format!("a={a}, k={k}"));
        }
    }
    checks.push(c.finish());

    if let Some(n) = n {
        let odd = 2 * n.0 as i64 + 1;

        let mut c = Checker::new("legendrian-period", "a^(2n+2) = a");
        for a in elems() {
            c.case(pow(n.period(), a) == a, || format!("a={a}"));
        }
        checks.push(c.finish());

        let mut c = Checker::new("cancellation", "a^(2n+1) = b^(2n+1) => a = b");
        for a in elems() {
            for b in elems() {
                c.case(pow(odd, a) != pow(odd, b) || a == b, || format!("a={a}, b={b}"));
            }
        }
        checks.push(c.finish());

        let mut c = Checker::new("cusp-inverse", "a^(n+1) = a^-(n+2)");
        for a in elems() {
            c.case(pow(n.cusp_exponent(), a) == pow(-(n.0 as i64 + 2), a), || format!("a={a}"));
        }
        checks.push(c.finish());
    }

    LemmaReport { order: m, n, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_seven_passes_universal_identities() {
        let r = check_lemma_suite(&FiniteRack::cyclic(7).unwrap(), None);
        assert_eq!(r.checks.len(), 5);
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn cyclic_three_cancellation() {
        let r = check_lemma_suite(&FiniteRack::cyclic(3).unwrap(), Some(LegendrianIndex(1)));
        assert_eq!(r.checks.len(), 8);
        assert!(r.all_passed());
    }

    #[test]
    fn trivial_rack_passes() {
        let r = check_lemma_suite(&FiniteRack::trivial(4).unwrap(), Some(LegendrianIndex(3)));
        assert!(r.all_passed());
    }

    #[test]
    fn wrong_index_fails_with_witness() {
        // C_3 is not 2-Legendrian, so the n=2 identities must catch it.
        let r = check_lemma_suite(&FiniteRack::cyclic(3).unwrap(), Some(LegendrianIndex(2)));
        let failed: Vec<_> = r.failures().map(|c| c.name).collect();
        assert!(failed.contains(&"legendrian-period"));
        assert!(r.failures().all(|c| c.witness.is_some()));
    }
}
