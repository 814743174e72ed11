//! Finite racks stored as operation tables.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index `n` of an n-Legendrian rack (`x^(2n+2) = x`). `n = 0` gives quandles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LegendrianIndex(pub u32);

impl LegendrianIndex {
    /// Exponent of the cusp relation, `n + 1`.
    pub fn cusp_exponent(self) -> i64 {
        self.0 as i64 + 1
    }

    /// The Legendrian period `2n + 2`.
    pub fn period(self) -> i64 {
        2 * self.0 as i64 + 2
    }
}

impl fmt::Display for LegendrianIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RackError {
    #[error("power exponent {0} is undefined (0 and -1 are excluded)")]
    ExponentDomain(i64),
    #[error("element {element} out of range for a rack of order {order}")]
    ElementRange { element: usize, order: usize },
    #[error("rack order must be at least 1")]
    EmptyRack,
    #[error("{0}")]
    Violation(AxiomViolation),
}

/// First axiom failure found by [`FiniteRack::from_table`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum AxiomViolation {
    /// Table rows have the wrong length or an entry is out of range.
    Shape { row: usize, column: usize },
    /// `x -> x * y` is not injective: `x1 * y = x2 * y`.
    RightTranslation { y: usize, x1: usize, x2: usize },
    /// `(x*y)*z != (x*z)*(y*z)`.
    SelfDistributivity { x: usize, y: usize, z: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AxiomViolation::Shape { row, column } => {
                write!(f, "malformed table entry at row {row}, column {column}")
            }
            AxiomViolation::RightTranslation { y, x1, x2 } => write!(
                f,
                "right translation by {y} is not a permutation: {x1}*{y} = {x2}*{y}"
            ),
            AxiomViolation::SelfDistributivity { x, y, z } => write!(
                f,
                "self-distributivity fails at (x, y, z) = ({x}, {y}, {z})"
            ),
        }
    }
}

/// A finite rack on `{0, .., order-1}`.
///
/// Both operation tables are stored row-major: `star[x * order + y] = x * y`
/// and `slash[x * order + y] = x / y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteRack {
    order: usize,
    star: Vec<u8>,
    slash: Vec<u8>,
}

impl fmt::Debug for FiniteRack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRack").field("order", &self.order).field("star", &self.rows()).finish()
    }
}

/// JSON form `{ "order": m, "star": [[...], ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RackTable {
    pub order: usize,
    pub star: Vec<Vec<usize>>,
}

impl FiniteRack {
    /// Largest supported order; elements are stored as bytes.
    pub const MAX_ORDER: usize = 255;

    /// Verify the rack axioms on a square table and build the rack.
    ///
    /// Returns `Err(RackError::Violation)` carrying the first failing axiom
    /// and a witness.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, RackError> {
        match verify_rack(rows) {
            Ok(rack) => Ok(rack),
            Err(violation) => Err(RackError::Violation(violation)),
        }
    }

    /// Build from a flat row-major table without checking self-distributivity.
    /// Columns must already be permutations.
    pub(crate) fn from_flat_unchecked(order: usize, star: Vec<u8>) -> Self {
        let mut slash = vec![0u8; order * order];
        for y in 0..order {
            for x in 0..order {
                let xy = star[x * order + y] as usize;
                slash[xy * order + y] = x as u8;
            }
        }
        FiniteRack { order, star, slash }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.star[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize, y: usize) -> usize {
        self.slash[x * self.order + y] as usize
    }

    pub fn star_flat(&self) -> &[u8] {
        &self.star
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| (0..self.order).map(|y| self.op(x, y)).collect())
            .collect()
    }

    pub fn to_table(&self) -> RackTable {
        RackTable { order: self.order, star: self.rows() }
    }

    pub fn from_rack_table(table: &RackTable) -> Result<Self, RackError> {
        if table.star.len() != table.order {
            return Err(RackError::Violation(AxiomViolation::Shape {
                row: table.star.len().min(table.order),
                column: 0,
            }));
        }
        Self::from_table(&table.star)
    }

    /// `x^e` following the rack power function: `x^1 = x`, `x^e = x^(e-1) * x`
    /// for `e > 1`, `x^-2 = x / x`, `x^e = x^(e+1) / x` for `e < -2`.
    pub fn pow(&self, e: i64, x: usize) -> Result<usize, RackError> {
        if e == 0 || e == -1 {
            return Err(RackError::ExponentDomain(e));
        }
        if x >= self.order {
            return Err(RackError::ElementRange { element: x, order: self.order });
        }
        Ok(self.pow_unchecked(e, x))
    }

    /// [`pow`](Self::pow) for callers that already ruled out `e in {0, -1}`.
    pub(crate) fn pow_unchecked(&self, e: i64, x: usize) -> usize {
        debug_assert!(e != 0 && e != -1);
        let mut acc = x;
        if e > 0 {
            for _ in 1..e {
                acc = self.op(acc, x);
            }
        } else {
            acc = self.inv(x, x);
            for _ in 2..(-e) {
                acc = self.inv(acc, x);
            }
        }
        acc
    }

    /// `x^(2n+2) = x` for every element.
    pub fn is_legendrian(&self, n: LegendrianIndex) -> bool {
        let period = n.period();
        (0..self.order).all(|x| self.pow_unchecked(period, x) == x)
    }

    pub fn is_quandle(&self) -> bool {
        (0..self.order).all(|x| self.op(x, x) == x)
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.op(x, y) == x))
    }

    /// Table of `x -> x^e` for all elements.
    pub fn power_map(&self, e: i64) -> Result<Vec<usize>, RackError> {
        (0..self.order).map(|x| self.pow(e, x)).collect()
    }

    /// The cyclic rack `C_k`: `i * j = (i + 1) mod k`.
    pub fn cyclic(k: usize) -> Result<Self, RackError> {
        Self::check_order(k)?;
        let star = (0..k).flat_map(|i| (0..k).map(move |_| ((i + 1) % k) as u8)).collect();
        Ok(Self::from_flat_unchecked(k, star))
    }

    /// The dihedral quandle `R_k`: `i * j = (2j - i) mod k`.
    pub fn dihedral(k: usize) -> Result<Self, RackError> {
        Self::check_order(k)?;
        let star = (0..k)
            .flat_map(|i| (0..k).map(move |j| ((2 * j + k - i) % k) as u8))
            .collect();
        Ok(Self::from_flat_unchecked(k, star))
    }

    /// The trivial rack of order `m`: `x * y = x`.
    pub fn trivial(m: usize) -> Result<Self, RackError> {
        Self::check_order(m)?;
        let star = (0..m).flat_map(|i| (0..m).map(move |_| i as u8)).collect();
        Ok(Self::from_flat_unchecked(m, star))
    }

    /// The permutation rack `x * y = perm[x]`.
    pub fn permutation(perm: &[usize]) -> Result<Self, RackError> {
        let m = perm.len();
        let rows: Vec<Vec<usize>> = perm.iter().map(|&p| vec![p; m]).collect();
        Self::from_table(&rows)
    }

    fn check_order(m: usize) -> Result<(), RackError> {
        if m == 0 {
            return Err(RackError::EmptyRack);
        }
        if m > Self::MAX_ORDER {
            return Err(RackError::ElementRange { element: m, order: Self::MAX_ORDER });
        }
        Ok(())
    }

    /// Relabel elements through `perm` (old element `x` becomes `perm[x]`).
    pub fn relabeled(&self, perm: &[usize]) -> FiniteRack {
        let m = self.order;
        let mut star = vec![0u8; m * m];
        for x in 0..m {
            for y in 0..m {
                star[perm[x] * m + perm[y]] = perm[self.op(x, y)] as u8;
            }
        }
        Self::from_flat_unchecked(m, star)
    }
}

/// Check the rack axioms exhaustively.
///
/// Right translations must be permutations (which makes `/` well defined and
/// gives both right-inverse laws) and `*` must be self-distributive. The
/// second distributive law for `/` follows from these two.
pub fn verify_rack(rows: &[Vec<usize>]) -> Result<FiniteRack, AxiomViolation> {
    let m = rows.len();
    if m == 0 || m > FiniteRack::MAX_ORDER {
        return Err(AxiomViolation::Shape { row: 0, column: 0 });
    }
    let mut star = Vec::with_capacity(m * m);
    for (x, row) in rows.iter().enumerate() {
        if row.len() != m {
            return Err(AxiomViolation::Shape { row: x, column: row.len().min(m) });
        }
        for (y, &v) in row.iter().enumerate() {
            if v >= m {
                return Err(AxiomViolation::Shape { row: x, column: y });
            }
            star.push(v as u8);
        }
    }
    for y in 0..m {
        let mut seen: Vec<Option<usize>> = vec![None; m];
        for x in 0..m {
            let v = star[x * m + y] as usize;
            if let Some(x1) = seen[v] {
                return Err(AxiomViolation::RightTranslation { y, x1, x2: x });
            }
            seen[v] = Some(x);
        }
    }
    let at = |a: usize, b: usize| star[a * m + b] as usize;
    for x in 0..m {
        for y in 0..m {
            let xy = at(x, y);
            for z in 0..m {
                if at(xy, z) != at(at(x, z), at(y, z)) {
                    return Err(AxiomViolation::SelfDistributivity { x, y, z });
                }
            }
        }
    }
    Ok(FiniteRack::from_flat_unchecked(m, star))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Direct fold of the table for C_k; independent of `pow`.
    fn cyclic_fold(k: usize, e: usize, x: usize) -> usize {
        let mut acc = x;
        for _ in 1..e {
            acc = (acc + 1) % k;
        }
        acc
    }

    #[test]
    fn pow_domain() {
        let c3 = FiniteRack::cyclic(3).unwrap();
        assert_eq!(c3.pow(0, 0), Err(RackError::ExponentDomain(0)));
        assert_eq!(c3.pow(-1, 0), Err(RackError::ExponentDomain(-1)));
        assert!(matches!(c3.pow(2, 3), Err(RackError::ElementRange { .. })));
    }

    #[test]
    fn pow_matches_nested_expansion() {
        let r = FiniteRack::dihedral(5).unwrap();
        let c = FiniteRack::cyclic(4).unwrap();
        for rack in [&r, &c] {
            for x in 0..rack.order() {
                let x4 = rack.op(rack.op(rack.op(x, x), x), x);
                assert_eq!(rack.pow(4, x).unwrap(), x4);
                let xm3 = rack.inv(rack.inv(x, x), x);
                assert_eq!(rack.pow(-3, x).unwrap(), xm3);
                assert_eq!(rack.pow(-2, x).unwrap(), rack.inv(x, x));
                assert_eq!(rack.pow(1, x).unwrap(), x);
            }
        }
    }

    #[test]
    fn pow_in_c5() {
        let c5 = FiniteRack::cyclic(5).unwrap();
        assert_eq!(c5.pow(3, 2).unwrap(), cyclic_fold(5, 3, 2));
        assert_eq!(c5.pow(3, 2).unwrap(), 4);
    }

    #[test]
    fn cyclic_tables() {
        let c1 = FiniteRack::cyclic(1).unwrap();
        assert_eq!(c1.order(), 1);
        let c3 = FiniteRack::cyclic(3).unwrap();
        assert_eq!(c3.op(0, 2), 1);
        assert!(verify_rack(&c3.rows()).is_ok());
        assert!(FiniteRack::cyclic(9).unwrap().is_legendrian(LegendrianIndex(4)));
        assert_eq!(FiniteRack::cyclic(0), Err(RackError::EmptyRack));
    }

    #[test]
    fn dihedral_tables() {
        let r3 = FiniteRack::dihedral(3).unwrap();
        assert_eq!(r3.op(0, 1), 2);
        for k in 1..9 {
            let r = FiniteRack::dihedral(k).unwrap();
            assert!(r.is_quandle());
            assert!(verify_rack(&r.rows()).is_ok());
        }
        for n in 0..=8 {
            assert!(r3.is_legendrian(LegendrianIndex(n)));
        }
    }

    #[test]
    fn legendrian_membership_examples() {
        let c3 = FiniteRack::cyclic(3).unwrap();
        assert!(c3.is_legendrian(LegendrianIndex(1)));
        assert!(!c3.is_legendrian(LegendrianIndex(2)));
        let t = FiniteRack::trivial(4).unwrap();
        for n in 0..10 {
            assert!(t.is_legendrian(LegendrianIndex(n)));
        }
    }

    #[test]
    fn trivial_table_is_rack() {
        let rows = vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]];
        let rack = FiniteRack::from_table(&rows).unwrap();
        assert!(rack.is_trivial());
    }

    #[test]
    fn two_element_swap_table() {
        // star = [[1,1],[0,0]]: columns are the swap, so the table is the
        // permutation rack of a transposition. Brute force over all 8 triples
        // decides distributivity independently of `verify_rack`.
        let rows = vec![vec![1, 1], vec![0, 0]];
        let at = |a: usize, b: usize| rows[a][b];
        let brute_ok = (0..2).all(|x| {
            (0..2).all(|y| (0..2).all(|z| at(at(x, y), z) == at(at(x, z), at(y, z))))
        });
        assert!(brute_ok);
        let rack = verify_rack(&rows).unwrap();
        assert_eq!(rack.inv(1, 0), 0);
        assert!(!rack.is_quandle());
    }

    #[test]
    fn violations_carry_witnesses() {
        let not_perm = vec![vec![0, 0], vec![0, 1]];
        assert_eq!(
            verify_rack(&not_perm),
            Err(AxiomViolation::RightTranslation { y: 0, x1: 0, x2: 1 })
        );
        // x*y = x + y mod 3: columns are permutations, distributivity fails.
        let add: Vec<Vec<usize>> = (0..3).map(|x| (0..3).map(|y| (x + y) % 3).collect()).collect();
        match verify_rack(&add) {
            Err(AxiomViolation::SelfDistributivity { x, y, z }) => {
                let at = |a: usize, b: usize| add[a][b];
                assert_ne!(at(at(x, y), z), at(at(x, z), at(y, z)));
            }
            other => panic!("expected a distributivity witness, got {other:?}"),
        }
        assert!(matches!(verify_rack(&[vec![0, 1]]), Err(AxiomViolation::Shape { .. })));
        assert!(matches!(verify_rack(&[vec![1]]), Err(AxiomViolation::Shape { .. })));
    }

    #[test]
    fn slash_inverts_star() {
        let r = FiniteRack::dihedral(7).unwrap();
        for x in 0..7 {
            for y in 0..7 {
                assert_eq!(r.inv(r.op(x, y), y), x);
                assert_eq!(r.op(r.inv(x, y), y), x);
            }
        }
    }

    #[test]
    fn table_json_roundtrip() {
        let c4 = FiniteRack::cyclic(4).unwrap();
        let json = serde_json::to_string(&c4.to_table()).unwrap();
        let back: RackTable = serde_json::from_str(&json).unwrap();
        assert_eq!(FiniteRack::from_rack_table(&back).unwrap(), c4);
    }
}
