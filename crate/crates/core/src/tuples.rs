//! k-th power rational Diophantine tuples, their verification, and the root
//! sextuple `(r, s, t, u, v, w)` of a quadruple.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::{kth_power_root, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TupleError {
    #[error("a tuple needs at least two elements, got {0}")]
    TooFewElements(usize),
    #[error("exponent must be at least 2, got {0}")]
    BadExponent(u32),
    #[error("element {0} is zero")]
    ZeroElement(usize),
    #[error("elements {0} and {1} coincide")]
    DuplicateElement(usize, usize),
    #[error("expected four elements, got {0}")]
    NotAQuadruple(usize),
    #[error("v^k = 1 makes a^2 = (r^k-1)(u^k-1)/(v^k-1) undefined")]
    DegenerateDenominator,
}

/// Pairwise distinct nonzero rationals with an exponent `k >= 2`.
///
/// Construction only checks distinctness and non-vanishing; whether the
/// power conditions hold is decided by [`verify_tuple`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerTuple {
    k: u32,
    elements: Vec<Rational>,
}

impl PowerTuple {
    pub fn new(k: u32, elements: Vec<Rational>) -> Result<Self, TupleError> {
        if k < 2 {
            return Err(TupleError::BadExponent(k));
        }
        if elements.len() < 2 {
            return Err(TupleError::TooFewElements(elements.len()));
        }
        if let Some(i) = elements.iter().position(Rational::is_zero) {
            return Err(TupleError::ZeroElement(i));
        }
        for i in 0..elements.len() {
            for j in i + 1..elements.len() {
                if elements[i] == elements[j] {
                    return Err(TupleError::DuplicateElement(i, j));
                }
            }
        }
        Ok(PowerTuple { k, elements })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn elements(&self) -> &[Rational] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements sorted ascending by `(height, value)`.
    pub fn canonical_elements(&self) -> Vec<Rational> {
        canonical_order(&self.elements)
    }

    /// Equality as sets (same exponent, same elements in any order).
    pub fn set_eq(&self, other: &PowerTuple) -> bool {
        self.k == other.k && self.canonical_elements() == other.canonical_elements()
    }

    pub fn verify(&self) -> VerificationReport {
        verify_tuple(&self.elements, self.k)
    }
}

pub fn canonical_order(elements: &[Rational]) -> Vec<Rational> {
    let mut sorted = elements.to_vec();
    sorted.sort_by(Rational::cmp_height_then_value);
    sorted
}

/// True if the two lists hold the same multiset of values.
pub fn same_set(lhs: &[Rational], rhs: &[Rational]) -> bool {
    canonical_order(lhs) == canonical_order(rhs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub i: usize,
    pub j: usize,
    pub product_plus_one: Rational,
    pub root: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub k: u32,
    pub elements: Vec<Rational>,
    pub pairs: Vec<PairCheck>,
    pub all_nonzero: bool,
    pub pairwise_distinct: bool,
    pub valid: bool,
}

impl VerificationReport {
    pub fn root(&self, i: usize, j: usize) -> Option<&Rational> {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.pairs
            .iter()
            .find(|p| p.i == i && p.j == j)
            .and_then(|p| p.root.as_ref())
    }

    /// The root sextuple, for a valid quadruple.
    pub fn root_system(&self) -> Option<RootSystem> {
        if !self.valid || self.elements.len() != 4 {
            return None;
        }
        let r = |i, j| self.root(i, j).cloned();
        Some(RootSystem::new(
            self.k,
            [r(0, 1)?, r(0, 2)?, r(1, 2)?, r(0, 3)?, r(1, 3)?, r(2, 3)?],
        ))
    }
}

/// Checks every pair `a_i a_j + 1` for being a k-th power, plus the
/// nonzero and distinctness requirements.
pub fn verify_tuple(elements: &[Rational], k: u32) -> VerificationReport {
    let one = Rational::one();
    let mut pairs = Vec::with_capacity(elements.len() * elements.len().saturating_sub(1) / 2);
    let mut pairwise_distinct = true;
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            if elements[i] == elements[j] {
                pairwise_distinct = false;
            }
            let product_plus_one = &elements[i] * &elements[j] + &one;
            let root = kth_power_root(&product_plus_one, k);
            pairs.push(PairCheck { i, j, product_plus_one, root });
        }
    }
    let all_nonzero = elements.iter().all(|x| !x.is_zero());
    let valid = k >= 2
        && elements.len() >= 2
        && all_nonzero
        && pairwise_distinct
        && pairs.iter().all(|p| p.root.is_some());
    VerificationReport {
        k,
        elements: elements.to_vec(),
        pairs,
        all_nonzero,
        pairwise_distinct,
        valid,
    }
}

/// Roots of the six products of a quadruple `{a, b, c, d}`:
/// `ab+1 = r^k`, `ac+1 = s^k`, `bc+1 = t^k`, `ad+1 = u^k`, `bd+1 = v^k`,
/// `cd+1 = w^k`. For even `k` every root is stored non-negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootSystem {
    #[serde(skip)]
    pub k: u32,
    pub r: Rational,
    pub s: Rational,
    pub t: Rational,
    pub u: Rational,
    pub v: Rational,
    pub w: Rational,
}

impl RootSystem {
    pub fn new(k: u32, [r, s, t, u, v, w]: [Rational; 6]) -> Self {
        let canon = |x: Rational| if k.is_multiple_of(2) { x.abs() } else { x };
        RootSystem {
            k,
            r: canon(r),
            s: canon(s),
            t: canon(t),
            u: canon(u),
            v: canon(v),
            w: canon(w),
        }
    }

    pub fn as_array(&self) -> [&Rational; 6] {
        [&self.r, &self.s, &self.t, &self.u, &self.v, &self.w]
    }

    fn minus_one(&self, x: &Rational) -> Rational {
        x.pow(self.k) - Rational::one()
    }
}

/// Extracts the canonical root sextuple if all six products are k-th powers.
pub fn roots_from_quadruple(q: &PowerTuple) -> Option<RootSystem> {
    if q.len() != 4 {
        return None;
    }
    let e = q.elements();
    let one = Rational::one();
    let root = |i: usize, j: usize| kth_power_root(&(&e[i] * &e[j] + &one), q.k());
    Some(RootSystem::new(
        q.k(),
        [root(0, 1)?, root(0, 2)?, root(1, 2)?, root(0, 3)?, root(1, 3)?, root(2, 3)?],
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignChoice {
    Positive,
    Negative,
}

impl SignChoice {
    pub fn of(x: &Rational) -> Self {
        if x.is_negative() {
            SignChoice::Negative
        } else {
            SignChoice::Positive
        }
    }
}

/// Reassembles `[a, b, c, d]` from a root sextuple via
/// `a^2 = (r^k-1)(u^k-1)/(v^k-1)`, `b = (r^k-1)/a`, `c = (s^k-1)/a`,
/// `d = (u^k-1)/a`.
///
/// Returns `Ok(None)` when `a^2` is zero or not a rational square. The result
/// is not verified; run [`verify_tuple`] on it.
pub fn quadruple_from_roots(
    rs: &RootSystem,
    sign: SignChoice,
) -> Result<Option<[Rational; 4]>, TupleError> {
    let vk1 = rs.minus_one(&rs.v);
    if vk1.is_zero() {
        return Err(TupleError::DegenerateDenominator);
    }
    let rk1 = rs.minus_one(&rs.r);
    let uk1 = rs.minus_one(&rs.u);
    let a_squared = (&rk1 * &uk1)
        .checked_div(&vk1)
        .map_err(|_| TupleError::DegenerateDenominator)?;
    if a_squared.is_zero() {
        return Ok(None);
    }
    let Some(a) = kth_power_root(&a_squared, 2) else {
        return Ok(None);
    };
    let a = match sign {
        SignChoice::Positive => a,
        SignChoice::Negative => -a,
    };
    // a is nonzero here.
    let div = |x: Rational| x.checked_div(&a).expect("a is nonzero");
    let b = div(rk1);
    let c = div(rs.minus_one(&rs.s));
    let d = div(uk1);
    Ok(Some([a, b, c, d]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Compatibility {
    /// `(r^k-1)(w^k-1) = (t^k-1)(u^k-1)`
    pub second: bool,
    /// `(r^k-1)(w^k-1) = (s^k-1)(v^k-1)`
    pub third: bool,
}

pub fn check_compatibility(rs: &RootSystem) -> Compatibility {
    let m = |x: &Rational| rs.minus_one(x);
    let lhs = m(&rs.r) * m(&rs.w);
    Compatibility {
        second: lhs == m(&rs.t) * m(&rs.u),
        third: lhs == m(&rs.s) * m(&rs.v),
    }
}

/// One line of the tuple record format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleRecord {
    pub k: u32,
    pub elements: Vec<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<RootSystem>,
    pub valid: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_point: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl TupleRecord {
    pub fn from_report(report: &VerificationReport) -> Self {
        TupleRecord {
            k: report.k,
            elements: report.elements.clone(),
            roots: report.root_system(),
            valid: report.valid,
            source_point: None,
            param: None,
            diagnostic: None,
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize infallibly")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn qs(xs: &[&str]) -> Vec<Rational> {
        xs.iter().map(|s| q(s)).collect()
    }

    fn roots(k: u32, xs: &[&str]) -> RootSystem {
        RootSystem::new(k, qs(xs).try_into().unwrap())
    }

    const FIRST: [&str; 4] = ["310300575/317623684", "-17689/17956", "-75195840/79405921", "17956/17689"];
    const FIRST_ROOTS: [&str; 6] = ["59/134", "4661/8911", "79/67", "158/133", "0", "59/133"];
    const SECOND: [&str; 4] = ["310300575/86899684", "-3481/24964", "75195840/21724921", "24964/3481"];
    const SECOND_ROOTS: [&str; 6] = ["133/158", "8911/4661", "67/79", "134/59", "0", "133/59"];

    #[test]
    fn classical_quadruples_verify() {
        assert!(verify_tuple(&qs(&["1", "3", "8", "120"]), 2).valid);
        assert!(verify_tuple(&qs(&["1/16", "33/16", "17/4", "105/16"]), 2).valid);
        let bad = verify_tuple(&qs(&["1", "2"]), 2);
        assert!(!bad.valid);
        assert_eq!(bad.pairs[0].product_plus_one, q("3"));
    }

    #[test]
    fn quartic_quadruples_verify_with_printed_roots() {
        let report = verify_tuple(&qs(&FIRST), 4);
        assert!(report.valid);
        assert_eq!(report.root_system().unwrap(), roots(4, &FIRST_ROOTS));
        let second = PowerTuple::new(4, qs(&SECOND)).unwrap();
        assert_eq!(roots_from_quadruple(&second).unwrap(), roots(4, &SECOND_ROOTS));
    }

    #[test]
    fn fermat_roots() {
        let fermat = PowerTuple::new(2, qs(&["1", "3", "8", "120"])).unwrap();
        assert_eq!(
            roots_from_quadruple(&fermat).unwrap(),
            roots(2, &["2", "3", "5", "11", "19", "31"])
        );
        let no = PowerTuple::new(4, qs(&["1", "2", "3", "4"])).unwrap();
        assert_eq!(roots_from_quadruple(&no), None);
    }

    #[test]
    fn zero_and_duplicates_are_flagged() {
        let r = verify_tuple(&qs(&["0", "3"]), 2);
        assert!(!r.all_nonzero && !r.valid);
        let r = verify_tuple(&qs(&["3", "3"]), 2);
        assert!(!r.pairwise_distinct && !r.valid);
        assert_eq!(PowerTuple::new(2, qs(&["1", "0"])), Err(TupleError::ZeroElement(1)));
        assert_eq!(PowerTuple::new(2, qs(&["1", "1"])), Err(TupleError::DuplicateElement(0, 1)));
        assert_eq!(PowerTuple::new(1, qs(&["1", "2"])), Err(TupleError::BadExponent(1)));
    }

    #[test]
    fn reassembles_first_quadruple() {
        let rs = roots(4, &FIRST_ROOTS);
        let quad = quadruple_from_roots(&rs, SignChoice::Positive).unwrap().unwrap();
        assert_eq!(quad.to_vec(), qs(&FIRST));
    }

    #[test]
    fn reassembly_failures() {
        // a^2 = 3*3/8 is not a square.
        let rs = roots(2, &["2", "1", "1", "2", "3", "1"]);
        assert_eq!(quadruple_from_roots(&rs, SignChoice::Positive), Ok(None));
        let rs = roots(4, &["2", "1", "1", "2", "1", "1"]);
        assert_eq!(
            quadruple_from_roots(&rs, SignChoice::Positive),
            Err(TupleError::DegenerateDenominator)
        );
    }

    #[test]
    fn compatibility_relations() {
        assert_eq!(
            check_compatibility(&roots(4, &FIRST_ROOTS)),
            Compatibility { second: true, third: true }
        );
        for k in 2..7 {
            let ones = roots(k, &["1"; 6]);
            assert_eq!(check_compatibility(&ones), Compatibility { second: true, third: true });
        }
        // (3)(0) = (0)(8) and (3)(0) = (0)(0).
        let c = check_compatibility(&roots(2, &["2", "1", "1", "3", "1", "1"]));
        assert!(c.second && c.third);
        // 3*168 = 504, 24*48 = 1152, 8*120 = 960.
        let c = check_compatibility(&roots(2, &["2", "3", "5", "7", "11", "13"]));
        assert_eq!(c, Compatibility { second: false, third: false });
    }

    #[test]
    fn scaling_breaks_fermat() {
        let scaled = qs(&["2", "6", "16", "240"]);
        assert!(!verify_tuple(&scaled, 2).valid);
        assert_eq!(verify_tuple(&scaled, 2).pairs[0].product_plus_one, q("13"));
    }

    #[test]
    fn record_line_format() {
        let report = verify_tuple(&qs(&["1", "3", "8", "120"]), 2);
        let line = TupleRecord::from_report(&report).to_line();
        assert_eq!(
            line,
            r#"{"k":2,"elements":["1","3","8","120"],"roots":{"r":"2","s":"3","t":"5","u":"11","v":"19","w":"31"},"valid":true}"#
        );
        let back: TupleRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back.elements, report.elements);
    }

    proptest! {
        #[test]
        fn verdict_is_order_invariant(perm in Just([0usize, 1, 2, 3]).prop_shuffle(), which in 0usize..3) {
            let base = [qs(&FIRST), qs(&["1", "3", "8", "120"]), qs(&["1", "2", "3", "4"])][which].clone();
            let k = [4, 2, 4][which];
            let permuted: Vec<_> = perm.iter().map(|&i| base[i].clone()).collect();
            prop_assert_eq!(verify_tuple(&base, k).valid, verify_tuple(&permuted, k).valid);
        }
    }

    #[test]
    fn roots_round_trip_both_quadruples() {
        for (quad, k) in [(qs(&FIRST), 4), (qs(&SECOND), 4), (qs(&["1", "3", "8", "120"]), 2)] {
            let tuple = PowerTuple::new(k, quad.clone()).unwrap();
            let rs = roots_from_quadruple(&tuple).unwrap();
            let back = quadruple_from_roots(&rs, SignChoice::of(&quad[0])).unwrap().unwrap();
            assert!(same_set(&back, &quad));
        }
    }
}
