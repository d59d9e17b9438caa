use serde::{Deserialize, Serialize};

use super::enumerate::RationalsByHeight;
use super::SearchError;
use crate::exactnum::{kth_power_root, Rational};

/// A point `(v, y)` on `y^2 = (r^4-1)(u^4-1)(v^4-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub v: Rational,
    /// Non-negative square root.
    pub y: Rational,
    /// The fourth root `s` with `(r^4-1)(w^4-1) = (s^4-1)(v^4-1)`, when
    /// `v^4 != 1` and it exists.
    pub implied_s: Option<Rational>,
    /// Whether the third compatibility relation can be met at this `v`.
    pub third_holds: bool,
}

/// Signed rationals in search order: `0`, then `ρ, -ρ` by height up to `bound`.
pub fn signed_candidates(bound: u64) -> impl Iterator<Item = Rational> {
    std::iter::once(Rational::zero()).chain(
        RationalsByHeight::new()
            .take_while(move |&(p, q)| p.max(q) <= bound)
            .flat_map(|(p, q)| {
                let x = Rational::new(p, q).expect("q > 0");
                [x.clone(), -x]
            }),
    )
}

/// Brute-force search for points on the genus one curve attached to a frame
/// `(r, t, u, w)` satisfying `(r^4-1)(w^4-1) = (t^4-1)(u^4-1)`.
pub fn genus_one_search(
    r: &Rational,
    t: &Rational,
    u: &Rational,
    w: &Rational,
    bound: u64,
) -> Result<Vec<CurvePoint>, SearchError> {
    let one = Rational::one();
    let m1 = |x: &Rational| x.pow(4) - &one;
    let rw = m1(r) * m1(w);
    if rw != m1(t) * m1(u) {
        return Err(SearchError::IncompatibleQuadrupleFrame);
    }
    let ru = m1(r) * m1(u);
    let mut out = Vec::new();
    for v in signed_candidates(bound) {
        let v41 = m1(&v);
        let Some(y) = kth_power_root(&(&ru * &v41), 2) else {
            continue;
        };
        let (implied_s, third_holds) = if v41.is_zero() {
            (None, rw.is_zero())
        } else {
            let s4 = &one + rw.checked_div(&v41).expect("v^4 != 1");
            let s = kth_power_root(&s4, 4);
            let holds = s.is_some();
            (s, holds)
        };
        out.push(CurvePoint { v, y, implied_s, third_holds });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn quadruple_frame_has_v_zero() {
        let pts = genus_one_search(&q("59/134"), &q("79/67"), &q("158/133"), &q("59/133"), 20).unwrap();
        let zero = pts.iter().find(|p| p.v.is_zero()).unwrap();
        assert!(zero.third_holds);
        assert_eq!(zero.implied_s, Some(q("4661/8911")));
        for v in ["1", "-1"] {
            let p = pts.iter().find(|p| p.v == q(v)).unwrap();
            assert!(p.y.is_zero());
        }
    }

    #[test]
    fn incompatible_frame_rejected() {
        assert_eq!(
            genus_one_search(&q("2"), &q("3"), &q("5"), &q("7"), 5),
            Err(SearchError::IncompatibleQuadrupleFrame)
        );
    }

    #[test]
    fn negative_leading_factor_admits_only_small_v() {
        // (r^4-1)(u^4-1) < 0 with r = 1/2, u = 2 and t, w chosen compatibly.
        let (r, u) = (q("1/2"), q("2"));
        let pts = genus_one_search(&r, &r, &u, &u, 30).unwrap();
        assert!(!pts.is_empty());
        assert!(pts.iter().all(|p| p.v.abs() <= Rational::one()));
    }
}
