use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::exactnum::Rational;

/// A pair `(a, b)` with `ab + 1 = root^4` by construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCandidate {
    pub a: Rational,
    pub b: Rational,
    pub root: Rational,
}

fn height_u64(x: &Rational) -> Option<u64> {
    let p: u64 = x.numer().magnitude().try_into().ok()?;
    let q: u64 = x.denom().try_into().ok()?;
    Some(p.max(q))
}

/// All retained partners `b = q(u^4 - v^4) / (p v^4)` of `a = p/q`.
///
/// Enumerates coprime `u != v >= 1` with `|p| v^4 <= bound` and
/// `|u^4 - v^4| <= floor(bound / q)`, in order of increasing `v` then `u`,
/// keeping `b` when `b != 0`, `a != b`, both heights are at most `bound`, and
/// the pair is in canonical orientation (`h(a) < h(b)`, or equal heights and
/// `a <= b`).
pub fn generate_pairs(a: &Rational, bound: u64) -> Vec<PairCandidate> {
    let mut out = Vec::new();
    if a.is_zero() {
        return out;
    }
    let (Ok(p_abs), Ok(q)) = (u64::try_from(a.numer().magnitude()), u64::try_from(a.denom())) else {
        return out;
    };
    let h_a = p_abs.max(q);
    if h_a > bound {
        return out;
    }
    let spread = (bound / q) as u128;
    let bound = bound as u128;
    let p_abs = p_abs as u128;
    let mut v: u128 = 1;
    while p_abs * v.pow(4) <= bound {
        let v4 = v.pow(4);
        let mut u: u128 = 1;
        while u.pow(4) <= v4 + spread {
            let u4 = u.pow(4);
            if u != v && v4.abs_diff(u4) <= spread && u.gcd(&v) == 1 {
                let root = Rational::new(u as i128, v as i128).expect("v >= 1");
                let b = (root.pow(4) - Rational::one())
                    .checked_div(a)
                    .expect("a != 0");
                if let Some(cand) = retain(a, h_a, b, bound as u64) {
                    out.push(PairCandidate { a: a.clone(), b: cand, root });
                }
            }
            u += 1;
        }
        v += 1;
    }
    out
}

fn retain(a: &Rational, h_a: u64, b: Rational, bound: u64) -> Option<Rational> {
    if b.is_zero() || &b == a {
        return None;
    }
    let h_b = height_u64(&b)?;
    if h_b > bound {
        return None;
    }
    let oriented = h_a < h_b || (h_a == h_b && a <= &b);
    oriented.then_some(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::kth_power_root;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn one_two_pair() {
        let pairs = generate_pairs(&q("1"), 100);
        let hit = pairs.iter().find(|c| c.root == q("1/2")).unwrap();
        // b = (1 - 2^4) / 2^4, so ab + 1 = (1/2)^4.
        assert_eq!(hit.b, q("-15/16"));
        assert!(generate_pairs(&q("1"), 10).iter().all(|c| c.root != q("1/2")));
        assert!(pairs.iter().all(|c| !c.root.is_one()));
    }

    #[test]
    fn first_almost_quadruple_pair_is_generated() {
        let pairs = generate_pairs(&q("64/9"), 16384);
        let hit = pairs.iter().find(|c| c.b == q("-2295/16384")).unwrap();
        assert_eq!(hit.root, q("1/4"));
        // 64 * 4^4 = 16384 sits exactly on the bound.
        assert!(generate_pairs(&q("64/9"), 16383).iter().all(|c| c.b != q("-2295/16384")));
    }

    #[test]
    fn candidates_are_fourth_powers_and_oriented() {
        for a in ["1", "1/2", "3", "7/5", "64/9", "-2/3"] {
            let a = q(a);
            for c in generate_pairs(&a, 2000) {
                let prod = &c.a * &c.b + Rational::one();
                assert_eq!(kth_power_root(&prod, 4), Some(c.root.clone()));
                assert!(!c.b.is_zero() && c.b != c.a);
                let (ha, hb) = (c.a.height(), c.b.height());
                assert!(ha < hb || (ha == hb && c.a <= c.b));
                assert!(hb <= 2000u32.into());
            }
        }
    }
}
