use serde::{Deserialize, Serialize};

use super::enumerate::RationalsByHeight;
use crate::exactnum::{is_square_i128, kth_power_root, Rational};

/// A third element `x` for a pair `(a, b)`: `ax + 1 = fourth_root^4` and
/// `bx + 1 = square_root^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extension {
    pub x: Rational,
    pub fourth_root: Rational,
    pub square_root: Rational,
}

fn to_i128(x: &num_bigint::BigInt) -> Option<i128> {
    i128::try_from(x).ok()
}

/// Integer data for the square test on `bx + 1` with `x = (ρ^4 - 1)/a`.
///
/// With `a = p/q`, `b = P/Q` and `ρ = n/m`,
/// `bx + 1 = (Pq(n^4 - m^4) + Qp m^4) / (Qp m^4)`, which is a rational square
/// iff `(Pq(n^4 - m^4) + Qp m^4) * Qp` is a perfect square.
struct FastSquareTest {
    pq: i128,
    qp: i128,
}

impl FastSquareTest {
    fn new(a: &Rational, b: &Rational) -> Option<Self> {
        let (p, q) = (to_i128(a.numer())?, to_i128(a.denom())?);
        let (bp, bq) = (to_i128(b.numer())?, to_i128(b.denom())?);
        Some(FastSquareTest {
            pq: bp.checked_mul(q)?,
            qp: bq.checked_mul(p)?,
        })
    }

    /// `None` when the arithmetic would overflow.
    fn is_square(&self, n: u64, m: u64) -> Option<bool> {
        let n4 = (n as i128).checked_pow(4)?;
        let m4 = (m as i128).checked_pow(4)?;
        let num = self
            .pq
            .checked_mul(n4 - m4)?
            .checked_add(self.qp.checked_mul(m4)?)?;
        Some(is_square_i128(num.checked_mul(self.qp)?))
    }
}

/// Candidate fourth roots `ρ >= 0` in search order: `0`, then the positive
/// rationals by height up to `bound`. Negative `ρ` repeat the same `ρ^4`.
pub fn fourth_root_candidates(bound: u64) -> impl Iterator<Item = (u64, u64)> {
    std::iter::once((0, 1)).chain(RationalsByHeight::new().take_while(move |&(p, q)| p.max(q) <= bound))
}

/// Rationals `x` with `ax + 1` a fourth power and `bx + 1` a square, found by
/// running `x = (ρ^4 - 1)/a` over candidate roots `ρ` of height at most
/// `bound`. Values `x ∈ {0, a, b}` are skipped.
pub fn extension_search(a: &Rational, b: &Rational, bound: u64) -> Vec<Extension> {
    if a.is_zero() {
        return Vec::new();
    }
    let fast = FastSquareTest::new(a, b);
    let one = Rational::one();
    let mut out = Vec::new();
    for (n, m) in fourth_root_candidates(bound) {
        if n == m {
            // x = 0
            continue;
        }
        let quick = fast.as_ref().and_then(|f| f.is_square(n, m));
        if quick == Some(false) {
            continue;
        }
        let rho = Rational::new(n, m).expect("m >= 1");
        let x = (rho.pow(4) - &one).checked_div(a).expect("a != 0");
        if &x == a || &x == b {
            continue;
        }
        let Some(square_root) = kth_power_root(&(b * &x + &one), 2) else {
            debug_assert!(quick.is_none(), "fast square test disagreed");
            continue;
        };
        out.push(Extension {
            x,
            fourth_root: rho,
            square_root,
        });
    }
    out
}
