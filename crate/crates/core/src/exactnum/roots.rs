use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Roots;
use num_traits::{Pow, Zero};

use super::Rational;

// Quadratic residues mod 64, as a bitmask.
const SQUARES_MOD_64: u64 = {
    let mut mask = 0u64;
    let mut i = 0;
    while i < 64 {
        mask |= 1 << ((i * i) % 64);
        i += 1;
    }
    mask
};

/// Exact integer k-th root: `Some(m)` iff `m^k == n`.
pub fn integer_kth_root(n: &BigUint, k: u32) -> Option<BigUint> {
    assert!(k >= 1, "root index must be positive");
    if n.is_zero() || k == 1 {
        return Some(n.clone());
    }
    if k.is_multiple_of(2) {
        let low = n.iter_u64_digits().next().unwrap_or(0);
        if SQUARES_MOD_64 & (1 << (low % 64)) == 0 {
            return None;
        }
    }
    // nth_root is integer Newton iteration returning floor(n^(1/k)).
    let m = n.nth_root(k);
    if Pow::pow(&m, k) == *n {
        Some(m)
    } else {
        None
    }
}

/// The canonical rational k-th root of `x`, if one exists.
///
/// For even `k` the root is non-negative and `x` must be non-negative; for
/// odd `k` the root carries the sign of `x`. Zero is a k-th power of zero.
pub fn kth_power_root(x: &Rational, k: u32) -> Option<Rational> {
    if x.is_zero() {
        return Some(Rational::zero());
    }
    if x.is_negative() && k.is_multiple_of(2) {
        return None;
    }
    let num = integer_kth_root(x.numer().magnitude(), k)?;
    let den = integer_kth_root(x.denom().magnitude(), k)?;
    let sign = if x.is_negative() { Sign::Minus } else { Sign::Plus };
    // Roots of coprime integers are coprime, so this is already reduced.
    Some(Rational::from(num_rational::BigRational::new_raw(
        BigInt::from_biguint(sign, num),
        BigInt::from_biguint(Sign::Plus, den),
    )))
}

/// Perfect-square test on machine integers, used by the search inner loop.
pub fn is_square_i128(n: i128) -> bool {
    if n < 0 {
        return false;
    }
    let n = n as u128;
    if SQUARES_MOD_64 & (1 << (n % 64) as u64) == 0 {
        return false;
    }
    let r = n.sqrt();
    r * r == n
}
