//! Exact construction, verification and search of k-th power rational
//! Diophantine tuples.
//!
//! A k-th power rational Diophantine m-tuple is a set of pairwise distinct
//! nonzero rationals in which every product `a_i * a_j + 1` is a k-th power of
//! a rational. Rational points on the Fermat–Euler surface
//! `X^k + Y^k = Z^k + W^k` map to such quadruples; see [`euler`].

pub mod euler;
pub mod exactnum;
pub mod parametrize;
pub mod search;
pub mod tuples;

pub use exactnum::{ExactError, Rational};
