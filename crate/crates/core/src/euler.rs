//! Points on the Fermat–Euler surface `X^k + Y^k = Z^k + W^k` and the maps
//! sending them to k-th power Diophantine quadruples.
//!
//! For a point with `ZW != 0` and even `k = 2m` the quadruple is
//!
//! ```text
//! a = (X^k - W^k) / (Z^m W^m),  b = -(W/Z)^m,
//! c = (Y^k - W^k) / (Z^m W^m),  d = (Z/W)^m,
//! ```
//!
//! with `ab+1 = (Y/Z)^k`, `ac+1 = (XY/ZW)^k`, `bc+1 = (X/Z)^k`,
//! `ad+1 = (X/W)^k`, `bd+1 = 0`, `cd+1 = (Y/W)^k`. Odd `k` needs a witness
//! `lambda` with `lambda^2 = W/Z`. The second half of the module covers the
//! special locus `v = 0, r = κw, t = κu, s = κuw` through which the surface
//! arises.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use thiserror::Error;

use crate::exactnum::{kth_power_root, Rational};
use crate::tuples::{PowerTuple, RootSystem, TupleError, TupleRecord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EulerError {
    #[error("all four coordinates are zero")]
    ZeroPoint,
    #[error("ZW = 0: point is off the affine chart")]
    OffAffineChart,
    #[error("point {0} is not on the surface")]
    NotOnSurface(String),
    #[error("map needs exponent {expected}, point has k = {got}")]
    WrongExponent { expected: &'static str, got: u32 },
    #[error("degenerate: {factor}")]
    DegenerateQuadruple {
        factor: DegenerateFactor,
        output: Box<MapOutput>,
    },
    #[error("lambda^2 != W/Z")]
    BadSquareWitness,
    #[error("parameters are not on the special locus u^k + w^k = 1 + kappa^-k")]
    NotOnSpecialLocus,
    #[error("special-locus parameters must be nonzero")]
    ZeroParameter,
    #[error("identity {0} failed; map output is inconsistent")]
    IdentityFailure(&'static str),
    #[error("cannot parse point {0:?}: expected X:Y:Z:W@k")]
    Parse(String),
}

/// The vanishing factor of the nondegeneracy product
/// `XYZW (X^e - Y^e)(X^e - W^e)(Y^e - W^e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegenerateFactor {
    X,
    Y,
    Z,
    W,
    XEqY(u32),
    XEqW(u32),
    YEqW(u32),
}

impl fmt::Display for DegenerateFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegenerateFactor::X => write!(f, "X=0"),
            DegenerateFactor::Y => write!(f, "Y=0"),
            DegenerateFactor::Z => write!(f, "Z=0"),
            DegenerateFactor::W => write!(f, "W=0"),
            DegenerateFactor::XEqY(e) => write!(f, "X^{e}=Y^{e}"),
            DegenerateFactor::XEqW(e) => write!(f, "X^{e}=W^{e}"),
            DegenerateFactor::YEqW(e) => write!(f, "Y^{e}=W^{e}"),
        }
    }
}

/// A projective point `(X:Y:Z:W)` with exponent `k`, normalized so the
/// coordinates have gcd 1 and the first nonzero one is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurfacePoint {
    k: u32,
    coords: [BigInt; 4],
}

impl SurfacePoint {
    pub fn new(k: u32, coords: [BigInt; 4]) -> Result<Self, EulerError> {
        let g = coords.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return Err(EulerError::ZeroPoint);
        }
        let first = coords.iter().find(|c| !c.is_zero()).expect("g != 0");
        let g = if first.is_negative() { -g } else { g };
        Ok(SurfacePoint {
            k,
            coords: coords.map(|c| c / &g),
        })
    }

    pub fn from_i64(k: u32, coords: [i64; 4]) -> Result<Self, EulerError> {
        Self::new(k, coords.map(BigInt::from))
    }

    /// Clears denominators of a rational representative.
    pub fn from_rationals(k: u32, coords: [Rational; 4]) -> Result<Self, EulerError> {
        let l = coords.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        Self::new(k, coords.map(|c| c.numer() * (&l / c.denom())))
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn coords(&self) -> &[BigInt; 4] {
        &self.coords
    }

    pub fn x(&self) -> &BigInt {
        &self.coords[0]
    }
    pub fn y(&self) -> &BigInt {
        &self.coords[1]
    }
    pub fn z(&self) -> &BigInt {
        &self.coords[2]
    }
    pub fn w(&self) -> &BigInt {
        &self.coords[3]
    }

    fn ratio(&self, num: &BigInt, den: &BigInt) -> Rational {
        Rational::new(num.clone(), den.clone()).expect("caller checked the denominator")
    }

    /// `W/Z` as a square, if it is one.
    pub fn square_witness(&self) -> Option<Rational> {
        if self.z().is_zero() {
            return None;
        }
        kth_power_root(&self.ratio(self.w(), self.z()), 2)
    }
}

impl fmt::Display for SurfacePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z, w] = &self.coords;
        write!(f, "{x}:{y}:{z}:{w}@{}", self.k)
    }
}

impl FromStr for SurfacePoint {
    type Err = EulerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || EulerError::Parse(s.to_string());
        let (coords, k) = s.trim().split_once('@').ok_or_else(bad)?;
        let k: u32 = k.parse().map_err(|_| bad())?;
        let parts: Vec<BigInt> = coords
            .split(':')
            .map(|c| c.parse::<BigInt>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let coords: [BigInt; 4] = parts.try_into().map_err(|_| bad())?;
        SurfacePoint::new(k, coords)
    }
}

/// Exact test of `X^k + Y^k = Z^k + W^k`.
pub fn on_surface(p: &SurfacePoint) -> bool {
    let [x, y, z, w] = &p.coords;
    let k = p.k;
    Pow::pow(x, k) + Pow::pow(y, k) == Pow::pow(z, k) + Pow::pow(w, k)
}

/// The first vanishing factor of the nondegeneracy product, if any.
///
/// For `k = 4` the differences use squares; otherwise k-th powers.
pub fn degeneracy(p: &SurfacePoint) -> Option<DegenerateFactor> {
    let e = if p.k == 4 { 2 } else { p.k };
    degeneracy_with_exponent(p, e)
}

/// Same product evaluated with an explicit exponent on the differences.
pub fn degeneracy_with_exponent(p: &SurfacePoint, e: u32) -> Option<DegenerateFactor> {
    let [x, y, z, w] = &p.coords;
    let checks = [
        (x.is_zero(), DegenerateFactor::X),
        (y.is_zero(), DegenerateFactor::Y),
        (z.is_zero(), DegenerateFactor::Z),
        (w.is_zero(), DegenerateFactor::W),
    ];
    if let Some((_, f)) = checks.iter().find(|(hit, _)| *hit) {
        return Some(*f);
    }
    let (xe, ye, we) = (Pow::pow(x, e), Pow::pow(y, e), Pow::pow(w, e));
    if xe == ye {
        Some(DegenerateFactor::XEqY(e))
    } else if xe == we {
        Some(DegenerateFactor::XEqW(e))
    } else if ye == we {
        Some(DegenerateFactor::YEqW(e))
    } else {
        None
    }
}

pub fn nondegenerate(p: &SurfacePoint) -> bool {
    degeneracy(p).is_none()
}

/// Result of mapping a surface point to a quadruple `[a, b, c, d]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapOutput {
    pub point: SurfacePoint,
    pub elements: [Rational; 4],
    pub roots: RootSystem,
}

impl MapOutput {
    pub fn tuple(&self) -> Result<PowerTuple, TupleError> {
        PowerTuple::new(self.point.k(), self.elements.to_vec())
    }

    pub fn record(&self, valid: bool) -> TupleRecord {
        TupleRecord {
            k: self.point.k(),
            elements: self.elements.to_vec(),
            roots: Some(self.roots.clone()),
            valid,
            source_point: Some(self.point.to_string()),
            param: None,
            diagnostic: None,
        }
    }
}

fn check_chart(p: &SurfacePoint) -> Result<(), EulerError> {
    if p.z().is_zero() || p.w().is_zero() {
        return Err(EulerError::OffAffineChart);
    }
    if !on_surface(p) {
        return Err(EulerError::NotOnSurface(p.to_string()));
    }
    Ok(())
}

/// Checks the six product identities and packages the output.
fn finish(
    p: &SurfacePoint,
    elements: [Rational; 4],
    factor: Option<DegenerateFactor>,
) -> Result<MapOutput, EulerError> {
    let k = p.k;
    let [x, y, z, w] = &p.coords;
    let r = p.ratio(y, z);
    let s = p.ratio(&(x * y), &(z * w));
    let t = p.ratio(x, z);
    let u = p.ratio(x, w);
    let v = Rational::zero();
    let wr = p.ratio(y, w);
    let [a, b, c, d] = &elements;
    let one = Rational::one();
    let identities = [
        ("ab+1=(Y/Z)^k", a * b, &r),
        ("ac+1=(XY/ZW)^k", a * c, &s),
        ("bc+1=(X/Z)^k", b * c, &t),
        ("ad+1=(X/W)^k", a * d, &u),
        ("bd+1=0", b * d, &v),
        ("cd+1=(Y/W)^k", c * d, &wr),
    ];
    for (name, product, root) in identities {
        if product + &one != root.pow(k) {
            return Err(EulerError::IdentityFailure(name));
        }
    }
    let output = MapOutput {
        point: p.clone(),
        roots: RootSystem::new(k, [r, s, t, u, v, wr]),
        elements,
    };
    match factor {
        Some(factor) => Err(EulerError::DegenerateQuadruple {
            factor,
            output: Box::new(output),
        }),
        None => Ok(output),
    }
}

fn even_elements(p: &SurfacePoint) -> [Rational; 4] {
    let k = p.k;
    let m = k / 2;
    let [x, y, z, w] = &p.coords;
    let wk = Pow::pow(w, k);
    let zw_m = Pow::pow(&(z * w), m);
    let a = p.ratio(&(Pow::pow(x, k) - &wk), &zw_m);
    let b = -p.ratio(&Pow::pow(w, m), &Pow::pow(z, m));
    let c = p.ratio(&(Pow::pow(y, k) - &wk), &zw_m);
    let d = p.ratio(&Pow::pow(z, m), &Pow::pow(w, m));
    [a, b, c, d]
}

/// The quartic map `a = (X^4-W^4)/(Z^2 W^2)`, `b = -W^2/Z^2`,
/// `c = (Y^4-W^4)/(Z^2 W^2)`, `d = Z^2/W^2`.
pub fn quartic_map(p: &SurfacePoint) -> Result<MapOutput, EulerError> {
    if p.k != 4 {
        return Err(EulerError::WrongExponent { expected: "4", got: p.k });
    }
    check_chart(p)?;
    finish(p, even_elements(p), degeneracy_with_exponent(p, 2))
}

/// The even-exponent map for `k = 2m`.
pub fn general_map_even(p: &SurfacePoint) -> Result<MapOutput, EulerError> {
    if p.k < 2 || !p.k.is_multiple_of(2) {
        return Err(EulerError::WrongExponent { expected: "even", got: p.k });
    }
    check_chart(p)?;
    finish(p, even_elements(p), degeneracy_with_exponent(p, p.k))
}

/// The odd-exponent map; `lambda` must satisfy `lambda^2 = W/Z`.
pub fn general_map_odd(p: &SurfacePoint, lambda: &Rational) -> Result<MapOutput, EulerError> {
    if p.k % 2 != 1 {
        return Err(EulerError::WrongExponent { expected: "odd", got: p.k });
    }
    check_chart(p)?;
    if lambda.pow(2) != p.ratio(p.w(), p.z()) {
        return Err(EulerError::BadSquareWitness);
    }
    let k = p.k;
    let [x, y, z, w] = &p.coords;
    let wk = Pow::pow(w, k);
    let lk = lambda.pow(k);
    let denom = &lk * Rational::from_integer(Pow::pow(z, k));
    let over = |n: BigInt| Rational::from_integer(n).checked_div(&denom).expect("ZW != 0");
    let a = over(Pow::pow(x, k) - &wk);
    let c = over(Pow::pow(y, k) - &wk);
    let b = -&lk;
    let d = lk.recip().expect("lambda != 0");
    finish(p, [a, b, c, d], degeneracy_with_exponent(p, k))
}

/// Parameters `(κ, u, w)` of the special locus `v = 0, r = κw, t = κu, s = κuw`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpecialLocusParams {
    pub k: u32,
    pub kappa: Rational,
    pub u: Rational,
    pub w: Rational,
}

impl SpecialLocusParams {
    pub fn new(k: u32, kappa: Rational, u: Rational, w: Rational) -> Result<Self, EulerError> {
        if kappa.is_zero() || u.is_zero() || w.is_zero() {
            return Err(EulerError::ZeroParameter);
        }
        Ok(SpecialLocusParams { k, kappa, u, w })
    }
}

pub fn special_locus_roots(p: &SpecialLocusParams) -> RootSystem {
    let r = &p.kappa * &p.w;
    let s = &r * &p.u;
    let t = &p.kappa * &p.u;
    RootSystem::new(p.k, [r, s, t, p.u.clone(), Rational::zero(), p.w.clone()])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialLocusCheck {
    /// `u^k + w^k = 1 + κ^-k`
    pub third_holds: bool,
    /// `w^k - u^k`
    pub diagonal_factor: Rational,
    /// `κ^k (u^k + w^k) - (κ^k + 1)`
    pub quartic_factor: Rational,
}

impl SpecialLocusCheck {
    /// Equals the left side minus the right side of the second compatibility
    /// relation on the special locus.
    pub fn product(&self) -> Rational {
        &self.diagonal_factor * &self.quartic_factor
    }
}

pub fn special_locus_check(p: &SpecialLocusParams) -> SpecialLocusCheck {
    let k = p.k;
    let uk = p.u.pow(k);
    let wk = p.w.pow(k);
    let kk = p.kappa.pow(k);
    let one = Rational::one();
    let sum = &uk + &wk;
    let kinv = kk.recip().expect("kappa != 0");
    SpecialLocusCheck {
        third_holds: sum == &one + &kinv,
        diagonal_factor: &wk - &uk,
        quartic_factor: &kk * &sum - (&kk + &one),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareCertificate {
    /// `(r^k-1)(u^k-1)(v^k-1)` at `v = 0`.
    pub lhs: Rational,
    /// A rational whose square is `lhs`.
    pub rhs_root: Rational,
}

/// Exhibits `(r^k-1)(u^k-1)(v^k-1)` as an explicit square on the special
/// locus: the root is `(r^k-1)/κ^(k/2)` for even `k` and `(r^k-1)/λ^k` with
/// `λ^2 = κ` for odd `k`.
pub fn auto_square_certificate(p: &SpecialLocusParams) -> Result<SquareCertificate, EulerError> {
    if !special_locus_check(p).third_holds {
        return Err(EulerError::NotOnSpecialLocus);
    }
    let k = p.k;
    let one = Rational::one();
    let rk1 = (&p.kappa * &p.w).pow(k) - &one;
    let uk1 = p.u.pow(k) - &one;
    // v = 0, so v^k - 1 = -1.
    let lhs = -(&rk1 * &uk1);
    let scale = if k.is_multiple_of(2) {
        p.kappa.pow(k / 2)
    } else {
        let lambda = kth_power_root(&p.kappa, 2).ok_or(EulerError::BadSquareWitness)?;
        lambda.pow(k)
    };
    let rhs_root = rk1.checked_div(&scale).expect("kappa != 0");
    if rhs_root.pow(2) != lhs {
        return Err(EulerError::IdentityFailure("(r^k-1)(u^k-1)(v^k-1) = rhs_root^2"));
    }
    Ok(SquareCertificate { lhs, rhs_root })
}

/// `(u : w : 1/κ : 1)`, cleared to integers.
pub fn point_from_params(p: &SpecialLocusParams) -> Result<SurfacePoint, EulerError> {
    if !special_locus_check(p).third_holds {
        return Err(EulerError::NotOnSpecialLocus);
    }
    let z = p.kappa.recip().expect("kappa != 0");
    SurfacePoint::from_rationals(p.k, [p.u.clone(), p.w.clone(), z, Rational::one()])
}

/// `κ = W/Z`, `u = X/W`, `w = Y/W`.
pub fn params_from_point(pt: &SurfacePoint) -> Result<SpecialLocusParams, EulerError> {
    if pt.z().is_zero() || pt.w().is_zero() {
        return Err(EulerError::OffAffineChart);
    }
    SpecialLocusParams::new(
        pt.k,
        pt.ratio(pt.w(), pt.z()),
        pt.ratio(pt.x(), pt.w()),
        pt.ratio(pt.y(), pt.w()),
    )
}
