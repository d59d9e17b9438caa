//! Euler's degree-7 curve on `X^4 + Y^4 = Z^4 + W^4`, its one-parameter
//! specialization, the resulting quartic quadruple family, and the cubic
//! family obtained from the odd-exponent map.
//!
//! The closed forms below are transcribed literally and always cross-checked
//! against the composed route (parametrization followed by the surface map).

mod poly;

pub use poly::IntPolynomial;

use num_bigint::BigInt;
use num_integer::Integer;
use thiserror::Error;

use crate::euler::{self, EulerError, SurfacePoint};
use crate::exactnum::Rational;
use crate::tuples::{same_set, verify_tuple, PowerTuple, RootSystem, TupleRecord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("parameter gives the zero point")]
    DegenerateParameter,
    #[error("parameter {param} is exceptional: {factor} vanishes")]
    ExceptionalParameter { param: Rational, factor: String },
    #[error("closed form and composed map disagree at {0}")]
    ClosedFormMismatch(Rational),
    #[error("family member at {0} failed verification")]
    VerificationFailed(Rational),
    #[error(transparent)]
    Euler(#[from] EulerError),
}

/// A binary form of fixed degree; `coeffs[i]` multiplies `α^(deg-i) β^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<BigInt>,
}

impl BinaryForm {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        BinaryForm {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval_int(&self, alpha: &BigInt, beta: &BigInt) -> BigInt {
        let deg = self.degree() as u32;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * num_traits::Pow::pow(alpha, deg - i as u32) * num_traits::Pow::pow(beta, i as u32))
            .sum()
    }

    /// The polynomial in `β` obtained by setting `α = 1`.
    pub fn dehomogenize(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.clone())
    }

    /// Value at `(α, β) = (0, 1)`.
    pub fn at_infinity(&self) -> &BigInt {
        self.coeffs.last().expect("nonempty form")
    }
}

/// The four coordinate forms `[X, Y, Z, W]` of a parametrized curve.
pub type CurveForms = [BinaryForm; 4];

/// Euler's curve:
/// `X = α⁷+α⁵β²-2α³β⁴+3α²β⁵+αβ⁶`, `Y = α⁶β-3α⁵β²-2α⁴β³+α²β⁵+β⁷`,
/// `Z = α⁷+α⁵β²-2α³β⁴-3α²β⁵+αβ⁶`, `W = α⁶β+3α⁵β²-2α⁴β³+α²β⁵+β⁷`.
pub fn euler_forms() -> CurveForms {
    [
        BinaryForm::from_i64(&[1, 0, 1, 0, -2, 3, 1, 0]),
        BinaryForm::from_i64(&[0, 1, -3, -2, 0, 1, 0, 1]),
        BinaryForm::from_i64(&[1, 0, 1, 0, -2, -3, 1, 0]),
        BinaryForm::from_i64(&[0, 1, 3, -2, 0, 1, 0, 1]),
    ]
}

/// `X^4 + Y^4 - Z^4 - W^4` for the forms with `α = 1`, as a polynomial in `β`.
pub fn quartic_residual(forms: &CurveForms) -> IntPolynomial {
    let [x, y, z, w] = forms.each_ref().map(|f| f.dehomogenize().pow(4));
    &(&x + &y) - &(&z + &w)
}

/// Exact proof that the forms parametrize a curve on the quartic surface.
///
/// `X^4+Y^4-Z^4-W^4` is homogeneous of degree 28 in `(α, β)`, so it vanishes
/// identically iff its dehomogenization at `α = 1` is the zero polynomial and
/// it vanishes at `(0, 1)`.
pub fn identity_check(forms: &CurveForms) -> bool {
    let at_inf = forms.each_ref().map(|f| num_traits::Pow::pow(f.at_infinity(), 4u32));
    let [x, y, z, w] = at_inf;
    quartic_residual(forms).is_zero() && x + y == z + w
}

pub fn euler_identity_check() -> bool {
    identity_check(&euler_forms())
}

/// Evaluates the forms at rational `(α, β)`; the result is cleared to
/// integers and normalized. Homogeneity makes the projective point
/// independent of the common scaling.
pub fn point_on_curve(forms: &CurveForms, alpha: &Rational, beta: &Rational) -> Result<SurfacePoint, ParamError> {
    let l = alpha.denom().lcm(beta.denom());
    let a = alpha.numer() * (&l / alpha.denom());
    let b = beta.numer() * (&l / beta.denom());
    let coords = forms.each_ref().map(|f| f.eval_int(&a, &b));
    SurfacePoint::new(4, coords).map_err(|_| ParamError::DegenerateParameter)
}

pub fn euler_parametrization(alpha: &Rational, beta: &Rational) -> Result<SurfacePoint, ParamError> {
    point_on_curve(&euler_forms(), alpha, beta)
}

/// The displayed factors of the quartic family, by name.
struct QuarticFactors {
    named: Vec<(&'static str, IntPolynomial)>,
}

impl QuarticFactors {
    fn new() -> Self {
        let p = IntPolynomial::from_i64;
        QuarticFactors {
            named: vec![
                ("t", p(&[0, 1])),
                ("t-1", p(&[-1, 1])),
                ("t+1", p(&[1, 1])),
                ("t^2+1", p(&[1, 0, 1])),
                ("t^4+1", p(&[1, 0, 0, 0, 1])),
                ("t^2-t-1", p(&[-1, -1, 1])),
                ("t^2+t-1", p(&[-1, 1, 1])),
                ("t^4-t^2+1", p(&[1, 0, -1, 0, 1])),
                ("t^6+4t^4-6t^3+4t^2+1", p(&[1, 0, 4, -6, 4, 0, 1])),
                ("t^6+4t^4+6t^3+4t^2+1", p(&[1, 0, 4, 6, 4, 0, 1])),
                ("t^6+t^4-2t^2+3t+1", p(&[1, 3, -2, 0, 1, 0, 1])),
                ("t^6-3t^5-2t^4+t^2+1", p(&[1, 0, 1, 0, -2, -3, 1])),
                ("t^4+3t^2+1", p(&[1, 0, 3, 0, 1])),
                ("t^6-2t^4+t^2+1", p(&[1, 0, 1, 0, -2, 0, 1])),
                ("t^6+t^4-2t^2+1", p(&[1, 0, -2, 0, 1, 0, 1])),
            ],
        }
    }

    fn get(&self, name: &str) -> &IntPolynomial {
        &self.named.iter().find(|(n, _)| *n == name).expect("known factor").1
    }
}

/// Nondegeneracy factors `X, Y, Z, W, X∓Y, X∓W, Y∓W` of the specialized point.
fn nondegeneracy_factors() -> Vec<(&'static str, IntPolynomial)> {
    let [x, y, z, w] = euler_forms().map(|f| f.dehomogenize());
    vec![
        ("X", x.clone()),
        ("Y", y.clone()),
        ("Z", z),
        ("W", w.clone()),
        ("X-Y", &x - &y),
        ("X+Y", &x + &y),
        ("X-W", &x - &w),
        ("X+W", &x + &w),
        ("Y-W", &y - &w),
        ("Y+W", &y + &w),
    ]
}

fn vanishing_factor(t: &Rational) -> Option<&'static str> {
    QuarticFactors::new()
        .named
        .into_iter()
        .chain(nondegeneracy_factors())
        .find(|(_, f)| f.eval(t).is_zero())
        .map(|(name, _)| name)
}

/// Parameters excluded from the quartic family: the rational roots of every
/// displayed factor and of every nondegeneracy factor.
pub fn exceptional_set() -> Vec<Rational> {
    let mut all: Vec<Rational> = QuarticFactors::new()
        .named
        .into_iter()
        .chain(nondegeneracy_factors())
        .flat_map(|(_, f)| f.rational_roots())
        .collect();
    all.sort();
    all.dedup();
    all
}

/// The displayed closed forms `a(t), b(t), c(t), d(t)`.
///
/// Callers must exclude exceptional `t` first.
pub fn quartic_closed_form(t: &Rational) -> [Rational; 4] {
    let f = QuarticFactors::new();
    let ev = |name: &str| f.get(name).eval(t);
    let t2 = t.pow(2);
    let w_ = ev("t^6+t^4-2t^2+3t+1").pow(2);
    let z_ = ev("t^6-3t^5-2t^4+t^2+1").pow(2);
    let div = |n: Rational, d: Rational| n.checked_div(&d).expect("non-exceptional t");

    let a_num = [
        "t-1",
        "t+1",
        "t^2+1",
        "t^4+1",
        "t^2-t-1",
        "t^2+t-1",
        "t^4-t^2+1",
        "t^6+4t^4-6t^3+4t^2+1",
        "t^6+4t^4+6t^3+4t^2+1",
    ]
    .iter()
    .fold(Rational::one(), |acc, name| acc * ev(name));
    let a = -div(a_num, &t2 * &w_ * &z_);
    let b = -div(&t2 * &w_, z_.clone());
    let c_num = Rational::from(24) * t.pow(3) * ev("t^2+1") * ev("t^4+3t^2+1") * ev("t^6-2t^4+t^2+1") * ev("t^6+t^4-2t^2+1");
    let c = -div(c_num, &w_ * &z_);
    let d = div(z_, &t2 * &w_);
    [a, b, c, d]
}

/// A member of a parametrized family together with the point it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyPoint {
    pub param: Rational,
    pub point: SurfacePoint,
    pub tuple: PowerTuple,
    pub roots: RootSystem,
}

impl FamilyPoint {
    pub fn record(&self) -> TupleRecord {
        TupleRecord {
            k: self.tuple.k(),
            elements: self.tuple.elements().to_vec(),
            roots: Some(self.roots.clone()),
            valid: true,
            source_point: Some(self.point.to_string()),
            param: Some(self.param.clone()),
            diagnostic: None,
        }
    }
}

/// The quartic quadruple at parameter `t`, computed both from the closed
/// forms and as `quartic_map(euler_parametrization(1, t))`.
pub fn family_at(t: &Rational) -> Result<FamilyPoint, ParamError> {
    if let Some(factor) = vanishing_factor(t) {
        return Err(ParamError::ExceptionalParameter {
            param: t.clone(),
            factor: factor.to_string(),
        });
    }
    let closed = quartic_closed_form(t);
    let point = euler_parametrization(&Rational::one(), t)?;
    let mapped = match euler::quartic_map(&point) {
        Ok(out) => out,
        Err(EulerError::DegenerateQuadruple { factor, .. }) => {
            return Err(ParamError::ExceptionalParameter {
                param: t.clone(),
                factor: factor.to_string(),
            })
        }
        Err(e) => return Err(e.into()),
    };
    if !same_set(&closed, &mapped.elements) {
        return Err(ParamError::ClosedFormMismatch(t.clone()));
    }
    let tuple = PowerTuple::new(4, closed.to_vec()).map_err(|_| ParamError::VerificationFailed(t.clone()))?;
    if !tuple.verify().valid {
        return Err(ParamError::VerificationFailed(t.clone()));
    }
    Ok(FamilyPoint {
        param: t.clone(),
        point,
        tuple,
        roots: mapped.roots,
    })
}

fn check_cubic_k(k_param: &Rational) -> Result<(), ParamError> {
    let factor = if k_param.is_zero() {
        "K"
    } else if k_param.pow(6).is_one() {
        "K^6-1"
    } else {
        return Ok(());
    };
    Err(ParamError::ExceptionalParameter {
        param: k_param.clone(),
        factor: factor.to_string(),
    })
}

/// The point `(K²(K⁶+2) : -(2K⁶+1) : K⁶-1 : K²(K⁶-1))` on the cubic surface,
/// with the witness `λ = K` for `W/Z = K²`.
pub fn cubic_point(k_param: &Rational) -> Result<(SurfacePoint, Rational), ParamError> {
    check_cubic_k(k_param)?;
    let one = Rational::one();
    let k2 = k_param.pow(2);
    let k6 = k_param.pow(6);
    let x = &k2 * (&k6 + Rational::from(2));
    let y = -(Rational::from(2) * &k6 + &one);
    let z = &k6 - &one;
    let w = &k2 * &z;
    let point = SurfacePoint::from_rationals(3, [x, y, z, w])?;
    Ok((point, k_param.clone()))
}

/// The displayed cubic quadruple in terms of `K`:
/// `a = 9K³(K¹²+K⁶+1)/(K⁶-1)³`, `b = -K³`,
/// `c = -(K²⁴+5K¹⁸+15K¹²+5K⁶+1)/(K³(K⁶-1)³)`, `d = 1/K³`.
pub fn cubic_closed_form(k_param: &Rational) -> Result<[Rational; 4], ParamError> {
    check_cubic_k(k_param)?;
    let one = Rational::one();
    let k3 = k_param.pow(3);
    let k6 = k_param.pow(6);
    let k12 = k6.pow(2);
    let den = (&k6 - &one).pow(3);
    let div = |n: Rational, d: &Rational| n.checked_div(d).expect("K not exceptional");
    let a = div(Rational::from(9) * &k3 * (&k12 + &k6 + &one), &den);
    let b = -&k3;
    let c_num = k6.pow(4) + Rational::from(5) * k6.pow(3) + Rational::from(15) * &k12 + Rational::from(5) * &k6 + &one;
    let c = -div(c_num, &(&k3 * &den));
    let d = div(one, &k3);
    Ok([a, b, c, d])
}

/// `{-9(t⁵+t³+t)/(t⁶-3t⁴+3t²-1), -1/t, (t⁸+5t⁶+15t⁴+5t²+1)/(t⁷-3t⁵+3t³-t), t}`,
/// verified as a cubic quadruple.
///
/// The products are cubes only when `t` is a rational cube (`t = K^-3`);
/// other `t` give [`ParamError::VerificationFailed`].
pub fn cubic_family(t: &Rational) -> Result<PowerTuple, ParamError> {
    let exceptional = |factor: &str| ParamError::ExceptionalParameter {
        param: t.clone(),
        factor: factor.to_string(),
    };
    if t.is_zero() {
        return Err(exceptional("t"));
    }
    let ev = |c: &[i64]| IntPolynomial::from_i64(c).eval(t);
    let den_a = ev(&[-1, 0, 3, 0, -3, 0, 1]);
    if den_a.is_zero() {
        return Err(exceptional("t^6-3t^4+3t^2-1"));
    }
    let den_c = ev(&[0, -1, 0, 3, 0, -3, 0, 1]);
    let a = -(Rational::from(9) * ev(&[0, 1, 0, 1, 0, 1])).checked_div(&den_a).expect("checked");
    let b = -t.recip().expect("checked");
    let c = ev(&[1, 0, 5, 0, 15, 0, 5, 0, 1]).checked_div(&den_c).expect("den_c = t * den_a");
    let tuple = PowerTuple::new(3, vec![a, b, c, t.clone()]).map_err(|_| exceptional("coincident elements"))?;
    if !verify_tuple(tuple.elements(), 3).valid {
        return Err(ParamError::VerificationFailed(t.clone()));
    }
    Ok(tuple)
}

/// `general_map_odd(cubic_point(K), K)` as a family point with parameter `K`.
pub fn cubic_member(k_param: &Rational) -> Result<FamilyPoint, ParamError> {
    let (point, lambda) = cubic_point(k_param)?;
    let out = euler::general_map_odd(&point, &lambda)?;
    let tuple = out.tuple().map_err(|_| ParamError::VerificationFailed(k_param.clone()))?;
    if !tuple.verify().valid {
        return Err(ParamError::VerificationFailed(k_param.clone()));
    }
    Ok(FamilyPoint {
        param: k_param.clone(),
        point,
        tuple,
        roots: out.roots,
    })
}

/// Zero-safe check that `BigInt` and rational views of a form agree; used
/// only to keep `eval_int` honest against `IntPolynomial::eval`.
#[cfg(test)]
fn form_eval_rational(f: &BinaryForm, alpha: &Rational, beta: &Rational) -> Rational {
    let deg = f.degree() as u32;
    f.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| Rational::from_integer(c.clone()) * alpha.pow(deg - i as u32) * beta.pow(i as u32))
        .fold(Rational::zero(), |acc, x| acc + x)
}
