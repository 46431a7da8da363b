//! Exact coefficient rings.
//!
//! Everything here is exact: big rationals, Gaussian rationals, sparse
//! Laurent polynomials in the exponential generators
//!
//! * `u = e^{-√-1 λ/4}` (the Mariño–Vafa side),
//! * `v = e^{√-1 τ λ}` (τ-dependence, integer exponents only),
//! * `x = e^{λ}` (the Hurwitz side),
//!
//! quotients by products of `sin(kλ/2)` factors, and λ-Taylor series
//! truncated at a fixed order.

mod gauss;
mod lambda;
mod laurent;
mod ratfn;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use gauss::GaussRat;
pub use lambda::LambdaSeries;
pub use laurent::{
    cos_half, cosh_x, sin_half, sinh_x, x_to_lambda, Exponent, Laurent, ULaurent, UVLaurent,
    XLaurent,
};
pub use ratfn::RatFn;

pub type Rat = BigRational;

/// A commutative ring with exact equality and a ℚ-algebra structure.
///
/// `PSeries` is generic over this trait so the same cut-and-join code runs
/// over rationals, `x`-Laurent polynomials and sin-quotients.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, r: &Rat) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn from_rat(r: &Rat) -> Self {
        Self::one().scale(r)
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rat as Zero>::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: impl Into<BigInt>) -> Rat {
    Rat::from_integer(n.into())
}

/// Integer power with a possibly negative exponent.
pub fn rat_powi(base: &Rat, e: i64) -> Rat {
    let mut acc = <Rat as One>::one();
    for _ in 0..e.unsigned_abs() {
        acc *= base;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// `a/b` when the denominator is not 1, otherwise `a`.
pub(crate) fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Formats `c*name` with sign handling for term-by-term rendering.
/// Returns (is_negative, magnitude text).
pub(crate) fn signed_term(c: &Rat, name: &str) -> (bool, String) {
    let neg = c.is_negative();
    let a = c.abs();
    let body = if name.is_empty() {
        fmt_rat(&a)
    } else if a.is_one() {
        name.to_string()
    } else if a.denom().is_one() {
        format!("{}*{}", a.numer(), name)
    } else {
        format!("({})*{}", fmt_rat(&a), name)
    };
    (neg, body)
}

pub(crate) fn join_signed(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body)
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body)
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body)
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
