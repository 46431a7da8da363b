use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{join_signed, rat, signed_term, GaussRat, LambdaSeries, Rat, Ring};

/// Exponent lattice of a Laurent ring: `i32` for one generator,
/// `(i32, i32)` for two.
pub trait Exponent: Ord + Copy + fmt::Debug + Send + Sync + 'static {
    fn origin() -> Self;
    fn plus(self, other: Self) -> Self;
    fn negated(self) -> Self;
    /// Monomial text, empty for the origin.
    fn monomial(self, vars: &[&str]) -> String;
}

fn power(var: &str, e: i32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl Exponent for i32 {
    fn origin() -> Self {
        0
    }
    fn plus(self, other: Self) -> Self {
        self + other
    }
    fn negated(self) -> Self {
        -self
    }
    fn monomial(self, vars: &[&str]) -> String {
        power(vars[0], self)
    }
}

impl Exponent for (i32, i32) {
    fn origin() -> Self {
        (0, 0)
    }
    fn plus(self, other: Self) -> Self {
        (self.0 + other.0, self.1 + other.1)
    }
    fn negated(self) -> Self {
        (-self.0, -self.1)
    }
    fn monomial(self, vars: &[&str]) -> String {
        let parts: Vec<String> = [power(vars[0], self.0), power(vars[1], self.1)]
            .into_iter()
            .filter(|s| !s.is_empty())
            .collect();
        parts.join("*")
    }
}

/// Sparse Laurent polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Laurent<K: Exponent, C: Ring> {
    terms: BTreeMap<K, C>,
}

/// Polynomial in `u = e^{-√-1 λ/4}` over ℚ(√-1).
pub type ULaurent = Laurent<i32, GaussRat>;
/// Polynomial in `(u, v)` with `v = e^{√-1 τ λ}`; keys are `(u-exp, v-exp)`.
pub type UVLaurent = Laurent<(i32, i32), GaussRat>;
/// Polynomial in `x = e^{λ}` over ℚ.
pub type XLaurent = Laurent<i32, Rat>;

impl<K: Exponent, C: Ring> Laurent<K, C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(K::origin(), c)
    }

    pub fn monomial(k: K, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (K, C)>) -> Self {
        let mut out = Self {
            terms: BTreeMap::new(),
        };
        for (k, c) in iter {
            out.add_term(k, &c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<K, C> {
        &self.terms
    }

    pub fn coeff(&self, k: K) -> C {
        self.terms.get(&k).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, k: K, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(existing) => {
                let s = existing.add(c);
                if s.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    /// Applies a map on exponents, merging collisions.
    pub fn map_exponents<K2: Exponent>(&self, f: impl Fn(K) -> K2) -> Laurent<K2, C> {
        Laurent::from_terms(self.terms.iter().map(|(&k, c)| (f(k), c.clone())))
    }

    pub fn map_coeffs(&self, f: impl Fn(K, &C) -> C) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, c)| (k, f(k, c))))
    }

    /// Multiplication by a single monomial.
    pub fn shift(&self, k: K) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e.plus(k), c.clone()))
                .collect(),
        }
    }

    pub fn min_exponent(&self) -> Option<K> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<K> {
        self.terms.keys().next_back().copied()
    }

    /// Deterministic text, exponents descending.
    pub fn render(&self, vars: &[&str]) -> String
    where
        C: TermFmt,
    {
        join_signed(
            self.terms
                .iter()
                .rev()
                .map(|(&k, c)| c.term(&k.monomial(vars))),
        )
    }
}

impl<K: Exponent, C: Ring> Ring for Laurent<K, C> {
    fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c);
        }
        out
    }
    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, &c.neg());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                out.add_term(a.plus(b), &ca.mul(cb));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, c)| (k, c.neg())).collect(),
        }
    }
    fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, c)| (k, c.scale(r))).collect(),
        }
    }
}

/// Coefficient formatting inside a rendered polynomial.
pub trait TermFmt {
    fn term(&self, monomial: &str) -> (bool, String);
}

impl TermFmt for Rat {
    fn term(&self, monomial: &str) -> (bool, String) {
        signed_term(self, monomial)
    }
}

impl TermFmt for GaussRat {
    fn term(&self, monomial: &str) -> (bool, String) {
        if self.im.is_zero() {
            return signed_term(&self.re, monomial);
        }
        if self.re.is_zero() {
            let name = if monomial.is_empty() {
                "i".to_string()
            } else {
                format!("i*{monomial}")
            };
            return signed_term(&self.im, &name);
        }
        let body = if monomial.is_empty() {
            self.to_string()
        } else {
            format!("{self}*{monomial}")
        };
        (false, body)
    }
}

impl XLaurent {
    /// λ ↦ −λ, i.e. x ↦ x⁻¹.
    pub fn invert_x(&self) -> Self {
        self.map_exponents(|k| -k)
    }

    /// d/dλ acting as x^k ↦ k·x^k.
    pub fn lambda_derivative(&self) -> Self {
        self.map_coeffs(|k, c| c * Rat::from_integer(BigInt::from(k)))
    }

    /// Value at λ = 0.
    pub fn at_zero(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |acc, c| acc + c)
    }

    pub fn is_even(&self) -> bool {
        self.invert_x() == *self
    }

    pub fn is_odd(&self) -> bool {
        self.invert_x() == self.neg()
    }

    /// Closed-form rendering as a combination of `cosh(kλ)` / `sinh(kλ)`.
    /// Splits into even and odd parts; each is exact.
    pub fn render_hyperbolic(&self) -> String {
        let mut terms: Vec<(bool, String)> = Vec::new();
        let max = self.terms.keys().map(|k| k.abs()).max().unwrap_or(0);
        for k in (0..=max).rev() {
            let a = self.coeff(k);
            let b = self.coeff(-k);
            if k == 0 {
                if !a.is_zero() {
                    terms.push(signed_term(&a, ""));
                }
                continue;
            }
            // a x^k + b x^{-k} = (a+b) cosh(kλ) + (a-b) sinh(kλ)
            let ch = &a + &b;
            let sh = &a - &b;
            let arg = if k == 1 {
                "λ".to_string()
            } else {
                format!("{k}λ")
            };
            if !ch.is_zero() {
                terms.push(signed_term(&ch, &format!("cosh({arg})")));
            }
            if !sh.is_zero() {
                terms.push(signed_term(&sh, &format!("sinh({arg})")));
            }
        }
        join_signed(terms)
    }
}

impl ULaurent {
    /// u ↦ u⁻¹, i.e. λ ↦ −λ.
    pub fn invert_u(&self) -> Self {
        self.map_exponents(|k| -k)
    }

    /// u ↦ u⁻¹ together with complex conjugation of coefficients; this is
    /// complex conjugation of the function for real λ.
    pub fn conj_invert(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, c)| (-k, c.conj())))
    }

    pub fn to_uv(&self) -> UVLaurent {
        self.map_exponents(|k| (k, 0))
    }
}

impl UVLaurent {
    /// Specialisation τ = 0, i.e. v = 1. The result has only v-exponent 0.
    pub fn eval_v1(&self) -> Self {
        self.map_exponents(|(a, _)| (a, 0))
    }

    /// D_v: v^m ↦ m·v^m, the formal τ-derivative with √-1·λ removed.
    pub fn dv(&self) -> Self {
        self.map_coeffs(|(_, m), c| c.scale(&Rat::from_integer(BigInt::from(m))))
    }

    /// Terms with v-exponent exactly `m`.
    pub fn v_part(&self, m: i32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|((_, b), _)| *b == m)
                .map(|(&k, c)| (k, c.clone())),
        )
    }

    pub fn v_exponents(&self) -> Vec<i32> {
        let mut v: Vec<i32> = self.terms.keys().map(|&(_, b)| b).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn to_u(&self) -> Option<ULaurent> {
        if self.terms.keys().any(|&(_, b)| b != 0) {
            return None;
        }
        Some(self.map_exponents(|(a, _)| a))
    }

    /// Exact quotient by `u^{-2k} - u^{2k}`, or `None` if it does not divide.
    pub fn div_sin_factor(&self, k: u32) -> Option<Self> {
        if self.is_empty() {
            return Some(Self::zero());
        }
        let n = 4 * k as i32;
        let mut by_v: BTreeMap<i32, BTreeMap<i32, GaussRat>> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            by_v.entry(b).or_default().insert(a, c.clone());
        }
        let mut out = Self::zero();
        for (b, mut rem) in by_v {
            let lo = *rem.keys().next().unwrap();
            // Divide by (u^n - 1), top term first.
            while let Some((&e, _)) = rem.iter().next_back() {
                if e < lo + n {
                    return None;
                }
                let c = rem.remove(&e).unwrap();
                let q = e - n;
                let entry = rem.entry(q).or_insert_with(GaussRat::zero);
                *entry = entry.add(&c);
                if entry.is_zero() {
                    rem.remove(&q);
                }
                // P / (u^{-2k} - u^{2k}) = -u^{2k} · P / (u^{4k} - 1)
                out.add_term((q + 2 * k as i32, b), &c.neg());
            }
        }
        Some(out)
    }
}

/// `sin(kλ/2) = (u^{-2k} - u^{2k}) / (2√-1)`.
pub fn sin_half(k: i32) -> ULaurent {
    let half_over_i = GaussRat::new(Rat::zero(), rat(-1, 2));
    Laurent::from_terms([(-2 * k, half_over_i.clone()), (2 * k, half_over_i.neg())])
}

/// `cos(kλ/2) = (u^{-2k} + u^{2k}) / 2`.
pub fn cos_half(k: i32) -> ULaurent {
    let half = GaussRat::real(rat(1, 2));
    Laurent::from_terms([(-2 * k, half.clone()), (2 * k, half)])
}

/// `sinh(kλ) = (x^k - x^{-k})/2`.
pub fn sinh_x(k: i32) -> XLaurent {
    Laurent::from_terms([(k, rat(1, 2)), (-k, rat(-1, 2))])
}

/// `cosh(kλ) = (x^k + x^{-k})/2`.
pub fn cosh_x(k: i32) -> XLaurent {
    Laurent::from_terms([(k, rat(1, 2)), (-k, rat(1, 2))])
}

/// Substitutes `x = e^λ` and expands to order `order` in λ.
pub fn x_to_lambda(p: &XLaurent, order: usize) -> LambdaSeries {
    let mut coeffs = vec![Rat::zero(); order + 1];
    for (&k, c) in p.terms() {
        // c·e^{kλ} = Σ c k^n/n! λ^n
        let k = Rat::from_integer(BigInt::from(k));
        let mut term = c.clone();
        for (n, slot) in coeffs.iter_mut().enumerate() {
            if n > 0 {
                term = term * &k / Rat::from_integer(BigInt::from(n));
            }
            *slot += &term;
            if term.is_zero() {
                break;
            }
        }
    }
    LambdaSeries::from_coeffs(coeffs)
}

impl<K: Exponent, C: Ring> Default for Laurent<K, C> {
    fn default() -> Self {
        <Self as Ring>::zero()
    }
}

impl fmt::Display for XLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&["x"]))
    }
}

impl fmt::Display for ULaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&["u"]))
    }
}

impl fmt::Display for UVLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&["u", "v"]))
    }
}
