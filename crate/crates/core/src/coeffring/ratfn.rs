use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;
use serde_json::{json, Value};

use super::{fmt_rat, rat, GaussRat, Rat, Ring, ULaurent, UVLaurent};

/// A quotient `num / Π_k s_k^{e_k}` with `s_k = u^{-2k} - u^{2k} = 2√-1·sin(kλ/2)`.
///
/// Every denominator met on the Mariño–Vafa side is a product of such
/// sine factors, so the denominator is kept factored. Construction cancels
/// any whole factor `s_k` that divides the numerator. Because `s_j` and `s_k`
/// share cyclotomic factors the representation is not unique; equality is
/// decided by cross-multiplication.
#[derive(Debug, Clone)]
pub struct RatFn {
    num: UVLaurent,
    den: BTreeMap<u32, u32>,
}

fn sin_factor(k: u32) -> UVLaurent {
    let k = k as i32;
    UVLaurent::from_terms([
        ((-2 * k, 0), GaussRat::one()),
        ((2 * k, 0), GaussRat::one().neg()),
    ])
}

impl RatFn {
    pub fn new(num: UVLaurent, den: BTreeMap<u32, u32>) -> Self {
        let mut out = Self { num, den };
        out.normalize();
        out
    }

    pub fn from_laurent(num: UVLaurent) -> Self {
        Self {
            num,
            den: BTreeMap::new(),
        }
    }

    pub fn from_u(num: ULaurent) -> Self {
        Self::from_laurent(num.to_uv())
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::from_laurent(UVLaurent::constant(c))
    }

    /// `1/sin(kλ/2)` for k ≥ 1.
    pub fn inv_sin_half(k: u32) -> Self {
        assert!(k > 0, "sin(0) is not invertible");
        let mut den = BTreeMap::new();
        den.insert(k, 1);
        Self {
            num: UVLaurent::constant(GaussRat::new(Rat::zero(), rat(2, 1))),
            den,
        }
    }

    pub fn numerator(&self) -> &UVLaurent {
        &self.num
    }

    /// Multiplicities of the sine factors `s_k` in the denominator.
    pub fn sin_denominator(&self) -> &BTreeMap<u32, u32> {
        &self.den
    }

    /// The denominator expanded as a Laurent polynomial.
    pub fn denominator(&self) -> UVLaurent {
        self.den.iter().fold(UVLaurent::one(), |acc, (&k, &e)| {
            acc.mul(&sin_factor(k).pow(e))
        })
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let keys: Vec<u32> = self.den.keys().rev().copied().collect();
        for k in keys {
            let e = self.den.get_mut(&k).unwrap();
            while *e > 0 {
                match self.num.div_sin_factor(k) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|_, e| *e > 0);
    }

    /// Numerators of `self` and `other` over the common denominator max(e_k).
    fn over_common(&self, other: &Self) -> (UVLaurent, UVLaurent, BTreeMap<u32, u32>) {
        let mut common = self.den.clone();
        for (&k, &e) in &other.den {
            let slot = common.entry(k).or_insert(0);
            *slot = (*slot).max(e);
        }
        let lift = |f: &Self| {
            common.iter().fold(f.num.clone(), |acc, (&k, &e)| {
                let missing = e - f.den.get(&k).copied().unwrap_or(0);
                if missing == 0 {
                    acc
                } else {
                    acc.mul(&sin_factor(k).pow(missing))
                }
            })
        };
        (lift(self), lift(other), common)
    }

    fn map_num(&self, f: impl Fn(&UVLaurent) -> UVLaurent) -> Self {
        Self::new(f(&self.num), self.den.clone())
    }

    /// τ = 0 (v = 1).
    pub fn eval_v1(&self) -> Self {
        self.map_num(UVLaurent::eval_v1)
    }

    /// D_v on the numerator; the denominator is v-free.
    pub fn dv(&self) -> Self {
        self.map_num(UVLaurent::dv)
    }

    pub fn v_part(&self, m: i32) -> Self {
        self.map_num(|n| n.v_part(m))
    }

    pub fn v_exponents(&self) -> Vec<i32> {
        self.num.v_exponents()
    }

    /// Rendering in sine-product notation, e.g. `1/(2 sin(λ/2))`.
    pub fn render_sin(&self) -> String {
        let total: u32 = self.den.values().sum();
        // num / Π s_k^e = [num / (2i)^E] / Π sin(kλ/2)^e
        let two_i_inv = GaussRat::new(Rat::zero(), rat(-1, 2));
        let num = self.num.mul(&UVLaurent::constant(two_i_inv.pow(total)));
        if self.den.is_empty() {
            return num.to_string();
        }
        let sins: Vec<String> = self
            .den
            .iter()
            .map(|(&k, &e)| {
                let name = sin_name(k);
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        let sins = sins.join(" ");
        if num.len() == 1 {
            if let Some(c) = num.terms().get(&(0, 0)) {
                let (unit, mag) = if c.im.is_zero() {
                    ("", c.re.clone())
                } else if c.re.is_zero() {
                    ("i", c.im.clone())
                } else {
                    return format!("({c})/({sins})");
                };
                let sign = if mag.is_negative() { "-" } else { "" };
                let mag = mag.abs();
                let numer = match (num_traits::One::is_one(mag.numer()), unit) {
                    (true, "i") => "i".to_string(),
                    (_, u) => format!("{}{}", mag.numer(), u),
                };
                return if num_traits::One::is_one(mag.denom()) {
                    format!("{sign}{numer}/({sins})")
                } else {
                    format!("{sign}{numer}/({} {sins})", mag.denom())
                };
            }
        }
        format!("({num})/({sins})")
    }

    /// Machine-readable form: numerator terms `[u_exp, v_exp, re, im]` over
    /// `Π (u^{-2k} - u^{2k})^e` listed as `[k, e]`.
    pub fn to_json(&self) -> Value {
        let num: Vec<Value> = self
            .num
            .terms()
            .iter()
            .map(|(&(a, b), c)| json!([a, b, fmt_rat(&c.re), fmt_rat(&c.im)]))
            .collect();
        let den: Vec<Value> = self.den.iter().map(|(&k, &e)| json!([k, e])).collect();
        json!({ "numerator": num, "sin_denominator": den })
    }
}

fn sin_name(k: u32) -> String {
    match k {
        1 => "sin(λ/2)".to_string(),
        2 => "sin(λ)".to_string(),
        k if k % 2 == 0 => format!("sin({}λ)", k / 2),
        k => format!("sin({k}λ/2)"),
    }
}

impl PartialEq for RatFn {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        let (a, b, _) = self.over_common(other);
        a == b
    }
}

impl Ring for RatFn {
    fn zero() -> Self {
        Self::from_laurent(UVLaurent::zero())
    }
    fn one() -> Self {
        Self::from_laurent(UVLaurent::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b, den) = self.over_common(other);
        Self::new(a.add(&b), den)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut den = self.den.clone();
        for (&k, &e) in &other.den {
            *den.entry(k).or_insert(0) += e;
        }
        Self::new(self.num.mul(&other.num), den)
    }
    fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(r),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_sin())
    }
}
