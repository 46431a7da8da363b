use std::fmt;

use num_bigint::BigInt;

use super::{join_signed, signed_term, Rat, Ring};
use crate::error::{Error, Result};

/// Σ_{k≤N} c_k λ^k, truncated at a fixed order N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaSeries {
    coeffs: Vec<Rat>,
}

impl LambdaSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    /// Order is `coeffs.len() - 1`; an empty vector is read as the zero series of order 0.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rat::zero());
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<Rat> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, Rat::zero());
        Self { coeffs }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::DegreeMismatch(
                self.order() as u32,
                other.order() as u32,
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.order();
        let mut coeffs = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self { coeffs })
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inv(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotUnit);
        }
        let n = self.order();
        let mut out = vec![Rat::zero(); n + 1];
        out[0] = c0.recip();
        for k in 1..=n {
            let mut s = Rat::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -s / c0;
        }
        Ok(Self { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    /// Division by λ^k: requires c_0..c_{k-1} = 0. The order drops by k.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::NotDivisible(k));
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible(k));
        }
        Ok(Self {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// λ ↦ c·λ.
    pub fn rescale_variable(&self, c: &Rat) -> Self {
        let mut p = Rat::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a * &p;
                p *= c;
                out
            })
            .collect();
        Self { coeffs }
    }

    /// 𝒮(kλ) = sinh(kλ/2)/(kλ/2) = Σ_n (kλ/2)^{2n}/(2n+1)!.
    pub fn s_function(k: i64, order: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); order + 1];
        let half_k = Rat::new(BigInt::from(k), BigInt::from(2));
        let mut term = Rat::one();
        for n in 0..=order / 2 {
            if n > 0 {
                let a = BigInt::from(2 * n as i64);
                let b = BigInt::from(2 * n as i64 + 1);
                term = term * &half_k * &half_k / Rat::from_integer(a * b);
            }
            coeffs[2 * n] = term.clone();
        }
        Self { coeffs }
    }
}

impl fmt::Display for LambdaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let mono = match k {
                    0 => String::new(),
                    1 => "λ".to_string(),
                    _ => format!("λ^{k}"),
                };
                signed_term(c, &mono)
            });
        write!(f, "{} + O(λ^{})", join_signed(terms), self.order() + 1)
    }
}
