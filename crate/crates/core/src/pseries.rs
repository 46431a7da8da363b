//! Truncated power series in p_1, p_2, … with coefficients in a [`Ring`].
//!
//! A series is a sparse map μ ↦ coefficient of p_μ = p_{μ_1}⋯p_{μ_l}; the
//! empty partition carries the constant term. Everything of total degree
//! above the truncation D is discarded.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;

use crate::characters::{central_character, table};
use crate::coeffring::{rat, rat_int, Rat, Ring};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, factorial, partitions_with_length, Partition};
use crate::report::VerificationReport;

#[derive(Debug, Clone, PartialEq)]
pub struct PSeries<R: Ring> {
    d: u32,
    terms: BTreeMap<Partition, R>,
}

impl<R: Ring> PSeries<R> {
    pub fn zero(d: u32) -> Self {
        Self {
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(d: u32) -> Self {
        Self::constant(d, R::one())
    }

    pub fn constant(d: u32, c: R) -> Self {
        Self::monomial(d, Partition::empty(), c)
    }

    /// c·p_μ, or zero when |μ| > d.
    pub fn monomial(d: u32, mu: Partition, c: R) -> Self {
        let mut s = Self::zero(d);
        s.add_term(mu, c);
        s
    }

    /// p_k
    pub fn p(d: u32, k: u32) -> Self {
        Self::monomial(d, Partition::row(k), R::one())
    }

    pub fn from_terms(d: u32, terms: impl IntoIterator<Item = (Partition, R)>) -> Self {
        let mut s = Self::zero(d);
        for (mu, c) in terms {
            s.add_term(mu, c);
        }
        s
    }

    pub(crate) fn add_term(&mut self, mu: Partition, c: R) {
        if mu.size() > self.d || c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mu) {
            Some(slot) => {
                *slot = slot.add(&c);
                if slot.is_zero() {
                    self.terms.remove(&mu);
                }
            }
            None => {
                self.terms.insert(mu, c);
            }
        }
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<Partition, R> {
        &self.terms
    }

    pub fn coeff(&self, mu: &Partition) -> R {
        self.terms.get(mu).cloned().unwrap_or_else(R::zero)
    }

    pub fn constant_term(&self) -> R {
        self.coeff(&Partition::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same terms, new truncation (terms above it are dropped).
    pub fn truncate(&self, d: u32) -> Self {
        Self::from_terms(d, self.terms.iter().map(|(k, v)| (k.clone(), v.clone())))
    }

    /// Terms with |μ| = n.
    pub fn homogeneous(&self, n: u32) -> Self {
        Self::from_terms(
            self.d,
            self.terms
                .iter()
                .filter(|(k, _)| k.size() == n)
                .map(|(k, v)| (k.clone(), v.clone())),
        )
    }

    fn same_degree(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::DegreeMismatch(self.d, other.d));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_degree(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(R::neg)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }

    pub fn scale_by(&self, r: &R) -> Self {
        self.map_coeffs(|c| c.mul(r))
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> PSeries<S> {
        PSeries::from_terms(self.d, self.terms.iter().map(|(k, v)| (k.clone(), f(v))))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_degree(other)?;
        let mut out = Self::zero(self.d);
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                if ka.size() + kb.size() <= self.d {
                    out.add_term(ka.union(kb), va.mul(vb));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.d);
        for _ in 0..e {
            acc = acc.mul(self).expect("same degree");
        }
        acc
    }

    /// Σ_n F^n/n!; F must have no constant term.
    pub fn exp_p(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::ExpConstantTerm);
        }
        let mut out = Self::one(self.d);
        let mut power = Self::one(self.d);
        for n in 1..=self.d {
            power = power.mul(self)?.scale(&rat(1, n as i64));
            if power.is_zero() {
                break;
            }
            out = out.add(&power)?;
        }
        Ok(out)
    }

    /// Σ_n (−1)^{n−1} X^n/n with G = 1 + X.
    pub fn log_p(&self) -> Result<Self> {
        if self.constant_term() != R::one() {
            return Err(Error::LogConstantTerm);
        }
        let x = self.sub(&Self::one(self.d))?;
        let mut out = Self::zero(self.d);
        let mut power = Self::one(self.d);
        for n in 1..=self.d {
            power = power.mul(&x)?;
            if power.is_zero() {
                break;
            }
            let sign = if n % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale(&rat(sign, n as i64)))?;
        }
        Ok(out)
    }

    /// ∂/∂p_k
    pub fn derivative(&self, k: u32) -> Self {
        let mut out = Self::zero(self.d);
        for (mu, c) in &self.terms {
            let m = mu.multiplicity(k);
            if m > 0 {
                let rest = mu.remove_parts(&[k]).expect("part present");
                out.add_term(rest, c.scale(&rat(m as i64, 1)));
            }
        }
        out
    }

    /// ½ Σ_{i,j} (i+j) p_i p_j ∂/∂p_{i+j}
    pub fn cut_operator(&self) -> Self {
        let mut out = Self::zero(self.d);
        for (mu, c) in &self.terms {
            for (k, m) in mu.multiplicities() {
                let rest = mu.remove_parts(&[k]).expect("part present");
                for i in 1..k {
                    let w = rat((k as i64) * (m as i64), 2);
                    out.add_term(rest.add_parts(&[i, k - i]), c.scale(&w));
                }
            }
        }
        out
    }

    /// ½ Σ_{i,j} ij p_{i+j} ∂²/∂p_i∂p_j
    pub fn join_operator(&self) -> Self {
        let mut out = Self::zero(self.d);
        for (mu, c) in &self.terms {
            let mult = mu.multiplicities();
            for (&i, &mi) in &mult {
                for (&j, &mj) in &mult {
                    let pairs = if i == j { mi * (mi - 1) } else { mi * mj };
                    if pairs == 0 {
                        continue;
                    }
                    let rest = mu.remove_parts(&[i, j]).expect("parts present");
                    let w = rat((i as i64) * (j as i64) * (pairs as i64), 2);
                    out.add_term(rest.add_parts(&[i + j]), c.scale(&w));
                }
            }
        }
        out
    }

    pub fn cut_join(&self) -> Self {
        self.cut_operator()
            .add(&self.join_operator())
            .expect("same degree")
    }

    /// ½ Σ_{i,j} ij p_{i+j} (∂F/∂p_i)(∂G/∂p_j), the term that appears when
    /// the join operator is pushed through a logarithm.
    pub fn quadratic(&self, other: &Self) -> Result<Self> {
        self.same_degree(other)?;
        let mut out = Self::zero(self.d);
        for (mu, a) in &self.terms {
            for (nu, b) in &other.terms {
                if mu.size() + nu.size() > self.d {
                    continue;
                }
                let ab = a.mul(b);
                for (i, mi) in mu.multiplicities() {
                    let left = mu.remove_parts(&[i]).expect("part present");
                    for (j, mj) in nu.multiplicities() {
                        let right = nu.remove_parts(&[j]).expect("part present");
                        let w = rat((i as i64) * (j as i64) * (mi as i64) * (mj as i64), 2);
                        out.add_term(left.union(&right).add_parts(&[i + j]), ab.scale(&w));
                    }
                }
            }
        }
        Ok(out)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for PSeries<R> {
    /// One term per line, `p_(μ): coefficient`, in canonical partition order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mu, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "p_{mu}: {c}")?;
        }
        Ok(())
    }
}

fn sub_multisets(mult: &[(u32, u32)]) -> Vec<Vec<(u32, u32)>> {
    let mut out = vec![Vec::new()];
    for &(k, m) in mult {
        let mut next = Vec::new();
        for prefix in &out {
            for take in 0..=m {
                let mut v: Vec<(u32, u32)> = prefix.clone();
                if take > 0 {
                    v.push((k, take));
                }
                next.push(v);
            }
        }
        out = next;
    }
    out
}

fn from_mult(mult: &[(u32, u32)]) -> Partition {
    let parts: Vec<u32> = mult
        .iter()
        .flat_map(|&(k, m)| std::iter::repeat_n(k, m as usize))
        .collect();
    Partition::new(parts).expect("positive parts")
}

/// Connected part of G by the explicit decomposition sum
///
///   F_μ = Σ_{n≥1} (−1)^{n−1}/n Σ_{(μ¹,…,μⁿ)} G_{μ¹}⋯G_{μⁿ}
///
/// over ordered n-tuples of nonempty sub-multisets with μ¹ ∪ … ∪ μⁿ = μ.
/// Ordered tuples with weight 1/n is the convention that agrees with
/// [`PSeries::log_p`]; it enumerates splittings directly and does not go
/// through series multiplication.
pub fn connected_by_decomposition<R: Ring>(g: &PSeries<R>) -> Result<PSeries<R>> {
    if g.constant_term() != R::one() {
        return Err(Error::LogConstantTerm);
    }
    let mut memo: HashMap<(Partition, u32), R> = HashMap::new();
    let mut out = PSeries::zero(g.degree());
    for d in 1..=g.degree() {
        for mu in enumerate_partitions(d) {
            let mut total = R::zero();
            for n in 1..=mu.len() as u32 {
                let t = tuples(g, &mu, n, &mut memo);
                let sign = if n % 2 == 1 { 1 } else { -1 };
                total = total.add(&t.scale(&rat(sign, n as i64)));
            }
            out.add_term(mu, total);
        }
    }
    Ok(out)
}

/// Σ over ordered n-tuples of nonempty sub-multisets covering μ of ΠG.
fn tuples<R: Ring>(
    g: &PSeries<R>,
    mu: &Partition,
    n: u32,
    memo: &mut HashMap<(Partition, u32), R>,
) -> R {
    if n == 1 {
        return g.coeff(mu);
    }
    if let Some(v) = memo.get(&(mu.clone(), n)) {
        return v.clone();
    }
    let mult: Vec<(u32, u32)> = mu.multiplicities().into_iter().collect();
    let mut total = R::zero();
    for first in sub_multisets(&mult) {
        let head = from_mult(&first);
        if head.is_empty() || head.len() == mu.len() {
            continue;
        }
        let c = g.coeff(&head);
        if c.is_zero() {
            continue;
        }
        let rest = mu.remove_parts(head.parts()).expect("sub-multiset");
        total = total.add(&c.mul(&tuples(g, &rest, n - 1, memo)));
    }
    memo.insert((mu.clone(), n), total.clone());
    total
}

/// Σ_{|μ|=d, l(μ)=l} (l−1)!·d^{l−1}/Π_j m_j(μ)! · p_μ
pub fn cut_power_closed_form(d: u32, l: u32) -> PSeries<Rat> {
    let lead = rat_int(factorial(l - 1) * BigInt::from(d).pow(l - 1));
    PSeries::from_terms(
        d,
        partitions_with_length(d, l as usize).into_iter().map(|mu| {
            let denom: BigInt = mu
                .multiplicities()
                .values()
                .map(|&m| factorial(m))
                .product();
            (mu, &lead / rat_int(denom))
        }),
    )
}

/// C^{l−1} p_d, checked against [`cut_power_closed_form`].
pub fn cut_power(d: u32, l: u32) -> Result<PSeries<Rat>> {
    if l == 0 || l > d {
        return Err(Error::Usage(format!(
            "cut_power needs 1 <= l <= d, got d={d}, l={l}"
        )));
    }
    let mut s = PSeries::<Rat>::p(d, d);
    for _ in 1..l {
        s = s.cut_operator();
    }
    let closed = cut_power_closed_form(d, l);
    if s != closed {
        return Err(Error::Consistency(format!(
            "C^{}(p_{d}) = {s}, closed form {closed}",
            l - 1
        )));
    }
    Ok(s)
}

/// Σ_{μ⊢|ν|} χ_ν(μ)/z_μ · p_μ (the Schur function s_ν in power sums).
pub fn schur_in_power_sums(nu: &Partition) -> PSeries<Rat> {
    let d = nu.size();
    let t = table(d);
    PSeries::from_terms(
        d,
        t.partitions().iter().map(|mu| {
            let chi = t.chi(nu, mu).expect("same degree");
            (mu.clone(), Rat::new(BigInt::from(chi), mu.z()))
        }),
    )
}

/// (C + J) s_ν = f_ν(2)·s_ν.
pub fn central_character_action_check(nu: &Partition) -> VerificationReport {
    let mut report = VerificationReport::new("prop-cj");
    let d = nu.size();
    let s = schur_in_power_sums(nu);
    let f2 = if d >= 2 {
        central_character(nu, &Partition::transposition(d).expect("d >= 2")).expect("integral")
    } else {
        BigInt::from(0)
    };
    let lhs = s.scale(&rat_int(f2.clone()));
    let rhs = s.cut_join();
    report.check(format!("{nu}"), lhs == rhs, || {
        format!("f(2)·s = {lhs}\n(C+J)s = {rhs}")
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn mono(d: u32, s: &str, c: Rat) -> PSeries<Rat> {
        PSeries::monomial(d, p(s), c)
    }

    #[test]
    fn products() {
        let p1 = PSeries::<Rat>::p(3, 1);
        assert_eq!(p1.mul(&p1).unwrap(), mono(3, "1,1", rat(1, 1)));
        let a = PSeries::one(3).add(&p1).unwrap();
        let b = PSeries::one(3).sub(&p1).unwrap();
        let expect = PSeries::one(3).sub(&mono(3, "1,1", rat(1, 1))).unwrap();
        assert_eq!(a.mul(&b).unwrap(), expect);
        assert_eq!(
            PSeries::<Rat>::p(3, 2).mul(&p1).unwrap(),
            mono(3, "2,1", rat(1, 1))
        );
        assert!(PSeries::<Rat>::p(2, 2).mul(&p1).is_err());
        assert!(PSeries::<Rat>::p(1, 2).is_zero());
    }

    #[test]
    fn exp_and_log_examples() {
        let p1 = PSeries::<Rat>::p(2, 1);
        let e = p1.exp_p().unwrap();
        let expect = PSeries::from_terms(
            2,
            [
                (p(""), rat(1, 1)),
                (p("1"), rat(1, 1)),
                (p("1,1"), rat(1, 2)),
            ],
        );
        assert_eq!(e, expect);
        let g = PSeries::one(2).add(&p1).unwrap();
        let expect = PSeries::from_terms(2, [(p("1"), rat(1, 1)), (p("1,1"), rat(-1, 2))]);
        assert_eq!(g.log_p().unwrap(), expect);
        assert_eq!(PSeries::<Rat>::one(2).exp_p(), Err(Error::ExpConstantTerm));
        assert_eq!(p1.log_p(), Err(Error::LogConstantTerm));
    }

    #[test]
    fn operator_examples() {
        assert_eq!(
            PSeries::<Rat>::p(2, 2).cut_operator(),
            mono(2, "1,1", rat(1, 1))
        );
        assert_eq!(mono(2, "1,1", rat(1, 1)).join_operator(), PSeries::p(2, 2));
        assert!(PSeries::<Rat>::p(2, 1).cut_operator().is_zero());
        let f = mono(4, "1,1", rat(1, 1));
        // Q(p1², p1²) = ½·Σ_{i=j=1} p2·(2p1)(2p1)
        assert_eq!(f.quadratic(&f).unwrap(), mono(4, "2,1,1", rat(2, 1)));
    }

    #[test]
    fn cut_power_examples() {
        assert_eq!(cut_power(2, 2).unwrap(), mono(2, "1,1", rat(1, 1)));
        assert_eq!(cut_power(5, 1).unwrap(), PSeries::p(5, 5));
        assert_eq!(cut_power(3, 3).unwrap(), mono(3, "1,1,1", rat(3, 1)));
        assert!(cut_power(3, 4).is_err());
    }

    #[test]
    fn action_check_small() {
        assert!(central_character_action_check(&p("1")).all_passed());
        let s2 = schur_in_power_sums(&p("2"));
        assert_eq!(s2.coeff(&p("2")), rat(1, 2));
        assert_eq!(s2.coeff(&p("1,1")), rat(1, 2));
        assert!(central_character_action_check(&p("2")).all_passed());
    }

    #[test]
    fn decomposition_matches_log() {
        let g = PSeries::from_terms(
            4,
            [
                (p(""), rat(1, 1)),
                (p("1"), rat(2, 1)),
                (p("2"), rat(-1, 3)),
                (p("1,1"), rat(5, 1)),
                (p("2,1"), rat(1, 7)),
                (p("1,1,1,1"), rat(3, 1)),
            ],
        );
        assert_eq!(connected_by_decomposition(&g).unwrap(), g.log_p().unwrap());
    }

    #[test]
    fn rendering() {
        let s = PSeries::from_terms(
            3,
            [
                (p("1"), rat(1, 2)),
                (p(""), rat(1, 1)),
                (p("2,1"), rat(-3, 1)),
            ],
        );
        assert_eq!(s.to_string(), "p_(): 1\np_(1): 1/2\np_(2,1): -3");
    }
}
