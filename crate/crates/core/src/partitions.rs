//! Integer partitions, their classical statistics, and the cut/join
//! neighbours of a cycle type under multiplication by a transposition.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A partition, stored as its weakly decreasing list of positive parts.
///
/// Ordering is by size first and then reverse-lexicographic inside a fixed
/// size, so `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`. This is the canonical
/// order used for table indices, cache files and series rendering.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    /// Parts must already be positive and weakly decreasing.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// `(k)`, a single part.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Self { parts: vec![k] }
        }
    }

    /// `(1^d)`.
    pub fn column(d: u32) -> Self {
        Self {
            parts: vec![1; d as usize],
        }
    }

    /// `(2, 1^{d-2})`, the transposition class.
    pub fn transposition(d: u32) -> Result<Self> {
        if d < 2 {
            return Err(Error::Usage(format!("S_{d} has no transpositions")));
        }
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, d as usize - 2));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// m_j(μ) for every part value j that occurs.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn multiplicity(&self, j: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == j).count() as u32
    }

    /// |Aut(μ)| = Π m_j!
    pub fn aut_order(&self) -> BigInt {
        self.multiplicities()
            .values()
            .map(|&m| factorial(m))
            .product()
    }

    /// z_μ = Π m_j! j^{m_j}, the centralizer order.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .iter()
            .map(|(&j, &m)| factorial(m) * BigInt::from(j).pow(m))
            .product()
    }

    /// |C(μ)| = |μ|!/z_μ.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size()) / self.z()
    }

    /// κ_μ = Σ μ_i(μ_i − 2i + 1).
    pub fn kappa(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let p = p as i64;
                p * (p - 2 * (i as i64 + 1) + 1)
            })
            .sum()
    }

    /// n(μ) = Σ (i−1) μ_i.
    pub fn n(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Self { parts }
    }

    /// Hook lengths, row by row, left to right.
    pub fn hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - j as u32 - 1;
                let leg = conj.parts[j] - i as u32 - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Π_{e∈μ} h(e).
    pub fn hook_product(&self) -> BigInt {
        self.hooks().into_iter().map(BigInt::from).product()
    }

    /// (−1)^{|μ|−l(μ)}, the sign of any permutation of cycle type μ.
    pub fn sign(&self) -> i64 {
        if (self.size() as usize - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Drops one copy of each listed part. Returns `None` if a part is missing.
    pub fn remove_parts(&self, remove: &[u32]) -> Option<Self> {
        let mut parts = self.parts.clone();
        for r in remove {
            let pos = parts.iter().position(|p| p == r)?;
            parts.remove(pos);
        }
        Some(Self { parts })
    }

    /// Inserts parts, keeping the list sorted.
    pub fn add_parts(&self, add: &[u32]) -> Self {
        let mut parts = self.parts.clone();
        for &a in add {
            if a == 0 {
                continue;
            }
            let pos = parts.iter().position(|&p| p < a).unwrap_or(parts.len());
            parts.insert(pos, a);
        }
        Self { parts }
    }

    /// Multiset union μ ∪ ν (the partition indexing p_μ·p_ν).
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Self { parts }
    }

    pub fn statistics(&self) -> Statistics {
        let mut hooks = self.hooks();
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        Statistics {
            z: self.z(),
            kappa: self.kappa(),
            n: self.n(),
            aut_order: self.aut_order(),
            conjugate: self.conjugate(),
            hook_product: self.hook_product(),
            hooks,
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Accepts `3,1,1`, `(3,1,1)` or `3 1 1`; the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let p: u32 = tok
                .parse()
                .map_err(|_| Error::Usage(format!("bad partition part {tok:?} in {s:?}")))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

/// The classical statistics of a partition in one record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statistics {
    pub z: BigInt,
    pub kappa: i64,
    pub n: u64,
    pub aut_order: BigInt,
    pub conjugate: Partition,
    /// Hook multiset, sorted descending.
    pub hooks: Vec<u32>,
    pub hook_product: BigInt,
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// All partitions of `d` in canonical (reverse-lexicographic) order.
pub fn enumerate_partitions(d: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `d`, canonical order, starting with the empty one.
pub fn partitions_up_to(d: u32) -> Vec<Partition> {
    (0..=d).flat_map(enumerate_partitions).collect()
}

/// Partitions of `d` with exactly `l` parts, canonical order.
pub fn partitions_with_length(d: u32, l: usize) -> Vec<Partition> {
    enumerate_partitions(d)
        .into_iter()
        .filter(|p| p.len() == l)
        .collect()
}

/// Cycle types reachable from a permutation of type μ by one transposition,
/// with the number of transpositions producing each.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NeighborSet {
    pub joins: Vec<(Partition, u64)>,
    pub cuts: Vec<(Partition, u64)>,
}

impl NeighborSet {
    pub fn total_multiplicity(&self) -> u64 {
        self.joins.iter().chain(&self.cuts).map(|(_, m)| m).sum()
    }
}

pub fn cut_join_neighbors(mu: &Partition) -> Result<NeighborSet> {
    if mu.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let m = mu.multiplicities();
    let values: Vec<u32> = m.keys().copied().collect();

    let mut joins: BTreeMap<Partition, u64> = BTreeMap::new();
    for (a, &i) in values.iter().enumerate() {
        let mi = m[&i] as u64;
        for &j in &values[a..] {
            let mj = m[&j] as u64;
            let mult = if i == j {
                if mi < 2 {
                    continue;
                }
                (i as u64).pow(2) * mi * (mi - 1) / 2
            } else {
                i as u64 * j as u64 * mi * mj
            };
            let partner = mu
                .remove_parts(&[i, j])
                .expect("parts present")
                .add_parts(&[i + j]);
            *joins.entry(partner).or_insert(0) += mult;
        }
    }

    let mut cuts: BTreeMap<Partition, u64> = BTreeMap::new();
    for (&k, &mk) in &m {
        for i in 1..=k / 2 {
            let j = k - i;
            let mult = if i == j {
                i as u64 * mk as u64
            } else {
                k as u64 * mk as u64
            };
            let partner = mu
                .remove_parts(&[k])
                .expect("part present")
                .add_parts(&[j, i]);
            *cuts.entry(partner).or_insert(0) += mult;
        }
    }

    Ok(NeighborSet {
        joins: joins.into_iter().collect(),
        cuts: cuts.into_iter().collect(),
    })
}
