//! Irreducible characters of S_d.
//!
//! Entries come from the Murnaghan–Nakayama rule, run on beta-sets: removing
//! a border strip of length r is moving one bead from position b to b − r,
//! and the strip's height is the number of beads strictly in between.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, LazyLock, Mutex, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, factorial, Partition};
use crate::report::VerificationReport;

/// Environment variable naming the on-disk table cache directory.
pub const CACHE_ENV: &str = "CUTJOIN_CACHE_DIR";

const HEADER: &str = "chartable v1";

type Memo = HashMap<(Vec<u32>, Vec<u32>), i64>;

fn mn(nu: &[u32], mu: &[u32], memo: &mut Memo) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return i64::from(nu.is_empty());
    };
    let key = (nu.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let l = nu.len();
    let beta: Vec<u32> = nu
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i) as u32)
        .collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let smaller: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (l - 1 - j) as u32)
            .filter(|&p| p > 0)
            .collect();
        let value = mn(&smaller, rest, memo);
        total += if between % 2 == 0 { value } else { -value };
    }
    memo.insert(key, total);
    total
}

fn size_check(nu: &Partition, mu: &Partition) -> Result<()> {
    if nu.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: nu.to_string(),
            left_size: nu.size(),
            right: mu.to_string(),
            right_size: mu.size(),
        });
    }
    Ok(())
}

/// χ_ν on the class of cycle type μ.
pub fn character(nu: &Partition, mu: &Partition) -> Result<i64> {
    size_check(nu, mu)?;
    Ok(mn(nu.parts(), mu.parts(), &mut Memo::new()))
}

/// dim R_ν by the hook-length formula.
pub fn dim_rep(nu: &Partition) -> BigInt {
    factorial(nu.size()) / nu.hook_product()
}

/// f_ν(μ) = |C(μ)|·χ_ν(μ)/dim R_ν. Always an integer; a remainder means a
/// bug upstream and is reported as an error.
pub fn central_character(nu: &Partition, mu: &Partition) -> Result<BigInt> {
    let chi = character(nu, mu)?;
    central_from_parts(nu, mu, chi, &dim_rep(nu))
}

fn central_from_parts(nu: &Partition, mu: &Partition, chi: i64, dim: &BigInt) -> Result<BigInt> {
    let num = mu.class_size() * BigInt::from(chi);
    if !(&num % dim).is_zero() {
        return Err(Error::NonIntegral {
            nu: nu.to_string(),
            mu: mu.to_string(),
            value: format!("{num}/{dim}"),
        });
    }
    Ok(num / dim)
}

/// The full table χ_ν(μ) for ν, μ ⊢ d in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    d: u32,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    table: Vec<Vec<i64>>,
    dims: Vec<BigInt>,
}

impl CharacterTable {
    pub fn build(d: u32) -> Self {
        let partitions = enumerate_partitions(d);
        let table = partitions
            .par_iter()
            .map(|nu| {
                let mut memo = Memo::new();
                partitions
                    .iter()
                    .map(|mu| mn(nu.parts(), mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        Self::from_rows(d, partitions, table)
    }

    fn from_rows(d: u32, partitions: Vec<Partition>, table: Vec<Vec<i64>>) -> Self {
        let index = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let dims = partitions.iter().map(dim_rep).collect();
        Self {
            d,
            partitions,
            index,
            table,
            dims,
        }
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.table
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    fn idx(&self, p: &Partition) -> Result<usize> {
        self.index_of(p).ok_or_else(|| Error::SizeMismatch {
            left: p.to_string(),
            left_size: p.size(),
            right: format!("table of degree {}", self.d),
            right_size: self.d,
        })
    }

    pub fn chi(&self, nu: &Partition, mu: &Partition) -> Result<i64> {
        Ok(self.table[self.idx(nu)?][self.idx(mu)?])
    }

    pub fn dim(&self, nu: &Partition) -> Result<&BigInt> {
        Ok(&self.dims[self.idx(nu)?])
    }

    pub fn central(&self, nu: &Partition, mu: &Partition) -> Result<BigInt> {
        let (i, j) = (self.idx(nu)?, self.idx(mu)?);
        central_from_parts(nu, mu, self.table[i][j], &self.dims[i])
    }

    /// Plain-text cache format: header line, then one row per ν.
    pub fn to_text(&self) -> String {
        let mut out = format!("{HEADER} d={}\n", self.d);
        for row in &self.table {
            let line: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |why: &str| Error::Cache(why.to_string());
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad("empty file"))?;
        let d: u32 = header
            .strip_prefix(HEADER)
            .and_then(|rest| rest.trim().strip_prefix("d="))
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| bad("unrecognised header"))?;
        let partitions = enumerate_partitions(d);
        let n = partitions.len();
        let table: Vec<Vec<i64>> = lines
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(str::parse)
                    .collect::<std::result::Result<Vec<i64>, _>>()
            })
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("non-integer entry"))?;
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(bad("wrong table shape"));
        }
        let t = Self::from_rows(d, partitions, table);
        // cheap sanity: trivial row all ones, identity column equals dimensions
        let col = n - 1;
        if t.table[0].iter().any(|&v| v != 1)
            || (0..n).any(|i| BigInt::from(t.table[i][col]) != t.dims[i])
        {
            return Err(bad("table fails sanity check"));
        }
        Ok(t)
    }
}

fn file_name(d: u32) -> String {
    format!("chartable-d{d}.txt")
}

/// Reads a cached table for degree d from `dir`, if a valid one exists.
pub fn load_table(dir: &Path, d: u32) -> Result<Option<CharacterTable>> {
    let path = dir.join(file_name(d));
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
    };
    let t = CharacterTable::from_text(&text)?;
    if t.d != d {
        return Err(Error::Cache(format!(
            "{} holds degree {}",
            path.display(),
            t.d
        )));
    }
    Ok(Some(t))
}

/// Writes via a temporary file and an atomic rename.
pub fn store_table(dir: &Path, table: &CharacterTable) -> Result<PathBuf> {
    let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(table.to_text().as_bytes()).map_err(io)?;
    let path = dir.join(file_name(table.d));
    tmp.persist(&path).map_err(|e| io(e.error))?;
    Ok(path)
}

/// The per-user default cache location.
pub fn default_cache_dir() -> Option<PathBuf> {
    dirs::cache_dir().map(|d| d.join("cutjoin"))
}

static CACHE_DIR: LazyLock<RwLock<Option<PathBuf>>> =
    LazyLock::new(|| RwLock::new(std::env::var_os(CACHE_ENV).map(PathBuf::from)));

static TABLES: LazyLock<Mutex<HashMap<u32, Arc<CharacterTable>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Sets (or disables, with `None`) the directory used by [`table`].
/// Initially taken from `CUTJOIN_CACHE_DIR`; unset means no disk cache.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *CACHE_DIR.write().unwrap() = dir;
}

pub fn cache_dir() -> Option<PathBuf> {
    CACHE_DIR.read().unwrap().clone()
}

/// Shared table for degree d: memory, then disk, then a fresh build.
/// An unreadable or corrupt cache file is rebuilt and overwritten.
pub fn table(d: u32) -> Arc<CharacterTable> {
    if let Some(t) = TABLES.lock().unwrap().get(&d) {
        return Arc::clone(t);
    }
    let dir = cache_dir();
    let loaded = dir.as_deref().and_then(|p| load_table(p, d).ok().flatten());
    let t = match loaded {
        Some(t) => t,
        None => {
            let t = CharacterTable::build(d);
            if let Some(p) = &dir {
                // a failed write only costs a rebuild next time
                let _ = store_table(p, &t);
            }
            t
        }
    };
    let t = Arc::new(t);
    TABLES
        .lock()
        .unwrap()
        .entry(d)
        .or_insert_with(|| Arc::clone(&t))
        .clone()
}

/// Integrality of f_ν(μ), f_{ν'}(μ) = (−1)^{|μ|−l(μ)} f_ν(μ) and f_ν(2) = κ_ν/2
/// over all ν, μ ⊢ d.
pub fn verify_prop_f(d: u32) -> VerificationReport {
    let mut report = VerificationReport::new("prop-f");
    let t = table(d);
    let ps = t.partitions();
    let mut values = vec![vec![BigInt::zero(); ps.len()]; ps.len()];
    let mut integral = true;
    for (i, nu) in ps.iter().enumerate() {
        for (j, mu) in ps.iter().enumerate() {
            match t.central(nu, mu) {
                Ok(v) => values[i][j] = v,
                Err(e) => {
                    integral = false;
                    report.fail(format!("d={d}/integral/{nu}/{mu}"), e.to_string());
                }
            }
        }
    }
    if integral {
        report.pass(format!("d={d}/integral"));
    }
    let mut transpose_ok = true;
    for (i, nu) in ps.iter().enumerate() {
        let k = t
            .index_of(&nu.conjugate())
            .expect("conjugate has the same size");
        for (j, mu) in ps.iter().enumerate() {
            let expect = &values[i][j] * BigInt::from(mu.sign());
            if values[k][j] != expect {
                transpose_ok = false;
                report.fail(
                    format!("d={d}/transpose/{nu}/{mu}"),
                    format!(
                        "f_{}({mu}) = {} but expected {expect}",
                        nu.conjugate(),
                        values[k][j]
                    ),
                );
            }
        }
    }
    if transpose_ok {
        report.pass(format!("d={d}/transpose"));
    }
    if d >= 2 {
        let two = Partition::transposition(d).expect("d >= 2");
        let j = t.index_of(&two).unwrap();
        let mut kappa_ok = true;
        for (i, nu) in ps.iter().enumerate() {
            let k = nu.kappa();
            if values[i][j].clone() * 2 != BigInt::from(k) {
                kappa_ok = false;
                report.fail(
                    format!("d={d}/kappa/{nu}"),
                    format!("f(2) = {} but kappa/2 = {k}/2", values[i][j]),
                );
            }
        }
        if kappa_ok {
            report.pass(format!("d={d}/kappa"));
        }
    }
    report
}
