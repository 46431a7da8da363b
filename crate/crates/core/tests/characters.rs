use std::collections::BTreeMap;

use cutjoin::characters::{character, dim_rep, CharacterTable};
use cutjoin::coeffring::{rat_int, Rat};
use cutjoin::partitions::enumerate_partitions;
use cutjoin::Partition;
use num_bigint::BigInt;
use num_traits::{One, Zero};

type PPoly = BTreeMap<Partition, Rat>;

fn h(n: i64) -> PPoly {
    let mut out = PPoly::new();
    if n == 0 {
        out.insert(Partition::empty(), Rat::one());
    } else if n > 0 {
        for mu in enumerate_partitions(n as u32) {
            let c = Rat::new(BigInt::one(), mu.z());
            out.insert(mu, c);
        }
    }
    out
}

fn mul(a: &PPoly, b: &PPoly) -> PPoly {
    let mut out = PPoly::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            *out.entry(ka.union(kb)).or_insert_with(Rat::zero) += va * vb;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// s_ν = det(h_{ν_i - i + j}) expanded in power sums.
fn schur(nu: &Partition) -> PPoly {
    let parts = nu.parts();
    let l = parts.len();
    let mut out = PPoly::new();
    for perm in permutations(l) {
        let mut term = h(0);
        for (i, &j) in perm.iter().enumerate() {
            term = mul(&term, &h(parts[i] as i64 - i as i64 + j as i64));
            if term.is_empty() {
                break;
            }
        }
        let s = rat_int(perm_sign(&perm));
        for (k, v) in term {
            *out.entry(k).or_insert_with(Rat::zero) += v * &s;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

#[test]
fn murnaghan_nakayama_matches_schur_expansion() {
    for d in 1..=6 {
        for nu in enumerate_partitions(d) {
            let s = schur(&nu);
            for mu in enumerate_partitions(d) {
                let coeff = s.get(&mu).cloned().unwrap_or_else(Rat::zero);
                let expect = coeff * Rat::from_integer(mu.z());
                assert!(expect.is_integer());
                assert_eq!(
                    rat_int(character(&nu, &mu).unwrap()),
                    expect,
                    "chi_{nu}({mu})"
                );
            }
        }
    }
}

#[test]
fn orthogonality_up_to_ten() {
    for d in 1..=10 {
        let t = CharacterTable::build(d);
        let ps = t.partitions();
        let rows = t.rows();
        let n = ps.len();
        for a in 0..n {
            for b in a..n {
                // columns
                let col: i64 = (0..n).map(|i| rows[i][a] * rows[i][b]).sum();
                let expect = if a == b { ps[a].z() } else { BigInt::zero() };
                assert_eq!(BigInt::from(col), expect, "columns {} {}", ps[a], ps[b]);
                // rows: Σ_μ χ_a(μ)χ_b(μ)/z_μ = δ
                let row: Rat = (0..n)
                    .map(|j| Rat::new(BigInt::from(rows[a][j] * rows[b][j]), ps[j].z()))
                    .sum();
                assert_eq!(row, rat_int(i64::from(a == b)), "rows {} {}", ps[a], ps[b]);
            }
        }
    }
}

#[test]
fn hook_formula_matches_identity_column() {
    for d in 1..=10 {
        let t = CharacterTable::build(d);
        let id = Partition::column(d);
        for nu in t.partitions() {
            let dim = dim_rep(nu);
            assert!(dim > BigInt::zero());
            assert_eq!(BigInt::from(t.chi(nu, &id).unwrap()), dim);
            assert_eq!(t.dim(nu).unwrap(), &dim);
        }
    }
}

#[test]
fn table_agrees_with_direct_evaluation() {
    let t = CharacterTable::build(7);
    for nu in t.partitions() {
        for mu in t.partitions() {
            assert_eq!(t.chi(nu, mu).unwrap(), character(nu, mu).unwrap());
        }
    }
    assert!(t.chi(&Partition::row(3), &Partition::row(7)).is_err());
}

#[test]
fn central_character_examples() {
    use cutjoin::characters::{central_character, verify_prop_f};
    for d in 2..=8 {
        for nu in enumerate_partitions(d) {
            let f2 = central_character(&nu, &Partition::transposition(d).unwrap()).unwrap();
            assert_eq!(f2 * 2, BigInt::from(nu.kappa()));
        }
    }
    let r = verify_prop_f(8);
    assert!(r.all_passed(), "{r}");
    assert_eq!(r.summary.passed, 3);
}
