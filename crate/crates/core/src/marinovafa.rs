//! The combinatorial side of the Mariño–Vafa formula.
//!
//! With u = e^{−√-1 λ/4} and v = e^{√-1 τλ},
//! e^{√-1(τ+½)κλ/2} = v^{κ/2} u^{−κ} and 2 sin(kλ/2) = −√-1·s_k where
//! s_k = u^{−2k} − u^{2k}. Every τ-derivative turns into the exponent
//! operator D_v: ∂/∂τ (v^m) = √-1 λ m v^m.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::characters::table;
use crate::coeffring::{rat, rat_int, GaussRat, Rat, RatFn, Ring, UVLaurent};
use crate::partitions::{enumerate_partitions, factorial, partitions_up_to, Partition};
use crate::pseries::{connected_by_decomposition, PSeries};
use crate::report::VerificationReport;

/// Power series in p with sin-quotient coefficients in u, v.
pub type MVSeries = PSeries<RatFn>;

fn s_factor(k: u32) -> UVLaurent {
    let k = k as i32;
    UVLaurent::from_terms([
        ((-2 * k, 0), GaussRat::one()),
        ((2 * k, 0), GaussRat::one().neg()),
    ])
}

fn i_pow(k: i64) -> RatFn {
    RatFn::constant(GaussRat::i_pow(k))
}

/// V_ν as the double product over pairs of rows and over boxes.
pub fn v_product(nu: &Partition) -> RatFn {
    let parts = nu.parts();
    let l = parts.len();
    let mut num = UVLaurent::one();
    let mut den: BTreeMap<u32, u32> = BTreeMap::new();
    // sin(Aλ/2)/sin(Bλ/2) = s_A/s_B
    for a in 0..l {
        for b in a + 1..l {
            num = num.mul(&s_factor(parts[a] - parts[b] + (b - a) as u32));
            *den.entry((b - a) as u32).or_default() += 1;
        }
    }
    // 1/(2 sin(kλ/2)) = √-1/s_k
    for (i, &row) in parts.iter().enumerate() {
        for v in 1..=row {
            *den.entry(v + (l - 1 - i) as u32).or_default() += 1;
        }
    }
    let num = num.mul(&UVLaurent::constant(GaussRat::i_pow(nu.size() as i64)));
    RatFn::new(num, den)
}

/// V_ν = 1/Π_{e∈ν} 2 sin(h(e)λ/2).
pub fn v_hook(nu: &Partition) -> RatFn {
    let mut den: BTreeMap<u32, u32> = BTreeMap::new();
    for h in nu.hooks() {
        *den.entry(h).or_default() += 1;
    }
    RatFn::new(UVLaurent::constant(GaussRat::i_pow(nu.size() as i64)), den)
}

/// e^{√-1(τ+½)κ_ν λ/2} V_ν
fn framed_v(nu: &Partition) -> RatFn {
    let kappa = nu.kappa() as i32;
    let shift = UVLaurent::monomial((-kappa, kappa / 2), GaussRat::one());
    RatFn::from_laurent(shift).mul(&v_hook(nu))
}

/// R^• through degree D: the p_μ coefficient is Σ_ν χ_ν(μ)/z_μ · e^{√-1(τ+½)κ_νλ/2} V_ν.
pub fn r_bullet(d_max: u32) -> MVSeries {
    let mut out = PSeries::one(d_max);
    for d in 1..=d_max {
        let t = table(d);
        let framed: Vec<RatFn> = t.partitions().iter().map(framed_v).collect();
        for mu in t.partitions() {
            let z = mu.z();
            let mut c = RatFn::zero();
            for (nu, w) in t.partitions().iter().zip(&framed) {
                let chi = t.chi(nu, mu).expect("same degree");
                if chi != 0 {
                    c = c.add(&w.scale(&Rat::new(BigInt::from(chi), z.clone())));
                }
            }
            out = out
                .add(&PSeries::monomial(d_max, mu.clone(), c))
                .expect("same degree");
        }
    }
    out
}

/// R = log R^•.
pub fn r_connected(d_max: u32) -> MVSeries {
    r_bullet(d_max).log_p().expect("constant term 1")
}

/// R from the explicit sum over ordered decompositions μ¹ ∪ … ∪ μⁿ = μ
/// with weight (−1)^{n−1}/n, without going through series products.
pub fn r_connected_by_decomposition(d_max: u32) -> MVSeries {
    connected_by_decomposition(&r_bullet(d_max)).expect("constant term 1")
}

pub fn eval_v1(s: &MVSeries) -> MVSeries {
    s.map_coeffs(RatFn::eval_v1)
}

pub fn dv(s: &MVSeries) -> MVSeries {
    s.map_coeffs(RatFn::dv)
}

fn render(s: &MVSeries) -> String {
    s.terms()
        .iter()
        .map(|(mu, c)| format!("  p_{mu}: {}", c.render_sin()))
        .collect::<Vec<_>>()
        .join("\n")
}

/// V_ν from the hook product equals the double product, |ν| ≤ n.
pub fn check_vhook(n: u32) -> VerificationReport {
    let mut report = VerificationReport::new("vhook");
    for nu in partitions_up_to(n).into_iter().filter(|p| !p.is_empty()) {
        let (a, b) = (v_hook(&nu), v_product(&nu));
        report.check(format!("{nu}"), a == b, || {
            format!(
                "hook form {} vs product form {}",
                a.render_sin(),
                b.render_sin()
            )
        });
    }
    report
}

/// D_v R^• = (C+J) R^• and D_v R = (C+J) R + Q(R, R), degree by degree.
///
/// Both sides of the τ-equation carry the same factor √-1·λ, which is
/// cancelled here.
pub fn check_cutjoin_mv(d_max: u32) -> VerificationReport {
    let mut report = VerificationReport::new("mv-cutjoin");
    let bullet = r_bullet(d_max);
    let lhs = dv(&bullet);
    let rhs = bullet.cut_join();
    for d in 1..=d_max {
        let (a, b) = (lhs.homogeneous(d), rhs.homogeneous(d));
        report.check(format!("bullet/d={d}"), a == b, || {
            format!("D_v:\n{}\n(C+J):\n{}", render(&a), render(&b))
        });
    }
    let conn = bullet.log_p().expect("constant term 1");
    let lhs = dv(&conn);
    let rhs = conn
        .cut_join()
        .add(&conn.quadratic(&conn).expect("same degree"))
        .expect("same degree");
    for d in 1..=d_max {
        let (a, b) = (lhs.homogeneous(d), rhs.homogeneous(d));
        report.check(format!("connected/d={d}"), a == b, || {
            format!("D_v:\n{}\n(C+J)+Q:\n{}", render(&a), render(&b))
        });
    }
    report
}

/// Σ_η χ_η(ρ) e^{√-1κ_ηλ/4}/Π 2 sin(hλ/2) = √-1^{n−l(ρ)}/(2^{l(ρ)} Π_k sin^{m_k}(kλ/2)).
pub fn check_evidence(n: u32) -> VerificationReport {
    let mut report = VerificationReport::new("mv-evidence");
    let t = table(n);
    let weighted: Vec<RatFn> = t
        .partitions()
        .iter()
        .map(|eta| {
            let k = eta.kappa() as i32;
            RatFn::from_laurent(UVLaurent::monomial((-k, 0), GaussRat::one())).mul(&v_hook(eta))
        })
        .collect();
    for rho in t.partitions() {
        let mut lhs = RatFn::zero();
        for (eta, w) in t.partitions().iter().zip(&weighted) {
            let chi = t.chi(eta, rho).expect("same degree");
            lhs = lhs.add(&w.scale(&rat_int(chi)));
        }
        let mut rhs = i_pow((n as usize - rho.len()) as i64);
        for &k in rho.parts() {
            rhs = rhs.mul(&RatFn::inv_sin_half(k).scale(&rat(1, 2)));
        }
        report.check(format!("n={n}/{rho}"), lhs == rhs, || {
            format!("{} vs {}", lhs.render_sin(), rhs.render_sin())
        });
    }
    report
}

/// Σ_d √-1^{d−1} p_d/(2d sin(dλ/2)) through degree D.
pub fn r_initial_closed_form(d_max: u32) -> MVSeries {
    PSeries::from_terms(
        d_max,
        (1..=d_max).map(|d| {
            let c = i_pow(d as i64 - 1).mul(&RatFn::inv_sin_half(d).scale(&rat(1, 2 * d as i64)));
            (Partition::row(d), c)
        }),
    )
}

/// log R^•|_{τ=0} = −Σ_d √-1^{d+1} p_d/(2d sin(dλ/2)).
pub fn check_rinit(d_max: u32) -> VerificationReport {
    let mut report = VerificationReport::new("mv-init");
    let lhs = eval_v1(&r_bullet(d_max)).log_p().expect("constant term 1");
    let rhs = r_initial_closed_form(d_max);
    for d in 1..=d_max {
        let (a, b) = (lhs.homogeneous(d), rhs.homogeneous(d));
        report.check(format!("d={d}"), a == b, || {
            format!("log:\n{}\nclosed form:\n{}", render(&a), render(&b))
        });
    }
    report
}

/// The τ → 0 behaviour of R_μ with l = l(μ), d = |μ|:
/// ∂_τ^k R_μ|_{τ=0} = 0 for k < l − 1, and
/// ∂_τ^{l−1} R_μ|_{τ=0} = λ^{l−1} √-1^{l+d−2} (l−1)! d^{l−2} / (2 sin(dλ/2) Π_j m_j!).
/// In terms of D_v: ∂_τ^k = (√-1 λ)^k D_v^k at v = 1.
pub fn check_limit(mu: &Partition) -> VerificationReport {
    let r = r_connected(mu.size());
    check_limit_in(&r, mu)
}

fn check_limit_in(r: &MVSeries, mu: &Partition) -> VerificationReport {
    let mut report = VerificationReport::new("mv-limit");
    let l = mu.len() as u32;
    let d = mu.size();
    let mut current = r.coeff(mu);
    for k in 0..l - 1 {
        let at0 = current.eval_v1();
        report.check(format!("{mu}/k={k}"), at0.is_zero(), || {
            format!("D_v^{k} R at v=1 is {}", at0.render_sin())
        });
        current = current.dv();
    }
    let lhs = i_pow(l as i64 - 1).mul(&current.eval_v1());
    let aut: BigInt = mu
        .multiplicities()
        .values()
        .map(|&m| factorial(m))
        .product();
    let c = Rat::new(
        factorial(l - 1) * BigInt::from(d).pow(l - 1),
        aut * BigInt::from(d),
    );
    let rhs = i_pow((l + d) as i64 - 2).mul(&RatFn::inv_sin_half(d).scale(&(c / rat(2, 1))));
    report.check(format!("{mu}/k={}", l - 1), lhs == rhs, || {
        format!("{} vs {}", lhs.render_sin(), rhs.render_sin())
    });
    report
}

/// [`check_limit`] for every μ with |μ| ≤ n, sharing one series per degree.
pub fn check_limit_all(n: u32) -> VerificationReport {
    let mut report = VerificationReport::new("mv-limit");
    for d in 1..=n {
        let r = r_connected(d);
        for mu in enumerate_partitions(d) {
            report.merge(check_limit_in(&r, &mu));
        }
    }
    report
}

/// cos θ where e^{√-1θ} = u^a v^b.
fn cos_uv(u: i32, v: i32) -> UVLaurent {
    UVLaurent::from_terms([
        ((u, v), GaussRat::real(rat(1, 2))),
        ((-u, -v), GaussRat::real(rat(1, 2))),
    ])
}

fn sin_uv(u: i32, v: i32) -> UVLaurent {
    let half_over_i = GaussRat::new(Rat::zero(), rat(-1, 2));
    UVLaurent::from_terms([((u, v), half_over_i.clone()), ((-u, -v), half_over_i.neg())])
}

/// 1/(sin(λ/2) sin λ)
fn inv_s1_s2() -> RatFn {
    RatFn::inv_sin_half(1).mul(&RatFn::inv_sin_half(2))
}

/// Reference low-degree coefficients of R^• and R.
#[derive(Debug, Clone)]
pub struct MvGolden {
    pub id: &'static str,
    pub value: RatFn,
    pub misprint: Option<RatFn>,
    pub erratum: Option<&'static str>,
}

/// The closed forms of the degree ≤ 2 coefficients, written with explicit
/// trigonometric factors: e^{√-1(τ+½)λ} = v·u^{−2}, e^{√-1λ/2} = u^{−2}.
pub fn mv_golden() -> Vec<MvGolden> {
    let sin_tau_half = RatFn::from_laurent(sin_uv(-2, 1)); // sin((τ+½)λ)
    let cos_tau_half = RatFn::from_laurent(cos_uv(-2, 1)); // cos((τ+½)λ)
    let cos_half = RatFn::from_laurent(cos_uv(-2, 0)); // cos(λ/2)
    let i = RatFn::constant(GaussRat::i());
    // sin(τλ/2) sin((τ+1)λ/2) = ½(cos(λ/2) − cos((τ+½)λ))
    let sin_sin = cos_half.sub(&cos_tau_half).scale(&rat(1, 2));
    vec![
        MvGolden {
            id: "bullet/(1)",
            value: RatFn::inv_sin_half(1).scale(&rat(1, 2)),
            misprint: None,
            erratum: None,
        },
        MvGolden {
            id: "bullet/(2)",
            value: i.mul(&sin_tau_half).mul(&inv_s1_s2()).scale(&rat(1, 4)),
            misprint: None,
            erratum: None,
        },
        MvGolden {
            id: "bullet/(1,1)",
            value: cos_tau_half.mul(&inv_s1_s2()).scale(&rat(1, 4)),
            misprint: None,
            erratum: None,
        },
        MvGolden {
            id: "connected/(1)",
            value: RatFn::inv_sin_half(1).scale(&rat(1, 2)),
            misprint: None,
            erratum: None,
        },
        MvGolden {
            id: "connected/(2)",
            value: i.mul(&sin_tau_half).mul(&inv_s1_s2()).scale(&rat(1, 4)),
            misprint: None,
            erratum: None,
        },
        MvGolden {
            id: "connected/(1,1)",
            value: sin_sin.mul(&inv_s1_s2()).scale(&rat(-1, 2)),
            misprint: Some(sin_sin.mul(&inv_s1_s2()).scale(&rat(-1, 4))),
            erratum: Some(
                "p_(1,1) connected: cos((τ+½)λ)/(4 sin(λ/2) sin λ) − 1/(8 sin²(λ/2)) equals \
                 −sin(τλ/2) sin((τ+1)λ/2)/(2 sin(λ/2) sin λ); the form with 4 in the \
                 denominator is off by a factor 2",
            ),
        },
    ]
}

/// R^• and R through degree 2 against [`mv_golden`], plus the τ = 0 values.
pub fn check_mv_golden() -> VerificationReport {
    let mut report = VerificationReport::new("mv-golden");
    let bullet = r_bullet(2);
    let conn = bullet.log_p().expect("constant term 1");
    for g in mv_golden() {
        let (kind, eta) = g.id.split_once('/').expect("kind/partition");
        let eta: Partition = eta.parse().expect("valid partition");
        let got = if kind == "bullet" {
            bullet.coeff(&eta)
        } else {
            conn.coeff(&eta)
        };
        report.check(g.id, got == g.value, || {
            format!(
                "computed {} expected {}",
                got.render_sin(),
                g.value.render_sin()
            )
        });
        if let Some(m) = &g.misprint {
            report.check(format!("{}/misprint-differs", g.id), *m != got, || {
                "recorded misprint equals the computed value".into()
            });
        }
        if let Some(n) = g.erratum {
            report.note(n);
        }
    }
    let p1 = bullet.coeff(&"1".parse().unwrap());
    report.check("bullet/(1)/tau-free", p1.v_exponents() == vec![0], || {
        p1.render_sin()
    });
    let at0 = eval_v1(&bullet);
    let checks = [
        (
            "2",
            RatFn::constant(GaussRat::i())
                .mul(&RatFn::inv_sin_half(2))
                .scale(&rat(1, 4)),
        ),
        ("1,1", RatFn::inv_sin_half(1).pow(2).scale(&rat(1, 8))),
    ];
    for (eta, expect) in checks {
        let got = at0.coeff(&eta.parse().unwrap());
        report.check(format!("bullet/({eta})/tau=0"), got == expect, || {
            got.render_sin()
        });
    }
    report
}
