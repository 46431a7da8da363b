use cutjoin::coeffring::{rat, GaussRat, RatFn, Ring};
use cutjoin::marinovafa::{
    check_cutjoin_mv, check_evidence, check_limit, check_limit_all, check_mv_golden, check_rinit,
    check_vhook, dv, eval_v1, r_bullet, r_connected, r_connected_by_decomposition, v_hook,
};
use cutjoin::partitions::partitions_up_to;
use cutjoin::pseries::central_character_action_check;
use cutjoin::Partition;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn hook_and_product_forms_of_v_agree() {
    let r = check_vhook(8);
    assert!(r.all_passed(), "{r}");
    assert_eq!(r.cases.len(), partitions_up_to(8).len() - 1);
}

#[test]
fn v_is_one_over_product_of_box_sines() {
    // independent: multiply out Π_e 2 sin(h(e)λ/2) and invert
    for nu in partitions_up_to(6).into_iter().filter(|n| !n.is_empty()) {
        let mut prod = RatFn::one();
        for h in nu.hooks() {
            // 2 sin(hλ/2) = 2 / (1/sin(hλ/2))
            prod = prod.mul(&RatFn::inv_sin_half(h));
        }
        let scale = rat(1, 1 << nu.size());
        assert_eq!(v_hook(&nu), prod.scale(&scale), "{nu}");
    }
}

#[test]
fn evidence_identity() {
    for n in 1..=8 {
        let r = check_evidence(n);
        assert!(r.all_passed(), "{r}");
    }
}

#[test]
fn initial_value_at_tau_zero() {
    let r = check_rinit(6);
    assert!(r.all_passed(), "{r}");
}

#[test]
fn cut_and_join_in_tau() {
    let r = check_cutjoin_mv(6);
    assert!(r.all_passed(), "{r}");
    assert_eq!(r.cases.len(), 12);
}

#[test]
fn doubled_derivative_is_not_the_equation() {
    // D_v R^• = (C+J) R^• pins the factor: twice the left side differs
    let b = r_bullet(3);
    let lhs = dv(&b);
    let doubled = lhs.map_coeffs(|c| c.scale(&rat(2, 1)));
    assert_ne!(doubled, b.cut_join());
    assert_eq!(lhs, b.cut_join());
}

#[test]
fn eigenvalue_form_of_the_equation() {
    for d in 1..=6 {
        for nu in cutjoin::enumerate_partitions(d) {
            assert!(central_character_action_check(&nu).all_passed());
        }
    }
}

#[test]
fn limit_at_tau_zero() {
    let r = check_limit_all(6);
    assert!(r.all_passed(), "{r}");
    let r = check_limit(&p("1,1"));
    // i·D_v R_(1,1) at v=1 is −1/(4 sin λ)
    let c = r_connected(2).coeff(&p("1,1")).dv().eval_v1();
    let got = RatFn::constant(GaussRat::i()).mul(&c);
    assert_eq!(got, RatFn::inv_sin_half(2).scale(&rat(-1, 4)));
    assert!(r.all_passed());
}

#[test]
fn connected_series_two_ways() {
    for d in 1..=6 {
        assert_eq!(r_connected(d), r_connected_by_decomposition(d), "D={d}");
    }
}

#[test]
fn exp_log_round_trip() {
    for d in 1..=6 {
        let b = r_bullet(d);
        assert_eq!(r_connected(d).exp_p().unwrap(), b, "D={d}");
    }
}

#[test]
fn connected_terms_vanish_at_tau_zero_beyond_one_row() {
    let r = eval_v1(&r_connected(6));
    for (mu, c) in r.terms() {
        if mu.len() >= 2 {
            assert!(c.is_zero(), "{mu}");
        }
    }
}

#[test]
fn golden_coefficients() {
    let r = check_mv_golden();
    assert!(r.all_passed(), "{r}");
    assert_eq!(r.notes.len(), 1);
}

#[test]
fn limit_uses_sine_of_half_degree() {
    // (l−1)! d^{l−2} / (2 sin(dλ/2) Π m_j!), not the same with sin(dλ)
    for (mu, c) in [("1,1", rat(1, 4)), ("2,1", rat(1, 2)), ("1,1,1", rat(1, 2))] {
        let mu = p(mu);
        let (l, d) = (mu.len() as i64, mu.size());
        let mut x = r_connected(d).coeff(&mu);
        for _ in 0..l - 1 {
            x = x.dv();
        }
        let a = RatFn::constant(GaussRat::i_pow(l - 1 - (l + d as i64 - 2))).mul(&x.eval_v1());
        assert_eq!(a, RatFn::inv_sin_half(d).scale(&c), "{mu}");
        assert_ne!(a, RatFn::inv_sin_half(2 * d).scale(&c), "{mu}");
    }
}
