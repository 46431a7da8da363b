//! Named verification suites with default and quick bounds.

use rayon::prelude::*;

use crate::characters::verify_prop_f;
use crate::error::{Error, Result};
use crate::hurwitz::{
    hurwitz_number_sanity, phi_bullet, phi_circ, polynomiality_experiment, s_lambda_identities,
    verify_cutjoin_phi, verify_golden, verify_parity, verify_routes,
};
use crate::marinovafa::{
    check_cutjoin_mv, check_evidence, check_limit_all, check_mv_golden, check_rinit, check_vhook,
    r_bullet, r_connected, r_connected_by_decomposition,
};
use crate::partitions::enumerate_partitions;
use crate::pseries::{central_character_action_check, connected_by_decomposition, cut_power};
use crate::report::{Status, VerificationReport};

pub const SUITES: &[&str] = &[
    "prop-f",
    "prop-cj",
    "vhook",
    "mv-cutjoin",
    "mv-init",
    "mv-evidence",
    "mv-limit",
    "mv-golden",
    "phi-cutjoin",
    "phi-golden",
    "phi-routes",
    "parity",
    "s-identities",
    "cp-lemma",
    "connected",
    "hurwitz-numbers",
];

/// Overrides for a suite's bounds. `None` means the suite default.
#[derive(Debug, Clone, Default)]
pub struct Bounds {
    /// Largest |ν|, |μ| or d swept.
    pub max_d: Option<u32>,
    /// Truncation degree of series.
    pub series_d: Option<u32>,
    /// Restrict Hurwitz suites to one genus of the base.
    pub h: Option<u32>,
    /// Use the smaller bounds.
    pub quick: bool,
}

impl Bounds {
    fn max_d(&self, full: u32, quick: u32) -> u32 {
        self.max_d.unwrap_or(if self.quick { quick } else { full })
    }

    fn series_d(&self, full: u32, quick: u32) -> u32 {
        self.series_d
            .unwrap_or(if self.quick { quick } else { full })
    }

    fn genera(&self, default: &[u32]) -> Vec<u32> {
        match self.h {
            Some(h) => vec![h],
            None => default.to_vec(),
        }
    }
}

fn gather(suite: &str, parts: Vec<VerificationReport>) -> VerificationReport {
    let mut report = VerificationReport::new(suite);
    for p in parts {
        report.merge(p);
    }
    report
}

/// Runs one named suite, or every suite for `"all"`.
pub fn run_suite(name: &str, bounds: &Bounds) -> Result<VerificationReport> {
    if name == "all" {
        let mut report = VerificationReport::new("all");
        for s in SUITES {
            report.absorb(run_suite(s, bounds)?);
        }
        return Ok(report);
    }
    let report = match name {
        "prop-f" => {
            let n = bounds.max_d(10, 8);
            gather(name, (1..=n).into_par_iter().map(verify_prop_f).collect())
        }
        "prop-cj" => {
            let n = bounds.max_d(8, 6);
            let nus: Vec<_> = (1..=n).flat_map(enumerate_partitions).collect();
            gather(
                name,
                nus.par_iter().map(central_character_action_check).collect(),
            )
        }
        "vhook" => check_vhook(bounds.max_d(8, 6)),
        "mv-cutjoin" => check_cutjoin_mv(bounds.series_d(6, 4)),
        "mv-init" => check_rinit(bounds.series_d(6, 4)),
        "mv-evidence" => {
            let n = bounds.max_d(8, 6);
            gather(name, (1..=n).into_par_iter().map(check_evidence).collect())
        }
        "mv-limit" => check_limit_all(bounds.max_d(6, 4)),
        "mv-golden" => check_mv_golden(),
        "phi-cutjoin" => {
            let d = bounds.series_d(5, 4);
            let hs = bounds.genera(&[0, 1]);
            gather(
                name,
                hs.into_par_iter()
                    .map(|h| verify_cutjoin_phi(h, d))
                    .collect(),
            )
        }
        "phi-golden" => verify_golden(),
        "phi-routes" => {
            let n = bounds.max_d(6, 5);
            let jobs: Vec<(u32, u32)> = bounds
                .genera(&[0, 1, 2])
                .into_iter()
                .flat_map(|h| (1..=n).map(move |d| (h, d)))
                .collect();
            gather(
                name,
                jobs.par_iter().map(|&(h, d)| verify_routes(h, d)).collect(),
            )
        }
        "parity" => {
            let d = bounds.series_d(6, 5);
            let hs = bounds.genera(&[0, 1, 2]);
            gather(
                name,
                hs.into_par_iter().map(|h| verify_parity(h, d)).collect(),
            )
        }
        "s-identities" => {
            let order = if bounds.quick { 12 } else { 20 };
            let mut r = s_lambda_identities(order);
            // the polynomiality sweep is informational only
            let exp = polynomiality_experiment(bounds.max_d(5, 4));
            for c in &exp.cases {
                let st = if c.status == Status::Pass {
                    "reproduces"
                } else {
                    "mismatch"
                };
                r.note(format!("polynomiality {}: {st}", c.id));
            }
            r.notes.extend(exp.notes);
            r
        }
        "cp-lemma" => {
            let n = bounds.max_d(10, 8);
            let mut r = VerificationReport::new(name);
            for d in 1..=n {
                for l in 1..=d {
                    match cut_power(d, l) {
                        Ok(_) => r.pass(format!("d={d}/l={l}")),
                        Err(e) => r.fail(format!("d={d}/l={l}"), e.to_string()),
                    }
                }
            }
            r
        }
        "connected" => connected_suite(bounds.series_d(6, 4)),
        "hurwitz-numbers" => {
            let n = bounds.max_d(6, 4);
            let hs = bounds.genera(&[0, 1, 2]);
            gather(
                name,
                hs.into_par_iter()
                    .map(|h| hurwitz_number_sanity(h, n, 3))
                    .collect(),
            )
        }
        other => {
            return Err(Error::Usage(format!(
                "unknown suite '{other}'; expected all or one of {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(report)
}

/// exp ∘ log round trips on Φ and R, and the ordered-decomposition sum
/// against log on both (the latter up to degree 4 at most).
fn connected_suite(d_max: u32) -> VerificationReport {
    let mut r = VerificationReport::new("connected");
    let small = d_max.min(4);
    for h in 0..=1 {
        let b = phi_bullet(h, d_max);
        let c = phi_circ(h, d_max);
        let back = c.series.exp_p().expect("no constant term");
        r.check(
            format!("phi/h={h}/exp-log/D={d_max}"),
            back == b.series,
            || c.render_hyperbolic(),
        );
        let b = phi_bullet(h, small);
        let dec = connected_by_decomposition(&b.series).expect("constant term 1");
        let c = phi_circ(h, small);
        r.check(
            format!("phi/h={h}/decomposition/D={small}"),
            dec == c.series,
            || format!("{dec}"),
        );
    }
    let b = r_bullet(d_max);
    let c = r_connected(d_max);
    r.check(
        format!("mv/exp-log/D={d_max}"),
        c.exp_p().ok().as_ref() == Some(&b),
        || format!("{c}"),
    );
    let dec = r_connected_by_decomposition(small);
    let log = r_connected(small);
    r.check(format!("mv/decomposition/D={small}"), dec == log, || {
        format!("{dec}")
    });
    r
}
