//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::characters::{self, CACHE_ENV};
use crate::error::{Error, Result};
use crate::hurwitz::{burnside_bullet, hurwitz_number, phi_bullet, phi_circ, HurwitzQuery};
use crate::marinovafa::{
    check_cutjoin_mv, check_evidence, check_limit_all, check_mv_golden, check_rinit, check_vhook,
    r_bullet, r_connected, MVSeries,
};
use crate::partitions::Partition;
use crate::report::VerificationReport;
use crate::suites::{run_suite, Bounds};

/// Exit status for malformed input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cutjoin",
    version,
    about = "Exact cut-and-join computations for Hurwitz and Mariño–Vafa series"
)]
struct Cli {
    /// Character-table cache directory (overrides the environment variable)
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Worker threads for parallel sweeps
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the character table of S_d
    Chartable(ChartableArgs),
    /// Hurwitz numbers and the series Φ_h
    Hurwitz(HurwitzArgs),
    /// The Mariño–Vafa series R^• and R, or one of their checks
    Marinovafa(MarinovafaArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Inspect or manage the character-table cache
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Args)]
struct ChartableArgs {
    d: u32,
    /// Largest degree accepted
    #[arg(long, default_value_t = 12)]
    max: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct HurwitzArgs {
    /// Genus of the base curve
    #[arg(long, default_value_t = 0)]
    h: u32,
    /// Ramification profile over the special point, e.g. 2,1
    #[arg(long)]
    eta: Option<Partition>,
    /// Genus of the cover; prints the Hurwitz number
    #[arg(long, allow_negative_numbers = true, conflicts_with = "series")]
    g: Option<i64>,
    /// Print the series coefficient (or the whole series without --eta)
    #[arg(long)]
    series: bool,
    /// Connected covers
    #[arg(long)]
    connected: bool,
    /// Truncation degree for the whole series
    #[arg(long = "D", default_value_t = 3)]
    d: u32,
    /// Profiles over distinct points for a plain Burnside count (repeatable)
    #[arg(long = "profile", conflicts_with_all = ["eta", "series", "g"])]
    profiles: Vec<Partition>,
    /// Exponent-map rendering instead of sinh/cosh
    #[arg(long)]
    raw: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct MarinovafaArgs {
    /// Truncation degree
    #[arg(long = "D", default_value_t = 2)]
    d: u32,
    /// The connected series R instead of R^•
    #[arg(long)]
    connected: bool,
    /// Run a check: vhook, cutjoin, init, evidence, limit, golden
    #[arg(long)]
    check: Option<String>,
    /// Largest |ν| or |μ| for the sweeping checks
    #[arg(long, default_value_t = 6)]
    max: u32,
    #[arg(long)]
    raw: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// all, or a suite name
    suite: String,
    #[arg(long)]
    max_d: Option<u32>,
    #[arg(long = "D")]
    d: Option<u32>,
    #[arg(long)]
    h: Option<u32>,
    /// Smaller bounds
    #[arg(long)]
    quick: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum CacheAction {
    /// Print the cache directory in effect
    Path,
    /// Compute and store tables for d = 1..=max-d
    Build {
        #[arg(long, default_value_t = 10)]
        max_d: u32,
    },
    /// Remove stored tables
    Clear,
}

/// Flag, then environment variable, then the per-user default.
pub fn resolve_cache_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
        .or_else(characters::default_cache_dir)
}

/// Parses `args` (program name first), runs, writes to `out`/`err`, and
/// returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    characters::set_cache_dir(resolve_cache_dir(cli.cache_dir.clone()));
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.jobs {
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(cli.command, &mut buf));
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Consistency(_) | Error::Cache(_) => 1,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Cache(e.to_string())
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Chartable(a) => chartable(a, out),
        Command::Hurwitz(a) => hurwitz(a, out),
        Command::Marinovafa(a) => marinovafa(a, out),
        Command::Verify(a) => {
            let bounds = Bounds {
                max_d: a.max_d,
                series_d: a.d,
                h: a.h,
                quick: a.quick,
            };
            let report = run_suite(&a.suite, &bounds)?;
            emit_report(&report, a.json, out)
        }
        Command::Cache { action } => cache(action, out),
    }
}

fn emit_report(report: &VerificationReport, json: bool, out: &mut dyn Write) -> Result<i32> {
    if json {
        writeln!(out, "{}", report.to_json()).map_err(io)?;
    } else {
        writeln!(out, "{report}").map_err(io)?;
    }
    Ok(report.exit_code())
}

fn chartable(a: ChartableArgs, out: &mut dyn Write) -> Result<i32> {
    if a.d == 0 || a.d > a.max {
        return Err(Error::Usage(format!(
            "d must be in 1..={}, got {}",
            a.max, a.d
        )));
    }
    let t = characters::table(a.d);
    if a.json {
        let v = json!({
            "d": a.d,
            "partitions": t.partitions().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "table": t.rows(),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io)?;
        return Ok(0);
    }
    let labels: Vec<String> = t.partitions().iter().map(|p| p.to_string()).collect();
    let lw = labels.iter().map(|s| s.chars().count()).max().unwrap_or(1);
    let widths: Vec<usize> = (0..labels.len())
        .map(|j| {
            let w = t
                .rows()
                .iter()
                .map(|r| r[j].to_string().len())
                .max()
                .unwrap_or(1);
            w.max(labels[j].chars().count())
        })
        .collect();
    let mut header = format!("{:lw$}", "");
    for (l, w) in labels.iter().zip(&widths) {
        header.push_str(&format!("  {l:>w$}"));
    }
    writeln!(out, "{}", header.trim_end()).map_err(io)?;
    for (l, row) in labels.iter().zip(t.rows()) {
        let mut line = format!("{l:lw$}");
        for (v, w) in row.iter().zip(&widths) {
            line.push_str(&format!("  {v:>w$}"));
        }
        writeln!(out, "{line}").map_err(io)?;
    }
    Ok(0)
}

fn hurwitz(a: HurwitzArgs, out: &mut dyn Write) -> Result<i32> {
    let render = |x: &crate::coeffring::XLaurent| {
        if a.raw {
            x.to_string()
        } else {
            x.render_hyperbolic()
        }
    };
    if !a.profiles.is_empty() {
        let d = a.profiles[0].size();
        let q = HurwitzQuery::new(a.h, d, a.profiles.clone())?;
        let v = burnside_bullet(&q)?;
        if a.json {
            let v = json!({"h": a.h, "profiles": a.profiles.iter().map(|p| p.to_string()).collect::<Vec<_>>(), "value": v.to_string()});
            writeln!(out, "{v}").map_err(io)?;
        } else {
            writeln!(out, "{v}").map_err(io)?;
        }
        return Ok(0);
    }
    let phi = |d: u32| {
        if a.connected {
            phi_circ(a.h, d)
        } else {
            phi_bullet(a.h, d)
        }
    };
    match (&a.eta, a.g) {
        (Some(eta), Some(g)) => {
            let v = hurwitz_number(g, a.h, eta, a.connected)?;
            if a.json {
                let j = json!({"h": a.h, "g": g, "eta": eta.to_string(), "connected": a.connected, "value": v.to_string()});
                writeln!(out, "{j}").map_err(io)?;
            } else {
                writeln!(out, "{v}").map_err(io)?;
            }
        }
        (Some(eta), None) => {
            if eta.is_empty() {
                return Err(Error::EmptyPartition);
            }
            let c = phi(eta.size()).coeff(eta);
            if a.json {
                let j = json!({"h": a.h, "eta": eta.to_string(), "connected": a.connected, "value": render(&c)});
                writeln!(out, "{j}").map_err(io)?;
            } else {
                writeln!(out, "{}", render(&c)).map_err(io)?;
            }
        }
        (None, Some(_)) => return Err(Error::Usage("--g needs --eta".into())),
        (None, None) => {
            if !a.series {
                return Err(Error::Usage("give --eta, --series or --profile".into()));
            }
            let s = phi(a.d);
            if a.json {
                let terms: Vec<Value> = s
                    .series
                    .terms()
                    .iter()
                    .map(|(mu, c)| json!({"eta": mu.to_string(), "value": render(c)}))
                    .collect();
                let j = json!({"h": a.h, "D": a.d, "connected": a.connected, "terms": terms});
                writeln!(out, "{}", serde_json::to_string_pretty(&j).expect("json")).map_err(io)?;
            } else {
                for (mu, c) in s.series.terms() {
                    writeln!(out, "p_{mu}: {}", render(c)).map_err(io)?;
                }
            }
        }
    }
    Ok(0)
}

fn marinovafa(a: MarinovafaArgs, out: &mut dyn Write) -> Result<i32> {
    if a.d == 0 {
        return Err(Error::Usage("--D must be at least 1".into()));
    }
    if let Some(sel) = &a.check {
        let report = match sel.as_str() {
            "vhook" => check_vhook(a.max),
            "cutjoin" => check_cutjoin_mv(a.d),
            "init" => check_rinit(a.d),
            "evidence" => {
                let mut r = VerificationReport::new("mv-evidence");
                for n in 1..=a.max {
                    r.merge(check_evidence(n));
                }
                r
            }
            "limit" => check_limit_all(a.max),
            "golden" => check_mv_golden(),
            other => {
                return Err(Error::Usage(format!(
                "unknown check '{other}'; expected vhook, cutjoin, init, evidence, limit or golden"
            )))
            }
        };
        return emit_report(&report, a.json, out);
    }
    let s: MVSeries = if a.connected {
        r_connected(a.d)
    } else {
        r_bullet(a.d)
    };
    if a.json {
        let terms: Vec<Value> = s
            .terms()
            .iter()
            .filter(|(mu, _)| !mu.is_empty())
            .map(|(mu, c)| json!({"mu": mu.to_string(), "value": c.to_json(), "text": c.render_sin()}))
            .collect();
        let j = json!({"D": a.d, "connected": a.connected, "terms": terms});
        writeln!(out, "{}", serde_json::to_string_pretty(&j).expect("json")).map_err(io)?;
    } else {
        for (mu, c) in s.terms() {
            if mu.is_empty() {
                continue;
            }
            let text = if a.raw { c.to_string() } else { c.render_sin() };
            writeln!(out, "p_{mu}: {text}").map_err(io)?;
        }
    }
    Ok(0)
}

fn cache(action: CacheAction, out: &mut dyn Write) -> Result<i32> {
    let dir = characters::cache_dir();
    match action {
        CacheAction::Path => {
            match dir {
                Some(d) => writeln!(out, "{}", d.display()),
                None => writeln!(out, "(no cache directory)"),
            }
            .map_err(io)?;
        }
        CacheAction::Build { max_d } => {
            let dir = dir.ok_or_else(|| Error::Cache("no cache directory".into()))?;
            for d in 1..=max_d {
                let t = characters::table(d);
                let p = characters::store_table(&dir, &t)?;
                writeln!(out, "{}", p.display()).map_err(io)?;
            }
        }
        CacheAction::Clear => {
            let Some(dir) = dir else { return Ok(0) };
            let Ok(entries) = std::fs::read_dir(&dir) else {
                return Ok(0);
            };
            let mut removed = 0;
            for e in entries.flatten() {
                let name = e.file_name().to_string_lossy().into_owned();
                if name.starts_with("chartable-d") && name.ends_with(".txt") {
                    std::fs::remove_file(e.path()).map_err(io)?;
                    removed += 1;
                }
            }
            writeln!(out, "removed {removed} table(s) from {}", dir.display()).map_err(io)?;
        }
    }
    Ok(0)
}
