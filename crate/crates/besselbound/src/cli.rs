//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use besselbound_core::bounds::{
    int_i_bounds, int_i_shifted_bounds, int_k_bounds, k0_bounds, k_gap_bounds, k_gap_value, solve_k_ratio_root,
    struve_cross_bounds, tower_bounds, xnu_k_envelope, BoundFamily, BoundReport, InequalityId,
};
use besselbound_core::integrals::{
    integral_i_exp, integral_i_shifted, integral_k_exp, repeated_integral_i, DEFAULT_TOL,
};
use besselbound_core::special_fn::{bessel_i, bessel_k, gamma_fn, struve_l, struve_m};
use besselbound_core::verify::{evaluate, limit_checks, luke_crossover, GridSpec, Point, Report};
use besselbound_core::{Error, FnValue};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::format::num;
use crate::output::{json, records_csv, table_csv};
use crate::runner;

/// Environment variable consulted when `--tol` is absent.
pub const TOL_ENV: &str = "BESSELBOUND_TOL";

#[derive(Debug, Parser)]
#[command(
    name = "besselbound",
    version,
    about = "Modified Bessel and Struve functions, their integrals, and bounds"
)]
pub struct Config {
    /// Quadrature tolerance [default: $BESSELBOUND_TOL, else 1e-10]
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Output format [default depends on the command]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of standard output
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Func {
    #[value(name = "I", alias = "i")]
    I,
    #[value(name = "K", alias = "k")]
    K,
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "M", alias = "m")]
    M,
    #[value(name = "gamma", alias = "Gamma")]
    Gamma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IntegralKind {
    /// ∫₀ˣ e^{βt} t^ν I_ν(t) dt
    IExp,
    /// ∫ₓ^∞ e^{βt} t^ν K_ν(t) dt
    KExp,
    /// n-fold repeated integral of e^{-γt} t^ν I_ν(t)
    Tower,
    /// ∫₀ˣ t^ν I_{ν+n}(t) dt
    IShifted,
}

/// Parameters shared by `integrate` and `bound`.
#[derive(Debug, Clone, Args)]
pub struct Params {
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<f64>,
    #[arg(long)]
    pub x: Option<f64>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "gamma")]
    pub beta: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub n: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate I_ν, K_ν, L_ν, M_ν at (ν, x), or Γ at a, over lists or start:stop:count ranges
    Eval {
        #[arg(value_enum)]
        func: Func,
        /// ν then x (one argument for gamma)
        #[arg(required = true, num_args = 1..=2, allow_negative_numbers = true)]
        args: Vec<String>,
    },
    /// Compute a weighted Bessel integral
    Integrate {
        #[arg(value_enum)]
        kind: IntegralKind,
        #[command(flatten)]
        params: Params,
    },
    /// Bound report for the family of an inequality id
    Bound {
        id: String,
        #[command(flatten)]
        params: Params,
    },
    /// Run the verification suite on the default grids
    Verify {
        /// Comma-separated inequality ids
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
    /// Crossing point of the two small-x lower bounds for K_0
    Crossover,
    /// Root of K_ν(x) = α K_{ν-1}(x)
    Root {
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long)]
        alpha: f64,
    },
    /// lhs, rhs and margin of one inequality over a grid
    Sweep {
        id: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        #[arg(long)]
        x: Option<String>,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "gamma")]
        beta: Option<String>,
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long)]
        n: Option<String>,
    },
    /// Check the limiting and asymptotic forms at sentinel points
    Limits,
}

/// Why a command stopped.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numeric(Error),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Numeric(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Numeric(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses `v`, `a,b,c`, or `start:stop:count` (inclusive, evenly spaced).
pub fn parse_values(s: &str) -> Result<Vec<f64>, CliError> {
    let bad = |p: &str| usage(format!("cannot parse number '{p}' in '{s}'"));
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [a, b, n] => {
            let a: f64 = a.trim().parse().map_err(|_| bad(a))?;
            let b: f64 = b.trim().parse().map_err(|_| bad(b))?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| usage(format!("range count '{n}' must be a whole number")))?;
            Ok(match n {
                0 => Vec::new(),
                1 => vec![a],
                _ => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
            })
        }
        [_] => s.split(',').map(|p| p.trim().parse().map_err(|_| bad(p))).collect(),
        _ => Err(usage(format!("'{s}' is neither a list nor start:stop:count"))),
    }
}

fn parse_counts(s: &str) -> Result<Vec<u32>, CliError> {
    parse_values(s)?.into_iter().map(whole).collect()
}

fn parse_id(s: &str) -> Result<InequalityId, CliError> {
    s.parse().map_err(|_| usage(format!("unknown inequality id '{s}'")))
}

fn need(v: Option<f64>, name: &str) -> Result<f64, CliError> {
    v.ok_or_else(|| usage(format!("--{name} is required here")))
}

fn whole(n: f64) -> Result<u32, CliError> {
    if n >= 0.0 && n.fract() == 0.0 && n <= u32::MAX as f64 {
        Ok(n as u32)
    } else {
        Err(usage(format!("n must be a non-negative integer, got {n}")))
    }
}

/// Tolerance precedence: flag, then environment, then the library default.
pub fn resolve_tol(flag: Option<f64>) -> Result<f64, CliError> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(s) => s
                .trim()
                .parse()
                .map_err(|_| usage(format!("{TOL_ENV}='{s}' is not a number")))?,
            Err(_) => DEFAULT_TOL,
        },
    };
    if tol > 0.0 && tol < 1.0 {
        Ok(tol)
    } else {
        Err(usage(format!("tolerance must lie in (0, 1), got {tol}")))
    }
}

struct Out {
    text: String,
    code: i32,
}

impl Out {
    fn ok(text: String) -> Self {
        Out { text, code: 0 }
    }
}

#[derive(Serialize)]
struct EvalRow {
    nu: Option<f64>,
    x: f64,
    value: f64,
    abs_err: f64,
}

fn cmd_eval(func: Func, args: &[String], fmt: Format) -> Result<Out, CliError> {
    let rows: Vec<EvalRow> = if func == Func::Gamma {
        let [a] = args else {
            return Err(usage("gamma takes one argument"));
        };
        parse_values(a)?
            .into_iter()
            .map(|a| gamma_fn(a).map(|v| row(None, a, v)))
            .collect::<Result<_, _>>()?
    } else {
        let [nu, x] = args else {
            return Err(usage("I, K, L and M take two arguments: nu x"));
        };
        let f = match func {
            Func::I => bessel_i,
            Func::K => bessel_k,
            Func::L => struve_l,
            Func::M => struve_m,
            Func::Gamma => unreachable!(),
        };
        let xs = parse_values(x)?;
        let mut rows = Vec::new();
        for nu in parse_values(nu)? {
            for &x in &xs {
                rows.push(row(Some(nu), x, f(nu, x)?));
            }
        }
        rows
    };
    Ok(Out::ok(match fmt {
        Format::Text => rows.iter().map(|r| num(r.value) + "\n").collect(),
        Format::Json => json(&rows)?,
        Format::Csv => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.nu.map(num).unwrap_or_default(),
                        num(r.x),
                        num(r.value),
                        num(r.abs_err),
                    ]
                })
                .collect();
            table_csv(&["nu", "x", "value", "abs_err"], &cells)?
        }
    }))
}

fn row(nu: Option<f64>, x: f64, v: FnValue) -> EvalRow {
    EvalRow {
        nu,
        x,
        value: v.value,
        abs_err: v.abs_err,
    }
}

fn cmd_integrate(kind: IntegralKind, p: &Params, tol: f64, fmt: Format) -> Result<Out, CliError> {
    let nu = need(p.nu, "nu")?;
    let x = need(p.x, "x")?;
    let r = match kind {
        IntegralKind::IExp => integral_i_exp(nu, p.beta.unwrap_or(0.0), x, tol)?,
        IntegralKind::KExp => integral_k_exp(nu, p.beta.unwrap_or(0.0), x, tol)?,
        IntegralKind::Tower => repeated_integral_i(nu, p.gamma.unwrap_or(0.0), whole(need(p.n, "n")?)?, x, tol)?,
        IntegralKind::IShifted => integral_i_shifted(nu, need(p.n, "n")?, x, tol)?,
    };
    Ok(Out::ok(match fmt {
        Format::Json => json(&r)?,
        Format::Text => {
            let mut s = format!(
                "value {}\nabs_err {}\nsubdivisions {}\n",
                num(r.value),
                num(r.abs_err),
                r.subdivisions
            );
            if let Some(t) = r.truncation_point {
                s += &format!("truncation_point {}\n", num(t));
            }
            s
        }
        Format::Csv => table_csv(
            &["value", "abs_err", "subdivisions", "truncation_point"],
            &[[
                num(r.value),
                num(r.abs_err),
                r.subdivisions.to_string(),
                r.truncation_point.map(num).unwrap_or_default(),
            ]],
        )?,
    }))
}

fn family_report(fam: BoundFamily, p: &Params) -> Result<BoundReport, CliError> {
    let nu = || need(p.nu, "nu");
    let x = || need(p.x, "x");
    Ok(match fam {
        BoundFamily::IntI => int_i_bounds(nu()?, x()?)?,
        BoundFamily::IntIShifted => int_i_shifted_bounds(nu()?, need(p.n, "n")?, x()?)?,
        BoundFamily::Tower => tower_bounds(nu()?, p.gamma.unwrap_or(0.0), whole(need(p.n, "n")?)?, x()?)?,
        BoundFamily::IntK => int_k_bounds(nu()?, p.beta.unwrap_or(0.0), x()?)?,
        BoundFamily::StruveCross => struve_cross_bounds(nu()?, x()?)?,
        BoundFamily::KGap => {
            let nu = nu()?;
            let r = k_gap_bounds(nu)?;
            match p.x {
                Some(x) => r.with_quantity(k_gap_value(nu, x)?),
                None => r,
            }
        }
        BoundFamily::XnuK => xnu_k_envelope(nu()?, x()?)?,
        BoundFamily::K0 => k0_bounds(x()?)?,
    })
}

fn bound_text(r: &BoundReport) -> String {
    let mut s = String::new();
    if let Some(q) = r.quantity {
        s += &format!("quantity {} (abs_err {})\n", num(q.value), num(q.abs_err));
    }
    let show = |v: Option<f64>, strict: bool| match v {
        Some(v) => format!("{}{}", num(v), if strict { " (strict)" } else { "" }),
        None => "none".into(),
    };
    s += &format!(
        "lower {}\nupper {}\n",
        show(r.lower, r.strict_lower),
        show(r.upper, r.strict_upper)
    );
    for e in &r.entries {
        s += &format!(
            "  {} {:?} {}{}\n",
            e.id,
            e.side,
            num(e.value),
            e.margin.map(|m| format!(" margin {}", num(m))).unwrap_or_default()
        );
    }
    if !r.domain_note.is_empty() {
        s += &format!("note: {}\n", r.domain_note);
    }
    s
}

fn cmd_bound(id: &str, p: &Params, tol: f64, fmt: Format) -> Result<Out, CliError> {
    let id = parse_id(id)?;
    if let Some(fam) = id.family() {
        let r = family_report(fam, p)?;
        return Ok(Out::ok(match fmt {
            Format::Json => json(&r)?,
            Format::Text => bound_text(&r),
            Format::Csv => {
                let rows: Vec<Vec<String>> = r
                    .entries
                    .iter()
                    .map(|e| {
                        vec![
                            e.id.to_string(),
                            format!("{:?}", e.side).to_lowercase(),
                            num(e.value),
                            e.strict.to_string(),
                            e.margin.map(num).unwrap_or_default(),
                        ]
                    })
                    .collect();
                table_csv(&["inequality_id", "side", "value", "strict", "margin"], &rows)?
            }
        }));
    }
    // Orderings and positivity have no bounded quantity: report the record.
    let (nus, bgs, xs) = (opt_vec(p.nu), opt_vec(p.beta.or(p.gamma)), opt_vec(p.x));
    let ns: Vec<u32> = p.n.map(whole).transpose()?.into_iter().collect();
    require(id, &nus, &bgs, &ns, &xs)?;
    GridSpec::new(id, nus, bgs, ns.clone(), xs, tol)?;
    let point = Point {
        nu: p.nu,
        beta_or_gamma: p.beta.or(p.gamma),
        n: ns.first().copied(),
        x: p.x,
    };
    let rec = evaluate(id, point, tol);
    records_out(std::slice::from_ref(&rec), fmt)
}

fn opt_vec(v: Option<f64>) -> Vec<f64> {
    v.into_iter().collect()
}

fn records_out(records: &[besselbound_core::verify::VerificationRecord], fmt: Format) -> Result<Out, CliError> {
    let code = i32::from(records.iter().any(|r| !r.pass && !r.margin.is_nan()));
    let text = match fmt {
        Format::Json => json(&records)?,
        Format::Csv | Format::Text => records_csv(records)?,
    };
    Ok(Out { text, code })
}

fn summary_text(r: &Report) -> String {
    let mut s = format!(
        "{:<24} {:>7} {:>6} {:>6} {:>14}\n",
        "id", "records", "fails", "indet", "min_rel_margin"
    );
    for row in &r.summary {
        s += &format!(
            "{:<24} {:>7} {:>6} {:>6} {:>14}\n",
            row.id.as_str(),
            row.records,
            row.fails,
            row.indeterminate,
            row.min_rel_margin
                .map(|m| format!("{m:.3e}"))
                .unwrap_or_else(|| "-".into())
        );
    }
    s += &format!(
        "total {} records, {} fails, {} indeterminate\n",
        r.records.len(),
        r.fails(),
        r.indeterminate()
    );
    s
}

fn cmd_verify(only: &[String], tol: f64, fmt: Format) -> Result<Out, CliError> {
    let ids: Vec<InequalityId> = only.iter().map(|s| parse_id(s.trim())).collect::<Result<_, _>>()?;
    let filter = (!ids.is_empty()).then_some(ids.as_slice());
    let (report, wall) = runner::verify(filter, tol)?;
    eprintln!(
        "verify: {} records in {:.3} s",
        report.records.len(),
        wall.as_secs_f64()
    );
    let text = match fmt {
        Format::Json => json(&report)?,
        Format::Csv => records_csv(&report.records)?,
        Format::Text => summary_text(&report),
    };
    Ok(Out {
        text,
        code: i32::from(report.fails() > 0),
    })
}

fn cmd_sweep(id: &str, axes: [&Option<String>; 5], tol: f64, fmt: Format) -> Result<Out, CliError> {
    let id = parse_id(id)?;
    let [nu, x, beta, gamma, n] = axes;
    let list = |s: &Option<String>| {
        s.as_deref()
            .map(parse_values)
            .transpose()
            .map(Option::unwrap_or_default)
    };
    let nus = list(nu)?;
    let bgs = list(if beta.is_some() { beta } else { gamma })?;
    let ns = n.as_deref().map(parse_counts).transpose()?.unwrap_or_default();
    let xs = list(x)?;
    require(id, &nus, &bgs, &ns, &xs)?;
    let grid = GridSpec::new(id, nus, bgs, ns, xs, tol)?;
    let records = runner::sweep_all(std::slice::from_ref(&grid));
    let report = Report::new(tol, vec![grid], records);
    records_out(&report.records, fmt)
}

/// Rejects a grid that would be empty because an active dimension was not given.
fn require(id: InequalityId, nus: &[f64], bgs: &[f64], ns: &[u32], xs: &[f64]) -> Result<(), CliError> {
    let dom = id.domain();
    let bg_flag = format!("--{}", dom.bg_name);
    let missing = [
        (dom.nu.is_some() && nus.is_empty(), "--nu"),
        (dom.bg.is_some() && bgs.is_empty(), bg_flag.as_str()),
        (dom.n.is_some() && ns.is_empty(), "--n"),
        (dom.x && xs.is_empty(), "--x"),
    ];
    match missing.iter().find(|(m, _)| *m) {
        Some((_, flag)) => Err(usage(format!("{id} needs {flag}"))),
        None => Ok(()),
    }
}

fn cmd_limits(fmt: Format) -> Result<Out, CliError> {
    let l = limit_checks()?;
    let code = i32::from(l.iter().any(|r| !r.pass));
    let text = match fmt {
        Format::Json => json(&l)?,
        Format::Text => l
            .iter()
            .map(|r| {
                format!(
                    "{} {}{} x={}: deviation {:.2e} (tol {:.0e})\n",
                    if r.pass { "ok  " } else { "FAIL" },
                    r.claim,
                    r.nu.map(|n| format!(" nu={}", num(n))).unwrap_or_default(),
                    num(r.x),
                    r.deviation,
                    r.tolerance
                )
            })
            .collect(),
        Format::Csv => {
            let rows: Vec<Vec<String>> = l
                .iter()
                .map(|r| {
                    vec![
                        r.claim.clone(),
                        r.nu.map(num).unwrap_or_default(),
                        num(r.x),
                        num(r.value),
                        num(r.target),
                        num(r.deviation),
                        num(r.tolerance),
                        r.pass.to_string(),
                    ]
                })
                .collect();
            table_csv(
                &["claim", "nu", "x", "value", "target", "deviation", "tolerance", "pass"],
                &rows,
            )?
        }
    };
    Ok(Out { text, code })
}

fn scalar(name: &str, v: f64, fmt: Format) -> Result<String, CliError> {
    Ok(match fmt {
        Format::Text => num(v) + "\n",
        Format::Json => json(&std::collections::BTreeMap::from([(name, v)]))?,
        Format::Csv => table_csv(&[name], &[[num(v)]])?,
    })
}

fn dispatch(cfg: &Config) -> Result<Out, CliError> {
    let tol = resolve_tol(cfg.tol)?;
    let fmt = |default| cfg.format.unwrap_or(default);
    match &cfg.command {
        Command::Eval { func, args } => cmd_eval(*func, args, fmt(Format::Text)),
        Command::Integrate { kind, params } => cmd_integrate(*kind, params, tol, fmt(Format::Text)),
        Command::Bound { id, params } => cmd_bound(id, params, tol, fmt(Format::Text)),
        Command::Verify { only } => cmd_verify(only, tol, fmt(Format::Json)),
        Command::Crossover => Ok(Out::ok(scalar("luke_crossover", luke_crossover(), fmt(Format::Text))?)),
        Command::Root { nu, alpha } => {
            let r = solve_k_ratio_root(*nu, *alpha)?;
            Ok(Out::ok(match fmt(Format::Text) {
                Format::Text => format!(
                    "x_star {}\nresidual {}\nbracket {} {}\n",
                    num(r.x_star),
                    num(r.residual),
                    num(r.bracket.0),
                    num(r.bracket.1)
                ),
                Format::Json => json(&r)?,
                Format::Csv => table_csv(
                    &["x_star", "residual", "lo", "hi"],
                    &[[num(r.x_star), num(r.residual), num(r.bracket.0), num(r.bracket.1)]],
                )?,
            }))
        }
        Command::Sweep {
            id,
            nu,
            x,
            beta,
            gamma,
            n,
        } => cmd_sweep(id, [nu, x, beta, gamma, n], tol, fmt(Format::Csv)),
        Command::Limits => cmd_limits(fmt(Format::Text)),
    }
}

/// Parses `argv` (program name first), runs the command, and returns the
/// exit code: 0 on success, 1 when a checked inequality fails, 2 on usage or
/// domain errors.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match Config::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let out = match dispatch(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("besselbound: {e}");
            return 2;
        }
    };
    let written = match &cfg.output {
        Some(path) => std::fs::write(path, out.text.as_bytes()),
        None => std::io::stdout().lock().write_all(out.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("besselbound: cannot write output: {e}");
        return 2;
    }
    out.code
}
