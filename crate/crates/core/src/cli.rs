//! The `stringy` command-line front end.
//!
//! A parsed invocation is a [`RunConfig`]; [`run`] executes it and returns
//! the rendered output plus the process exit code. The binary in
//! `src/bin/stringy.rs` is a thin flag-parsing wrapper around this module,
//! which keeps every behavior — dispatch, rendering, exit codes — testable
//! in-process.
//!
//! Exit codes: `0` success, `1` input or validation error (message on the
//! error stream), `2` internal invariant violation (the `check` command
//! found a mismatch between the two stringy formulas — which should never
//! happen).
//!
//! Output formats:
//!
//! * **text** — canonical polynomial/series strings, newline-terminated;
//!   `stringy-n` additionally prints the per-partition audit table;
//! * **json** — a stable, versioned schema (`"schema":"1"`, fixed key
//!   order, exact fraction strings, no floating point); every embedded
//!   polynomial string is in canonical text form and parses back via
//!   [`crate::parse::parse_poly`];
//! * **latex** — a human-checkable aligned rendering with `\frac` for
//!   rational values and braces on all exponents.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::lambda::{plethystic_exp, plethystic_log};
use crate::parse::parse_poly;
use crate::poly::LaurentPoly;
use crate::rational::Rational;
use crate::realize::{Realization, VAR_U, VAR_V};
use crate::sample::random_poly;
use crate::series::TruncatedSeries;
use crate::stringy::{
    euler_product, hilbert_series, normalized_stringy_series, stringy_partition_terms,
    stringy_series, sym_product_class, PartitionTerm, VarietyInput,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            other => Err(format!(
                "unknown format '{other}' (expected text, json or latex)"
            )),
        }
    }
}

/// One fully-specified command. Field meanings match the CLI flags.
#[derive(Clone, Debug)]
pub enum CliCommand {
    /// Stringy series of symmetric products up to `t^order`.
    Series {
        poly: String,
        realization: Realization,
        dim: u32,
        order: usize,
    },
    /// Single stringy coefficient via the partition sum, with audit rows.
    StringyN {
        poly: String,
        realization: Realization,
        dim: u32,
        n: u32,
    },
    /// Class of the plain symmetric product `X^(n)` (σ_n of the class).
    SymProd {
        poly: String,
        realization: Realization,
        dim: u32,
        n: u32,
    },
    /// Hilbert-scheme series of a surface (`dim` must be 2).
    Hilbert {
        poly: String,
        realization: Realization,
        dim: u32,
        order: usize,
    },
    /// Normalized stringy series (class divided by `L^(d/2)` first).
    Normalized {
        poly: String,
        realization: Realization,
        dim: u32,
        order: usize,
    },
    /// `Π_{k>=1} (1-t^k)^(-e)` up to `t^order`.
    EulerProduct { e: i64, order: usize },
    /// Plethystic Exp of a user series given as a coefficient list.
    Exp {
        coeffs: Vec<String>,
        realization: Realization,
        order: usize,
    },
    /// Plethystic Log of a user series given as a coefficient list.
    Log {
        coeffs: Vec<String>,
        realization: Realization,
        order: usize,
    },
    /// Randomized cross-validation of the two stringy formulas.
    Check {
        dims: Vec<u32>,
        count: usize,
        max_n: u32,
        seed: u64,
    },
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CliCommand,
    pub format: Format,
}

/// What [`run`] hands back on success: the full rendered output (already
/// newline-terminated) and the exit code for the process.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub stdout: String,
    pub exit: u8,
}

/// The computed payload of a command, before rendering.
#[derive(Clone, Debug)]
pub enum RunResult {
    Series(SeriesResult),
    Poly(PolyResult),
    Check(CheckResult),
}

#[derive(Clone, Debug)]
pub struct SeriesResult {
    pub command: &'static str,
    pub realization: Option<Realization>,
    pub dim: Option<u32>,
    pub e: Option<i64>,
    pub order: usize,
    pub series: TruncatedSeries,
}

#[derive(Clone, Debug)]
pub struct PolyResult {
    pub command: &'static str,
    pub realization: Realization,
    pub dim: u32,
    pub n: u32,
    pub poly: LaurentPoly,
    /// Per-partition audit rows (`stringy-n` only).
    pub rows: Option<Vec<PartitionTerm>>,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub dims: Vec<u32>,
    pub count: usize,
    pub max_n: u32,
    pub seed: u64,
    /// `(dim, coefficients checked, mismatches)` per requested dimension.
    pub per_dim: Vec<(u32, u64, u64)>,
    pub checked: u64,
    pub mismatches: u64,
}

/// Executes a validated configuration. `Err` is an input/validation failure
/// (exit code 1, message for the error stream); `Ok` carries the rendered
/// output and the exit code (0, or 2 when `check` found mismatches).
pub fn run(config: &RunConfig) -> Result<RunOutcome, String> {
    let result = compute(&config.command)?;
    let stdout = match config.format {
        Format::Text => render_text(&result),
        Format::Json => render_json(&result),
        Format::Latex => render_latex(&result),
    };
    let exit = match &result {
        RunResult::Check(check) if check.mismatches > 0 => 2,
        _ => 0,
    };
    Ok(RunOutcome { stdout, exit })
}

fn parse_class(src: &str, realization: Realization) -> Result<LaurentPoly, String> {
    parse_poly(src, realization.variables()).map_err(|e| e.to_string())
}

fn variety(
    src: &str,
    realization: Realization,
    dim: u32,
) -> Result<VarietyInput, String> {
    let cls = parse_class(src, realization)?;
    VarietyInput::new(realization, cls, dim).map_err(|e| e.to_string())
}

/// Builds a coefficient-list series for the `exp`/`log` calculator.
fn coeff_list_series(
    coeffs: &[String],
    realization: Realization,
    order: usize,
) -> Result<TruncatedSeries, String> {
    if coeffs.is_empty() {
        return Err("at least one coefficient is required".to_owned());
    }
    if coeffs.len() > order + 1 {
        return Err(format!(
            "{} coefficients given but order {} only has room for {}",
            coeffs.len(),
            order,
            order + 1
        ));
    }
    let mut series = TruncatedSeries::zero(order);
    for (i, src) in coeffs.iter().enumerate() {
        series.set_coeff(i, parse_class(src, realization)?);
    }
    Ok(series)
}

fn compute(command: &CliCommand) -> Result<RunResult, String> {
    match command {
        CliCommand::Series {
            poly,
            realization,
            dim,
            order,
        } => {
            let x = variety(poly, *realization, *dim)?;
            let series = stringy_series(&x, *order).map_err(|e| e.to_string())?;
            Ok(RunResult::Series(SeriesResult {
                command: "series",
                realization: Some(*realization),
                dim: Some(*dim),
                e: None,
                order: *order,
                series,
            }))
        }
        CliCommand::StringyN {
            poly,
            realization,
            dim,
            n,
        } => {
            let x = variety(poly, *realization, *dim)?;
            let rows = stringy_partition_terms(&x, *n).map_err(|e| e.to_string())?;
            let mut total = LaurentPoly::zero();
            for row in &rows {
                total = &total + &row.term;
            }
            Ok(RunResult::Poly(PolyResult {
                command: "stringy-n",
                realization: *realization,
                dim: *dim,
                n: *n,
                poly: total,
                rows: Some(rows),
            }))
        }
        CliCommand::SymProd {
            poly,
            realization,
            dim,
            n,
        } => {
            let x = variety(poly, *realization, *dim)?;
            Ok(RunResult::Poly(PolyResult {
                command: "symprod",
                realization: *realization,
                dim: *dim,
                n: *n,
                poly: sym_product_class(&x, *n),
                rows: None,
            }))
        }
        CliCommand::Hilbert {
            poly,
            realization,
            dim,
            order,
        } => {
            let x = variety(poly, *realization, *dim)?;
            let series = hilbert_series(&x, *order).map_err(|e| e.to_string())?;
            Ok(RunResult::Series(SeriesResult {
                command: "hilbert",
                realization: Some(*realization),
                dim: Some(*dim),
                e: None,
                order: *order,
                series,
            }))
        }
        CliCommand::Normalized {
            poly,
            realization,
            dim,
            order,
        } => {
            let x = variety(poly, *realization, *dim)?;
            let series =
                normalized_stringy_series(&x, *order).map_err(|e| e.to_string())?;
            Ok(RunResult::Series(SeriesResult {
                command: "normalized",
                realization: Some(*realization),
                dim: Some(*dim),
                e: None,
                order: *order,
                series,
            }))
        }
        CliCommand::EulerProduct { e, order } => Ok(RunResult::Series(SeriesResult {
            command: "euler-product",
            realization: None,
            dim: None,
            e: Some(*e),
            order: *order,
            series: euler_product(*e, *order),
        })),
        CliCommand::Exp {
            coeffs,
            realization,
            order,
        } => {
            let f = coeff_list_series(coeffs, *realization, *order)?;
            let series = plethystic_exp(&f).map_err(|e| e.to_string())?;
            Ok(RunResult::Series(SeriesResult {
                command: "exp",
                realization: Some(*realization),
                dim: None,
                e: None,
                order: *order,
                series,
            }))
        }
        CliCommand::Log {
            coeffs,
            realization,
            order,
        } => {
            let g = coeff_list_series(coeffs, *realization, *order)?;
            let series = plethystic_log(&g).map_err(|e| e.to_string())?;
            Ok(RunResult::Series(SeriesResult {
                command: "log",
                realization: Some(*realization),
                dim: None,
                e: None,
                order: *order,
                series,
            }))
        }
        CliCommand::Check {
            dims,
            count,
            max_n,
            seed,
        } => run_check(dims, *count, *max_n, *seed).map(RunResult::Check),
    }
}

/// The two-formula cross-validation: random Hodge-realization classes,
/// the plethystic-exponential series against the partition sum, exact
/// comparison of every coefficient. A fixed seed makes the whole run (and
/// its output) reproducible.
fn run_check(
    dims: &[u32],
    count: usize,
    max_n: u32,
    seed: u64,
) -> Result<CheckResult, String> {
    if dims.is_empty() {
        return Err("check requires at least one dimension".to_owned());
    }
    if let Some(bad) = dims.iter().find(|&&d| d < 2) {
        return Err(format!(
            "check requires dimensions >= 2, got {bad}"
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut per_dim = Vec::new();
    let mut checked = 0u64;
    let mut mismatches = 0u64;
    for &dim in dims {
        let mut dim_checked = 0u64;
        let mut dim_mismatches = 0u64;
        for _ in 0..count {
            let vars: &[crate::poly::VarId] = match rng.random_range(0..3u8) {
                0 => &[VAR_V],
                1 => &[VAR_U],
                _ => &[VAR_U, VAR_V],
            };
            let cls = random_poly(&mut rng, vars, -4..=4, 5, 5);
            let x = VarietyInput::new(Realization::Hodge, cls, dim)
                .expect("sampled variables are always admissible");
            let series = stringy_series(&x, max_n as usize)
                .expect("check dimensions are validated >= 2");
            for n in 0..=max_n {
                let direct = crate::stringy::stringy_partition_sum(&x, n)
                    .expect("check dimensions are validated >= 2");
                dim_checked += 1;
                if series.coeff(n as usize) != &direct {
                    dim_mismatches += 1;
                }
            }
        }
        checked += dim_checked;
        mismatches += dim_mismatches;
        per_dim.push((dim, dim_checked, dim_mismatches));
    }
    Ok(CheckResult {
        dims: dims.to_vec(),
        count,
        max_n,
        seed,
        per_dim,
        checked,
        mismatches,
    })
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

fn render_text(result: &RunResult) -> String {
    match result {
        RunResult::Series(s) => format!("{}\n", s.series),
        RunResult::Poly(p) => {
            let mut out = format!("{}\n", p.poly);
            if let Some(rows) = &p.rows {
                for row in rows {
                    let _ = writeln!(
                        out,
                        "{}: length={} weight={} term={}",
                        row.partition,
                        row.partition.length(),
                        row.weight,
                        row.term
                    );
                }
            }
            out
        }
        RunResult::Check(c) => {
            let dims = c
                .dims
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",");
            let mut out = format!(
                "seed={} dims={} count={} max_n={}\n",
                c.seed, dims, c.count, c.max_n
            );
            for (dim, checked, mismatches) in &c.per_dim {
                let _ = writeln!(
                    out,
                    "dim={dim}: checked={checked} mismatches={mismatches}"
                );
            }
            let verdict = if c.mismatches == 0 { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{verdict} checked={} mismatches={}",
                c.checked, c.mismatches
            );
            out
        }
    }
}

// ---------------------------------------------------------------------------
// JSON rendering (schema "1")
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct JsonTerm {
    exponents: BTreeMap<String, String>,
    coeff: String,
}

#[derive(Serialize)]
struct JsonCoeff {
    t_degree: usize,
    poly: String,
    terms: Vec<JsonTerm>,
}

#[derive(Serialize)]
struct JsonSeries<'a> {
    schema: &'a str,
    command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    realization: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    e: Option<i64>,
    order: usize,
    series: Vec<JsonCoeff>,
}

#[derive(Serialize)]
struct JsonPartitionRow {
    partition: Vec<u32>,
    length: usize,
    weight: String,
    term: String,
}

#[derive(Serialize)]
struct JsonPoly<'a> {
    schema: &'a str,
    command: &'a str,
    realization: &'a str,
    dim: u32,
    n: u32,
    poly: String,
    terms: Vec<JsonTerm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    partitions: Option<Vec<JsonPartitionRow>>,
}

#[derive(Serialize)]
struct JsonCheck<'a> {
    schema: &'a str,
    command: &'a str,
    dims: &'a [u32],
    count: usize,
    max_n: u32,
    seed: u64,
    checked: u64,
    mismatches: u64,
    pass: bool,
}

/// Terms in descending canonical order (the same order the text form uses),
/// with exponents and coefficients as exact integer or `p/q` strings.
fn json_terms(f: &LaurentPoly) -> Vec<JsonTerm> {
    f.terms()
        .rev()
        .map(|(ev, c)| JsonTerm {
            exponents: ev
                .entries()
                .iter()
                .map(|(v, e)| (v.name().to_owned(), e.to_string()))
                .collect(),
            coeff: c.to_string(),
        })
        .collect()
}

fn json_series_coeffs(series: &TruncatedSeries) -> Vec<JsonCoeff> {
    series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| JsonCoeff {
            t_degree: n,
            poly: c.to_string(),
            terms: json_terms(c),
        })
        .collect()
}

/// Renders any result to the versioned JSON schema. Key order is fixed by
/// the struct definitions; output is a single line.
pub fn render_json(result: &RunResult) -> String {
    let body = match result {
        RunResult::Series(s) => serde_json::to_string(&JsonSeries {
            schema: "1",
            command: s.command,
            realization: s.realization.map(Realization::name),
            dim: s.dim,
            e: s.e,
            order: s.order,
            series: json_series_coeffs(&s.series),
        }),
        RunResult::Poly(p) => serde_json::to_string(&JsonPoly {
            schema: "1",
            command: p.command,
            realization: p.realization.name(),
            dim: p.dim,
            n: p.n,
            poly: p.poly.to_string(),
            terms: json_terms(&p.poly),
            partitions: p.rows.as_ref().map(|rows| {
                rows.iter()
                    .map(|row| JsonPartitionRow {
                        partition: row.partition.parts().to_vec(),
                        length: row.partition.length(),
                        weight: row.weight.to_string(),
                        term: row.term.to_string(),
                    })
                    .collect()
            }),
        }),
        RunResult::Check(c) => serde_json::to_string(&JsonCheck {
            schema: "1",
            command: "check",
            dims: &c.dims,
            count: c.count,
            max_n: c.max_n,
            seed: c.seed,
            checked: c.checked,
            mismatches: c.mismatches,
            pass: c.mismatches == 0,
        }),
    };
    let mut out = body.expect("JSON serialization of plain data cannot fail");
    out.push('\n');
    out
}

// ---------------------------------------------------------------------------
// LaTeX rendering
// ---------------------------------------------------------------------------

/// `22`, `-22`, `\frac{3}{2}`, `-\frac{3}{2}`.
fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else if r.is_negative() {
        let a = -r;
        format!("-\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// Polynomial in LaTeX: juxtaposed factors, braced exponents, `\frac` for
/// rational values: `v^{8}+23v^{6}+\frac{1}{2}u^{-1}v^{\frac{3}{2}}`.
fn latex_poly(f: &LaurentPoly) -> String {
    if f.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (index, (ev, c)) in f.terms().rev().enumerate() {
        if c.is_negative() {
            out.push('-');
        } else if index > 0 {
            out.push('+');
        }
        let magnitude = c.abs();
        if ev.is_empty() {
            out.push_str(&latex_rational(&magnitude));
        } else {
            if !magnitude.is_one() {
                out.push_str(&latex_rational(&magnitude));
            }
            for (v, e) in ev.entries() {
                out.push_str(v.name());
                if !e.is_one() {
                    let _ = write!(out, "^{{{}}}", latex_rational(e));
                }
            }
        }
    }
    out
}

/// Series as an aligned sum, one `t`-degree per row.
fn latex_series(series: &TruncatedSeries) -> String {
    let mut rows = Vec::new();
    for (n, c) in series.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut row = String::from("&");
        if !rows.is_empty() {
            row.push('+');
        }
        if n == 0 {
            row.push_str(&latex_poly(c));
        } else {
            if c.is_one() {
                // bare t^n
            } else if c.is_constant() && !c.constant_term().is_negative() {
                row.push_str(&latex_poly(c));
            } else {
                let _ = write!(row, "\\left({}\\right)", latex_poly(c));
            }
            if n == 1 {
                row.push('t');
            } else {
                let _ = write!(row, "t^{{{n}}}");
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return "0\n".to_owned();
    }
    format!("\\begin{{aligned}}\n{}\n\\end{{aligned}}\n", rows.join("\\\\\n"))
}

fn render_latex(result: &RunResult) -> String {
    match result {
        RunResult::Series(s) => latex_series(&s.series),
        RunResult::Poly(p) => {
            let mut rows = vec![format!("&{}", latex_poly(&p.poly))];
            if let Some(audit) = &p.rows {
                for row in audit {
                    rows.push(format!(
                        "&\\lambda={}:\\ \\ell={},\\ w={},\\ {}",
                        row.partition,
                        row.partition.length(),
                        latex_rational(&row.weight),
                        latex_poly(&row.term)
                    ));
                }
            }
            format!(
                "\\begin{{aligned}}\n{}\n\\end{{aligned}}\n",
                rows.join("\\\\\n")
            )
        }
        // The check report is diagnostics, not mathematics; LaTeX adds
        // nothing over the text table.
        RunResult::Check(_) => render_text(result),
    }
}
