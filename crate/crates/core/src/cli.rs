//! Command-line front end: argument parsing, report serialization
//! (JSON, CSV, text), point-set files and exit codes.
//!
//! Exit codes: 0 feasible or claim holds, 1 infeasible or claim fails,
//! 2 usage or input error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::arith::{parse_rational, to_f64, BigRational, Surd};
use crate::bounds::{best_known, dgs_antipodal, nozaki_suda, xxy_bound, BoundReport, FormulaId};
use crate::constructions::{cross_polytope, derived_code, e8_roots, icosahedron, simplex_etf};
use crate::error::{Error, Result};
use crate::etf::{etf_report, EtfFeasibility};
use crate::leven::{enumerate_sizes, leven_report, LevenFeasibility, SpecialSize};
use crate::pointset::{
    classify, validate, Classification, ExtremalKind, Mode, PointSet, RawCoord, DEFAULT_TOLERANCE,
};
use crate::report::{aggregate, Condition, Status, Verdict, WitnessValue};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanMode {
    Etf,
    Leven,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructName {
    Simplex,
    Cross,
    Icosahedron,
    E8,
    #[value(name = "e8-derived")]
    E8Derived,
}

#[derive(Debug, Parser)]
#[command(
    name = "packcert",
    version,
    about = "Exact feasibility certificates for spherical codes and packings"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size bounds for antipodal s-distance sets of strength t.
    Bounds {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        t: u64,
    },
    /// Feasibility report for a real ETF of n vectors in R^d.
    Etf {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: u64,
    },
    /// Levenstein-equality report for (d, n), or the admissible-size table.
    Leven {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: Option<u64>,
        /// Keep only sizes passing the integrality test.
        #[arg(long)]
        al_filter: bool,
    },
    /// Surviving sizes for every d in a range.
    Scan {
        #[arg(long, value_enum)]
        mode: ScanMode,
        #[arg(long)]
        d_min: u64,
        #[arg(long)]
        d_max: u64,
    },
    /// Profile a point-set file and optionally test a claim.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        tol: Option<f64>,
        /// etf | leven | design:T
        #[arg(long)]
        claim: Option<String>,
    },
    /// Write a built-in configuration as a point-set file.
    Construct {
        #[arg(long, value_enum)]
        name: ConstructName,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

// ---------------------------------------------------------------- JSON model

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonRational {
    pub num: String,
    pub den: String,
    pub approx: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonSurd {
    pub rational: JsonRational,
    pub coeff: JsonRational,
    pub radicand: String,
    pub approx: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonValue {
    Surd(JsonSurd),
    Rational(JsonRational),
    Bool(bool),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonCondition {
    pub id: String,
    pub status: Status,
    pub witness: BTreeMap<String, JsonValue>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub schema_version: u32,
    pub query: serde_json::Value,
    pub conditions: Vec<JsonCondition>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

pub fn json_rational(q: &BigRational) -> JsonRational {
    JsonRational {
        num: q.numer().to_string(),
        den: q.denom().to_string(),
        approx: to_f64(q),
    }
}

impl JsonRational {
    pub fn to_rational(&self) -> Result<BigRational> {
        parse_rational(&format!("{}/{}", self.num, self.den))
            .ok_or_else(|| Error::Parse(format!("bad rational {}/{}", self.num, self.den)))
    }
}

pub fn json_value(v: &WitnessValue) -> JsonValue {
    match v {
        WitnessValue::Integer(n) => json_rational(&BigRational::from_integer(n.clone())).into(),
        WitnessValue::Rational(q) => json_rational(q).into(),
        WitnessValue::Surd(s) => JsonValue::Surd(json_surd(s)),
        WitnessValue::Bool(b) => JsonValue::Bool(*b),
        WitnessValue::Text(t) => JsonValue::Text(t.clone()),
    }
}

fn json_surd(s: &Surd) -> JsonSurd {
    JsonSurd {
        rational: json_rational(&s.rational_part()),
        coeff: json_rational(&s.coeff()),
        radicand: s.radicand().to_string(),
        approx: s.to_f64(),
    }
}

impl From<JsonRational> for JsonValue {
    fn from(r: JsonRational) -> Self {
        JsonValue::Rational(r)
    }
}

pub fn json_condition(c: &Condition) -> JsonCondition {
    JsonCondition {
        id: c.id.to_owned(),
        status: c.status,
        witness: c
            .witness
            .iter()
            .map(|w| (w.name.clone(), json_value(&w.value)))
            .collect(),
    }
}

/// A condition list with its verdict, as emitted by `etf`, `leven --n` and
/// `verify`.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub query: serde_json::Value,
    pub conditions: Vec<Condition>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> JsonReport {
        JsonReport {
            schema_version: SCHEMA_VERSION,
            query: self.query.clone(),
            conditions: self.conditions.iter().map(json_condition).collect(),
            verdict: self.verdict,
            notes: self.notes.clone(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Feasible => 0,
            Verdict::Infeasible => 1,
        }
    }
}

impl From<EtfFeasibility> for Report {
    fn from(r: EtfFeasibility) -> Self {
        Report {
            query: json!({"command": "etf", "d": r.d, "n": r.n}),
            conditions: r.conditions,
            verdict: r.verdict,
            notes: r.notes,
        }
    }
}

impl From<LevenFeasibility> for Report {
    fn from(r: LevenFeasibility) -> Self {
        Report {
            query: json!({"command": "leven", "d": r.d, "n": r.n, "alpha_sq": json_rational(&r.alpha_sq)}),
            conditions: r.conditions,
            verdict: r.verdict,
            notes: r.notes,
        }
    }
}

fn witness_text(c: &Condition) -> String {
    c.witness
        .iter()
        .map(|w| format!("{}={}", w.name, w.value))
        .collect::<Vec<_>>()
        .join("; ")
}

fn csv_string(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)
        .map_err(|e| Error::Io(e.to_string()))?;
    for r in rows {
        w.write_record(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

fn to_json_string<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Error::Io(e.to_string()))
}

pub fn render_report(r: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json_string(&r.to_json()),
        Format::Csv => csv_string(
            &["id", "status", "witness"],
            &r.conditions
                .iter()
                .map(|c| vec![c.id.to_owned(), c.status.to_string(), witness_text(c)])
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = format!("query: {}\n", r.query);
            for c in &r.conditions {
                let _ = writeln!(s, "  {:<16} {:<15} {}", c.id, c.status, witness_text(c));
            }
            for n in &r.notes {
                let _ = writeln!(s, "  note: {n}");
            }
            let _ = writeln!(s, "verdict: {}", r.verdict);
            Ok(s)
        }
    }
}

// ------------------------------------------------------------------ bounds

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonBound {
    pub formula_id: FormulaId,
    pub applicable: bool,
    pub value: Option<JsonRational>,
    pub integer_cap: Option<String>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonBounds {
    pub schema_version: u32,
    pub query: serde_json::Value,
    pub bounds: Vec<JsonBound>,
    pub best_known: JsonBound,
}

fn json_bound(b: &BoundReport) -> JsonBound {
    JsonBound {
        formula_id: b.formula_id,
        applicable: b.applicable,
        value: b.value.as_ref().map(json_rational),
        integer_cap: b.integer_cap().map(|c| c.to_string()),
        note: b.note.clone(),
    }
}

pub fn bounds_output(d: u64, s: u64, t: u64) -> Result<JsonBounds> {
    let all = [
        dgs_antipodal(d, s)?,
        nozaki_suda(d, s, t)?,
        xxy_bound(d, s, t)?,
    ];
    Ok(JsonBounds {
        schema_version: SCHEMA_VERSION,
        query: json!({"command": "bounds", "d": d, "s": s, "t": t}),
        bounds: all
            .iter()
            .filter(|b| b.applicable)
            .map(json_bound)
            .collect(),
        best_known: json_bound(&best_known(d, s, t)?),
    })
}

fn formula_name(f: FormulaId) -> String {
    serde_json::to_value(f)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default()
}

fn render_bounds(b: &JsonBounds, format: Format) -> Result<String> {
    let mut rows: Vec<(&str, &JsonBound)> = b.bounds.iter().map(|x| ("bound", x)).collect();
    rows.push(("best_known", &b.best_known));
    match format {
        Format::Json => to_json_string(b),
        Format::Csv => csv_string(
            &[
                "kind",
                "formula_id",
                "num",
                "den",
                "approx",
                "integer_cap",
                "note",
            ],
            &rows
                .iter()
                .map(|(kind, x)| {
                    let v = x.value.as_ref();
                    vec![
                        kind.to_string(),
                        formula_name(x.formula_id),
                        v.map(|v| v.num.clone()).unwrap_or_default(),
                        v.map(|v| v.den.clone()).unwrap_or_default(),
                        v.map(|v| v.approx.to_string()).unwrap_or_default(),
                        x.integer_cap.clone().unwrap_or_default(),
                        x.note.clone(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = format!("query: {}\n", b.query);
            for (kind, x) in rows {
                let value = x
                    .value
                    .as_ref()
                    .map(|v| {
                        if v.den == "1" {
                            v.num.clone()
                        } else {
                            format!("{}/{}", v.num, v.den)
                        }
                    })
                    .unwrap_or_else(|| "-".into());
                let _ = writeln!(
                    s,
                    "  {:<10} {:<12} {:>14}  {}",
                    kind,
                    formula_name(x.formula_id),
                    value,
                    x.note
                );
            }
            Ok(s)
        }
    }
}

// ------------------------------------------------------------------ tables

/// One row of a size table (`leven` without `--n`, or `scan`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub d: u64,
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub in_window: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub special: Option<SpecialSize>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonTable {
    pub schema_version: u32,
    pub query: serde_json::Value,
    pub rows: Vec<TableRow>,
}

pub fn leven_table(d: u64, al_filter: bool) -> Result<JsonTable> {
    let rows = enumerate_sizes(d, al_filter)?
        .into_iter()
        .map(|e| {
            Ok(TableRow {
                d,
                n: e.n,
                alpha: e.alpha,
                in_window: Some(e.in_window),
                special: e.special,
                verdict: leven_report(d, e.n)?.verdict,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(JsonTable {
        schema_version: SCHEMA_VERSION,
        query: json!({"command": "leven", "d": d, "al_filter": al_filter}),
        rows,
    })
}

fn scan_one(mode: ScanMode, d: u64) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    match mode {
        ScanMode::Etf => {
            if d < 2 {
                return Ok(rows);
            }
            for n in d + 2..=d * (d + 1) / 2 {
                let r = etf_report(d, n)?;
                if r.verdict == Verdict::Feasible {
                    rows.push(TableRow {
                        d,
                        n,
                        alpha: None,
                        in_window: None,
                        special: None,
                        verdict: r.verdict,
                    });
                }
            }
        }
        ScanMode::Leven => {
            if d < 4 {
                return Ok(rows);
            }
            for e in enumerate_sizes(d, false)? {
                let r = leven_report(d, e.n)?;
                if r.verdict == Verdict::Feasible {
                    rows.push(TableRow {
                        d,
                        n: e.n,
                        alpha: e.alpha,
                        in_window: Some(e.in_window),
                        special: e.special,
                        verdict: r.verdict,
                    });
                }
            }
        }
    }
    Ok(rows)
}

fn thread_pool() -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var("PACKCERT_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        b = b.num_threads(n.max(1));
    }
    b.build().map_err(|e| Error::Io(e.to_string()))
}

/// Feasible sizes for every `d` in `[d_min, d_max]`, ordered by `d`.
pub fn scan(mode: ScanMode, d_min: u64, d_max: u64) -> Result<JsonTable> {
    if d_min > d_max {
        return Err(Error::Precondition(format!(
            "empty range [{d_min}, {d_max}]"
        )));
    }
    let per_d: Vec<Result<Vec<TableRow>>> = thread_pool()?.install(|| {
        (d_min..=d_max)
            .into_par_iter()
            .map(|d| scan_one(mode, d))
            .collect()
    });
    let mut rows = Vec::new();
    for r in per_d {
        rows.extend(r?);
    }
    let mode_name = match mode {
        ScanMode::Etf => "etf",
        ScanMode::Leven => "leven",
    };
    Ok(JsonTable {
        schema_version: SCHEMA_VERSION,
        query: json!({"command": "scan", "mode": mode_name, "d_min": d_min, "d_max": d_max}),
        rows,
    })
}

fn render_table(t: &JsonTable, format: Format) -> Result<String> {
    let special = |s: &Option<SpecialSize>| match s {
        Some(SpecialSize::HalfDDPlus2) => "d(d+2)/2".to_string(),
        Some(SpecialSize::Tight) => "d(d+1)(d+2)/6".to_string(),
        None => String::new(),
    };
    let opt = |x: Option<String>| x.unwrap_or_default();
    match format {
        Format::Json => to_json_string(t),
        Format::Csv => csv_string(
            &["d", "n", "alpha", "in_window", "special", "verdict"],
            &t.rows
                .iter()
                .map(|r| {
                    vec![
                        r.d.to_string(),
                        r.n.to_string(),
                        opt(r.alpha.map(|a| a.to_string())),
                        opt(r.in_window.map(|b| b.to_string())),
                        special(&r.special),
                        r.verdict.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = format!("query: {}\n", t.query);
            let _ = writeln!(
                s,
                "  {:>5} {:>8} {:>6} {:>9} {:>14}  verdict",
                "d", "n", "alpha", "in_window", "special"
            );
            for r in &t.rows {
                let _ = writeln!(
                    s,
                    "  {:>5} {:>8} {:>6} {:>9} {:>14}  {}",
                    r.d,
                    r.n,
                    opt(r.alpha.map(|a| a.to_string())),
                    opt(r.in_window.map(|b| b.to_string())),
                    special(&r.special),
                    r.verdict
                );
            }
            let _ = writeln!(s, "rows: {}", t.rows.len());
            Ok(s)
        }
    }
}

fn table_exit(t: &JsonTable) -> i32 {
    if t.rows.iter().any(|r| r.verdict == Verdict::Feasible) {
        0
    } else {
        1
    }
}

// -------------------------------------------------------------- point sets

/// On-disk point set: `{"dim", "tolerance", "points", "scale_sq"?}`.
///
/// Coordinates are strings or numbers. `"p/q"` and integer strings are
/// exact; decimal strings and JSON numbers are floating point. With every
/// coordinate exact, the points are `sqrt(scale_sq) * p`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointSetFile {
    pub dim: usize,
    #[serde(default = "default_tol")]
    pub tolerance: f64,
    pub points: Vec<Vec<serde_json::Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale_sq: Option<String>,
}

fn default_tol() -> f64 {
    DEFAULT_TOLERANCE
}

fn parse_coord_str(s: &str) -> Result<RawCoord> {
    let t = s.trim();
    let is_decimal = t.contains(['.', 'e', 'E'])
        || t.eq_ignore_ascii_case("nan")
        || t.to_ascii_lowercase().contains("inf");
    if is_decimal {
        t.parse::<f64>()
            .map(RawCoord::Float)
            .map_err(|_| Error::Parse(format!("bad coordinate {t:?}")))
    } else {
        parse_rational(t)
            .map(RawCoord::Exact)
            .ok_or_else(|| Error::Parse(format!("bad coordinate {t:?}")))
    }
}

fn parse_coord(v: &serde_json::Value) -> Result<RawCoord> {
    match v {
        serde_json::Value::String(s) => parse_coord_str(s),
        serde_json::Value::Number(n) => n
            .as_f64()
            .map(RawCoord::Float)
            .ok_or_else(|| Error::Parse(format!("bad coordinate {n}"))),
        other => Err(Error::Parse(format!("bad coordinate {other}"))),
    }
}

pub fn pointset_from_file(file: &PointSetFile, tol_override: Option<f64>) -> Result<PointSet> {
    let rows = file
        .points
        .iter()
        .map(|r| r.iter().map(parse_coord).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if let Some(i) = rows.iter().position(|r| r.len() != file.dim) {
        return Err(Error::InvalidPointSet(format!(
            "point {i} has {} coordinates, header says dim = {}",
            rows[i].len(),
            file.dim
        )));
    }
    let scale = match &file.scale_sq {
        Some(s) => {
            Some(parse_rational(s).ok_or_else(|| Error::Parse(format!("bad scale_sq {s:?}")))?)
        }
        None => None,
    };
    validate(rows, scale, tol_override.unwrap_or(file.tolerance))
}

/// Reads JSON (by content) or CSV with one point per row.
pub fn read_pointset(path: &Path, tol_override: Option<f64>) -> Result<PointSet> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        let file: PointSetFile =
            serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
        return pointset_from_file(&file, tol_override);
    }
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
        rows.push(
            rec.iter()
                .map(parse_coord_str)
                .collect::<Result<Vec<_>>>()?,
        );
    }
    validate(rows, None, tol_override.unwrap_or(DEFAULT_TOLERANCE))
}

/// File representation of a point set: exact strings when exact
/// coordinates are known, shortest round-trip decimals otherwise.
pub fn pointset_to_file(x: &PointSet) -> PointSetFile {
    let (points, scale_sq) = match x.exact_coords() {
        Some((rows, scale)) => (
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|q| serde_json::Value::String(q.to_string()))
                        .collect()
                })
                .collect(),
            (!num_traits::One::is_one(scale)).then(|| scale.to_string()),
        ),
        None => (
            x.coords()
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|v| serde_json::Value::String(format!("{v:e}")))
                        .collect()
                })
                .collect(),
            None,
        ),
    };
    PointSetFile {
        dim: x.dim(),
        tolerance: x.tolerance(),
        points,
        scale_sq,
    }
}

pub fn construct(name: ConstructName, d: Option<usize>) -> Result<PointSet> {
    let need_d =
        || d.ok_or_else(|| Error::Precondition("--d is required for this construction".into()));
    match name {
        ConstructName::Simplex => simplex_etf(need_d()?),
        ConstructName::Cross => cross_polytope(need_d()?),
        ConstructName::Icosahedron => Ok(icosahedron()),
        ConstructName::E8 => Ok(e8_roots()),
        ConstructName::E8Derived => derived_code(&e8_roots(), 0),
    }
}

// ------------------------------------------------------------------ verify

#[derive(Debug, Clone, PartialEq)]
pub enum Claim {
    Etf,
    Leven,
    Design(usize),
}

impl std::fmt::Display for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Claim::Etf => f.write_str("etf"),
            Claim::Leven => f.write_str("leven"),
            Claim::Design(t) => write!(f, "design:{t}"),
        }
    }
}

pub fn parse_claim(s: &str) -> Result<Claim> {
    match s.trim() {
        "etf" => Ok(Claim::Etf),
        "leven" => Ok(Claim::Leven),
        other => other
            .strip_prefix("design:")
            .and_then(|t| t.parse().ok())
            .map(Claim::Design)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown claim {other:?}; expected etf, leven or design:T"
                ))
            }),
    }
}

fn kind_name(k: ExtremalKind) -> &'static str {
    match k {
        ExtremalKind::Etf => "etf",
        ExtremalKind::LevensteinEquality => "levenstein_equality",
        ExtremalKind::None => "none",
    }
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Float => "float",
        Mode::Exact => "exact",
        Mode::GramExact => "gram_exact",
    }
}

fn profile_condition(c: &Classification) -> Condition {
    let p = &c.profile;
    let angles = p
        .angle_set
        .iter()
        .map(|a| match &a.exact {
            Some(q) => format!("{q} (x{})", a.count),
            None => format!("{:.12} (x{})", a.value, a.count),
        })
        .collect::<Vec<_>>()
        .join(", ");
    let mut cond = Condition::pass("profile")
        .with("dim", BigRational::from_integer(p.dim.into()))
        .with("size", BigRational::from_integer(p.size.into()))
        .with("mode", mode_name(p.mode))
        .with("angle_set", angles)
        .with("s", BigRational::from_integer(p.s.into()))
        .with("coherence", format!("{:.15}", p.coherence))
        .with("strength", BigRational::from_integer(p.strength.t.into()))
        .with("strength_capped", p.strength.capped)
        .with("strength_exact", p.strength.exact)
        .with("antipodal", p.antipodal)
        .with("classification", kind_name(c.kind));
    if let Some(q) = &p.coherence_sq_exact {
        cond = cond.with("coherence_sq", q.clone());
    }
    if let Some(t) = c.dgs_tight {
        cond = cond.with("dgs_tight", t);
    }
    let moments = match &p.moments.exact {
        Some(e) => e
            .iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
            .join(", "),
        None => p
            .moments
            .values
            .iter()
            .map(|v| format!("{v:.6e}"))
            .collect::<Vec<_>>()
            .join(", "),
    };
    cond.with("moments", moments)
}

pub fn verify_report(x: &PointSet, claim: Option<&Claim>, input: &str) -> Result<Report> {
    let c = classify(x)?;
    let mut conditions = vec![profile_condition(&c)];
    if let Some(claim) = claim {
        let cond = match claim {
            Claim::Etf => Condition::from_bool("claim_etf", c.kind == ExtremalKind::Etf),
            Claim::Leven => Condition::from_bool("claim_leven", c.levenstein_equality),
            Claim::Design(t) => Condition::from_bool("claim_design", c.profile.strength.t >= *t)
                .with("required", BigRational::from_integer((*t).into()))
                .with(
                    "strength",
                    BigRational::from_integer(c.profile.strength.t.into()),
                ),
        };
        conditions.push(cond.with("classification", kind_name(c.kind)));
    }
    let verdict = aggregate(&conditions);
    Ok(Report {
        query: json!({"command": "verify", "input": input, "tolerance": x.tolerance(), "claim": claim.map(|c| c.to_string())}),
        conditions,
        verdict,
        notes: c.notes,
    })
}

// --------------------------------------------------------------------- run

/// Runs one parsed command, writing the report to `out`; returns the exit
/// code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let fmt = cli.format;
    let (text, code) = match &cli.command {
        Command::Bounds { d, s, t } => (render_bounds(&bounds_output(*d, *s, *t)?, fmt)?, 0),
        Command::Etf { d, n } => {
            let r: Report = etf_report(*d, *n)?.into();
            (render_report(&r, fmt)?, r.exit_code())
        }
        Command::Leven { d, n: Some(n), .. } => {
            let r: Report = leven_report(*d, *n)?.into();
            (render_report(&r, fmt)?, r.exit_code())
        }
        Command::Leven {
            d,
            n: None,
            al_filter,
        } => {
            let t = leven_table(*d, *al_filter)?;
            (render_table(&t, fmt)?, table_exit(&t))
        }
        Command::Scan { mode, d_min, d_max } => {
            let t = scan(*mode, *d_min, *d_max)?;
            (render_table(&t, fmt)?, 0)
        }
        Command::Verify { input, tol, claim } => {
            let claim = claim.as_deref().map(parse_claim).transpose()?;
            let x = read_pointset(input, *tol)?;
            let r = verify_report(&x, claim.as_ref(), &input.display().to_string())?;
            (render_report(&r, fmt)?, r.exit_code())
        }
        Command::Construct { name, d, output } => {
            let x = construct(*name, *d)?;
            let body = to_json_string(&pointset_to_file(&x))?;
            match output {
                Some(path) => {
                    std::fs::write(path, &body)?;
                    (
                        format!(
                            "wrote {} points in R^{} to {}\n",
                            x.len(),
                            x.dim(),
                            path.display()
                        ),
                        0,
                    )
                }
                None => (body, 0),
            }
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(code)
}

/// Parses `args` (including the program name) and runs; usage and input
/// errors print to stderr and give exit code 2.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let cli =
            Cli::try_parse_from(std::iter::once("packcert").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let code = run(&cli, &mut buf).unwrap();
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn etf_json_round_trips() {
        let (code, out) = run_args(&["--format", "json", "etf", "--d", "6", "--n", "16"]);
        assert_eq!(code, 0);
        let parsed: JsonReport = serde_json::from_str(&out).unwrap();
        assert_eq!(parsed.schema_version, 1);
        assert_eq!(parsed.verdict, Verdict::Feasible);
        assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", out);
        let aw = parsed
            .conditions
            .iter()
            .find(|c| c.id == "aw_integrality")
            .unwrap();
        match &aw.witness["sqrt(d(n-1)/(n-d))"] {
            JsonValue::Rational(r) => assert_eq!(
                r.to_rational().unwrap(),
                BigRational::from_integer(3.into())
            ),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn surd_witness_round_trips() {
        let (code, out) = run_args(&["--format", "json", "etf", "--d", "4", "--n", "7"]);
        assert_eq!(code, 1);
        let parsed: JsonReport = serde_json::from_str(&out).unwrap();
        let srg = parsed
            .conditions
            .iter()
            .find(|c| c.id == "srg_consistency")
            .unwrap();
        assert!(matches!(srg.witness["k"], JsonValue::Surd(_)));
    }

    #[test]
    fn csv_rows_match_entries() {
        let (_, out) = run_args(&["--format", "csv", "etf", "--d", "6", "--n", "18"]);
        assert_eq!(out.lines().count(), 1 + 5);
        let (code, out) = run_args(&["--format", "csv", "leven", "--d", "7"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1 + 5);
    }

    #[test]
    fn leven_filter_table() {
        let (code, out) = run_args(&["--format", "json", "leven", "--d", "7", "--al-filter"]);
        assert_eq!(code, 0);
        let t: JsonTable = serde_json::from_str(&out).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!((t.rows[0].n, t.rows[0].verdict), (63, Verdict::Feasible));
    }

    #[test]
    fn claims() {
        assert_eq!(parse_claim("design:5").unwrap(), Claim::Design(5));
        assert!(parse_claim("design:x").is_err());
        assert!(parse_claim("nope").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(main_with_args(["packcert", "etf", "--d", "6"]), 2);
        assert_eq!(
            main_with_args(["packcert", "etf", "--d", "2", "--n", "3"]),
            2
        );
    }

    #[test]
    fn exact_file_round_trip() {
        let x = e8_roots();
        let file = pointset_to_file(&x);
        assert_eq!(file.scale_sq.as_deref(), Some("1/2"));
        let back = pointset_from_file(&file, None).unwrap();
        assert_eq!(back.mode(), Mode::GramExact);
        let y = icosahedron();
        let back = pointset_from_file(&pointset_to_file(&y), None).unwrap();
        assert_eq!(back.coords(), y.coords());
    }
}
