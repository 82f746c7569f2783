//! Query orchestration: the structured results behind the CLI commands,
//! their text/JSON/LaTeX rendering, grid scans, and batch files.
//!
//! JSON output is deterministic: keys are emitted in sorted order, rationals
//! are strings "p/q", and integers are bare JSON numbers of arbitrary size
//! (the numerator coefficients of a Hilbert series outgrow i64 quickly).

use std::str::FromStr;

use num_traits::One;
use serde_json::{json, Map, Value};

use crate::atypical::{atypical_dim_sequence, classify_atypicality, Atypicality};
use crate::hilbert::{hilbert_polynomial, series_via_operator, verify_consistency};
use crate::render;
use crate::rootdata::{build_root_datum, parse_algebra, Parity, RootDatum};
use crate::typicality::{is_n_typical, TypicalityReport};
use crate::weights::{
    is_dominant_integral_partial, marks_of, parse_weight, weight_from_marks, Dominance, Marks,
    Weight,
};
use crate::{Error, Int, QPoly, QSeries, Result, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            other => Err(Error::Parse {
                position: 0,
                message: format!("unknown format {other:?} (expected text, json, latex)"),
            }),
        }
    }
}

/// Everything a `series` query reports for one weight.
#[derive(Clone, Debug)]
pub struct QueryResult {
    pub algebra: String,
    pub weight: Weight,
    pub marks: Marks,
    pub typicality: TypicalityReport,
    pub series: QSeries,
    /// Primitive integer numerator coefficients, ascending.
    pub numerator: Vec<Int>,
    pub pole_order: usize,
    /// Content factored out of the numerator, e.g. the 64 of 64(2q+1).
    pub common_factor: Q,
    pub h_prefactor: Q,
    pub h_factors: Vec<(Q, Q)>,
    pub h_polynomial: String,
    pub expansion: Vec<Q>,
    pub warnings: Vec<String>,
    pub weight_display: String,
    basis_labels: Vec<String>,
}

fn root_label(datum: &RootDatum, coords: &[Q]) -> String {
    datum.format_vector(coords)
}

/// Run the full series pipeline for one weight: consistency of both closed
/// forms, typicality, dominance warnings, display forms.
pub fn series_query(datum: &RootDatum, w: &Weight, terms: usize) -> Result<QueryResult> {
    let terms = terms.max(3);
    let report = verify_consistency(datum, w, terms)?;
    let typicality = is_n_typical(datum, w);
    let marks = marks_of(datum, w);
    let h = hilbert_polynomial(datum, w);

    let mut warnings = Vec::new();
    if !typicality.n_typical {
        let failing: Vec<String> = typicality
            .atypical_roots
            .iter()
            .map(|(root, k)| format!("{} (k = {k})", root_label(datum, &root.coords)))
            .collect();
        warnings.push(format!(
            "weight is not N-typical (failing roots: {}); coefficients are formula values, upper bounds for atypical multiples",
            failing.join(", ")
        ));
    }
    match is_dominant_integral_partial(datum, w) {
        Dominance::Fail(reason) => {
            warnings.push(format!("weight is not dominant integral: {reason}"))
        }
        Dominance::Unknown => warnings.push(
            "finite-dimensionality conditions for this family are only partially checked"
                .to_string(),
        ),
        Dominance::Pass => {}
    }
    if report.eulerian_degenerate {
        warnings.push(
            "elementary-symmetric closed form is degenerate for this algebra ((rho, beta) = 0 \
             for an even root); the operator form was used"
                .to_string(),
        );
    }

    let (common_factor, primitive) = render::content_and_primitive(report.series.numerator());
    let numerator: Vec<Int> = primitive
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.denom().is_one());
            c.numer().clone()
        })
        .collect();

    Ok(QueryResult {
        algebra: datum.spec.to_string(),
        weight_display: datum.format_vector(&w.coords),
        weight: w.clone(),
        marks,
        typicality,
        pole_order: report.series.pole_order(),
        series: report.series,
        numerator,
        common_factor,
        h_polynomial: render::format_factored(&h.prefactor, &h.factors, "t"),
        h_prefactor: h.prefactor,
        h_factors: h.factors,
        expansion: report.expansion,
        warnings,
        basis_labels: datum.basis_labels.clone(),
    })
}

/// One mark of a scan grid: an inclusive integer range or a fixed rational.
#[derive(Clone, Debug)]
pub enum MarkRange {
    Range(i64, i64),
    Fixed(Q),
}

/// Enumerate the mark grid in lexicographic order, keep the ℕ-typical
/// weights, and run the series pipeline on each.
pub fn scan_query(
    datum: &RootDatum,
    assignments: &[MarkRange],
    terms: usize,
) -> Result<Vec<QueryResult>> {
    if assignments.len() != datum.rank() {
        return Err(Error::MarksLength {
            expected: datum.rank(),
            got: assignments.len(),
        });
    }
    let axes: Vec<Vec<Q>> = assignments
        .iter()
        .map(|a| match a {
            MarkRange::Fixed(x) => vec![x.clone()],
            MarkRange::Range(lo, hi) => (*lo..=*hi).map(crate::qi).collect(),
        })
        .collect();
    if axes.iter().any(|axis| axis.is_empty()) {
        return Ok(Vec::new());
    }
    let mut idx = vec![0usize; axes.len()];
    let mut rows = Vec::new();
    loop {
        let marks = Marks::new(
            idx.iter()
                .zip(&axes)
                .map(|(&i, axis)| axis[i].clone())
                .collect(),
        );
        let w = weight_from_marks(datum, &marks)?;
        if is_n_typical(datum, &w).n_typical {
            rows.push(series_query(datum, &w, terms)?);
        }
        // Odometer: last axis fastest = lexicographic tuples.
        let mut pos = axes.len();
        loop {
            if pos == 0 {
                return Ok(rows);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < axes[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Result of the singly-atypical dimension command.
#[derive(Clone, Debug)]
pub struct AtypicalResult {
    pub algebra: String,
    pub weight_display: String,
    pub marks: Marks,
    pub site_root: String,
    pub dims: Vec<Int>,
    pub upper_bounds: Vec<Q>,
}

pub fn atypical_query(datum: &RootDatum, w: &Weight, terms: usize) -> Result<AtypicalResult> {
    let site = match classify_atypicality(datum, w)? {
        Atypicality::SinglyAtypical(site) => site,
        Atypicality::Typical => {
            return Err(Error::NotSinglyAtypical(
                "weight is typical; use the `series` command".to_string(),
            ))
        }
        Atypicality::MultiplyAtypical(count) => {
            return Err(Error::NotSinglyAtypical(format!(
                "weight is {count}-fold atypical; only single atypicality has a dimension formula"
            )))
        }
    };
    let dims = atypical_dim_sequence(datum, w, terms)?;
    let upper_bounds = series_via_operator(datum, w).expand(terms);
    Ok(AtypicalResult {
        algebra: datum.spec.to_string(),
        weight_display: datum.format_vector(&w.coords),
        marks: marks_of(datum, w),
        site_root: root_label(datum, &site.root.coords),
        dims,
        upper_bounds,
    })
}

// --- JSON helpers -----------------------------------------------------------

fn json_int(i: &Int) -> Value {
    Value::Number(
        serde_json::Number::from_str(&i.to_string()).expect("big integer is a valid JSON number"),
    )
}

/// Integers are bare numbers; proper rationals are "p/q" strings.
fn json_q(x: &Q) -> Value {
    if x.denom().is_one() {
        json_int(x.numer())
    } else {
        Value::String(render::format_q(x))
    }
}

fn json_q_list(xs: &[Q]) -> Value {
    Value::Array(xs.iter().map(json_q).collect())
}

impl QueryResult {
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("algebra".into(), json!(self.algebra));
        obj.insert("weight".into(), json!(self.weight_display));
        obj.insert("weight_coords".into(), json_q_list(&self.weight.coords));
        obj.insert("marks".into(), json_q_list(&self.marks.values));
        let mut typ = Map::new();
        typ.insert("typical".into(), json!(self.typicality.typical));
        typ.insert("n_typical".into(), json!(self.typicality.n_typical));
        typ.insert(
            "atypical_roots".into(),
            Value::Array(
                self.typicality
                    .atypical_roots
                    .iter()
                    .map(|(root, k)| {
                        let mut entry = Map::new();
                        entry.insert(
                            "root".into(),
                            json!(render::format_vector(&root.coords, &self.basis_labels)),
                        );
                        entry.insert("smallest_failing_k".into(), json_int(k));
                        Value::Object(entry)
                    })
                    .collect(),
            ),
        );
        obj.insert("typicality".into(), Value::Object(typ));
        let mut hilbert = Map::new();
        hilbert.insert(
            "numerator".into(),
            Value::Array(self.numerator.iter().map(json_int).collect()),
        );
        hilbert.insert("pole_order".into(), json!(self.pole_order));
        hilbert.insert(
            "common_factor".into(),
            Value::String(render::format_q(&self.common_factor)),
        );
        obj.insert("hilbert".into(), Value::Object(hilbert));
        obj.insert("h_polynomial".into(), json!(self.h_polynomial));
        obj.insert("expansion".into(), json_q_list(&self.expansion));
        obj.insert(
            "warnings".into(),
            Value::Array(self.warnings.iter().map(|w| json!(w)).collect()),
        );
        Value::Object(obj)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("algebra: {}\n", self.algebra));
        out.push_str(&format!("weight: {}\n", self.weight_display));
        out.push_str(&format!(
            "marks: ({})\n",
            self.marks
                .values
                .iter()
                .map(render::format_q)
                .collect::<Vec<_>>()
                .join(", ")
        ));
        out.push_str(&format!(
            "typical: {}, N-typical: {}\n",
            self.typicality.typical, self.typicality.n_typical
        ));
        out.push_str(&format!("h(t) = {}\n", self.h_polynomial));
        out.push_str(&format!(
            "H(q) = {}\n",
            render::format_series(&self.common_factor, &self.primitive_poly(), self.pole_order)
        ));
        out.push_str(&format!(
            "expansion: {}\n",
            self.expansion
                .iter()
                .map(render::format_q)
                .collect::<Vec<_>>()
                .join(", ")
        ));
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }

    fn primitive_poly(&self) -> QPoly {
        crate::exactq::Poly::from_coeffs(
            self.numerator
                .iter()
                .map(|c| Q::from_integer(c.clone()))
                .collect(),
        )
    }

    /// One LaTeX table row: weight & marks & series & expansion.
    pub fn to_latex_row(&self) -> String {
        let marks = self
            .marks
            .values
            .iter()
            .map(render::format_q)
            .collect::<Vec<_>>()
            .join(", ");
        let series = render::format_series_latex(
            &self.common_factor,
            &self.primitive_poly(),
            self.pole_order,
        );
        let expansion = latex_expansion(&self.expansion);
        format!(
            "${}$ & $\\left({}\\right)$ & ${}$ & ${}$ \\\\",
            latex_vector(&self.weight_display),
            marks,
            series,
            expansion
        )
    }
}

/// "2e1+2e2-d2" → "2 e_{1} + 2 e_{2} - d_{2}".
fn latex_vector(display: &str) -> String {
    let mut out = String::new();
    let mut chars = display.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '+' => out.push_str(" + "),
            '-' => out.push_str(" - "),
            'a'..='z' => {
                let mut name: String = c.to_string();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphabetic() {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let symbol = match name.as_str() {
                    "eps" => "\\epsilon".to_string(),
                    "delta" => "\\delta".to_string(),
                    other => other.to_string(),
                };
                if digits.is_empty() {
                    out.push_str(&symbol);
                } else {
                    out.push_str(&format!("{symbol}_{{{digits}}}"));
                }
            }
            other => out.push(other),
        }
    }
    out
}

fn latex_expansion(coeffs: &[Q]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if k > 0 {
            out.push_str(" + ");
        }
        match k {
            0 => out.push_str(&render::format_q(c)),
            1 => out.push_str(&format!("{} q", render::format_q(c))),
            _ => out.push_str(&format!("{} q^{{{k}}}", render::format_q(c))),
        }
    }
    out.push_str(" + \\cdots");
    out
}

// --- String-level command entry points ---------------------------------------

pub fn run_info(algebra: &str, format: Format) -> Result<String> {
    let spec = parse_algebra(algebra)?;
    let datum = build_root_datum(&spec)?;
    let fmt_roots = |roots: &[crate::rootdata::Root]| -> Vec<String> {
        roots
            .iter()
            .map(|r| datum.format_vector(&r.coords))
            .collect()
    };
    match format {
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("algebra".into(), json!(datum.spec.to_string()));
            obj.insert("rank".into(), json!(datum.rank()));
            obj.insert("basis".into(), json!(datum.basis_labels));
            obj.insert("d0".into(), json!(datum.d0()));
            obj.insert("d1".into(), json!(datum.d1()));
            obj.insert("delta0_plus".into(), json!(fmt_roots(&datum.delta0_plus)));
            obj.insert("delta1_plus".into(), json!(fmt_roots(&datum.delta1_plus)));
            obj.insert(
                "delta1_bar_plus".into(),
                json!(fmt_roots(&datum.delta1_bar_plus)),
            );
            obj.insert(
                "simple_roots".into(),
                Value::Array(
                    datum
                        .simple_roots
                        .iter()
                        .map(|r| {
                            let mut entry = Map::new();
                            entry.insert("root".into(), json!(datum.format_vector(&r.coords)));
                            entry.insert(
                                "parity".into(),
                                json!(if r.parity == Parity::Even {
                                    "even"
                                } else {
                                    "odd"
                                }),
                            );
                            Value::Object(entry)
                        })
                        .collect(),
                ),
            );
            obj.insert("rho0".into(), json!(datum.format_vector(&datum.rho0)));
            obj.insert("rho1".into(), json!(datum.format_vector(&datum.rho1)));
            obj.insert("rho".into(), json!(datum.format_vector(&datum.rho)));
            Ok(serde_json::to_string_pretty(&Value::Object(obj)).unwrap())
        }
        _ => {
            let mut out = String::new();
            out.push_str(&format!("algebra: {}\n", datum.spec));
            out.push_str(&format!(
                "rank: {}, basis: {}\n",
                datum.rank(),
                datum.basis_labels.join(", ")
            ));
            out.push_str(&format!(
                "d0 = |Delta0+| = {}, d1 = |Delta1+| = {}, |Delta1bar+| = {}\n",
                datum.d0(),
                datum.d1(),
                datum.delta1_bar_plus.len()
            ));
            out.push_str("simple roots:\n");
            for (i, r) in datum.simple_roots.iter().enumerate() {
                out.push_str(&format!(
                    "  alpha{} = {} ({})\n",
                    i + 1,
                    datum.format_vector(&r.coords),
                    if r.parity == Parity::Even {
                        "even"
                    } else {
                        "odd"
                    }
                ));
            }
            out.push_str(&format!(
                "Delta0+: {}\n",
                fmt_roots(&datum.delta0_plus).join(", ")
            ));
            out.push_str(&format!(
                "Delta1+: {}\n",
                fmt_roots(&datum.delta1_plus).join(", ")
            ));
            out.push_str(&format!(
                "Delta1bar+: {}\n",
                fmt_roots(&datum.delta1_bar_plus).join(", ")
            ));
            out.push_str(&format!("rho0 = {}\n", datum.format_vector(&datum.rho0)));
            out.push_str(&format!("rho1 = {}\n", datum.format_vector(&datum.rho1)));
            out.push_str(&format!("rho  = {}\n", datum.format_vector(&datum.rho)));
            Ok(out)
        }
    }
}

pub fn run_series(algebra: &str, weight: &str, terms: usize, format: Format) -> Result<String> {
    let datum = build_root_datum(&parse_algebra(algebra)?)?;
    let w = parse_weight(&datum, weight)?;
    let result = series_query(&datum, &w, terms)?;
    Ok(match format {
        Format::Text => result.to_text(),
        Format::Json => serde_json::to_string_pretty(&result.to_json()).unwrap(),
        Format::Latex => format!("{}\n", result.to_latex_row()),
    })
}

/// Parse "a3=1" / "a1=0..2" assignments into a per-mark grid description.
pub fn parse_scan_assignments(
    datum: &RootDatum,
    ranges: &[String],
    fixes: &[String],
) -> Result<Vec<MarkRange>> {
    let rank = datum.rank();
    let mut out: Vec<Option<MarkRange>> = vec![None; rank];
    let parse_index = |lhs: &str| -> Result<usize> {
        let idx: usize = lhs
            .strip_prefix('a')
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("expected mark name a1..a{rank}, got {lhs:?}"),
            })?;
        if idx == 0 || idx > rank {
            return Err(Error::Parse {
                position: 0,
                message: format!("mark index {idx} out of range 1..{rank}"),
            });
        }
        Ok(idx - 1)
    };
    for r in ranges {
        let (lhs, rhs) = r.split_once('=').ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("range {r:?} must look like a1=0..2"),
        })?;
        let idx = parse_index(lhs.trim())?;
        let (lo, hi) = rhs.split_once("..").ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("range {r:?} must look like a1=0..2"),
        })?;
        let lo: i64 = lo.trim().parse().map_err(|_| Error::Parse {
            position: 0,
            message: format!("bad range bound in {r:?}"),
        })?;
        let hi: i64 = hi.trim().parse().map_err(|_| Error::Parse {
            position: 0,
            message: format!("bad range bound in {r:?}"),
        })?;
        out[idx] = Some(MarkRange::Range(lo, hi));
    }
    for f in fixes {
        let (lhs, rhs) = f.split_once('=').ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("fix {f:?} must look like a3=1"),
        })?;
        let idx = parse_index(lhs.trim())?;
        out[idx] = Some(MarkRange::Fixed(crate::rootdata::parse_rational(
            rhs.trim(),
        )?));
    }
    out.into_iter()
        .enumerate()
        .map(|(i, slot)| {
            slot.ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("mark a{} has neither a range nor a fix", i + 1),
            })
        })
        .collect()
}

pub fn run_scan(
    algebra: &str,
    ranges: &[String],
    fixes: &[String],
    terms: usize,
    format: Format,
) -> Result<String> {
    let datum = build_root_datum(&parse_algebra(algebra)?)?;
    let assignments = parse_scan_assignments(&datum, ranges, fixes)?;
    let rows = scan_query(&datum, &assignments, terms)?;
    Ok(match format {
        Format::Json => {
            let arr: Vec<Value> = rows.iter().map(|r| r.to_json()).collect();
            serde_json::to_string_pretty(&Value::Array(arr)).unwrap()
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{llll}\n");
            out.push_str("$\\Lambda$ & marks & Hilbert series & expansion \\\\ \\hline\n");
            for r in &rows {
                out.push_str(&r.to_latex_row());
                out.push('\n');
            }
            out.push_str("\\end{tabular}\n");
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                out.push_str(&format!(
                    "marks ({})  weight {}  H(q) = {}  coeffs {}\n",
                    r.marks
                        .values
                        .iter()
                        .map(render::format_q)
                        .collect::<Vec<_>>()
                        .join(","),
                    r.weight_display,
                    render::format_series(&r.common_factor, &r.primitive_poly(), r.pole_order),
                    r.expansion
                        .iter()
                        .map(render::format_q)
                        .collect::<Vec<_>>()
                        .join(", "),
                ));
            }
            out
        }
    })
}

pub fn run_atypical(algebra: &str, weight: &str, terms: usize, format: Format) -> Result<String> {
    let datum = build_root_datum(&parse_algebra(algebra)?)?;
    let w = parse_weight(&datum, weight)?;
    let result = atypical_query(&datum, &w, terms)?;
    Ok(match format {
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("algebra".into(), json!(result.algebra));
            obj.insert("weight".into(), json!(result.weight_display));
            obj.insert("marks".into(), json_q_list(&result.marks.values));
            obj.insert("atypical_root".into(), json!(result.site_root));
            obj.insert(
                "dims".into(),
                Value::Array(result.dims.iter().map(json_int).collect()),
            );
            obj.insert("upper_bounds".into(), json_q_list(&result.upper_bounds));
            serde_json::to_string_pretty(&Value::Object(obj)).unwrap()
        }
        _ => {
            let mut out = String::new();
            out.push_str(&format!("algebra: {}\n", result.algebra));
            out.push_str(&format!(
                "weight: {} (marks ({}))\n",
                result.weight_display,
                result
                    .marks
                    .values
                    .iter()
                    .map(render::format_q)
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
            out.push_str(&format!("singly atypical at root {}\n", result.site_root));
            out.push_str(&format!(
                "dims:         {}\n",
                result
                    .dims
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
            out.push_str(&format!(
                "upper bounds: {}\n",
                result
                    .upper_bounds
                    .iter()
                    .map(render::format_q)
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
            out
        }
    })
}

/// A batch file is a TOML or JSON list of series queries:
///
/// ```toml
/// [[query]]
/// algebra = "sl(2|1)"
/// marks = "3,1"
/// terms = 5
/// ```
#[derive(Debug, serde::Deserialize)]
pub struct BatchFile {
    #[serde(rename = "query", default)]
    pub queries: Vec<BatchQuery>,
}

#[derive(Debug, serde::Deserialize)]
pub struct BatchQuery {
    pub algebra: String,
    pub marks: Option<String>,
    pub coords: Option<String>,
    #[serde(default = "default_terms")]
    pub terms: usize,
}

fn default_terms() -> usize {
    5
}

/// Run every query in a batch file; output is a JSON array.
pub fn run_batch(content: &str, is_toml: bool) -> Result<String> {
    let batch: BatchFile = if is_toml {
        toml::from_str(content).map_err(|e| Error::Parse {
            position: 0,
            message: format!("bad batch file: {e}"),
        })?
    } else {
        serde_json::from_str(content).map_err(|e| Error::Parse {
            position: 0,
            message: format!("bad batch file: {e}"),
        })?
    };
    let mut out = Vec::new();
    for q in &batch.queries {
        let datum = build_root_datum(&parse_algebra(&q.algebra)?)?;
        let w = match (&q.marks, &q.coords) {
            (Some(marks), None) => {
                weight_from_marks(&datum, &crate::weights::parse_marks_list(&datum, marks)?)?
            }
            (None, Some(coords)) => crate::weights::parse_coords_expr(&datum, coords)?,
            _ => {
                return Err(Error::Parse {
                    position: 0,
                    message: format!(
                        "batch query for {} needs exactly one of marks/coords",
                        q.algebra
                    ),
                })
            }
        };
        out.push(series_query(&datum, &w, q.terms)?.to_json());
    }
    Ok(serde_json::to_string_pretty(&Value::Array(out)).unwrap())
}
