//! Browser bindings for grassdim. Every export returns a JSON string.

use grassdim::exterior::{embed_fiber, fiber_coordinates, recover_overlap, PlueckerVector};
use grassdim::fields::Rationals;
use grassdim::formulas::{defect_report, predict, DefectReport, Prediction};
use grassdim::terracini::{dimension, DimensionReport, OracleField, SecantParams};
use grassdim::{Error, Result};
use serde::{Deserialize, Serialize};
use wasm_bindgen::prelude::*;

/// Grid cells with more Plücker coordinates than this are left blank.
pub const GRID_MAX_COORDS: u64 = 126;
pub const GRID_MAX_N: usize = 10;
const TRIALS: usize = 2;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimensionView {
    pub report: DimensionReport,
    pub prediction: Prediction,
    pub defect: DefectReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridCell {
    pub n: usize,
    pub k: usize,
    pub proj: u64,
    pub expected: u64,
    pub fiber: u64,
    pub defect: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridView {
    pub s: usize,
    pub r: usize,
    pub cells: Vec<GridCell>,
    /// `(n, k)` pairs over the size limit.
    pub skipped: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecoveryView {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub overlap: Vec<Vec<String>>,
    /// Nonzero fiber coordinates as `(indices, value)`.
    pub fiber: Vec<(Vec<usize>, String)>,
    /// c with the re-embedded fiber equal to c times the input.
    pub scalar: Option<String>,
}

pub fn dimension_view(n: usize, k: usize, s: usize, r: usize, seed: u64) -> Result<DimensionView> {
    let params = SecantParams::new(n, k, s, r)?;
    let report = dimension(&params, &OracleField::primes_from_seed(seed), TRIALS, seed)?;
    Ok(DimensionView {
        prediction: predict(&params),
        defect: defect_report(&params, &report)?,
        report,
    })
}

pub fn defect_grid(s: usize, r: usize, n_max: usize, seed: u64) -> Result<GridView> {
    if n_max > GRID_MAX_N {
        return Err(Error::TooLarge(format!("n up to {n_max} (limit {GRID_MAX_N})")));
    }
    let mut cells = Vec::new();
    let mut skipped = Vec::new();
    for n in 2..=n_max {
        for k in r.max(1)..n {
            let params = SecantParams::new(n, k, s, r)?;
            if params.coordinate_count() > GRID_MAX_COORDS {
                skipped.push((n, k));
                continue;
            }
            let report = dimension(&params, &OracleField::primes_from_seed(seed), TRIALS, seed)?;
            let d = defect_report(&params, &report)?;
            cells.push(GridCell {
                n,
                k,
                proj: d.actual,
                expected: d.expected,
                fiber: d.fiber,
                defect: d.defect,
            });
        }
    }
    Ok(GridView { s, r, cells, skipped })
}

/// Parses `2*012 - 034 + 135` into signed, sorted terms. Indices are single digits.
pub fn parse_terms(expr: &str) -> Result<Vec<(i64, Vec<usize>)>> {
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut terms = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ if terms.is_empty() => (1, rest),
            _ => return Err(Error::Parse(format!("expected + or - before {rest:?}"))),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let (term, tail) = body.split_at(end);
        rest = tail;
        let (coeff, word) = match term.split_once('*') {
            Some((c, w)) => (c.parse::<i64>().map_err(|e| Error::Parse(format!("{c:?}: {e}")))?, w),
            None => (1, term),
        };
        let mut indices = word
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad index {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if indices.is_empty() {
            return Err(Error::Parse(format!("term {term:?} has no indices")));
        }
        let mut parity = 0;
        for i in 0..indices.len() {
            for j in 0..indices.len() - 1 - i {
                if indices[j] > indices[j + 1] {
                    indices.swap(j, j + 1);
                    parity ^= 1;
                }
            }
        }
        if indices.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let signed = if parity == 1 { -coeff } else { coeff };
        terms.push((sign * signed, indices));
    }
    Ok(terms)
}

pub fn recovery_view(n: usize, expr: &str, r: usize) -> Result<RecoveryView> {
    let terms = parse_terms(expr)?;
    let k = terms
        .first()
        .map(|(_, i)| i.len())
        .ok_or_else(|| Error::Parse("all terms vanish".into()))?;
    let q = Rationals::default();
    let refs: Vec<(i64, &[usize])> = terms.iter().map(|(c, i)| (*c, i.as_slice())).collect();
    let w = PlueckerVector::from_terms(&q, n, k, &refs)?;
    let e = recover_overlap(&w, r)?;
    let t = fiber_coordinates(&w, &e)?;
    let back = embed_fiber(&e, &t)?;
    Ok(RecoveryView {
        n,
        k,
        r,
        overlap: e.to_rows().iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect(),
        fiber: t.support().iter().map(|(i, c)| (i.entries().to_vec(), c.to_string())).collect(),
        scalar: w.proportionality(&back).map(|c| c.to_string()),
    })
}

fn to_js<T: Serialize>(value: Result<T>) -> std::result::Result<String, JsValue> {
    value
        .and_then(|v| serde_json::to_string(&v).map_err(|e| Error::Parse(e.to_string())))
        .map_err(|e| JsValue::from_str(&e.to_string()))
}

#[wasm_bindgen(js_name = dimensionReport)]
pub fn dimension_report_js(n: usize, k: usize, s: usize, r: usize, seed: u32) -> std::result::Result<String, JsValue> {
    to_js(dimension_view(n, k, s, r, seed as u64))
}

#[wasm_bindgen(js_name = defectGrid)]
pub fn defect_grid_js(s: usize, r: usize, n_max: usize, seed: u32) -> std::result::Result<String, JsValue> {
    to_js(defect_grid(s, r, n_max, seed as u64))
}

#[wasm_bindgen(js_name = recoverOverlap)]
pub fn recover_overlap_js(n: usize, expr: &str, r: usize) -> std::result::Result<String, JsValue> {
    to_js(recovery_view(n, expr, r))
}
