//! JSON encoding of exact values.
//!
//! A rational function is `{"e": 3, "num": [[dq, dt, ["1", "-1/2"]], ...], "den": [...]}`;
//! each coefficient lists its power-basis coordinates in ζ_e as reduced
//! rational strings. `e` may be omitted when every coefficient is rational.

use serde_json::{json, Value};

use super::cyclo::CycloScalar;
use super::matrix::RatMatrix;
use super::qtpoly::{Mono, QTPoly};
use super::qtrational::QTRational;
use super::rational::{format_rational, parse_rational};
use crate::error::{Error, Result};

fn poly_terms(p: &QTPoly) -> Value {
    Value::Array(
        p.terms()
            .rev()
            .map(|(m, c)| {
                let coords: Vec<Value> = c.coords().iter().map(|x| Value::String(format_rational(x))).collect();
                json!([m.dq, m.dt, coords])
            })
            .collect(),
    )
}

fn order_of(p: &QTPoly) -> u32 {
    p.terms().map(|(_, c)| c.order()).max().unwrap_or(1)
}

pub fn qt_to_json(x: &QTRational) -> Value {
    let e = order_of(x.num()).max(order_of(x.den()));
    let mut v = json!({ "num": poly_terms(x.num()), "den": poly_terms(x.den()) });
    if e > 1 {
        v["e"] = json!(e);
    }
    v
}

fn bad(what: &str) -> Error {
    Error::Parse(format!("malformed rational-function JSON: {what}"))
}

fn poly_from(v: &Value, e: u32) -> Result<QTPoly> {
    let arr = v.as_array().ok_or_else(|| bad("term list expected"))?;
    let mut p = QTPoly::zero();
    for term in arr {
        let t = term.as_array().filter(|t| t.len() == 3).ok_or_else(|| bad("term must be [dq, dt, coords]"))?;
        let dq = t[0].as_u64().ok_or_else(|| bad("dq"))? as u32;
        let dt = t[1].as_u64().ok_or_else(|| bad("dt"))? as u32;
        let coords = t[2]
            .as_array()
            .ok_or_else(|| bad("coords"))?
            .iter()
            .map(|c| c.as_str().ok_or_else(|| bad("coordinate must be a string")).and_then(parse_rational))
            .collect::<Result<Vec<_>>>()?;
        p.add_term(Mono::new(dq, dt), &CycloScalar::from_coords(e, coords));
    }
    Ok(p)
}

pub fn qt_from_json(v: &Value) -> Result<QTRational> {
    let e = v.get("e").and_then(Value::as_u64).unwrap_or(1) as u32;
    let num = poly_from(v.get("num").ok_or_else(|| bad("missing num"))?, e)?;
    let den = poly_from(v.get("den").ok_or_else(|| bad("missing den"))?, e)?;
    QTRational::new(num, den)
}

pub fn matrix_to_json(m: &RatMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(qt_to_json).collect())).collect())
}

pub fn matrix_from_json(v: &Value) -> Result<RatMatrix> {
    let rows = v.as_array().ok_or_else(|| bad("matrix must be an array of rows"))?;
    let rows = rows
        .iter()
        .map(|r| r.as_array().ok_or_else(|| bad("row")).and_then(|r| r.iter().map(qt_from_json).collect()))
        .collect::<Result<Vec<Vec<QTRational>>>>()?;
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(bad("ragged rows"));
    }
    Ok(RatMatrix::from_rows(rows))
}
