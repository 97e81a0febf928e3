//! JSON interchange: scalar literals, matrices, tensors, triples and reports.
//!
//! Series are strings in the literal grammar of [`crate::scalar::literal`]. K[j] values
//! are strings too (`"1 + j*(2)"`); the other rank-2 algebras use
//! `{"kind": "SPLIT", "a": "…", "b": "…"}`. Matrices are row-major arrays, tensors are
//! lists of `[i, j, value]`.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde_json::{json, Map, Value};

use crate::cohomology::CocycleReport;
use crate::error::{Error, Result};
use crate::lie::{RootType, Tensor2};
use crate::linalg::{ExtMatrix, KMatrix, Matrix};
use crate::rmatrix::AdmissibleTriple;
use crate::scalar::literal::{parse_ramified, parse_series};
use crate::scalar::{AlgebraKind, ExtScalar, GaussRat, LaurentScalar, Scalar};
use crate::twisted::TwistedReport;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn ext_to_json(x: &ExtScalar) -> Value {
    match x.kind {
        AlgebraKind::Ramified => Value::String(x.to_string()),
        k => json!({"kind": k.name(), "a": x.a.to_string(), "b": x.b.to_string()}),
    }
}

pub fn ext_from_json(v: &Value, precision: usize) -> Result<ExtScalar> {
    match v {
        Value::String(s) => parse_ramified(s, precision),
        Value::Number(n) => parse_ramified(&n.to_string(), precision),
        Value::Object(o) => {
            let kind = o
                .get("kind")
                .and_then(Value::as_str)
                .and_then(AlgebraKind::from_name)
                .ok_or_else(|| parse_err("scalar object needs a valid \"kind\""))?;
            let part = |key: &str| -> Result<LaurentScalar> {
                let t = o.get(key).ok_or_else(|| parse_err(format!("scalar object lacks \"{key}\"")))?;
                series_from_json(t, precision)
            };
            Ok(ExtScalar::new(kind, part("a")?, part("b")?))
        }
        _ => Err(parse_err(format!("not a scalar: {v}"))),
    }
}

pub fn series_from_json(v: &Value, precision: usize) -> Result<LaurentScalar> {
    match v {
        Value::String(s) => parse_series(s, precision),
        Value::Number(n) => parse_series(&n.to_string(), precision),
        _ => Err(parse_err(format!("not a series literal: {v}"))),
    }
}

/// An exact constant of K (Gaussian rational).
pub fn gauss_from_json(v: &Value) -> Result<GaussRat> {
    let x = series_from_json(v, 1)?;
    if !x.is_exact() || x.coefficients().len() > 1 || x.valuation().is_some_and(|v| v != 0) {
        return Err(parse_err(format!("expected a constant, got {v}")));
    }
    Ok(x.coeff_at(0))
}

pub fn matrix_to_json<T: Display + Clone>(m: &Matrix<T>) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect())).collect())
}

pub fn ext_matrix_to_json(m: &ExtMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(ext_to_json).collect())).collect())
}

fn rows_of(v: &Value) -> Result<Vec<&Vec<Value>>> {
    let rows: Vec<&Vec<Value>> = v
        .as_array()
        .ok_or_else(|| parse_err("matrix must be an array of rows"))?
        .iter()
        .map(|r| r.as_array().ok_or_else(|| parse_err("matrix row must be an array")))
        .collect::<Result<_>>()?;
    let cols = rows.first().map_or(0, |r| r.len());
    if rows.is_empty() || cols == 0 || rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Shape("matrix rows are empty or ragged".into()));
    }
    Ok(rows)
}

pub fn ext_matrix_from_json(v: &Value, precision: usize) -> Result<ExtMatrix> {
    let rows = rows_of(v)?;
    let parsed: Vec<Vec<ExtScalar>> =
        rows.iter().map(|r| r.iter().map(|x| ext_from_json(x, precision)).collect::<Result<_>>()).collect::<Result<_>>()?;
    let kind = parsed[0][0].kind;
    if parsed.iter().flatten().any(|x| x.kind != kind) {
        return Err(Error::KindMismatch);
    }
    Ok(Matrix::from_rows(parsed))
}

pub fn k_matrix_from_json(v: &Value, precision: usize) -> Result<KMatrix> {
    let rows = rows_of(v)?;
    let parsed: Vec<Vec<LaurentScalar>> =
        rows.iter().map(|r| r.iter().map(|x| series_from_json(x, precision)).collect::<Result<_>>()).collect::<Result<_>>()?;
    Ok(Matrix::from_rows(parsed))
}

pub fn tensor_to_json<T: Scalar>(t: &Tensor2<T>) -> Value {
    Value::Array(t.iter().map(|(i, j, v)| json!([i, j, v.to_string()])).collect())
}

pub fn ext_tensor_to_json(t: &Tensor2<ExtScalar>) -> Value {
    Value::Array(t.iter().map(|(i, j, v)| json!([i, j, ext_to_json(v)])).collect())
}

fn tensor_entries(v: &Value) -> Result<Vec<(usize, usize, &Value)>> {
    v.as_array()
        .ok_or_else(|| parse_err("tensor must be a list of [i, j, value]"))?
        .iter()
        .map(|e| {
            let a = e.as_array().filter(|a| a.len() == 3).ok_or_else(|| parse_err("tensor entry must be [i, j, value]"))?;
            let idx = |x: &Value| x.as_u64().map(|u| u as usize).ok_or_else(|| parse_err("tensor index must be a natural number"));
            Ok((idx(&a[0])?, idx(&a[1])?, &a[2]))
        })
        .collect()
}

pub fn gauss_tensor_from_json(v: &Value) -> Result<Tensor2<GaussRat>> {
    let mut t = Tensor2::new();
    for (i, j, x) in tensor_entries(v)? {
        t.add_term(i, j, gauss_from_json(x)?);
    }
    Ok(t)
}

pub fn ext_tensor_from_json(v: &Value, precision: usize) -> Result<Tensor2<ExtScalar>> {
    let mut t = Tensor2::new();
    let entries = tensor_entries(v)?;
    let mut kind = None;
    for (i, j, x) in entries {
        let s = ext_from_json(x, precision)?;
        if *kind.get_or_insert(s.kind) != s.kind {
            return Err(Error::KindMismatch);
        }
        t.add_term(i, j, s);
    }
    Ok(t)
}

/// A triple together with an optional user-supplied skew Cartan part of r₀.
#[derive(Clone, Debug)]
pub struct TripleSpec {
    pub triple: AdmissibleTriple,
    pub skew: Option<Tensor2<GaussRat>>,
}

fn root_name(i: usize) -> String {
    format!("a{}", i + 1)
}

fn root_index(v: &Value) -> Result<usize> {
    let s = v.as_str().ok_or_else(|| parse_err(format!("root name must be a string like \"a1\": {v}")))?;
    s.strip_prefix('a')
        .and_then(|d| d.parse::<usize>().ok())
        .filter(|&k| k >= 1)
        .map(|k| k - 1)
        .ok_or_else(|| parse_err(format!("bad root name `{s}`")))
}

pub fn triple_to_json(t: &AdmissibleTriple) -> Value {
    let tau: Map<String, Value> = t.tau.iter().map(|(a, b)| (root_name(*a), Value::String(root_name(*b)))).collect();
    json!({
        "type": t.root_type.to_string(),
        "rank": t.rank,
        "gamma1": t.gamma1().into_iter().map(root_name).collect::<Vec<_>>(),
        "gamma2": t.gamma2().into_iter().map(root_name).collect::<Vec<_>>(),
        "tau": tau,
        "s": "auto",
    })
}

pub fn triple_from_json(v: &Value) -> Result<TripleSpec> {
    let o = v.as_object().ok_or_else(|| parse_err("triple must be a JSON object"))?;
    let ty = o
        .get("type")
        .and_then(Value::as_str)
        .and_then(RootType::parse)
        .ok_or_else(|| parse_err("triple needs \"type\" A, B or D"))?;
    let rank = o.get("rank").and_then(Value::as_u64).ok_or_else(|| parse_err("triple needs an integer \"rank\""))? as usize;
    let mut tau = BTreeMap::new();
    if let Some(m) = o.get("tau") {
        let m = m.as_object().ok_or_else(|| parse_err("\"tau\" must map root names to root names"))?;
        for (k, img) in m {
            tau.insert(root_index(&Value::String(k.clone()))?, root_index(img)?);
        }
    }
    let triple = AdmissibleTriple { root_type: ty, rank, tau };
    for (key, expected) in [("gamma1", triple.gamma1()), ("gamma2", triple.gamma2())] {
        if let Some(g) = o.get(key) {
            let mut got: Vec<usize> = g
                .as_array()
                .ok_or_else(|| parse_err(format!("\"{key}\" must be a list")))?
                .iter()
                .map(root_index)
                .collect::<Result<_>>()?;
            got.sort_unstable();
            if got != expected {
                return Err(Error::InvalidTriple(format!("\"{key}\" disagrees with \"tau\"")));
            }
        }
    }
    let skew = match o.get("s") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) if s == "auto" => None,
        Some(t) => Some(gauss_tensor_from_json(t)?),
    };
    Ok(TripleSpec { triple, skew })
}

fn opt<T>(x: Option<&T>, f: impl Fn(&T) -> Value) -> Value {
    x.map_or(Value::Null, f)
}

pub fn cocycle_report_to_json(r: &CocycleReport, x: &ExtMatrix) -> Value {
    json!({
        "is_cocycle": r.is_cocycle,
        "galois_checks": r.galois_checks.iter().map(|g| json!({
            "generator": g.generator,
            "transport": ext_matrix_to_json(&g.transport),
            "residual": ext_tensor_to_json(&g.residual),
        })).collect::<Vec<_>>(),
        "class": opt(r.class.as_ref(), |c| serde_json::to_value(c).expect("class serializes")),
        "witness_Q": opt(r.witness_q.as_ref(), matrix_to_json),
        "witness_C": opt(r.witness_c.as_ref(), ext_matrix_to_json),
        "witness_X0": opt(r.witness_x0.as_ref(), ext_matrix_to_json),
        "reconstruction_residual": opt(r.reconstruction_residual(x).as_ref(), ext_matrix_to_json),
        "note": r.note,
    })
}

pub fn twisted_report_to_json(r: &TwistedReport, x: &ExtMatrix) -> Value {
    let precision = x.entries().map(|e| e.precision()).min().unwrap_or(crate::scalar::DEFAULT_PRECISION);
    let residual = r.recombined(precision).map(|m| x.sub(&m));
    json!({
        "is_twisted_cocycle": r.is_twisted_cocycle,
        "residual": ext_tensor_to_json(&r.residual),
        "class": r.class,
        "witness_Q": opt(r.witness_q.as_ref(), matrix_to_json),
        "witness_D": opt(r.witness_d.as_ref(), ext_matrix_to_json),
        "method": r.method,
        "obstruction": r.obstruction,
        "reconstruction_residual": opt(residual.as_ref(), ext_matrix_to_json),
        "note": r.note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twisted::build_x0_twisted;

    #[test]
    fn matrix_round_trip() {
        let x = build_x0_twisted(3, 8).scale(&parse_ramified("h^-1*(1 + 2*h) + j/3", 8).unwrap());
        let back = ext_matrix_from_json(&ext_matrix_to_json(&x), 8).unwrap();
        assert_eq!(back, x);
        let text = serde_json::to_string(&ext_matrix_to_json(&x)).unwrap();
        assert_eq!(text, serde_json::to_string(&ext_matrix_to_json(&back)).unwrap());
    }

    #[test]
    fn split_scalars_are_objects() {
        let x = ExtScalar::new(AlgebraKind::Split, LaurentScalar::from_int(2, 8), LaurentScalar::hbar(8));
        let v = ext_to_json(&x);
        assert_eq!(v["kind"], "SPLIT");
        assert_eq!(ext_from_json(&v, 8).unwrap(), x);
    }

    #[test]
    fn triple_round_trip() {
        let t = AdmissibleTriple::new(RootType::A, 3, [(0, 2)]);
        let v = triple_to_json(&t);
        assert_eq!(v["tau"]["a1"], "a3");
        assert_eq!(triple_from_json(&v).unwrap().triple, t);
        let bad = json!({"type": "A", "rank": 3, "gamma1": ["a2"], "tau": {"a1": "a3"}});
        assert!(matches!(triple_from_json(&bad), Err(Error::InvalidTriple(_))));
    }

    #[test]
    fn tensor_round_trip() {
        let t = Tensor2::from_terms([(0, 1, GaussRat::ratio(1, 4)), (2, 2, GaussRat::complex((1, 1), (2, 3)))]);
        assert_eq!(gauss_tensor_from_json(&tensor_to_json(&t)).unwrap(), t);
    }
}
