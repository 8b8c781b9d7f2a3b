//! Rep files: `{type, dim, q, generators: {"s0": [[..]], …, "w1": [[..]]}}`.
//!
//! Matrix entries are numbers, `"p/q"` strings, or `[re, im]` pairs. When every
//! entry is a real rational the relations are checked exactly.

use std::path::Path;

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use super::{clean, HeckeRep};
use crate::error::{Error, Result};
use crate::laurent::{format_ratio, parse_ratio, ratio_to_f64, Rational};
use crate::linalg::{CMat, QMat};
use crate::weyl::{AffineWeyl, ParamSystem};

enum Entry {
    Exact(Rational),
    Float(Complex64),
}

fn parse_scalar(v: &Value) -> Result<Entry> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Entry::Exact(Rational::from_integer(i as i128))),
            None => Ok(Entry::Float(Complex64::new(n.as_f64().unwrap_or(f64::NAN), 0.0))),
        },
        Value::String(s) => Ok(Entry::Exact(parse_ratio(s)?)),
        _ => Err(Error::Parse(format!("bad matrix entry {v}"))),
    }
}

fn parse_entry(v: &Value) -> Result<Entry> {
    if let Value::Array(pair) = v {
        if pair.len() != 2 {
            return Err(Error::Parse(format!("complex entry needs [re, im], got {v}")));
        }
        let re = parse_scalar(&pair[0])?;
        let im = parse_scalar(&pair[1])?;
        return Ok(match (re, im) {
            (Entry::Exact(r), Entry::Exact(i)) if i == Rational::from_integer(0) => Entry::Exact(r),
            (re, im) => Entry::Float(Complex64::new(to_c(&re).re, to_c(&im).re)),
        });
    }
    parse_scalar(v)
}

fn to_c(e: &Entry) -> Complex64 {
    match e {
        Entry::Exact(r) => Complex64::new(ratio_to_f64(r), 0.0),
        Entry::Float(z) => *z,
    }
}

/// Parsed matrix plus its exact form when available.
fn parse_matrix(v: &Value, dim: usize, name: &str) -> Result<(CMat, Option<QMat>)> {
    let rows = v.as_array().ok_or_else(|| Error::Parse(format!("{name}: matrix must be a list of rows")))?;
    if rows.len() != dim {
        return Err(Error::Validation(format!("{name}: expected {dim} rows, got {}", rows.len())));
    }
    let mut entries = vec![];
    for row in rows {
        let r = row.as_array().ok_or_else(|| Error::Parse(format!("{name}: row must be a list")))?;
        if r.len() != dim {
            return Err(Error::Validation(format!("{name}: matrix is not square of size {dim}")));
        }
        for e in r {
            entries.push(parse_entry(e)?);
        }
    }
    let m = CMat::from_fn(dim, dim, |i, j| to_c(&entries[i * dim + j]));
    let exact = entries
        .iter()
        .map(|e| match e {
            Entry::Exact(r) => Some(*r),
            Entry::Float(_) => None,
        })
        .collect::<Option<Vec<_>>>()
        .map(|flat| flat.chunks(dim).map(|c| c.to_vec()).collect());
    Ok((m, exact))
}

fn parse_q(v: &Value) -> Result<Rational> {
    match parse_scalar(v)? {
        Entry::Exact(r) => Ok(r),
        Entry::Float(z) => Rational::approximate_float(z.re)
            .filter(|r| (ratio_to_f64(r) - z.re).abs() < 1e-12)
            .ok_or_else(|| Error::Parse(format!("parameter {} is not rational", z.re))),
    }
}

pub(crate) fn parse_params(g: &AffineWeyl, v: Option<&Value>) -> Result<ParamSystem> {
    match v {
        None => Err(Error::Parse("rep file needs q".into())),
        Some(Value::Object(m)) => {
            let assignments = m.iter().map(|(k, v)| Ok((k.clone(), parse_q(v)?))).collect::<Result<Vec<_>>>()?;
            ParamSystem::numeric(g, &assignments, None)
        }
        Some(v) => ParamSystem::numeric(g, &[], Some(parse_q(v)?)),
    }
}

pub fn parse_rep(text: &str) -> Result<HeckeRep> {
    let v: Value = serde_json::from_str(text)?;
    let t = v.get("type").and_then(Value::as_str).ok_or_else(|| Error::Parse("rep file needs type".into()))?;
    let g = AffineWeyl::load(t)?;
    let params = parse_params(&g, v.get("q"))?;
    let dim = v.get("dim").and_then(Value::as_u64).ok_or_else(|| Error::Parse("rep file needs dim".into()))? as usize;
    let gens_v = v
        .get("generators")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Parse("rep file needs a generators object".into()))?;
    let mut gens = vec![];
    let mut qgens = vec![];
    for i in 0..g.num_generators() {
        let key = format!("s{i}");
        let m = gens_v.get(&key).ok_or_else(|| Error::Parse(format!("missing generator {key}")))?;
        let (c, q) = parse_matrix(m, dim, &key)?;
        gens.push(c);
        qgens.push(q);
    }
    let mut omegas = vec![];
    let mut qomegas = vec![];
    for (key, m) in gens_v {
        if key.starts_with('s') {
            if key[1..].parse::<usize>().map_or(true, |i| i >= g.num_generators()) {
                return Err(Error::Parse(format!("unknown generator {key}")));
            }
            continue;
        }
        let k = g.omega_by_name(key).ok_or_else(|| Error::Parse(format!("unknown Ω̂ element {key}")))?;
        let (c, q) = parse_matrix(m, dim, key)?;
        omegas.push((k, c));
        qomegas.push((k, q));
    }
    let exact = qgens.into_iter().collect::<Option<Vec<_>>>().zip(qomegas.into_iter().map(|(k, q)| q.map(|q| (k, q))).collect::<Option<Vec<_>>>());
    HeckeRep::new(g, params, gens, omegas, exact)
}

pub fn load_rep(path: &Path) -> Result<HeckeRep> {
    parse_rep(&std::fs::read_to_string(path)?)
}

fn matrix_json(m: &CMat) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|i| {
                Value::Array(
                    (0..m.ncols())
                        .map(|j| {
                            let z = m[(i, j)];
                            let re = clean(z.re);
                            if z.im.abs() < 1e-15 && re.fract() == 0.0 && re.abs() < 1e15 {
                                json!(re as i64)
                            } else {
                                json!([re, clean(z.im)])
                            }
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Serialises the generator matrices and the non-identity `Ω̂` elements.
pub fn rep_to_json(rep: &HeckeRep) -> Value {
    let g = rep.group();
    let mut q = Map::new();
    if let Some(vals) = &rep.params().q {
        for (c, v) in vals.iter().enumerate() {
            q.insert(rep.params().class_name(c), json!(format_ratio(v)));
        }
    }
    let mut gens = Map::new();
    for (i, m) in rep.gens.iter().enumerate() {
        gens.insert(format!("s{i}"), matrix_json(m));
    }
    for (k, o) in g.omegas.iter().enumerate().skip(1) {
        gens.insert(o.name.clone(), matrix_json(&rep.omegas[k]));
    }
    json!({ "type": g.rs.name(), "dim": rep.dim, "q": q, "generators": gens })
}
