//! One-dimensional representations: trivial, Steinberg and the mixed sign characters.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::HeckeRep;
use crate::error::{Error, Result};
use crate::laurent::{ratio_to_f64, Rational};
use crate::linalg::{CMat, QMat};
use crate::weyl::{AffineWeyl, ParamSystem};

/// Generator of the cyclic group `Ω̂` and its order.
fn omega_generator(g: &AffineWeyl) -> Option<(usize, usize)> {
    let k = g.omegas.len();
    (0..k).find_map(|a| {
        let mut x = g.omegas[a].elem.clone();
        let mut ord = 1;
        while g.omega_index(&x) != Some(0) {
            x = g.multiply(&x, &g.omegas[a].elem);
            ord += 1;
        }
        (ord == k).then_some((a, k))
    })
}

/// Builds the character with `h_s ↦ q_s` (`sign[c] = false`) or `−1` (`true`) per class,
/// and `Ω̂` acting through the `k`-th character of the cyclic group.
pub fn character(g: &AffineWeyl, params: &ParamSystem, sign: &[bool], omega_char: usize) -> Result<HeckeRep> {
    let q = params.q.clone().ok_or_else(|| Error::Config("builtin reps need numeric parameters".into()))?;
    let vals: Vec<Rational> = (0..g.num_generators())
        .map(|i| {
            let c = params.class_of[i];
            if sign[c] {
                Rational::from_integer(-1)
            } else {
                q[c]
            }
        })
        .collect();
    let gens: Vec<CMat> = vals.iter().map(|v| CMat::from_element(1, 1, Complex64::new(ratio_to_f64(v), 0.0))).collect();
    let (omega_given, real) = match omega_generator(g) {
        Some((a, ord)) if a != 0 => {
            let k = omega_char % ord;
            let z = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / ord as f64);
            let real = (2 * k).is_multiple_of(ord);
            let z = if real { Complex64::new(z.re.round(), 0.0) } else { z };
            (vec![(a, CMat::from_element(1, 1, z))], real)
        }
        _ => {
            if omega_char != 0 {
                return Err(Error::Usage("Ω̂ is trivial; only omega=0 is available".into()));
            }
            (vec![], true)
        }
    };
    let exact = real.then(|| {
        let qg: Vec<QMat> = vals.iter().map(|v| vec![vec![*v]]).collect();
        let qo: Vec<(usize, QMat)> = omega_given
            .iter()
            .map(|(a, m)| (*a, vec![vec![Rational::from_integer(m[(0, 0)].re as i128)]]))
            .collect();
        (qg, qo)
    });
    HeckeRep::new(g.clone(), params.clone(), gens, omega_given, exact)
}

/// `trivial`, `steinberg`, or `sign:s0=+,s1=-,omega=1` (`+` for `q_s`, `-` for `−1`;
/// unnamed classes default to `+`).
pub fn builtin_rep(name: &str, g: &AffineWeyl, params: &ParamSystem) -> Result<HeckeRep> {
    let k = params.nclasses;
    match name.trim() {
        "trivial" => character(g, params, &vec![false; k], 0),
        "steinberg" => character(g, params, &vec![true; k], 0),
        other => {
            let spec = other
                .strip_prefix("sign:")
                .ok_or_else(|| Error::Usage(format!("unknown builtin rep {other:?}")))?;
            let mut sign: Vec<Option<bool>> = vec![None; k];
            let mut omega = 0;
            for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let (key, val) =
                    part.split_once('=').ok_or_else(|| Error::Usage(format!("bad assignment {part:?}")))?;
                if key.trim() == "omega" {
                    omega = val.trim().parse().map_err(|_| Error::Usage(format!("bad omega character {val:?}")))?;
                    continue;
                }
                let c = params.class_by_name(key)?;
                let s = match val.trim() {
                    "+" | "q" => false,
                    "-" | "-1" => true,
                    v => return Err(Error::Usage(format!("value {v:?} must be + or -"))),
                };
                if sign[c].is_some_and(|prev| prev != s) {
                    return Err(Error::Usage(format!(
                        "inconsistent assignment for class {}: generators joined by an odd braid relation or by Ω̂ must agree",
                        params.class_name(c)
                    )));
                }
                sign[c] = Some(s);
            }
            let sign: Vec<bool> = sign.into_iter().map(|s| s.unwrap_or(false)).collect();
            character(g, params, &sign, omega)
        }
    }
}

/// Every one-dimensional representation: a sign pattern per parameter class times a
/// character of `Ω̂`.
pub fn one_dim_reps(g: &AffineWeyl, params: &ParamSystem) -> Result<Vec<(String, HeckeRep)>> {
    let k = params.nclasses;
    let nomega = omega_generator(g).map_or(1, |(_, o)| o);
    let mut out = vec![];
    for bits in 0..(1u32 << k) {
        let sign: Vec<bool> = (0..k).map(|c| bits >> c & 1 == 1).collect();
        for w in 0..nomega {
            let mut parts: Vec<String> =
                (0..k).map(|c| format!("{}={}", params.class_name(c), if sign[c] { '-' } else { '+' })).collect();
            if nomega > 1 {
                parts.push(format!("omega={w}"));
            }
            out.push((format!("sign:{}", parts.join(",")), character(g, params, &sign, w)?));
        }
    }
    Ok(out)
}

/// `2^M`, `M` the number of classes of `S` under odd braid relations (ignoring `Ω̂`).
pub fn coxeter_one_dim_count(g: &AffineWeyl) -> usize {
    let k = g.num_generators();
    let mut class: Vec<usize> = (0..k).collect();
    loop {
        let mut changed = false;
        for i in 0..k {
            for j in 0..k {
                if i != j && g.coxeter_m(i, j).is_some_and(|m| m % 2 == 1) && class[i] != class[j] {
                    let m = class[i].min(class[j]);
                    class[i] = m;
                    class[j] = m;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    class.sort_unstable();
    class.dedup();
    1 << class.len()
}
