//! Exact Laurent polynomials in the square roots `v_c` of the Hecke parameters.
//!
//! Every coefficient of a Hecke algebra element lives in `Q[v_c^{±1}]`, where
//! `v_c^2 = u_c` is the parameter of class `c`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rational = Ratio<i128>;

/// Exponent vector, one entry per parameter class (exponents of `v_c`).
pub type Exps = Vec<i32>;

/// Laurent polynomial with rational coefficients in `v_0, ..., v_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent {
    nvars: usize,
    terms: BTreeMap<Exps, Rational>,
}

impl Laurent {
    pub fn zero(nvars: usize) -> Self {
        Laurent { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Rational::from_integer(c as i128))
    }

    pub fn monomial(exps: Exps, c: Rational) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Laurent { nvars, terms }
    }

    /// `v^exps` with coefficient one.
    pub fn v_pow(exps: Exps) -> Self {
        Self::monomial(exps, Rational::one())
    }

    /// The parameter `u_c = v_c^2` of class `c`.
    pub fn u(nvars: usize, class: usize) -> Self {
        let mut e = vec![0; nvars];
        e[class] = 2;
        Self::v_pow(e)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c * v^exps` in place.
    pub fn add_term(&mut self, exps: &[i32], c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(exps) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(exps);
                }
            }
            None => {
                self.terms.insert(exps.to_vec(), *c);
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Laurent) {
        for (e, c) in &other.terms {
            self.add_term(e, c);
        }
    }

    /// `self += k * other`.
    pub fn add_scaled(&mut self, other: &Laurent, k: &Laurent) {
        for (e1, c1) in &k.terms {
            for (e2, c2) in &other.terms {
                let e: Exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                self.add_term(&e, &(c1 * c2));
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Laurent {
        if c.is_zero() {
            return Laurent::zero(self.nvars);
        }
        Laurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `v^exps`.
    pub fn shift(&self, exps: &[i32]) -> Laurent {
        Laurent {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), *v))
                .collect(),
        }
    }

    /// If `self` is a single monomial, return it.
    pub fn as_monomial(&self) -> Option<(&Exps, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Inverse of a monomial; fails for anything else.
    pub fn inverse_monomial(&self) -> Result<Laurent> {
        let (e, c) = self
            .as_monomial()
            .ok_or_else(|| Error::Domain("only monomials are invertible".into()))?;
        Ok(Laurent::monomial(e.iter().map(|x| -x).collect(), c.recip()))
    }

    /// Value at `v_c = sqrt(q_c)`.
    pub fn eval(&self, q: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let m: f64 = e.iter().zip(q).map(|(&k, &qc)| qc.sqrt().powi(k)).product();
                ratio_to_f64(c) * m
            })
            .sum()
    }

    /// Sum of absolute values of the terms at `v_c = sqrt(q_c)`.
    pub fn eval_abs_terms(&self, q: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let m: f64 = e.iter().zip(q).map(|(&k, &qc)| qc.sqrt().powi(k)).product();
                ratio_to_f64(c).abs() * m
            })
            .sum()
    }

    /// Exact value at integer parameters when every exponent is even.
    pub fn eval_exact(&self, q: &[i64]) -> Option<Rational> {
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut m = Rational::one();
            for (&k, &qc) in e.iter().zip(q) {
                if k % 2 != 0 {
                    return None;
                }
                let base = Rational::from_integer(qc as i128);
                m *= pow_ratio(&base, k / 2);
            }
            total += m * c;
        }
        Some(total)
    }

    /// Maps exponent vectors through `f`, merging collisions.
    pub fn map_exps(&self, nvars: usize, f: impl Fn(&[i32]) -> Exps) -> Laurent {
        let mut out = Laurent::zero(nvars);
        for (e, c) in &self.terms {
            out.add_term(&f(e), c);
        }
        out
    }

    /// Serialised form: exponent vector (as comma-separated text) to `p/q`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        for (e, c) in &self.terms {
            let key = e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            m.insert(key, serde_json::Value::String(format_ratio(c)));
        }
        serde_json::Value::Object(m)
    }

    pub fn from_json(nvars: usize, v: &serde_json::Value) -> Result<Laurent> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("coefficient must be an object".into()))?;
        let mut out = Laurent::zero(nvars);
        for (k, val) in obj {
            let exps: Exps = if k.is_empty() {
                vec![]
            } else {
                k.split(',')
                    .map(|s| s.trim().parse::<i32>().map_err(|e| Error::Parse(e.to_string())))
                    .collect::<Result<_>>()?
            };
            if exps.len() != nvars {
                return Err(Error::Parse(format!("exponent vector {k} has wrong length")));
            }
            let s = val
                .as_str()
                .ok_or_else(|| Error::Parse("coefficient value must be a string".into()))?;
            out.add_term(&exps, &parse_ratio(s)?);
        }
        Ok(out)
    }
}

fn pow_ratio(base: &Rational, k: i32) -> Rational {
    let mut r = Rational::one();
    for _ in 0..k.unsigned_abs() {
        r *= base;
    }
    if k < 0 {
        r.recip()
    } else {
        r
    }
}

pub fn ratio_to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn format_ratio(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}/1", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_ratio(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i128 = n.trim().parse().map_err(|_| bad())?;
            let d: i128 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, k)| format!("v{i}^{k}"))
                .collect();
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else if c.is_negative() {
                write!(f, "({c})*{}", mono.join("*"))?;
            } else {
                write!(f, "{c}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e, &-c);
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero(self.nvars.max(rhs.nvars));
        out.add_scaled(rhs, self);
        out
    }
}
