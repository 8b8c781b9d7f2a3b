//! Closed-form norm and diameter bounds, and Oh's table of `p₀`.

use nalgebra::DMatrix;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::laurent::{format_ratio, ratio_to_f64, Rational};
use crate::reps::clean;
use crate::rootsys::Coweight;
use crate::weyl::{AffineWeyl, ParamSystem, WeylElement};

/// A bound with its inputs and, optionally, an empirical value to compare against.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub formula: String,
    pub inputs: Map<String, Value>,
    pub bound: f64,
    /// Exact value when all inputs are rational.
    pub exact: Option<Rational>,
    pub empirical: Option<f64>,
}

impl BoundReport {
    fn new(formula: &str, inputs: Value, bound: f64, exact: Option<Rational>) -> BoundReport {
        let inputs = match inputs {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        BoundReport { formula: formula.into(), inputs, bound, exact, empirical: None }
    }

    pub fn with_empirical(mut self, x: f64) -> BoundReport {
        self.empirical = Some(x);
        self
    }

    /// `bound − empirical`.
    pub fn margin(&self) -> Option<f64> {
        self.empirical.map(|e| self.bound - e)
    }

    /// Holds unless an empirical value exceeds the bound.
    pub fn holds(&self) -> bool {
        self.empirical.is_none_or(|e| e <= self.bound * (1.0 + 1e-12))
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "formula": self.formula,
            "inputs": self.inputs,
            "bound": clean(self.bound),
        });
        if let Some(x) = &self.exact {
            v["exact"] = json!(format_ratio(x));
        }
        if let Some(e) = self.empirical {
            v["empirical"] = json!(clean(e));
            v["margin"] = json!(clean(self.bound - e));
            v["holds"] = json!(self.holds());
        }
        v
    }
}

fn checked_pow(b: i128, e: u32) -> Option<i128> {
    b.checked_pow(e)
}

/// `D(q, l) = |W₀| 2^{l(w̃₀)} q^{4 l(w̃₀)} (l + 1 + l(w̃₀))^{l(w̃₀)}`, with `w̃₀` the longest element of `W₀`.
pub fn d_constant(q: Rational, l: usize, group: &AffineWeyl) -> Result<BoundReport> {
    if q < Rational::from_integer(1) {
        return Err(Error::Domain(format!("q = {q} must be at least 1")));
    }
    let w0 = group.rs.weyl0.order() as i128;
    let lw = group.rs.longest_length() as u32;
    let inputs = json!({ "q": format_ratio(&q), "l": l, "W0_order": w0, "longest_length": lw });
    let float = w0 as f64 * 2f64.powi(lw as i32) * ratio_to_f64(&q).powi(4 * lw as i32) * ((l as u32 + 1 + lw) as f64).powi(lw as i32);
    let exact = (|| {
        let num = checked_pow(*q.numer(), 4 * lw)?;
        let den = checked_pow(*q.denom(), 4 * lw)?;
        let rest = w0.checked_mul(checked_pow(2, lw)?)?.checked_mul(checked_pow(l as i128 + 1 + lw as i128, lw)?)?;
        Some(Rational::new(num.checked_mul(rest)?, den))
    })();
    Ok(BoundReport::new("D(q,l)", inputs, exact.as_ref().map_or(float, ratio_to_f64), exact))
}

fn require_p(p: f64) -> Result<()> {
    if p.is_nan() || p < 2.0 {
        return Err(Error::Usage(format!("p = {p}: the bounds are stated for p ≥ 2")));
    }
    Ok(())
}

/// `q^{(p−1)/p}`, with `p = ∞` giving `q`.
fn q_power(q: f64, p: f64) -> f64 {
    if p.is_infinite() {
        q
    } else {
        q.powf((p - 1.0) / p)
    }
}

fn q_max_rational(params: &ParamSystem) -> Result<Rational> {
    let q = params.q.as_ref().ok_or_else(|| Error::Usage("numeric parameters required".into()))?;
    if q.iter().any(|x| *x <= Rational::from_integer(1)) {
        return Err(Error::Usage("the bounds need thick parameters q > 1".into()));
    }
    Ok(*q.iter().max().expect("at least one class"))
}

/// `‖h_w‖_p ≤ D(q_max, l(w)) q_w^{(p−1)/p}`.
pub fn norm_bound_hw(p: f64, w: &WeylElement, group: &AffineWeyl, params: &ParamSystem) -> Result<BoundReport> {
    require_p(p)?;
    let qmax = q_max_rational(params)?;
    let l = group.length(w);
    let d = d_constant(qmax, l, group)?;
    let qw = params.q_w_value(group, w)?;
    let bound = d.bound * q_power(qw, p);
    let inputs = json!({
        "p": p_json(p),
        "w": group.label(w),
        "l": l,
        "q_max": format_ratio(&qmax),
        "q_w": clean(qw),
        "D": clean(d.bound),
    });
    Ok(BoundReport::new("D(q_max,l(w))·q_w^((p-1)/p)", inputs, bound, None))
}

/// `‖h_β‖_p ≤ |W₀| (2 q_max)^{l(w̃₀)} (l(β) + 1)^{l(w̃₀)} q_β^{(p−1)/p}`.
pub fn norm_bound_hbeta(p: f64, beta: &Coweight, group: &AffineWeyl, params: &ParamSystem) -> Result<BoundReport> {
    require_p(p)?;
    if beta.rank() != group.rank() {
        return Err(Error::Usage(format!("β has rank {}, expected {}", beta.rank(), group.rank())));
    }
    let qmax = ratio_to_f64(&q_max_rational(params)?);
    let t = WeylElement::translation(beta.clone());
    let lb = group.length(&t);
    let w0 = group.rs.weyl0.order() as f64;
    let lw = group.rs.longest_length() as i32;
    let qb = params.q_w_value(group, &t)?;
    let bound = w0 * (2.0 * qmax).powi(lw) * ((lb + 1) as f64).powi(lw) * q_power(qb, p);
    let inputs = json!({
        "p": p_json(p),
        "beta": beta.0,
        "l_beta": lb,
        "q_max": clean(qmax),
        "q_beta": clean(qb),
        "W0_order": w0 as u64,
        "longest_length": lw,
    });
    Ok(BoundReport::new("|W0|·(2q_max)^l(w0)·(l(β)+1)^l(w0)·q_β^((p-1)/p)", inputs, bound, None))
}

/// `‖A‖_p ≤ K₀^{1/p} K₁^{(p−1)/p}` for a bipartite adjacency operator whose columns
/// have at most `K₀` and rows at most `K₁` nonzero entries.
pub fn bipartite_norm_bound(k0: u64, k1: u64, p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::Usage(format!("p = {p} must be at least 1")));
    }
    if p.is_infinite() || k0 == k1 {
        return Ok(k1 as f64);
    }
    Ok((k0 as f64).powf(1.0 / p) * (k1 as f64).powf((p - 1.0) / p))
}

/// Random `rows × cols` 0/1 matrix with every row sum `k1` and every column sum `k0`
/// (configuration model, repeated entries merged).
pub fn random_biregular_matrix(rows: usize, cols: usize, k0: usize, k1: usize, seed: u64) -> Result<DMatrix<f64>> {
    if rows * k1 != cols * k0 {
        return Err(Error::Usage(format!("{rows}·{k1} ≠ {cols}·{k0}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..cols).flat_map(|c| std::iter::repeat_n(c, k0)).collect();
    stubs.shuffle(&mut rng);
    let mut a = DMatrix::zeros(rows, cols);
    for (k, &c) in stubs.iter().enumerate() {
        a[(k / k1, c)] = 1.0;
    }
    Ok(a)
}

/// Oh's uniform `p₀` for the affine Coxeter group of the given type (rank ≥ 2).
pub fn oh_p0(type_name: &str) -> Result<u32> {
    let t = type_name.trim().to_ascii_uppercase();
    let t = t.trim_start_matches('~');
    let (family, rank) = t.split_at(t.find(|c: char| c.is_ascii_digit()).unwrap_or(t.len()));
    let n: u32 = rank.parse().map_err(|_| Error::Usage(format!("unknown type {type_name:?}")))?;
    if n < 2 {
        return Err(Error::Usage(format!(
            "{type_name}: the uniform p₀ table covers groups of rank at least 2; rank 1 has no uniform bound"
        )));
    }
    let bad = || Error::Usage(format!("unknown type {type_name:?}"));
    Ok(match family {
        "A" => 2 * n,
        "B" if n >= 3 => 2 * n,
        "C" => 2 * n,
        "D" if n >= 4 && n.is_multiple_of(2) => 2 * (n - 1),
        "D" if n >= 4 => 2 * n,
        "E" => match n {
            6 => 16,
            7 => 18,
            8 => 29,
            _ => return Err(bad()),
        },
        "F" if n == 4 => 11,
        "G" if n == 2 => 6,
        "BC" => return Err(bad()),
        _ => return Err(bad()),
    })
}

/// The three bounds of the distance theorem.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiameterBounds {
    /// Typical distance upper bound `p/2 log_q N + (l(w̃₀)+1) log_q log_q N + 1`.
    pub avg_upper: f64,
    /// Typical distance lower bound `log_q N − (n+1) log_q log_q N − 1`.
    pub avg_lower: f64,
    /// `p log_q N + 2(l(w̃₀)+1) log_q log_q N + 1`.
    pub diameter_upper: f64,
}

impl DiameterBounds {
    pub fn to_json(&self) -> Value {
        json!({
            "avg_upper": clean(self.avg_upper),
            "avg_lower": clean(self.avg_lower),
            "diameter_upper": clean(self.diameter_upper),
        })
    }
}

/// Distance bounds for a quotient with `N` chambers; `N ≥ q²` is required.
pub fn diameter_bounds(p: f64, q: f64, n_chambers: f64, group: &AffineWeyl) -> Result<DiameterBounds> {
    if q <= 1.0 {
        return Err(Error::Domain(format!("q = {q} must exceed 1")));
    }
    if n_chambers < q * q {
        return Err(Error::Domain(format!("N = {n_chambers} < q² = {}", q * q)));
    }
    let log = |x: f64| x.ln() / q.ln();
    let ln = log(n_chambers);
    let lln = log(ln);
    let lw = group.rs.longest_length() as f64;
    let n = group.rank() as f64;
    Ok(DiameterBounds {
        avg_upper: p / 2.0 * ln + (lw + 1.0) * lln + 1.0,
        avg_lower: ln - (n + 1.0) * lln - 1.0,
        diameter_upper: p * ln + 2.0 * (lw + 1.0) * lln + 1.0,
    })
}

pub fn p_json(p: f64) -> Value {
    if p.is_infinite() {
        json!("inf")
    } else {
        json!(clean(p))
    }
}
