//! Finite chamber systems and the action of the Hecke algebra on them.
//!
//! A [`ChamberComplex`] stores, for every generator `s`, a partition of the
//! chambers into `s`-panels of size `q_s + 1`, and optionally the permutation
//! of chambers induced by each element of `Ω̂`. Hecke operators act on
//! functions on chambers by
//! `h_s f(C) = Σ f(D)` over the other chambers `D` of the `s`-panel of `C` and
//! `h_ω f(C) = f(Cω)`.
//!
//! Rank-1 quotients (graphs) live in [`graph`], the truncated tree in [`tree`].

pub mod graph;
mod sparse;
pub mod tree;

#[cfg(test)]
mod tests;

pub use graph::{Graph, GraphMode};
pub use sparse::SparseOp;
pub use tree::TreeBall;

use std::path::Path;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::One;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::laurent::{format_ratio, Rational};
use crate::linalg;
use crate::rootsys::{Coweight, FinIdx};
use crate::weyl::{AffineWeyl, ParamSystem, WeylElement};

/// A validated finite chamber system with integer parameters.
#[derive(Clone, Debug)]
pub struct ChamberComplex {
    pub group: AffineWeyl,
    pub params: ParamSystem,
    pub n_chambers: usize,
    /// `panels[i]` partitions the chambers into `s_i`-panels.
    pub panels: Vec<Vec<Vec<usize>>>,
    /// `panel_of[i][c]`: index of the `s_i`-panel containing `c`.
    pub panel_of: Vec<Vec<usize>>,
    /// `omega[k][c] = c·ω_k` for every element of `Ω̂`, if given.
    pub omega: Option<Vec<Vec<usize>>>,
    /// Set when the complex was built from a graph.
    pub graph: Option<Graph>,
    /// Orthonormal-up-to-scale spanning vectors of the trivial subrepresentation.
    trivial: Vec<Vec<f64>>,
}

impl ChamberComplex {
    /// Builds and validates a complex. `omega` may list any generating subset
    /// of `Ω̂` as `(index, permutation)`.
    pub fn new(
        group: AffineWeyl,
        params: ParamSystem,
        n_chambers: usize,
        panels: Vec<Vec<Vec<usize>>>,
        omega: Option<Vec<(usize, Vec<usize>)>>,
    ) -> Result<ChamberComplex> {
        params.validate(&group)?;
        let q = params
            .q_int()
            .filter(|q| q.iter().all(|&x| x >= 1))
            .ok_or_else(|| Error::Config("chamber systems need positive integer parameters".into()))?;
        if panels.len() != group.num_generators() {
            return Err(Error::Validation(format!("expected panels for {} generators", group.num_generators())));
        }
        let mut panel_of = vec![];
        for (i, blocks) in panels.iter().enumerate() {
            let size = q[params.class_of[i]] as usize + 1;
            let mut of = vec![usize::MAX; n_chambers];
            for (b, block) in blocks.iter().enumerate() {
                if block.len() != size {
                    return Err(Error::Validation(format!(
                        "s{i}: block {b} has {} chambers, expected q+1 = {size}",
                        block.len()
                    )));
                }
                for &c in block {
                    if c >= n_chambers {
                        return Err(Error::Validation(format!("s{i}: chamber {c} out of range")));
                    }
                    if of[c] != usize::MAX {
                        return Err(Error::Validation(format!("s{i}: chamber {c} lies in two blocks")));
                    }
                    of[c] = b;
                }
            }
            if let Some(c) = of.iter().position(|&b| b == usize::MAX) {
                return Err(Error::Validation(format!("s{i}: chamber {c} lies in no block")));
            }
            panel_of.push(of);
        }
        let omega = match omega {
            None => None,
            Some(given) => {
                for (k, p) in &given {
                    let mut seen = vec![false; n_chambers];
                    if p.len() != n_chambers || p.iter().any(|&x| x >= n_chambers || std::mem::replace(&mut seen[x], true))
                    {
                        return Err(Error::Validation(format!("{}: not a permutation of the chambers", group.omegas[*k].name)));
                    }
                }
                let ident: Vec<usize> = (0..n_chambers).collect();
                Some(crate::reps::close_omegas(&group, &given, |a, b| compose(a, b), ident)?)
            }
        };
        let mut x = ChamberComplex { group, params, n_chambers, panels, panel_of, omega, graph: None, trivial: vec![] };
        x.trivial = vec![vec![1.0; n_chambers]];
        x.check_relations()?;
        Ok(x)
    }

    pub(crate) fn set_graph(&mut self, g: Graph, trivial: Vec<Vec<f64>>) {
        self.graph = Some(g);
        self.trivial = trivial;
    }

    pub fn q_int(&self) -> Vec<i64> {
        self.params.q_int().expect("validated integer parameters")
    }

    /// `h_{s_i}` as a 0/1 matrix.
    pub fn generator_op(&self, i: usize) -> SparseOp {
        let rows = (0..self.n_chambers)
            .map(|c| {
                self.panels[i][self.panel_of[i][c]]
                    .iter()
                    .filter(|&&d| d != c)
                    .map(|&d| (d, Rational::one()))
                    .collect()
            })
            .collect();
        SparseOp::from_rows(self.n_chambers, rows, format!("h_s{i}"))
    }

    /// `h_ω` for the `k`-th element of `Ω̂`.
    pub fn omega_op(&self, k: usize) -> Result<SparseOp> {
        if k == 0 {
            return Ok(SparseOp::identity(self.n_chambers));
        }
        let perms = self
            .omega
            .as_ref()
            .ok_or_else(|| Error::Usage("this complex has no Ω̂ action".into()))?;
        let rows = perms[k].iter().map(|&d| vec![(d, Rational::one())]).collect();
        Ok(SparseOp::from_rows(self.n_chambers, rows, format!("h_{}", self.group.omegas[k].name)))
    }

    /// `h_w` via a reduced word.
    pub fn basis_op(&self, w: &WeylElement) -> Result<SparseOp> {
        let rw = self.group.reduced_word(w);
        let mut m = self.omega_op(rw.omega)?;
        for &i in rw.letters.iter().rev() {
            m = self.generator_op(i).mul(&m);
        }
        Ok(m.with_label(self.group.label(w)))
    }

    /// Matrix of a Hecke element; coefficients must be rational at the integer parameters.
    pub fn operator_matrix(&self, h: &HeckeElement) -> Result<SparseOp> {
        let q = self.q_int();
        let mut out = SparseOp::zero(self.n_chambers);
        for (w, c) in h.terms() {
            let v = c.eval_exact(&q).ok_or_else(|| {
                Error::Domain(format!("coefficient of {} is irrational at these parameters", self.group.label(w)))
            })?;
            out = out.add(&self.basis_op(w)?.scale(v));
        }
        Ok(out.with_label(h_label(&self.group, h)))
    }

    /// Dense real matrix of a Hecke element, allowing half-integer powers of `q`.
    pub fn operator_dense(&self, h: &HeckeElement) -> Result<DMatrix<f64>> {
        let q = self.params.q_f64()?;
        let mut out = DMatrix::zeros(self.n_chambers, self.n_chambers);
        for (w, c) in h.terms() {
            out += self.basis_op(w)?.to_dense() * c.eval(&q);
        }
        Ok(out)
    }

    /// Checks the quadratic, braid and `Ω̂` relations in exact arithmetic.
    pub fn check_relations(&self) -> Result<()> {
        let g = &self.group;
        let q = self.q_int();
        let k = g.num_generators();
        let gens: Vec<SparseOp> = (0..k).map(|i| self.generator_op(i)).collect();
        let id = SparseOp::identity(self.n_chambers);
        for (i, h) in gens.iter().enumerate() {
            let qs = Rational::from_integer(q[self.params.class_of[i]] as i128);
            let lhs = h.mul(h);
            let rhs = id.scale(qs).add(&h.scale(qs - Rational::one()));
            if !lhs.same(&rhs) {
                return Err(Error::Validation(format!(
                    "quadratic relation for s{i} fails: residual {:.3e}",
                    lhs.residual(&rhs)
                )));
            }
        }
        for i in 0..k {
            for j in i + 1..k {
                let Some(m) = g.coxeter_m(i, j) else { continue };
                let word = |a: usize, b: usize| {
                    let mut p = SparseOp::identity(self.n_chambers);
                    for t in 0..m {
                        p = p.mul(&gens[if t % 2 == 0 { a } else { b }]);
                    }
                    p
                };
                let (l, r) = (word(i, j), word(j, i));
                if !l.same(&r) {
                    return Err(Error::Validation(format!(
                        "braid relation for s{i}, s{j} fails: residual {:.3e}",
                        l.residual(&r)
                    )));
                }
            }
        }
        if let Some(perms) = &self.omega {
            let n = g.omegas.len();
            for a in 0..n {
                for b in 0..n {
                    let ab = g.omega_index(&g.multiply(&g.omegas[a].elem, &g.omegas[b].elem)).expect("Ω̂ is a group");
                    if compose(&perms[a], &perms[b]) != perms[ab] {
                        return Err(Error::Validation(format!(
                            "Ω̂ product {}·{} is not realized",
                            g.omegas[a].name, g.omegas[b].name
                        )));
                    }
                }
                let w = self.omega_op(a)?;
                let winv = w.transpose();
                for (i, h) in gens.iter().enumerate() {
                    let lhs = w.mul(h).mul(&winv);
                    let rhs = &gens[g.omegas[a].perm[i]];
                    if !lhs.same(rhs) {
                        return Err(Error::Validation(format!(
                            "twist relation for {} and s{i} fails: residual {:.3e}",
                            g.omegas[a].name,
                            lhs.residual(rhs)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Spanning vectors of the trivial subrepresentation.
    pub fn trivial_vectors(&self) -> &[Vec<f64>] {
        &self.trivial
    }

    /// Orthonormal basis of the complement of the trivial subspace, as columns.
    pub fn nontrivial_basis(&self) -> DMatrix<f64> {
        let n = self.n_chambers;
        let mut basis: Vec<Vec<f64>> = vec![];
        let push = |v: Vec<f64>, basis: &mut Vec<Vec<f64>>| -> bool {
            let mut v = v;
            for _ in 0..2 {
                for b in basis.iter() {
                    let d: f64 = v.iter().zip(b).map(|(x, y)| x * y).sum();
                    v.iter_mut().zip(b).for_each(|(x, y)| *x -= d * y);
                }
            }
            let nrm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if nrm > 1e-8 {
                basis.push(v.into_iter().map(|x| x / nrm).collect());
                true
            } else {
                false
            }
        };
        for t in &self.trivial {
            push(t.clone(), &mut basis);
        }
        let k = basis.len();
        for i in 0..n {
            if basis.len() == n {
                break;
            }
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            push(e, &mut basis);
        }
        DMatrix::from_fn(n, n - k, |i, j| basis[k + j][i])
    }

    /// Spectrum of `h` on the orthogonal complement of the trivial subrepresentation.
    pub fn nontrivial_spectrum(&self, h: &HeckeElement) -> Result<Vec<Complex64>> {
        let m = self.operator_dense(h)?;
        Ok(self.restricted_spectrum(&m))
    }

    pub(crate) fn restricted_spectrum(&self, m: &DMatrix<f64>) -> Vec<Complex64> {
        let q = self.nontrivial_basis();
        let r = q.transpose() * m * &q;
        linalg::eigenvalues_real(&r)
    }

    /// Serializes to the chamber-system file format.
    pub fn to_json(&self) -> Value {
        let mut q = Map::new();
        for (c, v) in self.params.q.as_ref().expect("numeric").iter().enumerate() {
            q.insert(self.params.class_name(c), json!(format_ratio(v)));
        }
        let mut panels = Map::new();
        for (i, b) in self.panels.iter().enumerate() {
            panels.insert(format!("s{i}"), json!(b));
        }
        let mut out = json!({
            "type": self.group.rs.name(),
            "q": q,
            "chambers": self.n_chambers,
            "panels": panels,
        });
        if let Some(perms) = &self.omega {
            let om: Map<String, Value> =
                self.group.omegas.iter().zip(perms).skip(1).map(|(o, p)| (o.name.clone(), json!(p))).collect();
            out["omega"] = Value::Object(om);
        }
        out
    }
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // c·(ab) = (c·a)·b
    a.iter().map(|&x| b[x]).collect()
}

fn h_label(g: &AffineWeyl, h: &HeckeElement) -> String {
    let parts: Vec<String> = h.terms().map(|(w, _)| g.label(w)).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

/// Parses the chamber-system format `{type, q, chambers, panels, omega?}`.
pub fn parse_chamber_system(text: &str) -> Result<ChamberComplex> {
    let v: Value = serde_json::from_str(text)?;
    let t = v.get("type").and_then(Value::as_str).ok_or_else(|| Error::Parse("chamber system needs type".into()))?;
    let group = AffineWeyl::load(t)?;
    let params = crate::reps::parse_params(&group, v.get("q"))?;
    let n = v.get("chambers").and_then(Value::as_u64).ok_or_else(|| Error::Parse("chamber system needs chambers".into()))?
        as usize;
    let pv = v.get("panels").and_then(Value::as_object).ok_or_else(|| Error::Parse("chamber system needs panels".into()))?;
    let ids = |x: &Value, what: &str| -> Result<Vec<usize>> {
        x.as_array()
            .ok_or_else(|| Error::Parse(format!("{what}: expected a list")))?
            .iter()
            .map(|c| c.as_u64().map(|c| c as usize).ok_or_else(|| Error::Parse(format!("{what}: bad chamber id"))))
            .collect()
    };
    let mut panels = vec![];
    for i in 0..group.num_generators() {
        let key = format!("s{i}");
        let blocks = pv.get(&key).and_then(Value::as_array).ok_or_else(|| Error::Parse(format!("missing panels for {key}")))?;
        panels.push(blocks.iter().map(|b| ids(b, &key)).collect::<Result<Vec<_>>>()?);
    }
    if let Some(extra) = pv.keys().find(|k| k.strip_prefix('s').and_then(|r| r.parse::<usize>().ok()).is_none_or(|i| i >= group.num_generators())) {
        return Err(Error::Parse(format!("unknown panel color {extra}")));
    }
    let omega = match v.get("omega") {
        None | Some(Value::Null) => None,
        Some(o) => {
            let o = o.as_object().ok_or_else(|| Error::Parse("omega must be an object".into()))?;
            let mut given = vec![];
            for (name, p) in o {
                let k = group.omega_by_name(name).ok_or_else(|| Error::Parse(format!("unknown Ω̂ element {name}")))?;
                given.push((k, ids(p, name)?));
            }
            Some(given)
        }
    };
    ChamberComplex::new(group, params, n, panels, omega)
}

pub fn load_chamber_system(path: &Path) -> Result<ChamberComplex> {
    parse_chamber_system(&std::fs::read_to_string(path)?)
}

/// The thin complex `kP \ Ŵ`: the Coxeter complex modulo the translations by `kP`.
/// Chambers are pairs `(β mod k, F)`; `Ω̂` acts by right multiplication.
pub fn thin_torus(group: &AffineWeyl, k: i64) -> Result<ChamberComplex> {
    if k < 2 {
        return Err(Error::Usage("torus modulus must be at least 2".into()));
    }
    let n = group.rank();
    let order = group.rs.weyl0.order();
    let cells = (k as usize).checked_pow(n as u32).filter(|c| c * order <= 200_000).ok_or_else(|| {
        Error::Resource(format!("torus with modulus {k} is too large"))
    })?;
    let index = |w: &WeylElement| -> usize {
        let mut b = 0usize;
        for x in w.beta.0.iter().rev() {
            b = b * k as usize + x.rem_euclid(k) as usize;
        }
        b * order + w.fin
    };
    let elem = |c: usize| -> WeylElement {
        let (mut b, fin): (usize, FinIdx) = (c / order, c % order);
        let mut beta = vec![0i64; n];
        for x in beta.iter_mut() {
            *x = (b % k as usize) as i64;
            b /= k as usize;
        }
        WeylElement { beta: Coweight(beta), fin }
    };
    let total = cells * order;
    let right = |c: usize, s: &WeylElement| index(&group.multiply(&elem(c), s));
    let mut panels = vec![];
    for i in 0..group.num_generators() {
        let s = group.generator(i).clone();
        let mut blocks = vec![];
        let mut seen = vec![false; total];
        for c in 0..total {
            if !seen[c] {
                let d = right(c, &s);
                seen[c] = true;
                seen[d] = true;
                blocks.push(vec![c, d]);
            }
        }
        panels.push(blocks);
    }
    let omega: Vec<(usize, Vec<usize>)> =
        (1..group.omegas.len()).map(|o| (o, (0..total).map(|c| right(c, &group.omegas[o].elem)).collect())).collect();
    let mut params = ParamSystem::finest(group);
    params.q = Some(vec![Rational::one(); params.nclasses]);
    ChamberComplex::new(group.clone(), params, total, panels, Some(omega))
}

/// Weighted sum `Σ c_w h_w` as a Hecke element over a complex's parameters.
pub fn combination(x: &ChamberComplex, terms: &[(WeylElement, Rational)]) -> HeckeElement {
    let mut h = HeckeElement::zero(x.params.nclasses);
    for (w, c) in terms {
        h.add_term(w, &crate::laurent::Laurent::constant(x.params.nclasses, *c));
    }
    h
}

/// Checks that `h` is self-adjoint with non-negative coefficients at the complex's parameters.
pub fn check_random_walk(group: &AffineWeyl, params: &ParamSystem, h: &HeckeElement) -> Result<()> {
    let q = params.q_f64()?;
    for (w, c) in h.terms() {
        if c.eval(&q) < 0.0 {
            return Err(Error::Usage(format!("coefficient of {} is negative", group.label(w))));
        }
        let winv = group.inverse(w);
        let d = h.coeff(&winv);
        if (d.eval(&q) - c.eval(&q)).abs() > 1e-12 * c.eval(&q).abs().max(1.0) {
            return Err(Error::Usage(format!(
                "operator is not self-adjoint: coefficients of {} and {} differ",
                group.label(w),
                group.label(&winv)
            )));
        }
    }
    if h.is_zero() {
        return Err(Error::Usage("operator is zero".into()));
    }
    Ok(())
}
