//! Finite-dimensional representations of the extended Hecke algebra.
//!
//! A representation is given by matrices for `h_{s_0}, …, h_{s_n}` and for the
//! elements of `Ω̂`. Temperedness is read off from the eigenvalues of the
//! translation operators `h_{β_i}`.

mod builtin;
mod file;

pub use builtin::{builtin_rep, coxeter_one_dim_count, one_dim_reps};
pub use file::{load_rep, parse_rep, rep_to_json};
pub(crate) use file::parse_params;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hecke::{Hecke, HeckeElement};
use crate::laurent::{ratio_to_f64, Rational};
use crate::linalg::{self, CMat, QMat};
use crate::rootsys::Coweight;
use crate::weyl::{AffineWeyl, ParamSystem, WeylElement};

/// Relative tolerance for relation checks and eigenvalue comparisons.
pub const TOL: f64 = 1e-9;

/// A validated representation.
#[derive(Clone, Debug)]
pub struct HeckeRep {
    pub hecke: Hecke,
    pub dim: usize,
    /// `π(h_{s_i})`, `0 ≤ i ≤ n`.
    pub gens: Vec<CMat>,
    /// `π(h_ω)` for every element of `Ω̂`, in the order of `AffineWeyl::omegas`.
    pub omegas: Vec<CMat>,
    /// Whether the relations were verified in exact rational arithmetic.
    pub exact: bool,
}

/// Smallest `p` for which the eigenvalue criterion holds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PMin {
    Finite(f64),
    Infinite,
    /// Some eigenvalue exceeds the trivial one.
    AboveTrivial,
}

impl PMin {
    /// The larger of two values, in the order `Finite < Infinite < AboveTrivial`.
    pub fn max(self, o: PMin) -> PMin {
        match (self, o) {
            (PMin::AboveTrivial, _) | (_, PMin::AboveTrivial) => PMin::AboveTrivial,
            (PMin::Infinite, _) | (_, PMin::Infinite) => PMin::Infinite,
            (PMin::Finite(x), PMin::Finite(y)) => PMin::Finite(x.max(y)),
        }
    }

    pub fn at_most(&self, p: f64) -> bool {
        match self {
            PMin::Finite(x) => *x <= p * (1.0 + TOL),
            PMin::Infinite => p.is_infinite(),
            PMin::AboveTrivial => false,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            PMin::Finite(x) => json!(clean(*x)),
            PMin::Infinite => json!("inf"),
            PMin::AboveTrivial => json!("above-trivial"),
        }
    }
}

/// Smallest `p ≥ 1` with `|λ| ≤ q^{(p−1)/p}` for all given eigenvalues.
pub fn p_min_of(eigs: &[Complex64], q: f64) -> PMin {
    let mut worst = PMin::Finite(1.0);
    for z in eigs {
        let a = z.norm();
        let c = if a <= 1.0 + TOL {
            PMin::Finite(1.0)
        } else if a > q * (1.0 + TOL) {
            PMin::AboveTrivial
        } else if a >= q * (1.0 - TOL) {
            PMin::Infinite
        } else {
            PMin::Finite(q.ln() / (q.ln() - a.ln()))
        };
        worst = worst.max(c);
    }
    worst
}

/// Characteristic polynomials `det(1 − M_{β_i} t)` and the induced poles.
#[derive(Clone, Debug)]
pub struct ZetaData {
    /// Coefficients, constant term first.
    pub char_polys: Vec<Vec<Complex64>>,
    pub eigenvalues: Vec<Vec<Complex64>>,
    /// `l(β_i)`.
    pub lengths: Vec<usize>,
    /// `|u|` at the poles of `ζ₁`: with `t = u^{l(β_i)}`, `|u| = |λ|^{-1/l(β_i)}`.
    pub pole_moduli: Vec<Vec<f64>>,
}

/// One row of the growth report.
#[derive(Clone, Debug)]
pub struct GrowthRow {
    pub length: usize,
    pub max_ratio: f64,
    pub envelope: f64,
    pub violation: bool,
}

/// Rounds away floating noise so reports are stable.
pub fn clean(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn complex_json(z: &Complex64) -> Value {
    json!([clean(z.re), clean(z.im)])
}

fn residual_ok(res: f64, scale: f64) -> bool {
    res <= TOL * scale.max(1.0)
}

impl HeckeRep {
    /// Builds and validates a representation. `omega_given` lists `(Ω̂ index, matrix)`
    /// for any generating subset; the remaining elements are filled in by products.
    pub fn new(
        group: AffineWeyl,
        params: ParamSystem,
        gens: Vec<CMat>,
        omega_given: Vec<(usize, CMat)>,
        exact: Option<(Vec<QMat>, Vec<(usize, QMat)>)>,
    ) -> Result<HeckeRep> {
        if params.q.is_none() {
            return Err(Error::Config("a representation needs numeric parameters".into()));
        }
        let hecke = Hecke::new(group, params)?;
        let g = &hecke.group;
        if gens.len() != g.num_generators() {
            return Err(Error::Validation(format!("expected {} generator matrices", g.num_generators())));
        }
        let dim = gens[0].nrows();
        if dim == 0 {
            return Err(Error::Validation("dimension must be positive".into()));
        }
        for (k, m) in gens.iter().chain(omega_given.iter().map(|(_, m)| m)).enumerate() {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::Validation(format!("matrix {k} is not {dim}×{dim}")));
            }
        }
        let omegas = close_omegas(g, &omega_given, |a, b| a * b, CMat::identity(dim, dim))?;
        let rep = HeckeRep { hecke, dim, gens, omegas, exact: exact.is_some() };
        match exact {
            Some((qg, qo)) => {
                let qomegas = close_omegas(&rep.hecke.group, &qo, linalg::q_mul, linalg::q_identity(dim))?;
                rep.check_exact(&qg, &qomegas)?;
            }
            None => rep.check_float()?,
        }
        Ok(rep)
    }

    pub fn group(&self) -> &AffineWeyl {
        &self.hecke.group
    }

    pub fn params(&self) -> &ParamSystem {
        &self.hecke.params
    }

    fn q_gen(&self, i: usize) -> f64 {
        self.params().q_of_generator(i).expect("numeric parameters")
    }

    fn check_float(&self) -> Result<()> {
        let g = self.group();
        let id = CMat::identity(self.dim, self.dim);
        for (i, m) in self.gens.iter().enumerate() {
            let q = Complex64::new(self.q_gen(i), 0.0);
            let lhs = m * m;
            let rhs = &id * q + m * (q - 1.0);
            let res = linalg::frobenius(&(&lhs - &rhs));
            if !residual_ok(res, linalg::frobenius(&rhs)) {
                return Err(Error::Validation(format!("quadratic relation for s{i} fails: residual {res:.3e}")));
            }
        }
        for i in 0..self.gens.len() {
            for j in i + 1..self.gens.len() {
                if let Some(m) = g.coxeter_m(i, j) {
                    let (a, b) = (self.braid_product(i, j, m), self.braid_product(j, i, m));
                    let res = linalg::frobenius(&(&a - &b));
                    if !residual_ok(res, linalg::frobenius(&a)) {
                        return Err(Error::Validation(format!(
                            "braid relation (s{i} s{j})^{m} fails: residual {res:.3e}"
                        )));
                    }
                }
            }
        }
        for (k, o) in g.omegas.iter().enumerate() {
            for (k2, o2) in g.omegas.iter().enumerate() {
                let prod = g.omega_index(&g.multiply(&o.elem, &o2.elem)).expect("Ω̂ is a group");
                let res = linalg::frobenius(&(&self.omegas[k] * &self.omegas[k2] - &self.omegas[prod]));
                if !residual_ok(res, linalg::frobenius(&self.omegas[prod])) {
                    return Err(Error::Validation(format!(
                        "product relation {}·{} = {} fails: residual {res:.3e}",
                        o.name, o2.name, g.omegas[prod].name
                    )));
                }
            }
            for i in 0..self.gens.len() {
                let a = &self.omegas[k] * &self.gens[i];
                let b = &self.gens[o.perm[i]] * &self.omegas[k];
                let res = linalg::frobenius(&(&a - &b));
                if !residual_ok(res, linalg::frobenius(&a)) {
                    return Err(Error::Validation(format!(
                        "twist relation {} s{i} = s{} {} fails: residual {res:.3e}",
                        o.name, o.perm[i], o.name
                    )));
                }
            }
        }
        Ok(())
    }

    fn check_exact(&self, gens: &[QMat], omegas: &[QMat]) -> Result<()> {
        let g = self.group();
        let q = self.params().q.clone().expect("numeric parameters");
        let id = linalg::q_identity(self.dim);
        let one = Rational::from_integer(1);
        let fail = |what: String, a: &QMat, b: &QMat| -> Error {
            let res = linalg::frobenius(&(linalg::q_to_c(a) - linalg::q_to_c(b)));
            Error::Validation(format!("{what} fails: residual {res:.3e}"))
        };
        for (i, m) in gens.iter().enumerate() {
            let qs = q[self.params().class_of[i]];
            let lhs = linalg::q_mul(m, m);
            let rhs = linalg::q_lin(&id, qs, m, qs - one);
            if lhs != rhs {
                return Err(fail(format!("quadratic relation for s{i}"), &lhs, &rhs));
            }
        }
        let braid = |i: usize, j: usize, m: usize| {
            (0..m).fold(id.clone(), |acc, k| linalg::q_mul(&acc, &gens[if k % 2 == 0 { i } else { j }]))
        };
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if let Some(m) = g.coxeter_m(i, j) {
                    let (a, b) = (braid(i, j, m), braid(j, i, m));
                    if a != b {
                        return Err(fail(format!("braid relation (s{i} s{j})^{m}"), &a, &b));
                    }
                }
            }
        }
        for (k, o) in g.omegas.iter().enumerate() {
            for (k2, o2) in g.omegas.iter().enumerate() {
                let prod = g.omega_index(&g.multiply(&o.elem, &o2.elem)).expect("Ω̂ is a group");
                let a = linalg::q_mul(&omegas[k], &omegas[k2]);
                if a != omegas[prod] {
                    return Err(fail(format!("product relation {}·{}", o.name, o2.name), &a, &omegas[prod]));
                }
            }
            for i in 0..gens.len() {
                let a = linalg::q_mul(&omegas[k], &gens[i]);
                let b = linalg::q_mul(&gens[o.perm[i]], &omegas[k]);
                if a != b {
                    return Err(fail(format!("twist relation {} s{i}", o.name), &a, &b));
                }
            }
        }
        Ok(())
    }

    fn braid_product(&self, i: usize, j: usize, m: usize) -> CMat {
        (0..m).fold(CMat::identity(self.dim, self.dim), |acc, k| acc * &self.gens[if k % 2 == 0 { i } else { j }])
    }

    /// `π(h_w)` from a reduced word.
    pub fn evaluate(&self, w: &WeylElement) -> CMat {
        let rw = self.group().reduced_word(w);
        let mut m = CMat::identity(self.dim, self.dim);
        for &i in &rw.letters {
            m *= &self.gens[i];
        }
        m * &self.omegas[rw.omega]
    }

    /// `π(h)` for a Hecke algebra element, at the numeric parameters.
    pub fn evaluate_element(&self, h: &HeckeElement) -> CMat {
        let q = self.params().q_f64().expect("numeric parameters");
        let mut out = CMat::zeros(self.dim, self.dim);
        for (w, c) in h.terms() {
            out += self.evaluate(w) * Complex64::new(c.eval(&q), 0.0);
        }
        out
    }

    /// `M_s` Hermitian and `M_ω^† = M_{ω⁻¹}`.
    pub fn is_unitary(&self) -> bool {
        let g = self.group();
        let herm = self.gens.iter().all(|m| {
            let r = linalg::frobenius(&(m - m.adjoint()));
            residual_ok(r, linalg::frobenius(m))
        });
        let unit = g.omegas.iter().enumerate().all(|(k, o)| {
            let inv = g.omega_index(&g.inverse(&o.elem)).expect("Ω̂ is a group");
            let r = linalg::frobenius(&(self.omegas[k].adjoint() - &self.omegas[inv]));
            residual_ok(r, 1.0)
        });
        herm && unit
    }

    pub fn beta_element(&self, i: usize) -> WeylElement {
        WeylElement::translation(Coweight::basis(self.group().rank(), i))
    }

    /// `π(h_{β_i})`.
    pub fn beta_matrix(&self, i: usize) -> CMat {
        self.evaluate(&self.beta_element(i))
    }

    /// `q_{β_i}`.
    pub fn q_beta(&self, i: usize) -> f64 {
        self.params().q_w_value(self.group(), &self.beta_element(i)).expect("numeric parameters")
    }

    /// Eigenvalues of every `π(h_{β_i})`.
    pub fn beta_eigenvalues(&self) -> Vec<Vec<Complex64>> {
        (0..self.group().rank()).map(|i| linalg::eigenvalues(&self.beta_matrix(i))).collect()
    }

    /// Smallest `p` with `|λ| ≤ q_{β_i}^{(p−1)/p}` for every eigenvalue of every `h_{β_i}`.
    pub fn p_min(&self) -> Result<PMin> {
        let mut worst = PMin::Finite(1.0);
        for (i, eigs) in self.beta_eigenvalues().iter().enumerate() {
            let q = self.q_beta(i);
            if (q - 1.0).abs() < TOL {
                return Err(Error::Unsupported("p_min is undefined for thin parameters q_β = 1".into()));
            }
            worst = worst.max(p_min_of(eigs, q));
        }
        Ok(worst)
    }

    pub fn zeta(&self) -> ZetaData {
        let g = self.group();
        let eigenvalues = self.beta_eigenvalues();
        let lengths: Vec<usize> = (0..g.rank()).map(|i| g.length(&self.beta_element(i))).collect();
        let char_polys = eigenvalues.iter().map(|e| linalg::char_poly_from_eigs(e)).collect();
        let pole_moduli = eigenvalues
            .iter()
            .zip(&lengths)
            .map(|(e, &l)| {
                e.iter().filter(|z| z.norm() > TOL).map(|z| clean(z.norm().powf(-1.0 / l as f64))).collect()
            })
            .collect();
        ZetaData { char_polys, eigenvalues, lengths, pole_moduli }
    }

    /// Every eigenvalue `μ` of `h_{β_i}` has `|μ| ≤ q_{β_i}^{(p−1)/p}` or `|μ| = q_{β_i}`.
    pub fn rh_check(&self, p: f64) -> bool {
        self.beta_eigenvalues().iter().enumerate().all(|(i, eigs)| {
            let q = self.q_beta(i);
            let bound = if p.is_infinite() { q } else { q.powf((p - 1.0) / p) };
            eigs.iter().all(|z| {
                let a = z.norm();
                a <= bound * (1.0 + TOL) || (a - q).abs() <= TOL * q
            })
        })
    }

    /// `max_{l(w) = l} |⟨v*, π(h_w) v⟩| q_w^{(1−p)/p}` for `l ≤ L`; rows with
    /// `l ≥ onset` whose ratio exceeds `(1+δ)^l` are flagged.
    pub fn tempered_growth_check(
        &self,
        v: &[Complex64],
        vstar: &[Complex64],
        max_len: usize,
        p: f64,
        delta: f64,
        onset: usize,
    ) -> Result<Vec<GrowthRow>> {
        if v.len() != self.dim || vstar.len() != self.dim {
            return Err(Error::Usage(format!("vectors must have length {}", self.dim)));
        }
        let g = self.group();
        let vv = nalgebra::DVector::from_column_slice(v);
        let vs = nalgebra::DVector::from_column_slice(vstar);
        let mut best = vec![0.0f64; max_len + 1];
        for (w, l) in g.enumerate_ball(max_len)? {
            let coeff = vs.dotc(&(self.evaluate(&w) * &vv)).norm();
            let qw = self.params().q_w_value(g, &w)?;
            let r = if p.is_infinite() { coeff / qw } else { coeff * qw.powf((1.0 - p) / p) };
            best[l] = best[l].max(r);
        }
        Ok(best
            .into_iter()
            .enumerate()
            .map(|(l, r)| {
                let envelope = (1.0 + delta).powi(l as i32);
                GrowthRow { length: l, max_ratio: r, envelope, violation: l >= onset && r > envelope * (1.0 + TOL) }
            })
            .collect())
    }

    /// Eigenvalues, `p_min` and the RH verdict at `p` as a report.
    pub fn tempered_report(&self, p: f64) -> Result<Value> {
        let eigs = self.beta_eigenvalues();
        let rows: Vec<Value> = eigs
            .iter()
            .enumerate()
            .map(|(i, e)| {
                json!({
                    "beta": i + 1,
                    "q_beta": clean(self.q_beta(i)),
                    "eigenvalues": e.iter().map(complex_json).collect::<Vec<_>>(),
                    "moduli": e.iter().map(|z| clean(z.norm())).collect::<Vec<_>>(),
                })
            })
            .collect();
        let pmin = self.p_min();
        Ok(json!({
            "type": self.group().rs.name(),
            "dim": self.dim,
            "unitary": self.is_unitary(),
            "translations": rows,
            "p_min": match &pmin { Ok(x) => x.to_json(), Err(e) => json!(e.to_string()) },
            "p": if p.is_infinite() { json!("inf") } else { json!(p) },
            "rh": self.rh_check(p),
        }))
    }

    pub fn zeta_report(&self) -> Value {
        let z = self.zeta();
        json!({
            "type": self.group().rs.name(),
            "factors": (0..z.lengths.len()).map(|i| json!({
                "beta": i + 1,
                "length": z.lengths[i],
                "char_poly": z.char_polys[i].iter().map(complex_json).collect::<Vec<_>>(),
                "eigenvalues": z.eigenvalues[i].iter().map(complex_json).collect::<Vec<_>>(),
                "pole_moduli": z.pole_moduli[i],
            })).collect::<Vec<_>>(),
        })
    }

    /// Dense `π(h_s)` as real matrices, when they are real.
    pub fn real_gen(&self, i: usize) -> Option<DMatrix<f64>> {
        let m = &self.gens[i];
        m.iter().all(|z| z.im.abs() < TOL).then(|| m.map(|z| z.re))
    }

    pub fn q_values(&self) -> Vec<f64> {
        self.params().q.as_ref().map(|q| q.iter().map(ratio_to_f64).collect()).unwrap_or_default()
    }
}

/// Fills `Ω̂` from a generating subset by closing under products.
pub(crate) fn close_omegas<M: Clone>(
    g: &AffineWeyl,
    given: &[(usize, M)],
    mul: impl Fn(&M, &M) -> M,
    identity: M,
) -> Result<Vec<M>> {
    let k = g.omegas.len();
    let mut out: Vec<Option<M>> = vec![None; k];
    out[0] = Some(identity);
    for (idx, m) in given {
        if *idx >= k {
            return Err(Error::Validation(format!("Ω̂ index {idx} out of range")));
        }
        if *idx != 0 {
            out[*idx] = Some(m.clone());
        }
    }
    loop {
        let mut changed = false;
        for a in 0..k {
            for (b, mb) in given {
                let p = g.omega_index(&g.multiply(&g.omegas[a].elem, &g.omegas[*b].elem)).expect("Ω̂ is a group");
                if out[p].is_none() {
                    if let Some(ma) = &out[a] {
                        out[p] = Some(mul(ma, mb));
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(i, m)| m.ok_or_else(|| Error::Validation(format!("no matrix for {}", g.omegas[i].name))))
        .collect()
}

#[cfg(test)]
mod tests;
