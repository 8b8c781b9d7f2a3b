//! The extended Iwahori–Hecke algebra in the T-basis `{h_w}`.
//!
//! Coefficients are [`Laurent`] polynomials in `v_c`, `v_c^2 = u_c`. Products are
//! computed by expanding the right factor into a reduced word and applying
//! `h_w h_s = h_{ws}` (length goes up) or the quadratic relation (length goes down).

pub mod bernstein;
pub mod poincare;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::json;

use crate::error::{Error, Result};
use crate::laurent::{Exps, Laurent, Rational};
use crate::rootsys::{Coweight, FinIdx, RootType};
use crate::weyl::{AffineWeyl, ParamSystem, WeylElement};

/// Finite linear combination `Σ c_w h_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    nvars: usize,
    terms: BTreeMap<WeylElement, Laurent>,
}

impl HeckeElement {
    pub fn zero(nvars: usize) -> Self {
        HeckeElement { nvars, terms: BTreeMap::new() }
    }

    pub fn basis(nvars: usize, w: WeylElement) -> Self {
        Self::term(w, Laurent::one(nvars))
    }

    pub fn term(w: WeylElement, c: Laurent) -> Self {
        let mut h = Self::zero(c.nvars());
        h.add_term(&w, &c);
        h
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylElement, &Laurent)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &WeylElement) -> Laurent {
        self.terms.get(w).cloned().unwrap_or_else(|| Laurent::zero(self.nvars))
    }

    pub fn add_term(&mut self, w: &WeylElement, c: &Laurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(w) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_zero() {
                    self.terms.remove(w);
                }
            }
            None => {
                self.terms.insert(w.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, o: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn sub(&self, o: &HeckeElement) -> HeckeElement {
        self.add(&o.scale(&Laurent::from_int(self.nvars, -1)))
    }

    pub fn scale(&self, c: &Laurent) -> HeckeElement {
        let mut out = HeckeElement::zero(self.nvars);
        for (w, v) in &self.terms {
            out.add_term(w, &(v * c));
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> HeckeElement {
        self.scale(&Laurent::constant(self.nvars, *c))
    }

    /// Coefficients evaluated at numeric parameters.
    pub fn evaluate(&self, q: &[f64]) -> Vec<(WeylElement, f64)> {
        self.terms.iter().map(|(w, c)| (w.clone(), c.eval(q))).collect()
    }
}

/// Algebra context: group plus parameter system.
#[derive(Clone, Debug)]
pub struct Hecke {
    pub group: AffineWeyl,
    pub params: ParamSystem,
}

impl Hecke {
    /// Abstract algebra with the finest parameter classes.
    pub fn abstract_type(t: RootType) -> Hecke {
        let group = AffineWeyl::of_type(t);
        let params = ParamSystem::finest(&group);
        Hecke { group, params }
    }

    pub fn new(group: AffineWeyl, params: ParamSystem) -> Result<Hecke> {
        params.validate(&group)?;
        Ok(Hecke { group, params })
    }

    pub fn nvars(&self) -> usize {
        self.params.nclasses
    }

    pub fn zero(&self) -> HeckeElement {
        HeckeElement::zero(self.nvars())
    }

    pub fn one(&self) -> HeckeElement {
        self.basis(&self.group.identity())
    }

    pub fn scalar(&self, c: Laurent) -> HeckeElement {
        HeckeElement::term(self.group.identity(), c)
    }

    pub fn basis(&self, w: &WeylElement) -> HeckeElement {
        HeckeElement::basis(self.nvars(), w.clone())
    }

    pub fn h_generator(&self, i: usize) -> HeckeElement {
        self.basis(self.group.generator(i))
    }

    pub fn h_omega(&self, k: usize) -> HeckeElement {
        self.basis(&self.group.omegas[k].elem)
    }

    /// `h_w h_s`.
    pub fn mul_generator(&self, h: &HeckeElement, i: usize) -> HeckeElement {
        let u = self.params.u_gen(i);
        let um1 = &u - &self.params.one();
        let s = self.group.generator(i);
        let mut out = self.zero();
        for (w, c) in &h.terms {
            let ws = self.group.multiply(w, s);
            if self.group.length(&ws) > self.group.length(w) {
                out.add_term(&ws, c);
            } else {
                out.add_term(&ws, &(c * &u));
                out.add_term(w, &(c * &um1));
            }
        }
        out
    }

    /// `h_w h_ω = h_{wω}`.
    pub fn mul_omega(&self, h: &HeckeElement, k: usize) -> HeckeElement {
        let o = &self.group.omegas[k].elem;
        let mut out = self.zero();
        for (w, c) in &h.terms {
            out.add_term(&self.group.multiply(w, o), c);
        }
        out
    }

    /// `h · h_w` for a basis element.
    pub fn mul_basis(&self, h: &HeckeElement, w: &WeylElement) -> HeckeElement {
        let rw = self.group.reduced_word(w);
        let mut acc = h.clone();
        for &i in &rw.letters {
            acc = self.mul_generator(&acc, i);
        }
        self.mul_omega(&acc, rw.omega)
    }

    pub fn multiply(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = self.zero();
        for (w, c) in &b.terms {
            let part = self.mul_basis(a, w);
            for (x, d) in &part.terms {
                out.add_term(x, &(d * c));
            }
        }
        out
    }

    /// `h_ω h = h_{ω(·)} h_ω`: left multiplication by `Ω̂` via the twist.
    pub fn omega_mul(&self, k: usize, h: &HeckeElement) -> HeckeElement {
        let o = &self.group.omegas[k].elem;
        let mut out = self.zero();
        for (w, c) in &h.terms {
            out.add_term(&self.group.multiply(o, w), c);
        }
        out
    }

    /// `h_w ↦ h_{w⁻¹}`; coefficients are real so they are unchanged.
    pub fn star(&self, h: &HeckeElement) -> HeckeElement {
        let mut out = self.zero();
        for (w, c) in &h.terms {
            out.add_term(&self.group.inverse(w), c);
        }
        out
    }

    /// `h_s⁻¹ = u⁻¹ h_s − (1 − u⁻¹)`.
    pub fn generator_inverse(&self, i: usize) -> HeckeElement {
        let uinv = self.params.u_gen(i).inverse_monomial().expect("monomial");
        let mut h = self.h_generator(i).scale(&uinv);
        h.add_term(&self.group.identity(), &(&uinv - &self.params.one()));
        h
    }

    /// `h · h_s⁻¹`.
    pub fn mul_generator_inverse(&self, h: &HeckeElement, i: usize) -> HeckeElement {
        let uinv = self.params.u_gen(i).inverse_monomial().expect("monomial");
        let hs = self.mul_generator(h, i).scale(&uinv);
        hs.add(&h.scale(&(&uinv - &self.params.one())))
    }

    /// `h_w⁻¹ = h_{ω⁻¹} h_{s_k}⁻¹ ⋯ h_{s_1}⁻¹` for `w = s_1 ⋯ s_k ω`.
    pub fn basis_inverse(&self, w: &WeylElement) -> HeckeElement {
        let rw = self.group.reduced_word(w);
        let oinv = self.group.inverse(&self.group.omegas[rw.omega].elem);
        let mut acc = self.basis(&oinv);
        for &i in rw.letters.iter().rev() {
            acc = self.mul_generator_inverse(&acc, i);
        }
        acc
    }

    /// `q_β^{1/2}` as the monomial `v^{u-exponents of t_β}`.
    pub fn sqrt_q_translation(&self, beta: &Coweight) -> Exps {
        self.params.u_exponents(&self.group, &WeylElement::translation(beta.clone()))
    }

    /// `X_β = h_{β₁} h_{β₂}⁻¹`.
    pub fn x_beta(&self, beta: &Coweight) -> HeckeElement {
        let (b1, b2) = beta.dominant_split();
        let h1 = self.basis(&WeylElement::translation(b1));
        let h2inv = self.basis_inverse(&WeylElement::translation(b2));
        self.multiply(&h1, &h2inv)
    }

    /// `Y_β = q_{β₁}^{-1/2} q_{β₂}^{1/2} X_β`.
    pub fn y_beta(&self, beta: &Coweight) -> HeckeElement {
        let (b1, b2) = beta.dominant_split();
        let e1 = self.sqrt_q_translation(&b1);
        let e2 = self.sqrt_q_translation(&b2);
        let e: Exps = e1.iter().zip(&e2).map(|(a, b)| b - a).collect();
        self.x_beta(beta).scale(&Laurent::v_pow(e))
    }

    /// `h_x` for `x ∈ W₀`.
    pub fn basis_fin(&self, f: FinIdx) -> HeckeElement {
        self.basis(&WeylElement::finite(self.group.rank(), f))
    }

    /// Each coefficient evaluated at the numeric parameters.
    pub fn evaluate(&self, h: &HeckeElement) -> Result<Vec<(WeylElement, f64)>> {
        let q = self.params.q_f64()?;
        Ok(h.evaluate(&q))
    }

    /// List of `{word, coeff}` in canonical element order.
    pub fn to_json(&self, h: &HeckeElement) -> serde_json::Value {
        serde_json::Value::Array(
            h.terms
                .iter()
                .map(|(w, c)| json!({ "word": self.group.word_string(&self.group.reduced_word(w)), "coeff": c.to_json() }))
                .collect(),
        )
    }

    pub fn from_json(&self, v: &serde_json::Value) -> Result<HeckeElement> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("Hecke element must be a list".into()))?;
        let mut out = self.zero();
        for item in arr {
            let word = item
                .get("word")
                .and_then(|w| w.as_str())
                .ok_or_else(|| Error::Parse("term needs a word string".into()))?;
            let coeff = Laurent::from_json(self.nvars(), item.get("coeff").ok_or_else(|| Error::Parse("term needs coeff".into()))?)?;
            out.add_term(&self.group.from_word(word)?, &coeff);
        }
        Ok(out)
    }

    pub fn display<'a>(&'a self, h: &'a HeckeElement) -> DisplayHecke<'a> {
        DisplayHecke(self, h)
    }
}

pub struct DisplayHecke<'a>(&'a Hecke, &'a HeckeElement);

impl fmt::Display for DisplayHecke<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.1.terms.iter().map(|(w, c)| format!("({c})·h[{}]", self.0.group.label(w))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests;
