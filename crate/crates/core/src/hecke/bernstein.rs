//! Bernstein presentation: the elements `Y_β`, the commutation relations with
//! `h_{s_i}`, coefficient tables for `Y_β h_{w₀}` and `Y_β h_{w₀}⁻¹`, and
//! conversion between the T-basis and the basis `{Y_β h_{w₀}}`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use super::{Hecke, HeckeElement};
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::rootsys::{Coweight, FinIdx};
use crate::weyl::WeylElement;

/// `Σ c_β Y_β`.
pub type YForm = BTreeMap<Coweight, Laurent>;

/// `Σ c Y_β h_{w₀}` keyed by `(w₀, β)`.
pub type BernsteinForm = BTreeMap<(FinIdx, Coweight), Laurent>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `Y_β h_{w₀} = Σ α h_{w₀′} Y_{β′}`.
    Unprimed,
    /// `Y_β h_{w₀}⁻¹ = Σ α′ h_{w₀′}⁻¹ Y_{β′}`.
    Primed,
}

/// Coefficients `α_{w₀′, w₀, β′, β}` for fixed `(w₀, β)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BernsteinTable {
    pub w0: FinIdx,
    pub beta: Coweight,
    pub variant: Variant,
    /// Keyed by `(w₀′, β′)`.
    pub entries: BTreeMap<(FinIdx, Coweight), Laurent>,
}

/// One row of the coefficient-bound check.
#[derive(Clone, Debug)]
pub struct BoundRow {
    pub w0_prime: FinIdx,
    pub sum_abs: f64,
    pub bound: f64,
}

fn add_to<K: Ord + Clone>(m: &mut BTreeMap<K, Laurent>, k: &K, c: &Laurent) {
    if c.is_zero() {
        return;
    }
    match m.get_mut(k) {
        Some(v) => {
            v.add_assign_ref(c);
            if v.is_zero() {
                m.remove(k);
            }
        }
        None => {
            m.insert(k.clone(), c.clone());
        }
    }
}

impl Hecke {
    fn fin_len(&self, x: FinIdx) -> usize {
        self.group.rs.weyl0.lengths[x]
    }

    /// `h_x h_{s_i}` inside `H(W₀)`, `1 ≤ i ≤ n`.
    fn fin_right_gen(&self, x: FinIdx, i: usize) -> Vec<(FinIdx, Laurent)> {
        let w0 = &self.group.rs.weyl0;
        let xs = w0.mul(x, w0.simple[i - 1]);
        if self.fin_len(xs) > self.fin_len(x) {
            vec![(xs, self.params.one())]
        } else {
            let u = self.params.u_gen(i);
            let um1 = &u - &self.params.one();
            vec![(xs, u), (x, um1)]
        }
    }

    /// `h_x⁻¹ h_{s_i}⁻¹` in the basis `{h_y⁻¹}`.
    fn fin_inv_right_gen(&self, x: FinIdx, i: usize) -> Vec<(FinIdx, Laurent)> {
        let w0 = &self.group.rs.weyl0;
        let sx = w0.mul(w0.simple[i - 1], x);
        if self.fin_len(sx) > self.fin_len(x) {
            vec![(sx, self.params.one())]
        } else {
            let uinv = self.params.u_gen(i).inverse_monomial().expect("monomial");
            let c = &uinv - &self.params.one();
            vec![(sx, uinv), (x, c)]
        }
    }

    fn simple_root(&self, i: usize) -> Vec<i64> {
        let mut a = vec![0; self.group.rank()];
        a[i - 1] = 1;
        a
    }

    fn s_act(&self, i: usize, beta: &Coweight) -> Coweight {
        let w0 = &self.group.rs.weyl0;
        w0.act(w0.simple[i - 1], beta)
    }

    /// `(Y_β − Y_{β − mγ}) / (1 − Y_{−γ})` for integer `m`, expanded as a finite sum.
    fn geometric(&self, beta: &Coweight, gamma: &Coweight, m: i64) -> YForm {
        let mut out = YForm::new();
        let one = self.params.one();
        if m > 0 {
            for j in 0..m {
                add_to(&mut out, &beta.sub(&gamma.scale(j)), &one);
            }
        } else {
            let neg = Laurent::from_int(self.nvars(), -1);
            for j in 1..=(-m) {
                add_to(&mut out, &beta.add(&gamma.scale(j)), &neg);
            }
        }
        out
    }

    /// `R(β)` with `Y_β h_{s_i} = h_{s_i} Y_{s_i β} + R(β)`, `1 ≤ i ≤ n`.
    pub fn bernstein_correction(&self, beta: &Coweight, i: usize) -> YForm {
        let rs = &self.group.rs;
        let a = self.simple_root(i);
        let u = self.params.u_gen(i);
        let one = self.params.one();
        let mut out = YForm::new();
        if rs.is_multipliable(&a) {
            // (BC_n, n): γ = (2α_n)^∨, geometric ratio Y_{-2γ}
            let gamma = rs.lattice_coroot(i - 1);
            let k = rs.pairing(&a, beta).unwrap();
            let g = self.geometric(beta, &gamma.scale(2), k);
            let vi = Laurent::v_pow(unit(self.nvars(), self.params.class_of[i], 1));
            let vi_inv = Laurent::v_pow(unit(self.nvars(), self.params.class_of[i], -1));
            let v0 = Laurent::v_pow(unit(self.nvars(), self.params.class_of[0], 1));
            let v0_inv = Laurent::v_pow(unit(self.nvars(), self.params.class_of[0], -1));
            let c_const = &vi * &(&vi - &vi_inv);
            let c_shift = &vi * &(&v0 - &v0_inv);
            for (b, c) in &g {
                add_to(&mut out, b, &(c * &c_const));
                add_to(&mut out, &b.sub(&gamma), &(c * &c_shift));
            }
        } else {
            let cor = rs.simple_coroot(i - 1);
            let k = rs.pairing(&a, beta).unwrap();
            let um1 = &u - &one;
            for (b, c) in self.geometric(beta, &cor, k) {
                add_to(&mut out, &b, &(&c * &um1));
            }
        }
        out
    }

    /// `R′(β)` with `Y_β h_{s_i}⁻¹ = h_{s_i}⁻¹ Y_{s_i β} + R′(β)`.
    pub fn bernstein_correction_inverse(&self, beta: &Coweight, i: usize) -> YForm {
        let uinv = self.params.u_gen(i).inverse_monomial().expect("monomial");
        let b = &self.params.one() - &uinv;
        let mut out = YForm::new();
        for (g, c) in self.bernstein_correction(beta, i) {
            add_to(&mut out, &g, &(&c * &uinv));
        }
        let nb = -&b;
        add_to(&mut out, beta, &nb);
        add_to(&mut out, &self.s_act(i, beta), &b);
        out
    }

    /// The table of `α` (or `α′`) for `Y_β h_{w₀}` (or `Y_β h_{w₀}⁻¹`).
    pub fn bernstein_coeffs(&self, w0: FinIdx, beta: &Coweight, variant: Variant) -> BernsteinTable {
        let word = self.group.rs.weyl0.words[w0].clone();
        let mut cur: BTreeMap<(FinIdx, Coweight), Laurent> = BTreeMap::new();
        cur.insert((0, beta.clone()), self.params.one());
        let letters: Vec<usize> = match variant {
            Variant::Unprimed => word,
            Variant::Primed => word.into_iter().rev().collect(),
        };
        for i in letters {
            let mut next = BTreeMap::new();
            for ((x, g), c) in &cur {
                let (moved, corr) = match variant {
                    Variant::Unprimed => (self.fin_right_gen(*x, i), self.bernstein_correction(g, i)),
                    Variant::Primed => (self.fin_inv_right_gen(*x, i), self.bernstein_correction_inverse(g, i)),
                };
                let sg = self.s_act(i, g);
                for (y, d) in moved {
                    add_to(&mut next, &(y, sg.clone()), &(c * &d));
                }
                for (b, d) in corr {
                    add_to(&mut next, &(*x, b), &(c * &d));
                }
            }
            cur = next;
        }
        BernsteinTable { w0, beta: beta.clone(), variant, entries: cur }
    }

    /// Left side `Y_β h_{w₀}` (or `Y_β h_{w₀}⁻¹`) in the T-basis.
    pub fn bernstein_lhs(&self, t: &BernsteinTable) -> HeckeElement {
        let y = self.y_beta(&t.beta);
        let h = match t.variant {
            Variant::Unprimed => self.basis_fin(t.w0),
            Variant::Primed => self.basis_inverse(&WeylElement::finite(self.group.rank(), t.w0)),
        };
        self.multiply(&y, &h)
    }

    /// Right side `Σ α h_{w₀′} Y_{β′}` (or with `h⁻¹`) in the T-basis.
    pub fn bernstein_rhs(&self, t: &BernsteinTable) -> HeckeElement {
        let mut out = self.zero();
        for ((x, b), c) in &t.entries {
            let h = match t.variant {
                Variant::Unprimed => self.basis_fin(*x),
                Variant::Primed => self.basis_inverse(&WeylElement::finite(self.group.rank(), *x)),
            };
            out = out.add(&self.multiply(&h, &self.y_beta(b)).scale(c));
        }
        out
    }

    /// Whether every entry satisfies `w₀′ ≤ w₀` and, for dominant `β`, `β′ ≤ β`.
    pub fn table_is_triangular(&self, t: &BernsteinTable) -> bool {
        let rs = &self.group.rs;
        t.entries.keys().all(|(x, b)| {
            rs.weyl0.bruhat_leq(*x, t.w0) && (!t.beta.is_dominant() || rs.coweight_leq(b, &t.beta))
        })
    }

    /// Per `w₀′`: `Σ_{β′} |α|` at the numeric parameters against the stated bound.
    pub fn table_bounds(&self, t: &BernsteinTable) -> Result<Vec<BoundRow>> {
        let q = self.params.q_f64()?;
        let qmax = self.params.q_max()?;
        let l0 = self.fin_len(t.w0) as i32;
        let lb = self.group.rs.translation_length(&t.beta) as f64;
        let mut sums: BTreeMap<FinIdx, f64> = BTreeMap::new();
        for ((x, _), c) in &t.entries {
            *sums.entry(*x).or_default() += c.eval(&q).abs();
        }
        Ok(sums
            .into_iter()
            .map(|(x, s)| {
                let d = l0 - self.fin_len(x) as i32;
                let base = match t.variant {
                    Variant::Unprimed => qmax * (lb + 1.0),
                    Variant::Primed => lb + 1.0,
                };
                BoundRow { w0_prime: x, sum_abs: s, bound: 2f64.powi(l0) * base.powi(d) }
            })
            .collect())
    }
}

fn unit(n: usize, c: usize, k: i32) -> Vec<i32> {
    let mut e = vec![0; n];
    e[c] = k;
    e
}

/// Converter between the T-basis and the Bernstein basis, with memoised commutations.
pub struct BernsteinBasis<'a> {
    hk: &'a Hecke,
    commute_cache: RefCell<HashMap<(FinIdx, Coweight), BernsteinForm>>,
    gen_forms: Vec<BernsteinForm>,
    omega_forms: Vec<BernsteinForm>,
}

impl<'a> BernsteinBasis<'a> {
    pub fn new(hk: &'a Hecke) -> Result<Self> {
        let mut b = BernsteinBasis { hk, commute_cache: RefCell::new(HashMap::new()), gen_forms: vec![], omega_forms: vec![] };
        let g = &hk.group;
        let mut gens = vec![b.translation_factor(g.generator(0))?];
        for i in 1..g.num_generators() {
            let mut f = BernsteinForm::new();
            f.insert((g.rs.weyl0.simple[i - 1], Coweight::zero(g.rank())), hk.params.one());
            gens.push(f);
        }
        let omegas = g.omegas.iter().map(|o| b.translation_factor(&o.elem)).collect::<Result<Vec<_>>>()?;
        b.gen_forms = gens;
        b.omega_forms = omegas;
        Ok(b)
    }

    /// `h_x = q_γ^{1/2} Y_γ h_{u⁻¹}⁻¹` for `x = t_γ u` with `γ` dominant and `l(t_γ) = l(x) + l(u)`.
    fn translation_factor(&self, x: &WeylElement) -> Result<BernsteinForm> {
        let hk = self.hk;
        let g = &hk.group;
        let gamma = x.beta.clone();
        let t = WeylElement::translation(gamma.clone());
        let u_elem = WeylElement::finite(g.rank(), x.fin);
        if !gamma.is_dominant() || g.length(&t) != g.length(x) + g.length(&u_elem) {
            return Err(Error::Internal("generator does not factor through a dominant translation".into()));
        }
        let uinv = g.inverse(&u_elem);
        let hinv = hk.basis_inverse(&uinv);
        let scale = Laurent::v_pow(hk.sqrt_q_translation(&gamma));
        let mut out = BernsteinForm::new();
        for (w, c) in hinv.terms() {
            if !w.beta.is_zero() {
                return Err(Error::Internal("finite inverse left W₀".into()));
            }
            add_to(&mut out, &(w.fin, gamma.clone()), &(c * &scale));
        }
        Ok(out)
    }

    /// `f · h_{s_i}` for `1 ≤ i ≤ n` (finite generator on the right).
    fn right_fin_gen(&self, f: &BernsteinForm, i: usize) -> BernsteinForm {
        let mut out = BernsteinForm::new();
        for ((x, b), c) in f {
            for (y, d) in self.hk.fin_right_gen(*x, i) {
                add_to(&mut out, &(y, b.clone()), &(c * &d));
            }
        }
        out
    }

    /// `h_x Y_γ` rewritten as `Σ c Y_δ h_z`.
    fn commute(&self, x: FinIdx, gamma: &Coweight) -> BernsteinForm {
        if let Some(v) = self.commute_cache.borrow().get(&(x, gamma.clone())) {
            return v.clone();
        }
        let hk = self.hk;
        let w0 = &hk.group.rs.weyl0;
        let out = if x == 0 {
            let mut m = BernsteinForm::new();
            m.insert((0, gamma.clone()), hk.params.one());
            m
        } else {
            let word = &w0.words[x];
            let i = *word.last().unwrap();
            let xp = w0.mul(x, w0.simple[i - 1]);
            let sg = hk.s_act(i, gamma);
            // h_s Y_γ = Y_{sγ} h_s − R(sγ)
            let mut m = self.right_fin_gen(&self.commute(xp, &sg), i);
            for (d, c) in hk.bernstein_correction(&sg, i) {
                let nc = -&c;
                for (k, v) in self.commute(xp, &d) {
                    add_to(&mut m, &k, &(&v * &nc));
                }
            }
            m
        };
        self.commute_cache.borrow_mut().insert((x, gamma.clone()), out.clone());
        out
    }

    /// Product of two Bernstein forms.
    pub fn multiply(&self, a: &BernsteinForm, b: &BernsteinForm) -> BernsteinForm {
        let mut out = BernsteinForm::new();
        for ((x, beta), c) in a {
            for ((y, gamma), d) in b {
                let cd = c * d;
                for ((z, delta), e) in self.commute(*x, gamma) {
                    let mut f = BernsteinForm::new();
                    f.insert((z, beta.add(&delta)), &e * &cd);
                    for &i in &self.hk.group.rs.weyl0.words[*y] {
                        f = self.right_fin_gen(&f, i);
                    }
                    for (k, v) in f {
                        add_to(&mut out, &k, &v);
                    }
                }
            }
        }
        out
    }

    /// T-basis to `Σ c Y_β h_{w₀}`.
    pub fn to_bernstein(&self, h: &HeckeElement) -> BernsteinForm {
        let g = &self.hk.group;
        let mut out = BernsteinForm::new();
        for (w, c) in h.terms() {
            let rw = g.reduced_word(w);
            let mut acc = BernsteinForm::new();
            acc.insert((0, Coweight::zero(g.rank())), self.hk.params.one());
            for &i in &rw.letters {
                acc = if i == 0 { self.multiply(&acc, &self.gen_forms[0]) } else { self.right_fin_gen(&acc, i) };
            }
            if rw.omega != 0 {
                acc = self.multiply(&acc, &self.omega_forms[rw.omega]);
            }
            for (k, v) in acc {
                add_to(&mut out, &k, &(&v * c));
            }
        }
        out
    }

    /// `Σ c Y_β h_{w₀}` back to the T-basis.
    pub fn from_bernstein(&self, f: &BernsteinForm) -> HeckeElement {
        let hk = self.hk;
        let mut out = hk.zero();
        for ((x, b), c) in f {
            out = out.add(&hk.multiply(&hk.y_beta(b), &hk.basis_fin(*x)).scale(c));
        }
        out
    }
}
