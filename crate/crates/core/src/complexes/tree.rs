//! The `(q+1)`-regular tree as the building of type `A1` with `Ω̂`, truncated
//! to a ball of chambers around a root edge.
//!
//! Chambers are oriented edges. Vertices are numbered in BFS order from the
//! root edge `{0, 1}`; the edge of a vertex `v ≥ 1` joins it to its parent,
//! and carries chambers `2(v−1)` (parent → v) and `2(v−1)+1` (v → parent).
//! Operators are truncated: `h_s` sums only over panel members present in the
//! ball, so after `k` generator applications values are exact on chambers of
//! length at most `r − k`.

use std::cell::OnceCell;
use std::collections::{HashMap, VecDeque};

use nalgebra::DMatrix;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hecke::bernstein::Variant;
use crate::hecke::{Hecke, HeckeElement};
use crate::laurent::Rational;
use crate::linalg;
use crate::reps::{clean, HeckeRep};
use crate::rootsys::{Coweight, RootType};
use crate::weyl::{AffineWeyl, ParamSystem, WeylElement};

const NONE: u32 = u32::MAX;

/// Maximal number of chambers of a ball.
pub const MAX_CHAMBERS: usize = 1 << 23;

/// Ŵ-distances from the root chamber.
#[derive(Debug)]
struct Labels {
    of: Vec<u32>,
    elems: Vec<WeylElement>,
}

/// Ball of gallery radius `r` around the root edge of the `(q+1)`-regular tree.
#[derive(Debug)]
pub struct TreeBall {
    pub q: usize,
    pub radius: usize,
    pub group: AffineWeyl,
    pub params: ParamSystem,
    parent: Vec<u32>,
    depth: Vec<u32>,
    child_start: Vec<u32>,
    /// Busemann level along the ray `0, 1, c(1), c(c(1)), …` through first children.
    level: Vec<i32>,
    labels: OnceCell<Labels>,
}

/// One row of [`TreeBall::witness`].
#[derive(Clone, Debug)]
pub struct WitnessRow {
    pub delta: f64,
    pub ratio: f64,
    /// Estimated share of `‖f_δ‖_p^p` outside the region where `h f_δ` is exact.
    pub tail: f64,
}

/// One `(w′, w)` pair of [`TreeBall::sectorial_count_check`].
#[derive(Clone, Debug)]
pub struct SectorRow {
    pub w_prime: WeylElement,
    pub w: WeylElement,
    pub l_prime: i64,
    pub l: i64,
    pub predicted: f64,
    /// Smallest and largest count over the sampled chambers `C′` of type `w′`.
    pub counted: (usize, usize),
    pub samples: usize,
}

impl SectorRow {
    pub fn matches(&self) -> bool {
        let p = self.predicted.round();
        (self.predicted - p).abs() < 1e-9 && self.counted.0 as f64 == p && self.counted.1 as f64 == p
    }
}

impl TreeBall {
    pub fn new(q: usize, radius: usize) -> Result<TreeBall> {
        if q == 0 {
            return Err(Error::Usage("tree needs q ≥ 1".into()));
        }
        let vertices = (0..=radius)
            .try_fold(0usize, |acc, d| q.checked_pow(d as u32).and_then(|x| acc.checked_add(x)))
            .and_then(|v| v.checked_mul(2))
            .filter(|v| 2 * (v - 1) <= MAX_CHAMBERS)
            .ok_or_else(|| Error::Resource(format!("TreeBall(q = {q}, r = {radius}) exceeds {MAX_CHAMBERS} chambers")))?;
        let mut parent = Vec::with_capacity(vertices);
        let mut depth = Vec::with_capacity(vertices);
        let mut level = Vec::with_capacity(vertices);
        let mut child_start = Vec::with_capacity(vertices);
        let mut on_ray = Vec::with_capacity(vertices);
        parent.extend([NONE, 0]);
        depth.extend([0, 0]);
        level.extend([0, 1]);
        on_ray.extend([false, true]);
        let mut v = 0;
        while v < parent.len() {
            if (depth[v] as usize) < radius {
                child_start.push(parent.len() as u32);
                for k in 0..q {
                    parent.push(v as u32);
                    depth.push(depth[v] + 1);
                    let ray = on_ray[v] && k == 0;
                    on_ray.push(ray);
                    level.push(if ray { level[v] + 1 } else { level[v] - 1 });
                }
            } else {
                child_start.push(NONE);
            }
            v += 1;
        }
        debug_assert_eq!(parent.len(), vertices);
        let group = AffineWeyl::of_type(RootType::A1);
        let params = ParamSystem::equal(&group, q as i64);
        Ok(TreeBall { q, radius, group, params, parent, depth, child_start, level, labels: OnceCell::new() })
    }

    pub fn n_vertices(&self) -> usize {
        self.parent.len()
    }

    pub fn n_chambers(&self) -> usize {
        2 * (self.parent.len() - 1)
    }

    fn children(&self, v: usize) -> std::ops::Range<usize> {
        match self.child_start[v] {
            NONE => 0..0,
            s => s as usize..s as usize + self.q,
        }
    }

    fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let up = if v == 0 { 1 } else { self.parent[v] as usize };
        std::iter::once(up).chain(self.children(v))
    }

    /// `(tail, head)` of a chamber.
    pub fn ends(&self, c: usize) -> (usize, usize) {
        let v = c / 2 + 1;
        let p = self.parent[v] as usize;
        if c.is_multiple_of(2) {
            (p, v)
        } else {
            (v, p)
        }
    }

    /// Chamber of the oriented edge `(u, v)`.
    pub fn chamber(&self, u: usize, v: usize) -> usize {
        if v != 0 && self.parent[v] as usize == u {
            2 * (v - 1)
        } else {
            debug_assert!(u != 0 && self.parent[u] as usize == v);
            2 * (u - 1) + 1
        }
    }

    /// Gallery distance `l(d(C₀, C))` from the root chamber `(0, 1)`.
    pub fn length(&self, c: usize) -> usize {
        self.depth[c / 2 + 1] as usize
    }

    /// Whether every panel of `c` lies in the ball.
    pub fn is_interior(&self, c: usize) -> bool {
        self.length(c) < self.radius
    }

    pub fn interior_count(&self) -> usize {
        (0..self.n_chambers()).filter(|&c| self.is_interior(c)).count()
    }

    /// `Σ_{l(w) ≤ r−1} q_w`, which the interior count must equal.
    pub fn interior_count_formula(&self) -> Result<u64> {
        let mut total = 0u64;
        if self.radius == 0 {
            return Ok(0);
        }
        let mut g = self.group.clone();
        g.ball_cap = g.ball_cap.max(self.radius);
        for (w, _) in g.enumerate_ball(self.radius - 1)? {
            total += self.params.q_w_value(&self.group, &w)? as u64;
        }
        Ok(total)
    }

    fn apply_gen(&self, i: usize, f: &[f64]) -> Vec<f64> {
        let mut sum = vec![0.0; self.n_vertices()];
        let end = |c: usize| {
            let (t, h) = self.ends(c);
            if i == 0 {
                h
            } else {
                t
            }
        };
        for (c, x) in f.iter().enumerate() {
            sum[end(c)] += x;
        }
        f.iter().enumerate().map(|(c, x)| sum[end(c)] - x).collect()
    }

    fn apply_omega(&self, f: &[f64]) -> Vec<f64> {
        (0..f.len()).map(|c| f[c ^ 1]).collect()
    }

    /// Truncated `h_w f`.
    pub fn apply_basis(&self, w: &WeylElement, f: &[f64]) -> Vec<f64> {
        let rw = self.group.reduced_word(w);
        let mut g = if rw.omega == 0 { f.to_vec() } else { self.apply_omega(f) };
        for &i in rw.letters.iter().rev() {
            g = self.apply_gen(i, &g);
        }
        g
    }

    /// Truncated `h_wᵀ f`.
    pub fn apply_basis_transpose(&self, w: &WeylElement, f: &[f64]) -> Vec<f64> {
        let rw = self.group.reduced_word(w);
        let mut g = f.to_vec();
        for &i in &rw.letters {
            g = self.apply_gen(i, &g);
        }
        if rw.omega != 0 {
            g = self.apply_omega(&g);
        }
        g
    }

    /// Truncated `h f`.
    pub fn apply(&self, h: &HeckeElement, f: &[f64]) -> Result<Vec<f64>> {
        let q = self.params.q_f64()?;
        let mut out = vec![0.0; f.len()];
        for (w, c) in h.terms() {
            let c = c.eval(&q);
            for (o, x) in out.iter_mut().zip(self.apply_basis(w, f)) {
                *o += c * x;
            }
        }
        Ok(out)
    }

    /// Dense matrix of the truncated operator.
    pub fn dense(&self, h: &HeckeElement) -> Result<DMatrix<f64>> {
        let n = self.n_chambers();
        if n > 4000 {
            return Err(Error::Resource(format!("dense matrix of {n} chambers is too large")));
        }
        let mut m = DMatrix::zeros(n, n);
        let mut e = vec![0.0; n];
        for j in 0..n {
            e[j] = 1.0;
            let col = self.apply(h, &e)?;
            e[j] = 0.0;
            for (i, x) in col.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        Ok(m)
    }

    /// Real parts of the spectrum of the truncated operator, ascending.
    pub fn truncated_spectrum(&self, h: &HeckeElement) -> Result<Vec<f64>> {
        let mut v: Vec<f64> = linalg::eigenvalues_real(&self.dense(h)?).iter().map(|z| z.re).collect();
        v.sort_by(f64::total_cmp);
        Ok(v)
    }

    fn labels(&self) -> &Labels {
        self.labels.get_or_init(|| {
            let g = &self.group;
            let n = self.n_chambers();
            let mut of = vec![NONE; n];
            let mut elems = vec![g.identity(), g.omegas[1].elem.clone()];
            let mut index: HashMap<WeylElement, u32> = elems.iter().cloned().zip(0..).collect();
            let mut trans: HashMap<(u32, usize), u32> = HashMap::new();
            let mut step = |x: u32, i: usize, elems: &mut Vec<WeylElement>| -> u32 {
                *trans.entry((x, i)).or_insert_with(|| {
                    let s = if i < 2 { g.generator(i).clone() } else { g.omegas[1].elem.clone() };
                    let y = g.multiply(&elems[x as usize], &s);
                    *index.entry(y.clone()).or_insert_with(|| {
                        elems.push(y);
                        elems.len() as u32 - 1
                    })
                })
            };
            of[0] = 0;
            of[1] = 1;
            let mut queue = VecDeque::from([0usize, 1]);
            while let Some(c) = queue.pop_front() {
                let (t, h) = self.ends(c);
                for i in 0..2 {
                    let others: Vec<usize> = if i == 0 {
                        self.neighbours(h).filter(|&w| w != t).map(|w| self.chamber(w, h)).collect()
                    } else {
                        self.neighbours(t).filter(|&x| x != h).map(|x| self.chamber(t, x)).collect()
                    };
                    for d in others {
                        if of[d] == NONE {
                            let y = step(of[c], i, &mut elems);
                            let yo = step(y, 2, &mut elems);
                            of[d] = y;
                            of[d ^ 1] = yo;
                            queue.push_back(d);
                            queue.push_back(d ^ 1);
                        }
                    }
                }
            }
            Labels { of, elems }
        })
    }

    /// `d(C₀, C)` for the root chamber `C₀ = (0, 1)`.
    pub fn distance_from_root(&self, c: usize) -> WeylElement {
        let l = self.labels();
        l.elems[l.of[c] as usize].clone()
    }

    /// Averages `f` over the chambers with the same Ŵ-distance from the root chamber.
    pub fn spherical_average(&self, f: &[f64]) -> Vec<f64> {
        let l = self.labels();
        let mut sum = vec![0.0; l.elems.len()];
        let mut cnt = vec![0usize; l.elems.len()];
        for (c, x) in f.iter().enumerate() {
            sum[l.of[c] as usize] += x;
            cnt[l.of[c] as usize] += 1;
        }
        l.of.iter().map(|&k| sum[k as usize] / cnt[k as usize] as f64).collect()
    }

    fn check_rep(&self, rep: &HeckeRep) -> Result<()> {
        if rep.dim != 1 || rep.group().rs.name() != "A1" {
            return Err(Error::Usage("geometric realization needs a one-dimensional A1 representation".into()));
        }
        if (rep.q_values()[0] - self.q as f64).abs() > 1e-12 {
            return Err(Error::Usage(format!("representation has q = {}, tree has q = {}", rep.q_values()[0], self.q)));
        }
        Ok(())
    }

    /// `f(C) = π(h_d) / q_d` with `d = d(C₀, C)`.
    pub fn geometric_realization(&self, rep: &HeckeRep) -> Result<Vec<f64>> {
        self.check_rep(rep)?;
        let l = self.labels();
        let vals: Vec<f64> = l
            .elems
            .iter()
            .map(|w| Ok(rep.evaluate(w)[(0, 0)].re / self.params.q_w_value(&self.group, w)?))
            .collect::<Result<_>>()?;
        Ok(l.of.iter().map(|&k| vals[k as usize]).collect())
    }

    /// `‖(h f_δ − λ f_δ)‖_p / ‖f_δ‖_p` over the chambers where `h f_δ` is exact,
    /// with `f` the geometric realization of `rep` and `λ = π(h)`.
    pub fn witness(&self, rep: &HeckeRep, h: &HeckeElement, p: f64, deltas: &[f64]) -> Result<Vec<WitnessRow>> {
        if !(p >= 1.0) {
            return Err(Error::Usage(format!("p = {p} must be at least 1")));
        }
        let f = self.geometric_realization(rep)?;
        let lambda = rep.evaluate_element(h)[(0, 0)].re;
        let reach = h.terms().map(|(w, _)| self.group.length(w)).max().unwrap_or(0);
        if reach >= self.radius {
            return Err(Error::Resource(format!("radius {} does not exceed the word length {reach}", self.radius)));
        }
        let valid = self.radius - reach;
        // |f| decays by |λ_s| / q per step; a level holds 4 q^l chambers.
        let decay = (rep.evaluate(self.group.generator(0))[(0, 0)].norm()) / self.q as f64;
        let mut rows = vec![];
        for &delta in deltas {
            if !(0.0..1.0).contains(&delta) {
                return Err(Error::Usage(format!("δ = {delta} must lie in [0, 1)")));
            }
            let rho = if p.is_infinite() { (1.0 - delta) * decay } else { self.q as f64 * ((1.0 - delta) * decay).powf(p) };
            if rho >= 1.0 {
                return Err(Error::Domain(format!("f_δ is not in L_p for δ = {delta}, p = {p}")));
            }
            let tail = if p.is_infinite() { 0.0 } else { 2.0 * rho.powi(valid as i32) / (1.0 + rho) };
            if tail >= 0.01 {
                let need = ((0.01 * (1.0 + rho) / 2.0).ln() / rho.ln()).ceil() as usize + reach;
                return Err(Error::Resource(format!(
                    "radius {} too small for δ = {delta}: about {need} needed to keep the boundary below 1%",
                    self.radius
                )));
            }
            let fd: Vec<f64> = f.iter().enumerate().map(|(c, x)| x * (1.0 - delta).powi(self.length(c) as i32)).collect();
            let hf = self.apply(h, &fd)?;
            let keep = |c: &usize| self.length(*c) < valid;
            let res: Vec<f64> = (0..fd.len()).filter(keep).map(|c| hf[c] - lambda * fd[c]).collect();
            let base: Vec<f64> = (0..fd.len()).filter(keep).map(|c| fd[c]).collect();
            rows.push(WitnessRow { delta, ratio: p_norm(&res, p) / p_norm(&base, p), tail });
        }
        Ok(rows)
    }

    /// `‖hⁿ 1_{C₀}‖₂`, exact when `r ≥ n·l(h)`.
    pub fn delta_power_norm(&self, h: &HeckeElement, n: usize) -> Result<f64> {
        let mut f = vec![0.0; self.n_chambers()];
        f[0] = 1.0;
        for _ in 0..n {
            f = self.apply(h, &f)?;
        }
        Ok(p_norm(&f, 2.0))
    }

    /// Kesten-type estimate of `‖h‖₂` from the iterates `hᵏ 1_{C₀}`.
    pub fn kesten_estimate(&self, h: &HeckeElement, max_iter: usize, tol: f64) -> Result<super::graph::KestenEstimate> {
        let l = h.terms().map(|(w, _)| self.group.length(w)).max().unwrap_or(0).max(1);
        let exact = (self.radius / l).max(1);
        let mut f = vec![0.0; self.n_chambers()];
        f[0] = 1.0;
        let mut log_norm = 0.0;
        let mut ratios: Vec<f64> = vec![];
        let mut root = 0.0;
        for k in 1..=max_iter {
            f = self.apply(h, &f)?;
            let nrm = p_norm(&f, 2.0);
            log_norm += nrm.ln();
            if k == exact {
                root = (log_norm / k as f64).exp();
            }
            ratios.push(nrm);
            f.iter_mut().for_each(|x| *x /= nrm);
            let m = ratios.len();
            if k > exact && (ratios[m - 1] - ratios[m - 2]).abs() < tol {
                break;
            }
        }
        let estimate = *ratios.last().unwrap_or(&0.0);
        Ok(super::graph::KestenEstimate { root, ratios, estimate })
    }

    /// Norm of the truncated `h_w` for `p ∈ {1, 2, ∞}`; a lower bracket of the tree norm.
    pub fn basis_norm(&self, w: &WeylElement, p: f64) -> Result<f64> {
        let ones = vec![1.0; self.n_chambers()];
        if p == 1.0 {
            return Ok(self.apply_basis_transpose(w, &ones).into_iter().fold(0.0, f64::max));
        }
        if p.is_infinite() {
            return Ok(self.apply_basis(w, &ones).into_iter().fold(0.0, f64::max));
        }
        if p != 2.0 {
            return Err(Error::Unsupported(format!("empirical norms are computed for p ∈ {{1, 2, ∞}}, not {p}")));
        }
        let mut x = ones;
        let mut rq = 0.0;
        for _ in 0..5000 {
            let y = self.apply_basis_transpose(w, &self.apply_basis(w, &x));
            let xx: f64 = x.iter().map(|a| a * a).sum();
            let next = x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>() / xx;
            let nrm = p_norm(&y, 2.0);
            x = y.into_iter().map(|a| a / nrm).collect();
            if (next - rq).abs() <= 1e-10 * next.abs().max(1.0) {
                rq = next;
                break;
            }
            rq = next;
        }
        Ok(rq.sqrt())
    }

    /// Sector type of a chamber: its image under the retraction from the end of the
    /// ray through first children, as `t_{level(tail)} · F`.
    pub fn sector_type(&self, c: usize) -> WeylElement {
        let (t, h) = self.ends(c);
        let (a, b) = (self.level[t], self.level[h]);
        let fin = if b > a { 0 } else { self.group.rs.weyl0.simple[0] };
        WeylElement { beta: Coweight(vec![a as i64]), fin }
    }

    /// Busemann level of a vertex.
    pub fn level(&self, v: usize) -> i32 {
        self.level[v]
    }

    /// The chambers `(r_k, r_{k+1})` along the ray.
    pub fn ray_chambers(&self) -> Vec<usize> {
        let mut out = vec![];
        let mut v = 1;
        let mut u = 0;
        loop {
            out.push(self.chamber(u, v));
            match self.children(v).next() {
                Some(c) => {
                    u = v;
                    v = c;
                }
                None => break,
            }
        }
        out
    }

    /// `L(w)` of a sector type.
    pub fn sector_length(&self, w: &WeylElement) -> i64 {
        self.group.sector_length(w, &self.params).0
    }

    /// Ŵ-distances from `c` out to length `depth`.
    fn local_distances(&self, c: usize, depth: usize) -> Vec<(usize, WeylElement)> {
        let g = &self.group;
        let om = &g.omegas[1].elem;
        let mut seen: HashMap<usize, WeylElement> = HashMap::new();
        seen.insert(c, g.identity());
        seen.insert(c ^ 1, om.clone());
        let mut frontier = vec![c, c ^ 1];
        for _ in 0..depth {
            let mut next = vec![];
            for &x in &frontier {
                let (t, h) = self.ends(x);
                let lx = seen[&x].clone();
                for i in 0..2 {
                    let others: Vec<usize> = if i == 0 {
                        self.neighbours(h).filter(|&w| w != t).map(|w| self.chamber(w, h)).collect()
                    } else {
                        self.neighbours(t).filter(|&y| y != h).map(|y| self.chamber(t, y)).collect()
                    };
                    for d in others {
                        if !seen.contains_key(&d) {
                            let y = g.multiply(&lx, g.generator(i));
                            seen.insert(d ^ 1, g.multiply(&y, om));
                            seen.insert(d, y);
                            next.push(d);
                            next.push(d ^ 1);
                        }
                    }
                }
            }
            frontier = next;
        }
        seen.into_iter().collect()
    }

    /// Compares, for `β = m·β₁` and all sector types with `|L| ≤ max_l`, the number of
    /// chambers `C` of type `w` at distance `β` from a chamber `C′` of type `w′` with
    /// `q_β^{1/2} Q_{γ′γ⁻¹}^{1/2} α_{w₀′, w₀, γ′γ⁻¹, β}`, where `w = γ⁻¹w₀⁻¹`.
    pub fn sectorial_count_check(&self, m: usize, max_l: i64) -> Result<Vec<SectorRow>> {
        if m == 0 {
            return Err(Error::Usage("β must be a positive multiple of β₁".into()));
        }
        let g = &self.group;
        let beta = Coweight(vec![m as i64]);
        let t_beta = WeylElement::translation(beta.clone());
        let lb = g.length(&t_beta);
        let hk = Hecke::new(g.clone(), self.params.clone())?;
        let q = self.params.q_f64()?;
        let w0s = [0, g.rs.weyl0.simple[0]];
        let tables: Vec<_> = w0s.iter().map(|&w0| hk.bernstein_coeffs(w0, &beta, Variant::Unprimed)).collect();
        let types: Vec<WeylElement> = (-(max_l + 2)..=(max_l + 2))
            .flat_map(|b| w0s.iter().map(move |&f| WeylElement { beta: Coweight(vec![b]), fin: f }))
            .filter(|w| self.sector_length(w).abs() <= max_l)
            .collect();
        let q_trans = |x: &Coweight| self.params.q_w_value(g, &WeylElement::translation(x.clone()));
        let q_beta = q_trans(&beta)?;
        // counts[(w', w)] over the chambers C′ of type w′ deep enough in the ball
        let mut counts: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let index: HashMap<&WeylElement, usize> = types.iter().zip(0..).collect();
        if self.radius < lb + 1 {
            return Err(Error::Resource(format!("radius {} too small for l(β) = {lb}", self.radius)));
        }
        for c in 0..self.n_chambers() {
            if self.length(c) + lb > self.radius {
                continue;
            }
            let Some(&wp) = index.get(&self.sector_type(c)) else { continue };
            let mut tally = vec![0usize; types.len()];
            for (d, x) in self.local_distances(c, lb) {
                if x == t_beta {
                    if let Some(&w) = index.get(&self.sector_type(d)) {
                        tally[w] += 1;
                    }
                }
            }
            for (w, k) in tally.into_iter().enumerate() {
                counts.entry((wp, w)).or_default().push(k);
            }
        }
        let mut rows = vec![];
        for (ip, wp) in types.iter().enumerate() {
            for (iw, w) in types.iter().enumerate() {
                let Some(cs) = counts.get(&(ip, iw)) else { continue };
                let (gamma, w0) = (w.beta.neg(), g.rs.weyl0.inv(w.fin));
                let (gamma_p, w0p) = (wp.beta.neg(), g.rs.weyl0.inv(wp.fin));
                let bp = gamma_p.sub(&gamma);
                let (b1, b2) = bp.dominant_split();
                let big_q = q_trans(&b2)? / q_trans(&b1)?;
                let t = w0s.iter().position(|&x| x == w0).expect("A1 has two finite elements");
                let alpha = tables[t].entries.get(&(w0p, bp)).map_or(0.0, |a| a.eval(&q));
                rows.push(SectorRow {
                    w_prime: wp.clone(),
                    w: w.clone(),
                    l_prime: self.sector_length(wp),
                    l: self.sector_length(w),
                    predicted: clean(q_beta.sqrt() * big_q.sqrt() * alpha),
                    counted: (*cs.iter().min().unwrap(), *cs.iter().max().unwrap()),
                    samples: cs.len(),
                });
            }
        }
        Ok(rows)
    }

    /// Checks that a chamber of type `w` with `L(ws) = L(w) + 1` has exactly `q_s`
    /// `s`-adjacent chambers of type `ws`, and one otherwise. Returns the number of
    /// interior chambers checked.
    pub fn sector_lemma_check(&self) -> Result<usize> {
        let g = &self.group;
        let mut checked = 0;
        for c in 0..self.n_chambers() {
            if !self.is_interior(c) {
                continue;
            }
            let w = self.sector_type(c);
            let (t, h) = self.ends(c);
            for i in 0..2 {
                let ws = g.multiply(&w, g.generator(i));
                let others: Vec<usize> = if i == 0 {
                    self.neighbours(h).filter(|&x| x != t).map(|x| self.chamber(x, h)).collect()
                } else {
                    self.neighbours(t).filter(|&x| x != h).map(|x| self.chamber(t, x)).collect()
                };
                let k = others.iter().filter(|&&d| self.sector_type(d) == ws).count();
                let want = if self.sector_length(&ws) == self.sector_length(&w) + 1 { self.q } else { 1 };
                if k != want {
                    return Err(Error::Internal(format!(
                        "chamber {c} of type {} has {k} s{i}-neighbours of type {}, expected {want}",
                        g.label(&w),
                        g.label(&ws)
                    )));
                }
            }
            checked += 1;
        }
        Ok(checked)
    }

    pub fn summary_json(&self) -> Value {
        json!({
            "q": self.q,
            "radius": self.radius,
            "vertices": self.n_vertices(),
            "chambers": self.n_chambers(),
            "interior": self.interior_count(),
        })
    }
}

pub fn p_norm(v: &[f64], p: f64) -> f64 {
    if p.is_infinite() {
        v.iter().fold(0.0, |m, x| m.max(x.abs()))
    } else {
        v.iter().map(|x| x.abs().powf(p)).sum::<f64>().powf(1.0 / p)
    }
}

/// `h_{s0} + h_{s1}` over the tree's parameters.
pub fn simple_walk(group: &AffineWeyl, params: &ParamSystem) -> HeckeElement {
    let mut h = HeckeElement::zero(params.nclasses);
    let one = crate::laurent::Laurent::constant(params.nclasses, Rational::from_integer(1));
    h.add_term(group.generator(0), &one);
    h.add_term(group.generator(1), &one);
    h
}
