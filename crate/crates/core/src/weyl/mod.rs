//! The extended affine Weyl group `Ŵ = P ⋊ W₀`.
//!
//! An element `(β, F)` is the affine map `x ↦ F·x + β` on coweight coordinates.
//! Lengths count the affine walls separating the fundamental alcove from its
//! image, using the interior point `p₀ = (1,…,1)/N` with `N = ht(α₀) + 1`.

mod cosets;
mod params;

pub use cosets::DistanceData;
pub use params::ParamSystem;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde_json::json;

use crate::error::{Error, Result};
use crate::rootsys::{identity_mat, Coweight, FinIdx, RootSystem, RootType};

/// Default maximal radius for [`AffineWeyl::enumerate_ball`].
pub const DEFAULT_BALL_CAP: usize = 14;

/// An element of `Ŵ`: translation part and index of the `W₀` part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    pub beta: Coweight,
    pub fin: FinIdx,
}

impl WeylElement {
    pub fn translation(beta: Coweight) -> Self {
        WeylElement { beta, fin: 0 }
    }

    pub fn finite(n: usize, fin: FinIdx) -> Self {
        WeylElement { beta: Coweight::zero(n), fin }
    }

    pub fn is_translation(&self) -> bool {
        self.fin == 0
    }
}

/// An element of `Ω̂` with its name and its permutation of `S = {s_0, …, s_n}`.
#[derive(Clone, Debug)]
pub struct OmegaInfo {
    pub name: String,
    pub elem: WeylElement,
    /// `ω s_i ω⁻¹ = s_{perm[i]}`.
    pub perm: Vec<usize>,
}

/// A reduced expression `s_{i1} ⋯ s_{ik} · ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
    /// Index into [`AffineWeyl::omegas`].
    pub omega: usize,
}

/// Group context for a fixed root system.
#[derive(Clone, Debug)]
pub struct AffineWeyl {
    pub rs: RootSystem,
    n: usize,
    /// `N = ht(α₀) + 1`; `N·p₀ = (1, …, 1)`.
    scale: i64,
    hyper_roots: Vec<Vec<i64>>,
    /// `⟨α, F·(1,…,1)⟩` per finite element and hyperplane root.
    fin_rho: Vec<Vec<i64>>,
    /// `F·(1,…,1)` per finite element.
    fin_point: Vec<Vec<i64>>,
    generators: Vec<WeylElement>,
    pub omegas: Vec<OmegaInfo>,
    boxes: Vec<WeylElement>,
    pub ball_cap: usize,
}

impl AffineWeyl {
    pub fn load(name: &str) -> Result<AffineWeyl> {
        Ok(Self::new(RootSystem::load(name)?))
    }

    pub fn of_type(t: RootType) -> AffineWeyl {
        Self::new(RootSystem::new(t))
    }

    pub fn new(rs: RootSystem) -> AffineWeyl {
        let n = rs.rank;
        let ones = vec![1; n];
        let scale = rs.highest_root.iter().sum::<i64>() + 1;
        let hyper_roots = rs.hyperplane_roots();
        let fin_point: Vec<Vec<i64>> =
            (0..rs.weyl0.order()).map(|f| rs.weyl0.act(f, &Coweight(ones.clone())).0).collect();
        let fin_rho = fin_point
            .iter()
            .map(|p| hyper_roots.iter().map(|a| a.iter().zip(p).map(|(x, y)| x * y).sum()).collect())
            .collect();

        // s_0 = t_{α₀^∨} s_{α₀}
        let a0 = rs.highest_root.clone();
        let mut refl = identity_mat(n);
        for j in 0..n {
            let col = rs.reflect_coweight(&a0, &Coweight::basis(n, j));
            for i in 0..n {
                refl[i * n + j] = col.0[i];
            }
        }
        let s0 = WeylElement { beta: rs.highest_coroot(), fin: rs.weyl0.index_of(&refl).expect("s_α₀ lies in W₀") };
        let mut generators = vec![s0];
        generators.extend(rs.weyl0.simple.iter().map(|&f| WeylElement::finite(n, f)));

        let mut g = AffineWeyl {
            rs,
            n,
            scale,
            hyper_roots,
            fin_rho,
            fin_point,
            generators,
            omegas: vec![],
            boxes: vec![],
            ball_cap: DEFAULT_BALL_CAP,
        };
        g.omegas = g.find_omegas();
        g.boxes = g.build_box();
        g
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Number of Coxeter generators `n + 1`.
    pub fn num_generators(&self) -> usize {
        self.n + 1
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::finite(self.n, 0)
    }

    /// The Coxeter generator `s_i`, `0 ≤ i ≤ n`.
    pub fn generator(&self, i: usize) -> &WeylElement {
        &self.generators[i]
    }

    pub fn translation(&self, beta: &Coweight) -> WeylElement {
        WeylElement::translation(beta.clone())
    }

    pub fn multiply(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let w0 = &self.rs.weyl0;
        WeylElement { beta: a.beta.add(&w0.act(a.fin, &b.beta)), fin: w0.mul(a.fin, b.fin) }
    }

    pub fn inverse(&self, a: &WeylElement) -> WeylElement {
        let w0 = &self.rs.weyl0;
        let fi = w0.inv(a.fin);
        WeylElement { beta: w0.act(fi, &a.beta).neg(), fin: fi }
    }

    /// `w(β) = F·β + t`.
    pub fn act(&self, w: &WeylElement, beta: &Coweight) -> Coweight {
        self.rs.weyl0.act(w.fin, beta).add(&w.beta)
    }

    /// `N·(w·p₀)`, an integer point.
    fn scaled_image(&self, w: &WeylElement) -> Vec<i64> {
        self.fin_point[w.fin].iter().zip(&w.beta.0).map(|(p, b)| p + self.scale * b).collect()
    }

    /// Number of affine walls between the fundamental alcove and its image.
    pub fn length(&self, w: &WeylElement) -> usize {
        let mut l = 0;
        for (k, a) in self.hyper_roots.iter().enumerate() {
            let ab: i64 = a.iter().zip(&w.beta.0).map(|(x, y)| x * y).sum();
            l += (self.fin_rho[w.fin][k] + self.scale * ab).div_euclid(self.scale).unsigned_abs() as usize;
        }
        l
    }

    fn find_omegas(&self) -> Vec<OmegaInfo> {
        let mut out = vec![];
        for gamma in &self.rs.omega_reps {
            for f in 0..self.rs.weyl0.order() {
                let w = WeylElement { beta: gamma.clone(), fin: f };
                if self.length(&w) == 0 {
                    let winv = self.inverse(&w);
                    let perm: Vec<usize> = (0..=self.n)
                        .map(|i| {
                            let c = self.multiply(&self.multiply(&w, &self.generators[i]), &winv);
                            self.generators.iter().position(|g| *g == c).expect("Ω̂ permutes S")
                        })
                        .collect();
                    out.push(OmegaInfo { name: format!("w{}", perm[0]), elem: w, perm });
                }
            }
        }
        out.sort_by_key(|o| o.perm[0]);
        out
    }

    /// Index of a length-0 element in [`Self::omegas`].
    pub fn omega_index(&self, w: &WeylElement) -> Option<usize> {
        self.omegas.iter().position(|o| o.elem == *w)
    }

    pub fn omega_by_name(&self, name: &str) -> Option<usize> {
        self.omegas.iter().position(|o| o.name == name)
    }

    /// Parses whitespace-separated tokens `s0..sn` and `w0, w1, …`.
    pub fn from_word(&self, word: &str) -> Result<WeylElement> {
        let mut w = self.identity();
        for tok in word.split_whitespace() {
            let g = self.parse_token(tok)?;
            w = self.multiply(&w, &g);
        }
        Ok(w)
    }

    fn parse_token(&self, tok: &str) -> Result<WeylElement> {
        let t = tok.to_ascii_lowercase();
        if let Some(rest) = t.strip_prefix('s') {
            if let Ok(i) = rest.parse::<usize>() {
                if i <= self.n {
                    return Ok(self.generators[i].clone());
                }
            }
        } else if let Some(k) = self.omega_by_name(&t) {
            return Ok(self.omegas[k].elem.clone());
        }
        Err(Error::Usage(format!("unknown generator {tok:?} for type {}", self.rs.name())))
    }

    /// Product of generator indices (`s_i`) followed by an `Ω̂` element.
    pub fn from_letters(&self, letters: &[usize], omega: usize) -> WeylElement {
        let mut w = self.identity();
        for &i in letters {
            w = self.multiply(&w, &self.generators[i]);
        }
        self.multiply(&w, &self.omegas[omega].elem)
    }

    /// Greedy left descent: `w = s_{i1} ⋯ s_{ik} · ω` with `k = l(w)`.
    pub fn reduced_word(&self, w: &WeylElement) -> ReducedWord {
        let mut cur = w.clone();
        let mut l = self.length(&cur);
        let mut letters = Vec::with_capacity(l);
        while l > 0 {
            let (i, next) = (0..=self.n)
                .map(|i| (i, self.multiply(&self.generators[i], &cur)))
                .find(|(_, x)| self.length(x) < l)
                .expect("an element of positive length has a left descent");
            letters.push(i);
            cur = next;
            l -= 1;
        }
        let omega = self.omega_index(&cur).expect("length-0 elements lie in Ω̂");
        ReducedWord { letters, omega }
    }

    pub fn word_string(&self, rw: &ReducedWord) -> String {
        let mut toks: Vec<String> = rw.letters.iter().map(|i| format!("s{i}")).collect();
        if rw.omega != 0 {
            toks.push(self.omegas[rw.omega].name.clone());
        }
        toks.join(" ")
    }

    /// Whether `l(w s_i) > l(w)`.
    pub fn right_ascent(&self, w: &WeylElement, i: usize) -> bool {
        self.length(&self.multiply(w, &self.generators[i])) > self.length(w)
    }

    pub fn left_ascent(&self, w: &WeylElement, i: usize) -> bool {
        self.length(&self.multiply(&self.generators[i], w)) > self.length(w)
    }

    fn build_box(&self) -> Vec<WeylElement> {
        (0..self.rs.weyl0.order())
            .map(|f| {
                let beta = Coweight(self.fin_point[f].iter().map(|p| -p.div_euclid(self.scale)).collect());
                WeylElement { beta, fin: f }
            })
            .collect()
    }

    /// `Â₀`: the elements whose alcove lies in the open fundamental parallelotope.
    pub fn fundamental_box(&self) -> &[WeylElement] {
        &self.boxes
    }

    /// Open parallelotope test `0 < ⟨α_i, w·p₀⟩ < 1`.
    pub fn in_box(&self, w: &WeylElement) -> bool {
        self.scaled_image(w).iter().all(|&x| x > 0 && x < self.scale)
    }

    /// `w = w₀ · t_β · a` with `w₀ ∈ W₀`, `β ∈ P⁺`, `a ∈ Â₀`.
    pub fn structure_decompose(&self, w: &WeylElement) -> (FinIdx, Coweight, WeylElement) {
        let w0g = &self.rs.weyl0;
        let mut v = self.scaled_image(w);
        let mut u = 0;
        while let Some(i) = (0..self.n).find(|&i| v[i] < 0) {
            let s = w0g.simple[i];
            v = w0g.act(s, &Coweight(v)).0;
            u = w0g.mul(s, u);
        }
        let beta = Coweight(v.iter().map(|x| x.div_euclid(self.scale)).collect());
        let uw = self.multiply(&WeylElement::finite(self.n, u), w);
        let a = self.multiply(&WeylElement::translation(beta.neg()), &uw);
        (w0g.inv(u), beta, a)
    }

    /// Checks the decomposition `w = w₀ t_β a` on the ball of radius `l`: existence,
    /// length additivity, uniqueness, and that every additive triple of length `≤ l` occurs.
    pub fn structure_check(&self, l: usize) -> Result<StructureReport> {
        let ball = self.enumerate_ball(l)?;
        let mut seen = HashMap::new();
        let mut counterexamples = vec![];
        for (w, len) in &ball {
            let (w0, beta, a) = self.structure_decompose(w);
            let fin = WeylElement::finite(self.n, w0);
            let back = self.multiply(&self.multiply(&fin, &WeylElement::translation(beta.clone())), &a);
            let sum = self.rs.weyl0.lengths[w0] + self.rs.translation_length(&beta) as usize + self.length(&a);
            let mut bad = vec![];
            if !beta.is_dominant() {
                bad.push("β not dominant");
            }
            if !self.in_box(&a) {
                bad.push("a not in the box");
            }
            if &back != w {
                bad.push("product differs");
            }
            if sum != *len {
                bad.push("length not additive");
            }
            if let Some(prev) = seen.insert((w0, beta.clone(), a.clone()), w.clone()) {
                if &prev != w {
                    bad.push("decomposition not unique");
                }
            }
            if !bad.is_empty() {
                counterexamples.push(json!({ "w": self.label(w), "length": len, "problems": bad }));
            }
        }
        // Count the triples with additive length ≤ l by brute force over a dominant box.
        let mut expected = 0usize;
        let mut pts: Vec<Vec<i64>> = vec![vec![]];
        for _ in 0..self.n {
            pts = pts
                .into_iter()
                .flat_map(|p| {
                    (0..=l as i64).map(move |z| {
                        let mut q = p.clone();
                        q.push(z);
                        q
                    })
                })
                .collect();
        }
        let box_lengths: Vec<usize> = self.boxes.iter().map(|a| self.length(a)).collect();
        for p in pts {
            let lb = self.rs.translation_length(&Coweight(p)) as usize;
            if lb > l {
                continue;
            }
            for &lf in &self.rs.weyl0.lengths {
                expected += box_lengths.iter().filter(|&&la| lf + lb + la <= l).count();
            }
        }
        Ok(StructureReport { radius: l, elements: ball.len(), expected, counterexamples })
    }

    /// All elements of length at most `l`, by breadth-first search from `Ω̂`.
    /// Returned in BFS order together with their lengths.
    pub fn enumerate_ball(&self, l: usize) -> Result<Vec<(WeylElement, usize)>> {
        if l > self.ball_cap {
            return Err(Error::Resource(format!("ball radius {l} exceeds cap {}", self.ball_cap)));
        }
        let mut seen: HashMap<WeylElement, usize> = HashMap::new();
        let mut out = vec![];
        let mut queue = VecDeque::new();
        for o in &self.omegas {
            seen.insert(o.elem.clone(), 0);
            queue.push_back(o.elem.clone());
        }
        while let Some(w) = queue.pop_front() {
            let d = seen[&w];
            out.push((w.clone(), d));
            if d == l {
                continue;
            }
            for g in &self.generators {
                let x = self.multiply(&w, g);
                if !seen.contains_key(&x) {
                    seen.insert(x.clone(), d + 1);
                    queue.push_back(x);
                }
            }
        }
        Ok(out)
    }

    /// Order of `s_i s_j`, or `None` when infinite.
    pub fn coxeter_m(&self, i: usize, j: usize) -> Option<usize> {
        let st = self.multiply(&self.generators[i], &self.generators[j]);
        let mut p = st.clone();
        for m in 1..=12 {
            if p == self.identity() {
                return Some(m);
            }
            p = self.multiply(&p, &st);
        }
        None
    }

    /// `{beta: [..], fin: [[..]]}`.
    pub fn to_json(&self, w: &WeylElement) -> serde_json::Value {
        json!({ "beta": w.beta.0, "fin": self.rs.weyl0.rows(w.fin) })
    }

    pub fn from_json(&self, v: &serde_json::Value) -> Result<WeylElement> {
        let bad = || Error::Parse("element must be {beta: [ints], fin: [[ints]]}".into());
        let beta: Vec<i64> = serde_json::from_value(v.get("beta").ok_or_else(bad)?.clone())?;
        let fin: Vec<Vec<i64>> = serde_json::from_value(v.get("fin").ok_or_else(bad)?.clone())?;
        if beta.len() != self.n || fin.len() != self.n || fin.iter().any(|r| r.len() != self.n) {
            return Err(Error::Usage("element has wrong rank".into()));
        }
        let flat: Vec<i64> = fin.into_iter().flatten().collect();
        let f = self.rs.weyl0.index_of(&flat).ok_or_else(|| Error::Validation("fin is not in W₀".into()))?;
        Ok(WeylElement { beta: Coweight(beta), fin: f })
    }

    /// Human-readable label: a reduced word.
    pub fn label(&self, w: &WeylElement) -> String {
        let s = self.word_string(&self.reduced_word(w));
        if s.is_empty() {
            "id".into()
        } else {
            s
        }
    }

    /// `|Ω̂| · |W₀|² (L+1)^n`.
    pub fn growth_bound(&self, l: usize) -> u64 {
        let w = self.rs.weyl0.order() as u64;
        self.omegas.len() as u64 * w * w * (l as u64 + 1).pow(self.n as u32)
    }
}

/// Result of [`AffineWeyl::structure_check`].
#[derive(Clone, Debug)]
pub struct StructureReport {
    pub radius: usize,
    pub elements: usize,
    /// Number of triples `(w₀, β, a)` with `l(w₀) + l(β) + l(a) ≤ radius`.
    pub expected: usize,
    pub counterexamples: Vec<serde_json::Value>,
}

impl StructureReport {
    pub fn pass(&self) -> bool {
        self.counterexamples.is_empty() && self.expected == self.elements
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "radius": self.radius,
            "elements": self.elements,
            "expected": self.expected,
            "counterexamples": self.counterexamples,
            "pass": self.pass(),
        })
    }
}

pub struct Labelled<'a>(pub &'a AffineWeyl, pub &'a WeylElement);

impl fmt::Display for Labelled<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.label(self.1))
    }
}

#[cfg(test)]
mod tests;
