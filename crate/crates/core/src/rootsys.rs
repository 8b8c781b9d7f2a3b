//! Root systems of the supported affine types, their lattices and the finite Weyl group `W₀`.
//!
//! Roots are integer vectors in simple-root coordinates. Coweights are integer
//! vectors in the basis of simple coweights `β_j`, so `⟨α_i, β_j⟩ = δ_ij` and the
//! pairing of a root with a coweight is a plain dot product.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::Rational;

/// Integer vector in the simple-coweight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn zero(n: usize) -> Self {
        Coweight(vec![0; n])
    }

    /// The simple coweight `β_i` (0-based index).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Coweight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&z| z >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&z| z == 0)
    }

    pub fn add(&self, o: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Coweight {
        Coweight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Coweight {
        self.scale(-1)
    }

    /// Split into dominant parts `(β₁, β₂)` with `β = β₁ − β₂`.
    pub fn dominant_split(&self) -> (Coweight, Coweight) {
        (
            Coweight(self.0.iter().map(|&z| z.max(0)).collect()),
            Coweight(self.0.iter().map(|&z| (-z).max(0)).collect()),
        )
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, z) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{z}")?;
        }
        write!(f, ")")
    }
}

/// Supported irreducible types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootType {
    A1,
    BC1,
    A2,
    A3,
    C2,
    G2,
}

impl RootType {
    pub fn parse(name: &str) -> Result<RootType> {
        let norm: String = name.chars().filter(|c| *c != '_').collect::<String>().to_ascii_uppercase();
        match norm.as_str() {
            "A1" => Ok(RootType::A1),
            "BC1" => Ok(RootType::BC1),
            "A2" => Ok(RootType::A2),
            "A3" => Ok(RootType::A3),
            "C2" => Ok(RootType::C2),
            "G2" => Ok(RootType::G2),
            _ => Err(Error::Config(format!("unknown or unsupported root system type {name:?}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RootType::A1 => "A1",
            RootType::BC1 => "BC1",
            RootType::A2 => "A2",
            RootType::A3 => "A3",
            RootType::C2 => "C2",
            RootType::G2 => "G2",
        }
    }

    pub fn all() -> [RootType; 6] {
        [RootType::A1, RootType::BC1, RootType::A2, RootType::A3, RootType::C2, RootType::G2]
    }

    /// Reduced types of the classical series (A, B, C, D, E), where `|Ω̂| = det(cartan)`.
    pub fn is_reduced(self) -> bool {
        !matches!(self, RootType::BC1)
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Row-major square integer matrix acting on coweight coordinates.
pub type Mat = Vec<i64>;

pub fn mat_mul(n: usize, a: &Mat, b: &Mat) -> Mat {
    let mut c = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    c
}

pub fn mat_vec(n: usize, a: &Mat, x: &[i64]) -> Vec<i64> {
    (0..n).map(|i| (0..n).map(|j| a[i * n + j] * x[j]).sum()).collect()
}

pub fn identity_mat(n: usize) -> Mat {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

/// Index of an element of `W₀` in [`FiniteWeyl`].
pub type FinIdx = usize;

/// The finite Weyl group `W₀`, enumerated once with full multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteWeyl {
    n: usize,
    pub mats: Vec<Mat>,
    /// A reduced word in the simple reflections (1-based generator labels).
    pub words: Vec<Vec<usize>>,
    pub lengths: Vec<usize>,
    mul: Vec<FinIdx>,
    inv: Vec<FinIdx>,
    index: HashMap<Mat, FinIdx>,
    /// `simple[i]` is the index of `s_{i+1}`.
    pub simple: Vec<FinIdx>,
    pub longest: FinIdx,
}

impl FiniteWeyl {
    fn build(n: usize, cartan: &[Vec<i64>]) -> FiniteWeyl {
        let gens: Vec<Mat> = (0..n)
            .map(|i| {
                let mut m = identity_mat(n);
                // s_i(x)_j = x_j - x_i ⟨α_j, α_i^∨⟩
                for j in 0..n {
                    m[j * n + i] -= cartan[j][i];
                }
                m
            })
            .collect();
        let mut mats = vec![identity_mat(n)];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut index = HashMap::new();
        index.insert(mats[0].clone(), 0);
        let mut head = 0;
        while head < mats.len() {
            for (i, g) in gens.iter().enumerate() {
                let m = mat_mul(n, &mats[head], g);
                if !index.contains_key(&m) {
                    index.insert(m.clone(), mats.len());
                    let mut w = words[head].clone();
                    w.push(i + 1);
                    words.push(w);
                    mats.push(m);
                }
            }
            head += 1;
        }
        let size = mats.len();
        let lengths: Vec<usize> = words.iter().map(|w| w.len()).collect();
        let mut mul = vec![0; size * size];
        for a in 0..size {
            for b in 0..size {
                mul[a * size + b] = index[&mat_mul(n, &mats[a], &mats[b])];
            }
        }
        let inv = (0..size).map(|a| (0..size).find(|&b| mul[a * size + b] == 0).unwrap()).collect();
        let simple = gens.iter().map(|g| index[g]).collect();
        let longest = (0..size).max_by_key(|&a| lengths[a]).unwrap();
        FiniteWeyl { n, mats, words, lengths, mul, inv, index, simple, longest }
    }

    pub fn order(&self) -> usize {
        self.mats.len()
    }

    pub fn mul(&self, a: FinIdx, b: FinIdx) -> FinIdx {
        self.mul[a * self.mats.len() + b]
    }

    pub fn inv(&self, a: FinIdx) -> FinIdx {
        self.inv[a]
    }

    pub fn index_of(&self, m: &Mat) -> Option<FinIdx> {
        self.index.get(m).copied()
    }

    pub fn act(&self, a: FinIdx, x: &Coweight) -> Coweight {
        Coweight(mat_vec(self.n, &self.mats[a], &x.0))
    }

    /// Matrix rows, for serialisation.
    pub fn rows(&self, a: FinIdx) -> Vec<Vec<i64>> {
        self.mats[a].chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Bruhat order `u ≤ w` by the subword property on one reduced word of `w`.
    pub fn bruhat_leq(&self, u: FinIdx, w: FinIdx) -> bool {
        let word = &self.words[w];
        let k = word.len();
        let lu = self.lengths[u];
        if lu > k {
            return false;
        }
        (0u32..(1 << k)).any(|mask| {
            if mask.count_ones() as usize != lu {
                return false;
            }
            let mut x = 0;
            for (pos, &g) in word.iter().enumerate() {
                if mask & (1 << pos) != 0 {
                    x = self.mul(x, self.simple[g - 1]);
                }
            }
            x == u
        })
    }
}

/// Root datum of one supported irreducible type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub root_type: RootType,
    pub rank: usize,
    /// Symmetric invariant form on simple roots, integer-scaled.
    pub gram: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    /// `cartan[i][j] = ⟨α_i, α_j^∨⟩`.
    pub cartan: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
    /// Representative coweights of `Ω̂ = P/Q`: zero and the minuscule `β_j`.
    pub omega_reps: Vec<Coweight>,
    /// Vertex types in bijection with `Ω̂` (0 and the minuscule indices, 1-based).
    pub good_types: Vec<usize>,
    pub weyl0: FiniteWeyl,
}

impl RootSystem {
    pub fn load(name: &str) -> Result<RootSystem> {
        Ok(Self::new(RootType::parse(name)?))
    }

    pub fn new(t: RootType) -> RootSystem {
        let (gram, positive_roots, highest_root): (Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<i64>) = match t {
            RootType::A1 => (vec![vec![2]], vec![vec![1]], vec![1]),
            RootType::BC1 => (vec![vec![1]], vec![vec![1], vec![2]], vec![2]),
            RootType::A2 => (
                vec![vec![2, -1], vec![-1, 2]],
                vec![vec![1, 0], vec![0, 1], vec![1, 1]],
                vec![1, 1],
            ),
            RootType::A3 => (
                vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
                vec![
                    vec![1, 0, 0],
                    vec![0, 1, 0],
                    vec![0, 0, 1],
                    vec![1, 1, 0],
                    vec![0, 1, 1],
                    vec![1, 1, 1],
                ],
                vec![1, 1, 1],
            ),
            // α1 short, α2 long
            RootType::C2 => (
                vec![vec![2, -2], vec![-2, 4]],
                vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]],
                vec![2, 1],
            ),
            // α1 short, α2 long
            RootType::G2 => (
                vec![vec![2, -3], vec![-3, 6]],
                vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1], vec![3, 1], vec![3, 2]],
                vec![3, 2],
            ),
        };
        let rank = gram.len();
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        let weyl0 = FiniteWeyl::build(rank, &cartan);
        let mut good_types = vec![0];
        let mut omega_reps = vec![Coweight::zero(rank)];
        for j in 0..rank {
            if highest_root[j] == 1 {
                good_types.push(j + 1);
                omega_reps.push(Coweight::basis(rank, j));
            }
        }
        RootSystem {
            root_type: t,
            rank,
            gram,
            positive_roots,
            cartan,
            highest_root,
            omega_reps,
            good_types,
            weyl0,
        }
    }

    pub fn name(&self) -> &'static str {
        self.root_type.name()
    }

    fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank;
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    /// All roots, positive then negative.
    pub fn roots(&self) -> Vec<Vec<i64>> {
        let mut r = self.positive_roots.clone();
        r.extend(self.positive_roots.iter().map(|a| a.iter().map(|x| -x).collect::<Vec<_>>()));
        r
    }

    pub fn is_root(&self, a: &[i64]) -> bool {
        self.positive_roots.iter().any(|r| r == a || r.iter().zip(a).all(|(x, y)| *x == -*y))
    }

    /// `2α ∈ R`.
    pub fn is_multipliable(&self, a: &[i64]) -> bool {
        let d: Vec<i64> = a.iter().map(|x| 2 * x).collect();
        self.is_root(&d)
    }

    /// Positive roots whose double is not a root; their walls are the affine hyperplanes.
    pub fn hyperplane_roots(&self) -> Vec<Vec<i64>> {
        self.positive_roots.iter().filter(|a| !self.is_multipliable(a)).cloned().collect()
    }

    /// Exact `⟨α, β⟩`.
    pub fn pairing(&self, root: &[i64], beta: &Coweight) -> Result<i64> {
        if root.len() != self.rank || beta.rank() != self.rank {
            return Err(Error::Usage(format!(
                "pairing expects vectors of length {}, got {} and {}",
                self.rank,
                root.len(),
                beta.rank()
            )));
        }
        Ok(root.iter().zip(&beta.0).map(|(a, b)| a * b).sum())
    }

    fn pair(&self, root: &[i64], x: &[i64]) -> i64 {
        root.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// Coroot `α^∨` in coweight coordinates.
    pub fn coroot(&self, a: &[i64]) -> Coweight {
        let aa = self.form(a, a);
        Coweight(
            (0..self.rank)
                .map(|j| {
                    let mut e = vec![0; self.rank];
                    e[j] = 1;
                    let num = 2 * self.form(&e, a);
                    debug_assert_eq!(num % aa, 0);
                    num / aa
                })
                .collect(),
        )
    }

    /// Simple coroot `α_i^∨` (0-based).
    pub fn simple_coroot(&self, i: usize) -> Coweight {
        Coweight((0..self.rank).map(|j| self.cartan[j][i]).collect())
    }

    /// Generator of the coroot lattice in direction `α_i`: `(2α_i)^∨` when `2α_i ∈ R`.
    pub fn lattice_coroot(&self, i: usize) -> Coweight {
        let mut a = vec![0; self.rank];
        a[i] = 1;
        if self.is_multipliable(&a) {
            a[i] = 2;
        }
        self.coroot(&a)
    }

    pub fn highest_coroot(&self) -> Coweight {
        self.coroot(&self.highest_root)
    }

    /// `s_α(γ)` for roots α, γ.
    pub fn reflect_root(&self, a: &[i64], g: &[i64]) -> Vec<i64> {
        let k = self.pair(g, &self.coroot(a).0);
        g.iter().zip(a).map(|(x, y)| x - k * y).collect()
    }

    /// `s_α(x) = x − ⟨α, x⟩ α^∨`.
    pub fn reflect_coweight(&self, a: &[i64], x: &Coweight) -> Coweight {
        let k = self.pair(a, &x.0);
        x.sub(&self.coroot(a).scale(k))
    }

    /// `l(β) = Σ |⟨α, β⟩|` over positive hyperplane roots.
    pub fn translation_length(&self, beta: &Coweight) -> u64 {
        self.hyperplane_roots().iter().map(|a| self.pair(a, &beta.0).unsigned_abs()).sum()
    }

    /// Dominant representative and the minimal `w₀ ∈ W₀` with `w₀(β) = β⁺`.
    pub fn dominant_rep(&self, beta: &Coweight) -> (Coweight, FinIdx) {
        let mut x = beta.clone();
        let mut w = 0;
        while let Some(i) = (0..self.rank).find(|&i| x.0[i] < 0) {
            let s = self.weyl0.simple[i];
            x = self.weyl0.act(s, &x);
            w = self.weyl0.mul(s, w);
        }
        (x, w)
    }

    /// `d ∈ Q⁺`: a non-negative integer combination of the lattice coroots.
    pub fn in_coroot_cone(&self, d: &Coweight) -> bool {
        match self.coroot_coordinates(d) {
            Some(z) => z.iter().all(|c| *c >= Rational::from_integer(0) && c.is_integer()),
            None => false,
        }
    }

    /// Coordinates of `d` in the lattice-coroot basis.
    pub fn coroot_coordinates(&self, d: &Coweight) -> Option<Vec<Rational>> {
        let n = self.rank;
        let basis: Vec<Coweight> = (0..n).map(|i| self.lattice_coroot(i)).collect();
        // Solve Σ z_i basis_i = d by Gaussian elimination over Q.
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rational> = (0..n).map(|c| Rational::from_integer(basis[c].0[r] as i128)).collect();
                row.push(Rational::from_integer(d.0[r] as i128));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r][col] != Rational::from_integer(0))?;
            a.swap(col, piv);
            let p = a[col][col];
            for c in col..=n {
                a[col][c] /= p;
            }
            for r in 0..n {
                if r != col {
                    let f = a[r][col];
                    if f != Rational::from_integer(0) {
                        for c in col..=n {
                            let v = a[col][c] * f;
                            a[r][c] -= v;
                        }
                    }
                }
            }
        }
        Some((0..n).map(|r| a[r][n]).collect())
    }

    /// Coweight order `β′ ≤ β`.
    pub fn coweight_leq(&self, beta_p: &Coweight, beta: &Coweight) -> bool {
        let (bp_plus, wp) = self.dominant_rep(beta_p);
        let (b_plus, w) = self.dominant_rep(beta);
        if bp_plus == b_plus {
            self.weyl0.bruhat_leq(w, wp)
        } else {
            self.in_coroot_cone(&b_plus.sub(&bp_plus))
        }
    }

    /// `|P/Q|`, the determinant of the lattice-coroot basis.
    pub fn lattice_index(&self) -> i64 {
        let n = self.rank;
        let m: Vec<Vec<i64>> = (0..n).map(|i| self.lattice_coroot(i).0).collect();
        det_int(&m).abs()
    }

    pub fn cartan_det(&self) -> i64 {
        det_int(&self.cartan)
    }

    /// Length of the longest element of `W₀`.
    pub fn longest_length(&self) -> usize {
        self.weyl0.lengths[self.weyl0.longest]
    }

    /// Sum of the simple coweights.
    pub fn rho_coweight(&self) -> Coweight {
        Coweight(vec![1; self.rank])
    }

    /// Checks closure of `R` under every reflection.
    pub fn check_closure(&self) -> Result<()> {
        let all = self.roots();
        for a in &all {
            for g in &all {
                let r = self.reflect_root(a, g);
                if !self.is_root(&r) {
                    return Err(Error::Internal(format!(
                        "{}: s_{a:?}({g:?}) = {r:?} is not a root",
                        self.name()
                    )));
                }
            }
        }
        Ok(())
    }
}

fn det_int(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        _ => (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| *v).collect()).collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * det_int(&minor)
            })
            .sum(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_cartan_shape() {
        for t in RootType::all() {
            let rs = RootSystem::new(t);
            rs.check_closure().unwrap();
            for i in 0..rs.rank {
                assert_eq!(rs.cartan[i][i], 2);
                for j in 0..rs.rank {
                    if i != j {
                        assert!(rs.cartan[i][j] <= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn omega_size_matches_lattice_index() {
        let expect = [(RootType::A1, 2), (RootType::BC1, 1), (RootType::A2, 3), (RootType::A3, 4), (RootType::C2, 2), (RootType::G2, 1)];
        for (t, k) in expect {
            let rs = RootSystem::new(t);
            assert_eq!(rs.omega_reps.len(), k, "{t}");
            assert_eq!(rs.lattice_index(), k as i64, "{t}");
            assert_eq!(rs.good_types.len(), k);
            if t.is_reduced() {
                assert_eq!(rs.cartan_det(), k as i64, "{t}");
            }
        }
    }

    #[test]
    fn weyl0_orders() {
        let expect = [(RootType::A1, 2), (RootType::BC1, 2), (RootType::A2, 6), (RootType::A3, 24), (RootType::C2, 8), (RootType::G2, 12)];
        for (t, k) in expect {
            let rs = RootSystem::new(t);
            assert_eq!(rs.weyl0.order(), k);
            assert_eq!(rs.longest_length(), rs.positive_roots.iter().filter(|a| !rs.is_multipliable(a)).count());
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = RootSystem::load("a2").unwrap();
        assert_eq!(a2.pairing(&[1, 0], &Coweight::basis(2, 0)).unwrap(), 1);
        assert_eq!(a2.pairing(&[1, 0], &Coweight::basis(2, 1)).unwrap(), 0);
        assert_eq!(a2.pairing(&a2.highest_root, &Coweight::basis(2, 0)).unwrap(), 1);
        assert_eq!(a2.pairing(&[1, 1], &Coweight::zero(2)).unwrap(), 0);
        assert!(matches!(a2.pairing(&[1], &Coweight::zero(2)), Err(Error::Usage(_))));
    }

    #[test]
    fn translation_length_examples() {
        let a1 = RootSystem::load("A1").unwrap();
        assert_eq!(a1.translation_length(&Coweight(vec![1])), 1);
        let bc1 = RootSystem::load("BC_1").unwrap();
        assert_eq!(bc1.translation_length(&Coweight(vec![1])), 2);
        let a2 = RootSystem::load("A2").unwrap();
        assert_eq!(a2.translation_length(&Coweight::zero(2)), 0);
        assert_eq!(a2.translation_length(&Coweight(vec![1, 0])), 2);
        assert_eq!(a2.translation_length(&Coweight(vec![1, 1])), 4);
    }

    #[test]
    fn dominant_rep_examples() {
        let a1 = RootSystem::load("A1").unwrap();
        let (b, w) = a1.dominant_rep(&Coweight(vec![-1]));
        assert_eq!(b, Coweight(vec![1]));
        assert_eq!(w, a1.weyl0.simple[0]);
        let a2 = RootSystem::load("A2").unwrap();
        let beta = Coweight(vec![-2, 1]);
        let (bp, w) = a2.dominant_rep(&beta);
        assert!(bp.is_dominant());
        assert_eq!(a2.weyl0.act(w, &beta), bp);
        assert_eq!(a2.translation_length(&bp), a2.translation_length(&beta));
        let (same, id) = a2.dominant_rep(&Coweight(vec![2, 1]));
        assert_eq!((same, id), (Coweight(vec![2, 1]), 0));
    }

    #[test]
    fn dominant_rep_is_minimal_by_brute_force() {
        for t in RootType::all() {
            let rs = RootSystem::new(t);
            let n = rs.rank;
            let range = -2..=2i64;
            let mut pts = vec![vec![]];
            for _ in 0..n {
                pts = pts.into_iter().flat_map(|p: Vec<i64>| range.clone().map(move |z| { let mut q = p.clone(); q.push(z); q })).collect();
            }
            for p in pts {
                let beta = Coweight(p);
                let (bp, w) = rs.dominant_rep(&beta);
                let best = (0..rs.weyl0.order())
                    .filter(|&u| rs.weyl0.act(u, &beta) == bp)
                    .min_by_key(|&u| rs.weyl0.lengths[u])
                    .unwrap();
                assert_eq!(rs.weyl0.lengths[w], rs.weyl0.lengths[best]);
                let minimal: Vec<_> = (0..rs.weyl0.order())
                    .filter(|&u| rs.weyl0.act(u, &beta) == bp && rs.weyl0.lengths[u] == rs.weyl0.lengths[best])
                    .collect();
                assert_eq!(minimal, vec![w], "minimal element must be unique");
            }
        }
    }

    #[test]
    fn coweight_order_examples() {
        let a2 = RootSystem::load("A2").unwrap();
        let b = Coweight(vec![1, 1]);
        assert!(a2.coweight_leq(&b, &b));
        assert!(a2.coweight_leq(&Coweight::zero(2), &b));
        assert!(!a2.coweight_leq(&b, &Coweight::zero(2)));
        // β1 and β2 are incomparable
        assert!(!a2.coweight_leq(&Coweight(vec![1, 0]), &Coweight(vec![0, 1])));
        // the W₀-orbit of a dominant coweight lies below it
        let beta = Coweight(vec![2, 0]);
        for w in 0..a2.weyl0.order() {
            assert!(a2.coweight_leq(&a2.weyl0.act(w, &beta), &beta));
        }
    }

    #[test]
    fn bruhat_basics() {
        let rs = RootSystem::new(RootType::A2);
        let w0 = &rs.weyl0;
        for u in 0..w0.order() {
            assert!(w0.bruhat_leq(0, u));
            assert!(w0.bruhat_leq(u, w0.longest));
            assert!(w0.bruhat_leq(u, u));
        }
        assert!(!w0.bruhat_leq(w0.simple[0], w0.simple[1]));
    }

    #[test]
    fn unknown_type_is_config_error() {
        assert!(matches!(RootSystem::load("E9"), Err(Error::Config(_))));
    }
}
