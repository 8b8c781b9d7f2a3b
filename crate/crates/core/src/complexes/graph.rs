//! Rank-1 quotients: finite graphs as chamber systems.
//!
//! Regular mode (type `A1`): chambers are oriented edges, `h_{s0}` moves the
//! tail around the head, `h_{s1}` moves the head around the tail, and `ω`
//! reverses the edge, so `h_{s0}h_ω` is the non-backtracking operator.
//! Biregular mode (type `BC1`): chambers are undirected edges of a bipartite
//! graph; the `s_i`-panels are the stars of the part-`i` vertices.

use std::collections::{BTreeSet, VecDeque};

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::tree::TreeBall;
use super::{ChamberComplex, SparseOp};
use crate::bounds;
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::laurent::Rational;
use crate::linalg;
use crate::reps::{clean, complex_json, p_min_of, PMin};
use crate::rootsys::{Coweight, RootType};
use crate::weyl::{AffineWeyl, ParamSystem, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphMode {
    /// Regular if the degree is constant, biregular otherwise.
    Auto,
    Regular,
    Biregular,
}

/// A simple connected graph.
#[derive(Clone, Debug)]
pub struct Graph {
    pub n: usize,
    /// Edges `(a, b)` with `a < b`.
    pub edges: Vec<(usize, usize)>,
    /// Neighbours with the connecting edge index.
    pub adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Validation("graph has no vertices".into()));
        }
        let mut seen = BTreeSet::new();
        let mut es = vec![];
        let mut adj = vec![vec![]; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Validation(format!("edge {u} {v} has a vertex out of range")));
            }
            if u == v {
                return Err(Error::Validation(format!("loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::Validation(format!("multiple edge {} {}", e.0, e.1)));
            }
            adj[e.0].push((e.1, es.len()));
            adj[e.1].push((e.0, es.len()));
            es.push(e);
        }
        let g = Graph { n, edges: es, adj };
        if g.components() != 1 {
            return Err(Error::Validation("graph is disconnected".into()));
        }
        Ok(g)
    }

    /// Parses `N M` followed by `M` lines `u v`.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut nums = text.split_whitespace().map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad integer {t:?}"))));
        let mut next = |what: &str| nums.next().unwrap_or_else(|| Err(Error::Parse(format!("missing {what}"))));
        let n = next("vertex count")?;
        let m = next("edge count")?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            edges.push((next("edge endpoint")?, next("edge endpoint")?));
        }
        if next("end").is_ok() {
            return Err(Error::Parse("trailing data after the edge list".into()));
        }
        Graph::new(n, &edges)
    }

    pub fn load(path: &std::path::Path) -> Result<Graph> {
        Graph::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for (a, b) in &self.edges {
            s += &format!("{a} {b}\n");
        }
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn components(&self) -> usize {
        let mut comp = vec![usize::MAX; self.n];
        let mut k = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = k;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(v, _) in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = k;
                        stack.push(v);
                    }
                }
            }
            k += 1;
        }
        k
    }

    /// Two-colouring with vertex 0 in part 0, if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<usize>> {
        let mut part = vec![usize::MAX; self.n];
        part[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &self.adj[u] {
                if part[v] == usize::MAX {
                    part[v] = 1 - part[u];
                    queue.push_back(v);
                } else if part[v] == part[u] {
                    return None;
                }
            }
        }
        Some(part)
    }

    pub fn adjacency(&self) -> DMatrix<f64> {
        let mut a = DMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            a[(u, v)] = 1.0;
            a[(v, u)] = 1.0;
        }
        a
    }

    /// Gallery distances from edge `e0`; edges are adjacent when they share an endpoint.
    pub fn edge_distances(&self, e0: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.edges.len()];
        dist[e0] = 0;
        let mut queue = VecDeque::from([e0]);
        while let Some(e) = queue.pop_front() {
            let (a, b) = self.edges[e];
            for x in [a, b] {
                for &(_, f) in &self.adj[x] {
                    if dist[f] == usize::MAX {
                        dist[f] = dist[e] + 1;
                        queue.push_back(f);
                    }
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut via = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(v, e) in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        via[v] = e;
                        queue.push_back(v);
                    } else if via[u] != e {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Graph::new(n, &edges).expect("complete graph")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|x| (0..b).map(move |y| (x, a + y))).collect();
        Graph::new(a + b, &edges).expect("complete bipartite graph")
    }

    pub fn petersen() -> Graph {
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &edges).expect("Petersen graph")
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path")
    }

    /// `k` copies of `K_4` minus an edge, joined in a ring through their degree-2 vertices.
    /// Cubic, with a long cyclic bottleneck for large `k`.
    pub fn necklace(k: usize) -> Graph {
        assert!(k >= 2, "a necklace needs at least two beads");
        let mut edges = vec![];
        for i in 0..k {
            let (a, b, c, d) = (4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3);
            edges.extend([(a, c), (a, d), (b, c), (b, d), (c, d)]);
            edges.push((b, 4 * ((i + 1) % k)));
        }
        Graph::new(4 * k, &edges).expect("necklace")
    }

    /// Uniform-ish random `d`-regular simple connected graph from the pairing model.
    pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
        if !(n * d).is_multiple_of(2) || d >= n {
            return Err(Error::Usage(format!("no {d}-regular graph on {n} vertices")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        for _ in 0..100_000 {
            points.shuffle(&mut rng);
            let edges: Vec<(usize, usize)> = points.chunks(2).map(|p| (p[0], p[1])).collect();
            if let Ok(g) = Graph::new(n, &edges) {
                return Ok(g);
            }
        }
        Err(Error::Resource("pairing model did not produce a simple connected graph".into()))
    }
}

impl ChamberComplex {
    /// Builds the chamber system of a graph.
    pub fn from_graph(graph: Graph, mode: GraphMode) -> Result<ChamberComplex> {
        let degs: BTreeSet<usize> = (0..graph.n).map(|v| graph.degree(v)).collect();
        let mode = match mode {
            GraphMode::Auto if degs.len() == 1 => GraphMode::Regular,
            GraphMode::Auto => GraphMode::Biregular,
            m => m,
        };
        match mode {
            GraphMode::Regular => regular(graph, &degs),
            _ => biregular(graph),
        }
    }

    pub fn is_regular_mode(&self) -> bool {
        self.graph.is_some() && self.omega.is_some()
    }

    pub fn is_biregular_mode(&self) -> bool {
        self.graph.is_some() && self.omega.is_none()
    }

    fn require_graph(&self) -> Result<&Graph> {
        self.graph.as_ref().ok_or_else(|| Error::Usage("operation needs a rank-1 complex built from a graph".into()))
    }

    /// `t_{β_1}`.
    pub fn beta1(&self) -> WeylElement {
        WeylElement::translation(Coweight::basis(1, 0))
    }

    /// `h_{β_1}`: the non-backtracking operator in regular mode.
    pub fn beta1_op(&self) -> Result<SparseOp> {
        self.basis_op(&self.beta1())
    }

    /// Chamber of the oriented edge `(u, v)` in regular mode.
    pub fn oriented_chamber(&self, u: usize, v: usize) -> Option<usize> {
        let g = self.graph.as_ref()?;
        let &(_, e) = g.adj[u].iter().find(|(x, _)| *x == v)?;
        Some(2 * e + usize::from(g.edges[e].0 != u))
    }

    /// Hashimoto's matrix `(Bf)(u, v) = Σ_{w ∼ v, w ≠ u} f(v, w)`, built directly from the graph.
    pub fn hashimoto(&self) -> Result<SparseOp> {
        let g = self.require_graph()?;
        if !self.is_regular_mode() {
            return Err(Error::Usage("the non-backtracking matrix needs regular mode".into()));
        }
        let mut rows = vec![vec![]; self.n_chambers];
        for (e, &(a, b)) in g.edges.iter().enumerate() {
            for (c, u, v) in [(2 * e, a, b), (2 * e + 1, b, a)] {
                rows[c] = g.adj[v]
                    .iter()
                    .filter(|(w, _)| *w != u)
                    .map(|&(w, _)| (self.oriented_chamber(v, w).unwrap(), Rational::one()))
                    .collect();
            }
        }
        Ok(SparseOp::from_rows(self.n_chambers, rows, "B"))
    }
}

fn regular(graph: Graph, degs: &BTreeSet<usize>) -> Result<ChamberComplex> {
    if degs.len() != 1 {
        return Err(Error::Validation(format!("irregular degree sequence {degs:?}")));
    }
    let d = *degs.iter().next().unwrap();
    if d < 3 {
        return Err(Error::Validation(format!("degree {d} < 3: the graph has no thick panels")));
    }
    let group = AffineWeyl::of_type(RootType::A1);
    let params = ParamSystem::equal(&group, d as i64 - 1);
    let m = graph.edges.len();
    // chamber 2e = (a, b), 2e + 1 = (b, a)
    let out_of = |u: usize| -> Vec<usize> {
        graph.adj[u].iter().map(|&(_, e)| 2 * e + usize::from(graph.edges[e].0 != u)).collect()
    };
    let into = |v: usize| -> Vec<usize> {
        graph.adj[v].iter().map(|&(_, e)| 2 * e + usize::from(graph.edges[e].1 != v)).collect()
    };
    let s0: Vec<Vec<usize>> = (0..graph.n).map(into).collect();
    let s1: Vec<Vec<usize>> = (0..graph.n).map(out_of).collect();
    let reverse: Vec<usize> = (0..2 * m).map(|c| c ^ 1).collect();
    let mut trivial = vec![vec![1.0; 2 * m]];
    if let Some(part) = graph.bipartition() {
        let sign = (0..2 * m)
            .map(|c| {
                let (a, b) = graph.edges[c / 2];
                let tail = if c % 2 == 0 { a } else { b };
                if part[tail] == 0 {
                    1.0
                } else {
                    -1.0
                }
            })
            .collect();
        trivial.push(sign);
    }
    let mut x = ChamberComplex::new(group, params, 2 * m, vec![s0, s1], Some(vec![(1, reverse)]))?;
    x.set_graph(graph, trivial);
    Ok(x)
}

fn biregular(graph: Graph) -> Result<ChamberComplex> {
    let part = graph.bipartition().ok_or_else(|| Error::Validation("biregular mode needs a bipartite graph".into()))?;
    let mut deg = [BTreeSet::new(), BTreeSet::new()];
    for v in 0..graph.n {
        deg[part[v]].insert(graph.degree(v));
    }
    if deg.iter().any(|d| d.len() != 1) {
        return Err(Error::Validation(format!("irregular degree sequence per part: {:?} and {:?}", deg[0], deg[1])));
    }
    let (d0, d1) = (*deg[0].iter().next().unwrap(), *deg[1].iter().next().unwrap());
    if d0 < 2 || d1 < 2 || d0.max(d1) < 3 {
        return Err(Error::Validation(format!("degrees ({d0}, {d1}) give no thick panels")));
    }
    let group = AffineWeyl::of_type(RootType::BC1);
    let q = [d0 as i128 - 1, d1 as i128 - 1];
    let params = ParamSystem::numeric(
        &group,
        &[("s0".into(), Rational::from_integer(q[0])), ("s1".into(), Rational::from_integer(q[1]))],
        None,
    )?;
    let mut panels = vec![vec![], vec![]];
    for v in 0..graph.n {
        panels[part[v]].push(graph.adj[v].iter().map(|&(_, e)| e).collect());
    }
    let m = graph.edges.len();
    let mut x = ChamberComplex::new(group, params, m, panels, None)?;
    x.set_graph(graph, vec![vec![1.0; m]]);
    Ok(x)
}

/// Expander classification from the non-backtracking spectrum.
#[derive(Clone, Debug)]
pub struct ExpanderReport {
    pub q_beta: f64,
    /// Nontrivial eigenvalues of `h_{β_1}`.
    pub nb_eigenvalues: Vec<Complex64>,
    pub p_min: PMin,
    pub ramanujan: bool,
    pub max_abs: f64,
}

impl ExpanderReport {
    pub fn to_json(&self) -> Value {
        json!({
            "q_beta": clean(self.q_beta),
            "p_min": self.p_min.to_json(),
            "ramanujan": self.ramanujan,
            "max_nontrivial_abs": clean(self.max_abs),
            "ramanujan_bound": clean(self.q_beta.sqrt()),
            "nb_eigenvalues": self.nb_eigenvalues.iter().map(complex_json).collect::<Vec<_>>(),
        })
    }
}

/// Adjacency-side data of the distance theorem check.
#[derive(Clone, Debug)]
pub struct DistanceReport {
    pub chambers: usize,
    pub q: f64,
    pub p: f64,
    pub diameter: usize,
    pub mean: f64,
    pub quantile_99: usize,
    pub bounds: bounds::DiameterBounds,
    pub pass: bool,
}

impl DistanceReport {
    pub fn to_json(&self) -> Value {
        json!({
            "chambers": self.chambers,
            "q": self.q,
            "p": clean(self.p),
            "diameter": self.diameter,
            "mean_distance": clean(self.mean),
            "quantile_0.99": self.quantile_99,
            "avg_upper": clean(self.bounds.avg_upper),
            "avg_lower": clean(self.bounds.avg_lower),
            "diameter_upper": clean(self.bounds.diameter_upper),
            "pass": self.pass,
        })
    }
}

/// Distance histogram from one chamber.
#[derive(Clone, Debug, PartialEq)]
pub struct GalleryStats {
    /// `histogram[d]` chambers at distance `d`.
    pub histogram: Vec<usize>,
    pub eccentricity: usize,
    pub median: usize,
}

/// Vertex-side boundary maps of a biregular complex.
#[derive(Clone, Debug)]
pub struct BoundaryOps {
    /// Vertices of part `I`, in order.
    pub vertices: [Vec<usize>; 2],
    /// `∂_I`: edges → part-`I` vertices, summing over incident edges.
    pub partial: [SparseOp; 2],
    /// `δ_I`: part-`I` vertices → edges, `(δg)(e) = g(endpoint of e in part I)`.
    pub delta: [SparseOp; 2],
    /// `e_I = δ_I ∂_I`.
    pub e: [SparseOp; 2],
}

impl ChamberComplex {
    /// Eigenvalues of `h_{β_1}` off the trivial subspace, `p_min` and the Ramanujan verdict.
    pub fn classify_expander(&self) -> Result<ExpanderReport> {
        self.require_graph()?;
        let q_beta = self.params.q_w_value(&self.group, &self.beta1())?;
        let nb = self.restricted_spectrum(&self.beta1_op()?.to_dense());
        let max_abs = nb.iter().map(|z| z.norm()).fold(0.0, f64::max);
        Ok(ExpanderReport {
            q_beta,
            p_min: p_min_of(&nb, q_beta),
            ramanujan: max_abs <= q_beta.sqrt() + 1e-9,
            max_abs,
            nb_eigenvalues: nb,
        })
    }

    /// Largest `min_a |λ² − aλ + q|` over non-backtracking eigenvalues `λ ∉ {±1, q}`,
    /// with `a` ranging over adjacency eigenvalues.
    pub fn ihara_bass_check(&self) -> Result<f64> {
        let g = self.require_graph()?;
        if !self.is_regular_mode() {
            return Err(Error::Usage("the Ihara–Bass check needs regular mode".into()));
        }
        let q = self.q_int()[0] as f64;
        let adj = linalg::eigenvalues_symmetric(&g.adjacency());
        let nb = linalg::eigenvalues_real(&self.hashimoto()?.to_dense());
        let near = |z: Complex64, x: f64| (z - x).norm() < 1e-4;
        let mut worst: f64 = 0.0;
        for z in nb {
            if near(z, 1.0) || near(z, -1.0) || near(z, q) {
                continue;
            }
            let r = adj.iter().map(|&a| (z * z - z * a + q).norm()).fold(f64::INFINITY, f64::min);
            worst = worst.max(r);
        }
        Ok(worst)
    }

    /// `∂_I`, `δ_I` and `e_I` for both vertex parts.
    pub fn boundary_ops(&self) -> Result<BoundaryOps> {
        let g = self.require_graph()?;
        if !self.is_biregular_mode() {
            return Err(Error::Unsupported("boundary maps need bipartite mode: faces are not 2-colourable".into()));
        }
        let part = g.bipartition().expect("biregular complex");
        let m = g.edges.len();
        let vertices: [Vec<usize>; 2] = [0, 1].map(|i| (0..g.n).filter(|&v| part[v] == i).collect());
        let build = |i: usize| {
            let rows: Vec<Vec<(usize, Rational)>> =
                vertices[i].iter().map(|&v| g.adj[v].iter().map(|&(_, e)| (e, Rational::one())).collect()).collect();
            let partial = SparseOp::rect(vertices[i].len(), m, rows, format!("∂_{i}"));
            let delta = partial.transpose().with_label(format!("δ_{i}"));
            let e = delta.mul(&partial).with_label(format!("e_{i}"));
            (partial, delta, e)
        };
        let (p0, d0, e0) = build(0);
        let (p1, d1, e1) = build(1);
        Ok(BoundaryOps { vertices, partial: [p0, p1], delta: [d0, d1], e: [e0, e1] })
    }

    /// BFS gallery distances on undirected chambers from chamber `c0`.
    /// For graph complexes `c0` is an edge index.
    pub fn gallery_distances(&self, c0: usize) -> Result<Vec<usize>> {
        if let Some(g) = &self.graph {
            if c0 >= g.edges.len() {
                return Err(Error::Usage(format!("edge {c0} out of range")));
            }
            return Ok(g.edge_distances(c0));
        }
        if c0 >= self.n_chambers {
            return Err(Error::Usage(format!("chamber {c0} out of range")));
        }
        let mut dist = vec![usize::MAX; self.n_chambers];
        dist[c0] = 0;
        let mut queue = VecDeque::from([c0]);
        while let Some(c) = queue.pop_front() {
            for i in 0..self.panels.len() {
                for &d in &self.panels[i][self.panel_of[i][c]] {
                    if dist[d] == usize::MAX {
                        dist[d] = dist[c] + 1;
                        queue.push_back(d);
                    }
                }
            }
        }
        Ok(dist)
    }

    pub fn gallery_stats(&self, c0: usize) -> Result<GalleryStats> {
        let dist = self.gallery_distances(c0)?;
        if dist.contains(&usize::MAX) {
            return Err(Error::Validation("complex is disconnected".into()));
        }
        let ecc = *dist.iter().max().unwrap();
        let mut histogram = vec![0; ecc + 1];
        for &d in &dist {
            histogram[d] += 1;
        }
        let mut sorted = dist.clone();
        sorted.sort_unstable();
        Ok(GalleryStats { histogram, eccentricity: ecc, median: sorted[(sorted.len() - 1) / 2] })
    }

    fn undirected_count(&self) -> usize {
        self.graph.as_ref().map_or(self.n_chambers, |g| g.edges.len())
    }

    /// All-pairs gallery distance statistics against the diameter theorem's bounds.
    pub fn distance_theorem_check(&self) -> Result<DistanceReport> {
        self.require_graph()?;
        if !self.is_regular_mode() {
            return Err(Error::Unsupported("the distance theorem check is implemented for regular graphs".into()));
        }
        let q = self.q_int()[0] as f64;
        let p = match self.classify_expander()?.p_min {
            PMin::Finite(x) => x.max(2.0),
            _ => f64::INFINITY,
        };
        let n = self.undirected_count();
        let mut all = Vec::with_capacity(n * n);
        for c in 0..n {
            let s = self.gallery_stats(c)?;
            for (d, k) in s.histogram.iter().enumerate() {
                all.extend(std::iter::repeat_n(d, *k));
            }
        }
        all.sort_unstable();
        let diameter = *all.last().unwrap();
        let mean = all.iter().sum::<usize>() as f64 / all.len() as f64;
        let quantile_99 = all[((all.len() as f64 * 0.99).ceil() as usize).clamp(1, all.len()) - 1];
        let b = bounds::diameter_bounds(p, q, n as f64, &self.group)?;
        let pass = diameter as f64 <= b.diameter_upper;
        Ok(DistanceReport { chambers: n, q, p, diameter, mean, quantile_99, bounds: b, pass })
    }

    /// Girth of the underlying graph: the shortest nontrivial closed gallery.
    pub fn injectivity_radius(&self) -> Result<usize> {
        self.require_graph()?.girth().ok_or_else(|| Error::Domain("graph is a tree".into()))
    }

    /// Spectrum of `h` on the orthogonal complement of the constants.
    pub fn spectrum_without_constants(&self, h: &HeckeElement) -> Result<Vec<Complex64>> {
        let m = self.operator_dense(h)?;
        let mut y = self.clone();
        y.trivial = vec![vec![1.0; self.n_chambers]];
        Ok(y.restricted_spectrum(&m))
    }

    pub fn diameter(&self) -> Result<usize> {
        let mut d = 0;
        for c in 0..self.undirected_count() {
            d = d.max(self.gallery_stats(c)?.eccentricity);
        }
        Ok(d)
    }
}

/// Per-graph row of [`serre_check`].
#[derive(Clone, Debug)]
pub struct SerreRow {
    pub chambers: usize,
    pub injectivity_radius: usize,
    /// Distance from each sample point to the nearest eigenvalue of the quotient.
    pub distances: Vec<f64>,
    pub max_distance: f64,
}

/// Compares tree-spectrum sample points with the spectra of a family of quotients.
pub fn serre_check(family: &[ChamberComplex], h: &HeckeElement, samples: usize, radius: usize) -> Result<(Vec<f64>, Vec<SerreRow>)> {
    let first = family.first().ok_or_else(|| Error::Usage("empty family".into()))?;
    super::check_random_walk(&first.group, &first.params, h)?;
    let q = first.q_int()[0] as usize;
    let ball = TreeBall::new(q, radius)?;
    let tree_eigs = ball.truncated_spectrum(h)?;
    let points: Vec<f64> = (0..samples)
        .map(|k| tree_eigs[((k as f64 + 0.5) / samples as f64 * tree_eigs.len() as f64) as usize])
        .collect();
    let mut rows = vec![];
    for x in family {
        if !x.is_regular_mode() || x.q_int()[0] as usize != q {
            return Err(Error::Usage("family must consist of regular graphs with a common degree".into()));
        }
        let m = x.operator_dense(h)?;
        let eigs = linalg::eigenvalues_real(&m);
        let distances: Vec<f64> = points
            .iter()
            .map(|&p| eigs.iter().map(|z| (z - p).norm()).fold(f64::INFINITY, f64::min))
            .collect();
        rows.push(SerreRow {
            chambers: x.undirected_count(),
            injectivity_radius: x.injectivity_radius()?,
            max_distance: distances.iter().copied().fold(0.0, f64::max),
            distances,
        });
    }
    Ok((points, rows))
}

/// Per-graph row of [`alon_boppana_check`].
#[derive(Clone, Debug)]
pub struct AlonBoppanaRow {
    pub chambers: usize,
    pub diameter: usize,
    /// Largest `n` with `2·n·l(h) < diameter`.
    pub n: usize,
    /// `‖hⁿ 1_C‖₂^{1/n}` on the tree, a lower bound for the largest nontrivial eigenvalue.
    pub lower_bound: f64,
    pub max_nontrivial: f64,
    /// `λ₂(h) − lower_bound`.
    pub epsilon: f64,
    pub pass: bool,
}

/// Tree-side estimate of `λ₂(h) = ‖h‖₂`.
#[derive(Clone, Debug)]
pub struct KestenEstimate {
    /// `‖hⁿ 1_C‖^{1/n}` for the largest exact `n`.
    pub root: f64,
    /// Successive ratios `‖h^{k+1} 1_C‖ / ‖h^k 1_C‖` on the truncated ball (nondecreasing).
    pub ratios: Vec<f64>,
    /// The last ratio: a lower bracket of `‖h‖₂`.
    pub estimate: f64,
}

pub fn alon_boppana_check(
    family: &[ChamberComplex],
    h: &HeckeElement,
    kesten: &KestenEstimate,
) -> Result<Vec<AlonBoppanaRow>> {
    let first = family.first().ok_or_else(|| Error::Usage("empty family".into()))?;
    super::check_random_walk(&first.group, &first.params, h)?;
    let l = h.terms().map(|(w, _)| first.group.length(w)).max().unwrap_or(0).max(1);
    let mut rows = vec![];
    for x in family {
        let q = x.q_int()[0] as usize;
        let diameter = x.diameter()?;
        let n = diameter.div_ceil(2 * l) - 1;
        let lower_bound = if n == 0 { 0.0 } else { TreeBall::new(q, n * l)?.delta_power_norm(h, n)?.powf(1.0 / n as f64) };
        let eigs = x.spectrum_without_constants(h)?;
        let max_nontrivial = eigs.iter().map(|z| z.norm()).fold(0.0, f64::max);
        rows.push(AlonBoppanaRow {
            chambers: x.undirected_count(),
            diameter,
            n,
            lower_bound,
            max_nontrivial,
            epsilon: kesten.estimate - lower_bound,
            pass: max_nontrivial >= lower_bound - 1e-9,
        });
    }
    Ok(rows)
}

impl AlonBoppanaRow {
    pub fn to_json(&self) -> Value {
        json!({
            "chambers": self.chambers,
            "diameter": self.diameter,
            "n": self.n,
            "lower_bound": clean(self.lower_bound),
            "max_nontrivial": clean(self.max_nontrivial),
            "epsilon": clean(self.epsilon),
            "pass": self.pass,
        })
    }
}

impl SerreRow {
    pub fn to_json(&self) -> Value {
        json!({
            "chambers": self.chambers,
            "injectivity_radius": self.injectivity_radius,
            "max_distance": clean(self.max_distance),
            "distances": self.distances.iter().map(|d| clean(*d)).collect::<Vec<_>>(),
        })
    }
}
