use num_traits::One;
use proptest::prelude::*;

use super::graph::{alon_boppana_check, serre_check};
use super::tree::simple_walk;
use super::*;
use crate::error::Error;
use crate::hecke::Hecke;
use crate::reps::builtin_rep;
use crate::rootsys::RootType;

fn r(x: i64) -> Rational {
    Rational::from_integer(x as i128)
}

fn regular(g: Graph) -> ChamberComplex {
    ChamberComplex::from_graph(g, GraphMode::Regular).unwrap()
}

fn hecke_of(x: &ChamberComplex) -> Hecke {
    Hecke::new(x.group.clone(), x.params.clone()).unwrap()
}

#[test]
fn k4_chambers_and_quadratic_relation() {
    let x = regular(Graph::complete(4));
    assert_eq!(x.n_chambers, 12);
    let h = x.generator_op(0);
    let id = SparseOp::identity(12);
    assert!(h.mul(&h).same(&id.scale(r(2)).add(&h)));
    assert!(x.check_relations().is_ok());
}

#[test]
fn hashimoto_identity() {
    for g in [Graph::complete(4), Graph::petersen(), Graph::complete_bipartite(3, 3)] {
        let x = regular(g);
        let omega = x.omega_op(1).unwrap();
        let b = x.generator_op(0).mul(&omega);
        assert!(b.same(&x.hashimoto().unwrap()));
        assert!(x.beta1_op().unwrap().same(&b));
    }
}

#[test]
fn degenerate_graphs_rejected() {
    let path = ChamberComplex::from_graph(Graph::path(5), GraphMode::Auto);
    assert!(matches!(path, Err(Error::Validation(_))));
    let cycle = ChamberComplex::from_graph(Graph::cycle(5), GraphMode::Regular);
    assert!(matches!(cycle, Err(Error::Validation(_))));
    let irregular = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
    assert!(matches!(ChamberComplex::from_graph(irregular, GraphMode::Regular), Err(Error::Validation(_))));
    assert!(Graph::new(3, &[(0, 1)]).is_err());
    assert!(Graph::new(3, &[(0, 1), (1, 0), (1, 2)]).is_err());
}

#[test]
fn graph_file_round_trip() {
    let g = Graph::petersen();
    let h = Graph::parse(&g.to_text()).unwrap();
    assert_eq!(g.edges, h.edges);
    assert!(Graph::parse("3 2\n0 1\n").is_err());
    assert!(Graph::parse("2 1\n0 x\n").is_err());
}

#[test]
fn operator_matrix_basics() {
    let x = regular(Graph::petersen());
    let hk = hecke_of(&x);
    assert!(x.operator_matrix(&hk.one()).unwrap().same(&SparseOp::identity(x.n_chambers)));
    let q = x.q_int();
    let mut g = x.group.clone();
    g.ball_cap = 4;
    for (w, _) in g.enumerate_ball(4).unwrap() {
        let m = x.operator_matrix(&hk.basis(&w)).unwrap();
        let mt = x.operator_matrix(&hk.basis(&x.group.inverse(&w))).unwrap();
        assert!(m.transpose().same(&mt), "adjoint of {}", x.group.label(&w));
        let qw = hk.params.q_w(&x.group, &w).eval_exact(&q).unwrap();
        assert!(m.row_sums().iter().all(|s| *s == qw));
    }
}

#[test]
fn operator_matrix_is_a_homomorphism() {
    let x = regular(Graph::complete(4));
    let hk = hecke_of(&x);
    let g = &x.group;
    let elems: Vec<_> = g.enumerate_ball(3).unwrap().into_iter().map(|(w, _)| w).collect();
    for a in &elems {
        for b in elems.iter().step_by(3) {
            let prod = hk.multiply(&hk.basis(a), &hk.basis(b));
            let lhs = x.operator_matrix(&prod).unwrap();
            let rhs = x.operator_matrix(&hk.basis(a)).unwrap().mul(&x.operator_matrix(&hk.basis(b)).unwrap());
            assert!(lhs.same(&rhs));
        }
    }
}

#[test]
fn omega_terms_need_an_action() {
    let x = ChamberComplex::from_graph(Graph::complete_bipartite(3, 3), GraphMode::Biregular).unwrap();
    assert!(x.omega.is_none());
    assert!(matches!(x.omega_op(1), Err(Error::Usage(_))));
}

#[test]
fn nontrivial_spectrum_k4() {
    let x = regular(Graph::complete(4));
    let hk = hecke_of(&x);
    let full = linalg::eigenvalues_real(&x.generator_op(0).to_dense());
    let nt = x.nontrivial_spectrum(&hk.h_generator(0)).unwrap();
    assert_eq!(nt.len(), 11);
    let twos = |v: &[Complex64]| v.iter().filter(|z| (*z - 2.0).norm() < 1e-9).count();
    assert_eq!(twos(&full), twos(&nt) + 1);
    let id = x.nontrivial_spectrum(&hk.one()).unwrap();
    assert!(id.iter().all(|z| (z - 1.0).norm() < 1e-9));
}

#[test]
fn bipartite_trivial_pair() {
    let x = regular(Graph::complete_bipartite(3, 3));
    assert_eq!(x.trivial_vectors().len(), 2);
    let b = x.beta1_op().unwrap().to_dense();
    let full = linalg::eigenvalues_real(&b);
    let nt = x.restricted_spectrum(&b);
    let count = |v: &[Complex64], t: f64| v.iter().filter(|z| (*z - t).norm() < 1e-6).count();
    assert_eq!(count(&full, 2.0), count(&nt, 2.0) + 1);
    assert_eq!(count(&full, -2.0), count(&nt, -2.0) + 1);
    let y = ChamberComplex::from_graph(Graph::complete_bipartite(3, 3), GraphMode::Biregular).unwrap();
    let rep = y.classify_expander().unwrap();
    assert_eq!(rep.q_beta, 4.0);
    assert_eq!(rep.nb_eigenvalues.len(), 8);
    assert!(rep.ramanujan);
}

#[test]
fn ramanujan_examples() {
    for g in [Graph::complete(4), Graph::petersen()] {
        let x = regular(g);
        let rep = x.classify_expander().unwrap();
        assert!(rep.ramanujan, "{:?}", rep.max_abs);
        assert!(rep.p_min.at_most(2.0));
        assert!(x.ihara_bass_check().unwrap() <= 1e-9);
    }
    let x = regular(Graph::necklace(8));
    let rep = x.classify_expander().unwrap();
    assert!(!rep.ramanujan);
    match rep.p_min {
        crate::reps::PMin::Finite(p) => assert!(p > 2.0),
        other => panic!("unexpected {other:?}"),
    }
    assert!(x.ihara_bass_check().unwrap() <= 1e-6);
}

#[test]
fn petersen_adjacency_oracle() {
    // NB eigenvalues are the roots of λ² − aλ + 2 for a ∈ {1, −2}, plus ±1.
    let x = regular(Graph::petersen());
    let nb = x.classify_expander().unwrap().nb_eigenvalues;
    for z in nb {
        let ok = [1.0, -2.0].iter().any(|a| (z * z - z * *a + 2.0).norm() < 1e-8) || (z.norm() - 1.0).abs() < 1e-6;
        assert!(ok, "{z}");
    }
}

#[test]
fn boundary_relations() {
    let x = ChamberComplex::from_graph(Graph::complete_bipartite(3, 3), GraphMode::Biregular).unwrap();
    let b = x.boundary_ops().unwrap();
    for i in 0..2 {
        let q = x.q_int()[x.params.class_of[i]];
        let nv = b.vertices[i].len();
        assert!(b.partial[i].mul(&b.delta[i]).same(&SparseOp::identity(nv).scale(r(q + 1))));
        let rhs = SparseOp::identity(x.n_chambers).add(&x.generator_op(i));
        assert!(b.e[i].same(&rhs));
        assert!(b.e[i].mul(&b.e[i]).same(&b.e[i].scale(r(q + 1))));
        let mut ind = vec![0.0; nv];
        ind[0] = 1.0;
        let img = b.delta[i].apply(&ind);
        let g = x.graph.as_ref().unwrap();
        for (e, &(u, v)) in g.edges.iter().enumerate() {
            let incident = u == b.vertices[i][0] || v == b.vertices[i][0];
            assert_eq!(img[e], if incident { 1.0 } else { 0.0 });
        }
    }
    let y = regular(Graph::complete(4));
    assert!(matches!(y.boundary_ops(), Err(Error::Unsupported(_))));
}

#[test]
fn biregular_unequal_parameters() {
    // K_{2,4}: part 0 has degree 4, part 1 degree 2.
    let x = ChamberComplex::from_graph(Graph::complete_bipartite(2, 4), GraphMode::Auto).unwrap();
    assert_eq!(x.q_int(), vec![3, 1]);
    assert!(x.check_relations().is_ok());
    let b = x.boundary_ops().unwrap();
    assert!(b.partial[0].mul(&b.delta[0]).same(&SparseOp::identity(2).scale(r(4))));
}

#[test]
fn gallery_statistics() {
    let x = regular(Graph::complete(4));
    for e in 0..6 {
        let s = x.gallery_stats(e).unwrap();
        assert_eq!(s.eccentricity, 2);
        assert_eq!(s.histogram, vec![1, 4, 1]);
    }
    assert_eq!(x.gallery_distances(3).unwrap()[3], 0);
    assert_eq!(x.injectivity_radius().unwrap(), 3);
    assert_eq!(regular(Graph::petersen()).injectivity_radius().unwrap(), 5);
}

#[test]
fn distance_theorem_random_graphs() {
    for (k, n) in [16, 40, 80].iter().cycle().take(20).enumerate() {
        let g = Graph::random_regular(*n, 3, 1000 + k as u64).unwrap();
        assert_eq!(g.edges.len(), 3 * n / 2);
        let rep = regular(g).distance_theorem_check().unwrap();
        assert!(rep.pass, "{:?}", rep);
        assert!(rep.bounds.avg_lower <= rep.bounds.avg_upper);
    }
}

#[test]
fn random_regular_is_deterministic() {
    let a = Graph::random_regular(30, 3, 7).unwrap();
    let b = Graph::random_regular(30, 3, 7).unwrap();
    assert_eq!(a.edges, b.edges);
    assert!((0..30).all(|v| a.degree(v) == 3));
}

#[test]
fn chamber_system_round_trip() {
    let x = regular(Graph::complete(4));
    let text = x.to_json().to_string();
    let y = parse_chamber_system(&text).unwrap();
    assert_eq!(x.panels, y.panels);
    assert_eq!(x.omega, y.omega);
    let hk = hecke_of(&x);
    let w = x.beta1();
    assert!(x.operator_matrix(&hk.basis(&w)).unwrap().same(&y.operator_matrix(&hk.basis(&w)).unwrap()));
}

#[test]
fn chamber_system_rejections() {
    let x = regular(Graph::complete(4));
    let mut v = x.to_json();
    v["panels"]["s0"][0].as_array_mut().unwrap().pop();
    assert!(matches!(parse_chamber_system(&v.to_string()), Err(Error::Validation(_))));
    // break the twist relation: a permutation that is not edge reversal
    let mut v = x.to_json();
    let mut perm: Vec<usize> = (0..12).map(|c| c ^ 1).collect();
    perm.swap(0, 2);
    v["omega"]["w1"] = serde_json::json!(perm);
    let err = parse_chamber_system(&v.to_string()).unwrap_err();
    assert!(err.to_string().contains("w1"), "{err}");
}

#[test]
fn thin_a2_torus() {
    let g = AffineWeyl::of_type(RootType::A2);
    let x = thin_torus(&g, 2).unwrap();
    assert_eq!(x.n_chambers, 4 * 6);
    assert!(x.check_relations().is_ok());
    // two reduced words of the same element give the same operator
    let hk = hecke_of(&x);
    let w = g.from_letters(&[0, 1, 0], 0);
    let v = g.from_letters(&[1, 0, 1], 0);
    assert_eq!(w, v);
    let a = x.generator_op(0).mul(&x.generator_op(1)).mul(&x.generator_op(0));
    assert!(a.same(&x.operator_matrix(&hk.basis(&w)).unwrap()));
    let y = parse_chamber_system(&x.to_json().to_string()).unwrap();
    assert_eq!(y.n_chambers, 24);
    for t in [RootType::A1, RootType::C2, RootType::G2, RootType::BC1] {
        assert!(thin_torus(&AffineWeyl::of_type(t), 3).unwrap().check_relations().is_ok());
    }
}

#[test]
fn tree_ball_interior_count() {
    for (q, rad) in [(1, 5), (2, 6), (3, 4)] {
        let b = TreeBall::new(q, rad).unwrap();
        assert_eq!(b.interior_count() as u64, b.interior_count_formula().unwrap());
        let direct: usize = 2 + (1..rad).map(|l| 4 * q.pow(l as u32)).sum::<usize>();
        assert_eq!(b.interior_count(), direct);
        assert_eq!(b.n_chambers(), 2 + (1..=rad).map(|l| 4 * q.pow(l as u32)).sum::<usize>());
    }
    assert!(matches!(TreeBall::new(2, 40), Err(Error::Resource(_))));
}

#[test]
fn tree_labels_have_the_right_length() {
    let b = TreeBall::new(2, 5).unwrap();
    for c in 0..b.n_chambers() {
        assert_eq!(b.group.length(&b.distance_from_root(c)), b.length(c));
    }
}

#[test]
fn tree_interior_rows_sum_to_q_w() {
    let b = TreeBall::new(2, 7).unwrap();
    let ones = vec![1.0; b.n_chambers()];
    for (w, l) in b.group.enumerate_ball(3).unwrap() {
        let qw = b.params.q_w_value(&b.group, &w).unwrap();
        let row = b.apply_basis(&w, &ones);
        for c in 0..b.n_chambers() {
            if b.length(c) + l < b.radius {
                assert_eq!(row[c], qw);
            }
        }
    }
}

#[test]
fn steinberg_realization() {
    let b = TreeBall::new(2, 8).unwrap();
    let st = builtin_rep("steinberg", &b.group, &b.params).unwrap();
    let f = b.geometric_realization(&st).unwrap();
    for c in 0..b.n_chambers() {
        let l = b.length(c) as i32;
        assert!((f[c] - (-1f64).powi(l) / 2f64.powi(l)).abs() < 1e-15);
    }
    let hk = Hecke::new(b.group.clone(), b.params.clone()).unwrap();
    for i in 0..2 {
        let hf = b.apply(&hk.h_generator(i), &f).unwrap();
        for c in (0..b.n_chambers()).filter(|&c| b.is_interior(c)) {
            assert!((hf[c] + f[c]).abs() < 1e-12);
        }
    }
    let triv = builtin_rep("trivial", &b.group, &b.params).unwrap();
    assert!(b.geometric_realization(&triv).unwrap().iter().all(|&x| x == 1.0));
}

#[test]
fn spherical_average_commutes() {
    let b = TreeBall::new(2, 10).unwrap();
    let hk = Hecke::new(b.group.clone(), b.params.clone()).unwrap();
    let f: Vec<f64> = (0..b.n_chambers()).map(|c| ((c * 7919) % 113) as f64 / 113.0 - 0.5).collect();
    let avg = b.spherical_average(&f);
    assert!(b.spherical_average(&avg).iter().zip(&avg).all(|(x, y)| (x - y).abs() < 1e-15));
    for i in 0..2 {
        let h = hk.h_generator(i);
        let lhs = b.apply(&h, &avg).unwrap();
        let rhs = b.spherical_average(&b.apply(&h, &f).unwrap());
        let res = (0..b.n_chambers()).filter(|&c| b.is_interior(c)).map(|c| (lhs[c] - rhs[c]).abs()).fold(0.0, f64::max);
        assert!(res <= 1e-12, "residual {res}");
    }
}

#[test]
fn steinberg_witness() {
    let b = TreeBall::new(2, 12).unwrap();
    let hk = Hecke::new(b.group.clone(), b.params.clone()).unwrap();
    let st = builtin_rep("steinberg", &b.group, &b.params).unwrap();
    let deltas = [0.4, 0.2, 0.1, 0.05];
    let rows = b.witness(&st, &hk.h_generator(0), 2.0, &deltas).unwrap();
    for w in rows.windows(2) {
        assert!(w[1].ratio < w[0].ratio);
    }
    let slope = (rows[3].ratio / rows[0].ratio).ln() / (0.05f64 / 0.4).ln();
    assert!((0.7..=1.3).contains(&slope), "slope {slope}");
    let zero = b.witness(&st, &hk.h_generator(0), 2.0, &[0.0]).unwrap();
    assert!(zero[0].ratio < 1e-14);
    let small = TreeBall::new(2, 3).unwrap();
    match small.witness(&st, &hk.h_generator(0), 2.0, &[0.05]) {
        Err(Error::Resource(msg)) => assert!(msg.contains("needed")),
        other => panic!("{other:?}"),
    }
    // trivial is not in L_2
    let triv = builtin_rep("trivial", &b.group, &b.params).unwrap();
    assert!(matches!(b.witness(&triv, &hk.h_generator(0), 2.0, &[0.1]), Err(Error::Domain(_))));
}

#[test]
fn sector_types_on_the_ray() {
    let b = TreeBall::new(2, 6).unwrap();
    for c in b.ray_chambers() {
        let (t, _) = b.ends(c);
        let w = b.sector_type(c);
        assert_eq!(w.fin, 0);
        assert_eq!(b.sector_length(&w), -(b.level(t) as i64));
    }
    assert_eq!(b.sector_type(0), b.group.identity());
    assert_eq!(b.sector_type(1), b.group.omegas[1].elem);
}

#[test]
fn sector_lemma() {
    let b = TreeBall::new(2, 8).unwrap();
    assert!(b.sector_lemma_check().unwrap() > 0);
    let b = TreeBall::new(3, 5).unwrap();
    assert!(b.sector_lemma_check().unwrap() > 0);
}

#[test]
fn sectorial_counts() {
    let b = TreeBall::new(2, 10).unwrap();
    for m in 1..=3 {
        let rows = b.sectorial_count_check(m, 3).unwrap();
        assert!(!rows.is_empty());
        let bad: Vec<_> = rows.iter().filter(|r| !r.matches()).collect();
        assert!(bad.is_empty(), "m = {m}: {:?}", &bad[..bad.len().min(3)]);
        assert!(rows.iter().any(|r| r.predicted > 0.0));
    }
}

#[test]
fn kesten_estimate_near_tree_norm() {
    let b = TreeBall::new(2, 14).unwrap();
    let h = simple_walk(&b.group, &b.params);
    let k = b.kesten_estimate(&h, 4000, 1e-10).unwrap();
    let exact = 1.0 + 2.0 * 2f64.sqrt();
    assert!(k.estimate <= exact + 1e-9);
    assert!((k.estimate - exact).abs() < 0.1, "{} vs {exact}", k.estimate);
    for w in k.ratios.windows(2) {
        assert!(w[1] >= w[0] - 1e-9);
    }
}

#[test]
fn alon_boppana_family() {
    let b = TreeBall::new(2, 14).unwrap();
    let h = simple_walk(&b.group, &b.params);
    let kesten = b.kesten_estimate(&h, 4000, 1e-10).unwrap();
    let family: Vec<_> = [50, 100, 200].iter().map(|&n| regular(Graph::random_regular(n, 3, n as u64).unwrap())).collect();
    let rows = alon_boppana_check(&family, &h, &kesten).unwrap();
    assert!(rows.iter().all(|r| r.pass));
    assert!(rows.windows(2).all(|w| w[1].epsilon <= w[0].epsilon + 1e-12));
}

#[test]
fn serre_report_shapes() {
    let b = TreeBall::new(2, 4).unwrap();
    let h = simple_walk(&b.group, &b.params);
    let family: Vec<_> = [Graph::petersen(), Graph::random_regular(40, 3, 3).unwrap()].into_iter().map(regular).collect();
    let (points, rows) = serre_check(&family, &h, 9, 4).unwrap();
    assert_eq!(points.len(), 9);
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0].injectivity_radius, 5);
    let hk = Hecke::new(b.group.clone(), b.params.clone()).unwrap();
    let not_adjoint = hk.basis(&b.group.from_letters(&[0, 1], 0));
    assert!(matches!(serre_check(&family, &not_adjoint, 9, 4), Err(Error::Usage(_))));
}

#[test]
fn truncated_norms_bracket() {
    let b = TreeBall::new(2, 9).unwrap();
    let w = b.group.from_letters(&[0, 1], 0);
    let n2 = b.basis_norm(&w, 2.0).unwrap();
    let n1 = b.basis_norm(&w, 1.0).unwrap();
    let ninf = b.basis_norm(&w, f64::INFINITY).unwrap();
    assert_eq!(ninf, 4.0);
    assert_eq!(n1, 4.0);
    assert!(n2 <= (n1 * ninf).sqrt() + 1e-9);
    assert!(n2 > 1.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn random_cubic_graphs_satisfy_relations(seed in 0u64..1000, half in 4usize..12) {
        let g = Graph::random_regular(2 * half, 3, seed).unwrap();
        let x = regular(g);
        prop_assert!(x.check_relations().is_ok());
        prop_assert!(x.ihara_bass_check().unwrap() <= 1e-6);
        let b = x.hashimoto().unwrap();
        let row_sums = b.row_sums();
        prop_assert!(row_sums.iter().all(|s| *s == r(2)));
        let ones: Vec<f64> = vec![1.0; x.n_chambers];
        let v = x.generator_op(1).apply(&ones);
        prop_assert!(v.iter().all(|&y| y == 2.0));
        let one = Rational::one();
        prop_assert!(x.operator_matrix(&combination(&x, &[(x.group.identity(), one)])).unwrap().same(&SparseOp::identity(x.n_chambers)));
    }
}
