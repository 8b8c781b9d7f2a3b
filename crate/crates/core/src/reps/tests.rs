use num_complex::Complex64;

use super::*;
use crate::rootsys::RootType;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn swap() -> CMat {
    CMat::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)])
}

/// A_1 with `M_{s0} = [[q, t], [0, −1]]`, `M_ω` the swap and `M_{s1} = M_ω M_{s0} M_ω`.
fn a1_rep(q: i64, t: f64) -> Result<HeckeRep> {
    let g = AffineWeyl::of_type(RootType::A1);
    let p = ParamSystem::equal(&g, q);
    let s0 = CMat::from_row_slice(2, 2, &[c(q as f64), c(t), c(0.0), c(-1.0)]);
    let s1 = swap() * &s0 * swap();
    HeckeRep::new(g, p, vec![s0, s1], vec![(1, swap())], None)
}

fn builtin(t: RootType, q: i64, name: &str) -> HeckeRep {
    let g = AffineWeyl::of_type(t);
    let p = ParamSystem::equal(&g, q);
    builtin_rep(name, &g, &p).unwrap()
}

#[test]
fn builtins_validate_and_classify() {
    for t in [RootType::A1, RootType::A2, RootType::C2, RootType::G2, RootType::BC1, RootType::A3] {
        for q in [2, 3] {
            let triv = builtin(t, q, "trivial");
            let st = builtin(t, q, "steinberg");
            assert!(triv.exact && st.exact);
            assert!(triv.is_unitary() && st.is_unitary());
            assert_eq!(triv.p_min().unwrap(), PMin::Infinite, "{t}");
            assert_eq!(st.p_min().unwrap(), PMin::Finite(1.0), "{t}");
            for p in [1.0, 2.0, 4.0, f64::INFINITY] {
                assert!(triv.rh_check(p));
                assert!(st.rh_check(p));
            }
        }
    }
}

#[test]
fn trivial_and_steinberg_values() {
    let triv = builtin(RootType::A2, 3, "trivial");
    let st = builtin(RootType::A2, 3, "steinberg");
    for (w, l) in triv.group().enumerate_ball(4).unwrap() {
        let qw = triv.params().q_w_value(triv.group(), &w).unwrap();
        assert!((triv.evaluate(&w)[(0, 0)] - c(qw)).norm() < 1e-9);
        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
        assert!((st.evaluate(&w)[(0, 0)] - c(sign)).norm() < 1e-9);
    }
}

#[test]
fn one_dimensional_count() {
    let g = AffineWeyl::of_type(RootType::A1);
    assert_eq!(coxeter_one_dim_count(&g), 4);
    let p = ParamSystem::equal(&g, 2);
    let reps = one_dim_reps(&g, &p).unwrap();
    assert_eq!(reps.len(), 4);
    for (name, r) in &reps {
        assert!(r.is_unitary(), "{name}");
        let a = r.beta_eigenvalues()[0][0].norm();
        let q = r.q_beta(0);
        assert!((a - q).abs() < 1e-9 || (a - 1.0).abs() < 1e-9, "{name}: {a}");
    }
    let g = AffineWeyl::of_type(RootType::A2);
    let reps = one_dim_reps(&g, &ParamSystem::equal(&g, 2)).unwrap();
    assert_eq!(reps.len(), 6);
    assert!(reps.iter().all(|(_, r)| r.is_unitary()));
}

#[test]
fn sign_assignment_errors() {
    let g = AffineWeyl::of_type(RootType::A2);
    let p = ParamSystem::equal(&g, 2);
    assert!(matches!(builtin_rep("sign:s0=+,s1=-", &g, &p), Err(Error::Usage(_))));
    assert!(matches!(builtin_rep("bogus", &g, &p), Err(Error::Usage(_))));
    let g = AffineWeyl::of_type(RootType::C2);
    let p = ParamSystem::numeric(&g, &[("s0".into(), 2.into()), ("s1".into(), 3.into())], None).unwrap();
    let r = builtin_rep("sign:s1=-", &g, &p).unwrap();
    assert_eq!(r.gens[1][(0, 0)], c(-1.0));
    assert_eq!(r.gens[0][(0, 0)], c(2.0));
}

#[test]
fn two_dimensional_fixtures() {
    let r = a1_rep(2, 0.0).unwrap();
    assert!(r.is_unitary());
    for z in &r.beta_eigenvalues()[0] {
        assert!((z.norm() - 2f64.sqrt()).abs() < 1e-12);
    }
    match r.p_min().unwrap() {
        PMin::Finite(p) => assert!((p - 2.0).abs() < 1e-9),
        other => panic!("{other:?}"),
    }
    assert!(r.rh_check(2.0));
    assert!(!r.rh_check(1.5));

    let skew = a1_rep(2, 1.0).unwrap();
    assert!(!skew.is_unitary());

    let big = 1.9 * 2f64.sqrt();
    let bad = a1_rep(2, big + 2.0 / big).unwrap();
    let top = bad.beta_eigenvalues()[0].iter().map(|z| z.norm()).fold(0.0, f64::max);
    assert!((top - big).abs() < 1e-9);
    assert!(!bad.rh_check(2.0));
    assert_eq!(bad.p_min().unwrap(), PMin::AboveTrivial);
}

#[test]
fn relation_failures_are_reported() {
    let g = AffineWeyl::of_type(RootType::A1);
    let p = ParamSystem::equal(&g, 2);
    let s = CMat::from_row_slice(2, 2, &[c(3.0), c(0.0), c(0.0), c(-1.0)]);
    let err = HeckeRep::new(g.clone(), p.clone(), vec![s.clone(), s.clone()], vec![(1, swap())], None).unwrap_err();
    let msg = err.to_string();
    assert!(msg.contains("quadratic relation for s0") && msg.contains("residual"), "{msg}");

    let s0 = CMat::from_row_slice(2, 2, &[c(2.0), c(0.0), c(0.0), c(-1.0)]);
    let err = HeckeRep::new(g, p, vec![s0.clone(), s0], vec![(1, swap())], None).unwrap_err();
    assert!(err.to_string().contains("twist relation"), "{err}");
}

#[test]
fn file_round_trip_and_exact_mode() {
    let text = r#"{"type": "A1", "dim": 2, "q": {"s0": 2},
        "generators": {"s0": [[2, 1], [0, -1]], "s1": [[-1, 0], [1, 2]], "w1": [[0, 1], [1, 0]]}}"#;
    let r = parse_rep(text).unwrap();
    assert!(r.exact);
    let again = parse_rep(&rep_to_json(&r).to_string()).unwrap();
    assert_eq!(again.gens, r.gens);
    assert_eq!(again.omegas, r.omegas);

    let broken = text.replace("[[2, 1], [0, -1]]", "[[2, 1], [0, -2]]");
    assert!(matches!(parse_rep(&broken), Err(Error::Validation(_))));
    let missing = r#"{"type": "A1", "dim": 1, "q": 2, "generators": {"s0": [[2]]}}"#;
    assert!(matches!(parse_rep(missing), Err(Error::Parse(_))));
    let complex = r#"{"type": "A2", "dim": 1, "q": 3,
        "generators": {"s0": [[3]], "s1": [[3]], "s2": [[3]], "w1": [[[-0.5, 0.8660254037844386]]]}}"#;
    let r = parse_rep(complex).unwrap();
    assert!(!r.exact && r.is_unitary());
}

#[test]
fn evaluate_is_multiplicative_on_length_additive_pairs() {
    let r = a1_rep(3, 1.0).unwrap();
    let g = r.group().clone();
    let ball = g.enumerate_ball(5).unwrap();
    for (x, lx) in &ball {
        for (y, ly) in &ball {
            let xy = g.multiply(x, y);
            if g.length(&xy) == lx + ly {
                let d = r.evaluate(x) * r.evaluate(y) - r.evaluate(&xy);
                assert!(linalg::frobenius(&d) < 1e-6);
            }
        }
    }
    assert_eq!(r.evaluate(&g.identity()), CMat::identity(2, 2));
}

#[test]
fn evaluate_matches_hecke_products() {
    let r = a1_rep(2, 1.0).unwrap();
    let hk = &r.hecke;
    let a = hk.h_generator(0).add(&hk.h_omega(1));
    let b = hk.h_generator(1);
    let lhs = r.evaluate_element(&hk.multiply(&a, &b));
    let rhs = r.evaluate_element(&a) * r.evaluate_element(&b);
    assert!(linalg::frobenius(&(lhs - rhs)) < 1e-9);
}

#[test]
fn zeta_data() {
    let st = builtin(RootType::A1, 2, "steinberg");
    let z = st.zeta();
    assert_eq!(z.char_polys[0].len(), 2);
    assert_eq!(z.char_polys[0][0], c(1.0));
    assert!((z.char_polys[0][1] - c(1.0)).norm() < 1e-12);
    assert_eq!(z.lengths, vec![1]);
    assert!((z.pole_moduli[0][0] - 1.0).abs() < 1e-12);
    let r = a1_rep(2, 1.0).unwrap().zeta();
    assert_eq!(r.char_polys[0].len(), 3);
    assert!((r.char_polys[0][2] - c(2.0)).norm() < 1e-9);
}

#[test]
fn growth_checks() {
    let st = builtin(RootType::A2, 2, "steinberg");
    let v = [c(1.0)];
    for row in st.tempered_growth_check(&v, &v, 6, 1.0, 0.0, 0).unwrap() {
        assert!((row.max_ratio - 1.0).abs() < 1e-12);
        assert!(!row.violation);
    }
    let triv = builtin(RootType::A1, 2, "trivial");
    let rows = triv.tempered_growth_check(&v, &v, 8, 2.0, 0.05, 2).unwrap();
    assert!(rows.iter().any(|r| r.violation));
    let rows = triv.tempered_growth_check(&v, &v, 8, 2.0, 2.0, 0).unwrap();
    assert!(rows.iter().all(|r| !r.violation));
}

#[test]
fn thin_parameters_are_unsupported_for_pmin() {
    let g = AffineWeyl::of_type(RootType::A1);
    let r = builtin_rep("trivial", &g, &ParamSystem::equal(&g, 1)).unwrap();
    assert!(matches!(r.p_min(), Err(Error::Unsupported(_))));
}
