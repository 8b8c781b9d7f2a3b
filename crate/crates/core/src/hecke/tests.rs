use proptest::prelude::*;

use super::bernstein::{BernsteinBasis, Variant};
use super::*;

fn ball(hk: &Hecke, l: usize) -> Vec<WeylElement> {
    hk.group.enumerate_ball(l).unwrap().into_iter().map(|(w, _)| w).collect()
}

fn random_element(hk: &Hecke, elems: &[WeylElement], picks: &[(usize, i64)]) -> HeckeElement {
    let mut h = hk.zero();
    for (k, (idx, c)) in picks.iter().enumerate() {
        let w = &elems[idx % elems.len()];
        // mix in a v-power so coefficients are genuinely Laurent
        let e = vec![(k as i32 % 3) - 1; hk.nvars()];
        h.add_term(w, &Laurent::monomial(e, Rational::from_integer(*c as i128)));
    }
    h
}

#[test]
fn quadratic_relation() {
    for t in RootType::all() {
        let hk = Hecke::abstract_type(t);
        for i in 0..hk.group.num_generators() {
            let hs = hk.h_generator(i);
            let u = hk.params.u_gen(i);
            let expect = hk.scalar(u.clone()).add(&hs.scale(&(&u - &hk.params.one())));
            assert_eq!(hk.multiply(&hs, &hs), expect);
        }
    }
}

#[test]
fn length_additive_products_are_basis_elements() {
    let hk = Hecke::abstract_type(RootType::A2);
    let b = ball(&hk, 4);
    for x in &b {
        for y in &b {
            let xy = hk.group.multiply(x, y);
            let lx = hk.group.length(x);
            let ly = hk.group.length(y);
            let p = hk.multiply(&hk.basis(x), &hk.basis(y));
            if hk.group.length(&xy) == lx + ly {
                assert_eq!(p, hk.basis(&xy));
            }
            // degree bound on the support
            assert!(p.terms().all(|(w, _)| hk.group.length(w) <= lx + ly));
        }
    }
}

#[test]
fn omega_twist() {
    for t in [RootType::A1, RootType::A2, RootType::C2, RootType::A3] {
        let hk = Hecke::abstract_type(t);
        for k in 0..hk.group.omegas.len() {
            for w in ball(&hk, 3) {
                let left = hk.multiply(&hk.h_omega(k), &hk.basis(&w));
                assert_eq!(left, hk.omega_mul(k, &hk.basis(&w)));
                let o = &hk.group.omegas[k].elem;
                let tw = hk.group.multiply(&hk.group.multiply(o, &w), &hk.group.inverse(o));
                assert_eq!(left, hk.multiply(&hk.basis(&tw), &hk.h_omega(k)));
            }
            for k2 in 0..hk.group.omegas.len() {
                let prod = hk.group.multiply(&hk.group.omegas[k].elem, &hk.group.omegas[k2].elem);
                assert_eq!(hk.multiply(&hk.h_omega(k), &hk.h_omega(k2)), hk.basis(&prod));
            }
        }
    }
}

#[test]
fn scale_by_zero_and_identity() {
    let hk = Hecke::abstract_type(RootType::A2);
    let h = hk.h_generator(1);
    assert!(h.scale(&Laurent::zero(1)).is_zero());
    assert_eq!(hk.multiply(&hk.one(), &h), h);
    assert_eq!(hk.multiply(&h, &hk.one()), h);
}

#[test]
fn generator_inverses() {
    for t in RootType::all() {
        let hk = Hecke::abstract_type(t);
        for i in 0..hk.group.num_generators() {
            let p = hk.multiply(&hk.h_generator(i), &hk.generator_inverse(i));
            assert_eq!(p, hk.one());
        }
        for w in ball(&hk, 3) {
            assert_eq!(hk.multiply(&hk.basis(&w), &hk.basis_inverse(&w)), hk.one());
            assert_eq!(hk.multiply(&hk.basis_inverse(&w), &hk.basis(&w)), hk.one());
        }
    }
    // thin parameters: h_s⁻¹ = h_s after evaluation
    let hk = Hecke::abstract_type(RootType::A1);
    let inv = hk.generator_inverse(1);
    let vals: Vec<(WeylElement, f64)> = inv.evaluate(&[1.0]).into_iter().filter(|(_, c)| c.abs() > 1e-12).collect();
    assert_eq!(vals, vec![(hk.group.generator(1).clone(), 1.0)]);
}

#[test]
fn dominant_translation_inverse() {
    let hk = Hecke::abstract_type(RootType::A2);
    let t = WeylElement::translation(Coweight(vec![2, 1]));
    assert_eq!(hk.multiply(&hk.basis(&t), &hk.basis_inverse(&t)), hk.one());
}

#[test]
fn y_elements() {
    let hk = Hecke::abstract_type(RootType::A2);
    let n = 2;
    assert_eq!(hk.y_beta(&Coweight::zero(n)), hk.one());
    assert_eq!(hk.x_beta(&Coweight::zero(n)), hk.one());
    let b = Coweight(vec![1, 0]);
    let hb = hk.basis(&WeylElement::translation(b.clone()));
    let half = Laurent::v_pow(hk.sqrt_q_translation(&b));
    assert_eq!(hk.y_beta(&b).scale(&half), hb);
    assert_eq!(hk.multiply(&hk.y_beta(&b), &hk.y_beta(&b.neg())), hk.one());
    let pts: Vec<Coweight> =
        [[1, 0], [0, 1], [-1, 1], [2, -1], [-1, -1], [0, -2]].iter().map(|p| Coweight(p.to_vec())).collect();
    for x in &pts {
        for y in &pts {
            let yx = hk.multiply(&hk.y_beta(x), &hk.y_beta(y));
            assert_eq!(yx, hk.multiply(&hk.y_beta(y), &hk.y_beta(x)));
            assert_eq!(yx, hk.y_beta(&x.add(y)));
        }
    }
}

#[test]
fn star_basics() {
    let hk = Hecke::abstract_type(RootType::A2);
    for i in 0..3 {
        assert_eq!(hk.star(&hk.h_generator(i)), hk.h_generator(i));
    }
    for w in ball(&hk, 3) {
        let h = hk.basis(&w);
        assert_eq!(hk.star(&hk.star(&h)), h);
        assert_eq!(hk.star(&h), hk.basis(&hk.group.inverse(&w)));
    }
}

#[test]
fn json_round_trip() {
    let hk = Hecke::abstract_type(RootType::C2);
    let elems = ball(&hk, 3);
    let h = random_element(&hk, &elems, &[(3, 2), (17, -5), (40, 7)]);
    let back = hk.from_json(&hk.to_json(&h)).unwrap();
    assert_eq!(back, h);
}

#[test]
fn bernstein_identity_table() {
    let hk = Hecke::abstract_type(RootType::A2);
    let b = Coweight(vec![1, -1]);
    let t = hk.bernstein_coeffs(0, &b, Variant::Unprimed);
    assert_eq!(t.entries.len(), 1);
    assert_eq!(t.entries[&(0, b)], hk.params.one());
}

#[test]
fn bernstein_a1_example() {
    let hk = Hecke::abstract_type(RootType::A1);
    let s1 = hk.group.rs.weyl0.simple[0];
    let b = Coweight(vec![1]);
    let t = hk.bernstein_coeffs(s1, &b, Variant::Unprimed);
    let u = Laurent::u(1, 0);
    assert_eq!(t.entries.len(), 2);
    assert_eq!(t.entries[&(s1, Coweight(vec![-1]))], hk.params.one());
    assert_eq!(t.entries[&(0, b.clone())], &u - &hk.params.one());
    assert_eq!(hk.bernstein_lhs(&t), hk.bernstein_rhs(&t));
}

fn dominant_upto(hk: &Hecke, lmax: u64) -> Vec<Coweight> {
    let n = hk.group.rank();
    let mut pts: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..n {
        pts = pts.into_iter().flat_map(|p| (0..=4).map(move |z| { let mut q = p.clone(); q.push(z); q })).collect();
    }
    pts.into_iter().map(Coweight).filter(|b| hk.group.rs.translation_length(b) <= lmax).collect()
}

#[test]
fn bernstein_tables_reexpand_small() {
    for t in [RootType::A1, RootType::BC1, RootType::A2, RootType::G2] {
        let hk = Hecke::abstract_type(t);
        for beta in dominant_upto(&hk, 2) {
            for w0 in 0..hk.group.rs.weyl0.order() {
                for variant in [Variant::Unprimed, Variant::Primed] {
                    let tab = hk.bernstein_coeffs(w0, &beta, variant);
                    assert_eq!(hk.bernstein_lhs(&tab), hk.bernstein_rhs(&tab), "{t} {w0} {beta} {variant:?}");
                    assert!(hk.table_is_triangular(&tab), "{t} {w0} {beta} {variant:?}");
                    if variant == Variant::Unprimed {
                        let top = (w0, hk.group.rs.weyl0.act(hk.group.rs.weyl0.inv(w0), &beta));
                        assert_eq!(tab.entries[&top], hk.params.one());
                    }
                }
            }
        }
    }
}

#[test]
fn bernstein_relation_for_non_dominant_beta() {
    let hk = Hecke::abstract_type(RootType::BC1);
    let s1 = hk.group.rs.weyl0.simple[0];
    for z in -3..=3 {
        let tab = hk.bernstein_coeffs(s1, &Coweight(vec![z]), Variant::Unprimed);
        assert_eq!(hk.bernstein_lhs(&tab), hk.bernstein_rhs(&tab), "β = {z}");
    }
}

#[test]
fn to_bernstein_examples_and_round_trip() {
    for t in RootType::all() {
        let hk = Hecke::abstract_type(t);
        let conv = BernsteinBasis::new(&hk).unwrap();
        let n = hk.group.rank();
        for f in 0..hk.group.rs.weyl0.order() {
            let m = conv.to_bernstein(&hk.basis_fin(f));
            assert_eq!(m.len(), 1);
            assert_eq!(m[&(f, Coweight::zero(n))], hk.params.one());
        }
        for beta in dominant_upto(&hk, 4) {
            let m = conv.to_bernstein(&hk.basis(&WeylElement::translation(beta.clone())));
            assert_eq!(m.len(), 1);
            assert_eq!(m[&(0, beta.clone())], Laurent::v_pow(hk.sqrt_q_translation(&beta)));
        }
        let radius = if t == RootType::A3 { 2 } else { 3 };
        for w in ball(&hk, radius) {
            let h = hk.basis(&w);
            assert_eq!(conv.from_bernstein(&conv.to_bernstein(&h)), h, "{t} {}", hk.group.label(&w));
        }
    }
}

#[test]
fn poincare_small() {
    let hk = Hecke::abstract_type(RootType::A1);
    let l0 = hk.poincare_truncated(0).unwrap();
    let sum_omega = (0..2).fold(hk.zero(), |acc, k| acc.add(&hk.h_omega(k)));
    assert_eq!(l0.values().cloned().collect::<Vec<_>>(), vec![sum_omega]);
    assert!(hk.poincare_identity_check(8).unwrap());
    for t in [RootType::BC1, RootType::C2, RootType::G2] {
        assert!(Hecke::abstract_type(t).poincare_identity_check(5).unwrap(), "{t}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn ring_laws(picks in proptest::collection::vec((0usize..1000, -4i64..=4), 9)) {
        let hk = Hecke::abstract_type(RootType::A2);
        let elems = ball(&hk, 3);
        let a = random_element(&hk, &elems, &picks[0..3]);
        let b = random_element(&hk, &elems, &picks[3..6]);
        let c = random_element(&hk, &elems, &picks[6..9]);
        prop_assert_eq!(hk.multiply(&hk.multiply(&a, &b), &c), hk.multiply(&a, &hk.multiply(&b, &c)));
        prop_assert_eq!(hk.multiply(&a, &b.add(&c)), hk.multiply(&a, &b).add(&hk.multiply(&a, &c)));
        prop_assert_eq!(hk.star(&hk.multiply(&a, &b)), hk.multiply(&hk.star(&b), &hk.star(&a)));
    }
}

#[test]
fn bernstein_coefficient_bounds() {
    for t in [RootType::A1, RootType::A2, RootType::C2] {
        for q in [2, 3] {
            let g = AffineWeyl::of_type(t);
            let p = ParamSystem::equal(&g, q);
            let hk = Hecke::new(g, p).unwrap();
            let w0 = hk.group.rs.weyl0.longest;
            for beta in dominant_upto(&hk, 3) {
                for variant in [Variant::Unprimed, Variant::Primed] {
                    let tab = hk.bernstein_coeffs(w0, &beta, variant);
                    for row in hk.table_bounds(&tab).unwrap() {
                        assert!(row.sum_abs <= row.bound + 1e-9, "{t} q={q} {beta} {variant:?} {row:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn poincare_a2() {
    assert!(Hecke::abstract_type(RootType::A2).poincare_identity_check(6).unwrap());
}
