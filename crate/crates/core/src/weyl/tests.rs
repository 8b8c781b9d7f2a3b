use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use proptest::prelude::*;

use super::*;
use crate::laurent::Laurent;

/// Word length by 0-1 BFS over right multiplication by `S` (cost 1) and `Ω̂` (cost 0).
fn bfs_lengths(g: &AffineWeyl, radius: usize) -> HashMap<WeylElement, usize> {
    let mut dist = HashMap::new();
    let mut dq = VecDeque::new();
    dist.insert(g.identity(), 0);
    dq.push_back(g.identity());
    while let Some(w) = dq.pop_front() {
        let d = dist[&w];
        for o in &g.omegas {
            let x = g.multiply(&w, &o.elem);
            if dist.get(&x).is_none_or(|&e| e > d) {
                dist.insert(x.clone(), d);
                dq.push_front(x);
            }
        }
        if d == radius {
            continue;
        }
        for i in 0..g.num_generators() {
            let x = g.multiply(&w, g.generator(i));
            if dist.get(&x).is_none_or(|&e| e > d + 1) {
                dist.insert(x.clone(), d + 1);
                dq.push_back(x);
            }
        }
    }
    dist
}

#[test]
fn length_matches_bfs_oracle() {
    for t in RootType::all() {
        let g = AffineWeyl::of_type(t);
        let radius = if t == RootType::A3 { 6 } else { 8 };
        let oracle = bfs_lengths(&g, radius);
        for (w, d) in &oracle {
            assert_eq!(g.length(w), *d, "{t}: {w:?}");
        }
        let ball = g.enumerate_ball(radius).unwrap();
        assert_eq!(ball.len(), oracle.len(), "{t}");
    }
}

#[test]
fn word_examples() {
    let a1 = AffineWeyl::load("A1").unwrap();
    assert_eq!(a1.from_word("").unwrap(), a1.identity());
    assert_eq!(a1.from_word("s0 w1").unwrap(), WeylElement::translation(Coweight(vec![1])));
    let bc1 = AffineWeyl::load("BC1").unwrap();
    assert_eq!(bc1.from_word("s0 s1").unwrap(), WeylElement::translation(Coweight(vec![1])));
    assert!(matches!(a1.from_word("s2"), Err(Error::Usage(_))));
    assert!(matches!(a1.from_word("w5"), Err(Error::Usage(_))));
}

#[test]
fn generators_have_length_one_and_omegas_zero() {
    for t in RootType::all() {
        let g = AffineWeyl::of_type(t);
        for i in 0..g.num_generators() {
            assert_eq!(g.length(g.generator(i)), 1);
            assert_eq!(g.multiply(g.generator(i), g.generator(i)), g.identity());
        }
        for o in &g.omegas {
            assert_eq!(g.length(&o.elem), 0);
        }
        assert_eq!(g.omegas.len(), g.rs.omega_reps.len());
        let types: BTreeSet<usize> = g.omegas.iter().map(|o| o.perm[0]).collect();
        let good: BTreeSet<usize> = g.rs.good_types.iter().copied().collect();
        assert_eq!(types, good, "{t}: Ω̂ ↔ good types");
        assert_eq!(g.omegas[0].name, "w0");
        assert_eq!(g.omegas[0].elem, g.identity());
    }
}

#[test]
fn a1_omega_is_the_flip() {
    let g = AffineWeyl::load("A1").unwrap();
    assert_eq!(g.omegas.len(), 2);
    let w = &g.omegas[1];
    assert_eq!(w.name, "w1");
    assert_eq!(w.perm, vec![1, 0]);
    assert_eq!(g.act(&w.elem, &Coweight(vec![0])), Coweight(vec![1]));
}

#[test]
fn reduced_words_round_trip() {
    for t in RootType::all() {
        let g = AffineWeyl::of_type(t);
        for (w, l) in g.enumerate_ball(6).unwrap() {
            let rw = g.reduced_word(&w);
            assert_eq!(rw.letters.len(), l);
            assert_eq!(g.from_letters(&rw.letters, rw.omega), w);
            assert_eq!(g.from_word(&g.word_string(&rw)).unwrap(), w);
        }
    }
}

#[test]
fn length_changes_by_one() {
    for t in RootType::all() {
        let g = AffineWeyl::of_type(t);
        for (w, l) in g.enumerate_ball(5).unwrap() {
            for i in 0..g.num_generators() {
                let ls = g.length(&g.multiply(&w, g.generator(i)));
                assert!(ls + 1 == l || ls == l + 1);
            }
        }
    }
}

#[test]
fn a1_ball_counts() {
    let g = AffineWeyl::load("A1").unwrap();
    for m in 0..=10 {
        assert_eq!(g.enumerate_ball(m).unwrap().len(), 2 * (2 * m + 1));
    }
    assert!(matches!(g.enumerate_ball(15), Err(Error::Resource(_))));
}

#[test]
fn ball_growth_bound_and_monotone() {
    for t in RootType::all() {
        let g = AffineWeyl::of_type(t);
        let mut prev = 0;
        for l in 0..=6 {
            let c = g.enumerate_ball(l).unwrap().len();
            assert!(c > prev || l == 0);
            assert!(c as u64 <= g.growth_bound(l));
            prev = c;
        }
    }
    let a2 = AffineWeyl::load("A2").unwrap();
    assert!(a2.enumerate_ball(8).unwrap().len() as u64 <= a2.growth_bound(8));
}

#[test]
fn fundamental_box_examples() {
    let a1 = AffineWeyl::load("A1").unwrap();
    let b: BTreeSet<_> = a1.fundamental_box().iter().cloned().collect();
    let expect: BTreeSet<_> = [a1.identity(), a1.omegas[1].elem.clone()].into_iter().collect();
    assert_eq!(b, expect);
    let bc1 = AffineWeyl::load("BC1").unwrap();
    let b: BTreeSet<_> = bc1.fundamental_box().iter().cloned().collect();
    let expect: BTreeSet<_> = [bc1.identity(), bc1.generator(0).clone()].into_iter().collect();
    assert_eq!(b, expect);
    for t in RootType::all() {
        let g = AffineWeyl::of_type(t);
        assert_eq!(g.fundamental_box().len(), g.rs.weyl0.order());
        assert!(g.fundamental_box().iter().all(|a| g.in_box(a)));
    }
}

#[test]
fn box_membership_matches_exhaustive_scan() {
    for t in RootType::all() {
        let g = AffineWeyl::of_type(t);
        let radius = g.fundamental_box().iter().map(|a| g.length(a)).max().unwrap();
        let found: BTreeSet<_> = g.enumerate_ball(radius).unwrap().into_iter().map(|(w, _)| w).filter(|w| g.in_box(w)).collect();
        let expect: BTreeSet<_> = g.fundamental_box().iter().cloned().collect();
        assert_eq!(found, expect, "{t}");
    }
}

#[test]
fn structure_examples() {
    let a1 = AffineWeyl::load("A1").unwrap();
    assert_eq!(a1.structure_decompose(&a1.identity()), (0, Coweight(vec![0]), a1.identity()));
    let b1 = a1.from_word("s0 w1").unwrap();
    assert_eq!(a1.structure_decompose(&b1), (0, Coweight(vec![1]), a1.identity()));
}

fn check_structure(g: &AffineWeyl, radius: usize) {
    let ball = g.enumerate_ball(radius).unwrap();
    let mut seen = HashSet::new();
    for (w, l) in &ball {
        let (w0, beta, a) = g.structure_decompose(w);
        assert!(beta.is_dominant());
        assert!(g.in_box(&a));
        let fin = WeylElement::finite(g.rank(), w0);
        let back = g.multiply(&g.multiply(&fin, &WeylElement::translation(beta.clone())), &a);
        assert_eq!(&back, w);
        let sum = g.length(&fin) + g.rs.translation_length(&beta) as usize + g.length(&a);
        assert_eq!(sum, *l);
        assert!(seen.insert((w0, beta, a)));
    }
    // every triple with additive length ≤ radius appears
    let mut count = 0;
    let maxz = radius as i64;
    let n = g.rank();
    let mut pts: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..n {
        pts = pts.into_iter().flat_map(|p| (0..=maxz).map(move |z| { let mut q = p.clone(); q.push(z); q })).collect();
    }
    for p in pts {
        let beta = Coweight(p);
        let lb = g.rs.translation_length(&beta) as usize;
        if lb > radius {
            continue;
        }
        for f in 0..g.rs.weyl0.order() {
            for a in g.fundamental_box() {
                if g.rs.weyl0.lengths[f] + lb + g.length(a) <= radius {
                    count += 1;
                }
            }
        }
    }
    assert_eq!(count, ball.len());
}

#[test]
fn structure_theorem_small_balls() {
    for t in RootType::all() {
        let g = AffineWeyl::of_type(t);
        check_structure(&g, if t == RootType::A3 { 5 } else { 7 });
    }
}

#[test]
fn translation_length_agrees_with_group_length() {
    for t in RootType::all() {
        let g = AffineWeyl::of_type(t);
        for (w, l) in g.enumerate_ball(8).unwrap() {
            if w.is_translation() {
                assert_eq!(g.rs.translation_length(&w.beta) as usize, l);
            }
        }
        // additivity on P⁺ and W₀-invariance
        let b = Coweight(vec![1; g.rank()]);
        let b2 = b.scale(3);
        assert_eq!(g.rs.translation_length(&b2), 3 * g.rs.translation_length(&b));
        for f in 0..g.rs.weyl0.order() {
            assert_eq!(g.rs.translation_length(&g.rs.weyl0.act(f, &b2)), g.rs.translation_length(&b2));
        }
    }
}

#[test]
fn parameter_classes() {
    let expect = [
        (RootType::A1, vec![0, 0]),
        (RootType::BC1, vec![0, 1]),
        (RootType::A2, vec![0, 0, 0]),
        (RootType::A3, vec![0, 0, 0, 0]),
        (RootType::C2, vec![0, 1, 0]),
        (RootType::G2, vec![0, 1, 0]),
    ];
    for (t, classes) in expect {
        let g = AffineWeyl::of_type(t);
        assert_eq!(ParamSystem::finest(&g).class_of, classes, "{t}");
    }
    let a1 = AffineWeyl::load("A1").unwrap();
    assert_eq!(a1.coxeter_m(0, 1), None);
    let c2 = AffineWeyl::load("C2").unwrap();
    assert_eq!(c2.coxeter_m(0, 1), Some(4));
    assert_eq!(c2.coxeter_m(0, 2), Some(2));
}

#[test]
fn numeric_parameters_reject_inconsistent_classes() {
    let a2 = AffineWeyl::load("A2").unwrap();
    let r = |x: i128| crate::laurent::Rational::from_integer(x);
    assert!(ParamSystem::numeric(&a2, &[("s0".into(), r(2)), ("s1".into(), r(3))], None).is_err());
    assert!(ParamSystem::numeric(&a2, &[("s0".into(), r(2))], None).is_ok());
    assert!(ParamSystem::numeric(&a2, &[("s0".into(), r(0))], None).is_err());
}

#[test]
fn parabolic_weight_examples() {
    let a2 = AffineWeyl::load("A2").unwrap();
    let p = ParamSystem::finest(&a2);
    assert_eq!(a2.parabolic_weight(&[], &p).unwrap(), Laurent::one(1));
    let u = Laurent::u(1, 0);
    assert_eq!(a2.parabolic_weight(&[1], &p).unwrap(), &Laurent::one(1) + &u);
    let u2 = &u * &u;
    let u3 = &u2 * &u;
    let expect = &(&(&Laurent::one(1) + &u.scale(&2.into())) + &u2.scale(&2.into())) + &u3;
    assert_eq!(a2.parabolic_weight(&[1, 2], &p).unwrap(), expect);
    assert!(matches!(a2.parabolic_weight(&[0, 1, 2], &p), Err(Error::Usage(_))));
}

#[test]
fn double_coset_examples() {
    let a1 = AffineWeyl::load("A1").unwrap();
    let p = ParamSystem::finest(&a1);
    let dd = a1.double_coset_min(&[1], &[1], &a1.identity(), &p).unwrap();
    assert_eq!(dd.d_min, a1.identity());
    assert_eq!(dd.n_d, a1.parabolic_weight(&[1], &p).unwrap());
    let w = a1.from_word("s1 s0").unwrap();
    let dd = a1.double_coset_min(&[1], &[], &w, &p).unwrap();
    assert_eq!(dd.d_min, *a1.generator(0));
    // (1 + q) q: the two chambers of the coset each contribute their own q_w
    let u = Laurent::u(1, 0);
    assert_eq!(dd.q_d, &u + &(&u * &u));
}

/// `q_d = Σ_{cosets x W_{I₂} ⊂ D} q_{min(x W_{I₂})}` by explicit enumeration.
#[test]
fn double_coset_counts_by_enumeration() {
    let g = AffineWeyl::load("A2").unwrap();
    let p = ParamSystem::finest(&g);
    let subsets: Vec<Vec<usize>> = vec![vec![], vec![0], vec![1], vec![2], vec![0, 1], vec![1, 2], vec![0, 2]];
    for (w, _) in g.enumerate_ball(6).unwrap() {
        for i1 in &subsets {
            for i2 in &subsets {
                let dd = g.double_coset_min(i1, i2, &w, &p).unwrap();
                let g1 = g.parabolic_subgroup(i1).unwrap();
                let g2 = g.parabolic_subgroup(i2).unwrap();
                let mut cosets: BTreeSet<Vec<WeylElement>> = BTreeSet::new();
                for x in &g1 {
                    let xw = g.multiply(x, &w);
                    let mut c: Vec<WeylElement> = g2.iter().map(|y| g.multiply(&xw, y)).collect();
                    c.sort();
                    cosets.insert(c);
                }
                let mut oracle = Laurent::zero(1);
                for c in &cosets {
                    let m = c.iter().min_by_key(|x| g.length(x)).unwrap();
                    oracle.add_assign_ref(&p.q_w(&g, m));
                }
                assert_eq!(dd.q_d, oracle);
                let lhs = &dd.q_d * &dd.n_d;
                let rhs = &g.parabolic_weight(i1, &p).unwrap() * &p.q_w(&g, &dd.d_min);
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn sector_length_examples() {
    let a1 = AffineWeyl::load("A1").unwrap();
    let p = ParamSystem::finest(&a1);
    assert_eq!(a1.sector_length(&a1.identity(), &p), (0, vec![0]));
    let t = WeylElement::translation(Coweight(vec![1]));
    assert_eq!(a1.sector_length(&t, &p), (-1, vec![-1]));
    for t in RootType::all() {
        let g = AffineWeyl::of_type(t);
        let p = ParamSystem::finest(&g);
        let b = Coweight(vec![1; g.rank()]).scale(2);
        let (l, e) = g.sector_length(&WeylElement::translation(b.clone()), &p);
        assert_eq!(l, -(g.rs.translation_length(&b) as i64));
        assert_eq!(e, p.u_exponents(&g, &WeylElement::translation(b)).iter().map(|x| -x).collect::<Vec<_>>());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn group_laws(ti in 0usize..6, a in 0usize..200, b in 0usize..200, c in 0usize..200) {
        let g = AffineWeyl::of_type(RootType::all()[ti]);
        let ball = g.enumerate_ball(4).unwrap();
        let x = &ball[a % ball.len()].0;
        let y = &ball[b % ball.len()].0;
        let z = &ball[c % ball.len()].0;
        prop_assert_eq!(g.multiply(x, &g.inverse(x)), g.identity());
        prop_assert_eq!(g.inverse(&g.multiply(x, y)), g.multiply(&g.inverse(y), &g.inverse(x)));
        prop_assert_eq!(g.multiply(&g.multiply(x, y), z), g.multiply(x, &g.multiply(y, z)));
        prop_assert_eq!(g.length(&g.inverse(x)), g.length(x));
        let beta = y.beta.clone();
        prop_assert_eq!(g.act(&WeylElement::translation(beta.clone()), &z.beta), z.beta.add(&beta));
    }

    #[test]
    fn sector_length_split_independent(ti in 0usize..6, f in 0usize..24, z in proptest::collection::vec(-3i64..=3, 3), k in proptest::collection::vec(0i64..=3, 3)) {
        let g = AffineWeyl::of_type(RootType::all()[ti]);
        let p = ParamSystem::finest(&g);
        let n = g.rank();
        let beta = Coweight(z[..n].to_vec());
        let w = WeylElement { beta: beta.clone(), fin: f % g.rs.weyl0.order() };
        let (b1, b2) = beta.dominant_split();
        let extra = Coweight(k[..n].to_vec());
        let base = g.sector_length(&w, &p);
        let shifted = g.sector_length_split(&w, &b1.add(&extra), &b2.add(&extra), &p);
        prop_assert_eq!(base, shifted);
    }
}
