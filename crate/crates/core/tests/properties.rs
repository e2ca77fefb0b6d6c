use std::collections::BTreeSet;

use alg2d_core::algebra::{add, e1, e2, scale, Element, Msc, ProjPoint};
use alg2d_core::catalog::{instantiate, Budget, FamilyId, Regime};
use alg2d_core::census::{msc_of, msc_space, oracle_census};
use alg2d_core::field::{embed, Field, GaloisField, Rationals};
use alg2d_core::poly::{classify_cubic, poly_gcd, roots_in_field, CountCategory, RootSet, UPoly};
use alg2d_core::report::{analyze_finite, AnalysisReport, AnalyzeOptions};
use alg2d_core::solvers::{idempotents, left_quasiunits, p_a, subalgebra_count_closed};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const FIELDS: [(u64, u32); 11] = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (5, 2), (3, 3), (7, 2), (11, 2)];

fn gf(p: u64, k: u32) -> GaloisField {
    GaloisField::new(p, k).unwrap()
}

/// A field from `FIELDS` and `n` of its elements.
fn field_and(n: usize) -> impl Strategy<Value = (GaloisField, Vec<u32>)> {
    (0..FIELDS.len()).prop_flat_map(move |i| {
        let (p, k) = FIELDS[i];
        let f = gf(p, k);
        let q = f.size();
        (Just(f), prop::collection::vec(0..q, n))
    })
}

fn msc(f: &GaloisField, v: &[u32]) -> Msc<GaloisField> {
    Msc::new(f, [v[0], v[1], v[2], v[3]], [v[4], v[5], v[6], v[7]])
}

fn el(v: &[u32]) -> Element<u32> {
    Element::new(v[0], v[1])
}

proptest! {
    #[test]
    fn finite_field_axioms((f, v) in field_and(3)) {
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
        if a != f.zero() {
            prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
        } else {
            prop_assert!(f.inv(&a).is_err());
        }
    }

    #[test]
    fn rational_field_axioms(n in prop::array::uniform3(-50i64..50), d in prop::array::uniform3(1i64..30)) {
        let q = Rationals;
        let r = |i: usize| BigRational::new(BigInt::from(n[i]), BigInt::from(d[i]));
        let (a, b, c) = (r(0), r(1), r(2));
        prop_assert_eq!(q.mul(&q.mul(&a, &b), &c), q.mul(&a, &q.mul(&b, &c)));
        prop_assert_eq!(q.mul(&a, &q.add(&b, &c)), q.add(&q.mul(&a, &b), &q.mul(&a, &c)));
        if !q.is_zero(&a) {
            prop_assert_eq!(q.mul(&a, &q.inv(&a).unwrap()), q.one());
        }
    }

    #[test]
    fn embeddings_are_homomorphisms(i in 0usize..4, a in 0u32..1000, b in 0u32..1000) {
        let (src, dst) = [(gf(3, 1), gf(3, 2)), (gf(2, 2), gf(2, 4)), (gf(5, 1), gf(5, 2)), (gf(3, 2), gf(3, 6))][i].clone();
        let e = embed(&src, &dst).unwrap();
        let (a, b) = (a % src.size(), b % src.size());
        prop_assert_eq!(e.apply(src.add(&a, &b)), dst.add(&e.apply(a), &e.apply(b)));
        prop_assert_eq!(e.apply(src.mul(&a, &b)), dst.mul(&e.apply(a), &e.apply(b)));
    }

    #[test]
    fn product_is_bilinear((f, v) in field_and(16)) {
        let a = msc(&f, &v[..8]);
        let (u, w, x) = (el(&v[8..10]), el(&v[10..12]), el(&v[12..14]));
        let (s, t) = (v[14], v[15]);
        let comb = add(&f, &scale(&f, &s, &u), &scale(&f, &t, &w));
        prop_assert_eq!(
            a.mul(&comb, &x),
            add(&f, &scale(&f, &s, &a.mul(&u, &x)), &scale(&f, &t, &a.mul(&w, &x)))
        );
        prop_assert_eq!(
            a.mul(&x, &comb),
            add(&f, &scale(&f, &s, &a.mul(&x, &u)), &scale(&f, &t, &a.mul(&x, &w)))
        );
    }

    #[test]
    fn checkers_ignore_the_representative((f, v) in field_and(10)) {
        let a = msc(&f, &v[..8]);
        let (y, k) = (v[8], if v[9] == 0 { f.one() } else { v[9] });
        let u = Element::new(k, f.mul(&k, &y));
        let spans = |w: &Element<u32>| f.mul(&w.x, &u.y) == f.mul(&w.y, &u.x);
        let p = ProjPoint::Affine(y);
        prop_assert_eq!(a.is_subalgebra(&p).is_some(), spans(&a.mul(&u, &u)));
        let basis = [e1(&f), e2(&f)];
        prop_assert_eq!(a.is_left_ideal(&p).is_some(), basis.iter().all(|b| spans(&a.mul(b, &u))));
        prop_assert_eq!(a.is_right_ideal(&p).is_some(), basis.iter().all(|b| spans(&a.mul(&u, b))));
    }

    #[test]
    fn solver_sets_are_self_consistent(i in 0usize..5, v in prop::collection::vec(0u32..1000, 8), seed in any::<u64>()) {
        let f = [gf(2, 1), gf(3, 1), gf(2, 2), gf(5, 1), gf(7, 1)][i].clone();
        let v: Vec<u32> = v.iter().map(|x| x % f.size()).collect();
        let a = msc(&f, &v);
        for u in idempotents(&a).materialize().unwrap() {
            prop_assert!(a.is_idempotent(&u));
        }
        let mut s = seed;
        let mut next = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 33) as u32) % f.size()
        };
        for e in left_quasiunits(&a).materialize(&f).unwrap() {
            prop_assert!(a.is_left_quasiunit(&e));
            for _ in 0..100 {
                let u = Element::new(next(), next());
                let w = Element::new(next(), next());
                prop_assert!(a.quasiunit_identity_holds(&e, &u, &w));
            }
        }
    }

    #[test]
    fn roots_and_gcd(c1 in prop::collection::vec(0u32..7, 1..6), c2 in prop::collection::vec(0u32..7, 1..6)) {
        let f = gf(7, 1);
        let p = UPoly::new(&f, c1);
        let q = UPoly::new(&f, c2);
        if let RootSet::Roots(r) = roots_in_field(&p) {
            prop_assert!(r.iter().all(|x| p.eval(x) == 0));
            prop_assert_eq!(r.iter().collect::<BTreeSet<_>>().len(), r.len());
        }
        let g = poly_gcd(&p, &q).unwrap();
        if !g.is_zero() {
            prop_assert!(p.rem(&g).unwrap().is_zero());
            prop_assert!(q.rem(&g).unwrap().is_zero());
            for x in 0..7 {
                if p.eval(&x) == 0 && q.eval(&x) == 0 {
                    prop_assert_eq!(g.eval(&x), 0);
                }
            }
        }
    }

    #[test]
    fn reports_round_trip_through_json(i in 0usize..4, v in prop::collection::vec(0u32..1000, 8), closed in any::<bool>()) {
        let f = [gf(3, 1), gf(5, 1), gf(2, 2), gf(3, 2)][i].clone();
        let v: Vec<u32> = v.iter().map(|x| x % f.size()).collect();
        let r = analyze_finite(&msc(&f, &v), AnalyzeOptions { closed, oracle: true }).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: AnalysisReport = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}

#[test]
fn embedding_gf2_into_gf4_exhaustively() {
    let (s, d) = (gf(2, 1), gf(2, 2));
    let e = embed(&s, &d).unwrap();
    for a in 0..2 {
        for b in 0..2 {
            assert_eq!(e.apply(s.add(&a, &b)), d.add(&e.apply(a), &e.apply(b)));
            assert_eq!(e.apply(s.mul(&a, &b)), d.mul(&e.apply(a), &e.apply(b)));
        }
    }
}

#[test]
fn enumeration_has_every_element_once() {
    for (p, k) in FIELDS {
        let f = gf(p, k);
        let els = f.elements().unwrap();
        assert_eq!(els.len() as u64, p.pow(k));
        assert_eq!(els.iter().collect::<BTreeSet<_>>().len(), els.len());
    }
}

#[test]
fn oracle_equivalence_on_samples() {
    for (p, k) in [(5, 1), (7, 1), (2, 2), (3, 2)] {
        let c = oracle_census(&gf(p, k), Budget::Samples(10_000), 3).unwrap();
        assert_eq!(c.algebras, 10_000);
        assert!(c.disagreements.is_empty(), "{}", c.disagreements[0]);
    }
}

#[test]
fn closed_subalgebra_count_is_never_zero_and_matches_the_cubic_classifier() {
    for p in [2, 3] {
        let f = gf(p, 1);
        for v in msc_space(&f, Budget::Exhaustive, 0).1 {
            let a = msc_of(&f, &v);
            let closed = subalgebra_count_closed(&a).unwrap();
            assert_ne!(closed, CountCategory::Zero, "{}", a.format());
            let pa = p_a(&a);
            let c = |i| pa.coeff(i);
            let cubic = classify_cubic(&f, &c(3), &c(2), &c(1), &c(0));
            let expect = match (cubic, *a.a4() == 0) {
                (CountCategory::Infinite, _) | (_, false) => cubic,
                (c, true) => CountCategory::from_count(c as usize + 1).unwrap(),
            };
            assert_eq!(closed, expect, "{}", a.format());
        }
    }
}

#[test]
fn families_refuse_the_wrong_characteristic() {
    let fields = [gf(5, 1), gf(2, 1), gf(3, 1)];
    for regime in Regime::ALL {
        for fam in FamilyId::all(regime) {
            for f in &fields {
                let ok = Regime::of_characteristic(f.p().into()) == regime;
                assert_eq!(instantiate(fam, &vec![0; fam.arity()], f).is_ok(), ok, "{fam} over {}", f.spec());
            }
        }
    }
}

/// The printed cubic of each family, as `[c0, c1, c2, c3]` from the parameters.
fn printed_cubic(f: &GaloisField, index: u8, p: &[u32]) -> Option<[u32; 4]> {
    let k = |n: i64| f.from_i64(n);
    let lin = |a: u32, b: i64, c: u32| f.sub(&f.sub(&f.mul(&k(b), &a), &c), &k(1));
    Some(match index {
        // a4 y^3 + (3a2+1) y^2 + (3a1-1) y - b1
        1 => [f.neg(&p[3]), lin(p[0], 3, 0), f.add(&f.mul(&k(3), &p[1]), &k(1)), p[2]],
        // y^3 + (2a1-b2-1) y - b1
        2 => [f.neg(&p[1]), lin(p[0], 2, p[2]), 0, k(1)],
        // 3y^2 - y(1+b2) - b1
        3 => [f.neg(&p[0]), f.neg(&f.add(&k(1), &p[1])), k(3), 0],
        // (2a1-b2-1) y
        4 => [0, lin(p[0], 2, p[1]), 0, 0],
        5 | 9 | 12 => [k(-1), 0, 0, 0],
        // y^3 + (3a1-1) y - b1
        6 => [f.neg(&p[1]), lin(p[0], 3, 0), 0, k(1)],
        // 3y^2 - y - b1
        7 => [f.neg(&p[0]), k(-1), k(3), 0],
        // (3a1-1) y
        8 => [0, lin(p[0], 3, 0), 0, 0],
        _ => return None,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn instantiated_families_have_the_printed_cubics(i in 0usize..4, raw in prop::collection::vec(0u32..1000, 4)) {
        let f = [gf(5, 1), gf(7, 1), gf(11, 1), gf(5, 2)][i].clone();
        for fam in FamilyId::all(Regime::CharNe23) {
            let params: Vec<u32> = raw[..fam.arity()].iter().map(|x| x % f.size()).collect();
            let Some(cubic) = printed_cubic(&f, fam.index(), &params) else { continue };
            let a = instantiate(fam, &params, &f).unwrap();
            prop_assert_eq!(p_a(&a), UPoly::new(&f, cubic.to_vec()), "{}", fam);
        }
    }
}
