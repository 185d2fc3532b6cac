use std::collections::BTreeSet;

use proptest::prelude::*;

use parabolica::acceptance::sample::{conjugate, Sampler};
use parabolica::catalog::Classical;
use parabolica::parabolic::ParabolicData;
use parabolica::ratmat::{minimal_polynomial, rat, rref, BilinearForm, Matrix, Poly, Rational, Subspace, Vector};

fn small() -> impl Strategy<Value = Rational> {
    (-3i64..=3).prop_map(rat)
}

fn vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(small(), n), 0..=max)
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(small(), n), n).prop_map(Matrix::from_rows)
}

fn classical(k: usize) -> Classical {
    match k % 3 {
        0 => Classical::gl(3),
        1 => Classical::gl(4),
        _ => Classical::so(3, 2),
    }
    .unwrap()
}

/// A random conjugate of a random standard parabolic, with its type.
fn sampled_parabolic(c: &Classical, s: &mut Sampler) -> (BTreeSet<usize>, ParabolicData) {
    let frame = c.standard_frame().unwrap();
    let a = s.exp_ad(frame).unwrap();
    s.parabolic(frame, &a).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sum_and_intersection_dimensions(a in vectors(5, 4), b in vectors(5, 4)) {
        let (s, t) = (Subspace::span(5, a), Subspace::span(5, b));
        let (sum, meet) = (s.sum(&t), s.intersect(&t));
        prop_assert!(sum.contains(&s) && sum.contains(&t));
        prop_assert!(s.contains(&meet) && t.contains(&meet));
        prop_assert_eq!(sum.dim() + meet.dim(), s.dim() + t.dim());
    }

    #[test]
    fn perp_reverses_inclusion_and_is_an_involution(gram in matrix(4), a in vectors(4, 3), b in vectors(4, 2)) {
        let gram = gram.add(&gram.transpose());
        let form = BilinearForm::new(gram);
        prop_assume!(form.is_nondegenerate());
        let t = Subspace::span(4, a);
        let s = t.sum(&Subspace::span(4, b));
        prop_assert!(t.perp(&form).contains(&s.perp(&form)));
        prop_assert_eq!(s.perp(&form).perp(&form), s);
    }

    #[test]
    fn rref_is_idempotent(m in matrix(4)) {
        let r = rref(&m);
        prop_assert_eq!(rref(&r), r);
    }

    #[test]
    fn rational_roots_of_products(roots in prop::collection::vec((-20i64..=20, 1i64..=6), 1..5)) {
        let roots: Vec<Rational> = roots.iter().map(|&(n, d)| Rational::new(n.into(), d.into())).collect();
        let p = roots.iter().fold(Poly::one(), |acc, r| acc.mul(&Poly::linear(r)));
        let p = p.mul(&Poly::new(vec![rat(3), rat(0), rat(1)]));
        let (found, rest) = p.rational_roots();
        let expected: BTreeSet<Rational> = roots.into_iter().collect();
        prop_assert_eq!(found.into_iter().collect::<BTreeSet<_>>(), expected);
        prop_assert_eq!(rest, Poly::new(vec![rat(3), rat(0), rat(1)]));
    }

    #[test]
    fn minimal_polynomial_annihilates(m in matrix(4)) {
        let mp = minimal_polynomial(&m);
        prop_assert!(mp.eval_matrix(&m).is_zero());
        // Cayley-Hamilton bounds the degree
        prop_assert!(mp.degree().unwrap() <= 4);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exp_ad_preserves_bracket_and_trace_form(seed in any::<u64>(), k in 0usize..3) {
        let c = classical(k);
        let g = c.algebra();
        let mut s = Sampler::new(seed);
        let (_, p) = sampled_parabolic(&c, &mut s);
        let x = s.element(p.nilradical());
        prop_assert!(g.is_ad_nilpotent(&x));
        let a = g.exp_ad(&x).unwrap();
        prop_assert!(g.is_automorphism(&a));
        let form = g.trace_form().unwrap();
        prop_assert_eq!(&form.pullback(&a), form);
    }

    #[test]
    fn transporter_of_a_perp_is_the_perp_of_a_bracket(seed in any::<u64>(), k in 0usize..3) {
        let c = classical(k);
        let g = c.algebra();
        let form = g.trace_form().unwrap();
        let mut s = Sampler::new(seed);
        let (ds, dt) = (1 + s.below(3), 1 + s.below(3));
        let a = s.subspace(g.dim(), ds);
        let b = s.subspace(g.dim(), dt);
        prop_assert_eq!(g.transporter(&a, &b.perp(form)), g.bracket_spaces(&a, &b).perp(form));
    }

    #[test]
    fn conjugated_parabolics_keep_their_type(seed in any::<u64>(), k in 0usize..3) {
        let c = classical(k);
        let frame = c.standard_frame().unwrap();
        let mut s = Sampler::new(seed);
        let (j, p) = sampled_parabolic(&c, &mut s);
        prop_assert!(parabolica::parabolic::is_parabolic(c.algebra(), p.space()).unwrap().is_parabolic());
        prop_assert_eq!(frame.type_of_any(&p).unwrap(), j);
    }

    #[test]
    fn grading_lift_torsor_is_the_nilradical(seed in any::<u64>(), k in 0usize..3) {
        let c = classical(k);
        let mut s = Sampler::new(seed);
        let (_, p) = sampled_parabolic(&c, &mut s);
        let lift = p.grading_lift(p.space()).unwrap();
        prop_assert!(p.is_grading_lift(&lift.xi));
        prop_assert_eq!(&lift.torsor, p.nilradical());
        let op = p.opposite(&lift.xi).unwrap();
        prop_assert!(p.is_opposite(&op).unwrap());
    }

    #[test]
    fn costandard_pairs_meet_in_a_parabolic(seed in any::<u64>(), k in 0usize..3) {
        let c = classical(k);
        let g = c.algebra();
        let frame = c.standard_frame().unwrap();
        let mut s = Sampler::new(seed);
        // a shared conjugator makes the pair costandard
        let a = s.exp_ad(frame).unwrap();
        let (_, p) = s.parabolic(frame, &a).unwrap();
        let (_, q) = s.parabolic(frame, &a).unwrap();
        prop_assert!(p.is_costandard(&q).unwrap());
        let meet = p.space().intersect(q.space());
        prop_assert!(parabolica::parabolic::is_parabolic(g, &meet).unwrap().is_parabolic());
        let r = q.project(&p).unwrap();
        prop_assert_eq!(r.in_g.space(), &meet.sum(q.nilradical()));
    }

    #[test]
    fn costandard_coordinate_stabilizers_are_nested(x in 1u32..15, y in 1u32..15) {
        // nonzero proper coordinate subspaces of Q^4
        let c = Classical::gl(4).unwrap();
        let coords = |m: u32| Subspace::span(4, (0..4).filter(|i| m >> i & 1 == 1).map(|i| {
            let mut v = vec![rat(0); 4];
            v[i] = rat(1);
            v
        }));
        let (u, w) = (coords(x), coords(y));
        let (p, q) = (c.subspace_stabilizer(&u).unwrap(), c.subspace_stabilizer(&w).unwrap());
        prop_assert_eq!(p.is_costandard(&q).unwrap(), u.contains(&w) || w.contains(&u));
    }

    #[test]
    fn conjugation_commutes_with_projection(seed in any::<u64>()) {
        let c = Classical::gl(3).unwrap();
        let g = c.algebra();
        let frame = c.standard_frame().unwrap();
        let mut s = Sampler::new(seed);
        let (_, p) = sampled_parabolic(&c, &mut s);
        let (_, q) = sampled_parabolic(&c, &mut s);
        let a = s.exp_ad(frame).unwrap();
        let r = q.project(&p).unwrap().in_g;
        let moved = conjugate(g, &q, &a).unwrap().project(&conjugate(g, &p, &a).unwrap()).unwrap().in_g;
        prop_assert_eq!(moved.space(), &r.space().image(&a));
    }
}
