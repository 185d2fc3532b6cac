use std::collections::BTreeSet;

use super::*;
use crate::catalog::{abelian, Classical};
use crate::parabolic::ParabolicData;
use crate::ratmat::frac;

fn ints(v: &[Rational]) -> Vec<i64> {
    v.iter().map(|x| x.to_integer().try_into().unwrap()).collect()
}

#[test]
fn gl3_roots_are_differences_of_coordinates() {
    let c = Classical::gl(3).unwrap();
    let rd = c.root_datum().unwrap();
    assert_eq!(rd.len(), 6);
    assert_eq!(rd.levi().dim(), 3);
    assert_eq!(*rd.levi(), *rd.cartan());
    // oracle: E_ij spans the e_i - e_j eigenspace of the diagonal
    let g = c.algebra();
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let mut f = vec![rat(0); 3];
            f[i] += rat(1);
            f[j] -= rat(1);
            let k = rd.index_of(&f).expect("e_i - e_j is a root");
            assert_eq!(rd.root_space(k).dim(), 1);
            assert!(rd.root_space(k).contains_vector(&vector::unit(9, 3 * i + j)));
            for h in rd.cartan().basis() {
                let x = vector::unit(9, 3 * i + j);
                assert_eq!(g.bracket(h, &x), vector::scale(&rd.eval(k, h), &x));
            }
        }
    }
    assert_eq!(rd.rank(), 2);
}

#[test]
fn so32_has_eight_one_dimensional_roots() {
    let c = Classical::so(3, 2).unwrap();
    let rd = c.root_datum().unwrap();
    assert_eq!(rd.len(), 8);
    assert_eq!(rd.levi().dim(), 2);
    assert_eq!(rd.levi().dim() + (0..8).map(|k| rd.root_space(k).dim()).sum::<usize>(), 10);
    let shapes: BTreeSet<Vec<i64>> = rd.roots().iter().map(|r| ints(r)).collect();
    let mut expected = BTreeSet::new();
    for s in [1, -1] {
        expected.insert(vec![s, 0]);
        expected.insert(vec![0, s]);
        for t in [1, -1] {
            expected.insert(vec![s, t]);
        }
    }
    assert_eq!(shapes, expected);
}

#[test]
fn abelian_algebra_has_no_roots() {
    let g = Arc::new(abelian(3));
    let rd = RootDatum::new(&g, &g.full()).unwrap();
    assert!(rd.is_empty());
    assert!(rd.levi().is_full());
}

#[test]
fn non_split_and_non_abelian_cartans_are_rejected() {
    let c = Classical::so(4, 2).unwrap();
    let g = c.algebra();
    // the rotation w1^w2 has eigenvalues ±i
    let idx = g.labels().iter().position(|l| l == "w1^w2").unwrap();
    let rot = Subspace::span(g.dim(), [vector::unit(g.dim(), idx)]);
    assert!(matches!(RootDatum::new(g, &rot), Err(Error::NotSplit(_))));
    let gl = Classical::gl(2).unwrap();
    let pair = Subspace::span(4, [vector::unit(4, 1), vector::unit(4, 2)]);
    assert!(matches!(RootDatum::new(gl.algebra(), &pair), Err(Error::Precondition(_))));
}

#[test]
fn coroots_and_integrality() {
    for c in [Classical::gl(3).unwrap(), Classical::so(3, 2).unwrap(), Classical::so(4, 2).unwrap()] {
        let rd = c.root_datum().unwrap();
        for a in 0..rd.len() {
            assert_eq!(rd.eval(a, rd.coroot(a)), rat(2));
            assert_eq!(rd.reflect(a, a), rd.negative(a));
            let perm = rd.reflection_permutation(a);
            assert!((0..rd.len()).all(|b| perm[perm[b]] == b));
            for b in 0..rd.len() {
                assert!(is_integer(&rd.pairing(b, a)));
            }
        }
    }
}

#[test]
fn so42_levi_has_a_compact_factor() {
    let c = Classical::so(4, 2).unwrap();
    let rd = c.root_datum().unwrap();
    assert_eq!(rd.levi().dim(), 3);
    // ±e_i root spaces have dimension k = 2
    let dims: Vec<usize> = (0..rd.len()).map(|k| rd.root_space(k).dim()).collect();
    assert_eq!(dims.iter().filter(|&&d| d == 2).count(), 4);
}

#[test]
fn gl3_reflection_swaps_roots() {
    let c = Classical::gl(3).unwrap();
    let rd = c.root_datum().unwrap();
    let a = rd.index_of(&[rat(1), rat(-1), rat(0)]).unwrap();
    let b = rd.index_of(&[rat(1), rat(0), rat(-1)]).unwrap();
    let d = rd.index_of(&[rat(0), rat(1), rat(-1)]).unwrap();
    assert_eq!(rd.reflect(a, b), d);
    assert_eq!(rd.reflect(a, d), b);
    let r = rd.root_reflection(a).unwrap();
    assert!(c.algebra().is_automorphism(&r.automorphism));
    assert_eq!(r.permutation[b], d);
}

#[test]
fn gl3_simple_system_from_lower_borel() {
    let c = Classical::gl(3).unwrap();
    let frame = Frame::new(Arc::new(c.root_datum().unwrap()), c.standard_borel().unwrap()).unwrap();
    let rd = frame.root_datum();
    let simples: BTreeSet<Vec<i64>> = (0..2).map(|i| ints(&rd.roots()[frame.simple_root(i)])).collect();
    assert_eq!(simples, BTreeSet::from([vec![1, -1, 0], vec![0, 1, -1]]));
    let ss = frame.simple_system();
    for (i, &a) in ss.simples.iter().enumerate() {
        for (j, xi) in ss.coweights.iter().enumerate() {
            assert_eq!(rd.eval(a, xi), rat(i64::from(i == j)));
        }
        for (j, lambda) in ss.weights.iter().enumerate() {
            let h = rd.cartan_coords(rd.coroot(a)).unwrap();
            assert_eq!(vector::dot(lambda, &h), rat(i64::from(i == j)));
        }
    }
    let cm = frame.cartan_matrix();
    assert_eq!(cm[0][0], 2);
    assert_eq!(cm[0][1], -1);
    // 2^|Φ¹| standard parabolics, mutually inverse with type_of
    let mut dims = Vec::new();
    for mask in 0..4u32 {
        let j: BTreeSet<usize> = (0..2).filter(|i| mask & (1 << i) != 0).collect();
        let q = frame.parabolic_from_subset(&j).unwrap();
        assert_eq!(frame.type_of(&q).unwrap(), j);
        dims.push(q.dim());
    }
    assert_eq!(dims, vec![9, 7, 7, 6]);
}

#[test]
fn so32_simple_system_is_b2() {
    let c = Classical::so(3, 2).unwrap();
    let frame = c.standard_frame().unwrap();
    let cm = frame.cartan_matrix();
    let off: BTreeSet<i64> = [cm[0][1], cm[1][0]].into();
    assert_eq!(off, BTreeSet::from([-1, -2]));
    // one long and one short simple root
    let rd = frame.root_datum();
    let lengths: BTreeSet<usize> =
        (0..2).map(|i| rd.roots()[frame.simple_root(i)].iter().filter(|x| !x.is_zero()).count()).collect();
    assert_eq!(lengths, BTreeSet::from([1, 2]));
}

#[test]
fn weyl_word_to_the_opposite_chamber_is_longest() {
    for (c, positive) in [(Classical::gl(3).unwrap(), 3), (Classical::so(3, 2).unwrap(), 4), (Classical::gl(2).unwrap(), 1)] {
        let frame = c.standard_frame().unwrap();
        assert!(frame.weyl_word(frame.chamber()).unwrap().is_empty());
        let opposite = frame.chamber().opposite(frame.xi()).unwrap();
        let w = frame.weyl_word(&opposite).unwrap();
        assert_eq!(w.len(), positive);
        assert_eq!(frame.simple_system().positive_roots().len(), positive);
    }
}

#[test]
fn duality_involutions() {
    let gl3 = Classical::gl(3).unwrap();
    let op = gl3.standard_frame().unwrap().duality_involution().unwrap();
    assert_eq!(op.mapping(), &[1, 0]);
    let so32 = Classical::so(3, 2).unwrap();
    let op = so32.standard_frame().unwrap().duality_involution().unwrap();
    assert_eq!(op.mapping(), &[0, 1]);
}

#[test]
fn standard_frame_labels_follow_subspace_dimension() {
    let c = Classical::gl(4).unwrap();
    let frame = c.standard_frame().unwrap();
    assert_eq!(frame.names(), &["1", "2", "3"]);
    for i in 0..3 {
        let q = frame.parabolic_from_subset(&BTreeSet::from([i])).unwrap();
        let f = c.flag_from_parabolic(&q).unwrap();
        assert_eq!(f.dims(), vec![i + 1]);
    }
}

#[test]
fn locate_types_conjugated_parabolics() {
    let c = Classical::gl(3).unwrap();
    let frame = c.standard_frame().unwrap();
    let g = c.algebra();
    let x = vector::add(&vector::unit(9, 1), &vector::scale(&frac(3, 2), &vector::unit(9, 5)));
    let a = g.exp_ad(&x).unwrap();
    for j in [BTreeSet::new(), BTreeSet::from([0]), BTreeSet::from([1]), BTreeSet::from([0, 1])] {
        let q = frame.parabolic_from_subset(&j).unwrap();
        let moved = ParabolicData::new(g, q.space().image(&a)).unwrap();
        assert_eq!(frame.type_of_any(&moved).unwrap(), j);
    }
}

#[test]
fn levi_frame_and_iota_for_a_line_stabilizer() {
    let c = Classical::gl(4).unwrap();
    let frame = c.standard_frame().unwrap();
    let q = frame.parabolic_from_subset(&BTreeSet::from([0])).unwrap();
    let f0 = frame.levi_frame(&q).unwrap();
    // q0 = gl1 ⊕ gl3 has two types
    assert_eq!(f0.rank(), 2);
    let iota = frame.iota(&q, &f0).unwrap();
    let image: BTreeSet<usize> = iota.mapping().iter().copied().collect();
    assert_eq!(image, BTreeSet::from([1, 2]));
    let nu = frame.nu(&q, &f0).unwrap();
    assert_eq!(nu.source_len(), 2);
}

#[test]
fn transported_root_data_match() {
    let c = Classical::so(3, 2).unwrap();
    let rd = c.root_datum().unwrap();
    let g = c.algebra();
    let k = (0..rd.len()).find(|&k| rd.root_space(k).dim() == 1).unwrap();
    let a = g.exp_ad(&rd.root_space(k).basis()[0]).unwrap();
    let (moved, matching) = rd.transport(&a).unwrap();
    assert_eq!(moved.len(), rd.len());
    let distinct: BTreeSet<usize> = matching.iter().copied().collect();
    assert_eq!(distinct.len(), rd.len());
}
