use super::*;
use crate::catalog::{gl, sl, so, two_dim_nonabelian};
use crate::ratmat::vector;

fn e(n: usize, i: usize, j: usize) -> Element {
    vector::unit(n * n, i * n + j)
}

fn span(n: usize, vs: Vec<Element>) -> Subspace {
    Subspace::span(n, vs)
}

fn upper_borel(n: usize) -> Subspace {
    let mut v = Vec::new();
    for i in 0..n {
        for j in i..n {
            v.push(e(n, i, j));
        }
    }
    span(n * n, v)
}

fn strictly_upper(n: usize) -> Subspace {
    let mut v = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            v.push(e(n, i, j));
        }
    }
    span(n * n, v)
}

fn diagonal(n: usize) -> Subspace {
    span(n * n, (0..n).map(|i| e(n, i, i)).collect())
}

#[test]
fn bracket_of_elementary_matrices() {
    let g = gl(2);
    assert_eq!(g.bracket(&e(2, 0, 0), &e(2, 0, 1)), e(2, 0, 1));
    let x = vector::add(&e(2, 0, 1), &e(2, 1, 0));
    assert!(vector::is_zero(&g.bracket(&x, &x)));
}

#[test]
fn cartan_brackets_onto_off_diagonal() {
    let g = gl(2);
    let got = g.bracket_spaces(&diagonal(2), &g.full());
    assert_eq!(got, span(4, vec![e(2, 0, 1), e(2, 1, 0)]));
}

#[test]
fn borel_is_self_normalizing() {
    let g = gl(2);
    assert_eq!(g.normalizer(&upper_borel(2)), upper_borel(2));
}

#[test]
fn center_of_gl_is_scalars() {
    let g = gl(3);
    let scalars = span(9, vec![vector::add(&vector::add(&e(3, 0, 0), &e(3, 1, 1)), &e(3, 2, 2))]);
    assert_eq!(g.center(), scalars);
    assert_eq!(g.transporter(&Subspace::zero(9), &Subspace::zero(9)), g.full());
}

#[test]
fn lower_central_series_examples() {
    let g = gl(3);
    let dims: Vec<usize> = g.lower_central_series(&strictly_upper(3)).unwrap().iter().map(Subspace::dim).collect();
    assert_eq!(dims, vec![3, 1, 0]);
    let dims: Vec<usize> = g.lower_central_series(&diagonal(3)).unwrap().iter().map(Subspace::dim).collect();
    assert_eq!(dims, vec![3, 0]);
    let s = sl(2);
    assert!(!s.is_nilpotent_subalgebra(&s.full()).unwrap());
    assert!(matches!(g.lower_central_series(&span(9, vec![e(3, 0, 1), e(3, 1, 0)])), Err(Error::NotSubalgebra)));
}

#[test]
fn borel_filtration_of_gl2() {
    let g = gl(2);
    let f = g.induced_filtration(&strictly_upper(2), &upper_borel(2)).unwrap();
    assert!(f.level(-2).is_zero());
    assert_eq!(f.level(-1), &strictly_upper(2));
    assert_eq!(f.level(0), &upper_borel(2));
    assert!(f.level(1).is_full());
    assert!(f.is_monotone() && f.is_compatible(&g));
}

#[test]
fn trivial_and_gl3_filtrations() {
    let g = gl(3);
    let f = g.induced_filtration(&Subspace::zero(9), &g.full()).unwrap();
    assert!(f.level(-1).is_zero() && f.level(0).is_full());
    let f = g.induced_filtration(&strictly_upper(3), &upper_borel(3)).unwrap();
    let dims: Vec<usize> = (-3..=3).map(|k| f.level(k).dim()).collect();
    assert_eq!(dims, vec![0, 1, 3, 6, 8, 9, 9]);
    assert!(f.is_compatible(&g));
}

#[test]
fn nilpotent_cone_examples() {
    let g = gl(2);
    assert!(g.in_nilpotent_cone(&e(2, 0, 1)));
    assert!(!g.in_nilpotent_cone(&vector::add(&e(2, 0, 0), &e(2, 1, 1))));
    assert!(!g.in_nilpotent_cone(&vector::sub(&e(2, 0, 0), &e(2, 1, 1))));
}

#[test]
fn reductivity_through_the_realization() {
    assert_eq!(gl(3).is_reductive().unwrap(), Reductivity::Reductive);
    assert_eq!(so(3, 2).is_reductive().unwrap(), Reductivity::Reductive);
    let b = two_dim_nonabelian();
    assert_eq!(b.trace_form().unwrap().gram.rank(), 1);
    assert_eq!(b.is_reductive().unwrap(), Reductivity::Inconclusive);
}

#[test]
fn semisimple_parts() {
    let g = gl(2);
    assert!(g.ad_semisimple_part(&e(2, 0, 1)).is_zero());
    let d = vector::add(&e(2, 0, 0), &vector::scale(&rat(2), &e(2, 1, 1)));
    assert_eq!(g.ad_semisimple_part(&d), g.ad(&d));
    assert!(g.is_ad_semisimple(&d));
    // E11 + E12 has distinct eigenvalues 1, 0, so it is already semisimple
    let x = vector::add(&e(2, 0, 0), &e(2, 0, 1));
    assert!(g.is_ad_semisimple(&x));
    assert_eq!(g.ad_semisimple_part(&x), g.ad(&x));
    let unipotent = vector::add(&e(2, 0, 0), &vector::add(&e(2, 1, 1), &e(2, 0, 1)));
    assert!(!g.is_ad_semisimple(&unipotent));
    assert!(g.ad_semisimple_part(&unipotent).is_zero());

    let g3 = gl(3);
    let block = vector::add(&vector::add(&e(3, 0, 0), &e(3, 1, 1)), &e(3, 0, 1));
    let semi = vector::add(&e(3, 0, 0), &e(3, 1, 1));
    assert_eq!(g3.ad_semisimple_part(&block), g3.ad(&semi));
}

#[test]
fn semisimple_part_of_a_jordan_block() {
    // 2 on the diagonal with a 1 above: semisimple part is 2·I
    let m = Matrix::from_rows(vec![vec![rat(2), rat(1)], vec![rat(0), rat(2)]]);
    assert_eq!(semisimple_part(&m), Matrix::identity(2).scale(&rat(2)));
}

#[test]
fn exp_ad_matches_conjugation() {
    let g = gl(2);
    assert_eq!(g.exp_ad(&g.zero()).unwrap(), Matrix::identity(4));
    let x = e(2, 0, 1);
    let a = g.exp_ad(&x).unwrap();
    let u = Matrix::identity(2).add(&g.represent(&x).unwrap());
    let u_inv = u.inverse().unwrap();
    for j in 0..4 {
        let conj = u.mul(&g.realization().unwrap()[j]).mul(&u_inv);
        assert_eq!(g.represent(&a.column(j)).unwrap(), conj);
    }
    let back = g.exp_ad(&vector::neg(&x)).unwrap();
    assert_eq!(a.mul(&back), Matrix::identity(4));
    assert!(g.is_automorphism(&a));
    let gram = &g.trace_form().unwrap().gram;
    assert_eq!(&a.transpose().mul(gram).mul(&a), gram);
    assert!(matches!(g.exp_ad(&e(2, 0, 0)), Err(Error::NotNilpotent)));
}

#[test]
fn quotients() {
    let g = gl(3);
    let q = g.quotient_algebra(&g.center()).unwrap();
    assert_eq!(q.dim(), 8);
    assert_eq!(q.algebra.derived_algebra().dim(), 8);
    let same = g.quotient_algebra(&Subspace::zero(9)).unwrap();
    assert_eq!(same.algebra.structure(), g.structure());

    let g2 = gl(2);
    let sub = Quotient::new(&g2, &upper_borel(2), &strictly_upper(2)).unwrap();
    assert_eq!(sub.dim(), 2);
    assert!(sub.algebra.is_abelian(&sub.algebra.full()));
    assert!(sub.form().unwrap().is_nondegenerate());
    assert!(matches!(g2.quotient_algebra(&strictly_upper(2)), Err(Error::NotIdeal)));
}

#[test]
fn constructor_rejects_bad_tensors() {
    let z = || vector::zero(3);
    let mut s = vec![vec![z(), z(), z()], vec![z(), z(), z()], vec![z(), z(), z()]];
    s[0][1] = vec![rat(0), rat(0), rat(1)];
    assert!(matches!(LieAlgebra::new(vec!["a".into(), "b".into(), "c".into()], s.clone()), Err(Error::Antisymmetry { i: 0, j: 1 })));
    s[1][0] = vec![rat(0), rat(0), rat(-1)];
    // [a,b]=c, [a,c]=a is not Jacobi
    s[0][2] = vec![rat(1), rat(0), rat(0)];
    s[2][0] = vec![rat(-1), rat(0), rat(0)];
    assert!(matches!(LieAlgebra::new(vec!["a".into(), "b".into(), "c".into()], s), Err(Error::Jacobi { i: 0, j: 1, k: 2 })));
}

#[test]
fn nilpotent_radical_of_borel() {
    let g = gl(2);
    assert_eq!(g.nilpotent_radical(&upper_borel(2)).unwrap(), strictly_upper(2));
    assert_eq!(g.nilpotent_cone_ideal(&upper_borel(2)).unwrap(), strictly_upper(2));
    assert!(g.nilpotent_radical(&g.full()).unwrap().is_zero());
}

#[test]
fn trace_form_of_sl2_is_nondegenerate() {
    let s = sl(2);
    assert_eq!(s.dim(), 3);
    assert!(s.trace_form().unwrap().is_nondegenerate());
}
