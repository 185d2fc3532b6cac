use std::collections::BTreeSet;

use super::*;
use crate::catalog::{gl, Classical};
use crate::ratmat::{frac, vector};

fn e(n: usize, i: usize, j: usize) -> Element {
    vector::unit(n * n, i * n + j)
}

fn span(n: usize, vs: Vec<Element>) -> Subspace {
    Subspace::span(n, vs)
}

/// `{E_ij : keep(i, j)}` plus nothing else.
fn pattern(n: usize, keep: impl Fn(usize, usize) -> bool) -> Subspace {
    let mut v = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if keep(i, j) {
                v.push(e(n, i, j));
            }
        }
    }
    span(n * n, v)
}

fn gl_arc(n: usize) -> Arc<LieAlgebra> {
    Arc::new(gl(n))
}

fn eigenvalue_multiplicities(g: &LieAlgebra, xi: &[Rational]) -> Vec<(i64, usize)> {
    integer_eigenspaces(g, xi).unwrap().into_iter().map(|(l, s)| (l, s.dim())).collect()
}

#[test]
fn recognizer_on_gl2() {
    let g = gl_arc(2);
    let cert = is_parabolic(&g, &g.full()).unwrap();
    assert!(cert.is_parabolic() && cert.is_consistent());
    let borel = pattern(2, |i, j| i <= j);
    let cert = is_parabolic(&g, &borel).unwrap();
    assert!(cert.is_parabolic());
    assert_eq!(cert.conditions(), [Some(true); 4]);
    assert_eq!(cert.perp, pattern(2, |i, j| i < j));
    let cartan = pattern(2, |i, j| i == j);
    let cert = is_parabolic(&g, &cartan).unwrap();
    assert!(!cert.is_parabolic());
    assert_eq!(cert.perp, pattern(2, |i, j| i != j));
    assert!(cert.conditions().iter().all(|c| *c != Some(true)));
    assert!(matches!(is_parabolic(&g, &pattern(2, |i, j| i != j)), Err(Error::NotSubalgebra)));
}

#[test]
fn nilradicals_and_levi_quotients() {
    let g = gl_arc(2);
    let b = ParabolicData::new(&g, pattern(2, |i, j| i <= j)).unwrap();
    assert_eq!(*b.nilradical(), pattern(2, |i, j| i < j));
    let q0 = b.levi_algebra().unwrap();
    assert_eq!(q0.dim(), 2);
    assert!(q0.is_abelian(&q0.full()));

    let whole = ParabolicData::whole(&g).unwrap();
    assert!(whole.nilradical().is_zero());
    assert_eq!(whole.levi_algebra().unwrap().dim(), 4);

    // stabilizer of the line <e1> in gl3: first column below the diagonal vanishes
    let g3 = gl_arc(3);
    let line = ParabolicData::new(&g3, pattern(3, |i, j| !(j == 0 && i > 0))).unwrap();
    assert_eq!(line.nilradical().dim(), 2);
    let q0 = line.levi_algebra().unwrap();
    assert_eq!(q0.dim(), 5);
    assert_eq!(q0.center().dim(), 2);
    assert_eq!(q0.derived_algebra().dim(), 3);
}

#[test]
fn grading_lifts() {
    let g = gl_arc(2);
    let b = ParabolicData::new(&g, pattern(2, |i, j| i <= j)).unwrap();
    let lift = b.grading_lift(b.space()).unwrap();
    assert!(b.is_grading_lift(&lift.xi));
    assert_eq!(eigenvalue_multiplicities(&g, &lift.xi), vec![(-1, 1), (0, 2), (1, 1)]);
    // restricted to [g,g] the torsor is nil(p) ∩ [g,g]
    assert_eq!(lift.torsor, *b.nilradical());
    // ad(diag(1,0)) has the right eigenvalues but the wrong sign on nil(p)
    let d = e(2, 0, 0);
    assert_eq!(g.bracket(&d, &e(2, 0, 1)), e(2, 0, 1));
    let fixed = vector::sub(&e(2, 1, 1), &e(2, 0, 0));
    assert!(b.is_grading_lift(&vector::scale(&frac(1, 2), &fixed)));

    let whole = ParabolicData::whole(&g).unwrap();
    assert!(vector::is_zero(&whole.grading_lift(&g.full()).unwrap().xi));

    let g3 = gl_arc(3);
    let line = ParabolicData::new(&g3, pattern(3, |i, j| !(j == 0 && i > 0))).unwrap();
    let lift = line.grading_lift(line.space()).unwrap();
    assert_eq!(eigenvalue_multiplicities(&g3, &lift.xi), vec![(-1, 2), (0, 5), (1, 2)]);
    assert_eq!(lift.torsor.dim(), line.nilradical().dim());
}

#[test]
fn torsor_dimension_matches_constraint() {
    let g3 = gl_arc(3);
    let b = ParabolicData::new(&g3, pattern(3, |i, j| i <= j)).unwrap();
    let cartan = pattern(3, |i, j| i == j);
    let lift = b.grading_lift(&cartan).unwrap();
    assert!(lift.torsor.is_zero());
    let bigger = cartan.sum(&span(9, vec![e(3, 0, 1)]));
    assert_eq!(b.grading_lift(&bigger).unwrap().torsor.dim(), 1);
    assert!(matches!(b.grading_lift(&span(9, vec![e(3, 0, 1)])), Err(Error::NoLift)));
}

#[test]
fn opposites() {
    let g = gl_arc(2);
    let upper = ParabolicData::new(&g, pattern(2, |i, j| i <= j)).unwrap();
    let lower = pattern(2, |i, j| i >= j);
    let xi = upper.grading_lift(upper.space()).unwrap().xi;
    let op = upper.opposite(&xi).unwrap();
    assert_eq!(*op.space(), lower);
    let back = op.opposite(&vector::neg(&xi)).unwrap();
    assert_eq!(back, upper);
    let whole = ParabolicData::whole(&g).unwrap();
    assert_eq!(whole.opposite(&g.zero()).unwrap(), whole);
    assert!(matches!(upper.opposite(&e(2, 0, 0)), Err(Error::Precondition(_))));
}

#[test]
fn pair_relations() {
    let g = gl_arc(2);
    let upper = ParabolicData::new(&g, pattern(2, |i, j| i <= j)).unwrap();
    let lower = ParabolicData::new(&g, pattern(2, |i, j| i >= j)).unwrap();
    // p + p = p, so a proper parabolic is not weakly opposite to itself
    assert!(upper.is_costandard(&upper).unwrap());
    assert!(!upper.is_weakly_opposite(&upper).unwrap());
    assert!(!upper.is_opposite(&upper).unwrap());
    let whole = ParabolicData::whole(&g).unwrap();
    assert!(whole.is_opposite(&whole).unwrap() && whole.is_weakly_opposite(&whole).unwrap());
    assert!(upper.is_opposite(&lower).unwrap() && upper.is_weakly_opposite(&lower).unwrap());
    assert!(!upper.is_costandard(&lower).unwrap());

    let g3 = gl_arc(3);
    let line = ParabolicData::new(&g3, pattern(3, |i, j| !(j == 0 && i > 0))).unwrap();
    let plane = ParabolicData::new(&g3, pattern(3, |i, j| !(i == 2 && j < 2))).unwrap();
    assert!(line.is_costandard(&plane).unwrap());
    assert!(plane.is_costandard(&line).unwrap());
    // a line outside the plane: weakly opposite, not costandard
    let other = ParabolicData::new(&g3, pattern(3, |i, j| !(j == 2 && i < 2))).unwrap();
    assert!(!other.is_costandard(&plane).unwrap());
}

#[test]
fn projections() {
    let g3 = gl_arc(3);
    let b = ParabolicData::new(&g3, pattern(3, |i, j| i <= j)).unwrap();
    let line = ParabolicData::new(&g3, pattern(3, |i, j| !(j == 0 && i > 0))).unwrap();
    let whole = ParabolicData::whole(&g3).unwrap();

    let pr = line.project(&whole).unwrap();
    assert_eq!(pr.in_g, line);
    assert!(pr.in_levi.space().is_full());

    let xi = line.grading_lift(line.space()).unwrap().xi;
    let op = line.opposite(&xi).unwrap();
    let pr = line.project(&op).unwrap();
    assert_eq!(pr.in_g, line);

    // costandard input: the Borel lies in q, so it projects to a Borel of gl1 ⊕ gl2
    let pr = line.project(&b).unwrap();
    assert_eq!(pr.in_g, b);
    assert_eq!(pr.in_levi.dim(), 4);
    assert!(pr.in_levi.is_certified_minimal().unwrap());
}

#[test]
fn compatible_lifts_and_common_levi() {
    let g = gl_arc(2);
    let upper = ParabolicData::new(&g, pattern(2, |i, j| i <= j)).unwrap();
    let lower = ParabolicData::new(&g, pattern(2, |i, j| i >= j)).unwrap();
    let (xp, xq) = compatible_lifts(&upper, &lower).unwrap();
    let diag = pattern(2, |i, j| i == j);
    assert!(diag.contains_vector(&xp.xi) && diag.contains_vector(&xq.xi));
    assert_eq!(xq.xi, vector::neg(&xp.xi));
    assert_eq!(common_levi(&upper, &lower).unwrap(), diag);
    let l = common_levi(&upper, &upper).unwrap();
    assert_eq!(l.dim() + upper.nilradical().dim(), upper.dim());

    // two Borels of gl3 through the diagonal
    let g3 = gl_arc(3);
    let b1 = ParabolicData::new(&g3, pattern(3, |i, j| i <= j)).unwrap();
    let b2 = ParabolicData::new(&g3, pattern(3, |i, j| i == j || (i, j) == (1, 0) || (i, j) == (0, 2) || (i, j) == (1, 2))).unwrap();
    let (x1, x2) = compatible_lifts(&b1, &b2).unwrap();
    let cartan = pattern(3, |i, j| i == j);
    assert!(cartan.contains_vector(&x1.xi) && cartan.contains_vector(&x2.xi));

    // conjugated Borels: a 3-dimensional common Cartan
    let a = g3.exp_ad(&vector::add(&e(3, 1, 0), &e(3, 2, 1))).unwrap();
    let c = g3.exp_ad(&vector::scale(&frac(-2, 3), &e(3, 0, 2))).unwrap();
    let p = ParabolicData::new(&g3, b1.space().image(&a)).unwrap();
    let q = ParabolicData::new(&g3, b1.space().image(&c)).unwrap();
    let l = common_levi(&p, &q).unwrap();
    assert_eq!(l.dim(), 3);
    assert!(p.space().intersect(q.space()).contains(&l));
    assert!(g3.is_abelian(&l));
}

#[test]
fn lowest_weight_lines() {
    let g = gl_arc(2);
    let b = ParabolicData::new(&g, pattern(2, |i, j| i <= j)).unwrap();
    let lw = lowest_weight_line(&b, 512).unwrap();
    assert_eq!((lw.degree, lw.wedge_dim), (1, 4));
    assert!(lw.stabilizer_matches);
    assert_eq!(lw.line, e(2, 0, 1));

    let whole = ParabolicData::whole(&g).unwrap();
    let lw = lowest_weight_line(&whole, 512).unwrap();
    assert_eq!((lw.degree, lw.wedge_dim, lw.module_dim), (0, 1, 1));
    assert!(lw.stabilizer.is_full());

    let g3 = gl_arc(3);
    let b3 = ParabolicData::new(&g3, pattern(3, |i, j| i <= j)).unwrap();
    let lw = lowest_weight_line(&b3, 512).unwrap();
    assert_eq!((lw.degree, lw.wedge_dim), (3, 84));
    assert!(lw.stabilizer_matches);
    assert!(matches!(lowest_weight_line(&b3, 10), Err(Error::Budget { needed: 84, budget: 10 })));
}

#[test]
fn so32_standard_parabolics_are_flag_stabilizers() {
    let c = Classical::so(3, 2).unwrap();
    let frame = c.standard_frame().unwrap();
    let mut seen = BTreeSet::new();
    for mask in 0..4u32 {
        let j: BTreeSet<usize> = (0..2).filter(|i| mask & (1 << i) != 0).collect();
        let q = frame.parabolic_from_subset(&j).unwrap();
        let flag = c.flag_from_parabolic(&q).unwrap();
        seen.insert(flag.dims());
        let dims: BTreeSet<usize> = flag.dims().into_iter().collect();
        let expected: BTreeSet<usize> = j.iter().map(|&i| c.label_dim(i).unwrap()).collect();
        assert_eq!(dims, expected);
    }
    assert_eq!(seen.len(), 4);
}
