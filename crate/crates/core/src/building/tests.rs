use std::collections::BTreeSet;

use super::*;
use crate::catalog::{admissible_model, subsets_model, Classical};
use crate::parabolic::ParabolicData;
use crate::ratmat::{frac, rat, vector};

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn model_sizes_and_group_orders() {
    for n in 1..=3 {
        let a = apartment_model_a(n).unwrap();
        assert_eq!(a.len(), factorial(n + 1));
        assert_eq!(a.group_order(), factorial(n + 1));
        let b = apartment_model_b(n).unwrap();
        assert_eq!(b.len(), (1 << n) * factorial(n));
        assert_eq!(b.group_order(), (1 << n) * factorial(n));
        for thin in [&a, &b] {
            assert!(thin.system().is_thin());
            assert!(thin.system().is_connected());
        }
    }
    assert!(apartment_model_a(0).is_err());
    assert!(apartment_model_b(0).is_err());
}

#[test]
fn group_elements_carry_their_words() {
    let a = apartment_model_a(2).unwrap();
    for k in 0..a.group_order() {
        let (perm, word) = a.group_element(k);
        for c in 0..a.len() {
            // the permutation applies the word's involutions in order
            assert_eq!(perm[c], a.walk(c, word));
        }
    }
}

#[test]
fn coxeter_matrices_of_models() {
    assert_eq!(apartment_model_a(2).unwrap().coxeter_matrix(), vec![vec![1, 3], vec![3, 1]]);
    assert_eq!(
        apartment_model_a(3).unwrap().coxeter_matrix(),
        vec![vec![1, 3, 2], vec![3, 1, 3], vec![2, 3, 1]]
    );
    assert_eq!(apartment_model_b(2).unwrap().coxeter_matrix(), vec![vec![1, 4], vec![4, 1]]);
    assert_eq!(
        apartment_model_b(3).unwrap().coxeter_matrix(),
        vec![vec![1, 3, 2], vec![3, 1, 4], vec![2, 4, 1]]
    );
}

#[test]
fn w_distance_on_the_hexagon() {
    let a = apartment_model_a(2).unwrap();
    let d = a.w_distance().unwrap();
    let names = a.system().names();
    let b = names.iter().position(|s| s == "123").unwrap();
    let c = names.iter().position(|s| s == "321").unwrap();
    assert!(d.get(b, b).is_empty());
    assert_eq!(d.get(b, c).len(), 3);
    assert_eq!(a.walk(b, d.get(b, c)), c);
    assert!(d.violations(&a).is_empty());
    for n in 1..=3 {
        for thin in [apartment_model_a(n).unwrap(), apartment_model_b(n).unwrap()] {
            let d = thin.w_distance().unwrap();
            assert!(d.violations(&thin).is_empty());
        }
    }
    let json = d.to_json(&a);
    assert_eq!(json["delta"][b][c].as_array().unwrap().len(), 3);
}

#[test]
fn non_free_action_is_rejected() {
    // two labels acting identically on a square: the group has order 2 on 4 chambers
    let names = (0..4).map(|i| i.to_string()).collect();
    let s = vec![1, 0, 3, 2];
    let thin = ThinChamberSystem::from_involutions(names, vec![s.clone(), s]).unwrap();
    assert!(thin.w_distance().is_err());
    let names = (0..2).map(|i| i.to_string()).collect();
    assert!(ThinChamberSystem::from_involutions(names, vec![vec![0, 1]]).is_err());
}

#[test]
fn subset_model_flags_and_chambers() {
    let g = subsets_model(2).unwrap();
    assert_eq!(g.len(), 6);
    assert_eq!(g.edges().len(), 6);
    assert_eq!(g.flags(&BTreeSet::new()), vec![Vec::<usize>::new()]);
    assert_eq!(g.full_flags().len(), 6);
    assert!(g.is_flag_regular());
    let (cs, flags) = ChamberSystem::from_incidence(&g).unwrap();
    assert_eq!(cs.len(), 6);
    assert!(cs.is_thin());
    let full: BTreeSet<usize> = (0..2).collect();
    let f = &flags[0];
    assert_eq!(g.restrict(f, &full, &BTreeSet::from([1])).unwrap(), vec![f[1]]);
    assert!(g.restrict(f, &BTreeSet::from([0]), &full).is_err());
    let single = subsets_model(1).unwrap();
    assert_eq!(single.len(), 2);
    assert!(single.edges().is_empty());
}

#[test]
fn admissible_model_flags() {
    let g = admissible_model(2).unwrap();
    assert_eq!(g.len(), 8);
    assert_eq!(g.full_flags().len(), 8);
    let thin = ThinChamberSystem::new(ChamberSystem::from_incidence(&g).unwrap().0).unwrap();
    assert!(thin.isomorphism_to(&apartment_model_b(2).unwrap()).is_some());
    assert_eq!(admissible_model(3).unwrap().len(), 26);
}

#[test]
fn coresidue_reconstruction() {
    for g in [subsets_model(2).unwrap(), subsets_model(3).unwrap(), admissible_model(2).unwrap()] {
        assert!(g.is_residually_connected().unwrap());
        let rec = g.reconstruct().unwrap();
        assert!(rec.is_isomorphism);
        assert_eq!(rec.coresidues.system.len(), g.len());
    }
    // one chamber: one coresidue per label, all incident
    let one = IncidenceSystem::new(2, vec![("a".into(), 0), ("b".into(), 1)], [(0, 1)]).unwrap();
    let (cs, _) = ChamberSystem::from_incidence(&one).unwrap();
    let cores = cs.coresidues().unwrap();
    assert_eq!(cores.system.len(), 2);
    assert_eq!(cores.system.edges().len(), 1);
}

#[test]
fn incidence_validation_and_export() {
    assert!(IncidenceSystem::new(2, vec![("a".into(), 0), ("b".into(), 0)], [(0, 1)]).is_err());
    assert!(IncidenceSystem::new(1, vec![("a".into(), 1)], []).is_err());
    let g = subsets_model(2).unwrap();
    let dot = g.to_dot("subsets");
    assert!(dot.starts_with("graph \"subsets\""));
    assert_eq!(dot.matches(" -- ").count(), 6);
    assert_eq!(g.to_json()["elements"].as_array().unwrap().len(), 6);
    let (cs, _) = ChamberSystem::from_incidence(&g).unwrap();
    assert_eq!(cs.to_dot("c").matches(" -- ").count(), 6);
}

#[test]
fn lie_apartments_match_models() {
    let cases = [
        (Classical::gl(2).unwrap(), apartment_model_a(1).unwrap()),
        (Classical::gl(3).unwrap(), apartment_model_a(2).unwrap()),
        (Classical::so(3, 2).unwrap(), apartment_model_b(2).unwrap()),
    ];
    for (c, model) in cases {
        let frame = c.standard_frame().unwrap();
        let apt = lie_apartment(frame).unwrap();
        assert_eq!(apt.thin.len(), model.len());
        let iso = apt.thin.isomorphism_to(&model).expect("isomorphic to the model");
        let identity: Vec<usize> = (0..frame.rank()).collect();
        assert_eq!(iso.labels, identity);
        // every chamber is a minimal parabolic containing the minimal Levi
        for s in &apt.spaces {
            let p = ParabolicData::new(c.algebra(), s.clone()).unwrap();
            assert!(p.space().contains(frame.root_datum().levi()));
            assert_eq!(p.dim(), frame.chamber().dim());
        }
    }
}

#[test]
fn delta_of_opposite_borels_is_longest() {
    for (c, len) in [(Classical::gl(3).unwrap(), 3), (Classical::so(3, 2).unwrap(), 4)] {
        let frame = c.standard_frame().unwrap();
        let borel = frame.chamber();
        let upper = borel.opposite(frame.xi()).unwrap();
        assert!(delta_parabolic(frame, borel, borel).unwrap().is_empty());
        let w = delta_parabolic(frame, borel, &upper).unwrap();
        assert_eq!(w.len(), len);
        let back = delta_parabolic(frame, &upper, borel).unwrap();
        assert_eq!(back.len(), len);
    }
}

#[test]
fn delta_is_invariant_under_exp_ad() {
    let c = Classical::gl(3).unwrap();
    let g = c.algebra();
    let frame = c.standard_frame().unwrap();
    let apt = lie_apartment(frame).unwrap();
    let x = vector::add(&vector::unit(9, 1), &vector::scale(&frac(-2, 3), &vector::unit(9, 7)));
    let a = g.exp_ad(&x).unwrap();
    let chambers: Vec<ParabolicData> =
        apt.spaces.iter().map(|s| ParabolicData::new(g, s.clone()).unwrap()).collect();
    for (i, pb) in chambers.iter().enumerate().step_by(2) {
        for pc in &chambers {
            let before = delta_parabolic(frame, pb, pc).unwrap();
            let mb = ParabolicData::new(g, pb.space().image(&a)).unwrap();
            let mc = ParabolicData::new(g, pc.space().image(&a)).unwrap();
            assert_eq!(delta_parabolic(frame, &mb, &mc).unwrap(), before, "chamber {i}");
        }
    }
}

#[test]
fn glued_apartments_agree() {
    for c in [Classical::gl(3).unwrap(), Classical::so(3, 2).unwrap()] {
        let frame = c.standard_frame().unwrap();
        let nil = frame.chamber().nilradical();
        let x = nil.basis().iter().fold(vector::zero(c.algebra().dim()), |acc, b| vector::add(&acc, b));
        let report = verify_building(frame, &x).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert!(report.overlap >= 1);
        assert!(report.chambers > report.overlap);
        assert_eq!(report.pairs, report.chambers * report.chambers);
    }
    let c = Classical::gl(3).unwrap();
    let frame = c.standard_frame().unwrap();
    let mut x = vector::zero(9);
    x[0] = rat(1);
    assert!(verify_building(frame, &x).is_err());
}
