use super::*;
use crate::catalog::Classical;
use crate::ratmat::rat;

fn ints(v: &[i64]) -> Vector {
    v.iter().map(|&x| rat(x)).collect()
}

fn basis(d: usize) -> Vec<Vector> {
    (0..d).map(|i| vector::unit(d, i)).collect()
}

fn line_stabilizer(c: &Classical, v: &[i64]) -> ParabolicData {
    c.subspace_stabilizer(&Subspace::span(c.defining_dim(), [ints(v)])).unwrap()
}

fn standard_pairs(q: usize, d: usize) -> Vec<(Vector, Vector)> {
    (0..q).map(|i| (vector::unit(d, i), vector::unit(d, q + i))).collect()
}

#[test]
fn simplex_in_dimension_three() {
    let c = Classical::gl(3).unwrap();
    let sc = simplex_configuration(&c, &basis(3)).unwrap();
    let conf = &sc.configuration;
    assert_eq!(conf.source.len(), 6);
    assert_eq!(sc.minimal_levi, c.standard_minimal_levi());
    // costandard exactly when the subsets are nested
    for a in 0..6 {
        for b in 0..6 {
            let (na, nb) = (conf.source.name(a), conf.source.name(b));
            let nested = na.chars().all(|x| nb.contains(x)) || nb.chars().all(|x| na.contains(x));
            assert_eq!(conf.targets[a].is_costandard(&conf.targets[b]).unwrap(), nested, "{na} {nb}");
        }
    }
}

#[test]
fn simplex_rejects_degenerate_points() {
    let c = Classical::gl(3).unwrap();
    let points = vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[1, 1, 0])];
    assert!(matches!(simplex_configuration(&c, &points), Err(Error::Precondition(_))));
    assert!(simplex_configuration(&Classical::so(3, 2).unwrap(), &basis(5)).is_err());
    let two = simplex_configuration(&Classical::gl(2).unwrap(), &basis(2)).unwrap();
    assert_eq!(two.configuration.source.len(), 2);
}

#[test]
fn cross_configurations() {
    let c = Classical::so(3, 2).unwrap();
    let sc = cross_configuration(&c, &standard_pairs(2, 5)).unwrap();
    assert_eq!(sc.configuration.source.len(), 8);
    assert_eq!(sc.minimal_levi, c.standard_minimal_levi());
    // a pair that is not hyperbolic
    let bad = vec![(vector::unit(5, 0), vector::unit(5, 1)), (vector::unit(5, 2), vector::unit(5, 3))];
    assert!(matches!(cross_configuration(&c, &bad), Err(Error::Precondition(_))));
    let small = cross_configuration(&Classical::so(2, 1).unwrap(), &standard_pairs(1, 3)).unwrap();
    assert_eq!(small.configuration.source.len(), 2);
}

#[test]
fn tetrahedron_projects_to_a_complete_quadrilateral() {
    let c = Classical::gl(4).unwrap();
    let sc = simplex_configuration(&c, &basis(4)).unwrap();
    assert_eq!(sc.configuration.source.len(), 14);
    let q = line_stabilizer(&c, &[1, 1, 1, 1]);
    let (_, nu) = quotient_frame(c.standard_frame().unwrap(), &q).unwrap();
    // points and lines survive, planes are dropped
    assert_eq!(nu, vec![0, 1]);
    let projected = project_configuration(&q, &sc.configuration).unwrap();
    let report = projected.report();
    assert_eq!(report.types, vec![0, 1]);
    assert_eq!(report.elements[0].len(), 4);
    assert_eq!(report.elements[1].len(), 6);
    assert_eq!(report.row_sums(0), vec![3; 4]);
    assert_eq!(report.column_sums(0), vec![2; 6]);
}

#[test]
fn octahedron_projects_to_twelve_points_and_eight_lines() {
    let c = Classical::so(4, 3).unwrap();
    let sc = cross_configuration(&c, &standard_pairs(3, 7)).unwrap();
    assert_eq!(sc.configuration.source.len(), 26);
    let q = line_stabilizer(&c, &[1, 1, 1, 1, 2, -5, 2]);
    let (frame0, nu) = quotient_frame(c.standard_frame().unwrap(), &q).unwrap();
    assert_eq!(frame0.rank(), 2);
    assert_eq!(nu, vec![1, 2]);
    let projected = project_configuration(&q, &sc.configuration).unwrap();
    let report = projected.report();
    assert_eq!(report.elements[0].len(), 12);
    assert_eq!(report.elements[1].len(), 8);
    assert_eq!(report.row_sums(0), vec![2; 12]);
    assert_eq!(report.column_sums(0), vec![3; 8]);
}

#[test]
fn projection_rejects_elements_not_weakly_opposite() {
    let c = Classical::gl(3).unwrap();
    let sc = simplex_configuration(&c, &basis(3)).unwrap();
    // the center is one of the points
    let q = line_stabilizer(&c, &[1, 0, 0]);
    match project_configuration(&q, &sc.configuration) {
        Err(Error::Precondition(m)) => assert!(m.ends_with(": 1")),
        other => panic!("expected a weak-opposition error, got {other:?}"),
    }
}

#[test]
fn degenerate_centers_may_merge_elements() {
    let c = Classical::gl(3).unwrap();
    let sc = simplex_configuration(&c, &basis(3)).unwrap();
    // the center lies in the plane of e1, e2, so their images coincide
    let q = line_stabilizer(&c, &[1, 1, 0]);
    let projected = project_configuration(&q, &sc.configuration).unwrap();
    assert_eq!(projected.targets[0].space(), projected.targets[1].space());
    assert_ne!(projected.targets[0].space(), projected.targets[2].space());
}

#[test]
fn projection_along_the_whole_algebra_relabels() {
    let c = Classical::gl(3).unwrap();
    let sc = simplex_configuration(&c, &basis(3)).unwrap();
    let g = ParabolicData::whole(c.algebra()).unwrap();
    let projected = project_configuration(&g, &sc.configuration).unwrap();
    assert_eq!(projected.source.len(), 6);
    for v in 0..6 {
        assert_eq!(projected.source.name(v), sc.configuration.source.name(v));
        assert_eq!(projected.source.type_of(v), sc.configuration.source.type_of(v));
        assert_eq!(projected.targets[v].dim(), sc.configuration.targets[v].dim());
    }
}

#[test]
fn minimal_parabolics_of_the_quotient_lift() {
    let c = Classical::so(3, 2).unwrap();
    let frame = c.standard_frame().unwrap();
    for i in 0..2 {
        let q = frame.parabolic_from_subset(&BTreeSet::from([i])).unwrap();
        let (frame0, _) = quotient_frame(frame, &q).unwrap();
        let apt = crate::building::lie_apartment(&frame0).unwrap();
        for s in &apt.spaces {
            let b0 = ParabolicData::new(frame0.root_datum().ambient(), s.clone()).unwrap();
            let pb = opposite_lift(&q, &b0).unwrap();
            assert_eq!(pb.dim(), frame.chamber().dim());
            let image = q.project(&pb).unwrap().in_levi;
            assert_eq!(frame0.type_of_any(&image).unwrap().len(), frame0.rank());
        }
    }
}

#[test]
fn report_export_is_stable() {
    let c = Classical::gl(4).unwrap();
    let sc = simplex_configuration(&c, &basis(4)).unwrap();
    let q = line_stabilizer(&c, &[1, 1, 1, 1]);
    let a = project_configuration(&q, &sc.configuration).unwrap().report();
    let b = project_configuration(&q, &sc.configuration).unwrap().report();
    assert_eq!(a.to_json().to_string(), b.to_json().to_string());
    assert_eq!(a.to_dot(), b.to_dot());
    assert_eq!(a.to_json()["incidence"][0]["row_sums"], serde_json::json!([3, 3, 3, 3]));
    let one = IncidenceSystem::new(1, vec![("x".into(), 0)], []).unwrap();
    let r = IncidenceReport::new(&one);
    assert_eq!(r.elements, vec![vec!["x".to_string()]]);
    assert!(r.matrices.is_empty());
}
