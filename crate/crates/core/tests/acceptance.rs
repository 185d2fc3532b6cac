//! One test per acceptance criterion; each prints its PASS/FAIL line.

use parabolica::acceptance;

fn criterion(id: usize) {
    let outcome = acceptance::run(id);
    println!("{outcome}");
    assert!(outcome.passed(), "{outcome}\n{}", outcome.failures.join("\n"));
}

#[test]
fn criterion_1_recognizer_equivalence() {
    criterion(1);
}

#[test]
fn criterion_2_projection_law() {
    criterion(2);
}

#[test]
fn criterion_3_type_laws() {
    criterion(3);
}

#[test]
fn criterion_4_root_data() {
    criterion(4);
}

#[test]
fn criterion_5_weyl_and_bruhat_combinatorics() {
    criterion(5);
}

#[test]
fn criterion_6_duality_involution() {
    criterion(6);
}

#[test]
fn criterion_7_lowest_weight_line() {
    criterion(7);
}

#[test]
fn criterion_8_configuration_goldens() {
    criterion(8);
}

#[test]
fn criterion_9_algebraic_property_suites() {
    criterion(9);
}
