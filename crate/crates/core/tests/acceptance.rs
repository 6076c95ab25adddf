//! Acceptance suite: one test per criterion, each printing its pass/fail
//! line (visible under `--nocapture`; the assert carries the detail too).

use griess_core::acceptance as acc;

fn check(r: acc::CriterionResult) {
    println!("{}", r.line());
    assert!(r.pass, "{}", r.line());
}

#[test]
fn criterion_01_lattice_ground_truth() {
    check(acc::criterion_01_lattice_ground_truth());
}

#[test]
fn criterion_02_table_derivation() {
    check(acc::criterion_02_table_derivation());
}

#[test]
fn criterion_03_polynomial_systems() {
    check(acc::criterion_03_polynomial_systems());
}

#[test]
fn criterion_04_mckay_values() {
    check(acc::criterion_04_mckay_values());
}

#[test]
fn criterion_05_solution_lists() {
    check(acc::criterion_05_solution_lists());
}

#[test]
fn criterion_06_counts_and_histograms() {
    check(acc::criterion_06_counts_and_histograms());
}

#[test]
fn criterion_07_gram_stabilizers() {
    check(acc::criterion_07_gram_stabilizers());
}

#[test]
fn criterion_08_generation() {
    check(acc::criterion_08_generation());
}

#[test]
fn criterion_09_eigenvalue_lemmas() {
    check(acc::criterion_09_eigenvalue_lemmas());
}

#[test]
fn criterion_10_characters() {
    check(acc::criterion_10_characters());
}

#[test]
fn criterion_11_decompositions() {
    check(acc::criterion_11_decompositions());
}

#[test]
fn criterion_12_integral_weights() {
    check(acc::criterion_12_integral_weights());
}

#[test]
fn criterion_13_properties() {
    check(acc::criterion_13_properties());
}
