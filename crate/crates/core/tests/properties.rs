mod common;

use common::SUITE;

fn check(name: &str) {
    let (_, prop) = SUITE.iter().find(|(n, _)| *n == name).expect("registered property");
    if let Err(e) = prop(256) {
        panic!("{name}: {e}");
    }
}

#[test]
fn nf_idempotence_and_linearity() {
    check("NF idempotence and linearity");
}

#[test]
fn divmod_reconstruction() {
    check("divmod reconstruction");
}

#[test]
fn exact_divide_round_trip() {
    check("exact_divide round-trip");
}

#[test]
fn norm_multiplicativity() {
    check("norm multiplicativity");
}

#[test]
fn abel_sum_of_zero_divisors() {
    check("Abel sum of constructed zero divisors");
}

#[test]
fn group_law_on_torsion() {
    check("group law on torsion points");
}

#[test]
fn xi_norm() {
    check("norm(xi) = c (x - x_T)^n");
}

#[test]
fn pipeline_norm_identity() {
    check("pipeline norm identity");
}

#[test]
fn buchberger_self_reduction() {
    check("Buchberger self-reduction");
}
