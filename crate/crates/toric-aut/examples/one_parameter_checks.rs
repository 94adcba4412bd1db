//! Symbolic one-parameter subgroups: apply them to monomials and verify
//! their laws exactly, with unevaluated parameters.
//!
//! Run with: cargo run -p toric-aut --example one_parameter_checks

use toric_aut::fan::{validate, Fan};
use toric_aut::intlin::bigvec;
use toric_aut::roots::roots_of;
use toric_aut::symbolic::{
    apply_one_param, check_commutation, check_group_law, monomial_box, verification_suite,
    SymbolicError,
};

fn main() {
    let fan = validate(Fan::from_i64(
        2,
        &[&[1, 0], &[0, 1], &[-1, -2]],
        &[&[0, 1], &[1, 2], &[2, 0]],
    ))
    .unwrap();

    // the root (0,-1) of ray 1 acts on characters; positive pairing expands,
    // negative pairing produces a genuine denominator
    let root = bigvec(&[0, -1]);
    for beta in [bigvec(&[1, 0]), bigvec(&[0, 1]), bigvec(&[0, -1])] {
        let image = apply_one_param(&fan, 1, std::slice::from_ref(&root), &beta).unwrap();
        println!("x^{beta:?} -> {image}");
    }

    // the group law holds as a rational-function identity on a sample box
    let monomials = monomial_box(fan.rank(), 2);
    check_group_law(&fan, 1, std::slice::from_ref(&root), &monomials).unwrap();
    println!("group law verified on {} monomials", monomials.len());

    // commutation relations for every applicable root pair
    let roots = roots_of(&fan).unwrap();
    for ri in &roots {
        for rj in &roots {
            if ri.ray == rj.ray {
                continue;
            }
            match check_commutation(&fan, ri, rj, &monomials) {
                Ok(case) => println!(
                    "pair {:?} (ray {}), {:?} (ray {}): {case:?}",
                    ri.alpha, ri.ray, rj.alpha, rj.ray
                ),
                Err(SymbolicError::CaseNotApplicable) => {}
                Err(e) => panic!("verification failed: {e}"),
            }
        }
    }

    // the whole suite: group laws, commutation, torus conjugation, tangents
    let report = verification_suite(&fan, &roots, 2).unwrap();
    println!(
        "suite: {} families, {} commutation pairs, {} torus conjugations, {} tangents",
        report.group_law_families,
        report.commutation_pairs_checked,
        report.torus_conjugations,
        report.tangent_checks
    );
}
