//! The finite symmetry group of a fan and the component group of the full
//! automorphism group.
//!
//! Run with: cargo run -p toric-aut --example fan_symmetries

use toric_aut::fan::{validate, Fan};
use toric_aut::fanauto::{component_group, lattice_automorphisms, weyl_embedding};
use toric_aut::roots::{ray_classes, roots_of};

fn main() {
    // the product of two projective lines: a dihedral symmetry group
    let fan = validate(Fan::from_i64(
        2,
        &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]],
        &[&[0, 2], &[1, 2], &[1, 3], &[0, 3]],
    ))
    .unwrap();

    let auts = lattice_automorphisms(&fan);
    println!("fan symmetries: {}", auts.len());
    for aut in &auts {
        println!(
            "  {:?} det {} permutes rays as {:?}",
            aut.matrix, aut.det, aut.ray_permutation
        );
    }

    // the swap of the two rays of one factor embeds as a sign flip
    let roots = roots_of(&fan).unwrap();
    let classes = ray_classes(&fan, &roots).unwrap();
    let swap = weyl_embedding(&fan, &classes, &[1, 0, 2, 3]).unwrap();
    println!("embedded swap of rays 0 and 1: {:?}", swap.matrix);

    // the quotient by all within-class permutations is the component group;
    // here it has order two, generated by the factor swap
    let report = component_group(&fan).unwrap();
    println!(
        "component group: order {} = {} / {}",
        report.order,
        report.aut_delta.len(),
        report.weyl_image.len()
    );
    for &rep in &report.representatives {
        println!("  coset representative: {:?}", report.aut_delta[rep].matrix);
    }
}
