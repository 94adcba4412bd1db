//! Divisor class groups and section spaces of torus-invariant divisors.
//!
//! Run with: cargo run -p toric-aut --example class_group

use toric_aut::classgroup::{class_group, sections};
use toric_aut::fan::{validate, Fan};
use toric_aut::intlin::bigvec;

fn main() {
    // a weighted projective plane: class group Z with ray degrees (1, 2, 1)
    let fan = validate(Fan::from_i64(
        2,
        &[&[1, 0], &[0, 1], &[-1, -2]],
        &[&[0, 1], &[1, 2], &[2, 0]],
    ))
    .unwrap();

    let cg = class_group(&fan);
    println!(
        "class group: free rank {}, torsion {:?}",
        cg.free_rank(),
        cg.torsion()
    );
    for i in 0..fan.num_rays() {
        println!("  ray {i} has divisor class {}", cg.ray_class(i));
    }

    // linear equivalence: adding the divisor of a character changes nothing
    let character_div = fan.value_vector(&bigvec(&[1, 0]));
    println!(
        "divisor of the first character: {:?} (class {})",
        character_div,
        cg.divisor_class(&character_div).unwrap()
    );

    // sections of the degree-one divisor on the projective plane
    let p2 = validate(Fan::from_i64(
        2,
        &[&[1, 0], &[0, 1], &[-1, -1]],
        &[&[0, 1], &[1, 2], &[2, 0]],
    ))
    .unwrap();
    let hyperplane = sections(&p2, &bigvec(&[1, 0, 0])).unwrap();
    println!("sections of O(1) on the projective plane: {hyperplane:?}");
    let cubic = sections(&p2, &bigvec(&[1, 1, 1])).unwrap();
    println!("dim of the cubic system: {}", cubic.len());
}
