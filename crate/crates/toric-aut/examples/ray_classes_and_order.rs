//! Ray equivalence classes, the strict order between them, and the depth
//! layering that shapes the unipotent radical.
//!
//! Run with: cargo run -p toric-aut --example ray_classes_and_order

use toric_aut::fan::{validate, Fan};
use toric_aut::roots::{class_order, ray_classes, roots_of};

fn main() {
    let fan = validate(Fan::from_i64(
        2,
        &[&[1, 0], &[0, 1], &[-1, 1], &[0, -1]],
        &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
    ))
    .unwrap();
    let roots = roots_of(&fan).unwrap();
    let classes = ray_classes(&fan, &roots).unwrap();

    println!("ray classes of the first Hirzebruch surface:");
    for (k, class) in classes.classes().iter().enumerate() {
        println!("  class {k}: rays {class:?}");
    }
    // the semisimple root carrying ray 0 to ray 2
    println!(
        "semisimple root for the pair (0, 2): {:?}",
        classes.ss_root(0, 2).unwrap()
    );

    let ordered = class_order(&fan, &roots, &classes).unwrap();
    for (a, b) in &ordered.less {
        println!("class {a} < class {b}");
    }
    println!("depths: {:?}", ordered.depth);
    for (i, layer) in ordered.layers.iter().enumerate() {
        println!("layer {i}: classes {layer:?}");
    }
}
