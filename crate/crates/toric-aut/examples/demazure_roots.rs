//! Enumerate and classify the Demazure roots of Hirzebruch surfaces.
//!
//! The surface of degree `a` has `a + 3` roots: two semisimple ones pairing
//! the horizontal rays, and `a + 1` non-semisimple ones on the downward ray.
//!
//! Run with: cargo run -p toric-aut --example demazure_roots

use toric_aut::fan::{validate, Fan};
use toric_aut::roots::roots_of;

fn main() {
    for a in 1..=3i64 {
        let fan = validate(Fan::from_i64(
            2,
            &[&[1, 0], &[0, 1], &[-1, a], &[0, -1]],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
        ))
        .unwrap();
        let roots = roots_of(&fan).unwrap();
        println!("Hirzebruch surface of degree {a}: {} roots", roots.len());
        for root in &roots {
            let kind = if root.semisimple {
                format!("semisimple, partner ray {}", root.partner.unwrap())
            } else {
                "non-semisimple".to_string()
            };
            println!("  ray {}: {:?} ({kind})", root.ray, root.alpha);
        }
    }
}
