//! Build fans in code and validate them.
//!
//! Run with: cargo run -p toric-aut --example validate_fan

use toric_aut::fan::{validate, Fan};

fn main() {
    // the fan of the projective plane: three rays, three maximal cones
    let good = Fan::from_i64(
        2,
        &[&[1, 0], &[0, 1], &[-1, -1]],
        &[&[0, 1], &[1, 2], &[2, 0]],
    );
    match validate(good) {
        Ok(fan) => println!(
            "projective plane fan: valid ({} rays, {} maximal cones)",
            fan.num_rays(),
            fan.max_cones().len()
        ),
        Err(e) => println!("unexpected: {e}"),
    }

    // rays confined to a half-plane can never positively span
    let half = Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]);
    match validate(half) {
        Ok(_) => println!("unexpected: half-plane fan accepted"),
        Err(e) => println!("half-plane fan rejected: {e}"),
    }

    // a non-primitive ray is caught with its index
    let coarse = Fan::from_i64(
        2,
        &[&[2, 0], &[0, 1], &[-1, -1]],
        &[&[0, 1], &[1, 2], &[2, 0]],
    );
    match validate(coarse) {
        Ok(_) => println!("unexpected: coarse fan accepted"),
        Err(e) => println!("coarse fan rejected: {e}"),
    }

    // dropping a maximal cone breaks the wall condition
    let torn = Fan::from_i64(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2]]);
    match validate(torn) {
        Ok(_) => println!("unexpected: torn fan accepted"),
        Err(e) => println!("torn fan rejected: {e}"),
    }
}
