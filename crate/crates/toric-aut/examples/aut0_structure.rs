//! Full structure of the connected automorphism group: Levi decomposition,
//! unipotent layers, representation decompositions, and the radical.
//!
//! Run with: cargo run -p toric-aut --example aut0_structure

use toric_aut::autstructure::{aut0_report, RepSummands, RepTarget};
use toric_aut::fan::{validate, Fan};

fn main() {
    // weighted projective plane with degrees (1, 2, 1)
    let fan = validate(Fan::from_i64(
        2,
        &[&[1, 0], &[0, 1], &[-1, -2]],
        &[&[0, 1], &[1, 2], &[2, 0]],
    ))
    .unwrap();
    let report = aut0_report(&fan).unwrap();

    println!(
        "total dimension {} = {} (torus) + {} (roots)",
        report.total_dimension, report.rank, report.num_roots
    );
    println!(
        "reductive part: GL factors {:?} modulo a torus of rank {} -> dimension {}",
        report.reductive.gl_factors, report.reductive.torus_free_rank, report.reductive.dimension
    );
    println!(
        "unipotent radical: dimension {} in {} layer(s)",
        report.unipotent.total_dimension,
        report.unipotent.layers.len()
    );
    for layer in &report.unipotent.layers {
        println!(
            "  depth {}: classes {:?}, dimension {}",
            layer.depth, layer.classes, layer.dimension
        );
    }
    for rep in &report.representations {
        let target = match rep.target {
            RepTarget::OwnClass => "its own additive group".to_string(),
            RepTarget::Ray(k) => format!("the additive group of ray {k}"),
        };
        let what = match &rep.summands {
            RepSummands::DualStandard { copies } => {
                format!("{copies} copies of the dual standard representation")
            }
            RepSummands::SymmetricPowers(powers) => format!("symmetric powers {powers:?}"),
            RepSummands::Trivial { dimension } => format!("trivially (dimension {dimension})"),
        };
        println!("class {} acts on {target}: {what}", rep.acting_class);
    }
    println!(
        "radical: unipotent dimension {} extended by a torus of rank {}",
        report.radical.unipotent_dimension, report.radical.torus_rank
    );
}
