//! The whole pipeline on a fan description file, rendered as text and JSON.
//!
//! Run with: cargo run -p toric-aut --example full_report [fan.json]
//!
//! Without an argument this loads the bundled first Hirzebruch surface.

use toric_aut::cli::{parse_fan_file, run, Format, RunOptions, Subcommand};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        format!("{}/fans/F1.json", env!("CARGO_MANIFEST_DIR"))
    });
    let bytes = std::fs::read(&path).expect("readable fan file");
    let file = parse_fan_file(&bytes).expect("well-formed fan file");

    let opts = RunOptions {
        format: Format::Text,
        check: true,
        box_halfwidth: 2,
    };
    let outcome = run(Subcommand::Report, &file, &opts);
    println!("{}", outcome.report.render(Format::Text));
    println!("--- same report as JSON ---");
    println!("{}", outcome.report.render(Format::Json));
    std::process::exit(outcome.exit_code);
}
