//! Thin command-line front end over the library pipeline.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use toric_aut::cli::{self, Format, RunOptions};

#[derive(Parser)]
#[command(
    name = "toric-aut",
    version,
    about = "Automorphism group structure of a complete toric variety, from its fan"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Args)]
struct CommonArgs {
    /// Fan description file (JSON with name, rank, rays, max_cones)
    fan: PathBuf,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Also run the symbolic verification suite (exit 2 on any violation)
    #[arg(long)]
    check: bool,
    /// Half-width of the monomial sample box used by --check
    #[arg(long = "box", value_name = "B", default_value_t = 2)]
    box_halfwidth: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the fan (completeness checked by proxy)
    Validate(CommonArgs),
    /// Divisor class group and the class of every ray
    Classgroup(CommonArgs),
    /// Enumerate and classify the Demazure roots
    Roots(CommonArgs),
    /// Ray equivalence classes, their order, depths, and layers
    Classes(CommonArgs),
    /// Structure of the connected automorphism group
    Aut0(CommonArgs),
    /// The finite group of lattice symmetries of the fan
    Symmetries(CommonArgs),
    /// Component group: fan symmetries modulo within-class permutations
    ComponentGroup(CommonArgs),
    /// Full pipeline: aut0 plus the component group
    Report(CommonArgs),
}

impl Command {
    fn split(self) -> (cli::Subcommand, CommonArgs) {
        match self {
            Command::Validate(a) => (cli::Subcommand::Validate, a),
            Command::Classgroup(a) => (cli::Subcommand::ClassGroup, a),
            Command::Roots(a) => (cli::Subcommand::Roots, a),
            Command::Classes(a) => (cli::Subcommand::Classes, a),
            Command::Aut0(a) => (cli::Subcommand::Aut0, a),
            Command::Symmetries(a) => (cli::Subcommand::Symmetries, a),
            Command::ComponentGroup(a) => (cli::Subcommand::ComponentGroup, a),
            Command::Report(a) => (cli::Subcommand::Report, a),
        }
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let (cmd, common) = args.command.split();
    let format = match common.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let bytes = match std::fs::read(&common.fan) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("cannot read {}: {e}", common.fan.display());
            return ExitCode::from(cli::EXIT_INVALID as u8);
        }
    };
    let file = match cli::parse_fan_file(&bytes) {
        Ok(f) => f,
        Err(e) => {
            println!("{}", cli::parse_error_report(&e).render(format));
            return ExitCode::from(cli::EXIT_INVALID as u8);
        }
    };
    let opts = RunOptions {
        format,
        check: common.check,
        box_halfwidth: common.box_halfwidth,
    };
    let outcome = cli::run(cmd, &file, &opts);
    print!("{}", ensure_newline(outcome.report.render(format)));
    ExitCode::from(outcome.exit_code as u8)
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}
