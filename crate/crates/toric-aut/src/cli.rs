//! Fan file parsing, subcommand dispatch, and report rendering.
//!
//! The fan file format is JSON with four fields: `name`, `rank`, `rays`,
//! `max_cones`. Integers may be JSON numbers of any size or strings of
//! digits. Reports render as human text or as a JSON tree that parses back
//! to the identical structure; JSON output is byte-identical across runs.
//!
//! Exit codes: 0 on success, 1 on an invalid fan (or unreadable file),
//! 2 on an internal invariant violation.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::autstructure::{
    aut0_report, Aut0Report, AutError, RepSummands, RepTarget,
};
use crate::classgroup::{class_group, ClassElement};
use crate::fan::{validate, Fan, FanError, ValidatedFan};
use crate::fanauto::{component_group_with, FanAutoError, LatticeAut};
use crate::roots::{class_order, ray_classes, roots_of, Root, RootsError};
use crate::symbolic::{verification_suite, SuiteReport, SymbolicError};

/// Exit code for reports that completed.
pub const EXIT_OK: i32 = 0;
/// Exit code for invalid input (unparseable file or invalid fan).
pub const EXIT_INVALID: i32 = 1;
/// Exit code for violated internal invariants.
pub const EXIT_INTERNAL: i32 = 2;

/// Arbitrary-precision integer that serializes as a plain JSON number and
/// deserializes from a number or a string of digits.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Int(pub BigInt);

impl From<&BigInt> for Int {
    fn from(x: &BigInt) -> Self {
        Int(x.clone())
    }
}

impl From<i64> for Int {
    fn from(x: i64) -> Self {
        Int(BigInt::from(x))
    }
}

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match serde_json::Number::from_str(&self.0.to_string()) {
            Ok(n) => n.serialize(s),
            Err(e) => Err(serde::ser::Error::custom(e)),
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(d)?;
        let text = match &value {
            serde_json::Value::Number(n) => n.to_string(),
            serde_json::Value::String(s) => s.trim().to_string(),
            other => {
                return Err(D::Error::custom(format!(
                    "expected an integer or a digit string, found {other}"
                )))
            }
        };
        BigInt::from_str(&text)
            .map(Int)
            .map_err(|e| D::Error::custom(format!("invalid integer literal {text:?}: {e}")))
    }
}

fn ints(v: &[BigInt]) -> Vec<Int> {
    v.iter().map(Int::from).collect()
}

/// Parsed fan description file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanFile {
    pub name: String,
    pub rank: usize,
    pub rays: Vec<Vec<Int>>,
    pub max_cones: Vec<Vec<usize>>,
}

impl FanFile {
    pub fn to_fan(&self) -> Fan {
        Fan {
            rank: self.rank,
            rays: self
                .rays
                .iter()
                .map(|r| r.iter().map(|x| x.0.clone()).collect())
                .collect(),
            max_cones: self.max_cones.clone(),
        }
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("fan file is not UTF-8: {0}")]
    Utf8(#[from] std::str::Utf8Error),
    #[error("JSON error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("fan file error in field {field}: {message}")]
    Semantic { field: String, message: String },
}

/// Structural parse of a fan file. Semantic fan validation happens later;
/// only index bounds and basic shape are enforced here.
pub fn parse_fan_file(bytes: &[u8]) -> Result<FanFile, ParseError> {
    let text = std::str::from_utf8(bytes)?;
    let file: FanFile = serde_json::from_str(text).map_err(|e| ParseError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if file.rank == 0 {
        return Err(ParseError::Semantic {
            field: "rank".into(),
            message: "rank must be at least 1".into(),
        });
    }
    for (c, cone) in file.max_cones.iter().enumerate() {
        for &i in cone {
            if i >= file.rays.len() {
                return Err(ParseError::Semantic {
                    field: format!("max_cones[{c}]"),
                    message: format!("ray index {i} out of range (0..{})", file.rays.len()),
                });
            }
        }
    }
    Ok(file)
}

// ---------------------------------------------------------------------------
// report tree
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassElementDto {
    pub free: Vec<Int>,
    pub torsion: Vec<Int>,
}

impl From<&ClassElement> for ClassElementDto {
    fn from(e: &ClassElement) -> Self {
        ClassElementDto {
            free: ints(&e.free),
            torsion: ints(&e.torsion),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub name: String,
    pub rank: usize,
    pub rays: usize,
    pub max_cones: usize,
    /// Completeness is established by proxy, not by a support-coverage proof.
    pub completeness_proxy: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayClassEntry {
    pub ray: usize,
    pub coordinates: Vec<Int>,
    pub class: ClassElementDto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroupReport {
    pub name: String,
    pub free_rank: usize,
    pub torsion: Vec<Int>,
    pub ray_classes: Vec<RayClassEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDto {
    pub ray: usize,
    pub alpha: Vec<Int>,
    pub semisimple: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partner: Option<usize>,
}

impl From<&Root> for RootDto {
    fn from(r: &Root) -> Self {
        RootDto {
            ray: r.ray,
            alpha: ints(&r.alpha),
            semisimple: r.semisimple,
            partner: r.partner,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsReport {
    pub name: String,
    pub total: usize,
    pub semisimple: usize,
    pub roots: Vec<RootDto>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassesReport {
    pub name: String,
    /// Ray classes, ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
    /// Strict order: pairs `[a, b]` with class `a` below class `b`.
    pub order: Vec<(usize, usize)>,
    pub depths: Vec<usize>,
    pub layers: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductiveDto {
    pub gl_factors: Vec<usize>,
    pub torus_free_rank: usize,
    pub torus_torsion: Vec<Int>,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotentLayerDto {
    pub depth: usize,
    pub classes: Vec<usize>,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotentDto {
    pub layers: Vec<UnipotentLayerDto>,
    pub total_dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetDto {
    OwnClass,
    Ray(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SummandsDto {
    DualStandard { copies: usize },
    SymmetricPowers { powers: Vec<(usize, usize)> },
    Trivial { dimension: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDto {
    pub acting_class: usize,
    pub target: TargetDto,
    pub summands: SummandsDto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalDto {
    pub unipotent_dimension: usize,
    pub torus_rank: usize,
    pub torus_torsion: Vec<Int>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Aut0Dto {
    pub name: String,
    pub rank: usize,
    pub rays: usize,
    pub total_dimension: usize,
    pub roots: usize,
    pub semisimple_roots: usize,
    pub classes: Vec<Vec<usize>>,
    pub class_depths: Vec<usize>,
    /// The Levi shape, e.g. `Aut0 = R_u x| (GL_2 x GL_1 x GL_1)/T_N`.
    pub structure: String,
    pub reductive: ReductiveDto,
    pub unipotent: UnipotentDto,
    pub representations: Vec<RepDto>,
    pub radical: RadicalDto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeAutDto {
    pub matrix: Vec<Vec<Int>>,
    pub det: Int,
    pub ray_permutation: Vec<usize>,
}

impl From<&LatticeAut> for LatticeAutDto {
    fn from(a: &LatticeAut) -> Self {
        LatticeAutDto {
            matrix: a.matrix.row_vecs().iter().map(|r| ints(r)).collect(),
            det: Int::from(&a.det),
            ray_permutation: a.ray_permutation.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetriesReport {
    pub name: String,
    pub order: usize,
    pub elements: Vec<LatticeAutDto>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentGroupDto {
    pub name: String,
    pub fan_symmetries: usize,
    pub weyl_order: usize,
    pub order: usize,
    pub representatives: Vec<LatticeAutDto>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDto {
    pub box_halfwidth: u32,
    pub monomials: usize,
    pub group_law_families: usize,
    pub commutation_pairs_checked: usize,
    pub commutation_pairs_skipped: usize,
    pub torus_conjugations: usize,
    pub tangent_checks: usize,
}

impl From<&SuiteReport> for CheckDto {
    fn from(s: &SuiteReport) -> Self {
        CheckDto {
            box_halfwidth: s.box_halfwidth,
            monomials: s.monomials,
            group_law_families: s.group_law_families,
            commutation_pairs_checked: s.commutation_pairs_checked,
            commutation_pairs_skipped: s.commutation_pairs_skipped,
            torus_conjugations: s.torus_conjugations,
            tangent_checks: s.tangent_checks,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullReport {
    pub name: String,
    pub aut0: Aut0Dto,
    pub component_group: ComponentGroupDto,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckDto>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub error: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Report {
    Validate(ValidateReport),
    ClassGroup(ClassGroupReport),
    Roots(RootsReport),
    Classes(ClassesReport),
    Aut0(Aut0Dto),
    Symmetries(SymmetriesReport),
    ComponentGroup(ComponentGroupDto),
    Full(FullReport),
    Error(ErrorReport),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subcommand {
    Validate,
    ClassGroup,
    Roots,
    Classes,
    Aut0,
    Symmetries,
    ComponentGroup,
    Report,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub format: Format,
    pub check: bool,
    pub box_halfwidth: u32,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            format: Format::Text,
            check: false,
            box_halfwidth: 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub report: Report,
    pub exit_code: i32,
}

fn invalid_fan(e: FanError) -> RunOutcome {
    RunOutcome {
        report: Report::Error(ErrorReport {
            error: "invalid-fan".into(),
            message: e.to_string(),
        }),
        exit_code: EXIT_INVALID,
    }
}

fn internal(message: String) -> RunOutcome {
    RunOutcome {
        report: Report::Error(ErrorReport {
            error: "internal".into(),
            message,
        }),
        exit_code: EXIT_INTERNAL,
    }
}

/// Report for a parse failure, for rendering in the requested format.
pub fn parse_error_report(e: &ParseError) -> Report {
    Report::Error(ErrorReport {
        error: "parse".into(),
        message: e.to_string(),
    })
}

enum PipelineError {
    Roots(RootsError),
    Aut(AutError),
    FanAuto(FanAutoError),
    Symbolic(SymbolicError),
}

impl std::fmt::Display for PipelineError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PipelineError::Roots(e) => write!(f, "{e}"),
            PipelineError::Aut(e) => write!(f, "{e}"),
            PipelineError::FanAuto(e) => write!(f, "{e}"),
            PipelineError::Symbolic(e) => write!(f, "{e}"),
        }
    }
}

impl From<RootsError> for PipelineError {
    fn from(e: RootsError) -> Self {
        PipelineError::Roots(e)
    }
}
impl From<AutError> for PipelineError {
    fn from(e: AutError) -> Self {
        PipelineError::Aut(e)
    }
}
impl From<FanAutoError> for PipelineError {
    fn from(e: FanAutoError) -> Self {
        PipelineError::FanAuto(e)
    }
}
impl From<SymbolicError> for PipelineError {
    fn from(e: SymbolicError) -> Self {
        PipelineError::Symbolic(e)
    }
}

fn structure_formula(report: &Aut0Report) -> String {
    let factors: Vec<String> = report
        .reductive
        .gl_factors
        .iter()
        .map(|l| format!("GL_{l}"))
        .collect();
    format!("Aut0 = R_u x| ({})/T_N", factors.join(" x "))
}

fn aut0_dto(name: &str, report: &Aut0Report) -> Aut0Dto {
    Aut0Dto {
        name: name.to_string(),
        rank: report.rank,
        rays: report.num_rays,
        total_dimension: report.total_dimension,
        roots: report.num_roots,
        semisimple_roots: report.num_semisimple,
        classes: report.classes.clone(),
        class_depths: report.class_depths.clone(),
        structure: structure_formula(report),
        reductive: ReductiveDto {
            gl_factors: report.reductive.gl_factors.clone(),
            torus_free_rank: report.reductive.torus_free_rank,
            torus_torsion: ints(&report.reductive.torus_torsion),
            dimension: report.reductive.dimension,
        },
        unipotent: UnipotentDto {
            layers: report
                .unipotent
                .layers
                .iter()
                .map(|l| UnipotentLayerDto {
                    depth: l.depth,
                    classes: l.classes.clone(),
                    dimension: l.dimension,
                })
                .collect(),
            total_dimension: report.unipotent.total_dimension,
        },
        representations: report
            .representations
            .iter()
            .map(|r| RepDto {
                acting_class: r.acting_class,
                target: match r.target {
                    RepTarget::OwnClass => TargetDto::OwnClass,
                    RepTarget::Ray(k) => TargetDto::Ray(k),
                },
                summands: match &r.summands {
                    RepSummands::DualStandard { copies } => {
                        SummandsDto::DualStandard { copies: *copies }
                    }
                    RepSummands::SymmetricPowers(p) => SummandsDto::SymmetricPowers {
                        powers: p.clone(),
                    },
                    RepSummands::Trivial { dimension } => SummandsDto::Trivial {
                        dimension: *dimension,
                    },
                },
            })
            .collect(),
        radical: RadicalDto {
            unipotent_dimension: report.radical.unipotent_dimension,
            torus_rank: report.radical.torus_rank,
            torus_torsion: ints(&report.radical.torus_torsion),
        },
    }
}

fn run_checked(
    cmd: Subcommand,
    file: &FanFile,
    fan: &ValidatedFan,
    opts: &RunOptions,
) -> Result<Report, PipelineError> {
    let name = file.name.as_str();
    let report = match cmd {
        Subcommand::Validate => Report::Validate(ValidateReport {
            name: name.to_string(),
            rank: fan.rank(),
            rays: fan.num_rays(),
            max_cones: fan.max_cones().len(),
            completeness_proxy: "positive spanning, full-dimensional strongly convex \
                                  maximal cones, wall condition"
                .to_string(),
        }),
        Subcommand::ClassGroup => {
            let cg = class_group(fan);
            Report::ClassGroup(ClassGroupReport {
                name: name.to_string(),
                free_rank: cg.free_rank(),
                torsion: ints(cg.torsion()),
                ray_classes: (0..fan.num_rays())
                    .map(|i| RayClassEntry {
                        ray: i,
                        coordinates: ints(fan.ray(i)),
                        class: ClassElementDto::from(&cg.ray_class(i)),
                    })
                    .collect(),
            })
        }
        Subcommand::Roots => {
            let roots = roots_of(fan)?;
            Report::Roots(RootsReport {
                name: name.to_string(),
                total: roots.len(),
                semisimple: roots.iter().filter(|r| r.semisimple).count(),
                roots: roots.iter().map(RootDto::from).collect(),
            })
        }
        Subcommand::Classes => {
            let roots = roots_of(fan)?;
            let classes = ray_classes(fan, &roots)?;
            let ordered = class_order(fan, &roots, &classes)?;
            Report::Classes(ClassesReport {
                name: name.to_string(),
                classes: classes.classes().to_vec(),
                order: ordered.less.iter().copied().collect(),
                depths: ordered.depth.clone(),
                layers: ordered.layers.clone(),
            })
        }
        Subcommand::Aut0 => {
            let report = aut0_report(fan)?;
            Report::Aut0(aut0_dto(name, &report))
        }
        Subcommand::Symmetries => {
            let auts = crate::fanauto::lattice_automorphisms(fan);
            Report::Symmetries(SymmetriesReport {
                name: name.to_string(),
                order: auts.len(),
                elements: auts.iter().map(LatticeAutDto::from).collect(),
            })
        }
        Subcommand::ComponentGroup => {
            let roots = roots_of(fan)?;
            let classes = ray_classes(fan, &roots)?;
            let cg = component_group_with(fan, &classes)?;
            Report::ComponentGroup(ComponentGroupDto {
                name: name.to_string(),
                fan_symmetries: cg.aut_delta.len(),
                weyl_order: cg.weyl_image.len(),
                order: cg.order,
                representatives: cg
                    .representatives
                    .iter()
                    .map(|&k| LatticeAutDto::from(&cg.aut_delta[k]))
                    .collect(),
            })
        }
        Subcommand::Report => {
            let aut0 = aut0_report(fan)?;
            let roots = roots_of(fan)?;
            let classes = ray_classes(fan, &roots)?;
            let cg = component_group_with(fan, &classes)?;
            let check = if opts.check {
                Some(CheckDto::from(&verification_suite(
                    fan,
                    &roots,
                    opts.box_halfwidth,
                )?))
            } else {
                None
            };
            Report::Full(FullReport {
                name: name.to_string(),
                aut0: aut0_dto(name, &aut0),
                component_group: ComponentGroupDto {
                    name: name.to_string(),
                    fan_symmetries: cg.aut_delta.len(),
                    weyl_order: cg.weyl_image.len(),
                    order: cg.order,
                    representatives: cg
                        .representatives
                        .iter()
                        .map(|&k| LatticeAutDto::from(&cg.aut_delta[k]))
                        .collect(),
                },
                check,
            })
        }
    };
    // --check runs the symbolic suite for every subcommand; only the full
    // report embeds the counters
    if opts.check && cmd != Subcommand::Report {
        let roots = roots_of(fan)?;
        verification_suite(fan, &roots, opts.box_halfwidth)?;
    }
    Ok(report)
}

/// Run a subcommand over a parsed fan file.
pub fn run(cmd: Subcommand, file: &FanFile, opts: &RunOptions) -> RunOutcome {
    let fan = match validate(file.to_fan()) {
        Ok(f) => f,
        Err(e) => return invalid_fan(e),
    };
    match run_checked(cmd, file, &fan, opts) {
        Ok(report) => RunOutcome {
            report,
            exit_code: EXIT_OK,
        },
        Err(e) => internal(e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

fn fmt_ints(v: &[Int]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.0.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn fmt_class(e: &ClassElementDto) -> String {
    if e.torsion.is_empty() {
        fmt_ints(&e.free)
    } else {
        format!("{} + torsion {}", fmt_ints(&e.free), fmt_ints(&e.torsion))
    }
}

fn fmt_set(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn fmt_matrix(m: &[Vec<Int>]) -> String {
    let rows: Vec<String> = m.iter().map(|r| fmt_ints(r).to_string()).collect();
    format!("[{}]", rows.join(", "))
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                serde_json::to_string_pretty(self).expect("report serialization is total")
            }
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let o = &mut out;
        match self {
            Report::Validate(r) => {
                let _ = writeln!(o, "fan {}: valid", r.name);
                let _ = writeln!(
                    o,
                    "  rank {}, {} rays, {} maximal cones",
                    r.rank, r.rays, r.max_cones
                );
                let _ = writeln!(o, "  completeness checked by proxy: {}", r.completeness_proxy);
            }
            Report::ClassGroup(r) => {
                let _ = writeln!(o, "class group of {}: {}", r.name, group_shape(r));
                let _ = writeln!(o, "  ray divisor classes:");
                for e in &r.ray_classes {
                    let _ = writeln!(
                        o,
                        "    ray {} {}: {}",
                        e.ray,
                        fmt_ints(&e.coordinates),
                        fmt_class(&e.class)
                    );
                }
            }
            Report::Roots(r) => {
                let _ = writeln!(
                    o,
                    "roots of {}: {} total, {} semisimple",
                    r.name, r.total, r.semisimple
                );
                for root in &r.roots {
                    let kind = if root.semisimple {
                        match root.partner {
                            Some(p) => format!("semisimple, partner ray {p}"),
                            None => "semisimple".to_string(),
                        }
                    } else {
                        "non-semisimple".to_string()
                    };
                    let _ = writeln!(o, "  ray {}: {} ({kind})", root.ray, fmt_ints(&root.alpha));
                }
            }
            Report::Classes(r) => {
                let _ = writeln!(o, "ray classes of {}: {} classes", r.name, r.classes.len());
                for (k, class) in r.classes.iter().enumerate() {
                    let _ = writeln!(o, "  class {k}: rays {}", fmt_set(class));
                }
                if r.order.is_empty() {
                    let _ = writeln!(o, "  order: trivial");
                } else {
                    let pairs: Vec<String> = r
                        .order
                        .iter()
                        .map(|(a, b)| format!("{a} < {b}"))
                        .collect();
                    let _ = writeln!(o, "  order: {}", pairs.join(", "));
                }
                let depths: Vec<String> = r.depths.iter().map(usize::to_string).collect();
                let _ = writeln!(o, "  depths: [{}]", depths.join(", "));
                for (i, layer) in r.layers.iter().enumerate() {
                    let _ = writeln!(o, "  layer {i}: classes {}", fmt_set(layer));
                }
            }
            Report::Aut0(r) => {
                render_aut0(o, r);
            }
            Report::Symmetries(r) => {
                let _ = writeln!(o, "fan symmetries of {}: order {}", r.name, r.order);
                for e in &r.elements {
                    let _ = writeln!(
                        o,
                        "  {} det {} permutation {:?}",
                        fmt_matrix(&e.matrix),
                        e.det.0,
                        e.ray_permutation
                    );
                }
            }
            Report::ComponentGroup(r) => {
                render_component_group(o, r);
            }
            Report::Full(r) => {
                render_aut0(o, &r.aut0);
                render_component_group(o, &r.component_group);
                if let Some(c) = &r.check {
                    let _ = writeln!(
                        o,
                        "symbolic verification: all identities hold on the box \
                         [-{}, {}]^n ({} monomials)",
                        c.box_halfwidth, c.box_halfwidth, c.monomials
                    );
                    let _ = writeln!(
                        o,
                        "  {} group-law families, {} commutation pairs checked \
                         ({} not applicable), {} torus conjugations, {} tangent checks",
                        c.group_law_families,
                        c.commutation_pairs_checked,
                        c.commutation_pairs_skipped,
                        c.torus_conjugations,
                        c.tangent_checks
                    );
                }
            }
            Report::Error(r) => {
                let _ = writeln!(o, "error ({}): {}", r.error, r.message);
            }
        }
        out
    }
}

fn group_shape(r: &ClassGroupReport) -> String {
    let mut parts = Vec::new();
    if r.free_rank > 0 {
        parts.push(format!("Z^{}", r.free_rank));
    }
    for t in &r.torsion {
        parts.push(format!("Z/{}", t.0));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn render_aut0(o: &mut String, r: &Aut0Dto) {
    let _ = writeln!(o, "Aut0 of {} (rank {}, {} rays)", r.name, r.rank, r.rays);
    let _ = writeln!(
        o,
        "  total dimension {} = {} (torus) + {} (roots)",
        r.total_dimension, r.rank, r.roots
    );
    let _ = writeln!(o, "  {}", r.structure);
    let _ = writeln!(
        o,
        "  reductive part: dimension {} = {} - {}",
        r.reductive.dimension,
        r.reductive
            .gl_factors
            .iter()
            .map(|l| (l * l).to_string())
            .collect::<Vec<_>>()
            .join(" + "),
        r.reductive.torus_free_rank
    );
    if r.reductive.torus_torsion.is_empty() {
        let _ = writeln!(o, "    T_N: torus of rank {}", r.reductive.torus_free_rank);
    } else {
        let _ = writeln!(
            o,
            "    T_N: torus of rank {} with torsion {}",
            r.reductive.torus_free_rank,
            fmt_ints(&r.reductive.torus_torsion)
        );
    }
    for (k, class) in r.classes.iter().enumerate() {
        let _ = writeln!(
            o,
            "    class {k}: rays {} (GL_{}, depth {})",
            fmt_set(class),
            class.len(),
            r.class_depths[k]
        );
    }
    if r.unipotent.total_dimension == 0 {
        let _ = writeln!(o, "  unipotent radical: trivial");
    } else {
        let _ = writeln!(
            o,
            "  unipotent radical: dimension {}, {} layer(s); the partial products \
             of the layers form a chain of normal subgroups",
            r.unipotent.total_dimension,
            r.unipotent.layers.len()
        );
        for l in &r.unipotent.layers {
            let _ = writeln!(
                o,
                "    layer at depth {}: classes {}, dimension {}",
                l.depth,
                fmt_set(&l.classes),
                l.dimension
            );
        }
    }
    if !r.representations.is_empty() {
        let _ = writeln!(o, "  linear actions on the additive pieces:");
        for rep in &r.representations {
            let target = match rep.target {
                TargetDto::OwnClass => "its own additive group".to_string(),
                TargetDto::Ray(k) => format!("the additive group of ray {k}"),
            };
            let summands = match &rep.summands {
                SummandsDto::DualStandard { copies } => {
                    format!("{copies} copies of the dual standard representation")
                }
                SummandsDto::SymmetricPowers { powers } => {
                    let parts: Vec<String> = powers
                        .iter()
                        .map(|(d, m)| {
                            if *m == 1 {
                                format!("S^{d}")
                            } else {
                                format!("{m} x S^{d}")
                            }
                        })
                        .collect();
                    parts.join(" + ")
                }
                SummandsDto::Trivial { dimension } => {
                    format!("trivial on dimension {dimension}")
                }
            };
            let _ = writeln!(
                o,
                "    GL factor of class {} on {}: {}",
                rep.acting_class, target, summands
            );
        }
    }
    if r.radical.torus_torsion.is_empty() {
        let _ = writeln!(
            o,
            "  radical: R_u x| T of rank {} (unipotent dimension {})",
            r.radical.torus_rank, r.radical.unipotent_dimension
        );
    } else {
        let _ = writeln!(
            o,
            "  radical: R_u x| T of rank {} with torsion {} (unipotent dimension {})",
            r.radical.torus_rank,
            fmt_ints(&r.radical.torus_torsion),
            r.radical.unipotent_dimension
        );
    }
}

fn render_component_group(o: &mut String, r: &ComponentGroupDto) {
    let _ = writeln!(o, "component group of {}: order {}", r.name, r.order);
    let _ = writeln!(
        o,
        "  fan symmetries: {}, within-class permutations: {}",
        r.fan_symmetries, r.weyl_order
    );
    let _ = writeln!(o, "  coset representatives:");
    for e in &r.representatives {
        let _ = writeln!(
            o,
            "    {} det {} permutation {:?}",
            fmt_matrix(&e.matrix),
            e.det.0,
            e.ray_permutation
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P1: &str = r#"{"name":"P1","rank":1,"rays":[[1],[-1]],"max_cones":[[0],[1]]}"#;
    const P2: &str = r#"{"name":"P2","rank":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[2,0]]}"#;

    #[test]
    fn parses_smallest_fan_file() {
        let file = parse_fan_file(P1.as_bytes()).unwrap();
        assert_eq!(file.name, "P1");
        assert_eq!(file.rank, 1);
        assert_eq!(file.rays.len(), 2);
        assert_eq!(file.max_cones, vec![vec![0], vec![1]]);
    }

    #[test]
    fn parses_projective_plane_file() {
        let file = parse_fan_file(P2.as_bytes()).unwrap();
        assert_eq!(file.rank, 2);
        assert_eq!(file.rays[2], vec![Int::from(-1), Int::from(-1)]);
    }

    #[test]
    fn rejects_malformed_json() {
        assert!(matches!(
            parse_fan_file(b"{\"name\": oops"),
            Err(ParseError::Json { .. })
        ));
    }

    #[test]
    fn rejects_out_of_range_cone() {
        let text = r#"{"name":"bad","rank":1,"rays":[[1],[-1]],"max_cones":[[0],[5]]}"#;
        assert!(matches!(
            parse_fan_file(text.as_bytes()),
            Err(ParseError::Semantic { .. })
        ));
    }

    #[test]
    fn accepts_string_integers() {
        let text = r#"{"name":"big","rank":1,"rays":[["1"],["-1"]],"max_cones":[[0],[1]]}"#;
        let file = parse_fan_file(text.as_bytes()).unwrap();
        assert_eq!(file.rays[0][0], Int::from(1));
    }

    #[test]
    fn accepts_huge_integers() {
        let big = "123456789012345678901234567890";
        let text = format!(
            r#"{{"name":"big","rank":1,"rays":[[{big}],[-1]],"max_cones":[[0],[1]]}}"#
        );
        let file = parse_fan_file(text.as_bytes()).unwrap();
        assert_eq!(file.rays[0][0].0.to_string(), big);
    }

    #[test]
    fn report_of_projective_plane() {
        let file = parse_fan_file(P2.as_bytes()).unwrap();
        let outcome = run(Subcommand::Report, &file, &RunOptions::default());
        assert_eq!(outcome.exit_code, EXIT_OK);
        let Report::Full(full) = &outcome.report else {
            panic!("expected a full report");
        };
        assert_eq!(full.aut0.total_dimension, 8);
        assert_eq!(full.component_group.order, 1);
        assert!(full.check.is_none());
    }

    #[test]
    fn invalid_fan_exits_one() {
        let text = r#"{"name":"half","rank":2,"rays":[[1,0],[0,1]],"max_cones":[[0,1]]}"#;
        let file = parse_fan_file(text.as_bytes()).unwrap();
        let outcome = run(Subcommand::Validate, &file, &RunOptions::default());
        assert_eq!(outcome.exit_code, EXIT_INVALID);
        let Report::Error(e) = &outcome.report else {
            panic!("expected an error report");
        };
        assert_eq!(e.error, "invalid-fan");
        assert!(e.message.contains("positively span"));
    }

    #[test]
    fn json_reports_round_trip() {
        let file = parse_fan_file(P2.as_bytes()).unwrap();
        for cmd in [
            Subcommand::Validate,
            Subcommand::ClassGroup,
            Subcommand::Roots,
            Subcommand::Classes,
            Subcommand::Aut0,
            Subcommand::Symmetries,
            Subcommand::ComponentGroup,
            Subcommand::Report,
        ] {
            let outcome = run(cmd, &file, &RunOptions::default());
            assert_eq!(outcome.exit_code, EXIT_OK);
            let rendered = outcome.report.render(Format::Json);
            let parsed: Report = serde_json::from_str(&rendered).unwrap();
            assert_eq!(parsed, outcome.report, "round trip fails for {cmd:?}");
        }
    }

    #[test]
    fn error_reports_round_trip_too() {
        let text = r#"{"name":"half","rank":2,"rays":[[1,0],[0,1]],"max_cones":[[0,1]]}"#;
        let file = parse_fan_file(text.as_bytes()).unwrap();
        let outcome = run(Subcommand::Report, &file, &RunOptions::default());
        let rendered = outcome.report.render(Format::Json);
        let parsed: Report = serde_json::from_str(&rendered).unwrap();
        assert_eq!(parsed, outcome.report);
    }

    #[test]
    fn json_rendering_is_deterministic() {
        let file = parse_fan_file(P2.as_bytes()).unwrap();
        let a = run(Subcommand::Report, &file, &RunOptions::default())
            .report
            .render(Format::Json);
        let b = run(Subcommand::Report, &file, &RunOptions::default())
            .report
            .render(Format::Json);
        assert_eq!(a, b);
    }

    #[test]
    fn check_flag_populates_full_report() {
        let file = parse_fan_file(P1.as_bytes()).unwrap();
        let opts = RunOptions {
            check: true,
            ..RunOptions::default()
        };
        let outcome = run(Subcommand::Report, &file, &opts);
        assert_eq!(outcome.exit_code, EXIT_OK);
        let Report::Full(full) = &outcome.report else {
            panic!("expected a full report");
        };
        let check = full.check.as_ref().unwrap();
        assert_eq!(check.box_halfwidth, 2);
        assert_eq!(check.monomials, 5);
        assert_eq!(check.torus_conjugations, 2);
    }

    #[test]
    fn text_rendering_shows_structure_formula() {
        let file = parse_fan_file(P2.as_bytes()).unwrap();
        let outcome = run(Subcommand::Aut0, &file, &RunOptions::default());
        let text = outcome.report.render(Format::Text);
        assert!(text.contains("Aut0 = R_u x| (GL_3)/T_N"), "got: {text}");
        assert!(text.contains("total dimension 8"));
    }
}
