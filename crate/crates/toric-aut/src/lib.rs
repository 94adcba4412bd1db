//! Structure of the automorphism group of a complete toric variety,
//! computed from its fan.
//!
//! Given the rays and maximal cones of a complete fan, this crate computes
//! the complete structure of the automorphism group of the corresponding
//! variety:
//!
//! - the **divisor class group** in invariant-factor coordinates, via the
//!   Smith normal form of the ray matrix ([`classgroup`]);
//! - the **Demazure roots** — characters pairing to `-1` with exactly one
//!   ray and nonnegatively with the rest — split into semisimple and
//!   non-semisimple ones ([`roots`]);
//! - the **ray equivalence classes** cut out by the semisimple roots
//!   (equivalently by linear equivalence of the invariant hypersurfaces),
//!   with the strict partial order and depth layering induced by the
//!   non-semisimple roots ([`roots`]);
//! - the **Levi decomposition** of the connected automorphism group: a
//!   product of `GL` factors (one per class) modulo the class-group torus,
//!   acting on a unipotent radical that is a layered semidirect product of
//!   additive groups, together with the decomposition of each additive piece
//!   into duals of the standard representation and symmetric powers, and the
//!   radical ([`autstructure`]);
//! - the **one-parameter subgroups** attached to roots, with exact symbolic
//!   verification of their group law, commutation relations, torus
//!   conjugation, and first-order tangent identity ([`symbolic`]);
//! - the finite **fan symmetry group** and the **component group** — the
//!   quotient of the fan symmetries by the within-class ray permutations
//!   embedded through semisimple roots ([`fanauto`]).
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals
//! throughout, no floating point anywhere. Everything is a pure function of
//! immutable inputs and safe for concurrent use.
//!
//! # Quick start
//!
//! ```
//! use toric_aut::autstructure::aut0_report;
//! use toric_aut::fan::{validate, Fan};
//!
//! // the fan of the projective plane
//! let fan = validate(Fan::from_i64(
//!     2,
//!     &[&[1, 0], &[0, 1], &[-1, -1]],
//!     &[&[0, 1], &[1, 2], &[2, 0]],
//! ))
//! .unwrap();
//!
//! let report = aut0_report(&fan).unwrap();
//! assert_eq!(report.total_dimension, 8); // PGL_3
//! assert_eq!(report.reductive.gl_factors, vec![3]);
//! assert_eq!(report.unipotent.total_dimension, 0);
//! ```
//!
//! The `examples/` directory contains one runnable program per capability;
//! the `toric-aut` binary exposes the same pipeline on fan description
//! files.

pub mod autstructure;
pub mod classgroup;
pub mod cli;
pub mod fan;
pub mod fanauto;
pub mod intlin;
pub mod roots;
pub mod symbolic;

pub use autstructure::{aut0_report, Aut0Report};
pub use fan::{validate, Fan, ValidatedFan};
pub use fanauto::{component_group, lattice_automorphisms, ComponentGroupReport};
pub use roots::{class_order, ray_classes, roots_of, Root};
