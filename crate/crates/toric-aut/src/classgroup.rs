//! The divisor class group of a complete toric variety.
//!
//! The rays give an injective map from the character lattice into `Z^r`; the
//! class group is its cokernel, computed through the Smith normal form and
//! reported in invariant-factor coordinates. Also computes the lattice points
//! of the global-section space of any torus-invariant divisor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::fan::ValidatedFan;
use crate::intlin::{
    dot, polytope_lattice_points, smith_normal_form, IntMatrix, RationalPolytopeSpec,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ClassGroupError {
    #[error("divisor coefficient vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
}

/// An element of the class group in invariant-factor coordinates:
/// free coordinates in `Z^free_rank` and torsion residues, each reduced into
/// `[0, d)` for its modulus `d`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClassElement {
    pub free: Vec<BigInt>,
    pub torsion: Vec<BigInt>,
}

impl ClassElement {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|x| x.is_zero()) && self.torsion.iter().all(|x| x.is_zero())
    }
}

impl std::fmt::Display for ClassElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let free: Vec<String> = self.free.iter().map(BigInt::to_string).collect();
        let tors: Vec<String> = self.torsion.iter().map(BigInt::to_string).collect();
        if tors.is_empty() {
            write!(f, "({})", free.join(", "))
        } else {
            write!(f, "({}; {})", free.join(", "), tors.join(", "))
        }
    }
}

/// The class group `Z^r / v(M)` with its projection in invariant-factor
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroupData {
    v_matrix: IntMatrix,
    free_rank: usize,
    torsion: Vec<BigInt>,
    /// Functionals on `Z^r` giving the free coordinates of the projection.
    free_rows: Vec<Vec<BigInt>>,
    /// Functionals giving the torsion coordinates, aligned with `torsion`.
    torsion_rows: Vec<Vec<BigInt>>,
}

impl ClassGroupData {
    /// The matrix of the ray evaluation map, one row per ray.
    pub fn v_matrix(&self) -> &IntMatrix {
        &self.v_matrix
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Invariant factors `> 1`, each dividing the next.
    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn num_rays(&self) -> usize {
        self.v_matrix.rows()
    }

    /// The class of a torus-invariant divisor with the given ray
    /// coefficients. Additive in the coefficient vector.
    pub fn divisor_class(&self, coeffs: &[BigInt]) -> Result<ClassElement, ClassGroupError> {
        if coeffs.len() != self.num_rays() {
            return Err(ClassGroupError::LengthMismatch {
                expected: self.num_rays(),
                found: coeffs.len(),
            });
        }
        let free = self.free_rows.iter().map(|row| dot(row, coeffs)).collect();
        let torsion = self
            .torsion_rows
            .iter()
            .zip(&self.torsion)
            .map(|(row, modulus)| dot(row, coeffs).mod_floor(modulus))
            .collect();
        Ok(ClassElement { free, torsion })
    }

    /// The class of the invariant hypersurface attached to ray `i`.
    pub fn ray_class(&self, i: usize) -> ClassElement {
        let mut e = vec![BigInt::from(0); self.num_rays()];
        e[i] = BigInt::one();
        self.divisor_class(&e).expect("basis vector has length r")
    }
}

/// Compute the class group of a validated fan.
pub fn class_group(fan: &ValidatedFan) -> ClassGroupData {
    let r = fan.num_rays();
    let n = fan.rank();
    let v_matrix = IntMatrix::from_rows(fan.rays().to_vec()).expect("validated fan has rays");
    let snf = smith_normal_form(&v_matrix);
    let diag = snf.diagonal();
    debug_assert!(
        diag.iter().all(|d| !d.is_zero()),
        "rays of a validated fan span, so the evaluation map is injective"
    );
    let mut torsion = Vec::new();
    let mut torsion_rows = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        if *d > BigInt::one() {
            torsion.push(d.clone());
            torsion_rows.push(snf.u.row(i).to_vec());
        }
    }
    // rows of U beyond the diagonal block project onto the free part; flip
    // signs so the first nonzero entry of each functional is positive
    let mut free_rows = Vec::with_capacity(r - n);
    for i in n..r {
        let mut row = snf.u.row(i).to_vec();
        if let Some(first) = row.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                row = row.iter().map(|x| -x).collect();
            }
        }
        free_rows.push(row);
    }
    ClassGroupData {
        v_matrix,
        free_rank: r - n,
        torsion,
        free_rows,
        torsion_rows,
    }
}

/// Lattice points of the section space of the divisor with ray coefficients
/// `coeffs`: all characters `alpha` with `v_i(alpha) + coeffs_i >= 0`.
/// Finite for every validated fan; sorted lexicographically.
pub fn sections(
    fan: &ValidatedFan,
    coeffs: &[BigInt],
) -> Result<Vec<Vec<BigInt>>, ClassGroupError> {
    if coeffs.len() != fan.num_rays() {
        return Err(ClassGroupError::LengthMismatch {
            expected: fan.num_rays(),
            found: coeffs.len(),
        });
    }
    let mut spec = RationalPolytopeSpec::new(fan.rank());
    for (ray, c) in fan.rays().iter().zip(coeffs) {
        spec = spec.inequality(ray.clone(), -c.clone());
    }
    Ok(polytope_lattice_points(&spec)
        .expect("positive spanning keeps section polytopes bounded"))
}
