//! Complete fans: rays, maximal cones, and validation.
//!
//! A fan is stored combinatorially: primitive ray vectors acting on the
//! character lattice as linear functionals, plus maximal cones as sets of ray
//! indices. Completeness is validated by proxy — positive spanning of the
//! rays, full-dimensional strongly convex maximal cones, and the wall
//! condition (every facet of a maximal cone shared by exactly two of them).
//! A full support-coverage proof is out of scope and the reports say so.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::intlin::rational::rank_int_rows;
use crate::intlin::{dot, for_each_combination, primitive, rational, recession_direction};

/// Raw fan data as supplied by the user. Ray order is preserved verbatim;
/// every report indexes rays by input position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    /// Rank of the character lattice.
    pub rank: usize,
    /// Primitive ray generators, each of length `rank`.
    pub rays: Vec<Vec<BigInt>>,
    /// Maximal cones as sets of ray indices.
    pub max_cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn from_i64(rank: usize, rays: &[&[i64]], max_cones: &[&[usize]]) -> Fan {
        Fan {
            rank,
            rays: rays
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            max_cones: max_cones.iter().map(|c| c.to_vec()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("fan has no rays")]
    NoRays,
    #[error("fan has no maximal cones")]
    NoCones,
    #[error("ray {index} has {found} coordinates, expected {expected}")]
    RayDimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("cone {0} is empty")]
    EmptyCone(usize),
    #[error("cone {cone} references ray {index}, but only rays 0..{rays} exist")]
    ConeIndexOutOfRange {
        cone: usize,
        index: usize,
        rays: usize,
    },
    #[error("cones {0} and {1} have the same ray set")]
    DuplicateCone(usize, usize),
    #[error("ray {0} is zero or not primitive")]
    NonPrimitiveRay(usize),
    #[error("rays {0} and {1} are equal")]
    DuplicateRay(usize, usize),
    #[error("rays do not positively span the dual space")]
    NotPositivelySpanning,
    #[error("maximal cone {0} does not span the ambient space")]
    NotFullDimensional(usize),
    #[error("maximal cone {0} contains a line")]
    NotStronglyConvex(usize),
    #[error("facet {facet:?} belongs to {count} maximal cones, expected exactly 2")]
    WallConditionFailed { facet: Vec<usize>, count: usize },
}

/// A fan that passed [`validate`]. Immutable and freely shareable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidatedFan {
    fan: Fan,
}

impl ValidatedFan {
    pub fn rank(&self) -> usize {
        self.fan.rank
    }

    pub fn num_rays(&self) -> usize {
        self.fan.rays.len()
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.fan.rays
    }

    pub fn ray(&self, i: usize) -> &[BigInt] {
        &self.fan.rays[i]
    }

    /// Maximal cones with sorted, deduplicated ray indices.
    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.fan.max_cones
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    /// Evaluation of ray `i` on a lattice vector: `v_i(alpha)`.
    pub fn ray_value(&self, i: usize, alpha: &[BigInt]) -> BigInt {
        dot(&self.fan.rays[i], alpha)
    }

    /// The full evaluation vector `(v_1(alpha), ..., v_r(alpha))`.
    pub fn value_vector(&self, alpha: &[BigInt]) -> Vec<BigInt> {
        (0..self.num_rays()).map(|i| self.ray_value(i, alpha)).collect()
    }
}

/// Check all fan invariants and return the validated wrapper.
///
/// Deterministic and idempotent: re-validating the underlying fan of a
/// `ValidatedFan` succeeds with identical data.
pub fn validate(fan: Fan) -> Result<ValidatedFan, FanError> {
    let n = fan.rank;
    let r = fan.rays.len();
    if n == 0 {
        return Err(FanError::ZeroRank);
    }
    if r == 0 {
        return Err(FanError::NoRays);
    }
    if fan.max_cones.is_empty() {
        return Err(FanError::NoCones);
    }
    for (i, ray) in fan.rays.iter().enumerate() {
        if ray.len() != n {
            return Err(FanError::RayDimensionMismatch {
                index: i,
                expected: n,
                found: ray.len(),
            });
        }
    }
    let mut cones: Vec<Vec<usize>> = Vec::with_capacity(fan.max_cones.len());
    for (c, cone) in fan.max_cones.iter().enumerate() {
        if cone.is_empty() {
            return Err(FanError::EmptyCone(c));
        }
        for &i in cone {
            if i >= r {
                return Err(FanError::ConeIndexOutOfRange {
                    cone: c,
                    index: i,
                    rays: r,
                });
            }
        }
        let set: BTreeSet<usize> = cone.iter().copied().collect();
        cones.push(set.into_iter().collect());
    }
    for a in 0..cones.len() {
        for b in a + 1..cones.len() {
            if cones[a] == cones[b] {
                return Err(FanError::DuplicateCone(a, b));
            }
        }
    }

    for (i, ray) in fan.rays.iter().enumerate() {
        match primitive(ray) {
            Ok(p) if p == *ray => {}
            _ => return Err(FanError::NonPrimitiveRay(i)),
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            if fan.rays[i] == fan.rays[j] {
                return Err(FanError::DuplicateRay(i, j));
            }
        }
    }

    // positive spanning <=> { alpha : v_i(alpha) >= 0 for all i } = 0
    if recession_direction(n, &[], &fan.rays).is_some() {
        return Err(FanError::NotPositivelySpanning);
    }

    for (c, cone) in cones.iter().enumerate() {
        let cone_rays: Vec<Vec<BigInt>> = cone.iter().map(|&i| fan.rays[i].clone()).collect();
        if rank_int_rows(&cone_rays) != n {
            return Err(FanError::NotFullDimensional(c));
        }
        if !strongly_convex(&cone_rays) {
            return Err(FanError::NotStronglyConvex(c));
        }
    }

    // wall condition on facet ray sets
    let mut facet_counts: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for cone in &cones {
        for facet in cone_facets(&fan, cone) {
            *facet_counts.entry(facet).or_insert(0) += 1;
        }
    }
    for (facet, count) in facet_counts {
        if count != 2 {
            return Err(FanError::WallConditionFailed { facet, count });
        }
    }

    Ok(ValidatedFan {
        fan: Fan {
            rank: n,
            rays: fan.rays,
            max_cones: cones,
        },
    })
}

/// A cone spanned by the given vectors is strongly convex iff the only
/// nonnegative linear relation among them is trivial.
fn strongly_convex(cone_rays: &[Vec<BigInt>]) -> bool {
    let s = cone_rays.len();
    let n = cone_rays[0].len();
    // variables: coefficients lambda in Q^s
    let mut eqs: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for coord in 0..n {
        eqs.push(cone_rays.iter().map(|ray| ray[coord].clone()).collect());
    }
    let mut ineqs: Vec<Vec<BigInt>> = Vec::with_capacity(s);
    for i in 0..s {
        let mut e = vec![BigInt::zero(); s];
        e[i] = BigInt::one();
        ineqs.push(e);
    }
    recession_direction(s, &eqs, &ineqs).is_none()
}

/// Facets of one maximal cone, each identified by its sorted set of
/// generating ray indices.
fn cone_facets(fan: &Fan, cone: &[usize]) -> BTreeSet<Vec<usize>> {
    let n = fan.rank;
    let mut facets = BTreeSet::new();
    for_each_combination(cone.len(), n - 1, &mut |subset| {
        let rows: Vec<Vec<BigInt>> = subset.iter().map(|&k| fan.rays[cone[k]].clone()).collect();
        if rank_int_rows(&rows) + 1 != n {
            return;
        }
        let kernel = rational::kernel_basis(&rows, n);
        debug_assert_eq!(kernel.len(), 1);
        let normal = rational::integerize(&kernel[0]);
        let values: Vec<BigInt> = cone.iter().map(|&i| dot(&fan.rays[i], &normal)).collect();
        let has_pos = values.iter().any(|x| *x > BigInt::zero());
        let has_neg = values.iter().any(|x| *x < BigInt::zero());
        if has_pos && has_neg {
            return; // hyperplane cuts the cone: not a face
        }
        let facet: Vec<usize> = cone
            .iter()
            .zip(&values)
            .filter(|(_, v)| v.is_zero())
            .map(|(&i, _)| i)
            .collect();
        facets.insert(facet);
    });
    facets
}
