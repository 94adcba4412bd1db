//! Structure of the connected automorphism group.
//!
//! Everything is read off the combinatorics of the roots: the reductive part
//! is a product of general linear groups, one per ray class, modulo the torus
//! of the class group; the unipotent radical is a semidirect product of
//! additive groups layered by class depth; and the action of each linear
//! factor on the additive pieces decomposes into duals of the standard
//! representation and symmetric powers. The module computes the dimensions
//! twice along independent routes and refuses to emit a report that fails
//! the accounting.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::classgroup::{class_group, ClassGroupData};
use crate::fan::ValidatedFan;
use crate::intlin::{smith_normal_form, IntMatrix};
use crate::roots::{class_order, ray_classes, roots_of, OrderedClasses, RayClasses, Root, RootsError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AutError {
    #[error(transparent)]
    Roots(#[from] RootsError),
    #[error("dimension accounting mismatch: {0}")]
    AccountingMismatch(String),
    #[error("representation decomposition mismatch: {0}")]
    DecompositionMismatch(String),
}

/// The reductive part: a product of `GL` factors modulo the class-group
/// torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductiveDescription {
    /// Sizes of the `GL` factors, one per ray class, in class order.
    pub gl_factors: Vec<usize>,
    /// Free rank of the embedded class-group torus.
    pub torus_free_rank: usize,
    /// Torsion invariant factors of the class group.
    pub torus_torsion: Vec<BigInt>,
    /// `sum of squares of factor sizes - torus free rank`.
    pub dimension: usize,
}

/// One layer of the unipotent radical: the classes of a common depth that
/// carry non-semisimple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentLayer {
    pub depth: usize,
    pub classes: Vec<usize>,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentDescription {
    /// Layers with nonzero dimension, by increasing depth. The products of
    /// the leading layers form a chain of normal subgroups.
    pub layers: Vec<UnipotentLayer>,
    /// Total number of non-semisimple roots.
    pub total_dimension: usize,
}

/// What a linear factor acts on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepTarget {
    /// The additive group assembled from the acting class's own rays.
    OwnClass,
    /// The additive group of a single ray outside the acting class.
    Ray(usize),
}

/// The decomposition of one target into irreducible modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepSummands {
    /// Copies of the dual standard representation.
    DualStandard { copies: usize },
    /// Symmetric powers `S^degree` with multiplicities, ascending degree.
    SymmetricPowers(Vec<(usize, usize)>),
    /// The factor acts trivially.
    Trivial { dimension: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepDecomposition {
    pub acting_class: usize,
    pub target: RepTarget,
    pub summands: RepSummands,
}

/// The radical: unipotent radical extended by the torus of the quotient
/// lattice `M / span(semisimple roots)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalDescription {
    pub unipotent_dimension: usize,
    pub torus_rank: usize,
    pub torus_torsion: Vec<BigInt>,
    /// Rank of the span of the semisimple roots inside the character lattice.
    pub semisimple_span_rank: usize,
}

/// Full structural report on the connected automorphism group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Aut0Report {
    pub rank: usize,
    pub num_rays: usize,
    pub num_roots: usize,
    pub num_semisimple: usize,
    pub classes: Vec<Vec<usize>>,
    pub class_depths: Vec<usize>,
    pub total_dimension: usize,
    pub reductive: ReductiveDescription,
    pub unipotent: UnipotentDescription,
    pub representations: Vec<RepDecomposition>,
    pub radical: RadicalDescription,
}

/// Binomial coefficient, exact.
fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Dimension of `S^degree` of an `l`-dimensional space.
pub fn symmetric_power_dimension(l: usize, degree: usize) -> usize {
    binomial(degree + l - 1, l - 1)
}

/// The reductive part of the connected automorphism group.
pub fn reductive_part(classes: &RayClasses, cg: &ClassGroupData) -> ReductiveDescription {
    let gl_factors = classes.class_sizes();
    let squares: usize = gl_factors.iter().map(|l| l * l).sum();
    ReductiveDescription {
        gl_factors,
        torus_free_rank: cg.free_rank(),
        torus_torsion: cg.torsion().to_vec(),
        dimension: squares - cg.free_rank(),
    }
}

/// Layer the non-semisimple roots by the depth of their ray classes.
pub fn unipotent_structure(
    classes: &RayClasses,
    ordered: &OrderedClasses,
    roots: &[Root],
) -> UnipotentDescription {
    let mut per_class = vec![0usize; classes.num_classes()];
    for root in roots.iter().filter(|r| !r.semisimple) {
        per_class[classes.class_of(root.ray)] += 1;
    }
    let mut layers = Vec::new();
    for (depth, layer_classes) in ordered.layers.iter().enumerate() {
        let carriers: Vec<usize> = layer_classes
            .iter()
            .copied()
            .filter(|&c| per_class[c] > 0)
            .collect();
        if carriers.is_empty() {
            continue;
        }
        let dimension = carriers.iter().map(|&c| per_class[c]).sum();
        layers.push(UnipotentLayer {
            depth,
            classes: carriers,
            dimension,
        });
    }
    UnipotentDescription {
        total_dimension: per_class.iter().sum(),
        layers,
    }
}

/// Group elements by a key, preserving the key order.
fn group_by_key<T, K: Ord>(items: Vec<(K, T)>) -> BTreeMap<K, Vec<T>> {
    let mut map: BTreeMap<K, Vec<T>> = BTreeMap::new();
    for (k, v) in items {
        map.entry(k).or_default().push(v);
    }
    map
}

/// Decompose the action of every linear factor on every additive target.
///
/// Non-semisimple roots of a target ray are bundled by their values on the
/// rays outside the acting class; a bundle of common total degree `d` on the
/// class is one copy of `S^d` and must have exactly the matching binomial
/// cardinality.
pub fn rep_decomposition(
    fan: &ValidatedFan,
    classes: &RayClasses,
    ordered: &OrderedClasses,
    roots: &[Root],
) -> Result<Vec<RepDecomposition>, AutError> {
    let mut nonss_by_ray: BTreeMap<usize, Vec<&Root>> = BTreeMap::new();
    for root in roots.iter().filter(|r| !r.semisimple) {
        nonss_by_ray.entry(root.ray).or_default().push(root);
    }
    let mut out = Vec::new();
    for acting in 0..classes.num_classes() {
        let members = classes.class_members(acting);
        let in_class = |ray: usize| members.contains(&ray);
        let outside_values = |alpha: &[BigInt]| -> Vec<BigInt> {
            (0..fan.num_rays())
                .filter(|&j| !in_class(j))
                .map(|j| fan.ray_value(j, alpha))
                .collect()
        };
        let class_degree = |alpha: &[BigInt]| -> BigInt {
            members.iter().map(|&i| fan.ray_value(i, alpha)).sum()
        };

        // the class's own additive group: bundles of size |F|, one root per
        // member ray, each bundle a copy of the dual standard representation
        let own_roots: Vec<&Root> = members
            .iter()
            .flat_map(|i| nonss_by_ray.get(i).cloned().unwrap_or_default())
            .collect();
        if !own_roots.is_empty() {
            let keyed: Vec<(Vec<BigInt>, &Root)> = own_roots
                .iter()
                .map(|r| (outside_values(&r.alpha), *r))
                .collect();
            let bundles = group_by_key(keyed);
            for bundle in bundles.values() {
                if bundle.len() != members.len() {
                    return Err(AutError::DecompositionMismatch(format!(
                        "class {acting}: bundle of size {} instead of {}",
                        bundle.len(),
                        members.len()
                    )));
                }
                let mut rays: Vec<usize> = bundle.iter().map(|r| r.ray).collect();
                rays.sort_unstable();
                if rays != members {
                    return Err(AutError::DecompositionMismatch(format!(
                        "class {acting}: bundle covers rays {rays:?}, expected {members:?}"
                    )));
                }
            }
            out.push(RepDecomposition {
                acting_class: acting,
                target: RepTarget::OwnClass,
                summands: RepSummands::DualStandard {
                    copies: bundles.len(),
                },
            });
        }

        // every other ray carrying non-semisimple roots
        for (&ray, ray_roots) in &nonss_by_ray {
            if in_class(ray) {
                continue;
            }
            let target_class = classes.class_of(ray);
            if ordered.is_less(target_class, acting) {
                let keyed: Vec<(Vec<BigInt>, &Root)> = ray_roots
                    .iter()
                    .map(|r| (outside_values(&r.alpha), *r))
                    .collect();
                let mut degrees: Vec<(usize, usize)> = Vec::new();
                for bundle in group_by_key(keyed).values() {
                    let d0 = class_degree(&bundle[0].alpha);
                    for r in bundle {
                        if class_degree(&r.alpha) != d0 {
                            return Err(AutError::DecompositionMismatch(format!(
                                "class {acting}, ray {ray}: mixed degrees within a bundle"
                            )));
                        }
                    }
                    let degree = usize::try_from(&d0).map_err(|_| {
                        AutError::DecompositionMismatch(format!(
                            "class {acting}, ray {ray}: negative class degree {d0}"
                        ))
                    })?;
                    let expected = symmetric_power_dimension(members.len(), degree);
                    if bundle.len() != expected {
                        return Err(AutError::DecompositionMismatch(format!(
                            "class {acting}, ray {ray}: bundle of degree {degree} has \
                             {} roots, expected {expected}",
                            bundle.len()
                        )));
                    }
                    degrees.push((degree, 1));
                }
                degrees.sort_unstable();
                let mut merged: Vec<(usize, usize)> = Vec::new();
                for (d, m) in degrees {
                    match merged.last_mut() {
                        Some((d0, m0)) if *d0 == d => *m0 += m,
                        _ => merged.push((d, m)),
                    }
                }
                out.push(RepDecomposition {
                    acting_class: acting,
                    target: RepTarget::Ray(ray),
                    summands: RepSummands::SymmetricPowers(merged),
                });
            } else {
                // not below the acting class: the action must be trivial
                for r in ray_roots {
                    if !class_degree(&r.alpha).is_zero() {
                        return Err(AutError::DecompositionMismatch(format!(
                            "class {acting}, ray {ray}: nonzero degree on a \
                             supposedly trivial target"
                        )));
                    }
                }
                out.push(RepDecomposition {
                    acting_class: acting,
                    target: RepTarget::Ray(ray),
                    summands: RepSummands::Trivial {
                        dimension: ray_roots.len(),
                    },
                });
            }
        }
    }
    Ok(out)
}

/// Rank and torsion of `M / span(semisimple roots)`, plus the span's rank.
fn quotient_by_semisimple_span(rank: usize, roots: &[Root]) -> (usize, Vec<BigInt>, usize) {
    let ss: Vec<Vec<BigInt>> = roots
        .iter()
        .filter(|r| r.semisimple)
        .map(|r| r.alpha.clone())
        .collect();
    if ss.is_empty() {
        return (rank, Vec::new(), 0);
    }
    // columns are the semisimple roots; cokernel of Z^s -> Z^rank
    let mut rows = Vec::with_capacity(rank);
    for coord in 0..rank {
        rows.push(ss.iter().map(|alpha| alpha[coord].clone()).collect());
    }
    let matrix = IntMatrix::from_rows(rows).expect("nonempty");
    let diag = smith_normal_form(&matrix).diagonal();
    let span_rank = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion = diag.into_iter().filter(|d| *d > BigInt::one()).collect();
    (rank - span_rank, torsion, span_rank)
}

/// Assemble the full report, checking the dimension identities along two
/// independent routes.
pub fn aut0_report(fan: &ValidatedFan) -> Result<Aut0Report, AutError> {
    let roots = roots_of(fan)?;
    let classes = ray_classes(fan, &roots)?;
    let ordered = class_order(fan, &roots, &classes)?;
    let cg = class_group(fan);

    let reductive = reductive_part(&classes, &cg);
    let unipotent = unipotent_structure(&classes, &ordered, &roots);
    let representations = rep_decomposition(fan, &classes, &ordered, &roots)?;

    let n = fan.rank();
    let r = fan.num_rays();
    let num_roots = roots.len();
    let num_semisimple = roots.iter().filter(|r| r.semisimple).count();

    // route one: tangent-space dimension from the torus and the roots
    let total_dimension = n + num_roots;
    // route two: reductive plus unipotent
    let assembled = reductive.dimension + unipotent.total_dimension;
    if total_dimension != assembled {
        return Err(AutError::AccountingMismatch(format!(
            "rank + #roots = {total_dimension} but reductive + unipotent = {assembled}"
        )));
    }
    let ss_from_classes: usize = classes.class_sizes().iter().map(|l| l * (l - 1)).sum();
    if num_semisimple != ss_from_classes {
        return Err(AutError::AccountingMismatch(format!(
            "{num_semisimple} semisimple roots but class sizes predict {ss_from_classes}"
        )));
    }

    let (mbar_rank, mbar_torsion, span_rank) = quotient_by_semisimple_span(n, &roots);
    debug_assert_eq!(mbar_rank + span_rank, n);
    if !mbar_torsion.is_empty() {
        return Err(AutError::AccountingMismatch(format!(
            "quotient by the semisimple span acquired torsion {mbar_torsion:?}"
        )));
    }
    if cg.torsion().is_empty() {
        let k = classes.num_classes();
        let expected = k - (r - n);
        if mbar_rank != expected {
            return Err(AutError::AccountingMismatch(format!(
                "radical torus rank {mbar_rank}, expected {expected} from class count"
            )));
        }
    }

    let radical = RadicalDescription {
        unipotent_dimension: unipotent.total_dimension,
        torus_rank: mbar_rank,
        torus_torsion: mbar_torsion,
        semisimple_span_rank: span_rank,
    };
    Ok(Aut0Report {
        rank: n,
        num_rays: r,
        num_roots,
        num_semisimple,
        classes: classes.classes().to_vec(),
        class_depths: ordered.depth.clone(),
        total_dimension,
        reductive,
        unipotent,
        representations,
        radical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::{validate, Fan};

    fn projective_space(n: usize) -> ValidatedFan {
        let mut rays: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            rays.push(e);
        }
        rays.push(vec![-1; n]);
        let cones: Vec<Vec<usize>> = (0..=n)
            .map(|skip| (0..=n).filter(|&i| i != skip).collect())
            .collect();
        let ray_refs: Vec<&[i64]> = rays.iter().map(Vec::as_slice).collect();
        let cone_refs: Vec<&[usize]> = cones.iter().map(Vec::as_slice).collect();
        validate(Fan::from_i64(n, &ray_refs, &cone_refs)).unwrap()
    }

    fn hirzebruch(a: i64) -> ValidatedFan {
        validate(Fan::from_i64(
            2,
            &[&[1, 0], &[0, 1], &[-1, a], &[0, -1]],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
        ))
        .unwrap()
    }

    fn p1xp1() -> ValidatedFan {
        validate(Fan::from_i64(
            2,
            &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]],
            &[&[0, 2], &[1, 2], &[1, 3], &[0, 3]],
        ))
        .unwrap()
    }

    fn weighted121() -> ValidatedFan {
        validate(Fan::from_i64(
            2,
            &[&[1, 0], &[0, 1], &[-1, -2]],
            &[&[0, 1], &[1, 2], &[2, 0]],
        ))
        .unwrap()
    }

    #[test]
    fn projective_plane_report() {
        let report = aut0_report(&projective_space(2)).unwrap();
        assert_eq!(report.total_dimension, 8);
        assert_eq!(report.reductive.gl_factors, vec![3]);
        assert_eq!(report.reductive.torus_free_rank, 1);
        assert_eq!(report.reductive.dimension, 8);
        assert_eq!(report.unipotent.total_dimension, 0);
        assert!(report.unipotent.layers.is_empty());
        assert!(report.representations.is_empty());
        // semisimple roots span the whole lattice: trivial radical torus
        assert_eq!(report.radical.torus_rank, 0);
        assert_eq!(report.radical.semisimple_span_rank, 2);
    }

    #[test]
    fn projective_space_chain() {
        for n in 1..=3usize {
            let report = aut0_report(&projective_space(n)).unwrap();
            assert_eq!(report.num_roots, n * (n + 1));
            assert_eq!(report.num_semisimple, n * (n + 1));
            assert_eq!(report.total_dimension, (n + 1) * (n + 1) - 1);
            assert_eq!(report.reductive.gl_factors, vec![n + 1]);
            assert_eq!(report.unipotent.total_dimension, 0);
        }
    }

    #[test]
    fn product_of_lines_report() {
        let report = aut0_report(&p1xp1()).unwrap();
        assert_eq!(report.total_dimension, 6);
        assert_eq!(report.reductive.gl_factors, vec![2, 2]);
        assert_eq!(report.reductive.torus_free_rank, 2);
        assert_eq!(report.reductive.dimension, 6);
        assert_eq!(report.unipotent.total_dimension, 0);
    }

    #[test]
    fn hirzebruch_reports() {
        for a in 1..=3usize {
            let report = aut0_report(&hirzebruch(a as i64)).unwrap();
            assert_eq!(report.total_dimension, a + 5);
            assert_eq!(report.reductive.gl_factors, vec![2, 1, 1]);
            assert_eq!(report.reductive.dimension, 4);
            assert_eq!(report.unipotent.total_dimension, a + 1);
            assert_eq!(report.unipotent.layers.len(), 1);
            assert_eq!(report.unipotent.layers[0].dimension, a + 1);
            assert_eq!(report.unipotent.layers[0].depth, 0);
            // V_4 under the GL_2 factor of {v1, v3} is one copy of S^a
            let rep = report
                .representations
                .iter()
                .find(|r| r.acting_class == 0 && r.target == RepTarget::Ray(3))
                .unwrap();
            assert_eq!(
                rep.summands,
                RepSummands::SymmetricPowers(vec![(a, 1)]),
                "V_4 = S^{a}(E) for the Hirzebruch surface of degree {a}"
            );
        }
    }

    #[test]
    fn first_hirzebruch_radical() {
        let report = aut0_report(&hirzebruch(1)).unwrap();
        assert_eq!(report.total_dimension, 6);
        assert_eq!(report.reductive.dimension, 4);
        assert_eq!(report.unipotent.total_dimension, 2);
        assert_eq!(report.radical.torus_rank, 1);
        assert_eq!(report.radical.semisimple_span_rank, 1);
        assert!(report.radical.torus_torsion.is_empty());
    }

    #[test]
    fn weighted_fan_report() {
        let report = aut0_report(&weighted121()).unwrap();
        assert_eq!(report.total_dimension, 7);
        assert_eq!(report.reductive.dimension, 4);
        assert_eq!(report.unipotent.total_dimension, 3);
        assert_eq!(report.unipotent.layers.len(), 1);
        let rep = report
            .representations
            .iter()
            .find(|r| r.acting_class == 0 && r.target == RepTarget::Ray(1))
            .unwrap();
        // V_2 is one copy of S^2 of the 2-dimensional standard space
        assert_eq!(rep.summands, RepSummands::SymmetricPowers(vec![(2, 1)]));
        assert_eq!(symmetric_power_dimension(2, 2), 3);
    }

    #[test]
    fn hirzebruch_gl1_targets() {
        // the two GL_1 classes of F_1 also act on V_4: two copies of S^1 for
        // {v2}, and {v4} sees its own additive group as two dual lines
        let report = aut0_report(&hirzebruch(1)).unwrap();
        let from_v2 = report
            .representations
            .iter()
            .find(|r| r.acting_class == 1 && r.target == RepTarget::Ray(3))
            .unwrap();
        assert_eq!(from_v2.summands, RepSummands::SymmetricPowers(vec![(1, 2)]));
        let own = report
            .representations
            .iter()
            .find(|r| r.acting_class == 2 && r.target == RepTarget::OwnClass)
            .unwrap();
        assert_eq!(own.summands, RepSummands::DualStandard { copies: 2 });
    }

    #[test]
    fn projectivized_bundle_over_the_line() {
        // fiber plane plus a twisted base ray: the two fiber rays spanning
        // the bundle class carry non-semisimple roots, so their GL_2 factor
        // acts on a four-dimensional additive group by two copies of the
        // dual standard representation
        let fan = validate(Fan::from_i64(
            3,
            &[
                &[1, 0, 0],
                &[0, 1, 0],
                &[-1, -1, 0],
                &[0, 0, 1],
                &[-1, -1, -1],
            ],
            &[
                &[0, 1, 3],
                &[0, 2, 3],
                &[1, 2, 3],
                &[0, 1, 4],
                &[0, 2, 4],
                &[1, 2, 4],
            ],
        ))
        .unwrap();
        let report = aut0_report(&fan).unwrap();
        assert_eq!(report.total_dimension, 11);
        assert_eq!(report.num_roots, 8);
        assert_eq!(report.num_semisimple, 4);
        assert_eq!(report.classes, vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert_eq!(report.class_depths, vec![0, 1, 1]);
        assert_eq!(report.reductive.gl_factors, vec![2, 1, 2]);
        assert_eq!(report.reductive.dimension, 7);
        assert_eq!(report.unipotent.total_dimension, 4);
        assert_eq!(report.unipotent.layers.len(), 1);
        assert_eq!(report.unipotent.layers[0].classes, vec![0]);
        let expect = |acting: usize, target: RepTarget| {
            report
                .representations
                .iter()
                .find(|r| r.acting_class == acting && r.target == target)
                .unwrap_or_else(|| panic!("missing action of class {acting}"))
                .summands
                .clone()
        };
        assert_eq!(
            expect(0, RepTarget::OwnClass),
            RepSummands::DualStandard { copies: 2 }
        );
        assert_eq!(
            expect(1, RepTarget::Ray(0)),
            RepSummands::SymmetricPowers(vec![(1, 2)])
        );
        assert_eq!(
            expect(2, RepTarget::Ray(0)),
            RepSummands::SymmetricPowers(vec![(1, 1)])
        );
        assert_eq!(report.radical.torus_rank, 1);
    }

    #[test]
    fn torsion_quotient_has_rigid_connected_group() {
        // quotient of the projective plane by a cyclic group of order three:
        // the quotient kills every root, leaving only the torus
        let fan = validate(Fan::from_i64(
            2,
            &[&[-1, 2], &[-1, -1], &[2, -1]],
            &[&[0, 1], &[1, 2], &[2, 0]],
        ))
        .unwrap();
        let report = aut0_report(&fan).unwrap();
        assert_eq!(report.num_roots, 0);
        assert_eq!(report.total_dimension, 2);
        // three singleton classes: the rays stay inequivalent mod torsion
        assert_eq!(report.classes, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(report.reductive.gl_factors, vec![1, 1, 1]);
        assert_eq!(report.reductive.torus_torsion, vec![BigInt::from(3)]);
        assert_eq!(report.reductive.dimension, 2);
        assert_eq!(report.unipotent.total_dimension, 0);
        assert_eq!(report.radical.torus_rank, 2);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(3, 1), 3);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(2, 0), 1);
        assert_eq!(binomial(1, 3), 0);
        assert_eq!(symmetric_power_dimension(2, 1), 2);
        assert_eq!(symmetric_power_dimension(3, 2), 6);
    }
}
