//! The finite symmetry group of a fan and the component group of the full
//! automorphism group.
//!
//! A lattice automorphism preserves the fan when its transpose permutes the
//! ray set and maps every maximal cone onto a maximal cone. The search picks
//! a rational basis among the rays, tries every injective assignment of the
//! basis rays to rays, solves for the matrix exactly, and keeps the integral
//! unimodular solutions that preserve the fan. Within-class ray permutations
//! embed into this group through the semisimple roots; the quotient by their
//! image is the component group.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::fan::ValidatedFan;
use crate::intlin::rational::{rank_int_rows, rref};
use crate::intlin::IntMatrix;
use crate::roots::{ray_classes, roots_of, RayClasses, RootsError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FanAutoError {
    #[error(transparent)]
    Roots(#[from] RootsError),
    #[error("permutation {0:?} does not fix every ray class setwise")]
    InvalidPermutation(Vec<usize>),
    #[error("embedded permutation {perm:?} does not preserve the fan")]
    NotInAutDelta { perm: Vec<usize> },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// A lattice automorphism preserving the fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeAut {
    /// Matrix of the action on the character lattice.
    pub matrix: IntMatrix,
    /// Determinant, `+1` or `-1`.
    pub det: BigInt,
    /// The induced permutation of the rays: ray `i` maps to ray `p[i]`.
    pub ray_permutation: Vec<usize>,
}

impl LatticeAut {
    pub fn apply(&self, alpha: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(alpha)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == IntMatrix::identity(self.matrix.rows())
    }
}

/// Classify an integer matrix acting on the character lattice: accepted when
/// its transpose permutes the rays bijectively and preserves the cone set.
fn classify_matrix(fan: &ValidatedFan, matrix: IntMatrix) -> Option<LatticeAut> {
    let det = matrix.det();
    if det != BigInt::one() && det != BigInt::from(-1) {
        return None;
    }
    let transpose = matrix.transpose();
    let ray_index: BTreeMap<&[BigInt], usize> = (0..fan.num_rays())
        .map(|i| (fan.ray(i), i))
        .collect();
    let mut perm = Vec::with_capacity(fan.num_rays());
    for i in 0..fan.num_rays() {
        let image = transpose.mul_vec(fan.ray(i));
        match ray_index.get(image.as_slice()) {
            Some(&j) => perm.push(j),
            None => return None,
        }
    }
    let mut seen = vec![false; fan.num_rays()];
    for &j in &perm {
        if seen[j] {
            return None;
        }
        seen[j] = true;
    }
    let cone_set: BTreeSet<&[usize]> = fan.max_cones().iter().map(Vec::as_slice).collect();
    for cone in fan.max_cones() {
        let mut image: Vec<usize> = cone.iter().map(|&i| perm[i]).collect();
        image.sort_unstable();
        if !cone_set.contains(image.as_slice()) {
            return None;
        }
    }
    Some(LatticeAut {
        matrix,
        det,
        ray_permutation: perm,
    })
}

/// Ray indices forming a rational basis, chosen greedily.
fn anchor_rays(fan: &ValidatedFan) -> Vec<usize> {
    let n = fan.rank();
    let mut chosen: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..fan.num_rays() {
        rows.push(fan.ray(i).to_vec());
        if rank_int_rows(&rows) == rows.len() {
            chosen.push(i);
        } else {
            rows.pop();
        }
        if chosen.len() == n {
            break;
        }
    }
    debug_assert_eq!(chosen.len(), n, "rays of a validated fan span");
    chosen
}

/// Rational inverse of the matrix with the anchor rays as columns.
fn rational_inverse(columns: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    let n = columns.len();
    // augmented elimination [A | I]
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> =
                columns.iter().map(|c| BigRational::from_integer(c[i].clone())).collect();
            for j in 0..n {
                row.push(if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
            }
            row
        })
        .collect();
    let pivots = rref(&mut m);
    debug_assert_eq!(pivots, (0..n).collect::<Vec<_>>());
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// The complete finite group of lattice automorphisms preserving the fan,
/// sorted by matrix entries.
pub fn lattice_automorphisms(fan: &ValidatedFan) -> Vec<LatticeAut> {
    let n = fan.rank();
    let r = fan.num_rays();
    let anchors = anchor_rays(fan);
    let anchor_cols: Vec<Vec<BigInt>> = anchors.iter().map(|&i| fan.ray(i).to_vec()).collect();
    let a_inv = rational_inverse(&anchor_cols);
    let mut found = Vec::new();
    let mut assignment: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; r];
    fn search(
        fan: &ValidatedFan,
        a_inv: &[Vec<BigRational>],
        assignment: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<LatticeAut>,
        n: usize,
    ) {
        if assignment.len() == n {
            // transpose matrix = B * A^-1 where B has the image rays as columns
            let mut transpose = vec![vec![BigRational::zero(); n]; n];
            for (row, trow) in transpose.iter_mut().enumerate() {
                for (col, tentry) in trow.iter_mut().enumerate() {
                    let mut acc = BigRational::zero();
                    for (k, &img) in assignment.iter().enumerate() {
                        acc += BigRational::from_integer(fan.ray(img)[row].clone())
                            * &a_inv[k][col];
                    }
                    *tentry = acc;
                }
            }
            if transpose
                .iter()
                .flatten()
                .any(|x| !x.is_integer())
            {
                return;
            }
            let rows: Vec<Vec<BigInt>> = transpose
                .iter()
                .map(|row| row.iter().map(|x| x.to_integer()).collect())
                .collect();
            let t_int = IntMatrix::from_rows(rows).expect("square matrix");
            let matrix = t_int.transpose();
            if let Some(aut) = classify_matrix(fan, matrix) {
                found.push(aut);
            }
            return;
        }
        for cand in 0..used.len() {
            if used[cand] {
                continue;
            }
            used[cand] = true;
            assignment.push(cand);
            search(fan, a_inv, assignment, used, found, n);
            assignment.pop();
            used[cand] = false;
        }
    }
    search(fan, &a_inv, &mut assignment, &mut used, &mut found, n);
    found.sort_by(|a, b| a.matrix.cmp(&b.matrix));
    found
}

/// Embed a within-class ray permutation as a lattice automorphism:
/// `alpha -> alpha + sum_i v_i(alpha) * beta_i` with `beta_i` the semisimple
/// root sending ray `i` to ray `perm[i]`.
pub fn weyl_embedding(
    fan: &ValidatedFan,
    classes: &RayClasses,
    perm: &[usize],
) -> Result<LatticeAut, FanAutoError> {
    let r = fan.num_rays();
    let n = fan.rank();
    if perm.len() != r {
        return Err(FanAutoError::InvalidPermutation(perm.to_vec()));
    }
    let mut seen = vec![false; r];
    for (i, &j) in perm.iter().enumerate() {
        if j >= r || seen[j] || classes.class_of(i) != classes.class_of(j) {
            return Err(FanAutoError::InvalidPermutation(perm.to_vec()));
        }
        seen[j] = true;
    }
    let mut matrix = IntMatrix::identity(n);
    for (i, &j) in perm.iter().enumerate() {
        if i == j {
            continue;
        }
        let beta = classes
            .ss_root(i, j)
            .ok_or_else(|| FanAutoError::InvalidPermutation(perm.to_vec()))?;
        // matrix += beta (column) * ray_i (row)
        for (a, beta_a) in beta.iter().enumerate() {
            for (b, ray_b) in fan.ray(i).iter().enumerate() {
                let add = beta_a * ray_b;
                *matrix.at_mut(a, b) += add;
            }
        }
    }
    classify_matrix(fan, matrix).ok_or(FanAutoError::NotInAutDelta {
        perm: perm.to_vec(),
    })
}

/// All permutations of `0..r` fixing each class setwise, as full-length
/// permutation vectors.
fn within_class_permutations(classes: &RayClasses, r: usize) -> Vec<Vec<usize>> {
    fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
        if items.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (k, &head) in items.iter().enumerate() {
            let mut rest = items.to_vec();
            rest.remove(k);
            for mut tail in permutations(&rest) {
                tail.insert(0, head);
                out.push(tail);
            }
        }
        out
    }
    let mut result: Vec<Vec<usize>> = vec![(0..r).collect()];
    for class in classes.classes() {
        let images = permutations(class);
        let mut next = Vec::with_capacity(result.len() * images.len());
        for base in &result {
            for image in &images {
                let mut p = base.clone();
                for (&from, &to) in class.iter().zip(image) {
                    p[from] = to;
                }
                next.push(p);
            }
        }
        result = next;
    }
    result
}

/// The fan symmetry group, the embedded within-class permutation group, and
/// the quotient data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentGroupReport {
    /// The full group, sorted by matrix entries.
    pub aut_delta: Vec<LatticeAut>,
    /// Indices into `aut_delta` of the embedded permutation group.
    pub weyl_image: Vec<usize>,
    /// One representative index per coset, sorted.
    pub representatives: Vec<usize>,
    /// The full coset partition, each coset sorted.
    pub cosets: Vec<Vec<usize>>,
    /// Order of the quotient group.
    pub order: usize,
}

/// Compute the component group of the automorphism group: the quotient of
/// the fan symmetry group by the embedded within-class permutations.
/// Group axioms and normality of the embedded image are verified explicitly.
pub fn component_group(fan: &ValidatedFan) -> Result<ComponentGroupReport, FanAutoError> {
    let roots = roots_of(fan)?;
    let classes = ray_classes(fan, &roots)?;
    component_group_with(fan, &classes)
}

/// As [`component_group`], reusing a computed class partition.
pub fn component_group_with(
    fan: &ValidatedFan,
    classes: &RayClasses,
) -> Result<ComponentGroupReport, FanAutoError> {
    let aut_delta = lattice_automorphisms(fan);
    let index_of: BTreeMap<IntMatrix, usize> = aut_delta
        .iter()
        .enumerate()
        .map(|(k, a)| (a.matrix.clone(), k))
        .collect();
    let locate = |m: &IntMatrix, what: &str| -> Result<usize, FanAutoError> {
        index_of
            .get(m)
            .copied()
            .ok_or_else(|| FanAutoError::Internal(format!("{what} escapes the symmetry group")))
    };

    // closure, identity, inverses
    let identity = IntMatrix::identity(fan.rank());
    locate(&identity, "identity")?;
    for a in &aut_delta {
        let inv = a
            .matrix
            .inverse_unimodular()
            .ok_or_else(|| FanAutoError::Internal("non-unimodular element".into()))?;
        locate(&inv, "inverse")?;
        for b in &aut_delta {
            locate(&a.matrix.mul(&b.matrix), "product")?;
        }
    }

    let perms = within_class_permutations(classes, fan.num_rays());
    let expected_weyl = perms.len();
    let mut weyl_set: BTreeSet<usize> = BTreeSet::new();
    for perm in &perms {
        let aut = weyl_embedding(fan, classes, perm)?;
        weyl_set.insert(locate(&aut.matrix, "embedded permutation")?);
    }
    if weyl_set.len() != expected_weyl {
        return Err(FanAutoError::Internal(format!(
            "embedding is not injective: {} permutations, {} images",
            expected_weyl,
            weyl_set.len()
        )));
    }

    // normality by explicit conjugation
    for g in &aut_delta {
        let g_inv = g.matrix.inverse_unimodular().expect("already checked");
        for &w in &weyl_set {
            let conj = g.matrix.mul(&aut_delta[w].matrix).mul(&g_inv);
            let k = locate(&conj, "conjugate")?;
            if !weyl_set.contains(&k) {
                return Err(FanAutoError::Internal(
                    "embedded permutation group is not normal".into(),
                ));
            }
        }
    }

    if !aut_delta.len().is_multiple_of(weyl_set.len()) {
        return Err(FanAutoError::Internal(
            "subgroup order does not divide group order".into(),
        ));
    }
    let mut assigned = vec![false; aut_delta.len()];
    let mut representatives = Vec::new();
    let mut cosets = Vec::new();
    for g in 0..aut_delta.len() {
        if assigned[g] {
            continue;
        }
        representatives.push(g);
        let mut coset = Vec::new();
        for &w in &weyl_set {
            let prod = aut_delta[g].matrix.mul(&aut_delta[w].matrix);
            let k = locate(&prod, "coset element")?;
            if assigned[k] {
                return Err(FanAutoError::Internal("cosets overlap".into()));
            }
            assigned[k] = true;
            coset.push(k);
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    let order = cosets.len();
    debug_assert_eq!(order * weyl_set.len(), aut_delta.len());
    Ok(ComponentGroupReport {
        aut_delta,
        weyl_image: weyl_set.into_iter().collect(),
        representatives,
        cosets,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::{validate, Fan};
    use crate::intlin::bigvec;

    fn p2() -> ValidatedFan {
        validate(Fan::from_i64(
            2,
            &[&[1, 0], &[0, 1], &[-1, -1]],
            &[&[0, 1], &[1, 2], &[2, 0]],
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

    fn hirzebruch(a: i64) -> ValidatedFan {
        validate(Fan::from_i64(
            2,
            &[&[1, 0], &[0, 1], &[-1, a], &[0, -1]],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
        ))
        .unwrap()
    }

    /// Exhaustive matrix search with entries in [-bound, bound]; independent
    /// of the anchor-based search.
    fn brute_force_rank2(fan: &ValidatedFan, bound: i64) -> Vec<IntMatrix> {
        let mut out = Vec::new();
        for a in -bound..=bound {
            for b in -bound..=bound {
                for c in -bound..=bound {
                    for d in -bound..=bound {
                        let m = IntMatrix::from_i64_rows(&[&[a, b], &[c, d]]);
                        if classify_matrix(fan, m.clone()).is_some() {
                            out.push(m);
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn symmetries_of_p2() {
        let fan = p2();
        let auts = lattice_automorphisms(&fan);
        assert_eq!(auts.len(), 6);
        let brute = brute_force_rank2(&fan, 3);
        let got: Vec<IntMatrix> = auts.iter().map(|a| a.matrix.clone()).collect();
        assert_eq!(got, brute);
    }

    #[test]
    fn symmetries_of_p1xp1() {
        let fan = p1xp1();
        let auts = lattice_automorphisms(&fan);
        assert_eq!(auts.len(), 8);
        let brute = brute_force_rank2(&fan, 3);
        assert_eq!(auts.len(), brute.len());
    }

    #[test]
    fn symmetries_of_hirzebruch() {
        for a in 1..=3 {
            let fan = hirzebruch(a);
            let auts = lattice_automorphisms(&fan);
            assert_eq!(auts.len(), 2, "F_{a} has only the ray swap");
            let swap = auts.iter().find(|m| !m.is_identity()).unwrap();
            assert_eq!(swap.ray_permutation, vec![2, 1, 0, 3]);
        }
    }

    #[test]
    fn group_closure_by_construction() {
        for fan in [p2(), p1xp1(), hirzebruch(2)] {
            let auts = lattice_automorphisms(&fan);
            let matrices: BTreeSet<IntMatrix> =
                auts.iter().map(|a| a.matrix.clone()).collect();
            for a in &auts {
                assert!(matrices.contains(&a.matrix.inverse_unimodular().unwrap()));
                for b in &auts {
                    assert!(matrices.contains(&a.matrix.mul(&b.matrix)));
                }
            }
        }
    }

    #[test]
    fn weyl_embedding_identity_is_identity() {
        let fan = p2();
        let roots = roots_of(&fan).unwrap();
        let classes = ray_classes(&fan, &roots).unwrap();
        let aut = weyl_embedding(&fan, &classes, &[0, 1, 2]).unwrap();
        assert!(aut.is_identity());
    }

    #[test]
    fn weyl_embedding_of_a_transposition_on_p2() {
        let fan = p2();
        let roots = roots_of(&fan).unwrap();
        let classes = ray_classes(&fan, &roots).unwrap();
        let aut = weyl_embedding(&fan, &classes, &[1, 0, 2]).unwrap();
        assert_eq!(aut.ray_permutation, vec![1, 0, 2]);
        // alpha -> (alpha_2, alpha_1): the coordinate swap
        assert_eq!(aut.apply(&bigvec(&[3, 5])), bigvec(&[5, 3]));
    }

    #[test]
    fn weyl_embedding_of_hirzebruch_swap() {
        let fan = hirzebruch(1);
        let roots = roots_of(&fan).unwrap();
        let classes = ray_classes(&fan, &roots).unwrap();
        let aut = weyl_embedding(&fan, &classes, &[2, 1, 0, 3]).unwrap();
        let auts = lattice_automorphisms(&fan);
        let swap = auts.iter().find(|m| !m.is_identity()).unwrap();
        assert_eq!(&aut, swap);
    }

    #[test]
    fn weyl_embedding_rejects_cross_class_permutations() {
        let fan = hirzebruch(1);
        let roots = roots_of(&fan).unwrap();
        let classes = ray_classes(&fan, &roots).unwrap();
        assert!(matches!(
            weyl_embedding(&fan, &classes, &[0, 3, 2, 1]),
            Err(FanAutoError::InvalidPermutation(_))
        ));
    }

    #[test]
    fn weyl_embedding_is_a_homomorphism_on_p2() {
        let fan = p2();
        let roots = roots_of(&fan).unwrap();
        let classes = ray_classes(&fan, &roots).unwrap();
        let perms: Vec<Vec<usize>> = vec![
            vec![0, 1, 2],
            vec![1, 0, 2],
            vec![0, 2, 1],
            vec![2, 1, 0],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ];
        let embed = |p: &[usize]| weyl_embedding(&fan, &classes, p).unwrap().matrix;
        for p in &perms {
            for q in &perms {
                let compose: Vec<usize> = (0..3).map(|i| p[q[i]]).collect();
                // matrices act on characters, so composition reverses
                assert_eq!(
                    embed(p).mul(&embed(q)),
                    embed(&compose),
                    "embedding fails to be a homomorphism on {p:?}, {q:?}"
                );
            }
        }
    }

    #[test]
    fn component_group_of_p2_is_trivial() {
        let report = component_group(&p2()).unwrap();
        assert_eq!(report.aut_delta.len(), 6);
        assert_eq!(report.weyl_image.len(), 6);
        assert_eq!(report.order, 1);
    }

    #[test]
    fn component_group_of_p1xp1_has_order_two() {
        let report = component_group(&p1xp1()).unwrap();
        assert_eq!(report.aut_delta.len(), 8);
        assert_eq!(report.weyl_image.len(), 4);
        assert_eq!(report.order, 2);
        assert_eq!(report.cosets.len(), 2);
    }

    #[test]
    fn component_group_of_hirzebruch_is_trivial() {
        for a in 1..=3 {
            let report = component_group(&hirzebruch(a)).unwrap();
            assert_eq!(report.aut_delta.len(), 2);
            assert_eq!(report.order, 1);
        }
    }

    #[test]
    fn symmetries_preserve_ray_classes() {
        for fan in [p2(), p1xp1(), hirzebruch(1)] {
            let roots = roots_of(&fan).unwrap();
            let classes = ray_classes(&fan, &roots).unwrap();
            for aut in lattice_automorphisms(&fan) {
                // classes map onto classes of equal size
                let mut image_classes: BTreeSet<Vec<usize>> = BTreeSet::new();
                for class in classes.classes() {
                    let mut image: Vec<usize> =
                        class.iter().map(|&i| aut.ray_permutation[i]).collect();
                    image.sort_unstable();
                    image_classes.insert(image);
                }
                let original: BTreeSet<Vec<usize>> =
                    classes.classes().iter().cloned().collect();
                assert_eq!(image_classes, original);
            }
        }
    }
}
