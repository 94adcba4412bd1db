//! Demazure roots of a complete fan.
//!
//! A root is a character `alpha` taking the value `-1` on exactly one ray and
//! nonnegative values on all others. Roots whose negative is again a root are
//! semisimple; they tie rays into equivalence classes (the same classes as
//! linear equivalence of the invariant hypersurfaces, which is cross-checked
//! here). The non-semisimple roots induce a strict partial order on the
//! classes whose depth layering drives the unipotent structure.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::classgroup::class_group;
use crate::fan::ValidatedFan;
use crate::intlin::{polytope_lattice_points, RationalPolytopeSpec};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RootsError {
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("partial order violation: {0}")]
    OrderViolation(String),
}

/// A Demazure root: `v_ray(alpha) = -1`, all other rays nonnegative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Root {
    /// The ray taking the value `-1`.
    pub ray: usize,
    /// The character, as a lattice vector.
    pub alpha: Vec<BigInt>,
    /// Whether `-alpha` is also a root.
    pub semisimple: bool,
    /// For a semisimple root, the unique ray taking the value `+1`.
    pub partner: Option<usize>,
}

/// All roots of the fan, sorted by `(ray, alpha)`, with the classification
/// fields still unset.
pub fn enumerate_roots(fan: &ValidatedFan) -> Vec<Root> {
    let n = fan.rank();
    let mut out = Vec::new();
    for i in 0..fan.num_rays() {
        let mut spec = RationalPolytopeSpec::new(n)
            .equality(fan.ray(i).to_vec(), BigInt::from(-1));
        for j in 0..fan.num_rays() {
            if j != i {
                spec = spec.inequality(fan.ray(j).to_vec(), BigInt::zero());
            }
        }
        let points = polytope_lattice_points(&spec)
            .expect("positive spanning keeps root polytopes bounded");
        out.extend(points.into_iter().map(|alpha| Root {
            ray: i,
            alpha,
            semisimple: false,
            partner: None,
        }));
    }
    out
}

/// Set the semisimple flags and partner rays on a complete root list.
pub fn classify_roots(fan: &ValidatedFan, roots: Vec<Root>) -> Result<Vec<Root>, RootsError> {
    let alphas: BTreeSet<Vec<BigInt>> = roots.iter().map(|r| r.alpha.clone()).collect();
    roots
        .into_iter()
        .map(|mut root| {
            let neg: Vec<BigInt> = root.alpha.iter().map(|x| -x).collect();
            if !alphas.contains(&neg) {
                return Ok(root);
            }
            // the signature must be -1 at the ray, +1 at one partner, 0 elsewhere
            let values = fan.value_vector(&root.alpha);
            let mut partner = None;
            for (j, v) in values.iter().enumerate() {
                if j == root.ray {
                    if !(-v.clone()).is_one() {
                        return Err(RootsError::InternalInconsistency(format!(
                            "root {:?} does not evaluate to -1 on its own ray",
                            root.alpha
                        )));
                    }
                } else if v.is_one() && partner.is_none() {
                    partner = Some(j);
                } else if !v.is_zero() {
                    return Err(RootsError::InternalInconsistency(format!(
                        "semisimple root {:?} has value {} on ray {}",
                        root.alpha, v, j
                    )));
                }
            }
            let Some(j) = partner else {
                return Err(RootsError::InternalInconsistency(format!(
                    "semisimple root {:?} has no partner ray",
                    root.alpha
                )));
            };
            root.semisimple = true;
            root.partner = Some(j);
            Ok(root)
        })
        .collect()
}

/// Enumerate and classify in one step.
pub fn roots_of(fan: &ValidatedFan) -> Result<Vec<Root>, RootsError> {
    classify_roots(fan, enumerate_roots(fan))
}

/// The partition of rays into equivalence classes, together with the
/// semisimple root attached to every ordered pair within a class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayClasses {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    ss_root: BTreeMap<(usize, usize), Vec<BigInt>>,
}

impl RayClasses {
    /// Classes ordered by smallest member ray; members ascending.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, ray: usize) -> usize {
        self.class_of[ray]
    }

    pub fn class_members(&self, class: usize) -> &[usize] {
        &self.classes[class]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// The unique semisimple root evaluating to `-1` on `i` and `+1` on `j`.
    pub fn ss_root(&self, i: usize, j: usize) -> Option<&Vec<BigInt>> {
        self.ss_root.get(&(i, j))
    }
}

/// Partition the rays by the semisimple-root relation and cross-check against
/// equality of divisor classes.
pub fn ray_classes(fan: &ValidatedFan, roots: &[Root]) -> Result<RayClasses, RootsError> {
    let r = fan.num_rays();
    let mut ss_root: BTreeMap<(usize, usize), Vec<BigInt>> = BTreeMap::new();
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for root in roots.iter().filter(|r| r.semisimple) {
        let i = root.ray;
        let j = root.partner.expect("semisimple roots carry a partner");
        if let Some(prev) = ss_root.insert((i, j), root.alpha.clone()) {
            return Err(RootsError::InternalInconsistency(format!(
                "two semisimple roots {:?} and {:?} for the ray pair ({i}, {j})",
                prev, root.alpha
            )));
        }
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        parent[a] = b;
    }
    let mut members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for ray in 0..r {
        let rep = find(&mut parent, ray);
        members.entry(rep).or_default().push(ray);
    }
    let mut classes: Vec<Vec<usize>> = members.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    let mut class_of = vec![0; r];
    for (idx, class) in classes.iter().enumerate() {
        for &ray in class {
            class_of[ray] = idx;
        }
    }
    // every ordered pair within a class carries exactly one semisimple root
    for class in &classes {
        for &i in class {
            for &j in class {
                if i != j && !ss_root.contains_key(&(i, j)) {
                    return Err(RootsError::InternalInconsistency(format!(
                        "rays {i} and {j} are in one class but have no semisimple root"
                    )));
                }
            }
        }
    }
    // the partition must agree with linear equivalence of ray divisors
    let cg = class_group(fan);
    let ray_cls: Vec<_> = (0..r).map(|i| cg.ray_class(i)).collect();
    for i in 0..r {
        for j in i + 1..r {
            let same_class = class_of[i] == class_of[j];
            let same_divisor = ray_cls[i] == ray_cls[j];
            if same_class != same_divisor {
                return Err(RootsError::InternalInconsistency(format!(
                    "semisimple relation and divisor classes disagree on rays {i}, {j}"
                )));
            }
        }
    }
    Ok(RayClasses {
        classes,
        class_of,
        ss_root,
    })
}

/// The strict partial order on ray classes with its depth layering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedClasses {
    /// Pairs `(a, b)` with class `a` strictly below class `b`.
    pub less: BTreeSet<(usize, usize)>,
    /// Depth of each class: the longest chain strictly below it.
    pub depth: Vec<usize>,
    /// Classes grouped by depth; layer `i` holds the classes of depth `i`.
    pub layers: Vec<Vec<usize>>,
}

impl OrderedClasses {
    pub fn is_less(&self, a: usize, b: usize) -> bool {
        self.less.contains(&(a, b))
    }
}

/// Build the order `F < F'` (some non-semisimple root of `F` is positive on
/// `F'`), verify it is a strict partial order, and layer the classes by
/// depth.
pub fn class_order(
    fan: &ValidatedFan,
    roots: &[Root],
    classes: &RayClasses,
) -> Result<OrderedClasses, RootsError> {
    let k = classes.num_classes();
    let mut less: BTreeSet<(usize, usize)> = BTreeSet::new();
    for root in roots.iter().filter(|r| !r.semisimple) {
        let a = classes.class_of(root.ray);
        for (j, value) in fan.value_vector(&root.alpha).into_iter().enumerate() {
            if value.is_positive() {
                let b = classes.class_of(j);
                if a == b {
                    return Err(RootsError::OrderViolation(format!(
                        "class {a} compares below itself via root {:?}",
                        root.alpha
                    )));
                }
                less.insert((a, b));
            }
        }
    }
    for &(a, b) in &less {
        if less.contains(&(b, a)) {
            return Err(RootsError::OrderViolation(format!(
                "asymmetry fails for classes {a} and {b}"
            )));
        }
    }
    for &(a, b) in &less {
        for &(b2, c) in less.range((b, 0)..(b + 1, 0)) {
            debug_assert_eq!(b, b2);
            if !less.contains(&(a, c)) {
                return Err(RootsError::OrderViolation(format!(
                    "transitivity fails: {a} < {b} < {c} but not {a} < {c}"
                )));
            }
        }
    }
    // longest chain strictly below each class; asymmetry + transitivity
    // exclude cycles, so the recursion grounds out
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &(a, b) in &less {
        preds[b].push(a);
    }
    let mut depth = vec![usize::MAX; k];
    fn depth_of(c: usize, preds: &[Vec<usize>], depth: &mut Vec<usize>) -> usize {
        if depth[c] != usize::MAX {
            return depth[c];
        }
        let d = preds[c]
            .iter()
            .map(|&p| depth_of(p, preds, depth) + 1)
            .max()
            .unwrap_or(0);
        depth[c] = d;
        d
    }
    for c in 0..k {
        depth_of(c, &preds, &mut depth);
    }
    let max_depth = depth.iter().copied().max().unwrap_or(0);
    let mut layers: Vec<Vec<usize>> = vec![Vec::new(); max_depth + 1];
    for (c, &d) in depth.iter().enumerate() {
        layers[d].push(c);
    }
    Ok(OrderedClasses {
        less,
        depth,
        layers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::{validate, Fan};
    use crate::intlin::bigvec;

    fn p1() -> ValidatedFan {
        validate(Fan::from_i64(1, &[&[1], &[-1]], &[&[0], &[1]])).unwrap()
    }

    fn p2() -> ValidatedFan {
        validate(Fan::from_i64(
            2,
            &[&[1, 0], &[0, 1], &[-1, -1]],
            &[&[0, 1], &[1, 2], &[2, 0]],
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
    fn roots_of_projective_line() {
        let fan = p1();
        let roots = roots_of(&fan).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].alpha, bigvec(&[-1]));
        assert_eq!(roots[0].ray, 0);
        assert_eq!(roots[1].alpha, bigvec(&[1]));
        assert_eq!(roots[1].ray, 1);
        assert!(roots.iter().all(|r| r.semisimple));
    }

    #[test]
    fn roots_of_projective_plane() {
        let fan = p2();
        let roots = roots_of(&fan).unwrap();
        assert_eq!(roots.len(), 6);
        for i in 0..3 {
            assert_eq!(roots.iter().filter(|r| r.ray == i).count(), 2);
        }
        assert!(roots.iter().all(|r| r.semisimple));
    }

    #[test]
    fn roots_of_hirzebruch_surfaces() {
        for a in 1..=3i64 {
            let fan = hirzebruch(a);
            let roots = roots_of(&fan).unwrap();
            assert_eq!(roots.len() as i64, a + 3, "F_{a} has a+3 roots");
            let by_ray = |i: usize| -> Vec<Vec<BigInt>> {
                roots
                    .iter()
                    .filter(|r| r.ray == i)
                    .map(|r| r.alpha.clone())
                    .collect()
            };
            assert_eq!(by_ray(0), vec![bigvec(&[-1, 0])]);
            assert_eq!(by_ray(1), Vec::<Vec<BigInt>>::new());
            assert_eq!(by_ray(2), vec![bigvec(&[1, 0])]);
            let expected: Vec<Vec<BigInt>> = (0..=a).map(|k| bigvec(&[k, 1])).collect();
            assert_eq!(by_ray(3), expected);
        }
    }

    #[test]
    fn classification_on_first_hirzebruch_surface() {
        let fan = hirzebruch(1);
        let roots = roots_of(&fan).unwrap();
        let find = |alpha: &[BigInt]| roots.iter().find(|r| r.alpha == alpha).unwrap();
        let m = find(&bigvec(&[-1, 0]));
        assert!(m.semisimple);
        assert_eq!(m.partner, Some(2));
        let p = find(&bigvec(&[1, 0]));
        assert!(p.semisimple);
        assert_eq!(p.partner, Some(0));
        for alpha in [bigvec(&[0, 1]), bigvec(&[1, 1])] {
            let r = find(&alpha);
            assert!(!r.semisimple);
            assert_eq!(r.partner, None);
        }
    }

    #[test]
    fn classification_on_weighted_fan() {
        let fan = weighted121();
        let roots = roots_of(&fan).unwrap();
        assert_eq!(roots.len(), 5);
        let semis: Vec<Vec<BigInt>> = roots
            .iter()
            .filter(|r| r.semisimple)
            .map(|r| r.alpha.clone())
            .collect();
        assert_eq!(semis, vec![bigvec(&[-1, 0]), bigvec(&[1, 0])]);
        let nonss: Vec<Vec<BigInt>> = roots
            .iter()
            .filter(|r| !r.semisimple)
            .map(|r| r.alpha.clone())
            .collect();
        assert_eq!(
            nonss,
            vec![bigvec(&[0, -1]), bigvec(&[1, -1]), bigvec(&[2, -1])]
        );
    }

    #[test]
    fn classes_of_examples() {
        let fan = p2();
        let classes = ray_classes(&fan, &roots_of(&fan).unwrap()).unwrap();
        assert_eq!(classes.classes(), &[vec![0, 1, 2]]);

        for a in 1..=3 {
            let fan = hirzebruch(a);
            let classes = ray_classes(&fan, &roots_of(&fan).unwrap()).unwrap();
            assert_eq!(classes.classes(), &[vec![0, 2], vec![1], vec![3]]);
        }

        let fan = p1xp1();
        let classes = ray_classes(&fan, &roots_of(&fan).unwrap()).unwrap();
        assert_eq!(classes.classes(), &[vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn order_on_projective_plane_is_trivial() {
        let fan = p2();
        let roots = roots_of(&fan).unwrap();
        let classes = ray_classes(&fan, &roots).unwrap();
        let ordered = class_order(&fan, &roots, &classes).unwrap();
        assert!(ordered.less.is_empty());
        assert_eq!(ordered.layers, vec![vec![0]]);
        assert_eq!(ordered.depth, vec![0]);
    }

    #[test]
    fn order_on_first_hirzebruch_surface() {
        let fan = hirzebruch(1);
        let roots = roots_of(&fan).unwrap();
        let classes = ray_classes(&fan, &roots).unwrap();
        let ordered = class_order(&fan, &roots, &classes).unwrap();
        // classes: 0 = {v1, v3}, 1 = {v2}, 2 = {v4}
        assert!(ordered.is_less(2, 0));
        assert!(ordered.is_less(2, 1));
        assert_eq!(ordered.less.len(), 2);
        assert_eq!(ordered.depth, vec![1, 1, 0]);
        assert_eq!(ordered.layers, vec![vec![2], vec![0, 1]]);
    }

    #[test]
    fn order_on_weighted_fan() {
        let fan = weighted121();
        let roots = roots_of(&fan).unwrap();
        let classes = ray_classes(&fan, &roots).unwrap();
        let ordered = class_order(&fan, &roots, &classes).unwrap();
        // classes: 0 = {v1, v3}, 1 = {v2}
        assert_eq!(ordered.less.iter().collect::<Vec<_>>(), vec![&(1, 0)]);
        assert_eq!(ordered.depth, vec![1, 0]);
    }

    #[test]
    fn root_signature_holds_everywhere() {
        for fan in [p1(), p2(), hirzebruch(2), p1xp1(), weighted121()] {
            for root in roots_of(&fan).unwrap() {
                let values = fan.value_vector(&root.alpha);
                let negs: Vec<usize> = values
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| v.is_negative())
                    .map(|(j, _)| j)
                    .collect();
                assert_eq!(negs, vec![root.ray]);
                assert_eq!(values[root.ray], BigInt::from(-1));
            }
        }
    }

    #[test]
    fn root_addition_closure() {
        // whenever v_j(r_i) > 0 and r_i + r_j != 0, then v_i(r_j) = 0 and
        // r_i + s*r_j is a root of ray i for 0 <= s <= v_j(r_i), with
        // non-semisimplicity inherited for s >= 1
        for fan in [p1(), p2(), hirzebruch(1), hirzebruch(3), p1xp1(), weighted121()] {
            let roots = roots_of(&fan).unwrap();
            let lookup: BTreeMap<Vec<BigInt>, &Root> =
                roots.iter().map(|r| (r.alpha.clone(), r)).collect();
            for ri in &roots {
                for rj in &roots {
                    if ri.ray == rj.ray {
                        continue;
                    }
                    let sum: Vec<BigInt> =
                        ri.alpha.iter().zip(&rj.alpha).map(|(a, b)| a + b).collect();
                    if sum.iter().all(|x| x.is_zero()) {
                        continue;
                    }
                    let vj_ri = fan.ray_value(rj.ray, &ri.alpha);
                    if !vj_ri.is_positive() {
                        continue;
                    }
                    assert!(fan.ray_value(ri.ray, &rj.alpha).is_zero());
                    let bound = i64::try_from(&vj_ri).unwrap();
                    for s in 0..=bound {
                        let shifted: Vec<BigInt> = ri
                            .alpha
                            .iter()
                            .zip(&rj.alpha)
                            .map(|(a, b)| a + b * BigInt::from(s))
                            .collect();
                        let found = lookup
                            .get(&shifted)
                            .unwrap_or_else(|| panic!("{shifted:?} missing from root set"));
                        assert_eq!(found.ray, ri.ray);
                        if s >= 1 && !ri.semisimple {
                            assert!(!found.semisimple);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn order_holds_for_every_class_member() {
        // if one ray of a class sits below another class, every ray of it
        // does, through its own non-semisimple root
        for fan in [hirzebruch(1), hirzebruch(3), weighted121()] {
            let roots = roots_of(&fan).unwrap();
            let classes = ray_classes(&fan, &roots).unwrap();
            let ordered = class_order(&fan, &roots, &classes).unwrap();
            for &(a, b) in &ordered.less {
                for &i in classes.class_members(a) {
                    let witnessed = roots.iter().any(|r| {
                        !r.semisimple
                            && r.ray == i
                            && classes
                                .class_members(b)
                                .iter()
                                .any(|&j| fan.ray_value(j, &r.alpha).is_positive())
                    });
                    assert!(witnessed, "ray {i} of class {a} has no witness below {b}");
                }
            }
        }
    }

    #[test]
    fn class_members_have_equal_root_counts() {
        for fan in [p2(), hirzebruch(2), p1xp1(), weighted121()] {
            let roots = roots_of(&fan).unwrap();
            let classes = ray_classes(&fan, &roots).unwrap();
            let count = |i: usize| roots.iter().filter(|r| r.ray == i).count();
            for class in classes.classes() {
                let c0 = count(class[0]);
                assert!(class.iter().all(|&i| count(i) == c0));
            }
        }
    }

    #[test]
    fn semisimple_count_matches_class_sizes() {
        for fan in [p1(), p2(), hirzebruch(1), p1xp1(), weighted121()] {
            let roots = roots_of(&fan).unwrap();
            let classes = ray_classes(&fan, &roots).unwrap();
            let ss = roots.iter().filter(|r| r.semisimple).count();
            let expected: usize = classes.class_sizes().iter().map(|l| l * (l - 1)).sum();
            assert_eq!(ss, expected);
            // each ray carries exactly (class size - 1) semisimple roots
            for class in classes.classes() {
                for &i in class {
                    let per_ray = roots
                        .iter()
                        .filter(|r| r.ray == i && r.semisimple)
                        .count();
                    assert_eq!(per_ray, class.len() - 1);
                }
            }
        }
    }

    #[test]
    fn value_vectors_of_roots_project_to_zero() {
        // the image v(alpha) of a root has a single -1, rest >= 0, and lies
        // in the kernel of the class-group projection
        for fan in [p2(), hirzebruch(3), weighted121()] {
            let cg = crate::classgroup::class_group(&fan);
            for root in roots_of(&fan).unwrap() {
                let image = fan.value_vector(&root.alpha);
                let negatives: Vec<&BigInt> =
                    image.iter().filter(|x| x.is_negative()).collect();
                assert_eq!(negatives, vec![&BigInt::from(-1)]);
                assert!(cg.divisor_class(&image).unwrap().is_zero());
            }
        }
    }
}
