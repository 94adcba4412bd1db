//! Lattice points of rational polytopes.
//!
//! The enumeration is exact and elementary: compute every vertex of the
//! polyhedron by solving the square subsystems of active constraints over the
//! rationals, reject unbounded systems by exhibiting a recession direction,
//! then scan the integer bounding box of the vertex set and keep the points
//! that satisfy all constraints.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::rational::{integerize, kernel_basis, rref, solve, to_rational_row, Solution};
use super::{dot, IntLinError};

/// Constraint system `<w, alpha> = c` (equalities) and `<w, alpha> >= c`
/// (inequalities) over an `n`-dimensional lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolytopeSpec {
    pub dimension: usize,
    pub equalities: Vec<(Vec<BigInt>, BigInt)>,
    pub inequalities: Vec<(Vec<BigInt>, BigInt)>,
}

impl RationalPolytopeSpec {
    pub fn new(dimension: usize) -> Self {
        RationalPolytopeSpec {
            dimension,
            equalities: Vec::new(),
            inequalities: Vec::new(),
        }
    }

    /// Add `<w, alpha> = c`.
    pub fn equality(mut self, w: Vec<BigInt>, c: BigInt) -> Self {
        self.equalities.push((w, c));
        self
    }

    /// Add `<w, alpha> >= c`.
    pub fn inequality(mut self, w: Vec<BigInt>, c: BigInt) -> Self {
        self.inequalities.push((w, c));
        self
    }

    fn check_dimensions(&self) -> Result<(), IntLinError> {
        for (w, _) in self.equalities.iter().chain(&self.inequalities) {
            if w.len() != self.dimension {
                return Err(IntLinError::DimensionMismatch {
                    expected: self.dimension,
                    found: w.len(),
                });
            }
        }
        Ok(())
    }

    fn satisfied_by(&self, point: &[BigInt]) -> bool {
        self.equalities.iter().all(|(w, c)| dot(w, point) == *c)
            && self.inequalities.iter().all(|(w, c)| dot(w, point) >= *c)
    }

    fn satisfied_by_rational(&self, point: &[BigRational]) -> bool {
        let dot_q = |w: &[BigInt], p: &[BigRational]| -> BigRational {
            w.iter()
                .zip(p)
                .map(|(a, b)| BigRational::from_integer(a.clone()) * b)
                .sum()
        };
        self.equalities
            .iter()
            .all(|(w, c)| dot_q(w, point) == BigRational::from_integer(c.clone()))
            && self
                .inequalities
                .iter()
                .all(|(w, c)| dot_q(w, point) >= BigRational::from_integer(c.clone()))
    }
}

/// Visit every `k`-element subset of `0..m`.
pub(crate) fn for_each_combination<F: FnMut(&[usize])>(m: usize, k: usize, f: &mut F) {
    fn rec<F: FnMut(&[usize])>(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut F) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let remaining = k - cur.len();
        for i in start..=m.saturating_sub(remaining) {
            cur.push(i);
            rec(m, k, i + 1, cur, f);
            cur.pop();
        }
    }
    if k > m {
        return;
    }
    rec(m, k, 0, &mut Vec::new(), f);
}

/// A nonzero integer direction of the recession cone
/// `{ d : E d = 0, G d >= 0 }`, if one exists.
///
/// The lineality space is tested first; a pointed nonzero cone is then
/// detected through its extreme rays, each of which is the kernel of some
/// rank `n-1` subset of active constraints.
pub(crate) fn recession_direction(
    n: usize,
    equalities: &[Vec<BigInt>],
    inequalities: &[Vec<BigInt>],
) -> Option<Vec<BigInt>> {
    let mut all: Vec<Vec<BigInt>> = equalities.to_vec();
    all.extend(inequalities.iter().cloned());
    if let Some(line) = kernel_basis(&all, n).into_iter().next() {
        return Some(integerize(&line));
    }
    let satisfies = |d: &[BigInt]| inequalities.iter().all(|w| !dot(w, d).is_negative());
    for size in 0..n {
        if size > inequalities.len() {
            break;
        }
        let mut found: Option<Vec<BigInt>> = None;
        for_each_combination(inequalities.len(), size, &mut |subset| {
            if found.is_some() {
                return;
            }
            let mut rows: Vec<Vec<BigInt>> = equalities.to_vec();
            rows.extend(subset.iter().map(|&i| inequalities[i].clone()));
            let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| to_rational_row(r)).collect();
            if rref(&mut m).len() + 1 != n {
                return;
            }
            let kernel = kernel_basis(&rows, n);
            debug_assert_eq!(kernel.len(), 1);
            let d = integerize(&kernel[0]);
            if satisfies(&d) {
                found = Some(d);
            } else {
                let neg: Vec<BigInt> = d.iter().map(|x| -x).collect();
                if satisfies(&neg) {
                    found = Some(neg);
                }
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// All vertices of the polyhedron, as exact rational points.
fn vertices(spec: &RationalPolytopeSpec) -> Vec<Vec<BigRational>> {
    let n = spec.dimension;
    let eq_rows: Vec<Vec<BigInt>> = spec.equalities.iter().map(|(w, _)| w.clone()).collect();
    let eq_rhs: Vec<BigInt> = spec.equalities.iter().map(|(_, c)| c.clone()).collect();
    let mut out: BTreeSet<Vec<BigRational>> = BTreeSet::new();
    for size in 0..=n.min(spec.inequalities.len()) {
        for_each_combination(spec.inequalities.len(), size, &mut |subset| {
            let mut rows = eq_rows.clone();
            let mut rhs = eq_rhs.clone();
            for &i in subset {
                rows.push(spec.inequalities[i].0.clone());
                rhs.push(spec.inequalities[i].1.clone());
            }
            if let Solution::Unique(x) = solve(&rows, &rhs, n) {
                if spec.satisfied_by_rational(&x) {
                    out.insert(x);
                }
            }
        });
    }
    out.into_iter().collect()
}

/// Exactly the integer points satisfying all constraints, in lexicographic
/// order. An infeasible system yields the empty list; a system with a
/// nonzero recession direction is rejected as unbounded.
pub fn polytope_lattice_points(
    spec: &RationalPolytopeSpec,
) -> Result<Vec<Vec<BigInt>>, IntLinError> {
    spec.check_dimensions()?;
    let n = spec.dimension;
    let eq_normals: Vec<Vec<BigInt>> = spec.equalities.iter().map(|(w, _)| w.clone()).collect();
    let ineq_normals: Vec<Vec<BigInt>> =
        spec.inequalities.iter().map(|(w, _)| w.clone()).collect();
    if let Some(direction) = recession_direction(n, &eq_normals, &ineq_normals) {
        return Err(IntLinError::Unbounded { direction });
    }
    let verts = vertices(spec);
    if verts.is_empty() {
        // bounded and nonempty would force a vertex
        return Ok(Vec::new());
    }
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for j in 0..n {
        let min = verts.iter().map(|v| &v[j]).min().unwrap();
        let max = verts.iter().map(|v| &v[j]).max().unwrap();
        lo.push(min.ceil().to_integer());
        hi.push(max.floor().to_integer());
    }
    let mut points = Vec::new();
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return Ok(points);
    }
    // odometer scan; the visiting order is already lexicographic
    let mut cursor = lo.clone();
    'scan: loop {
        if spec.satisfied_by(&cursor) {
            points.push(cursor.clone());
        }
        let mut j = n;
        while j > 0 {
            j -= 1;
            if cursor[j] < hi[j] {
                cursor[j] += 1;
                cursor[(j + 1)..n].clone_from_slice(&lo[(j + 1)..n]);
                continue 'scan;
            }
        }
        break;
    }
    Ok(points)
}
