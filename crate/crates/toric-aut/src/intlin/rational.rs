//! Exact elimination over the rationals.
//!
//! Plain Gaussian elimination on `BigRational` entries. Integer rows go in,
//! rational solutions come out; [`integerize`] scales a rational direction
//! back to a primitive integer vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) fn to_rational_row(row: &[BigInt]) -> Vec<BigRational> {
    row.iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect()
}

/// In-place reduced row echelon form. Returns the pivot column of each pivot
/// row, in increasing order.
pub(crate) fn rref(rows: &mut [Vec<BigRational>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r][c..].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..ncols {
                let sub = &f * &pivot_row[j];
                let cur = row[j].clone();
                row[j] = cur - sub;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank_int_rows(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| to_rational_row(r)).collect();
    rref(&mut m).len()
}

/// Basis of { x in Q^n : <row, x> = 0 for every row }.
pub(crate) fn kernel_basis(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| to_rational_row(r)).collect();
    let pivots = rref(&mut m);
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for f in 0..n {
        if is_pivot[f] {
            continue;
        }
        let mut v = vec![BigRational::zero(); n];
        v[f] = BigRational::one();
        for (pr, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[pr][f].clone();
        }
        basis.push(v);
    }
    basis
}

pub(crate) enum Solution {
    Unique(Vec<BigRational>),
    Inconsistent,
    Underdetermined,
}

/// Solve <row_i, x> = rhs_i exactly over Q^n.
pub(crate) fn solve(rows: &[Vec<BigInt>], rhs: &[BigInt], n: usize) -> Solution {
    debug_assert_eq!(rows.len(), rhs.len());
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = to_rational_row(r);
            v.push(BigRational::from_integer(b.clone()));
            v
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.last() == Some(&n) {
        return Solution::Inconsistent;
    }
    if pivots.len() < n {
        return Solution::Underdetermined;
    }
    let mut x = vec![BigRational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][n].clone();
    }
    Solution::Unique(x)
}

/// Smallest integer vector on the ray through a nonzero rational vector.
/// The zero vector maps to itself.
pub(crate) fn integerize(v: &[BigRational]) -> Vec<BigInt> {
    let mut scale = BigInt::one();
    for x in v {
        scale = scale.lcm(x.denom());
    }
    let scaled: Vec<BigInt> = v.iter().map(|x| x.numer() * (&scale / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &scaled {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return scaled;
    }
    scaled.iter().map(|x| x / &g).collect()
}
