//! Smith normal form by pivot-and-reduce on arbitrary-precision integers.

use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Unimodular factorization `U * A * V = D` with `D` diagonal.
///
/// The diagonal entries of `D` are nonnegative and each divides the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Diagonal of `D`, one entry per row/column pair of the input.
    pub fn diagonal(&self) -> Vec<num_bigint::BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d.at(i, i).clone()).collect()
    }
}

/// Position of the smallest nonzero entry (by absolute value) of the
/// trailing submatrix starting at `(t, t)`.
fn smallest_nonzero(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows() {
        for j in t..m.cols() {
            let x = m.at(i, j);
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m.at(bi, bj).abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Smith normal form of `a`.
///
/// Row operations accumulate in `u`, column operations in `v`, so that
/// `u * a * v = d` holds exactly and `|det u| = |det v| = 1`.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let rows = a.rows();
    let cols = a.cols();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let tmax = rows.min(cols);
    let mut t = 0;
    'place: while t < tmax {
        let Some((pi, pj)) = smallest_nonzero(&d, t) else {
            break;
        };
        if pi != t {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
        }
        if pj != t {
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
        }
        // Euclidean reduction: clear column t and row t outside the pivot.
        // A nonzero remainder is strictly smaller than the pivot, so swapping
        // it into the pivot slot terminates.
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if d.at(i, t).is_zero() {
                    continue;
                }
                let q = d.at(i, t) / d.at(t, t);
                if !q.is_zero() {
                    d.row_sub_mul(i, t, &q);
                    u.row_sub_mul(i, t, &q);
                }
                if !d.at(i, t).is_zero() {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            for j in t + 1..cols {
                if d.at(t, j).is_zero() {
                    continue;
                }
                let q = d.at(t, j) / d.at(t, t);
                if !q.is_zero() {
                    d.col_sub_mul(j, t, &q);
                    v.col_sub_mul(j, t, &q);
                }
                if !d.at(t, j).is_zero() {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        // Divisibility: the pivot must divide every remaining entry.
        let pivot = d.at(t, t).clone();
        for i in t + 1..rows {
            for j in t + 1..cols {
                if !(d.at(i, j) % &pivot).is_zero() {
                    d.row_add(t, i);
                    u.row_add(t, i);
                    continue 'place;
                }
            }
        }
        if d.at(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    SnfResult { u, d, v }
}
