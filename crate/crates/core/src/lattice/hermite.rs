use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntegerMatrix;

/// Row echelon form over the integers, restricted to the first `limit`
/// columns. Rows are combined with unimodular operations only, so any
/// columns beyond `limit` carry the accumulated transform when the input
/// was augmented with an identity block.
///
/// Returns the pivot columns; rows `0..pivots.len()` are the pivot rows and
/// all later rows vanish on the first `limit` columns. Pivots are positive
/// and entries above each pivot are reduced into `[0, pivot)`.
pub(crate) fn echelonize(m: &mut IntegerMatrix, limit: usize) -> Vec<usize> {
    let rows = m.rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..limit.min(m.cols()) {
        if r == rows {
            break;
        }
        let mut found = false;
        loop {
            let best = (r..rows)
                .filter(|&i| !m.get(i, c).is_zero())
                .min_by(|&a, &b| m.get(a, c).abs().cmp(&m.get(b, c).abs()));
            let Some(p) = best else { break };
            found = true;
            m.swap_rows(r, p);
            let pivot = m.get(r, c).clone();
            let mut clean = true;
            for i in r + 1..rows {
                if !m.get(i, c).is_zero() {
                    let q = m.get(i, c).div_floor(&pivot);
                    m.add_row_multiple(i, r, &-q);
                    clean &= m.get(i, c).is_zero();
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if m.get(r, c).is_negative() {
            m.negate_row(r);
        }
        let pivot = m.get(r, c).clone();
        for i in 0..r {
            if !m.get(i, c).is_zero() {
                let q = m.get(i, c).div_floor(&pivot);
                m.add_row_multiple(i, r, &-q);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Row-style Hermite normal form with zero rows removed, together with the
/// pivot column of each row.
pub fn hermite_normal_form(a: &IntegerMatrix) -> (IntegerMatrix, Vec<usize>) {
    let mut m = a.clone();
    let pivots = echelonize(&mut m, a.cols());
    (m.block(0..pivots.len(), 0..a.cols()), pivots)
}

/// Rows spanning `{x : x · A = 0}` (the left kernel), saturated.
pub(crate) fn left_kernel_rows(a: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let (m, n) = (a.rows(), a.cols());
    let mut aug = IntegerMatrix::zeros(m, n + m);
    for i in 0..m {
        for j in 0..n {
            *aug.get_mut(i, j) = a.get(i, j).clone();
        }
        *aug.get_mut(i, n + i) = BigInt::from(1);
    }
    let rank = echelonize(&mut aug, n).len();
    (rank..m).map(|i| aug.row(i)[n..].to_vec()).collect()
}
