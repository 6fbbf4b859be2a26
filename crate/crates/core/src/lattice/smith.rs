use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntegerMatrix;

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal with
/// `d_1 | d_2 | … | d_r`, nonnegative, zeros last.
///
/// The inverses of both transforms are tracked alongside them; quotient
/// computations need `V⁻¹` to read off generators.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub v_inv: IntegerMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries `d_1, …, d_min(m,n)`, including trailing zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

struct Work {
    d: IntegerMatrix,
    u: IntegerMatrix,
    u_inv: IntegerMatrix,
    v: IntegerMatrix,
    v_inv: IntegerMatrix,
}

impl Work {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[target] += k * row[source]
    fn add_row(&mut self, target: usize, source: usize, k: &BigInt) {
        self.d.add_row_multiple(target, source, k);
        self.u.add_row_multiple(target, source, k);
        self.u_inv.add_col_multiple(source, target, &-k);
    }

    /// col[target] += k * col[source]
    fn add_col(&mut self, target: usize, source: usize, k: &BigInt) {
        self.d.add_col_multiple(target, source, k);
        self.v.add_col_multiple(target, source, k);
        self.v_inv.add_row_multiple(source, target, &-k);
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Position of the smallest nonzero entry in row `t` / column `t` of
    /// the trailing block, or anywhere in it when `whole` is set.
    fn smallest(&self, t: usize, whole: bool) -> Option<(usize, usize)> {
        let (m, n) = (self.d.rows(), self.d.cols());
        let mut best: Option<((usize, usize), BigInt)> = None;
        let mut consider = |i: usize, j: usize| {
            let x = self.d.get(i, j);
            if !x.is_zero() {
                let a = x.abs();
                if best.as_ref().is_none_or(|(_, b)| a < *b) {
                    best = Some(((i, j), a));
                }
            }
        };
        if whole {
            for i in t..m {
                for j in t..n {
                    consider(i, j);
                }
            }
        } else {
            for i in t..m {
                consider(i, t);
            }
            for j in t + 1..n {
                consider(t, j);
            }
        }
        best.map(|(p, _)| p)
    }
}

/// Smith normal form with smallest-entry pivoting.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        d: a.clone(),
        u: IntegerMatrix::identity(m),
        u_inv: IntegerMatrix::identity(m),
        v: IntegerMatrix::identity(n),
        v_inv: IntegerMatrix::identity(n),
    };

    for t in 0..m.min(n) {
        let Some((pi, pj)) = w.smallest(t, true) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        loop {
            let pivot = w.d.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..m {
                if !w.d.get(i, t).is_zero() {
                    let q = w.d.get(i, t).div_floor(&pivot);
                    w.add_row(i, t, &-q);
                    clean &= w.d.get(i, t).is_zero();
                }
            }
            for j in t + 1..n {
                if !w.d.get(t, j).is_zero() {
                    let q = w.d.get(t, j).div_floor(&pivot);
                    w.add_col(j, t, &-q);
                    clean &= w.d.get(t, j).is_zero();
                }
            }
            if !clean {
                let (pi, pj) = w.smallest(t, false).expect("pivot row/column is nonzero");
                w.swap_rows(t, pi);
                w.swap_cols(t, pj);
                continue;
            }
            // Row and column are clear; enforce divisibility of the remaining block.
            let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| !w.d.get(i, j).is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    let one = BigInt::from(1);
                    w.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if w.d.get(t, t).is_negative() {
            w.negate_row(t);
        }
    }

    SmithDecomposition { u: w.u, d: w.d, v: w.v, u_inv: w.u_inv, v_inv: w.v_inv }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check(a: &IntegerMatrix) -> SmithDecomposition {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.u.mul(&s.u_inv).unwrap().is_identity());
        assert!(s.v.mul(&s.v_inv).unwrap().is_identity());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        s
    }

    #[test]
    fn identity() {
        let s = check(&IntegerMatrix::identity(2));
        assert!(s.u.is_identity() && s.v.is_identity() && s.d.is_identity());
    }

    #[test]
    fn zero_matrix() {
        let s = check(&IntegerMatrix::zeros(2, 3));
        assert!(s.d.is_zero());
        assert!(s.u.determinant().unwrap().abs().is_one());
        assert!(s.v.determinant().unwrap().abs().is_one());
    }

    #[test]
    fn two_by_two() {
        // det = 2*8 - 4*6 = -8; gcd of entries 2, so diag(2, 4).
        let s = check(&IntegerMatrix::from_i64_rows(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn forces_divisibility_fix() {
        let s = check(&IntegerMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn rectangular() {
        let s = check(&IntegerMatrix::from_i64_rows(&[&[4, 6, 8], &[2, 2, 2]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(2)]);
        let s = check(&IntegerMatrix::from_i64_rows(&[&[0], &[0], &[5]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(5)]);
    }
}
