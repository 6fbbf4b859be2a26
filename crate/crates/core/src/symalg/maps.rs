use num_bigint::BigInt;
use num_traits::Zero;

use super::monomial::{monomial_basis, GradedPiece, Monomial};
use crate::error::{Error, Result};
use crate::lattice::{IntegerMatrix, Sublattice};

/// The map `S(Z^m)_e → S(Z^n)_e` induced by `f: Z^m → Z^n` (an `n × m`
/// matrix acting on columns). Column `j` is the expansion of the product of
/// the images of the factors of the `j`-th source monomial.
pub fn sym_power_map(f: &IntegerMatrix, e: usize) -> IntegerMatrix {
    let source = monomial_basis(f.cols(), e);
    let target = monomial_basis(f.rows(), e);
    sym_power_map_between(f, &source, &target)
}

pub(super) fn sym_power_map_between(f: &IntegerMatrix, source: &GradedPiece, target: &GradedPiece) -> IntegerMatrix {
    let n = f.rows();
    let images: Vec<Vec<(usize, BigInt)>> = (0..f.cols())
        .map(|j| (0..n).filter(|&i| !f.get(i, j).is_zero()).map(|i| (i, f.get(i, j).clone())).collect())
        .collect();
    let mut columns = Vec::with_capacity(source.dimension());
    for m in source.basis() {
        // Expand the product one factor at a time as a sparse polynomial.
        let mut terms: Vec<(Vec<u32>, BigInt)> = vec![(vec![0; n], BigInt::from(1))];
        for j in m.factors() {
            let mut next: std::collections::HashMap<Vec<u32>, BigInt> = std::collections::HashMap::new();
            for (exps, c) in &terms {
                for (i, a) in &images[j] {
                    let mut e2 = exps.clone();
                    e2[*i] += 1;
                    *next.entry(e2).or_insert_with(BigInt::zero) += c * a;
                }
            }
            terms = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        let mut col = target.zero();
        for (exps, c) in terms {
            let idx = target.index_of(&Monomial::new(exps)).expect("target basis is complete");
            col[idx] += c;
        }
        columns.push(col);
    }
    IntegerMatrix::from_columns(target.dimension(), &columns).expect("columns have target length")
}

/// Degree-`d` piece of the ideal generated by the columns of `embedding`
/// (degree-one elements of `S(Z^N)`): the span of `p_j · m` over all
/// columns `p_j` and monomials `m` of degree `d - 1`.
pub fn ideal_piece(embedding: &IntegerMatrix, d: usize) -> Result<Sublattice> {
    let target = monomial_basis(embedding.rows(), d);
    ideal_piece_in(embedding, &target)
}

pub(crate) fn ideal_piece_in(embedding: &IntegerMatrix, target: &GradedPiece) -> Result<Sublattice> {
    let d = target.degree();
    if d == 0 {
        return Err(Error::DimensionMismatch { expected: 1, found: 0 });
    }
    let n = embedding.rows();
    let lower = monomial_basis(n, d - 1);
    let mut gens = Vec::with_capacity(embedding.cols() * lower.dimension());
    for j in 0..embedding.cols() {
        for m in lower.basis() {
            let mut v = target.zero();
            for i in 0..n {
                let c = embedding.get(i, j);
                if c.is_zero() {
                    continue;
                }
                let idx = target.index_of(&m.mul(&Monomial::variable(n, i))).expect("degree d");
                v[idx] += c;
            }
            gens.push(v);
        }
    }
    Sublattice::from_generators(target.dimension(), &gens)
}
