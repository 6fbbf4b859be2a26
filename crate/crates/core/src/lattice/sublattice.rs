use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::hermite::{echelonize, hermite_normal_form, left_kernel_rows};
use super::matrix::IntegerMatrix;
use super::smith::smith_normal_form;
use crate::error::{Error, Result};

/// A subgroup of `Z^n`, stored by its row-style Hermite normal form.
///
/// The representation is canonical: two sublattices are equal exactly when
/// their generator matrices are identical, so derived `PartialEq` is
/// subgroup equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sublattice {
    ambient_rank: usize,
    basis: IntegerMatrix,
    pivots: Vec<usize>,
}

/// Outcome of a membership test against a [`Sublattice`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// `v = Σ coefficients[i] · basis_row[i]`.
    Member { coefficients: Vec<BigInt> },
    /// The first failing step of the reduction against the Hermite basis.
    NonMember(NonMemberReason),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonMemberReason {
    /// After reduction, `column` carries `residue` but no basis row pivots there.
    NoPivot { column: usize, residue: BigInt },
    /// The residue at a pivot column is not a multiple of the pivot.
    NotDivisible { column: usize, pivot: BigInt, residue: BigInt },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member { .. })
    }

    pub fn coefficients(&self) -> Option<&[BigInt]> {
        match self {
            Membership::Member { coefficients } => Some(coefficients),
            Membership::NonMember(_) => None,
        }
    }
}

/// Finitely generated abelian group `Z^free_rank ⊕ ⊕ Z/t_i` with
/// `2 ≤ t_1 | t_2 | …`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroupStructure {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupStructure {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupStructure { free_rank: rank, torsion: Vec::new() }
    }

    /// Builds the structure from arbitrary cyclic orders, normalising to
    /// invariant factors. Orders 0 count as free summands, 1 is dropped.
    pub fn from_cyclic_orders<I: IntoIterator<Item = BigInt>>(orders: I) -> Self {
        let mut free_rank = 0;
        let mut diag = Vec::new();
        for o in orders {
            if o.is_zero() {
                free_rank += 1;
            } else {
                diag.push(num_traits::Signed::abs(&o));
            }
        }
        let n = diag.len();
        let m = IntegerMatrix::new(n, n, {
            let mut d = vec![BigInt::zero(); n * n];
            for (i, x) in diag.into_iter().enumerate() {
                d[i * n + i] = x;
            }
            d
        })
        .expect("square");
        let torsion = smith_normal_form(&m).diagonal().into_iter().filter(|x| x > &BigInt::one()).collect();
        AbelianGroupStructure { free_rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    pub fn has_torsion_factor_divisible_by(&self, n: &BigInt) -> bool {
        self.torsion.iter().any(|t| t.is_multiple_of(n))
    }
}

impl fmt::Display for AbelianGroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Quotient `sup / sub` with explicit generators lifted to the ambient lattice.
#[derive(Clone, Debug)]
pub struct QuotientDecomposition {
    pub structure: AbelianGroupStructure,
    /// `(order, generator)` for each torsion summand, in invariant-factor order.
    pub torsion_generators: Vec<(BigInt, Vec<BigInt>)>,
    pub free_generators: Vec<Vec<BigInt>>,
}

impl Sublattice {
    /// Integer span of `vectors` inside `Z^ambient_rank`.
    pub fn from_generators(ambient_rank: usize, vectors: &[Vec<BigInt>]) -> Result<Self> {
        let m = IntegerMatrix::from_rows(ambient_rank, vectors)?;
        Ok(Self::from_matrix_rows(&m))
    }

    pub fn from_i64_generators(ambient_rank: usize, vectors: &[&[i64]]) -> Result<Self> {
        let v: Vec<Vec<BigInt>> = vectors.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::from_generators(ambient_rank, &v)
    }

    /// Span of the rows of `m`.
    pub fn from_matrix_rows(m: &IntegerMatrix) -> Self {
        let (basis, pivots) = hermite_normal_form(m);
        Sublattice { ambient_rank: m.cols(), basis, pivots }
    }

    pub fn zero(ambient_rank: usize) -> Self {
        Sublattice { ambient_rank, basis: IntegerMatrix::zeros(0, ambient_rank), pivots: Vec::new() }
    }

    pub fn full(ambient_rank: usize) -> Self {
        Sublattice { ambient_rank, basis: IntegerMatrix::identity(ambient_rank), pivots: (0..ambient_rank).collect() }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Hermite basis, one generator per row.
    pub fn basis(&self) -> &IntegerMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<BigInt>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.rows() == 0
    }

    fn check_len(&self, v: &[BigInt]) -> Result<()> {
        if v.len() != self.ambient_rank {
            return Err(Error::DimensionMismatch { expected: self.ambient_rank, found: v.len() });
        }
        Ok(())
    }

    /// Decides `v ∈ self`; members come with their coordinates over the
    /// Hermite basis.
    pub fn membership(&self, v: &[BigInt]) -> Result<Membership> {
        self.check_len(v)?;
        let mut residue = v.to_vec();
        let mut coefficients = Vec::with_capacity(self.rank());
        let mut col = 0;
        for (i, &p) in self.pivots.iter().enumerate() {
            if let Some(c) = (col..p).find(|&c| !residue[c].is_zero()) {
                return Ok(Membership::NonMember(NonMemberReason::NoPivot { column: c, residue: residue[c].clone() }));
            }
            let pivot = self.basis.get(i, p);
            let (q, r) = residue[p].div_rem(pivot);
            if !r.is_zero() {
                return Ok(Membership::NonMember(NonMemberReason::NotDivisible {
                    column: p,
                    pivot: pivot.clone(),
                    residue: residue[p].clone(),
                }));
            }
            if !q.is_zero() {
                for (x, b) in residue.iter_mut().zip(self.basis.row(i)).skip(p) {
                    if !b.is_zero() {
                        *x -= &q * b;
                    }
                }
            }
            coefficients.push(q);
            col = p + 1;
        }
        if let Some(c) = (col..self.ambient_rank).find(|&c| !residue[c].is_zero()) {
            return Ok(Membership::NonMember(NonMemberReason::NoPivot { column: c, residue: residue[c].clone() }));
        }
        Ok(Membership::Member { coefficients })
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.membership(v)?.is_member())
    }

    pub fn is_subset_of(&self, other: &Sublattice) -> Result<bool> {
        self.first_generator_outside(other).map(|o| o.is_none())
    }

    fn first_generator_outside(&self, other: &Sublattice) -> Result<Option<usize>> {
        if self.ambient_rank != other.ambient_rank {
            return Err(Error::DimensionMismatch { expected: other.ambient_rank, found: self.ambient_rank });
        }
        for i in 0..self.rank() {
            if !other.contains(self.basis.row(i))? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Lattice sum `self + other`.
    pub fn sum(&self, other: &Sublattice) -> Result<Sublattice> {
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Self::from_matrix_rows(&stacked))
    }

    /// Adds further generators to the span.
    pub fn extend(&self, vectors: &[Vec<BigInt>]) -> Result<Sublattice> {
        let extra = IntegerMatrix::from_rows(self.ambient_rank, vectors)?;
        self.sum(&Sublattice::from_matrix_rows(&extra))
    }

    /// Exact intersection of two subgroups (not of their saturations).
    ///
    /// Computed from the left kernel of `[G_A; -G_B]`: a kernel row `(a, b)`
    /// satisfies `a·G_A = b·G_B`, and `a·G_A` ranges over `A ∩ B`.
    pub fn intersect(&self, other: &Sublattice) -> Result<Sublattice> {
        if self.ambient_rank != other.ambient_rank {
            return Err(Error::DimensionMismatch { expected: self.ambient_rank, found: other.ambient_rank });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Sublattice::zero(self.ambient_rank));
        }
        let mut neg = other.basis.clone();
        for i in 0..neg.rows() {
            neg.negate_row(i);
        }
        let stacked = self.basis.vstack(&neg)?;
        let ka = self.rank();
        let combos: Vec<Vec<BigInt>> = left_kernel_rows(&stacked).into_iter().map(|row| row[..ka].to_vec()).collect();
        if combos.is_empty() {
            return Ok(Sublattice::zero(self.ambient_rank));
        }
        let coeffs = IntegerMatrix::from_rows(ka, &combos)?;
        Ok(Self::from_matrix_rows(&coeffs.mul(&self.basis)?))
    }

    /// Coordinates of every generator of `sub` over the Hermite basis of `self`.
    fn coordinates_of(&self, sub: &Sublattice) -> Result<IntegerMatrix> {
        let mut rows = Vec::with_capacity(sub.rank());
        for i in 0..sub.rank() {
            match self.membership(sub.basis.row(i))? {
                Membership::Member { coefficients } => rows.push(coefficients),
                Membership::NonMember(_) => return Err(Error::NotContained { index: i }),
            }
        }
        IntegerMatrix::from_rows(self.rank(), &rows)
    }

    /// `self / sub` with lifted generators for every cyclic summand.
    pub fn quotient_by(&self, sub: &Sublattice) -> Result<QuotientDecomposition> {
        if self.ambient_rank != sub.ambient_rank {
            return Err(Error::DimensionMismatch { expected: self.ambient_rank, found: sub.ambient_rank });
        }
        let coords = self.coordinates_of(sub)?;
        let k = self.rank();
        let snf = smith_normal_form(&coords);
        // U C V = D  ⇒  sub is spanned by d_i · (row i of V⁻¹ B).
        let new_basis = snf.v_inv.mul(&self.basis)?;
        let diag = snf.diagonal();
        let mut torsion_generators = Vec::new();
        let mut free_generators = Vec::new();
        let mut torsion = Vec::new();
        for i in 0..k {
            let d = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
            if d.is_zero() {
                free_generators.push(new_basis.row(i).to_vec());
            } else if d > BigInt::one() {
                torsion.push(d.clone());
                torsion_generators.push((d, new_basis.row(i).to_vec()));
            }
        }
        let structure = AbelianGroupStructure { free_rank: free_generators.len(), torsion };
        Ok(QuotientDecomposition { structure, torsion_generators, free_generators })
    }

    /// Reduces `v` modulo `self` using the Hermite basis. The result is a
    /// canonical representative of the coset `v + self`.
    pub fn reduce(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        self.check_len(v)?;
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let pivot = self.basis.get(i, p);
            let q = r[p].div_floor(pivot);
            if !q.is_zero() {
                for (x, b) in r.iter_mut().zip(self.basis.row(i)).skip(p) {
                    if !b.is_zero() {
                        *x -= &q * b;
                    }
                }
            }
        }
        Ok(r)
    }
}

impl fmt::Debug for Sublattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sublattice(rank {} in Z^{}) {:?}", self.rank(), self.ambient_rank, self.basis)
    }
}

/// Saturated integer kernel `{x : A·x = 0}` as a sublattice of the source.
pub fn kernel_basis(a: &IntegerMatrix) -> Sublattice {
    let rows = left_kernel_rows(&a.transpose());
    if rows.is_empty() {
        return Sublattice::zero(a.cols());
    }
    Sublattice::from_generators(a.cols(), &rows).expect("kernel rows have source length")
}

pub fn sublattice_from_generators(ambient_rank: usize, vectors: &[Vec<BigInt>]) -> Result<Sublattice> {
    Sublattice::from_generators(ambient_rank, vectors)
}

pub fn intersect(a: &Sublattice, b: &Sublattice) -> Result<Sublattice> {
    a.intersect(b)
}

/// Structure of `sup / sub`. Fails with [`Error::NotContained`] naming the
/// first generator of `sub` outside `sup`.
pub fn quotient_structure(sub: &Sublattice, sup: &Sublattice) -> Result<AbelianGroupStructure> {
    Ok(sup.quotient_by(sub)?.structure)
}

pub fn membership(v: &[BigInt], l: &Sublattice) -> Result<Membership> {
    l.membership(v)
}

/// Rank of an integer matrix.
pub fn rank(a: &IntegerMatrix) -> usize {
    let mut m = a.clone();
    echelonize(&mut m, a.cols()).len()
}
