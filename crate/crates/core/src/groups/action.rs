use num_bigint::BigInt;
use num_traits::One;

use super::group::FiniteActionGroup;
use super::permutation::SignedPermutation;
use crate::error::{Error, Result};
use crate::lattice::{smith_normal_form, IntegerMatrix, Membership, Sublattice};

/// A representation of a finite group on `Z^rank`, one matrix per element
/// (indexed like the group's element list). Column `i` of `images[g]` is the
/// image of the `i`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixAction {
    rank: usize,
    images: Vec<IntegerMatrix>,
}

impl MatrixAction {
    /// Validates that `images` is a homomorphism into `GL_rank(Z)`.
    pub fn new(group: &FiniteActionGroup, rank: usize, images: Vec<IntegerMatrix>) -> Result<Self> {
        if images.len() != group.order() {
            return Err(Error::DimensionMismatch { expected: group.order(), found: images.len() });
        }
        for m in &images {
            if m.rows() != rank || m.cols() != rank {
                return Err(Error::DimensionMismatch { expected: rank, found: m.rows() });
            }
        }
        let action = MatrixAction { rank, images };
        action.verify(group)?;
        Ok(action)
    }

    /// The defining action of a signed-permutation group.
    pub fn from_signed(group: &FiniteActionGroup) -> Self {
        MatrixAction { rank: group.degree(), images: group.elements().iter().map(SignedPermutation::to_matrix).collect() }
    }

    /// Checks the identity, unimodularity and `ρ(s·g) = ρ(s)·ρ(g)` for every
    /// generator `s` and element `g`; together these force a homomorphism.
    pub fn verify(&self, group: &FiniteActionGroup) -> Result<()> {
        if !self.images[group.identity()].is_identity() {
            return Err(Error::NotHomomorphism { left: 0, right: 0 });
        }
        for (g, m) in self.images.iter().enumerate() {
            if !m.determinant()?.magnitude().is_one() {
                return Err(Error::NotUnimodular { element: g });
            }
        }
        let gens = if group.generator_indices().is_empty() && group.order() > 1 {
            (0..group.order()).collect()
        } else {
            group.generator_indices().to_vec()
        };
        for &s in &gens {
            for g in 0..group.order() {
                if self.images[group.mul(s, g)] != self.images[s].mul(&self.images[g])? {
                    return Err(Error::NotHomomorphism { left: s, right: g });
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn image(&self, g: usize) -> &IntegerMatrix {
        &self.images[g]
    }

    pub fn images(&self) -> &[IntegerMatrix] {
        &self.images
    }

    pub fn apply(&self, g: usize, v: &[BigInt]) -> Result<Vec<BigInt>> {
        self.images[g].mul_vec(v)
    }

    /// The images as signed permutations, when every matrix is monomial with
    /// ±1 entries.
    pub fn as_signed_permutations(&self) -> Option<Vec<SignedPermutation>> {
        self.images.iter().map(SignedPermutation::from_matrix).collect()
    }
}

/// Re-expresses `action` on a stable sublattice `l`, in the Hermite basis of `l`.
pub fn restrict_action_to_sublattice(
    group: &FiniteActionGroup,
    action: &MatrixAction,
    l: &Sublattice,
) -> Result<MatrixAction> {
    if l.ambient_rank() != action.rank() {
        return Err(Error::DimensionMismatch { expected: action.rank(), found: l.ambient_rank() });
    }
    let basis = l.basis_vectors();
    let k = basis.len();
    let mut images = Vec::with_capacity(group.order());
    for g in 0..group.order() {
        let mut columns = Vec::with_capacity(k);
        for b in &basis {
            match l.membership(&action.apply(g, b)?)? {
                Membership::Member { coefficients } => columns.push(coefficients),
                Membership::NonMember(_) => return Err(Error::NotStable { element: g }),
            }
        }
        images.push(IntegerMatrix::from_columns(k, &columns)?);
    }
    MatrixAction::new(group, k, images)
}

/// The induced action on `Z^N / P` for a stable, saturated `P`.
#[derive(Clone, Debug)]
pub struct QuotientAction {
    /// `(N - r) × N`; sends ambient coordinates to quotient coordinates.
    pub projection: IntegerMatrix,
    /// `N × (N - r)`; lifts quotient basis vectors, `projection · section = I`.
    pub section: IntegerMatrix,
    pub action: MatrixAction,
}

/// Action on the quotient by `phat`, with the quotient basis read off the
/// Smith form of `phat`'s basis.
pub fn quotient_action(group: &FiniteActionGroup, action: &MatrixAction, phat: &Sublattice) -> Result<QuotientAction> {
    let n = action.rank();
    if phat.ambient_rank() != n {
        return Err(Error::DimensionMismatch { expected: n, found: phat.ambient_rank() });
    }
    let r = phat.rank();
    for g in 0..group.order() {
        for b in phat.basis_vectors() {
            if !phat.contains(&action.apply(g, &b)?)? {
                return Err(Error::NotStable { element: g });
            }
        }
    }
    let columns = phat.basis().transpose();
    let snf = smith_normal_form(&columns);
    let diag = snf.diagonal();
    if diag.iter().any(|d| !d.is_one()) {
        return Err(Error::TorsionQuotient { factors: diag });
    }
    // U E V = [I; 0]: the last N - r rows of U vanish on P.
    let projection = snf.u.block(r..n, 0..n);
    let section = snf.u_inv.block(0..n, r..n);
    let mut images = Vec::with_capacity(group.order());
    for g in 0..group.order() {
        images.push(projection.mul(action.image(g))?.mul(&section)?);
    }
    let quotient = MatrixAction::new(group, n - r, images)?;
    Ok(QuotientAction { projection, section, action: quotient })
}
