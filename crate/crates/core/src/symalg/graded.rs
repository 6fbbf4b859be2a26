use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use super::action::{induce, invariants, symmetric_power_action, BaseAction, SymmetricAction};
use super::maps::sym_power_map;
use super::monomial::{monomial_basis, multiply, GradedPiece};
use crate::error::{Error, Result};
use crate::groups::{FiniteActionGroup, MatrixAction, SignedPermutation, Subgroup};
use crate::lattice::{IntegerMatrix, Sublattice};

pub const DEFAULT_DEGREE_CAP: usize = 6;

#[derive(Clone, Debug)]
enum Base {
    Signed(Vec<SignedPermutation>),
    Matrix(MatrixAction),
}

/// The symmetric algebra of one Γ-lattice, materialized degree by degree on
/// demand. Pieces, actions and invariant lattices are cached, so repeated
/// queries across degrees and subgroups are cheap.
#[derive(Debug)]
pub struct GradedRepresentation {
    rank: usize,
    base: Base,
    cap: usize,
    pieces: Vec<OnceLock<(GradedPiece, SymmetricAction)>>,
    invariants: Mutex<HashMap<(Vec<usize>, usize), Sublattice>>,
}

impl GradedRepresentation {
    /// The defining signed-permutation representation of `group`.
    pub fn signed(group: &FiniteActionGroup, cap: usize) -> Self {
        Self::with_base(group.degree(), Base::Signed(group.elements().to_vec()), cap)
    }

    pub fn matrix(action: MatrixAction, cap: usize) -> Self {
        // Monomial matrices get the cheaper signed treatment.
        let rank = action.rank();
        let base = match action.as_signed_permutations() {
            Some(perms) => Base::Signed(perms),
            None => Base::Matrix(action),
        };
        Self::with_base(rank, base, cap)
    }

    fn with_base(rank: usize, base: Base, cap: usize) -> Self {
        GradedRepresentation {
            rank,
            base,
            cap,
            pieces: (0..=cap).map(|_| OnceLock::new()).collect(),
            invariants: Mutex::new(HashMap::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree_cap(&self) -> usize {
        self.cap
    }

    fn slot(&self, d: usize) -> Result<&(GradedPiece, SymmetricAction)> {
        let cell = self.pieces.get(d).ok_or(Error::DegreeTooLarge { degree: d, cap: self.cap })?;
        Ok(cell.get_or_init(|| {
            let piece = monomial_basis(self.rank, d);
            let action = match &self.base {
                Base::Signed(perms) => symmetric_power_action(BaseAction::Signed(perms), &piece),
                Base::Matrix(m) => symmetric_power_action(BaseAction::Matrix(m), &piece),
            };
            (piece, action)
        }))
    }

    pub fn piece(&self, d: usize) -> Result<&GradedPiece> {
        Ok(&self.slot(d)?.0)
    }

    pub fn action(&self, d: usize) -> Result<&SymmetricAction> {
        Ok(&self.slot(d)?.1)
    }

    /// `(S_d)^{over}`, cached per subgroup and degree.
    pub fn invariants(&self, group: &FiniteActionGroup, over: &Subgroup, d: usize) -> Result<Sublattice> {
        let key = (over.members().to_vec(), d);
        if let Some(l) = self.invariants.lock().expect("cache lock").get(&key) {
            return Ok(l.clone());
        }
        let (piece, action) = self.slot(d)?;
        let l = invariants(piece, action, group, over);
        self.invariants.lock().expect("cache lock").insert(key, l.clone());
        Ok(l)
    }
}

/// Everything needed to build the ideal pieces of a resolution
/// `0 → P̂ → Q̂ → T̂ → 0`: the graded algebras of `Q̂` and `P̂` and the
/// embedding `P̂ → Q̂` given on a basis of `P̂`.
#[derive(Debug)]
pub struct ResolutionAlgebra {
    group: FiniteActionGroup,
    q: GradedRepresentation,
    p: GradedRepresentation,
    embedding: IntegerMatrix,
    powers: Vec<OnceLock<IntegerMatrix>>,
}

impl ResolutionAlgebra {
    /// `embedding` is `N × r`; its columns form the basis in which
    /// `p_action` is written.
    pub fn new(group: FiniteActionGroup, embedding: IntegerMatrix, p_action: MatrixAction, cap: usize) -> Result<Self> {
        if embedding.rows() != group.degree() {
            return Err(Error::DimensionMismatch { expected: group.degree(), found: embedding.rows() });
        }
        if p_action.rank() != embedding.cols() {
            return Err(Error::DimensionMismatch { expected: embedding.cols(), found: p_action.rank() });
        }
        let q = GradedRepresentation::signed(&group, cap);
        let p = GradedRepresentation::matrix(p_action, cap);
        Ok(ResolutionAlgebra { group, q, p, embedding, powers: (0..=cap).map(|_| OnceLock::new()).collect() })
    }

    pub fn group(&self) -> &FiniteActionGroup {
        &self.group
    }

    pub fn q(&self) -> &GradedRepresentation {
        &self.q
    }

    pub fn p(&self) -> &GradedRepresentation {
        &self.p
    }

    pub fn embedding(&self) -> &IntegerMatrix {
        &self.embedding
    }

    /// `Sym^e` of the embedding, `S(P̂)_e → S(Q̂)_e`.
    pub fn embedding_power(&self, e: usize) -> Result<&IntegerMatrix> {
        let cell = self.powers.get(e).ok_or(Error::DegreeTooLarge { degree: e, cap: self.q.cap })?;
        Ok(cell.get_or_init(|| sym_power_map(&self.embedding, e)))
    }

    /// The products `x · y` whose inductions span the contribution of `sub`
    /// in degree `e + (d - e)`, for a single split `e`.
    pub fn products(&self, sub: &Subgroup, e: usize, d: usize) -> Result<Vec<Vec<BigInt>>> {
        let push = self.embedding_power(e)?;
        let xs = self.p.invariants(&self.group, sub, e)?.basis_vectors();
        let ys = self.q.invariants(&self.group, sub, d - e)?.basis_vectors();
        let (pe, py, pd) = (self.q.piece(e)?, self.q.piece(d - e)?, self.q.piece(d)?);
        let mut out = Vec::with_capacity(xs.len() * ys.len());
        for x in &xs {
            let xq = push.mul_vec(x)?;
            for y in &ys {
                out.push(multiply(pe, &xq, py, y, pd)?);
            }
        }
        Ok(out)
    }

    /// `Ind_{sub}^{Γ}` applied to every product from [`Self::products`],
    /// summed over `e = 1..d`.
    pub fn induced_contribution(&self, sub: &Subgroup, d: usize) -> Result<Sublattice> {
        if d == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        let action = self.q.action(d)?;
        let dim = self.q.piece(d)?.dimension();
        let mut gens = Vec::new();
        for e in 1..=d {
            for z in self.products(sub, e, d)? {
                gens.push(induce(&z, sub, &self.group, action)?);
            }
        }
        Sublattice::from_generators(dim, &gens)
    }
}

/// Free-function form of [`ResolutionAlgebra::induced_contribution`].
pub fn induced_contribution(sub: &Subgroup, data: &ResolutionAlgebra, d: usize) -> Result<Sublattice> {
    data.induced_contribution(sub, d)
}
