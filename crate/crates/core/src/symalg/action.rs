use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::maps::sym_power_map_between;
use super::monomial::{GradedPiece, Monomial};
use crate::error::{Error, Result};
use crate::groups::{coset_representatives, FiniteActionGroup, MatrixAction, SignedPermutation, Subgroup};
use crate::lattice::{kernel_basis, IntegerMatrix, Sublattice};

/// A group action on a lattice basis, as consumed by [`symmetric_power_action`].
#[derive(Clone, Copy, Debug)]
pub enum BaseAction<'a> {
    /// One signed permutation per group element.
    Signed(&'a [SignedPermutation]),
    Matrix(&'a MatrixAction),
}

/// The induced action on one graded piece, indexed by group element.
#[derive(Clone, Debug)]
pub enum SymmetricAction {
    /// Monomials go to signed monomials.
    Signed(Vec<SignedPermutation>),
    Matrix(Vec<IntegerMatrix>),
}

/// Induced action of `base` on the piece `piece`.
///
/// For signed permutations a monomial `∏ e_i^{a_i}` goes to
/// `(∏ s_i^{a_i}) ∏ e_{g(i)}^{a_i}`; matrix actions use the symmetric power
/// of each matrix.
pub fn symmetric_power_action(base: BaseAction<'_>, piece: &GradedPiece) -> SymmetricAction {
    match base {
        BaseAction::Signed(perms) => {
            let images = perms
                .iter()
                .map(|g| {
                    let mut image = Vec::with_capacity(piece.dimension());
                    let mut sign = Vec::with_capacity(piece.dimension());
                    for m in piece.basis() {
                        let mut e = vec![0u32; piece.rank()];
                        let mut negatives = 0u32;
                        for (i, &a) in m.exponents().iter().enumerate() {
                            e[g.image_of(i)] = a;
                            if g.sign_of(i) < 0 {
                                negatives += a;
                            }
                        }
                        image.push(piece.index_of(&Monomial::new(e)).expect("permuted monomial has same degree"));
                        sign.push(if negatives.is_multiple_of(2) { 1 } else { -1 });
                    }
                    SignedPermutation::new(image, sign).expect("monomial permutation is a bijection")
                })
                .collect();
            SymmetricAction::Signed(images)
        }
        BaseAction::Matrix(action) => SymmetricAction::Matrix(
            action.images().iter().map(|m| sym_power_map_between(m, piece, piece)).collect(),
        ),
    }
}

impl SymmetricAction {
    pub fn group_order(&self) -> usize {
        match self {
            SymmetricAction::Signed(v) => v.len(),
            SymmetricAction::Matrix(v) => v.len(),
        }
    }

    pub fn apply(&self, g: usize, v: &[BigInt]) -> Vec<BigInt> {
        match self {
            SymmetricAction::Signed(perms) => perms[g].apply(v),
            SymmetricAction::Matrix(ms) => ms[g].mul_vec(v).expect("vector lives in the piece"),
        }
    }

    pub fn matrix(&self, g: usize) -> IntegerMatrix {
        match self {
            SymmetricAction::Signed(perms) => perms[g].to_matrix(),
            SymmetricAction::Matrix(ms) => ms[g].clone(),
        }
    }

    /// As a validated [`MatrixAction`].
    pub fn to_matrix_action(&self, group: &FiniteActionGroup) -> Result<MatrixAction> {
        let images: Vec<IntegerMatrix> = (0..self.group_order()).map(|g| self.matrix(g)).collect();
        let rank = images.first().map_or(0, IntegerMatrix::rows);
        MatrixAction::new(group, rank, images)
    }

    pub fn is_fixed(&self, g: usize, v: &[BigInt]) -> bool {
        self.apply(g, v) == v
    }
}

/// Signed orbit sums of the monomials of `piece` under `over`, in order of
/// the least monomial of each orbit. An orbit in which some element sends a
/// monomial to its own negative sums to zero and is skipped.
///
/// Panics if `action` is not a signed action.
pub fn orbit_sums(piece: &GradedPiece, action: &SymmetricAction, over: &Subgroup) -> Vec<Vec<BigInt>> {
    let SymmetricAction::Signed(perms) = action else {
        panic!("orbit sums need a monomial action");
    };
    let n = piece.dimension();
    let mut visited = vec![false; n];
    let mut sums = Vec::new();
    for k in 0..n {
        if visited[k] {
            continue;
        }
        let mut orbit: HashMap<usize, i8> = HashMap::new();
        let mut cancels = false;
        for &h in over.members() {
            let (j, s) = (perms[h].image_of(k), perms[h].sign_of(k));
            match orbit.get(&j) {
                Some(&t) if t != s => cancels = true,
                Some(_) => {}
                None => {
                    orbit.insert(j, s);
                }
            }
        }
        for &j in orbit.keys() {
            visited[j] = true;
        }
        if !cancels {
            let mut v = piece.zero();
            for (&j, &s) in &orbit {
                v[j] = BigInt::from(s);
            }
            sums.push(v);
        }
    }
    sums
}

/// Invariant sublattice of `piece` under `over`: spanned by
/// [`orbit_sums`] for signed actions, [`invariants_by_kernel`] otherwise.
pub fn invariants(
    piece: &GradedPiece,
    action: &SymmetricAction,
    group: &FiniteActionGroup,
    over: &Subgroup,
) -> Sublattice {
    match action {
        SymmetricAction::Signed(_) => Sublattice::from_generators(piece.dimension(), &orbit_sums(piece, action, over))
            .expect("orbit sums live in the piece"),
        SymmetricAction::Matrix(_) => invariants_by_kernel(piece, action, group, over),
    }
}

/// Invariants as the kernel of the stacked `ρ(h) - I` over generators `h`
/// of `over`. Works for any action; used directly for matrix actions and as
/// an independent check of the orbit-sum route.
pub fn invariants_by_kernel(
    piece: &GradedPiece,
    action: &SymmetricAction,
    group: &FiniteActionGroup,
    over: &Subgroup,
) -> Sublattice {
    let n = piece.dimension();
    let gens = over.generators(group);
    if gens.is_empty() {
        return Sublattice::full(n);
    }
    let id = IntegerMatrix::identity(n);
    let mut stacked = IntegerMatrix::zeros(0, n);
    for h in gens {
        let diff = action.matrix(h).sub(&id).expect("square");
        stacked = stacked.vstack(&diff).expect("same width");
    }
    kernel_basis(&stacked)
}

/// `Ind_H^G(z) = Σ_{x ∈ G/H} x · z`, summing over the minimal-index
/// representatives of the left cosets. `z` must be fixed by `from`.
pub fn induce(
    z: &[BigInt],
    from: &Subgroup,
    group: &FiniteActionGroup,
    action: &SymmetricAction,
) -> Result<Vec<BigInt>> {
    for h in from.generators(group) {
        if !action.is_fixed(h, z) {
            return Err(Error::NotInvariant { element: h });
        }
    }
    let mut total = vec![BigInt::zero(); z.len()];
    for x in coset_representatives(group, from) {
        for (t, y) in total.iter_mut().zip(action.apply(x, z)) {
            *t += y;
        }
    }
    Ok(total)
}
