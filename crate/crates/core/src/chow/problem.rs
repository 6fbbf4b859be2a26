use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::groups::{
    all_subgroups, all_subgroups_up_to_conjugacy, quotient_action, restrict_action_to_sublattice, FiniteActionGroup,
    MatrixAction, QuotientAction, Subgroup, DEFAULT_GROUP_BOUND,
};
use crate::lattice::{rank, IntegerMatrix, Sublattice};
use crate::symalg::{sym_power_map, GradedRepresentation, ResolutionAlgebra, DEFAULT_DEGREE_CAP};

/// Resource limits for a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComputeOptions {
    pub max_group_order: usize,
    pub max_degree: usize,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions { max_group_order: DEFAULT_GROUP_BOUND, max_degree: DEFAULT_DEGREE_CAP }
    }
}

/// Character-level data of a resolution `0 → P̂ → Q̂ → T̂ → 0`.
///
/// `Γ` acts on `Q̂ = Z^N` by signed permutations and `P̂` is the column span
/// of `embedding` (`N × r`). An action on `P̂` may be supplied, written in
/// the basis given by the columns; otherwise it is derived by restriction.
#[derive(Clone, Debug)]
pub struct ResolutionProblem {
    pub group: FiniteActionGroup,
    pub embedding: IntegerMatrix,
    pub phat_action: Option<Vec<IntegerMatrix>>,
}

impl ResolutionProblem {
    pub fn new(group: FiniteActionGroup, embedding: IntegerMatrix) -> Self {
        ResolutionProblem { group, embedding, phat_action: None }
    }

    pub fn with_phat_action(mut self, images: Vec<IntegerMatrix>) -> Self {
        self.phat_action = Some(images);
        self
    }

    pub fn validate(&self, options: ComputeOptions) -> Result<ValidatedProblem> {
        validate(self, options)
    }
}

/// A resolution that passed [`validate`], with the derived actions on `P̂`
/// and `T̂` and per-degree caches for the lattices the pipeline reuses.
#[derive(Debug)]
pub struct ValidatedProblem {
    pub(crate) algebra: ResolutionAlgebra,
    phat: Sublattice,
    quotient: QuotientAction,
    pub(crate) t: GradedRepresentation,
    options: ComputeOptions,
    classes: OnceLock<Vec<Subgroup>>,
    subgroups: OnceLock<Vec<Subgroup>>,
    projections: Vec<OnceLock<IntegerMatrix>>,
    pub(crate) ideal_cache: Mutex<HashMap<usize, Sublattice>>,
}

/// Checks every structural requirement on `problem` and builds the derived
/// actions. Failures are reported as distinct errors: dimension mismatch,
/// rank deficiency of the embedding, a non-stable image, a quotient with
/// torsion, or a supplied `P̂` action that disagrees with `Q̂`.
pub fn validate(problem: &ResolutionProblem, options: ComputeOptions) -> Result<ValidatedProblem> {
    let group = &problem.group;
    if group.order() > options.max_group_order {
        return Err(Error::GroupTooLarge { bound: options.max_group_order });
    }
    let n = group.degree();
    let e = &problem.embedding;
    if e.rows() != n {
        return Err(Error::DimensionMismatch { expected: n, found: e.rows() });
    }
    let r = rank(e);
    if r != e.cols() {
        return Err(Error::RankDeficient { rank: r, columns: e.cols() });
    }
    let phat = Sublattice::from_matrix_rows(&e.transpose());
    let q_action = MatrixAction::from_signed(group);
    let quotient = quotient_action(group, &q_action, &phat)?;
    let p_action = restrict_action_to_sublattice(group, &q_action, &phat)?;
    if let Some(images) = &problem.phat_action {
        let supplied = MatrixAction::new(group, e.cols(), images.clone())?;
        for g in 0..group.order() {
            if q_action.image(g).mul(e)? != e.mul(supplied.image(g))? {
                return Err(Error::ActionMismatch { element: g });
            }
        }
    }
    let hnf_embedding = phat.basis().transpose();
    let algebra = ResolutionAlgebra::new(group.clone(), hnf_embedding, p_action, options.max_degree)?;
    let t = GradedRepresentation::matrix(quotient.action.clone(), options.max_degree);
    Ok(ValidatedProblem {
        algebra,
        phat,
        quotient,
        t,
        options,
        classes: OnceLock::new(),
        subgroups: OnceLock::new(),
        projections: (0..=options.max_degree).map(|_| OnceLock::new()).collect(),
        ideal_cache: Mutex::new(HashMap::new()),
    })
}

impl ValidatedProblem {
    pub fn group(&self) -> &FiniteActionGroup {
        self.algebra.group()
    }

    pub fn options(&self) -> ComputeOptions {
        self.options
    }

    /// Rank `N` of `Q̂`.
    pub fn q_rank(&self) -> usize {
        self.group().degree()
    }

    pub fn p_rank(&self) -> usize {
        self.phat.rank()
    }

    pub fn t_rank(&self) -> usize {
        self.q_rank() - self.p_rank()
    }

    pub fn phat(&self) -> &Sublattice {
        &self.phat
    }

    pub fn algebra(&self) -> &ResolutionAlgebra {
        &self.algebra
    }

    pub fn q(&self) -> &GradedRepresentation {
        self.algebra.q()
    }

    pub fn t(&self) -> &GradedRepresentation {
        &self.t
    }

    pub fn quotient(&self) -> &QuotientAction {
        &self.quotient
    }

    pub fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.options.max_degree {
            return Err(Error::DegreeTooLarge { degree: d, cap: self.options.max_degree });
        }
        Ok(())
    }

    /// One subgroup per conjugacy class, trivial and whole group included.
    pub fn subgroup_classes(&self) -> &[Subgroup] {
        self.classes.get_or_init(|| all_subgroups_up_to_conjugacy(self.group()))
    }

    pub fn all_subgroups(&self) -> &[Subgroup] {
        self.subgroups.get_or_init(|| all_subgroups(self.group()))
    }

    /// `Sym^d` of the projection `Q̂ → T̂`.
    pub fn projection_power(&self, d: usize) -> Result<&IntegerMatrix> {
        self.check_degree(d)?;
        Ok(self.projections[d].get_or_init(|| sym_power_map(&self.quotient.projection, d)))
    }

    /// `(S(Q̂)_d)^Γ`.
    pub fn q_invariants(&self, d: usize) -> Result<Sublattice> {
        self.check_degree(d)?;
        self.q().invariants(self.group(), &Subgroup::whole(self.group()), d)
    }

    /// `(S(T̂)_d)^Γ`.
    pub fn t_invariants(&self, d: usize) -> Result<Sublattice> {
        self.check_degree(d)?;
        self.t.invariants(self.group(), &Subgroup::whole(self.group()), d)
    }
}
