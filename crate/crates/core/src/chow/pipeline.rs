use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::cohomology::h1_of_sublattice;
use super::problem::ValidatedProblem;
use crate::error::{Error, Result};
use crate::groups::Subgroup;
use crate::lattice::{quotient_structure, AbelianGroupStructure, Sublattice};
use crate::symalg::{ideal_piece_in, orbit_sums};

/// A lifted representative of a torsion class, with the order of its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub order: BigInt,
    pub vector: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelResult {
    pub structure: AbelianGroupStructure,
    pub witnesses: Vec<Witness>,
}

fn ideal_over(vp: &ValidatedProblem, subs: &[Subgroup], d: usize) -> Result<Sublattice> {
    vp.check_degree(d)?;
    let dim = vp.q().piece(d)?.dimension();
    if d == 0 {
        return Ok(Sublattice::zero(dim));
    }
    let parts: Vec<Sublattice> =
        subs.par_iter().map(|h| vp.algebra.induced_contribution(h, d)).collect::<Result<_>>()?;
    let gens: Vec<Vec<BigInt>> = parts.iter().flat_map(Sublattice::basis_vectors).collect();
    Sublattice::from_generators(dim, &gens)
}

/// `I_d`: the sum of the induced contributions of one subgroup per
/// conjugacy class. Cached per degree.
pub fn ideal_i(vp: &ValidatedProblem, d: usize) -> Result<Sublattice> {
    if let Some(l) = vp.ideal_cache.lock().expect("cache lock").get(&d) {
        return Ok(l.clone());
    }
    let l = ideal_over(vp, vp.subgroup_classes(), d)?;
    vp.ideal_cache.lock().expect("cache lock").insert(d, l.clone());
    Ok(l)
}

/// `I_d` summed over every subgroup rather than class representatives.
pub fn ideal_i_exhaustive(vp: &ValidatedProblem, d: usize) -> Result<Sublattice> {
    ideal_over(vp, vp.all_subgroups(), d)
}

/// `J_d`, the degree-`d` part of the ideal generated by `P̂`.
pub fn ideal_j(vp: &ValidatedProblem, d: usize) -> Result<Sublattice> {
    vp.check_degree(d)?;
    let piece = vp.q().piece(d)?;
    if d == 0 {
        return Ok(Sublattice::zero(piece.dimension()));
    }
    ideal_piece_in(vp.algebra.embedding(), piece)
}

/// `A^d_T = (S(Q̂)_d)^Γ / I_d`.
pub fn chow_group(vp: &ValidatedProblem, d: usize) -> Result<AbelianGroupStructure> {
    if d == 0 {
        return Ok(AbelianGroupStructure::free(1));
    }
    quotient_structure(&ideal_i(vp, d)?, &vp.q_invariants(d)?)
}

fn require_torsion(what: &str, d: usize, s: &AbelianGroupStructure) -> Result<()> {
    if s.free_rank != 0 {
        return Err(Error::InvariantViolation(format!("{what} in degree {d} has free rank {}", s.free_rank)));
    }
    Ok(())
}

/// `(J_d ∩ (S(Q̂)_d)^Γ) / I_d` with witnesses.
///
/// Witnesses are picked from the orbit sums lying in `J_d`, fewest terms
/// first, keeping each one that enlarges the subgroup generated so far,
/// until the whole kernel is reached. When orbit sums do not suffice the
/// Smith generators of the quotient are returned instead.
pub fn base_change_kernel(vp: &ValidatedProblem, d: usize) -> Result<KernelResult> {
    let i = ideal_i(vp, d)?;
    let inv = vp.q_invariants(d)?;
    let j_inv = ideal_j(vp, d)?.intersect(&inv)?;
    if !i.is_subset_of(&j_inv)? {
        return Err(Error::InvariantViolation(format!("I_{d} is not contained in the invariant part of J_{d}")));
    }
    let decomposition = j_inv.quotient_by(&i)?;
    let structure = decomposition.structure.clone();
    require_torsion("kernel", d, &structure)?;
    if structure.is_trivial() {
        return Ok(KernelResult { structure, witnesses: Vec::new() });
    }
    let total = structure.torsion_order();
    let j = ideal_j(vp, d)?;
    let mut candidates: Vec<Vec<BigInt>> = orbit_sums(vp.q().piece(d)?, vp.q().action(d)?, &Subgroup::whole(vp.group()))
        .into_iter()
        .filter(|v| j.contains(v).unwrap_or(false))
        .collect();
    // Fewest terms first; among equals, the orbit reaching furthest into the basis.
    candidates.sort_by_key(|v| {
        let support = v.iter().filter(|x| !x.is_zero()).count();
        let last = v.iter().rposition(|x| !x.is_zero()).unwrap_or(0);
        (support, std::cmp::Reverse(last))
    });
    let mut span = i.clone();
    let mut witnesses = Vec::new();
    let mut reached = BigInt::one();
    for v in candidates {
        if span.contains(&v)? {
            continue;
        }
        let order = quotient_structure(&i, &i.extend(std::slice::from_ref(&v))?)?.torsion_order();
        span = span.extend(std::slice::from_ref(&v))?;
        witnesses.push(Witness { order, vector: v });
        reached = quotient_structure(&i, &span)?.torsion_order();
        if reached == total {
            break;
        }
    }
    if reached != total {
        witnesses = decomposition
            .torsion_generators
            .into_iter()
            .map(|(order, vector)| Witness { order, vector })
            .collect();
    }
    Ok(KernelResult { structure, witnesses })
}

/// Image of `(S(Q̂)_d)^Γ` in `S(T̂)_d` under the symmetric power of the
/// projection.
pub fn cokernel_image(vp: &ValidatedProblem, d: usize) -> Result<Sublattice> {
    let map = vp.projection_power(d)?;
    let images: Vec<Vec<BigInt>> =
        vp.q_invariants(d)?.basis_vectors().iter().map(|v| map.mul_vec(v)).collect::<Result<_>>()?;
    Sublattice::from_generators(map.rows(), &images)
}

/// `(S(T̂)_d)^Γ` modulo the image of `(S(Q̂)_d)^Γ`.
pub fn base_change_cokernel(vp: &ValidatedProblem, d: usize) -> Result<AbelianGroupStructure> {
    let target = vp.t_invariants(d)?;
    let image = cokernel_image(vp, d)?;
    let s = quotient_structure(&image, &target)
        .map_err(|_| Error::InvariantViolation(format!("image of invariants in degree {d} is not invariant")))?;
    require_torsion("cokernel", d, &s)?;
    Ok(s)
}

/// `H^1(Γ, J_d)`.
pub fn h1_of_j(vp: &ValidatedProblem, d: usize) -> Result<AbelianGroupStructure> {
    let j = ideal_j(vp, d)?;
    h1_of_sublattice(vp.group(), vp.q().action(d)?, &j)
}

/// `H^1(Γ, S(Q̂)_d)`. Vanishes when `Γ` acts by plain permutations.
pub fn h1_of_ambient(vp: &ValidatedProblem, d: usize) -> Result<AbelianGroupStructure> {
    let dim = vp.q().piece(d)?.dimension();
    h1_of_sublattice(vp.group(), vp.q().action(d)?, &Sublattice::full(dim))
}
