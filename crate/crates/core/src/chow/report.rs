use super::pipeline::{base_change_cokernel, base_change_kernel, chow_group, h1_of_ambient, h1_of_j, Witness};
use super::problem::ValidatedProblem;
use crate::error::{Error, Result};
use crate::lattice::AbelianGroupStructure;

/// Result of the `H^1(Γ, J_d)` comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Check {
    pub h1: AbelianGroupStructure,
    /// `H^1(Γ, S(Q̂)_d)`, computed only for actions with signs. When it is
    /// nonzero the cokernel is only a subgroup of `H^1(Γ, J_d)` and the
    /// equality is not asserted.
    pub ambient: Option<AbelianGroupStructure>,
    pub compared: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: usize,
    pub chow_group: AbelianGroupStructure,
    pub kernel: AbelianGroupStructure,
    pub cokernel: AbelianGroupStructure,
    pub h1_check: Option<H1Check>,
    pub witnesses: Vec<Witness>,
}

/// Runs the full degree-`d` computation. With `with_h1`, the cokernel is
/// compared against `H^1(Γ, J_d)` and a disagreement is an error carrying
/// both values.
pub fn degree_report(vp: &ValidatedProblem, d: usize, with_h1: bool) -> Result<DegreeReport> {
    vp.check_degree(d)?;
    let chow = chow_group(vp, d)?;
    let (kernel, witnesses) = if d == 0 {
        (AbelianGroupStructure::trivial(), Vec::new())
    } else {
        let k = base_change_kernel(vp, d)?;
        (k.structure, k.witnesses)
    };
    let cokernel = if d == 0 { AbelianGroupStructure::trivial() } else { base_change_cokernel(vp, d)? };
    let h1_check = if with_h1 { Some(check_h1(vp, d, &cokernel)?) } else { None };
    Ok(DegreeReport { degree: d, chow_group: chow, kernel, cokernel, h1_check, witnesses })
}

/// Compares `cokernel` (the degree-`d` cokernel) with `H^1(Γ, J_d)`.
pub fn check_h1(vp: &ValidatedProblem, d: usize, cokernel: &AbelianGroupStructure) -> Result<H1Check> {
    let h1 = h1_of_j(vp, d)?;
    let ambient = if vp.group().is_unsigned() { None } else { Some(h1_of_ambient(vp, d)?) };
    let compared = ambient.as_ref().is_none_or(AbelianGroupStructure::is_trivial);
    if compared && &h1 != cokernel {
        return Err(Error::CrossCheckMismatch { degree: d, cokernel: cokernel.to_string(), h1: h1.to_string() });
    }
    Ok(H1Check { h1, ambient, compared })
}
