//! Chow groups of classifying spaces of tori, degree by degree, from a
//! resolution of the character lattice, together with the kernel and
//! cokernel of the map to the invariants of the character ring.
//!
//! The identification of the cokernel with first cohomology uses the
//! quotient by `J`, and is checked against the direct computation rather
//! than assumed. The underlying geometric statements need an infinite base
//! field; everything here is lattice arithmetic and does not.

mod cohomology;
mod pipeline;
mod problem;
mod report;

pub use cohomology::{h1, h1_full_cochains, h1_of_sublattice};
pub use pipeline::{
    base_change_cokernel, base_change_kernel, chow_group, cokernel_image, h1_of_ambient, h1_of_j, ideal_i,
    ideal_i_exhaustive, ideal_j, KernelResult, Witness,
};
pub use problem::{validate, ComputeOptions, ResolutionProblem, ValidatedProblem};
pub use report::{check_h1, degree_report, DegreeReport, H1Check};
