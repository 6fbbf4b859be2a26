//! Exact integer linear algebra: Smith and Hermite normal forms, kernels,
//! sublattice intersection, membership and quotient structure.

mod hermite;
mod matrix;
mod smith;
mod sublattice;

pub use hermite::hermite_normal_form;
pub use matrix::IntegerMatrix;
pub use smith::{smith_normal_form, SmithDecomposition};
pub use sublattice::{
    intersect, kernel_basis, membership, quotient_structure, rank, sublattice_from_generators,
    AbelianGroupStructure, Membership, NonMemberReason, QuotientDecomposition, Sublattice,
};

pub use matrix::int_vector;
