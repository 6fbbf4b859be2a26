//! Graded pieces of symmetric algebras over lattices with a group action.

mod action;
mod graded;
mod maps;
mod monomial;

pub use action::{induce, invariants, invariants_by_kernel, orbit_sums, symmetric_power_action, BaseAction, SymmetricAction};
pub use graded::{induced_contribution, GradedRepresentation, ResolutionAlgebra, DEFAULT_DEGREE_CAP};
pub use maps::{ideal_piece, sym_power_map};
pub(crate) use maps::ideal_piece_in;
pub use monomial::{monomial_basis, multiply, GradedPiece, Monomial};
