//! Finite groups of signed permutations, their subgroups and cosets, and
//! integral matrix representations (restriction and quotient).

mod action;
mod group;
mod permutation;
mod subgroups;

pub use action::{quotient_action, restrict_action_to_sublattice, MatrixAction, QuotientAction};
pub use group::{close_group, FiniteActionGroup, DEFAULT_GROUP_BOUND};
pub use permutation::SignedPermutation;
pub use subgroups::{
    all_subgroups, all_subgroups_up_to_conjugacy, coset_representatives, partition_by_conjugacy, Subgroup,
};
