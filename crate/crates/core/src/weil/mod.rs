//! Orbits of coordinate subsets under a permutation action, the stratum
//! data they carry, and transitive permutation groups of small degree.
//!
//! Intermediate fields are never constructed: a field between the base and
//! the splitting field is named by the subgroup fixing it.

mod strata;
mod transitive;

pub use strata::{lemma12_check, strata, Block, BlockMatch, GammaSet, Lemma12Report, StratumDescriptor, MAX_POINTS};
pub use transitive::{transitive_groups, MAX_DEGREE, MAX_ORDER};
