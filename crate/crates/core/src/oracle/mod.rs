//! Brute-force verifiers that do not share code paths with the structured
//! pipeline: entrywise matrix identities, the `α_ℓ = 0` quantities and a
//! generic module decomposition.

mod generic;
mod identities;
mod zero_alpha;

pub use generic::{census_key, generic_decompose, CensusEntry, GenericDecomposition, GenericError};
pub use identities::{
    check_distance_word_expansions, check_entry_lemmas, check_matrix_dependencies, check_walk_counts,
    count_vs_matrix_crosscheck, EntryFailure, IdentityCheckResult,
};
pub use zero_alpha::{
    check_alpha_zero_branch, zero_alpha_quantities, AlphaZeroBranch, LevelScalars, ZeroAlphaError, ZeroAlphaQuantities,
};
