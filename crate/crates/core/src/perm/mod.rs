//! Permutations, their enumerators, and the integer sequences used by the
//! identity checks.

mod permutation;
mod sequences;
mod streams;

pub use permutation::{CycleDecomposition, Permutation};
pub use sequences::{
    bernoulli, binomial, double_factorial, factorial, tangent_numbers, MAX_BERNOULLI_INDEX,
    MAX_TANGENT_INDEX,
};
pub use streams::{
    all_permutations, derangements, even_cycle_perms, k_cycles, pair_partitions, PairPartition,
    PairPartitions, MAX_MATCHING_POINTS, MAX_PERM_POINTS,
};
