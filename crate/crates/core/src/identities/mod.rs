//! The identity checks: the functions involved, deterministic sampling,
//! verdict records, and one verifier per identity.

mod families;
mod functions;
mod sampling;
mod verdict;
mod verify;

pub use families::{verify_all, verify_family, Family, SizeSelection};
pub use functions::{
    f_weight, rn, s_by_cycles, s_by_definition, s_by_definition_naive, s_by_matching,
    s_sequence, MAX_CYCLE_SUM_POINTS, MAX_RN_INDEX,
};
pub use sampling::{sample_nonzero_rat, sample_points, trial_rng};
pub use verdict::{IdentityId, Status, VerdictRecord};
pub use verify::*;
