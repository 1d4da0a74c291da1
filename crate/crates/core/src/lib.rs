//! Exact permanents and determinants over big rationals and cyclotomic
//! fields, the structured matrices built from points and roots of unity, and
//! a verifier that checks permanent identities of those matrices exactly.
//!
//! ```
//! use permident::{builders::{build_x, PointVector}, matrix::permanent_ryser, Rat};
//!
//! let xs: PointVector = "1,2,3,4".parse().unwrap();
//! let s = permanent_ryser(&build_x(&xs)).unwrap();
//! assert_eq!(s, "1352/3".parse::<Rat>().unwrap());
//! ```

pub mod arith;
pub mod builders;
pub mod cli;
pub mod error;
pub mod identities;
pub mod matrix;
pub mod perm;

pub use arith::{CycloField, CycloNum, Rat};
pub use error::{Error, Result};
pub use matrix::{determinant, permanent_naive, permanent_ryser, SquareMatrix};
pub use perm::Permutation;
