//! Exact scalars: big rationals and cyclotomic field elements.

mod cyclo;
mod poly;
mod rat;

pub use cyclo::{CycloField, CycloNum};
pub use poly::{cyclotomic_poly, euler_phi, IntPoly};
pub use rat::Rat;
