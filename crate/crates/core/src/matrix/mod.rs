//! Dense square matrices over exact rings, with permanents and determinants.

mod determinant;
mod permanent;
mod ring;
mod square;

pub use determinant::determinant;
pub use permanent::{
    permanent_naive, permanent_ryser, permanent_ryser_parallel, MAX_NAIVE_DIM, MAX_RYSER_DIM,
};
pub use ring::Ring;
pub use square::SquareMatrix;
