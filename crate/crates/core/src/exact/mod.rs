//! Exact scalars, matrices and polynomials shared by every other module.

mod gaussian;
pub mod matrix;
pub mod poly;
mod rational;

pub use gaussian::GaussianRational;
pub use matrix::{Coordinatizer, MatrixQ, Rref, SparseVec, VectorQ};
pub use poly::{Interval, PolyQ};
pub use rational::Rational;
