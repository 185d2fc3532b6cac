//! Exact computations with parabolic subalgebras of reductive Lie algebras
//! over the rationals.

pub mod acceptance;
pub mod building;
pub mod catalog;
pub mod config;
pub mod error;
pub mod liealg;
pub mod parabolic;
pub mod ratmat;
pub mod rootdata;

pub use error::{Error, Result};
pub use liealg::{Element, LieAlgebra};
pub use ratmat::{Matrix, Rational, Subspace};
