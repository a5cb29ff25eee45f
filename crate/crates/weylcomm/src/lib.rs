//! Exact computer algebra for the one-variable Weyl algebra.
//!
//! The crate computes with differential operators `u(x) d^p` over exact
//! rationals, evaluates the standard polynomial `s_N` over arbitrary
//! associative rings, runs a Grassmann super-calculus on odd generators
//! `d^i(a)`, and determines the Wronskian constant `lambda_p` by several
//! independent routes that are cross-validated against each other.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals,
//! no rounding anywhere. With the `parallel` feature (on by default) the
//! data-parallel inner loops fan out over rayon; results are bit-identical
//! regardless of thread count.

pub mod combinatorics;
pub mod identities;
pub mod lambda;
pub mod matrix;
pub mod par;
pub mod poly;
pub mod rational;
pub mod standard;
pub mod superalg;
pub mod weyl;

pub use poly::Poly;
pub use rational::Rat;
pub use weyl::DiffOp;

/// Errors shared by the whole crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("argument out of range: {0}")]
    Range(String),
    #[error("structural check failed: {0}")]
    Structure(String),
    #[error("leader of the zero operator is undefined")]
    ZeroLeader,
    #[error("inexact division: {0}")]
    InexactDivision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
