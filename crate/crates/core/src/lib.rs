//! Exact computation with Gaussian coefficients, partitions in a box, and
//! semi-invariants of binary forms.
//!
//! The kernel of the operator `D` on polynomials in `a_0, ..., a_n` of degree
//! `k` and weight `m` has dimension `p(k, n, m) - p(k, n, m - 1)` for
//! `m <= nk/2`. Products of semi-invariants with distinct leading terms give
//! lower bounds on these differences, which in turn control the shape of
//! differences of Gaussian coefficients.

pub mod boxpartitions;
pub mod cache;
pub mod cayley;
pub mod cli;
pub mod differences;
pub mod error;
pub mod monomials;
pub mod qpoly;
pub mod semiinv;

pub use error::{Error, Result};
