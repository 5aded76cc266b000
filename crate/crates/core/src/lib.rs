//! Exact eigenvalues of the elementary differential operators and the Casimir
//! operators of order `m` for `GL(n, R)`, as polynomials in the Langlands
//! parameters.
//!
//! Two independent routes produce every elementary eigenvalue:
//!
//! - [`tuplegraph::elementary_eigenvalue`] reads it off the proper cycles of
//!   the closed index tuple `(i_1, ..., i_m, i_1)`.
//! - [`jetoracle::oracle_eigenvalue`] builds the path matrix of the tuple in
//!   the multilinear jet algebra `Q[alpha][t_1..t_m] / (t_j^2)`, orthogonalizes
//!   its columns exactly and extracts the `t_1 ... t_m` coefficient of the
//!   product of the Gram norms raised to `-alpha / 2`.
//!
//! [`casimir`] sums elementary eigenvalues into Casimir eigenvalues, reduces
//! them to power sums on the hyperplane `sum(alpha) = 0` and interpolates the
//! coefficients in `n`. [`cli`] is the command-line front end.

pub mod casimir;
pub mod cli;
pub mod error;
pub mod jetoracle;
pub mod ratpoly;
pub mod tuplegraph;

pub use error::{Error, Result};
