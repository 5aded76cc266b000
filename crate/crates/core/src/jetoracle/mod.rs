//! Independent eigenvalue computation through the Iwasawa decomposition,
//! carried out exactly in the multilinear jet algebra so that the mixed
//! partial derivative at `t = 0` becomes a coefficient lookup.

mod jet;
mod matrix;
mod oracle;

pub use jet::{full_set, jet_inv, jet_mul, jet_pow, Jet};
pub use matrix::{build_inverse_matrix, gram_schmidt_norms, JetMatrix};
pub use oracle::{oracle_eigenvalue, path_coefficient_check, PathReport, PathViolation};
