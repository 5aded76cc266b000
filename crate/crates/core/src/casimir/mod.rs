//! Casimir eigenvalues: sums of elementary eigenvalues over all index tuples,
//! closed forms in the rank, and cross-checks against the oracle.

mod closed;
mod sum;
mod tables;
mod verify;

pub use closed::{closed_form, closed_form_samples, sample_ranks};
pub use sum::{
    casimir_eigenvalue, casimir_eigenvalue_patterned, casimir_eigenvalue_patterned_stats,
    casimir_power_sum, patterns, Basis, CasimirRequest, PatternStats,
};
pub use tables::{eigenvalue_table, Table, TableRow};
pub use verify::{verify_tuples, Selection, TupleRecord, VerifyReport};
