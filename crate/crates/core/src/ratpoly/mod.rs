//! Exact rational arithmetic, sparse multivariate polynomials, reduction to
//! power sums modulo `p1` and interpolation in the rank `n`.

mod interp;
mod mpoly;
mod powersum;
mod rat;

pub use interp::{interpolate_in_n, ClosedForm, UPoly};
pub use mpoly::{poly_arith, poly_eval, ArithOp, MPoly, Monomial, VarNames};
pub use powersum::{
    partitions_min2, power_sum, reduce_mod_p1, to_power_sum, Partition, PowerSumPoly,
};
pub use rat::{parse_rat, rat, rat_int, rat_to_canonical, rat_to_plain, Rat};
