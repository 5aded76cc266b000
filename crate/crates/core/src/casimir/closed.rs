use crate::error::{Error, Result};
use crate::ratpoly::{interpolate_in_n, to_power_sum, ClosedForm, PowerSumPoly};

use super::sum::{casimir_eigenvalue_patterned, CasimirRequest};

/// Ranks sampled for the closed form of order `m`: `m..=2m+2`.
pub fn sample_ranks(m: usize) -> std::ops::RangeInclusive<usize> {
    m..=2 * m + 2
}

/// Per-rank power-sum values used to build [`closed_form`].
pub fn closed_form_samples(m: usize) -> Result<Vec<(u64, PowerSumPoly)>> {
    if m == 0 {
        return Err(Error::invalid("order must be at least 1"));
    }
    sample_ranks(m)
        .map(|n| {
            let p = casimir_eigenvalue_patterned(&CasimirRequest::new(m, n))?;
            Ok((n as u64, to_power_sum(&p, n)?))
        })
        .collect()
}

/// Casimir eigenvalue of order `m` as a polynomial in the power sums whose
/// coefficients are polynomials in the rank `n`.
pub fn closed_form(m: usize) -> Result<ClosedForm> {
    interpolate_in_n(&closed_form_samples(m)?, m + 1)
}
