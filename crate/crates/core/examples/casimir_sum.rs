//! Casimir eigenvalue at a fixed rank, naive and pattern-grouped.

use std::time::Instant;

use gln_casimir::casimir::{
    casimir_eigenvalue, casimir_eigenvalue_patterned_stats, CasimirRequest,
};
use gln_casimir::ratpoly::to_power_sum;

fn main() -> gln_casimir::Result<()> {
    let (m, n) = (4, 6);
    let req = CasimirRequest::new(m, n);

    let t = Instant::now();
    let naive = casimir_eigenvalue(&req)?;
    println!("naive over {} tuples: {:?}", n.pow(m as u32), t.elapsed());

    let t = Instant::now();
    let (grouped, stats) = casimir_eigenvalue_patterned_stats(&req)?;
    println!(
        "patterned: {:?}, {} patterns ({} vanish), {} tuples skipped",
        t.elapsed(),
        stats.patterns,
        stats.zero_patterns,
        stats.skipped_tuples
    );
    assert_eq!(naive, grouped);

    println!("{} terms in alpha_1..alpha_{n}", grouped.len());
    println!("on sum(alpha) = 0: {}", to_power_sum(&grouped, n)?);
    Ok(())
}
