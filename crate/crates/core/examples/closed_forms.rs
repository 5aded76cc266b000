//! Closed forms in power sums and the rank, for the first few orders.

use gln_casimir::casimir::{closed_form, sample_ranks};
use gln_casimir::cli::emit_polynomial_json;

fn main() -> gln_casimir::Result<()> {
    let max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    for m in 1..=max {
        let cf = closed_form(m)?;
        let r = sample_ranks(m);
        println!("m={m} (n = {}..{}): {cf}", r.start(), r.end());
        if m == 2 {
            println!("  {}", emit_polynomial_json(&cf));
        }
    }
    // a closed form is valid for every n >= m, not just the sampled ranks
    let cf = closed_form(2)?;
    println!("m=2 at n=100: {}", cf.eval(100));
    Ok(())
}
