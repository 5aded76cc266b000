//! Symbolic tables for orders 2 and 3, and the row sums they imply.

use gln_casimir::casimir::eigenvalue_table;
use gln_casimir::cli::emit_markdown_table;
use gln_casimir::ratpoly::to_power_sum;

fn main() -> gln_casimir::Result<()> {
    for m in [2, 3] {
        let table = eigenvalue_table(m)?;
        println!("{}", emit_markdown_table(&table));
        for n in 2..=4 {
            let computed = to_power_sum(&table.row_sum(n, false)?, n)?;
            let printed = match to_power_sum(&table.row_sum(n, true)?, n) {
                Ok(p) => p.to_string(),
                Err(e) => e.to_string(),
            };
            println!("n={n}: computed rows sum to {computed}; printed rows give {printed}");
        }
        println!();
    }
    Ok(())
}
