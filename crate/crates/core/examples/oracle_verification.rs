//! Cross-check of the cycle formula against the Iwasawa (Gram-Schmidt) oracle.

use gln_casimir::casimir::{verify_tuples, Selection};
use gln_casimir::jetoracle::oracle_eigenvalue;
use gln_casimir::tuplegraph::{elementary_eigenvalue, IndexTuple, SignConvention};

fn main() -> gln_casimir::Result<()> {
    let t = IndexTuple::minimal(vec![1, 2, 2])?;
    println!("oracle (1,2,2):      {}", oracle_eigenvalue(&t, false)?);
    for s in SignConvention::ALL {
        println!(
            "{:<20} {}",
            format!("{s}:"),
            elementary_eigenvalue(&t, s, false)
        );
    }

    for (m, n, sel) in [
        (3, 4, Selection::Exhaustive),
        (5, 5, Selection::Random { count: 50, seed: 7 }),
    ] {
        let r = verify_tuples(m, n, sel, true)?;
        println!(
            "m={m} n={n}: {} tuples, {} zero, literal {}, alternating {}, consistent {:?}",
            r.total(),
            r.zero(),
            r.match_count(SignConvention::Literal),
            r.match_count(SignConvention::Alternating),
            r.consistent_conventions()
        );
    }
    Ok(())
}
