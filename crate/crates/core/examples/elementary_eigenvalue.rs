//! Eigenvalue of one elementary operator from its proper cycles.
//!
//! cargo run --example elementary_eigenvalue -- 1,9,2,5,5,9,6,8,4,5

use gln_casimir::ratpoly::VarNames;
use gln_casimir::tuplegraph::{
    cycle_product, elementary_eigenvalue, enumerate_cycles, IndexTuple, SignConvention,
};

fn main() -> gln_casimir::Result<()> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1,9,2,5,5,9,6,8,4,5".into());
    let t: IndexTuple = arg.parse()?;
    let closed = t.closed();

    println!("I = {:?}", closed);
    for c in enumerate_cycles(&t) {
        println!(
            "  {:?} proper={} v1={} v2={}",
            c.values(&closed),
            c.proper,
            c.v1,
            c.v2
        );
    }

    match cycle_product(&t, SignConvention::Alternating) {
        None => println!("an entry is below i1, eigenvalue 0"),
        Some(cp) => println!("{} linear factors", cp.factors.len()),
    }
    let raw = elementary_eigenvalue(&t, SignConvention::Alternating, false);
    let shifted = elementary_eigenvalue(&t, SignConvention::Alternating, true);
    println!("on |.|^alpha:        {}", raw.display_with(VarNames::Greek));
    println!(
        "on |.|^(alpha+rho):  {}",
        shifted.display_with(VarNames::Greek)
    );
    Ok(())
}
