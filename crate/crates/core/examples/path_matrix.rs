//! The inverse matrix as a path matrix: jet coefficients count signed paths.

use gln_casimir::jetoracle::{build_inverse_matrix, gram_schmidt_norms, path_coefficient_check};
use gln_casimir::tuplegraph::{enumerate_paths, relative_order, IndexTuple};

fn main() -> gln_casimir::Result<()> {
    let t = IndexTuple::minimal(vec![1, 3, 2, 3])?;
    let ro = relative_order(&t);
    let mat = build_inverse_matrix(&t);
    for (r, &v) in ro.values.iter().enumerate() {
        for (c, &w) in ro.values.iter().enumerate() {
            let paths: Vec<String> = enumerate_paths(&t, v, w)
                .iter()
                .map(|s| {
                    let edges: Vec<String> = (0..t.m())
                        .filter(|j| s & (1 << j) != 0)
                        .map(|j| (j + 1).to_string())
                        .collect();
                    format!("{{{}}}", edges.join(","))
                })
                .collect();
            println!("{v}->{w}: {}   paths {}", mat.entry(r, c), paths.join(" "));
        }
    }
    for (v, norm) in ro.values.iter().zip(gram_schmidt_norms(&mat)?) {
        println!("|b_{v}|^2 = {norm}");
    }
    let report = path_coefficient_check(&t);
    println!(
        "{} coefficients checked, {} violations",
        report.checked,
        report.violations.len()
    );
    Ok(())
}
