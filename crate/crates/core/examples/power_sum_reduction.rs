//! Rewriting symmetric polynomials in power sums on the hyperplane sum(alpha) = 0.

use gln_casimir::ratpoly::{power_sum, to_power_sum, MPoly};

fn main() -> gln_casimir::Result<()> {
    let n = 4;
    let mut e2 = MPoly::zero(n);
    let mut e3 = MPoly::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            e2 += &(&MPoly::var(n, i) * &MPoly::var(n, j));
            for k in j + 1..n {
                e3 += &(&(&MPoly::var(n, i) * &MPoly::var(n, j)) * &MPoly::var(n, k));
            }
        }
    }
    println!("e2 = {}", to_power_sum(&e2, n)?);
    println!("e3 = {}", to_power_sum(&e3, n)?);
    println!(
        "p2^2 - p4 = {}",
        to_power_sum(&(&power_sum(n, 2).pow(2) - &power_sum(n, 4)), n)?
    );
    match to_power_sum(&MPoly::var(n, 0), n) {
        Ok(p) => println!("alpha_1 = {p}"),
        Err(e) => println!("alpha_1: {e}"),
    }
    Ok(())
}
