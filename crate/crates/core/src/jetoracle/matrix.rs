use crate::error::Result;
use crate::tuplegraph::{relative_order, IndexTuple};

use super::jet::{jet_inv, Jet};

/// Square matrix of jets, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetMatrix {
    size: usize,
    entries: Vec<Vec<Jet>>,
}

impl JetMatrix {
    pub fn identity(size: usize, m: usize, nvars: usize) -> Self {
        let entries = (0..size)
            .map(|r| {
                (0..size)
                    .map(|c| {
                        if r == c {
                            Jet::one(m, nvars)
                        } else {
                            Jet::zero(m, nvars)
                        }
                    })
                    .collect()
            })
            .collect();
        JetMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, row: usize, col: usize) -> &Jet {
        &self.entries[row][col]
    }

    pub fn column(&self, col: usize) -> Vec<Jet> {
        self.entries.iter().map(|row| row[col].clone()).collect()
    }

    /// Right-multiplies by `I - t_j E_{a,b}`: column `b` loses `t_j` times column `a`.
    fn apply_edge(&mut self, j: usize, a: usize, b: usize) {
        for row in &mut self.entries {
            let (m, nvars) = (row[a].m(), row[a].nvars());
            let delta = &row[a] * &Jet::var(m, nvars, j);
            row[b] = &row[b] - &delta;
        }
    }
}

/// `(A')^{-1} = prod_j (I + t_j E_{rho(j), rho(j+1)})^{-1}` in the jet algebra,
/// indexed by the ranks of the tuple's values.
///
/// A loop factor inverts to `I - t/(1+t) E`, which equals `I - t E` once
/// `t^2 = 0`, so every factor is `I - t_j E`.
pub fn build_inverse_matrix(t: &IndexTuple) -> JetMatrix {
    let ro = relative_order(t);
    let m = t.m();
    let mut mat = JetMatrix::identity(ro.ell, m, t.n());
    for j in 0..m {
        mat.apply_edge(j, ro.rho[j], ro.rho[(j + 1) % m]);
    }
    mat
}

fn inner(u: &[Jet], v: &[Jet]) -> Jet {
    let mut acc = Jet::zero(u[0].m(), u[0].nvars());
    for (x, y) in u.iter().zip(v) {
        acc = &acc + &(x * y);
    }
    acc
}

/// Squared norms `<b_v, b_v>` of the classical Gram-Schmidt orthogonalization
/// of the columns of `mat`.
pub fn gram_schmidt_norms(mat: &JetMatrix) -> Result<Vec<Jet>> {
    let mut basis: Vec<Vec<Jet>> = Vec::with_capacity(mat.size);
    let mut norms: Vec<Jet> = Vec::with_capacity(mat.size);
    let mut inverses: Vec<Jet> = Vec::with_capacity(mat.size);
    for v in 0..mat.size {
        let a = mat.column(v);
        let mut b = a.clone();
        for k in 0..v {
            let proj = &inner(&a, &basis[k]) * &inverses[k];
            if proj.is_zero() {
                continue;
            }
            for (bi, bk) in b.iter_mut().zip(&basis[k]) {
                *bi = &*bi - &(&proj * bk);
            }
        }
        let norm = inner(&b, &b);
        inverses.push(jet_inv(&norm)?);
        norms.push(norm);
        basis.push(b);
    }
    Ok(norms)
}
