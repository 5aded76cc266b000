use crate::error::Result;
use crate::ratpoly::{rat, MPoly};
use crate::tuplegraph::{
    balance_admits_path, enumerate_paths, langlands_var, relative_order, EdgeSet, IndexTuple,
};

use super::jet::{jet_pow, Jet};
use super::matrix::{build_inverse_matrix, gram_schmidt_norms};

/// Eigenvalue computed from the Iwasawa decomposition: the `t_1 ... t_m`
/// coefficient of `prod_v <b_v, b_v>^(-x_v / 2)`, where `b_v` are the
/// Gram-Schmidt vectors of the path matrix columns and `x_v` is the
/// (optionally shifted) parameter of the value with rank `v`.
pub fn oracle_eigenvalue(t: &IndexTuple, shifted: bool) -> Result<MPoly> {
    let n = t.n();
    let ro = relative_order(t);
    let norms = gram_schmidt_norms(&build_inverse_matrix(t))?;
    let half = MPoly::constant(n, rat(-1, 2));
    let mut prod = Jet::one(t.m(), n);
    for (norm, &value) in norms.iter().zip(&ro.values) {
        let exponent = &langlands_var(n, value, shifted) * &half;
        prod = &prod * &jet_pow(norm, &exponent)?;
    }
    Ok(prod.top_coeff())
}

/// A jet coefficient of the path matrix that disagrees with the signed path count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathViolation {
    /// Row and column as tuple values.
    pub from: usize,
    pub to: usize,
    pub set: EdgeSet,
    pub expected: i64,
    pub found: MPoly,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathReport {
    pub checked: usize,
    pub violations: Vec<PathViolation>,
}

impl PathReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compares every jet coefficient of the path matrix with `(-1)^|S|` on
/// edge sets that form a path between the entry's vertices, and 0 elsewhere.
pub fn path_coefficient_check(t: &IndexTuple) -> PathReport {
    let ro = relative_order(t);
    let mat = build_inverse_matrix(t);
    let m = t.m();
    let mut report = PathReport::default();
    for (r, &from) in ro.values.iter().enumerate() {
        for (c, &to) in ro.values.iter().enumerate() {
            let paths = enumerate_paths(t, from, to);
            let entry = mat.entry(r, c);
            for set in 0..(1u64 << m) {
                let set = set as EdgeSet;
                let expected =
                    if balance_admits_path(t, set, from, to) && paths.binary_search(&set).is_ok() {
                        if set.count_ones().is_multiple_of(2) {
                            1
                        } else {
                            -1
                        }
                    } else {
                        0
                    };
                let found = entry.coeff(set);
                report.checked += 1;
                if found != MPoly::constant(t.n(), rat(expected, 1)) {
                    report.violations.push(PathViolation {
                        from,
                        to,
                        set,
                        expected,
                        found,
                    });
                }
            }
        }
    }
    report
}
