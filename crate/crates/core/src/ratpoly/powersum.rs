//! Symmetric reduction to the power-sum basis on the hyperplane `p1 = 0`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{One, Signed, Zero};

use super::mpoly::{MPoly, Monomial};
use super::rat::{rat_to_plain, Rat};
use crate::error::{Error, Result};

/// Integer partition with parts `>= 2`, stored non-increasing. The empty
/// partition stands for the constant term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the parts; rejects parts below 2.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p < 2) {
            return Err(Error::invalid("partition parts must be >= 2 since p1 = 0"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `p_lambda` expanded in `n` variables.
    pub fn expand(&self, n: usize) -> MPoly {
        let mut r = MPoly::one(n);
        for &k in &self.0 {
            r = &r * &power_sum(n, k);
        }
        r
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let k = self.0[i];
            let mult = self.0[i..].iter().take_while(|&&p| p == k).count();
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if mult == 1 {
                write!(f, "p{k}")?;
            } else {
                write!(f, "p{k}^{mult}")?;
            }
            i += mult;
        }
        Ok(())
    }
}

/// `p_k = sum_i alpha_i^k` in `n` variables.
pub fn power_sum(n: usize, k: u32) -> MPoly {
    let mut r = MPoly::zero(n);
    for i in 0..n {
        r += &MPoly::var(n, i).pow(k);
    }
    r
}

/// All partitions of `weight` into parts `>= 2`, in ascending canonical order.
pub fn partitions_min2(weight: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (2..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, weight, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Symmetric polynomial in the power sums `p_k`, `k >= 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PowerSumPoly {
    coeffs: BTreeMap<Partition, Rat>,
}

impl PowerSumPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs<I: IntoIterator<Item = (Partition, Rat)>>(it: I) -> Self {
        let mut r = Self::zero();
        for (p, c) in it {
            r.add_term(p, c);
        }
        r
    }

    fn add_term(&mut self, p: Partition, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(p).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> Rat {
        self.coeffs.get(p).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in canonical order: heaviest partition first, constant last.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.coeffs.iter().rev()
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    /// Expands back into a polynomial in `n` variables.
    pub fn to_mpoly(&self, n: usize) -> MPoly {
        let mut r = MPoly::zero(n);
        for (p, c) in &self.coeffs {
            r += &p.expand(n).scale(c);
        }
        r
    }
}

impl fmt::Display for PowerSumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (p, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if p.is_empty() {
                f.write_str(&rat_to_plain(&abs))?;
            } else if abs.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{} {p}", rat_to_plain(&abs))?;
            }
        }
        Ok(())
    }
}

/// Eliminates the last variable through `alpha_n = -(alpha_1 + ... + alpha_{n-1})`.
///
/// The result, a polynomial in `n - 1` variables, is zero exactly when the
/// input lies in the ideal generated by `p1`.
pub fn reduce_mod_p1(p: &MPoly) -> MPoly {
    let n = p.nvars();
    if n == 0 {
        return p.clone();
    }
    let target = n - 1;
    let mut images: Vec<MPoly> = (0..target).map(|i| MPoly::var(target, i)).collect();
    let mut last = MPoly::zero(target);
    for v in &images {
        last -= v;
    }
    images.push(last);
    p.substitute(&images, target)
        .expect("images built with matching arity")
}

/// Rewrites `p` (in `n` variables) as a polynomial in `p_2, p_3, ...` that
/// agrees with it on `sum(alpha) = 0`.
///
/// The representation is unique once `n >= deg(p)`; below that, free
/// coordinates of the linear system are set to zero.
pub fn to_power_sum(p: &MPoly, n: usize) -> Result<PowerSumPoly> {
    if p.nvars() != n {
        return Err(Error::Arity {
            expected: n,
            got: p.nvars(),
        });
    }
    if n == 0 {
        return Err(Error::invalid("rank must be at least 1"));
    }
    let reduced = reduce_mod_p1(p);
    let deg = reduced.total_degree();

    // The elimination is linear and homogeneous, so every degree can be
    // solved separately against the partitions of that weight.
    let mut by_degree: BTreeMap<u32, Vec<(Monomial, Rat)>> = BTreeMap::new();
    for (m, c) in reduced.terms() {
        by_degree
            .entry(m.degree())
            .or_default()
            .push((m.clone(), c.clone()));
    }

    let mut out = PowerSumPoly::zero();
    for weight in 0..=deg {
        let target = by_degree.remove(&weight).unwrap_or_default();
        if target.is_empty() {
            continue;
        }
        let basis = partitions_min2(weight);
        let images: Vec<MPoly> = basis.iter().map(|l| reduce_mod_p1(&l.expand(n))).collect();

        let mut rows: BTreeSet<Monomial> = target.iter().map(|(m, _)| m.clone()).collect();
        for img in &images {
            rows.extend(img.terms().map(|(m, _)| m.clone()));
        }
        let target_poly = MPoly::from_terms(
            n - 1,
            target
                .iter()
                .map(|(m, c)| (c.clone(), m.exponents().to_vec())),
        )?;
        let matrix: Vec<Vec<Rat>> = rows
            .iter()
            .map(|m| {
                let mut row: Vec<Rat> = images.iter().map(|img| img.coefficient(m)).collect();
                row.push(target_poly.coefficient(m));
                row
            })
            .collect();
        let sol = solve_augmented(matrix, basis.len()).ok_or(Error::NotSymmetric)?;
        for (l, c) in basis.into_iter().zip(sol) {
            out.add_term(l, c);
        }
    }
    Ok(out)
}

/// Solves an augmented system `[A | b]` with `ncols` unknowns by exact
/// Gauss-Jordan elimination. Free unknowns are set to zero; `None` when the
/// system is inconsistent.
pub(crate) fn solve_augmented(mut m: Vec<Vec<Rat>>, ncols: usize) -> Option<Vec<Rat>> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rat::one() / &m[r][col];
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        pivots.push(col);
        r += 1;
        if r == nrows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut sol = vec![Rat::zero(); ncols];
    for (i, &col) in pivots.iter().enumerate() {
        sol[col] = m[i][ncols].clone();
    }
    Some(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat::{rat, rat_int};

    fn pairwise(n: usize) -> MPoly {
        let mut r = MPoly::zero(n);
        for i in 0..n {
            for j in i + 1..n {
                r += &(&MPoly::var(n, i) * &MPoly::var(n, j));
            }
        }
        r
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn elementary_e2_is_minus_half_p2() {
        for n in 2..=5 {
            let q = to_power_sum(&pairwise(n), n).unwrap();
            assert_eq!(q, PowerSumPoly::from_coeffs([(part(&[2]), rat(-1, 2))]));
        }
    }

    #[test]
    fn p2_and_p1() {
        let q = to_power_sum(&power_sum(4, 2), 4).unwrap();
        assert_eq!(q.to_string(), "p2");
        assert!(to_power_sum(&power_sum(4, 1), 4).unwrap().is_zero());
    }

    #[test]
    fn lone_variable_is_not_symmetric() {
        for n in 2..=4 {
            assert_eq!(to_power_sum(&MPoly::var(n, 0), n), Err(Error::NotSymmetric));
        }
    }

    #[test]
    fn p2_squared_is_kept_apart_from_p4() {
        let n = 5;
        let p = &(&power_sum(n, 2).pow(2) - &power_sum(n, 4).scale(&rat_int(3)))
            + &MPoly::constant(n, rat(1, 7));
        let q = to_power_sum(&p, n).unwrap();
        assert_eq!(q.coeff(&part(&[2, 2])), rat_int(1));
        assert_eq!(q.coeff(&part(&[4])), rat_int(-3));
        assert_eq!(q.coeff(&Partition::empty()), rat(1, 7));
        assert_eq!(q.to_string(), "-3 p4 + p2^2 + 1/7");
    }

    #[test]
    fn partitions_with_parts_at_least_two() {
        let w6: Vec<String> = partitions_min2(6).iter().map(|p| p.to_string()).collect();
        assert_eq!(w6, vec!["p2^3", "p3^2", "p4 p2", "p6"]);
        assert!(partitions_min2(1).is_empty());
        assert_eq!(partitions_min2(0), vec![Partition::empty()]);
    }

    #[test]
    fn rank_one_collapses_to_constants() {
        let p = &MPoly::var(1, 0).pow(3) + &MPoly::constant(1, rat_int(2));
        let q = to_power_sum(&p, 1).unwrap();
        assert_eq!(q.to_string(), "2");
    }

    #[test]
    fn arity_checked() {
        assert!(matches!(
            to_power_sum(&MPoly::one(3), 4),
            Err(Error::Arity { .. })
        ));
    }
}
