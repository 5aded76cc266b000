use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ratpoly::{to_power_sum, MPoly, PowerSumPoly};
use crate::tuplegraph::{
    cycle_product, elementary_eigenvalue, langlands_var, IndexTuple, SignConvention,
};

/// Output basis requested for a Casimir eigenvalue.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Basis {
    #[default]
    Monomial,
    PowerSum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CasimirRequest {
    pub m: usize,
    pub n: usize,
    /// Evaluate at `alpha + rho` (the Maass-form convention) instead of `alpha`.
    pub shifted: bool,
    pub basis: Basis,
    pub sign: SignConvention,
}

impl CasimirRequest {
    pub fn new(m: usize, n: usize) -> Self {
        CasimirRequest {
            m,
            n,
            shifted: true,
            basis: Basis::Monomial,
            sign: SignConvention::Alternating,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.n == 0 {
            return Err(Error::invalid("order and rank must both be at least 1"));
        }
        if self.m > crate::tuplegraph::MAX_ORDER {
            return Err(Error::invalid("order too large"));
        }
        Ok(())
    }

    /// Whether `1 <= m <= n`, the range the closed forms are stated for.
    /// Larger `m` is accepted but is experimental.
    pub fn in_stated_range(&self) -> bool {
        (1..=self.n).contains(&self.m)
    }
}

/// Tuple with the given lexicographic index in `{1..n}^m`.
pub(crate) fn tuple_at(index: u64, m: usize, n: usize) -> IndexTuple {
    let mut entries = vec![0; m];
    let mut rest = index;
    for e in entries.iter_mut().rev() {
        *e = (rest % n as u64) as usize + 1;
        rest /= n as u64;
    }
    IndexTuple::new(entries, n).expect("digits are in range")
}

pub(crate) fn tuple_count(m: usize, n: usize) -> Result<u64> {
    (n as u64)
        .checked_pow(m as u32)
        .ok_or_else(|| Error::invalid("too many tuples"))
}

fn sum_polys<I: ParallelIterator<Item = MPoly>>(it: I, n: usize) -> MPoly {
    it.fold(
        || MPoly::zero(n),
        |mut acc, p| {
            acc += &p;
            acc
        },
    )
    .reduce(
        || MPoly::zero(n),
        |mut a, b| {
            a += &b;
            a
        },
    )
}

/// Sum of the elementary eigenvalues over every tuple in `{1..n}^m`.
pub fn casimir_eigenvalue(req: &CasimirRequest) -> Result<MPoly> {
    req.validate()?;
    let total = tuple_count(req.m, req.n)?;
    let (m, n, sign, shifted) = (req.m, req.n, req.sign, req.shifted);
    Ok(sum_polys(
        (0..total)
            .into_par_iter()
            .map(|i| elementary_eigenvalue(&tuple_at(i, m, n), sign, shifted)),
        n,
    ))
}

/// Counters describing a patterned summation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PatternStats {
    pub patterns: usize,
    pub zero_patterns: usize,
    pub skipped_tuples: u64,
    pub evaluated_tuples: u64,
}

/// Every word of length `m` over `1..=ell` that uses each letter: the
/// relative-order patterns with `ell` distinct values.
pub fn patterns(m: usize, ell: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let total = (ell as u64).pow(m as u32);
    for idx in 0..total {
        let mut w = vec![0; m];
        let mut rest = idx;
        for e in w.iter_mut().rev() {
            *e = (rest % ell as u64) as usize + 1;
            rest /= ell as u64;
        }
        let mut seen = vec![false; ell];
        for &v in &w {
            seen[v - 1] = true;
        }
        if seen.iter().all(|&s| s) {
            out.push(w);
        }
    }
    out
}

/// Strictly increasing `k`-subsets of `1..=n`, lexicographic.
pub(crate) fn increasing_choices(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Same sum as [`casimir_eigenvalue`], grouping tuples by relative order.
///
/// The proper-cycle analysis runs once per pattern; each class member then
/// only substitutes its actual values into the factored product. Patterns
/// whose eigenvalue vanishes are skipped with all their members.
pub fn casimir_eigenvalue_patterned(req: &CasimirRequest) -> Result<MPoly> {
    casimir_eigenvalue_patterned_stats(req).map(|(p, _)| p)
}

pub fn casimir_eigenvalue_patterned_stats(req: &CasimirRequest) -> Result<(MPoly, PatternStats)> {
    req.validate()?;
    let (m, n) = (req.m, req.n);
    let mut stats = PatternStats::default();
    let mut live = Vec::new();
    for ell in 1..=m.min(n) {
        let members = binomial(n as u64, ell as u64);
        for pat in patterns(m, ell) {
            stats.patterns += 1;
            let t = IndexTuple::new(pat, ell).expect("pattern values are ranks");
            match cycle_product(&t, req.sign) {
                None => {
                    stats.zero_patterns += 1;
                    stats.skipped_tuples += members;
                }
                Some(cp) => {
                    stats.evaluated_tuples += members;
                    live.push((ell, cp));
                }
            }
        }
    }
    let work: Vec<_> = live
        .iter()
        .flat_map(|(ell, cp)| {
            increasing_choices(n, *ell)
                .into_iter()
                .map(move |c| (cp, c))
        })
        .collect();
    let shifted = req.shifted;
    let sum = sum_polys(
        work.into_par_iter().map(|(cp, choice)| {
            cp.to_mpoly(&|rank| langlands_var(n, choice[rank - 1], shifted), n)
        }),
        n,
    );
    Ok((sum, stats))
}

/// Casimir eigenvalue reduced to power sums on `sum(alpha) = 0`.
pub fn casimir_power_sum(req: &CasimirRequest) -> Result<PowerSumPoly> {
    to_power_sum(&casimir_eigenvalue_patterned(req)?, req.n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{rat, Partition};

    fn ps(req: CasimirRequest) -> String {
        to_power_sum(&casimir_eigenvalue(&req).unwrap(), req.n)
            .unwrap()
            .to_string()
    }

    #[test]
    fn order_one_vanishes() {
        for n in 1..=5 {
            assert_eq!(ps(CasimirRequest::new(1, n)), "0");
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(ps(CasimirRequest::new(2, 3)), "p2 - 2");
        assert_eq!(ps(CasimirRequest::new(3, 3)), "p3 - 3/2 p2 + 3");
        assert_eq!(ps(CasimirRequest::new(2, 2)), "p2 - 1/2");
    }

    #[test]
    fn order_two_rank_two_monomials() {
        let req = CasimirRequest::new(2, 2);
        let p = casimir_eigenvalue(&req).unwrap();
        let q = to_power_sum(&p, 2).unwrap();
        assert_eq!(q.coeff(&Partition::empty()), rat(-1, 2));
    }

    #[test]
    fn patterned_matches_naive() {
        for (m, n) in [(2, 3), (3, 4)] {
            let req = CasimirRequest::new(m, n);
            assert_eq!(
                casimir_eigenvalue(&req).unwrap(),
                casimir_eigenvalue_patterned(&req).unwrap()
            );
        }
    }

    #[test]
    fn descending_pairs_skipped_wholesale() {
        for n in 2..=6u64 {
            let req = CasimirRequest::new(2, n as usize);
            let (_, stats) = casimir_eigenvalue_patterned_stats(&req).unwrap();
            assert_eq!(stats.zero_patterns, 1);
            assert_eq!(stats.skipped_tuples, n * (n - 1) / 2);
            assert_eq!(stats.skipped_tuples + stats.evaluated_tuples, n * n);
        }
    }

    #[test]
    fn pattern_counts_are_fubini_numbers() {
        let count = |m: usize| (1..=m).map(|l| patterns(m, l).len()).sum::<usize>();
        assert_eq!([count(1), count(2), count(3), count(4)], [1, 3, 13, 75]);
    }

    #[test]
    fn rejects_degenerate_requests() {
        assert!(casimir_eigenvalue(&CasimirRequest::new(0, 3)).is_err());
        assert!(casimir_eigenvalue(&CasimirRequest::new(2, 0)).is_err());
        assert!(!CasimirRequest::new(4, 3).in_stated_range());
    }

    #[test]
    fn tuple_indexing_is_lexicographic() {
        let all: Vec<Vec<usize>> = (0..9)
            .map(|i| tuple_at(i, 2, 3).entries().to_vec())
            .collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all[5], vec![2, 3]);
    }
}
