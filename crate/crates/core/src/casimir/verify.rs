use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::jetoracle::oracle_eigenvalue;
use crate::ratpoly::MPoly;
use crate::tuplegraph::{elementary_eigenvalue, IndexTuple, SignConvention};

use super::sum::{tuple_at, tuple_count};

/// Which tuples of `{1..n}^m` to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    Exhaustive,
    /// `count` distinct tuples drawn with a ChaCha8 stream seeded by `seed`.
    Random {
        count: usize,
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleRecord {
    pub tuple: IndexTuple,
    pub literal: MPoly,
    pub alternating: MPoly,
    pub oracle: MPoly,
}

impl TupleRecord {
    pub fn fast(&self, sign: SignConvention) -> &MPoly {
        match sign {
            SignConvention::Literal => &self.literal,
            SignConvention::Alternating => &self.alternating,
        }
    }

    pub fn matches(&self, sign: SignConvention) -> bool {
        self.fast(sign) == &self.oracle
    }

    /// All three values vanish.
    pub fn is_zero(&self) -> bool {
        self.oracle.is_zero() && self.literal.is_zero() && self.alternating.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub m: usize,
    pub n: usize,
    pub shifted: bool,
    /// Lexicographic tuple order.
    pub records: Vec<TupleRecord>,
}

impl VerifyReport {
    pub fn total(&self) -> usize {
        self.records.len()
    }

    pub fn zero(&self) -> usize {
        self.records.iter().filter(|r| r.is_zero()).count()
    }

    pub fn match_count(&self, sign: SignConvention) -> usize {
        self.records.iter().filter(|r| r.matches(sign)).count()
    }

    /// Tuples whose fast value under `sign` differs from the oracle.
    pub fn mismatches(&self, sign: SignConvention) -> Vec<&IndexTuple> {
        self.records
            .iter()
            .filter(|r| !r.matches(sign))
            .map(|r| &r.tuple)
            .collect()
    }

    /// Conventions agreeing with the oracle on every record.
    pub fn consistent_conventions(&self) -> Vec<SignConvention> {
        SignConvention::ALL
            .into_iter()
            .filter(|&s| self.records.iter().all(|r| r.matches(s)))
            .collect()
    }

    /// Whether some nonzero record separates the two conventions. For even
    /// `m` they coincide everywhere and both count as consistent.
    pub fn discriminating(&self) -> bool {
        self.records
            .iter()
            .any(|r| !r.is_zero() && r.literal != r.alternating)
    }

    pub fn in_stated_range(&self) -> bool {
        self.m <= self.n
    }
}

/// Compares the proper-cycle formula under both sign conventions with the
/// Iwasawa oracle on the selected tuples.
pub fn verify_tuples(
    m: usize,
    n: usize,
    selection: Selection,
    shifted: bool,
) -> Result<VerifyReport> {
    if m == 0 || n == 0 {
        return Err(Error::invalid("order and rank must both be at least 1"));
    }
    if m > crate::tuplegraph::MAX_ORDER {
        return Err(Error::invalid("order too large"));
    }
    let total = tuple_count(m, n)?;
    let indices: Vec<u64> = match selection {
        Selection::Exhaustive => (0..total).collect(),
        Selection::Random { count, seed } => {
            let len = usize::try_from(total)
                .map_err(|_| Error::invalid("too many tuples for random selection"))?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked: Vec<u64> = index::sample(&mut rng, len, count.min(len))
                .into_iter()
                .map(|i| i as u64)
                .collect();
            picked.sort_unstable();
            picked
        }
    };
    let records = indices
        .into_par_iter()
        .map(|i| {
            let tuple = tuple_at(i, m, n);
            let oracle = oracle_eigenvalue(&tuple, shifted)?;
            Ok(TupleRecord {
                literal: elementary_eigenvalue(&tuple, SignConvention::Literal, shifted),
                alternating: elementary_eigenvalue(&tuple, SignConvention::Alternating, shifted),
                oracle,
                tuple,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        m,
        n,
        shifted,
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(entries: &[usize]) -> TupleRecord {
        let t = IndexTuple::minimal(entries.to_vec()).unwrap();
        TupleRecord {
            literal: elementary_eigenvalue(&t, SignConvention::Literal, false),
            alternating: elementary_eigenvalue(&t, SignConvention::Alternating, false),
            oracle: oracle_eigenvalue(&t, false).unwrap(),
            tuple: t,
        }
    }

    #[test]
    fn loop_then_step_picks_alternating() {
        let r = single(&[1, 2, 2]);
        assert!(r.matches(SignConvention::Alternating));
        assert!(!r.matches(SignConvention::Literal));
        assert_eq!(r.literal, -&r.oracle);
    }

    #[test]
    fn even_order_example_matches_both() {
        let r = single(&[1, 9, 2, 5, 5, 9, 6, 8, 4, 5]);
        assert!(r.matches(SignConvention::Alternating));
        assert!(r.matches(SignConvention::Literal));
    }

    #[test]
    fn descending_pair_is_zero() {
        let r = single(&[2, 1]);
        assert!(r.is_zero());
        assert!(r.matches(SignConvention::Literal) && r.matches(SignConvention::Alternating));
    }

    #[test]
    fn summary_tallies() {
        let rep = verify_tuples(3, 2, Selection::Exhaustive, true).unwrap();
        assert_eq!(rep.total(), 8);
        assert_eq!(
            rep.consistent_conventions(),
            vec![SignConvention::Alternating]
        );
        assert!(rep.discriminating());
        assert_eq!(
            rep.mismatches(SignConvention::Literal).len(),
            rep.total() - rep.match_count(SignConvention::Literal)
        );
    }

    #[test]
    fn random_selection_is_seeded_and_sorted() {
        let sel = Selection::Random { count: 10, seed: 3 };
        let a = verify_tuples(3, 4, sel, true).unwrap();
        let b = verify_tuples(3, 4, sel, true).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.total(), 10);
        assert!(a
            .records
            .windows(2)
            .all(|w| w[0].tuple.entries() < w[1].tuple.entries()));
        let all = verify_tuples(2, 2, Selection::Random { count: 99, seed: 0 }, true).unwrap();
        assert_eq!(all.total(), 4);
    }
}
