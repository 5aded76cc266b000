use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported order. Edge subsets are stored as `u32` bitmasks.
pub const MAX_ORDER: usize = 32;

/// Index tuple `(i_1, ..., i_m)` of an elementary differential operator,
/// together with the ambient rank `n`. Entries are 1-based matrix indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple {
    n: usize,
    entries: Vec<usize>,
}

impl IndexTuple {
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::invalid("index tuple must be non-empty"));
        }
        if entries.len() > MAX_ORDER {
            return Err(Error::invalid(format!(
                "order {} exceeds the supported maximum {MAX_ORDER}",
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::invalid(format!("index {bad} outside 1..={n}")));
        }
        Ok(IndexTuple { n, entries })
    }

    /// Uses the largest entry as the rank.
    pub fn minimal(entries: Vec<usize>) -> Result<Self> {
        let n = entries.iter().copied().max().unwrap_or(0);
        Self::new(entries, n)
    }

    /// Parses comma-separated decimal text such as `"1,9,2,5"`. With no rank
    /// given, the largest entry is used.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let entries = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad tuple entry {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        match n {
            Some(n) => Self::new(entries, n),
            None => Self::minimal(entries),
        }
    }

    pub fn m(&self) -> usize {
        self.entries.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Entry at 0-based position `j`, wrapping so that position `m` is `i_1`.
    pub fn at(&self, j: usize) -> usize {
        self.entries[j % self.entries.len()]
    }

    /// The closed tuple `(i_1, ..., i_m, i_1)`.
    pub fn closed(&self) -> Vec<usize> {
        let mut c = self.entries.clone();
        c.push(self.entries[0]);
        c
    }

    pub fn with_rank(&self, n: usize) -> Result<Self> {
        Self::new(self.entries.clone(), n)
    }
}

impl FromStr for IndexTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Relative ordering of a tuple's values. Positions and ranks are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelOrder {
    /// Number of distinct values.
    pub ell: usize,
    /// Rank of the value at each position.
    pub rho: Vec<usize>,
    /// First position holding each rank.
    pub sigma: Vec<usize>,
    /// Distinct values in increasing order (rank to value).
    pub values: Vec<usize>,
}

impl RelOrder {
    /// The compressed tuple `rho(1), ..., rho(m)` as a 1-based pattern.
    pub fn pattern(&self) -> Vec<usize> {
        self.rho.iter().map(|r| r + 1).collect()
    }
}

pub fn relative_order(t: &IndexTuple) -> RelOrder {
    let mut values = t.entries().to_vec();
    values.sort_unstable();
    values.dedup();
    let rho: Vec<usize> = t
        .entries()
        .iter()
        .map(|v| values.binary_search(v).expect("value is present"))
        .collect();
    let sigma = (0..values.len())
        .map(|r| rho.iter().position(|&x| x == r).expect("every rank occurs"))
        .collect();
    RelOrder {
        ell: values.len(),
        rho,
        sigma,
        values,
    }
}

/// Second minimum of a sub-list, or the marker for a singleton value set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SecondMin {
    Finite(usize),
    Infinite,
}

impl fmt::Display for SecondMin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SecondMin::Finite(v) => write!(f, "{v}"),
            SecondMin::Infinite => f.write_str("inf"),
        }
    }
}

/// First and second minimum of the value set of `values`.
pub fn min_pair(values: &[usize]) -> Result<(usize, SecondMin)> {
    let v1 = *values
        .iter()
        .min()
        .ok_or_else(|| Error::invalid("min_pair of an empty list"))?;
    let v2 = values
        .iter()
        .copied()
        .filter(|&v| v != v1)
        .min()
        .map_or(SecondMin::Infinite, SecondMin::Finite);
    Ok((v1, v2))
}
