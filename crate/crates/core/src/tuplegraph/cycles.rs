use super::tuple::{min_pair, IndexTuple, SecondMin};

/// A cycle of the closed tuple `I = (i_1, ..., i_m, i_1)` between two
/// consecutive occurrences of one value. Positions are 0-based in `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub start_pos: usize,
    pub end_pos: usize,
    pub base: usize,
    pub v1: usize,
    pub v2: SecondMin,
    pub proper: bool,
}

impl Cycle {
    pub fn values<'a>(&self, closed: &'a [usize]) -> &'a [usize] {
        &closed[self.start_pos..=self.end_pos]
    }
}

/// A proper cycle: every interior value exceeds the base, so `v1 == base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperCycle {
    pub start_pos: usize,
    pub end_pos: usize,
    pub base: usize,
    pub v1: usize,
    pub v2: SecondMin,
}

/// Every cycle spanned by consecutive occurrences of a value in `I`, proper
/// or not, ordered by start position.
///
/// A proper cycle cannot contain its base in the interior, so these are the
/// only candidates for proper cycles.
pub fn enumerate_cycles(t: &IndexTuple) -> Vec<Cycle> {
    let closed = t.closed();
    let mut out = Vec::new();
    for s in 0..closed.len() - 1 {
        let base = closed[s];
        let Some(off) = closed[s + 1..].iter().position(|&v| v == base) else {
            continue;
        };
        let e = s + 1 + off;
        let span = &closed[s..=e];
        let (v1, v2) = min_pair(span).expect("span is non-empty");
        let proper = span[1..span.len() - 1].iter().all(|&v| v > base);
        out.push(Cycle {
            start_pos: s,
            end_pos: e,
            base,
            v1,
            v2,
            proper,
        });
    }
    out
}

pub fn enumerate_proper_cycles(t: &IndexTuple) -> Vec<ProperCycle> {
    enumerate_cycles(t)
        .into_iter()
        .filter(|c| c.proper)
        .map(|c| ProperCycle {
            start_pos: c.start_pos,
            end_pos: c.end_pos,
            base: c.base,
            v1: c.v1,
            v2: c.v2,
        })
        .collect()
}
