//! The tuple as an edge-ordered directed multigraph: edge `j` runs from
//! `i_j` to `i_{j+1}`, and paths use edges in increasing order.

use super::tuple::IndexTuple;

/// Subset of edge positions, bit `j` standing for the 0-based edge `j`.
pub type EdgeSet = u32;

/// Loop edges carry weight `-t/(1+t)`, all others `-t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Loop,
    Step,
}

pub fn edge_kinds(t: &IndexTuple) -> Vec<EdgeKind> {
    (0..t.m())
        .map(|j| {
            if t.at(j) == t.at(j + 1) {
                EdgeKind::Loop
            } else {
                EdgeKind::Step
            }
        })
        .collect()
}

/// All edge sets forming an increasing path from vertex `v` to vertex `w`,
/// in ascending bitmask order. The empty set is a path exactly when `v == w`.
pub fn enumerate_paths(t: &IndexTuple, v: usize, w: usize) -> Vec<EdgeSet> {
    fn walk(
        t: &IndexTuple,
        at: usize,
        from_edge: usize,
        set: EdgeSet,
        w: usize,
        out: &mut Vec<EdgeSet>,
    ) {
        if at == w {
            out.push(set);
        }
        for j in from_edge..t.m() {
            if t.at(j) == at {
                walk(t, t.at(j + 1), j + 1, set | (1 << j), w, out);
            }
        }
    }
    let mut out = Vec::new();
    walk(t, v, 0, 0, w, &mut out);
    out.sort_unstable();
    out
}

/// In-degree minus out-degree of `v` within the edge set.
pub fn degree_balance(t: &IndexTuple, set: EdgeSet, v: usize) -> i64 {
    (0..t.m())
        .filter(|j| set & (1 << j) != 0)
        .map(|j| i64::from(t.at(j + 1) == v) - i64::from(t.at(j) == v))
        .sum()
}

/// Degree condition every path from `v` to `w` satisfies; a cheap filter
/// before the chain check.
pub fn balance_admits_path(t: &IndexTuple, set: EdgeSet, v: usize, w: usize) -> bool {
    let mut vertices: Vec<usize> = t.entries().to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    vertices.iter().all(|&u| {
        let want = if v == w {
            0
        } else if u == v {
            -1
        } else if u == w {
            1
        } else {
            0
        };
        degree_balance(t, set, u) == want
    })
}
