//! Combinatorics of the index tuple: relative ordering, cycles of the closed
//! tuple, the proper-cycle eigenvalue formula and the path view of the tuple's
//! edge-ordered multigraph.

mod cycles;
mod eigen;
mod paths;
mod tuple;

pub use cycles::{enumerate_cycles, enumerate_proper_cycles, Cycle, ProperCycle};
pub use eigen::{
    cycle_product, elementary_eigenvalue, langlands_var, CycleProduct, LinearFactor, SignConvention,
};
pub use paths::{
    balance_admits_path, degree_balance, edge_kinds, enumerate_paths, EdgeKind, EdgeSet,
};
pub use tuple::{min_pair, relative_order, IndexTuple, RelOrder, SecondMin, MAX_ORDER};
