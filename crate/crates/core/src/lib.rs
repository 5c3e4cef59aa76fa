//! Detection of 2-joins, non-path 2-joins and minimally-sided 2-joins in
//! undirected graphs.
//!
//! A 2-join is a vertex partition `(X1, X2)` with both sides of size at
//! least three whose only crossing edges form two disjoint complete
//! bipartite graphs `A1 x A2` and `B1 x B2`. Detection sweeps a universal
//! set of O(n²) proper 4-tuples derived from a BFS tree and runs a
//! linear-time forcing procedure on each, for O(n²m) overall.

pub mod detect;
pub mod error;
pub mod forcing;
pub mod gen;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod split;
pub mod universal;

pub use detect::{
    bad_paths, decompose_blocks, detect_2join, detect_nonpath_2join, has_star_cutset, is_nonpath,
    is_path_side, minimally_sided_2join, minimally_sided_nonpath_2join, minimally_sided_nonpath_general,
    BadPath, BadPathAnalysis, Block, DetectOptions, Report, StarCutset,
};
pub use error::{Error, Result};
pub use forcing::{find_compatible, force_side};
pub use graph::{BfsTree, Graph};
pub use io::{parse_graph, Format};
pub use split::{classify_partition, is_proper, FourTuple, Side, TwoJoinSplit};
pub use universal::universal_set;
