//! Skew partitions, clique-cutset decomposition and optimal colouring of
//! Berge graphs of bounded clique number.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: dense bit-row graphs and structural primitives.
//! * [`cutsets`]: star cutsets, T-cutsets and clique-cutset decomposition trees.
//! * [`kennedy_reed`]: the candidate cutset list built from auxiliary graphs.
//! * [`skew`]: tight, unbalanced-tight, loose and balanced skew partitions.
//! * [`colouring`]: decomposition trees along balanced skew partitions and
//!   the colour-merging recursion.
//! * [`oracles`]: brute-force ground truth used by the test suites.
//! * [`io`] and [`generate`]: graph file formats and fixture families.

pub mod colouring;
pub mod cutsets;
pub mod generate;
pub mod graph;
pub mod io;
pub mod kennedy_reed;
pub mod oracles;
pub mod skew;

pub use colouring::{colour_berge, verify_colouring, Colouring, ExactLeafColourer, LeafColourer, SpTree};
pub use cutsets::CcTree;
pub use graph::{Graph, GraphError, Path, Square, VertexSet, MAX_VERTICES};
pub use kennedy_reed::CandidateCutsetList;
pub use skew::{Balance, SkewPartition, Tightness};
