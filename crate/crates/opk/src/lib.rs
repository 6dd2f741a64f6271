//! Kernelization for packing problems that tolerate bounded sharing.
//!
//! Two flavours of sharing are supported, each for set systems and for
//! pattern packings in graphs:
//!
//! * **t-Overlap** — chosen sets (subgraphs) pairwise share at most `t`
//!   elements (vertices or edges);
//! * **t-Membership** — every element lies in at most `t` chosen sets.
//!
//! For each problem the crate offers an exhaustive [`oracle`], a polynomial
//! kernel whose output size depends on `k` only ([`overlap`], [`membership`],
//! [`pipeline`]), and the supporting machinery: pattern enumeration
//! ([`subgraph`]), matchings ([`matching`]), a polynomial solver for
//! single-edge packings with membership ([`p2`]) and generators for hard
//! instances ([`gadgets`], [`random`]). [`check`] ties these together into a
//! randomized soundness harness.
//!
//! The runnable programs in `examples/` walk through each capability:
//!
//! ```text
//! cargo run -p opk --example set_overlap_kernel
//! cargo run -p opk --example membership_kernel
//! cargo run -p opk --example graph_packing
//! cargo run -p opk --example p2_membership
//! cargo run -p opk --example hardness_gadgets
//! cargo run -p opk --example property_check
//! ```

pub mod check;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod gadgets;
pub mod io;
pub mod matching;
pub mod membership;
pub mod model;
pub mod oracle;
pub mod overlap;
pub mod p2;
pub mod pipeline;
pub mod random;
pub mod subgraph;

pub use error::{Error, Result};
pub use model::{
    check_graph_solution, check_set_membership, check_set_overlap, Elem, ElemSet, Graph, GraphFamily,
    GraphInstance, KernelStats, Mode, PackingSolution, SetInstance, Subgraph, Variant,
};
pub use oracle::Budget;
pub use overlap::{KernelOutcome, ReductionTrace};
pub use pipeline::{kernelize_graph, kernelize_set, GraphKernel};
