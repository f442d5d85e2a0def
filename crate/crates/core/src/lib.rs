//! Quotient-graph and block-design invariants of imprimitive symmetric graphs.
//!
//! The crate takes a finite simple graph, a permutation group acting on it and
//! an invariant vertex partition, computes the parameter system of the
//! quotient (block size, trace size, replication, quotient valency,
//! multiplicity, pairwise trace intersection), builds the associated incidence
//! structures and their complements/duals, and dispatches the triple against
//! the admissible parameter rows for quotients with 2-arc transitive group
//! action when `v - k` is an odd prime.
//!
//! Also included: self-paired 3-arc orbit enumeration, the 3-arc graph and
//! 2-path graph constructions, the arc-pair graph, a matched cycle chain
//! family, and a GF(2^n) affine orbit design.

pub mod catalog;
pub mod classifier;
pub mod constructions;
pub mod designs;
pub mod graphs;
pub mod json;
pub mod permgroup;
pub mod quotient;

pub use classifier::{ClassificationReport, Mode};
pub use designs::IncidenceStructure;
pub use graphs::Graph;
pub use permgroup::{GeneratedGroup, Permutation, DEFAULT_BOUND};
pub use quotient::{Parameters, SymmetricTriple};
