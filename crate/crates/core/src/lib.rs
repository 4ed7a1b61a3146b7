//! Terwilliger algebra structure of bipartite distance-regular graphs.
//!
//! The crate certifies distance-regularity, builds the subconstituent algebra
//! objects at a base vertex, decomposes the endpoint-0, -1 and -2 parts of the
//! standard module into irreducible modules, and evaluates the two sides of
//! the two-class characterization:
//!
//! * condition (i): `Δ₂ > 0` together with an affine relation
//!   `α_i + β_i·|Γ(x)∩Γ(y)∩Γ_{i−1}(z)| = |Γ_{i−1}(x)∩Γ_{i−1}(y)∩Γ(z)|`
//!   for every triple with `∂(x,y) = 2`, `∂(x,z) = ∂(y,z) = i`;
//! * condition (ii): for every base vertex there are exactly two isomorphism
//!   classes of irreducible modules with endpoint 2, all of them thin.
//!
//! Everything combinatorial is exact integer or rational arithmetic; only the
//! eigenproblems use floating point. The crate is `no_std` and needs `alloc`.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod characterization;
pub mod distance;
pub mod drg;
pub mod format;
pub mod graph;
pub mod linalg;
pub mod oracle;
pub mod rational;
pub mod terwilliger;

pub use analysis::{analyze, AnalysisConfig, CheckLevel, GraphAnalysis};
pub use distance::{bfs_distances, DistanceTable};
pub use drg::{
    admissibility_gate, certify_drg, distance_partition, DistancePartition, GateVerdict, IntersectionArray, Scheme,
};
pub use graph::{Graph, GraphError};
pub use rational::Rational;
