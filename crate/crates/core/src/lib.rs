//! Exact combinatorial machinery for finding small dense subgraphs of a graph:
//! structure counters paired with supersaturation bounds, recursive goodness
//! classification over auxiliary graphs, randomized vertex splitting with
//! validated disjoint families, layered BFS extraction with verifiable
//! certificates, and two-step degree-class regularization.
//!
//! Counts are unbounded integers and thresholds are exact rationals; nothing
//! in the inequality checks rounds.

pub mod bits;
pub mod counting;
pub mod error;
pub mod exponent;
pub mod extraction;
pub mod generate;
pub mod goodness;
pub mod graph;
pub mod io;
pub mod regularization;
pub mod rng;
pub mod splitting;

pub use counting::CountReport;
pub use error::{Error, Result};
pub use extraction::{Certificate, ExtractionOutcome};
pub use goodness::TStructure;
pub use graph::{DegreeStats, Graph, Induced, Radius, TMatching, TSet};
pub use splitting::Partition;
