//! Partitions, k-modular diagrams and k-strips, the bijection between
//! partitions with every part repeated fewer than `2k` times and partitions
//! with initial k-repetitions, and exact truncated q-series for checking the
//! generating-function identities behind it.

pub mod bijection;
pub mod cli;
pub mod error;
pub mod identities;
pub mod modular;
pub mod partition;
pub mod selftest;
pub mod series;
pub mod strips;

pub use bijection::{forward, inverse, trace, BijectionTrace};
pub use error::{DomainViolation, PartitionError, TruncationMismatch};
pub use identities::{Identity, IdentityReport, PartitionClass};
pub use modular::{k_modular_diagram, KModularDiagram};
pub use partition::Partition;
pub use series::Series;
pub use strips::{decompose, insert_strips, remove_strip, vector_add, StripDecomposition};
