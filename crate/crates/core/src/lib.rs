//! Exact spectral certificates for the Erdős–Ko–Rado property of the
//! symmetric and alternating groups acting on `k`-subsets.
//!
//! The pipeline builds a weighted combination of derangement classes,
//! evaluates its eigenvalues from irreducible characters, and applies the
//! ratio bound. Everything on the certification path is exact.

pub mod brute;
pub mod certify;
pub mod characters;
pub mod cli;
pub mod error;
pub mod lp;
pub mod partitions;
pub mod rational;
pub mod schemes;
pub mod weights;

/// Version tag written into every JSON document.
pub const SCHEMA_VERSION: u32 = 1;
