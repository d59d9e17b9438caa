//! Height-ordered search for quartic triples, almost quadruples and
//! quadruples.
//!
//! Pipeline: enumerate positive reduced `a` by height, generate partners `b`
//! with `ab + 1` a fourth power, extend each pair by `x` with `ax + 1` a
//! fourth power and `bx + 1` a square, classify the resulting sets, and for
//! each almost quadruple look for points on its genus one curve that complete
//! a true quadruple.
//!
//! The index window over `a` is split into contiguous partitions. Each
//! partition is processed sequentially and independently; the merge orders by
//! partition then in-partition sequence and deduplicates by the sorted
//! element list, so the result does not depend on the partition count.

mod classify;
mod enumerate;
mod extension;
mod genus1;
mod pairs;
mod partition;
mod runner;

pub use classify::{classify_finding, Finding, FindingClass, PairEvidence, Provenance};
pub use enumerate::{enumerate_rationals, HeightTable, RationalsByHeight};
pub use extension::{extension_search, fourth_root_candidates, Extension};
pub use genus1::{genus_one_search, signed_candidates, CurvePoint};
pub use pairs::{generate_pairs, PairCandidate};
pub use partition::{partition_range, partition_window};
pub use runner::{
    merge_partitions, run_partition, run_search, FindingRecord, PartitionOutput, SearchConfig,
    SearchOutcome, SearchStats,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("fewer than three usable elements, or no classification applies")]
    NotAFinding,
    #[error("frame violates (r^4-1)(w^4-1) = (t^4-1)(u^4-1)")]
    IncompatibleQuadrupleFrame,
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("checkpoint {path} does not match this configuration")]
    CheckpointMismatch { path: String },
    #[error("corrupt output file {path}: {reason}")]
    CorruptOutput { path: String, reason: String },
    #[error("I/O failure on {path}: {source}")]
    IoFailure {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl PartialEq for SearchError {
    fn eq(&self, other: &Self) -> bool {
        self.to_string() == other.to_string()
    }
}
