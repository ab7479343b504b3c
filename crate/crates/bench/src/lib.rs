//! Shared sizes for the pipeline benchmarks. The interesting throughput
//! questions are all about big-integer recurrences: how the defining,
//! convolution, and power-sum pipelines scale, and what the brute-force
//! composition oracle costs.

/// Table length used when comparing the three production pipelines.
pub const TABLE_LEN: usize = 100;

/// Order for the power-sum and continued-fraction expansions.
pub const SERIES_ORDER: usize = 60;

/// Composition-oracle index (2^(n-2) terms).
pub const COMPOSITION_N: usize = 16;
