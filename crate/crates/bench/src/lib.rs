//! Benchmark-only crate; see `benches/pipeline.rs`.
//!
//! Shared inputs for the benchmarks live here so the bench target stays
//! focused on measurement.

use calabi::{extension, MetricSpec, Result};

/// The heavier catalog inputs the benchmarks exercise.
pub fn bench_specs() -> Vec<(&'static str, MetricSpec, u32)> {
    vec![
        ("lee2_n1_d4", MetricSpec::LeeII { n: 1 }, 4),
        ("lee3_n1_d4", MetricSpec::LeeIII { n: 1 }, 4),
        ("flat_d2_d6", MetricSpec::Flat { dim: 2 }, 6),
    ]
}

/// Convenience used by the benches to precompute extensions outside the
/// measured closures.
pub fn prebuilt_extension(spec: &MetricSpec, degree: u32) -> Result<calabi::BiSeries> {
    extension(spec, degree)
}
