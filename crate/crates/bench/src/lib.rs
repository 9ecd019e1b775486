//! Criterion benchmarks for `staircase-core`; see `benches/polynomials.rs`.
//! Run with `cargo bench -p staircase-bench`.
