//! Criterion benchmarks for `cubic3-core`. Run with `cargo bench -p cubic3-bench`.
