//! Criterion benchmarks for `fekete-core`; the benchmark targets live in `benches/`.
