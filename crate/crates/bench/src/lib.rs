//! Criterion benchmarks for the `fermiwire` kernels; run with `cargo bench -p fermiwire-bench`.
