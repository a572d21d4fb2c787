//! Criterion benchmarks for `cubeflow`; see `benches/`.
