//! Criterion benchmarks for the isopoly solvers; see `benches/`.
