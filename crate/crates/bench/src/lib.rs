//! Benchmark harness for the collection engine.
