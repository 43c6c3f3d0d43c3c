//! Library surface of the CLI: input schema, pipelines, and report types.
//! The binary in `main.rs` is a thin argument-parsing wrapper around these.

pub mod input;
pub mod pipeline;
pub mod report;
