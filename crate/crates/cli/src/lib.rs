//! Command-line front end, file formats, and report emission for the
//! exact equivariant signature engine in `equisig-core`.
//!
//! This library crate backs the `equisig` binary and exposes the input
//! parsers, output structures, and command implementations so
//! integration tests can drive them directly.  See the crate root
//! README for the schemas and command reference.

pub mod commands;
pub mod error;
pub mod format;
pub mod render;
pub mod report;
