//! Report documents and argument resolution for the `baerlab` binary.

pub mod document;
pub mod input;
