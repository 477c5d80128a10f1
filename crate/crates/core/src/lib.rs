#![no_std]
//! Compiler from periodic Pauli-rotation sequences to graph-state resources
//! for measurement-based quantum computation.

extern crate alloc;

pub mod anneal;
pub mod bits;
pub mod clifford;
pub mod error;
pub mod graph;
pub mod ladder;
pub mod oracle;
pub mod pattern;
pub mod pauli;
pub mod resource;
pub mod tableau;

pub use error::{Error, Result};
