//! Exact finite rings and finite right modules.

// Structure constants are indexed tensors; index loops read closer to the math.
#![allow(clippy::needless_range_loop)]

pub mod ads;
pub mod arith;
pub mod bitset;
pub mod catalog;
pub mod census;
pub mod decomposition;
pub mod error;
pub mod format;
pub mod hulls;
pub mod injectivity;
pub mod iso;
pub mod module;
pub mod morphism;
pub mod par;
pub mod ring;
pub mod rings;
pub mod snf;
pub mod structure;
pub mod submodule;
pub mod verify;

pub use error::{Error, Guards, Result};
