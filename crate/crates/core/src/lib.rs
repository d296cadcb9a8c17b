//! Finite category theory by brute force.
//!
//! This crate works with finite categories given by explicit composition
//! tables, finitely presented categories, and simplicial sets truncated at a
//! small dimension. It builds nerves, recovers categories from simplicial sets
//! satisfying the spine extension property, computes homotopy categories from
//! 2-skeletal data, and uses the nerve/homotopy-category reflection to compute
//! limits, colimits, coequalizers and localizations of finite categories.
//!
//! Everything is exhaustive: every universal property claimed by a
//! construction can be checked by enumerating functors or simplicial maps.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
mod unionfind;

pub mod adjoints;
pub mod elements;
pub mod fincat;
pub mod localize;
pub mod nerve;
pub mod presentation;
pub mod realize;
pub mod samples;
pub mod sset;
pub mod words;

pub use error::{Error, Result};
pub use fincat::{Budget, FinCat, Functor, Morphism};
pub use presentation::{Edge, Path, PresCat, Quiver};
pub use sset::{SMap, TruncSSet};
pub use unionfind::UnionFind;
pub use words::{Materialization, Quotient, WordBudget, WordTable, WordVerdict};

/// Default truncation dimension for simplicial sets.
pub const DEFAULT_DIM: usize = 3;

/// Largest supported truncation dimension.
pub const MAX_DIM: usize = 6;
