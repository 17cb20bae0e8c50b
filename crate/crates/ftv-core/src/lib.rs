//! Exact lattice, polytope and fan computations for framed toric varieties.
//!
//! Everything here is exact: integers are `BigInt`, fractions are
//! `BigRational`. The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod dd;
pub mod error;
pub mod fan;
pub mod ftv;
pub mod lattice;
pub mod lp;
pub mod matrix;
pub mod polytope;
pub mod web;

pub use error::{Error, Result};
pub use matrix::{IntMatrix, Rat};
