// SPDX-License-Identifier: Apache-2.0

//! Exact, allocation-only machinery for Dehn twists on closed surfaces.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is computed with
//! arbitrary-precision integers so equality of matrices, words and bounds is
//! decidable. The modules mirror the layers of the theory:
//!
//! * [`mcg`]: the symplectic representation of the mapping class group,
//!   twist algebra and the commutator-length obstruction.
//! * [`words`]: cyclic words over meridian systems and surface groups,
//!   Dehn's algorithm and the handlebody disc tests.
//! * [`hn`]: HN-models of fibered knot complements, crossing changes and the
//!   nugatory-crossing pipeline, plus a built-in scenario catalog.
//! * [`adjacency`]: genus bookkeeping for n-adjacent knots.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod adjacency;
mod error;
pub mod hn;
pub mod mcg;
pub mod words;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
