// SPDX-License-Identifier: Apache-2.0

//! Cyclic words, surface-group words and handlebody disc tests.

pub mod curve;
pub mod handlebody;
pub mod surface;
pub mod word;

pub use curve::{abelianize_pi1, Alphabet, Atlas, Curve};
pub use handlebody::{
    busted_dichotomy, check_admissible, curve_is_essential, disc_bound_test, is_disc_busting, DiscBusting,
    Dichotomy,
};
pub use surface::{dehn_essential_test, relator_word, Essentiality};
pub use word::{CyclicWord, Letter};
