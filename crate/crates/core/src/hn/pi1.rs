// SPDX-License-Identifier: Apache-2.0

//! The doubled surface `Σ = ∂(S × I)` at the level of `pi_1`.
//!
//! For a fiber `S` of genus `k'` the surface `Σ` has genus `2k'` with
//! generators `a_1, b_1, ..., a_{2k'}, b_{2k'}`. Handles `1..=k'` are the top
//! copy `S × {1}`; handle `j > k'` is the bottom copy of handle
//! `m = 2k' + 1 - j`, with `a_j` and `b_j` carrying `β_m` and `α_m`.
//!
//! `π_1(S × I)` is free on `x_1, ..., x_{2k'}` where `x_{2m-1}` and `x_{2m}`
//! are dual to `α_m` and `β_m`; the inclusion `Σ -> S × I` reads a curve's
//! system word.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{bail, Result};
use crate::mcg::homology::HomologyClass;
use crate::mcg::matrix::IntMatrix;
use crate::words::surface::parse_generator;
use crate::words::{CyclicWord, Letter};

/// Index `m` of the fiber handle carried by handle `i` of `Σ`, and whether
/// it sits in the bottom copy.
fn fiber_handle(fiber_genus: usize, i: usize) -> (usize, bool) {
    if i <= fiber_genus {
        (i, false)
    } else {
        (2 * fiber_genus + 1 - i, true)
    }
}

/// Image of a surface generator in the free group on `x_1..x_{2k'}`.
fn phi_generator(fiber_genus: usize, i: usize, is_b: bool) -> usize {
    let (m, bottom) = fiber_handle(fiber_genus, i);
    // top: a -> alpha, b -> beta; bottom swaps them
    let beta = is_b != bottom;
    2 * m - usize::from(!beta)
}

/// The system word `phi(w)` of a `pi_1` word, freely and cyclically reduced.
pub fn system_word(fiber_genus: usize, w: &CyclicWord) -> Result<CyclicWord> {
    let genus = 2 * fiber_genus;
    let mut out = Vec::with_capacity(w.len());
    for l in w.letters() {
        let Some((i, is_b)) = parse_generator(&l.name, genus) else {
            bail!(Parse, "`{}` is not a generator of the genus-{genus} surface group", l.name);
        };
        out.push(Letter::new(&format!("x{}", phi_generator(fiber_genus, i, is_b)), l.inverse));
    }
    Ok(CyclicWord::new(out).reduce())
}

/// The map `H_1(Σ) -> H_1(S × I)`.
pub fn projection_matrix(fiber_genus: usize) -> IntMatrix {
    let n = 2 * fiber_genus;
    let mut p = IntMatrix::zeros(n, 2 * n);
    for i in 1..=n {
        for is_b in [false, true] {
            let col = 2 * (i - 1) + usize::from(is_b);
            p[(phi_generator(fiber_genus, i, is_b) - 1, col)] = BigInt::from(1);
        }
    }
    p
}

/// Embeddings of `H_1(S)` into the top and bottom copies.
pub fn copy_embeddings(fiber_genus: usize) -> (IntMatrix, IntMatrix) {
    let n = 2 * fiber_genus;
    let mut top = IntMatrix::zeros(2 * n, n);
    let mut bottom = IntMatrix::zeros(2 * n, n);
    for m in 1..=fiber_genus {
        let j = 2 * fiber_genus + 1 - m;
        top[(2 * m - 2, 2 * m - 2)] = BigInt::from(1);
        top[(2 * m - 1, 2 * m - 1)] = BigInt::from(1);
        // alpha_m = [b_j], beta_m = [a_j]
        bottom[(2 * j - 1, 2 * m - 2)] = BigInt::from(1);
        bottom[(2 * j - 2, 2 * m - 1)] = BigInt::from(1);
    }
    (top, bottom)
}

/// Meridian classes `x_1, ..., x_{2k'}` spanning the kernel of the
/// projection, with their `pi_1` words.
pub fn meridians(fiber_genus: usize) -> Vec<(String, CyclicWord, HomologyClass)> {
    let genus = 2 * fiber_genus;
    let mut out = Vec::with_capacity(genus);
    for m in 1..=fiber_genus {
        let j = genus + 1 - m;
        let mut odd = HomologyClass::basis(genus, 2 * j - 2).into_coords();
        odd[2 * m - 1] -= 1;
        let mut even = HomologyClass::basis(genus, 2 * m - 2).into_coords();
        even[2 * j - 1] -= 1;
        out.push((
            format!("x{}", 2 * m - 1),
            CyclicWord::new(alloc::vec![Letter::pos(&format!("a{j}")), Letter::neg(&format!("b{m}"))]),
            HomologyClass::new(genus, odd).expect("rank"),
        ));
        out.push((
            format!("x{}", 2 * m),
            CyclicWord::new(alloc::vec![Letter::pos(&format!("a{m}")), Letter::neg(&format!("b{j}"))]),
            HomologyClass::new(genus, even).expect("rank"),
        ));
    }
    out
}

/// The orientation-reversing involution exchanging the two copies of `S`.
pub fn involution(fiber_genus: usize) -> IntMatrix {
    let genus = 2 * fiber_genus;
    let mut m = IntMatrix::zeros(2 * genus, 2 * genus);
    for i in 1..=genus {
        let j = genus + 1 - i;
        m[(2 * j - 1, 2 * i - 2)] = BigInt::from(1);
        m[(2 * j - 2, 2 * i - 1)] = BigInt::from(1);
    }
    m
}

/// A twist automorphism of the surface group along a generator curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorTwist {
    pub handle: usize,
    pub along_b: bool,
    pub exponent: i64,
}

impl GeneratorTwist {
    /// Recognizes curves whose `pi_1` word is a single generator.
    pub fn from_word(genus: usize, w: &CyclicWord, exponent: i64) -> Option<Self> {
        let [l] = w.letters() else {
            return None;
        };
        let (handle, along_b) = parse_generator(&l.name, genus)?;
        Some(GeneratorTwist {
            handle,
            along_b,
            exponent,
        })
    }

    /// `T_a: b -> b a` and `T_b: a -> a b^{-1}`, raised to the exponent.
    fn image(&self, l: &Letter, out: &mut Vec<Letter>) {
        let a = format!("a{}", self.handle);
        let b = format!("b{}", self.handle);
        let (moved, mover, tail_inverse) = if self.along_b {
            (&a, &b, self.exponent > 0)
        } else {
            (&b, &a, self.exponent < 0)
        };
        if l.name != *moved {
            out.push(l.clone());
            return;
        }
        let n = self.exponent.unsigned_abs() as usize;
        let tail = core::iter::repeat_n(Letter::new(mover, tail_inverse), n);
        if l.inverse {
            out.extend(tail.map(|t| t.inv()).collect::<Vec<_>>().into_iter().rev());
            out.push(l.clone());
        } else {
            out.push(l.clone());
            out.extend(tail);
        }
    }

    pub fn apply(&self, w: &CyclicWord) -> CyclicWord {
        let mut out = Vec::with_capacity(w.len());
        for l in w.letters() {
            self.image(l, &mut out);
        }
        CyclicWord::new(out).free_reduce()
    }
}

/// Applies `T_{c_1} ... T_{c_n}` to a word, the rightmost twist first.
pub fn apply_twists(twists: &[GeneratorTwist], w: &CyclicWord) -> CyclicWord {
    twists.iter().rev().fold(w.clone(), |acc, t| t.apply(&acc)).reduce()
}
