// SPDX-License-Identifier: Apache-2.0

//! The word problem in closed surface groups
//! `<a_1, b_1, ..., a_k, b_k | [a_1, b_1] ... [a_k, b_k]>` via Dehn's
//! algorithm.
//!
//! Internally letters are encoded as small signed integers: `a_i` is
//! `2i - 1`, `b_i` is `2i`, inverses are negated.

use alloc::format;
use alloc::vec::Vec;

use super::word::{CyclicWord, Letter};
use crate::error::{bail, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Essentiality {
    Trivial,
    Essential,
}

/// Parses a surface generator name `a<i>` or `b<i>` with `1 <= i <= genus`.
pub fn parse_generator(name: &str, genus: usize) -> Option<(usize, bool)> {
    let (is_b, idx) = match name.as_bytes().first()? {
        b'a' => (false, &name[1..]),
        b'b' => (true, &name[1..]),
        _ => return None,
    };
    if idx.starts_with('0') {
        return None;
    }
    let i: usize = idx.parse().ok()?;
    (1..=genus).contains(&i).then_some((i, is_b))
}

pub fn encode(genus: usize, w: &CyclicWord) -> Result<Vec<i8>> {
    if genus > 60 {
        bail!(Unsupported, "genus {genus} exceeds the encoded range");
    }
    w.letters()
        .iter()
        .map(|l| {
            let Some((i, is_b)) = parse_generator(&l.name, genus) else {
                bail!(Parse, "`{}` is not a generator of the genus-{genus} surface group", l.name);
            };
            let code = (2 * i - usize::from(!is_b)) as i8;
            Ok(if l.inverse { -code } else { code })
        })
        .collect()
}

pub fn decode(codes: &[i8]) -> CyclicWord {
    CyclicWord::new(
        codes
            .iter()
            .map(|&c| {
                let g = c.unsigned_abs() as usize;
                let name = if g % 2 == 1 {
                    format!("a{}", g.div_ceil(2))
                } else {
                    format!("b{}", g / 2)
                };
                Letter::new(&name, c < 0)
            })
            .collect(),
    )
}

/// `[a_1, b_1] ... [a_k, b_k]`, encoded.
pub fn relator(genus: usize) -> Vec<i8> {
    let mut r = Vec::with_capacity(4 * genus);
    for i in 1..=genus as i8 {
        let (a, b) = (2 * i - 1, 2 * i);
        r.extend_from_slice(&[a, b, -a, -b]);
    }
    r
}

/// The relator as a word, e.g. `a1 b1 a1' b1' a2 b2 a2' b2'`.
pub fn relator_word(genus: usize) -> CyclicWord {
    decode(&relator(genus))
}

/// Free and cyclic reduction of an encoded word.
pub fn cyclic_reduce_codes(w: &[i8]) -> Vec<i8> {
    let mut out: Vec<i8> = Vec::with_capacity(w.len());
    for &c in w {
        if out.last() == Some(&-c) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    let mut lo = 0;
    let mut hi = out.len();
    while hi - lo >= 2 && out[lo] == -out[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    out.truncate(hi);
    out.drain(..lo);
    out
}

/// Every cyclic permutation of the relator and of its inverse.
fn relator_rotations(genus: usize) -> Vec<Vec<i8>> {
    let r = relator(genus);
    let r_inv: Vec<i8> = r.iter().rev().map(|&c| -c).collect();
    let n = r.len();
    let mut out = Vec::with_capacity(2 * n);
    for base in [&r, &r_inv] {
        for s in 0..n {
            out.push(base[s..].iter().chain(&base[..s]).copied().collect());
        }
    }
    out
}

/// Runs Dehn's algorithm on a cyclic word and returns the Dehn-reduced
/// cyclic word, empty exactly when the input is trivial.
pub fn dehn_reduce_codes(genus: usize, w: &[i8]) -> Vec<i8> {
    let rots = relator_rotations(genus);
    let half = 2 * genus;
    let full = 4 * genus;
    let mut w = cyclic_reduce_codes(w);
    'outer: loop {
        let n = w.len();
        for s in 0..n {
            for r in &rots {
                let limit = n.min(full);
                let mut p = 0;
                while p < limit && w[(s + p) % n] == r[p] {
                    p += 1;
                }
                if p > half {
                    let mut next: Vec<i8> = (p..n).map(|i| w[(s + i) % n]).collect();
                    next.extend(r[p..].iter().rev().map(|&c| -c));
                    w = cyclic_reduce_codes(&next);
                    continue 'outer;
                }
            }
        }
        return w;
    }
}

/// Decides whether a cyclic word is trivial in the genus-`k` surface group.
pub fn dehn_essential_test(k: usize, w: &CyclicWord) -> Result<Essentiality> {
    if k < 2 {
        bail!(Unsupported, "Dehn's algorithm needs genus >= 2, got {k}");
    }
    let codes = encode(k, w)?;
    Ok(if dehn_reduce_codes(k, &codes).is_empty() {
        Essentiality::Trivial
    } else {
        Essentiality::Essential
    })
}
