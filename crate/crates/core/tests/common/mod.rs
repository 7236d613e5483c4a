// SPDX-License-Identifier: Apache-2.0

//! Independent oracles shared by the integration and acceptance tests.

#![allow(dead_code)]

use std::collections::HashSet;

/// Packs a word of at most 16 letters from `{±1, ..., ±8}` into a `u128`.
fn pack(w: &[i8]) -> u128 {
    let mut key = w.len() as u128;
    for &c in w {
        key = (key << 5) | ((c + 16) as u128);
    }
    key
}

fn free_reduce(w: &[i8]) -> Vec<i8> {
    let mut out: Vec<i8> = Vec::with_capacity(w.len());
    for &c in w {
        if out.last() == Some(&-c) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out
}

/// Set of freely reduced words that represent 1 in the genus-`k` surface
/// group, found by breadth-first insertion of relator conjugates (every
/// rotation of the relator and its inverse at every position) with free
/// cancellation, keeping words of length at most `max_len`.
pub struct TrivialWords {
    set: HashSet<u128>,
}

impl TrivialWords {
    pub fn build(k: usize, max_len: usize) -> Self {
        let mut r = Vec::new();
        for i in 1..=k as i8 {
            r.extend_from_slice(&[2 * i - 1, 2 * i, -(2 * i - 1), -(2 * i)]);
        }
        let r_inv: Vec<i8> = r.iter().rev().map(|c| -c).collect();
        let mut rels = Vec::new();
        for base in [&r, &r_inv] {
            for s in 0..base.len() {
                rels.push(base[s..].iter().chain(&base[..s]).copied().collect::<Vec<i8>>());
            }
        }
        let mut set = HashSet::new();
        set.insert(pack(&[]));
        let mut frontier: Vec<Vec<i8>> = vec![Vec::new()];
        while let Some(w) = frontier.pop() {
            for pos in 0..=w.len() {
                for rel in &rels {
                    let mut cand = Vec::with_capacity(w.len() + rel.len());
                    cand.extend_from_slice(&w[..pos]);
                    cand.extend_from_slice(rel);
                    cand.extend_from_slice(&w[pos..]);
                    let red = free_reduce(&cand);
                    if red.len() <= max_len && set.insert(pack(&red)) {
                        frontier.push(red);
                    }
                }
            }
        }
        TrivialWords { set }
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn contains(&self, w: &[i8]) -> bool {
        let w = free_reduce(w);
        w.len() <= 16 && self.set.contains(&pack(&w))
    }
}

/// Calls `f` on one representative of every nonempty cyclically reduced
/// cyclic word of length at most `max_len` over `{±1, ..., ±gens}`: the
/// representative is the least rotation.
pub fn for_each_cyclic_word(gens: i8, max_len: usize, mut f: impl FnMut(&[i8])) {
    let letters: Vec<i8> = (1..=gens).flat_map(|g| [g, -g]).collect();
    let mut w: Vec<i8> = Vec::with_capacity(max_len);
    fn rec(letters: &[i8], max_len: usize, w: &mut Vec<i8>, f: &mut dyn FnMut(&[i8])) {
        if !w.is_empty() && (w.len() == 1 || w[0] != -w[w.len() - 1]) && is_least_rotation(w) {
            f(w);
        }
        if w.len() == max_len {
            return;
        }
        for &c in letters {
            if w.last() == Some(&-c) {
                continue;
            }
            // the least rotation starts with its smallest letter
            if !w.is_empty() && c < w[0] {
                continue;
            }
            w.push(c);
            rec(letters, max_len, w, f);
            w.pop();
        }
    }
    rec(&letters, max_len, &mut w, &mut f);
}

fn is_least_rotation(w: &[i8]) -> bool {
    let n = w.len();
    (1..n).all(|s| {
        let rot = w[s..].iter().chain(&w[..s]);
        w.iter().cmp(rot) != std::cmp::Ordering::Greater
    })
}

/// Letters of a surface word as `a1 b1' ...`.
pub fn to_text(w: &[i8]) -> String {
    w.iter()
        .map(|&c| {
            let g = c.unsigned_abs();
            let name = if g % 2 == 1 { format!("a{}", g.div_ceil(2)) } else { format!("b{}", g / 2) };
            if c < 0 { format!("{name}'") } else { name }
        })
        .collect::<Vec<_>>()
        .join(" ")
}
