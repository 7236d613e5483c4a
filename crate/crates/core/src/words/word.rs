// SPDX-License-Identifier: Apache-2.0

//! Cyclic words over a named, signed alphabet.
//!
//! The text form is a whitespace-separated list of generator names, with a
//! trailing apostrophe marking an inverse: `x1 x2' x1`.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{bail, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub name: String,
    pub inverse: bool,
}

impl Letter {
    pub fn new(name: &str, inverse: bool) -> Self {
        Letter {
            name: name.into(),
            inverse,
        }
    }

    pub fn pos(name: &str) -> Self {
        Letter::new(name, false)
    }

    pub fn neg(name: &str) -> Self {
        Letter::new(name, true)
    }

    pub fn inv(&self) -> Self {
        Letter {
            name: self.name.clone(),
            inverse: !self.inverse,
        }
    }

    pub fn sign(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn cancels(&self, other: &Letter) -> bool {
        self.name == other.name && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if self.inverse {
            f.write_str("'")?;
        }
        Ok(())
    }
}

/// A word read around a closed curve. Equality is literal; compare
/// [`CyclicWord::reduce`]d words to compare conjugacy classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl CyclicWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        CyclicWord { letters }
    }

    pub fn empty() -> Self {
        CyclicWord::default()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (name, inverse) = match tok.strip_suffix('\'') {
                Some(n) => (n, true),
                None => (tok, false),
            };
            if name.is_empty() || name.contains('\'') {
                bail!(Parse, "bad letter `{tok}`");
            }
            letters.push(Letter::new(name, inverse));
        }
        Ok(CyclicWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        CyclicWord {
            letters: self.letters.iter().rev().map(Letter::inv).collect(),
        }
    }

    pub fn concat(&self, other: &CyclicWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        CyclicWord { letters }
    }

    /// Signed number of occurrences of `name`.
    pub fn exponent_sum(&self, name: &str) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.name == name)
            .map(Letter::sign)
            .sum()
    }

    /// Free reduction as a linear word (no wrap-around).
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            if out.last().is_some_and(|t| t.cancels(l)) {
                out.pop();
            } else {
                out.push(l.clone());
            }
        }
        CyclicWord { letters: out }
    }

    /// Free and cyclic reduction followed by the least rotation.
    pub fn reduce(&self) -> Self {
        let mut w = self.free_reduce().letters;
        let mut lo = 0;
        let mut hi = w.len();
        while hi - lo >= 2 && w[lo].cancels(&w[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        w.truncate(hi);
        w.drain(..lo);
        CyclicWord { letters: w }.canonical_rotation()
    }

    pub fn is_reduced(&self) -> bool {
        let n = self.letters.len();
        (0..n).all(|i| n < 2 || !self.letters[i].cancels(&self.letters[(i + 1) % n]))
    }

    /// The lexicographically least rotation.
    pub fn canonical_rotation(&self) -> Self {
        let start = least_rotation(&self.letters);
        let mut letters = Vec::with_capacity(self.letters.len());
        letters.extend_from_slice(&self.letters[start..]);
        letters.extend_from_slice(&self.letters[..start]);
        CyclicWord { letters }
    }

    /// Whether the words agree as reduced cyclic words.
    pub fn cyclically_equal(&self, other: &CyclicWord) -> bool {
        self.reduce() == other.reduce()
    }
}

/// Booth's least-rotation algorithm.
pub(crate) fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &s[i % n];
    let mut f: Vec<isize> = alloc::vec![-1; 2 * n];
    let mut k: usize = 0;
    for j in 1..2 * n {
        let mut i = f[j - k - 1];
        while i != -1 && at(j) != at(k + i as usize + 1) {
            if at(j) < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && at(j) != at(k) {
            if at(j) < at(k) {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    k % n
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl core::str::FromStr for CyclicWord {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        CyclicWord::parse(s)
    }
}

impl PartialOrd for CyclicWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CyclicWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters.cmp(&other.letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn w(s: &str) -> CyclicWord {
        CyclicWord::parse(s).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert!(w("x1 x1'").reduce().is_empty());
        assert_eq!(w("x2' x1 x2").reduce(), w("x1"));
        assert_eq!(w("x1 x2 x2' x1").reduce(), w("x1 x1"));
        assert_eq!(w("x2 x1").reduce(), w("x1 x2"));
    }

    #[test]
    fn parse_print_round_trip() {
        for s in ["", "x1", "x1 x2' x1", "a1 b1 a1' b1'"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert!(CyclicWord::parse("x1 ' x2").is_err());
        assert!(CyclicWord::parse("x1''").is_err());
    }

    fn naive_least_rotation(s: &[u8]) -> usize {
        (0..s.len().max(1))
            .min_by(|&a, &b| {
                let ra = s[a..].iter().chain(&s[..a]);
                let rb = s[b..].iter().chain(&s[..b]);
                ra.cmp(rb).then(a.cmp(&b))
            })
            .unwrap_or(0)
    }

    proptest! {
        #[test]
        fn booth_matches_naive(s in proptest::collection::vec(0u8..3, 0..24)) {
            let k = least_rotation(&s);
            let m = naive_least_rotation(&s);
            let rk: Vec<_> = s[k..].iter().chain(&s[..k]).collect();
            let rm: Vec<_> = s[m..].iter().chain(&s[..m]).collect();
            prop_assert_eq!(rk, rm);
        }

        #[test]
        fn reduce_is_idempotent_and_shortening(
            raw in proptest::collection::vec((0u8..4, any::<bool>()), 0..40)
        ) {
            let word = CyclicWord::new(
                raw.iter().map(|&(g, inv)| Letter::new(&alloc::format!("x{g}"), inv)).collect(),
            );
            let r = word.reduce();
            prop_assert!(r.len() <= word.len());
            prop_assert!(r.is_reduced());
            prop_assert_eq!(r.reduce(), r.clone());
            prop_assert_eq!(CyclicWord::parse(&r.to_string()).unwrap(), r);
        }
    }
}
