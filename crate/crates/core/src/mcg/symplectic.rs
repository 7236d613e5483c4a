// SPDX-License-Identifier: Apache-2.0

//! Integer symplectic matrices, transvections and twist words.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::homology::HomologyClass;
use super::matrix::IntMatrix;
use crate::error::{bail, Error, Result};

/// The standard form `J`, block diagonal with blocks `[[0, 1], [-1, 0]]`.
pub fn standard_form(genus: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(2 * genus, 2 * genus);
    for i in 0..genus {
        j[(2 * i, 2 * i + 1)] = BigInt::from(1);
        j[(2 * i + 1, 2 * i)] = BigInt::from(-1);
    }
    j
}

fn form_image(m: &IntMatrix) -> Option<IntMatrix> {
    if !m.is_square() || !m.rows().is_multiple_of(2) {
        return None;
    }
    let j = standard_form(m.rows() / 2);
    Some(&(&m.transpose() * &j) * m)
}

/// `M^T J M = J`.
pub fn is_symplectic(m: &IntMatrix) -> bool {
    form_image(m).is_some_and(|f| f == standard_form(m.rows() / 2))
}

/// `M^T J M = -J`.
pub fn is_anti_symplectic(m: &IntMatrix) -> bool {
    form_image(m).is_some_and(|f| f == standard_form(m.rows() / 2).neg())
}

/// Inverse of a symplectic or anti-symplectic matrix without elimination:
/// `M^{-1} = ∓ J M^T J`.
pub(crate) fn form_inverse(m: &IntMatrix, anti: bool) -> IntMatrix {
    let j = standard_form(m.rows() / 2);
    let p = &(&j * &m.transpose()) * &j;
    if anti {
        p
    } else {
        p.neg()
    }
}

/// The row vector `a^T J`, so that `<a, v> = (a^T J) v`.
fn covector(a: &HomologyClass) -> Vec<BigInt> {
    let c = a.coords();
    let mut out = Vec::with_capacity(c.len());
    for pair in c.chunks_exact(2) {
        out.push(-&pair[1]);
        out.push(pair[0].clone());
    }
    out
}

/// One letter `T_c^e` of a twist word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwistLetter {
    pub curve: String,
    pub exponent: i64,
}

/// A product of powers of Dehn twists, read left to right as a matrix
/// product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TwistWord {
    genus: usize,
    letters: Vec<TwistLetter>,
}

impl TwistWord {
    pub fn empty(genus: usize) -> Self {
        TwistWord {
            genus,
            letters: Vec::new(),
        }
    }

    pub fn new(genus: usize, letters: Vec<TwistLetter>) -> Result<Self> {
        if let Some(l) = letters.iter().find(|l| l.exponent == 0) {
            bail!(Data, "twist letter `{}` has exponent 0", l.curve);
        }
        Ok(TwistWord { genus, letters })
    }

    pub fn single(genus: usize, curve: &str, exponent: i64) -> Result<Self> {
        Self::new(
            genus,
            alloc::vec![TwistLetter {
                curve: curve.to_string(),
                exponent,
            }],
        )
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn letters(&self) -> &[TwistLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends `T_curve^exponent`, merging with a trailing letter on the
    /// same curve. Exponent 0 is a no-op.
    pub fn push(&mut self, curve: &str, exponent: i64) {
        if exponent == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.curve == curve {
                last.exponent += exponent;
                if last.exponent == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push(TwistLetter {
            curve: curve.to_string(),
            exponent,
        });
    }

    pub fn concat(&self, other: &TwistWord) -> Result<TwistWord> {
        if self.genus != other.genus {
            return Err(Error::Dimension {
                expected: 2 * self.genus,
                found: 2 * other.genus,
            });
        }
        let mut out = self.clone();
        for l in &other.letters {
            out.push(&l.curve, l.exponent);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> TwistWord {
        TwistWord {
            genus: self.genus,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| TwistLetter {
                    curve: l.curve.clone(),
                    exponent: -l.exponent,
                })
                .collect(),
        }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.exponent).sum()
    }

    pub fn all_same_sign(&self) -> bool {
        self.letters.iter().all(|l| l.exponent > 0) || self.letters.iter().all(|l| l.exponent < 0)
    }

    /// Evaluates the word on homology, resolving curve names to classes.
    pub fn eval<F>(&self, mut resolve: F) -> Result<SpElement>
    where
        F: FnMut(&str) -> Option<HomologyClass>,
    {
        let mut acc = SpElement::identity(self.genus);
        for l in &self.letters {
            let Some(class) = resolve(&l.curve) else {
                return Err(Error::UnknownName(l.curve.clone()));
            };
            if class.genus() != self.genus {
                return Err(Error::Dimension {
                    expected: 2 * self.genus,
                    found: class.rank(),
                });
            }
            acc = acc.then_twist(&class, l.exponent);
        }
        Ok(acc.with_word(self.clone()))
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "T_{}^{}", l.curve, l.exponent)?;
        }
        Ok(())
    }
}

/// A mapping class seen through its action on `H_1`.
#[derive(Clone, Debug)]
pub struct SpElement {
    genus: usize,
    matrix: IntMatrix,
    word: Option<TwistWord>,
}

impl PartialEq for SpElement {
    fn eq(&self, other: &Self) -> bool {
        self.genus == other.genus && self.matrix == other.matrix
    }
}

impl Eq for SpElement {}

impl SpElement {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() || !matrix.rows().is_multiple_of(2) {
            bail!(Domain, "symplectic matrices are square of even size");
        }
        if !is_symplectic(&matrix) {
            bail!(Precondition, "matrix is not symplectic: {matrix:?}");
        }
        Ok(SpElement {
            genus: matrix.rows() / 2,
            matrix,
            word: None,
        })
    }

    pub fn identity(genus: usize) -> Self {
        SpElement {
            genus,
            matrix: IntMatrix::identity(2 * genus),
            word: None,
        }
    }

    pub(crate) fn from_trusted(matrix: IntMatrix) -> Self {
        debug_assert!(is_symplectic(&matrix));
        SpElement {
            genus: matrix.rows() / 2,
            matrix,
            word: None,
        }
    }

    pub fn with_word(mut self, word: TwistWord) -> Self {
        self.word = Some(word);
        self
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn word(&self) -> Option<&TwistWord> {
        self.word.as_ref()
    }

    pub fn apply(&self, v: &HomologyClass) -> Result<HomologyClass> {
        if v.genus() != self.genus {
            return Err(Error::Dimension {
                expected: 2 * self.genus,
                found: v.rank(),
            });
        }
        HomologyClass::new(self.genus, self.matrix.mul_vec(v.coords()))
    }

    pub fn compose(&self, rhs: &SpElement) -> Result<SpElement> {
        if self.genus != rhs.genus {
            return Err(Error::Dimension {
                expected: 2 * self.genus,
                found: 2 * rhs.genus,
            });
        }
        let word = match (&self.word, &rhs.word) {
            (Some(a), Some(b)) => a.concat(b).ok(),
            _ => None,
        };
        Ok(SpElement {
            genus: self.genus,
            matrix: &self.matrix * &rhs.matrix,
            word,
        })
    }

    pub fn inverse(&self) -> SpElement {
        SpElement {
            genus: self.genus,
            matrix: form_inverse(&self.matrix, false),
            word: self.word.as_ref().map(TwistWord::inverse),
        }
    }

    pub fn pow(&self, e: i64) -> SpElement {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        SpElement::from_trusted(base.matrix.pow(e.unsigned_abs()))
    }

    /// `self · T_a^q`, computed as the rank-one update
    /// `M + q (M a)(a^T J)`.
    pub fn then_twist(&self, a: &HomologyClass, q: i64) -> SpElement {
        assert_eq!(a.genus(), self.genus);
        let ma = self.matrix.mul_vec(a.coords());
        let cov = covector(a);
        let qb = BigInt::from(q);
        let mut m = self.matrix.clone();
        for (i, x) in ma.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let s = x * &qb;
            for (j, c) in cov.iter().enumerate() {
                if !c.is_zero() {
                    m[(i, j)] += &s * c;
                }
            }
        }
        SpElement {
            genus: self.genus,
            matrix: m,
            word: None,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn trace(&self) -> BigInt {
        self.matrix.trace()
    }

    pub fn charpoly(&self) -> Vec<BigInt> {
        self.matrix.charpoly()
    }
}

/// The matrix of `T_a^q` on `H_1`.
pub fn transvection(a: &HomologyClass, q: i64) -> SpElement {
    SpElement::identity(a.genus()).then_twist(a, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcg::homology::twist_homology;

    fn h(c: &[i64]) -> HomologyClass {
        HomologyClass::from_coords(c).unwrap()
    }

    #[test]
    fn transvection_examples() {
        let t = transvection(&h(&[1, 0]), 1);
        assert_eq!(t.matrix(), &IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap());
        let round = transvection(&h(&[1, 0]), -1).compose(&t).unwrap();
        assert!(round.is_identity());
        assert!(transvection(&h(&[0, 0, 0, 0]), 5).is_identity());
    }

    #[test]
    fn transvection_matches_formula_on_basis() {
        let a = h(&[2, -1, 1, 3]);
        let t = transvection(&a, -3);
        for i in 0..4 {
            let e = HomologyClass::basis(2, i);
            assert_eq!(t.apply(&e).unwrap(), twist_homology(&a, -3, &e).unwrap());
        }
        assert!(is_symplectic(t.matrix()));
    }

    #[test]
    fn word_eval_is_product() {
        let word = TwistWord::new(
            1,
            vec![
                TwistLetter {
                    curve: "a".into(),
                    exponent: 1,
                },
                TwistLetter {
                    curve: "b".into(),
                    exponent: 1,
                },
            ],
        )
        .unwrap();
        let g = word
            .eval(|n| match n {
                "a" => Some(h(&[1, 0])),
                "b" => Some(h(&[0, 1])),
                _ => None,
            })
            .unwrap();
        assert_eq!(
            g.matrix(),
            &IntMatrix::from_rows(&[vec![0, 1], vec![-1, 1]]).unwrap()
        );
        assert!(TwistWord::single(1, "c", 1)
            .unwrap()
            .eval(|_| None)
            .is_err());
    }

    #[test]
    fn push_merges_and_cancels() {
        let mut w = TwistWord::empty(1);
        w.push("a", 2);
        w.push("a", -2);
        assert!(w.is_empty());
        w.push("a", 1);
        w.push("b", 1);
        w.push("b", 3);
        assert_eq!(w.len(), 2);
        assert_eq!(w.letters()[1].exponent, 4);
        assert!(TwistWord::single(1, "a", 0).is_err());
    }

    #[test]
    fn inverse_uses_form() {
        let g = transvection(&h(&[1, 2, -1, 0]), 3)
            .compose(&transvection(&h(&[0, 1, 1, 1]), -2))
            .unwrap();
        assert!(g.compose(&g.inverse()).unwrap().is_identity());
        assert!(SpElement::new(IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]).unwrap()).is_err());
    }
}
