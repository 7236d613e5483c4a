// SPDX-License-Identifier: Apache-2.0

//! Homology-level filters for conjugacy and splitting equivalence of model
//! maps. They can rule things out or exhibit witnesses; they never prove
//! that two mapping classes are conjugate.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::mcg::homology::HomologyClass;
use crate::mcg::matrix::IntMatrix;
use crate::mcg::obstruction::validate_lagrangian;
use crate::mcg::symplectic::{SpElement, TwistWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjugacyVerdict {
    /// Some conjugacy invariant differs; the reason names it.
    DistinctCertified { reason: String },
    PossiblyConjugate,
}

/// Compares characteristic polynomial, trace and `det(h - I)`.
pub fn monodromy_conjugacy_filter(h1: &SpElement, h2: &SpElement) -> Result<ConjugacyVerdict> {
    if h1.genus() != h2.genus() {
        return Err(Error::Dimension {
            expected: h1.matrix().rows(),
            found: h2.matrix().rows(),
        });
    }
    let (t1, t2) = (h1.trace(), h2.trace());
    if t1 != t2 {
        return Ok(ConjugacyVerdict::DistinctCertified {
            reason: format!("trace {t1} != {t2}"),
        });
    }
    let id = IntMatrix::identity(h1.matrix().rows());
    let (d1, d2) = (h1.matrix().sub(&id).determinant(), h2.matrix().sub(&id).determinant());
    if d1 != d2 {
        return Ok(ConjugacyVerdict::DistinctCertified {
            reason: format!("det(h - I) {d1} != {d2}"),
        });
    }
    if h1.charpoly() != h2.charpoly() {
        return Ok(ConjugacyVerdict::DistinctCertified {
            reason: String::from("characteristic polynomials differ"),
        });
    }
    Ok(ConjugacyVerdict::PossiblyConjugate)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplittingVerdict {
    /// `F1 · g2 · F2 = g1`.
    PreservingWitness(TwistWord, TwistWord),
    /// `F1 · (ι g2^{-1} ι) · F2 = g1`.
    FlipWitness(TwistWord, TwistWord),
    NoneFound,
}

/// Names `l1, l2, ...` of the Lagrangian transvection generators.
fn generator_name(i: usize) -> String {
    format!("l{}", i + 1)
}

type WordTable = (Vec<(TwistWord, IntMatrix)>, BTreeMap<Vec<Vec<num_bigint::BigInt>>, usize>);

/// Enumerates reduced words of length `<= max_len` over `T_{l_i}^{±1}` in
/// length-lex order, keeping the first word reaching each matrix.
fn words_by_matrix(lagrangian: &[HomologyClass], max_len: usize) -> WordTable {
    let genus = lagrangian.first().map_or(0, HomologyClass::genus);
    let gens: Vec<(usize, i64)> = (0..lagrangian.len()).flat_map(|i| [(i, 1), (i, -1)]).collect();
    let mut list: Vec<(TwistWord, IntMatrix)> = alloc::vec![(TwistWord::empty(genus), IntMatrix::identity(2 * genus))];
    let mut index = BTreeMap::new();
    index.insert(list[0].1.to_rows(), 0usize);
    let mut frontier = alloc::vec![0usize];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for &w in &frontier {
            for &(g, e) in &gens {
                let (word, mat) = &list[w];
                if word.letters().last().is_some_and(|l| l.curve == generator_name(g) && l.exponent == -e) {
                    continue;
                }
                let mut nw = word.clone();
                nw.push(&generator_name(g), e);
                let nm = SpElement::from_trusted(mat.clone()).then_twist(&lagrangian[g], e);
                let key = nm.matrix().to_rows();
                list.push((nw, nm.matrix().clone()));
                let id = list.len() - 1;
                index.entry(key).or_insert(id);
                next.push(id);
            }
        }
        frontier = next;
    }
    (list, index)
}

/// Bounded search for splitting equivalences built from transvections along
/// the meridian Lagrangian, which extend over the handlebody on homology.
///
/// `iota` is the involution exchanging the two sides of the splitting.
pub fn splitting_equivalence_filter(
    g1: &SpElement,
    g2: &SpElement,
    lagrangian: &[HomologyClass],
    iota: &IntMatrix,
    budget: usize,
) -> Result<SplittingVerdict> {
    if g1.genus() != g2.genus() {
        return Err(Error::Dimension {
            expected: g1.matrix().rows(),
            found: g2.matrix().rows(),
        });
    }
    validate_lagrangian(g1.genus(), lagrangian)?;
    let (list, index) = words_by_matrix(lagrangian, budget);
    let flipped = iota * &(&g2.inverse().matrix().clone() * iota);
    for (pattern, middle) in [(false, g2.matrix().clone()), (true, flipped)] {
        // F2 = middle^{-1} F1^{-1} g1, looked up among short words.
        let middle_inv = SpElement::from_trusted(middle.clone()).inverse();
        for (w1, m1) in &list {
            let m1_inv = SpElement::from_trusted(m1.clone()).inverse();
            let target = &(middle_inv.matrix() * m1_inv.matrix()) * g1.matrix();
            let Some(&id) = index.get(&target.to_rows()) else {
                continue;
            };
            let w2 = &list[id].0;
            if w1.len() + w2.len() > budget {
                continue;
            }
            debug_assert_eq!(&(m1 * &middle) * &list[id].1, *g1.matrix());
            return Ok(if pattern {
                SplittingVerdict::FlipWitness(w1.clone(), w2.clone())
            } else {
                SplittingVerdict::PreservingWitness(w1.clone(), w2.clone())
            });
        }
    }
    Ok(SplittingVerdict::NoneFound)
}

/// Evaluates a witness word over the Lagrangian generators.
pub fn eval_lagrangian_word(w: &TwistWord, lagrangian: &[HomologyClass]) -> Result<SpElement> {
    w.eval(|name| {
        let i: usize = name.strip_prefix('l')?.parse().ok()?;
        lagrangian.get(i.checked_sub(1)?).cloned()
    })
}

/// Re-checks a witness returned by [`splitting_equivalence_filter`].
pub fn verify_splitting_witness(
    verdict: &SplittingVerdict,
    g1: &SpElement,
    g2: &SpElement,
    lagrangian: &[HomologyClass],
    iota: &IntMatrix,
) -> Result<bool> {
    let (f1, f2, middle) = match verdict {
        SplittingVerdict::NoneFound => return Ok(true),
        SplittingVerdict::PreservingWitness(a, b) => (a, b, g2.matrix().clone()),
        SplittingVerdict::FlipWitness(a, b) => (a, b, iota * &(g2.inverse().matrix() * iota)),
    };
    let m1 = eval_lagrangian_word(f1, lagrangian)?;
    let m2 = eval_lagrangian_word(f2, lagrangian)?;
    Ok(&(m1.matrix() * &middle) * m2.matrix() == *g1.matrix())
}
