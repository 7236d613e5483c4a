// SPDX-License-Identifier: Apache-2.0

//! First homology of a closed oriented surface with its intersection form.
//!
//! Coordinates are taken in the ordered basis `a_1, b_1, ..., a_k, b_k` with
//! `<a_i, b_i> = +1` and distinct handles orthogonal.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    genus: usize,
    coords: Vec<BigInt>,
}

impl HomologyClass {
    pub fn new(genus: usize, coords: Vec<BigInt>) -> Result<Self> {
        if coords.len() != 2 * genus {
            return Err(Error::Dimension {
                expected: 2 * genus,
                found: coords.len(),
            });
        }
        Ok(HomologyClass { genus, coords })
    }

    /// Infers the genus from the number of coordinates, which must be even.
    pub fn from_coords<T: Into<BigInt> + Copy>(coords: &[T]) -> Result<Self> {
        if !coords.len().is_multiple_of(2) {
            return Err(Error::Dimension {
                expected: coords.len() + 1,
                found: coords.len(),
            });
        }
        Self::new(coords.len() / 2, coords.iter().map(|&c| c.into()).collect())
    }

    pub fn zero(genus: usize) -> Self {
        HomologyClass {
            genus,
            coords: (0..2 * genus).map(|_| BigInt::zero()).collect(),
        }
    }

    /// The `index`-th basis vector (`a_1` is 0, `b_1` is 1, ...).
    pub fn basis(genus: usize, index: usize) -> Self {
        let mut v = Self::zero(genus);
        v.coords[index] = BigInt::from(1);
        v
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn rank(&self) -> usize {
        2 * self.genus
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, s: &BigInt) -> Self {
        HomologyClass {
            genus: self.genus,
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_genus(self, other)?;
        Ok(HomologyClass {
            genus: self.genus,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        same_genus(self, other)?;
        Ok(HomologyClass {
            genus: self.genus,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        HomologyClass {
            genus: self.genus,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    /// Sum of absolute values of the coordinates.
    pub fn l1_norm(&self) -> BigInt {
        self.coords.iter().map(Signed::abs).sum()
    }
}

impl fmt::Debug for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn same_genus(u: &HomologyClass, v: &HomologyClass) -> Result<()> {
    if u.genus != v.genus {
        return Err(Error::Dimension {
            expected: u.rank(),
            found: v.rank(),
        });
    }
    Ok(())
}

/// Raw form `u^T J v` on coordinate slices of equal even length.
pub(crate) fn pairing_raw(u: &[BigInt], v: &[BigInt]) -> BigInt {
    debug_assert_eq!(u.len(), v.len());
    u.chunks_exact(2)
        .zip(v.chunks_exact(2))
        .fold(BigInt::zero(), |acc, (x, y)| acc + &x[0] * &y[1] - &x[1] * &y[0])
}

/// Algebraic intersection number `<u, v> = u^T J v`.
pub fn intersection_pairing(u: &HomologyClass, v: &HomologyClass) -> Result<BigInt> {
    same_genus(u, v)?;
    Ok(pairing_raw(&u.coords, &v.coords))
}

/// Action of `T_a^q` on homology: `b + q <a, b> a`.
pub fn twist_homology(a: &HomologyClass, q: i64, b: &HomologyClass) -> Result<HomologyClass> {
    let coeff = intersection_pairing(a, b)? * q;
    b.checked_add(&a.scaled(&coeff))
}

/// Geometric intersection `i(T_a^q(b), b) = |q| i(a, b)^2`.
pub fn thurston_intersection(q: i64, i_ab: u64) -> BigInt {
    BigInt::from(q.unsigned_abs()) * BigInt::from(i_ab) * BigInt::from(i_ab)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(c: &[i64]) -> HomologyClass {
        HomologyClass::from_coords(c).unwrap()
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(intersection_pairing(&h(&[1, 0]), &h(&[0, 1])).unwrap(), 1.into());
        assert_eq!(intersection_pairing(&h(&[3, 5]), &h(&[3, 5])).unwrap(), 0.into());
        assert_eq!(
            intersection_pairing(&h(&[1, 0, 0, 0]), &h(&[0, 0, 0, 1])).unwrap(),
            0.into()
        );
        assert!(matches!(
            intersection_pairing(&h(&[1, 0]), &h(&[1, 0, 0, 0])),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn twist_examples() {
        let a = h(&[1, 0]);
        let b = h(&[0, 1]);
        assert_eq!(twist_homology(&a, 1, &b).unwrap(), h(&[1, 1]));
        assert_eq!(twist_homology(&b, 7, &b).unwrap(), b);
        assert_eq!(twist_homology(&a, 0, &b).unwrap(), b);
    }

    #[test]
    fn thurston_examples() {
        assert_eq!(thurston_intersection(3, 2), 12.into());
        assert_eq!(thurston_intersection(0, 5), 0.into());
        assert_eq!(thurston_intersection(-1, 1), 1.into());
    }

    #[test]
    fn odd_length_rejected() {
        assert!(HomologyClass::from_coords(&[1i64, 2, 3]).is_err());
    }
}
