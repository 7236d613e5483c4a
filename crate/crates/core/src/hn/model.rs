// SPDX-License-Identifier: Apache-2.0

//! HN-models `(Σ, g)` of fibered knot complements and generalized crossing
//! changes.
//!
//! Sign table for crossing changes, used throughout: a crossing change of
//! order `q` along the crossing circle `L` is `1/(-q)` surgery on `L`, and
//! replaces the model map `g` by `g · T_L^{-q}`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::pi1::{copy_embeddings, projection_matrix};
use crate::error::{bail, Error, Result};
use crate::mcg::homology::{pairing_raw, HomologyClass};
use crate::mcg::matrix::IntMatrix;
use crate::mcg::symplectic::{is_symplectic, SpElement, TwistWord};
use crate::words::Curve;

/// The doubled monodromy: `h` on the top copy, identity on the bottom copy.
pub fn double_monodromy(h: &SpElement) -> SpElement {
    let id = IntMatrix::identity(h.matrix().rows());
    SpElement::from_trusted(IntMatrix::block_diag(&[h.matrix(), &id]))
}

/// Same as [`double_monodromy`] for a raw matrix, checking symplecticity.
pub fn double_monodromy_matrix(h: &IntMatrix) -> Result<SpElement> {
    if !is_symplectic(h) {
        bail!(Precondition, "monodromy must be symplectic");
    }
    Ok(double_monodromy(&SpElement::from_trusted(h.clone())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingCircle {
    pub curve: Curve,
    pub order: i64,
}

#[derive(Debug, Clone)]
pub struct HNModel {
    pub fiber_genus: usize,
    pub model_map: SpElement,
    pub model_word: TwistWord,
    pub knot: Curve,
    pub crossing_circles: Vec<CrossingCircle>,
    pub notes: Vec<String>,
}

impl HNModel {
    pub fn surface_genus(&self) -> usize {
        2 * self.fiber_genus
    }

    pub fn crossing_circle(&self, name: &str) -> Option<&CrossingCircle> {
        self.crossing_circles.iter().find(|c| c.curve.name() == name)
    }

    /// The model map fixes every class of the bottom copy `S × {0}`.
    pub fn fixes_bottom(&self) -> bool {
        let (_, bottom) = copy_embeddings(self.fiber_genus);
        let image = self.model_map.matrix() * &bottom;
        image == bottom
    }

    /// Replaces `g` by `g · T_L^{-q}`.
    pub fn apply_crossing_change(&self, l: &Curve, q: i64) -> Result<HNModel> {
        if q == 0 {
            bail!(Domain, "crossing change order must be nonzero");
        }
        let Some(circle) = self.crossing_circle(l.name()) else {
            bail!(Precondition, "`{}` is not a crossing circle of this model", l.name());
        };
        if circle.curve.homology() != l.homology() {
            bail!(Precondition, "`{}` does not match the model's crossing circle", l.name());
        }
        let mut next = self.clone();
        next.model_map = self.model_map.then_twist(l.homology(), -q);
        next.model_word.push(l.name(), -q);
        next.notes
            .push(format!("1/{} surgery on {} (crossing change of order {q})", -q, l.name()));
        Ok(next)
    }

    /// Seifert-form shadow of the model map; see [`SeifertShadow`].
    pub fn seifert_shadow(&self) -> Result<SeifertShadow> {
        seifert_shadow(self.fiber_genus, &self.model_map)
    }
}

/// What the model map says about the fiber of the knot it encodes.
///
/// With `t`, `b` the top and bottom embeddings of `H_1(S)` and `π` the
/// projection to `H_1(S × I)`, put `A = π g t` and `B = π g (t - b)`. The
/// form `V(y, x) = <B^{-1} A y, x>` is a Seifert form of the knot; its
/// Alexander polynomial is `det(V - t V^T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertShadow {
    pub seifert: IntMatrix,
    /// Ascending coefficients of `det(V - t V^T)`.
    pub alexander: Vec<BigInt>,
    /// `V^{-1} V^T` when `V` is unimodular.
    pub monodromy: Option<IntMatrix>,
}

impl SeifertShadow {
    /// The Alexander polynomial up to units `±t^n`.
    pub fn normalized_alexander(&self) -> Vec<BigInt> {
        normalize_laurent(&self.alexander)
    }
}

/// Strips powers of `t` and fixes the sign of the lowest coefficient.
pub fn normalize_laurent(p: &[BigInt]) -> Vec<BigInt> {
    let Some(lo) = p.iter().position(|c| !c.is_zero()) else {
        return Vec::new();
    };
    let hi = p.iter().rposition(|c| !c.is_zero()).unwrap_or(lo);
    let flip = p[lo].is_negative();
    p[lo..=hi].iter().map(|c| if flip { -c } else { c.clone() }).collect()
}

fn to_rational(m: &IntMatrix) -> Vec<Vec<BigRational>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect()
}

/// Solves `B X = A` over the rationals for square invertible `B`.
fn solve(b: &IntMatrix, a: &IntMatrix) -> Option<Vec<Vec<BigRational>>> {
    let n = b.rows();
    let mut lhs = to_rational(b);
    let mut rhs = to_rational(a);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !lhs[r][col].is_zero())?;
        lhs.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = lhs[col][col].recip();
        for x in lhs[col].iter_mut() {
            *x *= &inv;
        }
        for x in rhs[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || lhs[r][col].is_zero() {
                continue;
            }
            let f = lhs[r][col].clone();
            for c in 0..n {
                let d = &f * &lhs[col][c];
                lhs[r][c] -= d;
            }
            for c in 0..rhs[r].len() {
                let d = &f * &rhs[col][c];
                rhs[r][c] -= d;
            }
        }
    }
    Some(rhs)
}

/// Interpolates the integer polynomial of degree `<= n` through
/// `(t, values[t])` for `t = 0..=n`.
fn interpolate(values: &[BigInt]) -> Vec<BigInt> {
    let n = values.len();
    let mut coeffs: Vec<BigRational> = alloc::vec![BigRational::zero(); n];
    for (i, yi) in values.iter().enumerate() {
        // Lagrange basis polynomial for node i.
        let mut basis: Vec<BigRational> = alloc::vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            let xj = BigRational::from_integer(BigInt::from(j));
            let mut next = alloc::vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * &xj;
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(i as i64 - j as i64));
        }
        let scale = BigRational::from_integer(yi.clone()) / denom;
        for (d, c) in basis.iter().enumerate() {
            coeffs[d] += c * &scale;
        }
    }
    coeffs.into_iter().map(|c| c.to_integer()).collect()
}

/// Computes the [`SeifertShadow`] of a model map on a doubled surface.
pub fn seifert_shadow(fiber_genus: usize, g: &SpElement) -> Result<SeifertShadow> {
    let n = 2 * fiber_genus;
    if g.genus() != n {
        return Err(Error::Dimension {
            expected: 2 * n,
            found: g.matrix().rows(),
        });
    }
    let p = projection_matrix(fiber_genus);
    let (top, bottom) = copy_embeddings(fiber_genus);
    let pg = &p * g.matrix();
    let a = &pg * &top;
    let b = &pg * &top.sub(&bottom);
    let Some(z) = solve(&b, &a) else {
        bail!(Unsupported, "the model map does not determine a Seifert form (singular boundary map)");
    };
    let mut v = IntMatrix::zeros(n, n);
    for j in 0..n {
        let zj: Vec<BigRational> = (0..n).map(|r| z[r][j].clone()).collect();
        if zj.iter().any(|x| !x.is_integer()) {
            bail!(Unsupported, "the Seifert form of this model map is not integral");
        }
        let zj: Vec<BigInt> = zj.into_iter().map(|x| x.to_integer()).collect();
        for i in 0..n {
            let ei = HomologyClass::basis(fiber_genus, i);
            v[(i, j)] = pairing_raw(&zj, ei.coords());
        }
    }
    let vt = v.transpose();
    let values: Vec<BigInt> = (0..=n)
        .map(|t| v.sub(&vt.scale(&BigInt::from(t))).determinant())
        .collect();
    let alexander = interpolate(&values);
    let det = v.determinant();
    let monodromy = if det.abs().is_one() {
        Some(&v.inverse_unimodular()? * &vt)
    } else {
        None
    };
    Ok(SeifertShadow {
        seifert: v,
        alexander,
        monodromy,
    })
}
