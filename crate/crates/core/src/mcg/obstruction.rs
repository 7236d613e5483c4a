// SPDX-License-Identifier: Apache-2.0

//! Commutator-length obstruction for powers of positive twist products, and
//! the homology-level identities showing where it stops applying.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::homology::{intersection_pairing, HomologyClass};
use super::matrix::IntMatrix;
use super::symplectic::{form_inverse, is_anti_symplectic, is_symplectic, transvection, SpElement, TwistWord};
use crate::error::{bail, Error, Result};

/// Lower bound `1 + qm / (18k - 6)` on the commutator length of `f^q`, where
/// `f` is a product of `m` right-handed twists on disjoint essential curves
/// of a closed genus-`k` surface.
pub fn kotschick_bound(k: i64, m: i64, q: i64) -> Result<BigRational> {
    if k < 2 {
        bail!(Domain, "the bound needs genus k >= 2, got {k}");
    }
    if m < 1 {
        bail!(Domain, "the bound needs m >= 1 twists, got {m}");
    }
    if q < 1 {
        bail!(Domain, "the bound needs a positive power, got q = {q}");
    }
    let num = BigInt::from(q) * BigInt::from(m);
    let den = BigInt::from(18) * BigInt::from(k) - BigInt::from(6);
    Ok(BigRational::one() + BigRational::new(num, den))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObstructionKind {
    /// The claimed commutator length is below the bound, so the curves
    /// cannot all be essential.
    Contradiction,
    Consistent,
    /// Mixed twist signs: the bound does not hold for such products.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionVerdict {
    pub kind: ObstructionKind,
    pub bound: BigRational,
    pub detail: String,
}

/// Decides whether `c(f^q) = claimed_cl` is compatible with the commutator
/// bound.
pub fn commutator_obstruction(
    k: i64,
    m: i64,
    q: i64,
    claimed_cl: i64,
    all_same_sign: bool,
    all_essential: bool,
) -> Result<ObstructionVerdict> {
    if q == 0 {
        bail!(Domain, "q must be nonzero");
    }
    if claimed_cl < 1 {
        bail!(Precondition, "claimed commutator length must be at least 1");
    }
    let power = q.unsigned_abs() as i64;
    if !all_same_sign {
        let bound = kotschick_bound(k, m, power).unwrap_or_else(|_| BigRational::zero());
        return Ok(ObstructionVerdict {
            kind: ObstructionKind::NotApplicable,
            bound,
            detail: String::from(
                "twists of mixed sign: (T_a T_b^-1)^q = [g^-1, T_b^q] has commutator length 1",
            ),
        });
    }
    let bound = kotschick_bound(k, m, power)?;
    let cl = BigRational::from_integer(BigInt::from(claimed_cl));
    if k == 2 && power % 10 != 0 {
        return Ok(ObstructionVerdict {
            kind: ObstructionKind::Consistent,
            bound,
            detail: format!(
                "genus 2: H_1(Gamma_2) = Z/10, so f^{power} need not lie in the commutator subgroup \
                 unless 10 | q; bound not applied"
            ),
        });
    }
    if all_essential && bound > cl {
        let detail = format!("bound {bound} exceeds claimed commutator length {claimed_cl}");
        return Ok(ObstructionVerdict {
            kind: ObstructionKind::Contradiction,
            bound,
            detail,
        });
    }
    let detail = if all_essential {
        format!("bound {bound} <= claimed commutator length {claimed_cl}")
    } else {
        String::from("some twist curve is inessential; bound not applied")
    };
    Ok(ObstructionVerdict {
        kind: ObstructionKind::Consistent,
        bound,
        detail,
    })
}

/// Image of a twist word in the abelianization of the mapping class group.
///
/// Genus 2 maps to `Z/10` with every non-separating twist a generator; for
/// genus at least 3 the group is perfect.
pub fn abelianization_image(w: &TwistWord, k: i64, all_nonseparating: bool) -> Result<u32> {
    if !all_nonseparating {
        bail!(
            Unsupported,
            "the abelianization image of a separating twist is not modelled"
        );
    }
    match k {
        k if k >= 3 => Ok(0),
        2 => Ok(w.exponent_sum().rem_euclid(10) as u32),
        _ => bail!(Unsupported, "abelianization for genus {k} is not modelled"),
    }
}

/// Checks `(T_a T_b^-1)^q = g^-1 T_b^q g T_b^-q` with `b = g a`.
pub fn verify_mixed_sign_commutator(k: usize, a: &HomologyClass, g: &SpElement, q: i64) -> Result<bool> {
    if a.genus() != k || g.genus() != k {
        return Err(Error::Dimension {
            expected: 2 * k,
            found: a.rank(),
        });
    }
    if q <= 0 {
        bail!(Precondition, "q must be positive, got {q}");
    }
    let b = g.apply(a)?;
    if !intersection_pairing(a, &b)?.is_zero() {
        bail!(Precondition, "<a, g(a)> must vanish for disjoint curves");
    }
    let f = transvection(a, 1).compose(&transvection(&b, -1))?;
    let lhs = f.pow(q);
    let tbq = transvection(&b, q);
    let rhs = g
        .inverse()
        .compose(&tbq)?
        .compose(g)?
        .compose(&transvection(&b, -q))?;
    Ok(lhs == rhs)
}

/// Checks `T_c g^-1 T_c^-1 g = T_c^2` for an orientation-reversing `g`
/// fixing the class of `c` up to sign.
pub fn verify_orientation_reversing_commutator(k: usize, c: &HomologyClass, g: &IntMatrix) -> Result<bool> {
    if c.genus() != k || g.rows() != 2 * k || !g.is_square() {
        return Err(Error::Dimension {
            expected: 2 * k,
            found: g.rows(),
        });
    }
    if !is_anti_symplectic(g) {
        bail!(Precondition, "g must satisfy g^T J g = -J");
    }
    let gc = g.mul_vec(c.coords());
    let neg: Vec<BigInt> = c.coords().iter().map(|x| -x).collect();
    if gc != c.coords() && gc != neg {
        bail!(Precondition, "g must fix the class of c up to sign");
    }
    let tc = transvection(c, 1);
    let tc_inv = transvection(c, -1);
    let g_inv = form_inverse(g, true);
    let lhs = &(&(tc.matrix() * &g_inv) * tc_inv.matrix()) * g;
    let rhs = transvection(c, 2);
    Ok(&lhs == rhs.matrix())
}

/// Validates a meridian Lagrangian: isotropic vectors spanning rank `genus`.
pub fn validate_lagrangian(genus: usize, lagrangian: &[HomologyClass]) -> Result<()> {
    if let Some(v) = lagrangian.iter().find(|v| v.genus() != genus) {
        return Err(Error::Dimension {
            expected: 2 * genus,
            found: v.rank(),
        });
    }
    for (i, u) in lagrangian.iter().enumerate() {
        for v in &lagrangian[i + 1..] {
            if !intersection_pairing(u, v)?.is_zero() {
                bail!(Precondition, "lagrangian vectors {u} and {v} pair nontrivially");
            }
        }
    }
    let cols: Vec<Vec<BigInt>> = lagrangian.iter().map(|v| v.coords().to_vec()).collect();
    let rank = IntMatrix::from_columns(2 * genus, &cols)?.rank();
    if rank != genus {
        bail!(Precondition, "lagrangian has rank {rank}, expected {genus}");
    }
    Ok(())
}

/// Is `v` in the rational span of `basis`?
pub(crate) fn in_span(n: usize, basis: &[HomologyClass], v: &[BigInt]) -> bool {
    let mut cols: Vec<Vec<BigInt>> = basis.iter().map(|b| b.coords().to_vec()).collect();
    let before = IntMatrix::from_columns(n, &cols).map(|m| m.rank()).unwrap_or(0);
    cols.push(v.to_vec());
    let after = IntMatrix::from_columns(n, &cols).map(|m| m.rank()).unwrap_or(0);
    before == after
}

/// Necessary condition for `M` to extend over the handlebody: it preserves the
/// kernel of `H_1(Σ) -> H_1(N)`.
pub fn handlebody_subgroup_check(m: &SpElement, lagrangian: &[HomologyClass]) -> Result<bool> {
    validate_lagrangian(m.genus(), lagrangian)?;
    let n = 2 * m.genus();
    Ok(lagrangian
        .iter()
        .all(|v| in_span(n, lagrangian, &m.matrix().mul_vec(v.coords()))))
}

/// Ensures the matrix is symplectic, for callers holding raw matrices.
pub fn require_symplectic(m: &IntMatrix) -> Result<()> {
    if !is_symplectic(m) {
        bail!(Precondition, "matrix is not symplectic");
    }
    Ok(())
}
