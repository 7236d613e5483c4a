// SPDX-License-Identifier: Apache-2.0

//! Disc tests on the boundary of a handlebody `N(x)` determined by a meridian
//! system `x`.
//!
//! Every verdict here is relative to the curves an [`Atlas`] knows about; the
//! library never computes geometric intersection numbers itself.

use alloc::string::String;

use super::curve::{Alphabet, Atlas, Curve};
use super::surface::{dehn_essential_test, Essentiality};
use crate::error::{bail, Result};

/// A curve on the boundary bounds a meridian disc iff its system word
/// reduces to the empty word.
pub fn disc_bound_test(x: &Alphabet, y: &Curve) -> Result<bool> {
    x.check_word(y.system_word())?;
    Ok(y.system_word().reduce().is_empty())
}

/// Whether a curve is essential on the surface, when that can be decided.
///
/// Non-separating curves are essential. For separating ones the `pi_1` word
/// decides: an empty word is inessential, and in genus at least 2 Dehn's
/// algorithm settles the rest.
pub fn curve_is_essential(c: &Curve) -> Option<bool> {
    if !c.homology().is_zero() {
        return Some(true);
    }
    let w = c.pi1_word()?;
    if w.reduce().is_empty() {
        return Some(false);
    }
    match c.genus() {
        0 => Some(false),
        1 => Some(false),
        k => dehn_essential_test(k, w)
            .ok()
            .map(|v| v == Essentiality::Essential),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiscBusting {
    /// No meridian disc in the atlas avoids the curve.
    DiscBustingUpToAtlas,
    /// An essential atlas curve bounds a meridian disc disjoint from the curve.
    NotDiscBusting { witness: String },
    /// The curve bounds a disc itself.
    Degenerate,
}

/// Looks for an essential meridian in the atlas missing `gamma`.
pub fn is_disc_busting(x: &Alphabet, gamma: &Curve, atlas: &Atlas) -> Result<DiscBusting> {
    if disc_bound_test(x, gamma)? {
        return Ok(DiscBusting::Degenerate);
    }
    let Some(gi) = atlas.index_of(gamma.name()) else {
        bail!(Data, "`{}` is not in the atlas", gamma.name());
    };
    for (j, y) in atlas.curves().iter().enumerate() {
        if j == gi || atlas.geom()[gi][j] != 0 {
            continue;
        }
        if curve_is_essential(y) == Some(true) && disc_bound_test(x, y)? {
            return Ok(DiscBusting::NotDiscBusting {
                witness: y.name().into(),
            });
        }
    }
    Ok(DiscBusting::DiscBustingUpToAtlas)
}

/// Every system curve meets `gamma` in two points of opposite sign.
pub fn check_admissible(x: &Alphabet, gamma: &Curve, atlas: &Atlas) -> Result<bool> {
    for name in x.names() {
        let g = atlas.geom_between(name, gamma.name())?;
        let a = atlas.alg_between(name, gamma.name())?;
        if g != 2 || a != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dichotomy {
    /// `T_z^q(gamma)` is still disc-busting.
    CaseA,
    /// A curve `x'` meeting `z` once and missing `T_z^q(gamma)`.
    CaseB { witness: String },
}

/// Decides which alternative holds after twisting an admissible disc-busting
/// curve `gamma` along a curve `z` meeting it twice with zero algebraic
/// intersection.
///
/// `twisted_atlas` describes the same surface after the twist: its entry named
/// like `gamma` is `gamma' = T_z^q(gamma)`.
pub fn busted_dichotomy(
    x: &Alphabet,
    gamma: &Curve,
    z: &Curve,
    q: i64,
    atlas: &Atlas,
    twisted_atlas: &Atlas,
) -> Result<Dichotomy> {
    if q == 0 {
        bail!(Precondition, "the twist power must be nonzero");
    }
    if !check_admissible(x, gamma, atlas)? {
        bail!(Precondition, "the system is not admissible for `{}`", gamma.name());
    }
    let (gz, az) = (
        atlas.geom_between(z.name(), gamma.name())?,
        atlas.alg_between(z.name(), gamma.name())?,
    );
    if gz != 2 || az != 0 {
        bail!(
            Precondition,
            "`{}` must meet `{}` twice with zero algebraic intersection",
            z.name(),
            gamma.name()
        );
    }
    let gamma_prime = twisted_atlas.curve(gamma.name())?;
    if is_disc_busting(x, gamma_prime, twisted_atlas)? == DiscBusting::DiscBustingUpToAtlas {
        return Ok(Dichotomy::CaseA);
    }
    for c in atlas.curves() {
        if c.name() == gamma.name() || c.name() == z.name() {
            continue;
        }
        let Some(_) = twisted_atlas.index_of(c.name()) else {
            continue;
        };
        if atlas.geom_between(c.name(), z.name())? == 1
            && atlas.geom_between(c.name(), gamma.name())? == 2
            && twisted_atlas.geom_between(c.name(), gamma.name())? == 0
        {
            return Ok(Dichotomy::CaseB {
                witness: c.name().into(),
            });
        }
    }
    bail!(
        Data,
        "inconsistent atlas: `{}` is not disc-busting but no curve meets `{}` once and misses it",
        gamma.name(),
        z.name()
    )
}
