// SPDX-License-Identifier: Apache-2.0

//! Genus constraints on n-adjacency: `K` is n-adjacent to `K'` when some
//! diagram of `K` has `n` crossings such that changing any nonempty subset of
//! them yields `K'`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{bail, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KnotRecord {
    pub name: String,
    pub genus: u32,
    pub fibered: bool,
    pub scenario_ref: Option<String>,
}

impl KnotRecord {
    pub fn new(name: &str, genus: u32, fibered: bool, scenario_ref: Option<&str>) -> Self {
        KnotRecord {
            name: name.into(),
            genus,
            fibered,
            scenario_ref: scenario_ref.map(Into::into),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyClaim {
    pub source: KnotRecord,
    pub target: KnotRecord,
    pub n: u32,
}

impl AdjacencyClaim {
    pub fn new(source: KnotRecord, target: KnotRecord, n: u32) -> Result<Self> {
        if n == 0 {
            bail!(Domain, "adjacency needs n >= 1");
        }
        Ok(AdjacencyClaim { source, target, n })
    }
}

/// The built-in knot table. Genera are the classical values: the unknot
/// bounds a disc, and the trefoil and figure-eight bound once-punctured tori
/// that are fibers.
pub fn builtin_table() -> Vec<KnotRecord> {
    alloc::vec![
        KnotRecord::new("unknot", 0, true, Some("unknot")),
        KnotRecord::new("trefoil", 1, true, Some("trefoil")),
        KnotRecord::new("figure8", 1, true, Some("figure8")),
    ]
}

/// Validates a knot table: unique names, and in the built-in names genus 0
/// belongs to the unknot alone.
pub fn validate_table(table: &[KnotRecord]) -> Result<()> {
    for (i, k) in table.iter().enumerate() {
        if k.name.is_empty() {
            bail!(Data, "knot names must be nonempty");
        }
        if table[..i].iter().any(|o| o.name == k.name) {
            bail!(Data, "duplicate knot `{}`", k.name);
        }
        if (k.name == "unknot") != (k.genus == 0) {
            bail!(Data, "`{}` has genus {}, but genus 0 is the unknot alone", k.name, k.genus);
        }
    }
    Ok(())
}

/// `g_n^L(K) = max(g(K), g(K'))`.
pub fn genus_bound(g_k: i64, g_kprime: i64) -> Result<i64> {
    if g_k < 0 || g_kprime < 0 {
        bail!(Domain, "genera are nonnegative");
    }
    Ok(g_k.max(g_kprime))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdjacencyVerdict {
    MustBeIsotopic,
    GenusGreaterHolds,
    /// Distinct knots with `g(K) <= g(K')`: no such n-adjacency exists.
    Inconsistent,
    NotApplicable,
}

/// For a fibered target and `n > 1`, either `K = K'` or `g(K) > g(K')`.
pub fn fibered_dichotomy(c: &AdjacencyClaim) -> AdjacencyVerdict {
    if !c.target.fibered || c.n <= 1 {
        AdjacencyVerdict::NotApplicable
    } else if c.source.genus > c.target.genus {
        AdjacencyVerdict::GenusGreaterHolds
    } else if c.source.name == c.target.name {
        AdjacencyVerdict::MustBeIsotopic
    } else {
        AdjacencyVerdict::Inconsistent
    }
}

/// An n-adjacency implies m-adjacency for every `1 <= m <= n`.
pub fn monotonicity_closure(c: &AdjacencyClaim) -> Vec<AdjacencyClaim> {
    (1..=c.n)
        .map(|m| AdjacencyClaim {
            source: c.source.clone(),
            target: c.target.clone(),
            n: m,
        })
        .collect()
}
