// SPDX-License-Identifier: Apache-2.0

//! Scenarios: an HN-model together with its meridian system and atlas.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use super::model::{CrossingCircle, HNModel};
use super::pi1::meridians;
use crate::error::{bail, Error, Result};
use crate::mcg::homology::{intersection_pairing, HomologyClass};
use crate::mcg::symplectic::{TwistLetter, TwistWord};
use crate::words::{Alphabet, Atlas, Curve, CyclicWord};

/// One curve as written in a scenario file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveData {
    pub name: String,
    pub system_word: String,
    pub pi1_word: Option<String>,
    pub homology: Vec<i64>,
    pub separating: bool,
}

/// The plain-data form of a [`Scenario`], mirroring the file format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScenarioData {
    pub name: String,
    /// Genus of the doubled surface `Σ`.
    pub genus: usize,
    pub alphabet: Vec<String>,
    pub curves: Vec<CurveData>,
    pub geom: Vec<Vec<u64>>,
    pub alg: Vec<Vec<i64>>,
    pub monodromy_word: Vec<(String, i64)>,
    pub knot: String,
    pub crossing_circles: Vec<(String, i64)>,
}

#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: String,
    pub alphabet: Alphabet,
    pub atlas: Atlas,
    pub model: HNModel,
    pub notes: Vec<String>,
    data: ScenarioData,
}

impl Scenario {
    /// Builds and validates a scenario from file data.
    pub fn from_data(data: ScenarioData) -> Result<Self> {
        if !data.genus.is_multiple_of(2) {
            bail!(Data, "the doubled surface has even genus, got {}", data.genus);
        }
        let fiber_genus = data.genus / 2;
        let alphabet = Alphabet::new(&data.alphabet)?;
        let mut curves = Vec::with_capacity(data.curves.len());
        for c in &data.curves {
            let homology = HomologyClass::from_coords(&c.homology)
                .ok()
                .filter(|h| h.genus() == data.genus)
                .ok_or_else(|| {
                    Error::Data(format!("curve `{}` needs {} homology coordinates", c.name, 2 * data.genus))
                })?;
            let system_word = CyclicWord::parse(&c.system_word)?;
            alphabet.check_word(&system_word)?;
            let pi1 = c.pi1_word.as_deref().map(CyclicWord::parse).transpose()?;
            curves.push(Curve::new(&c.name, system_word, pi1, homology, c.separating)?);
        }
        let atlas = Atlas::new(curves, data.geom.clone(), data.alg.clone())?;
        for name in alphabet.names() {
            atlas.curve(name)?;
        }

        let letters = data
            .monodromy_word
            .iter()
            .map(|(curve, exponent)| TwistLetter {
                curve: curve.clone(),
                exponent: *exponent,
            })
            .collect();
        let model_word = TwistWord::new(data.genus, letters)?;
        let model_map = model_word.eval(|name| atlas.curve(name).ok().map(|c| c.homology().clone()))?;
        let knot = atlas.curve(&data.knot)?.clone();
        let mut crossing_circles = Vec::new();
        for (name, order) in &data.crossing_circles {
            if *order == 0 {
                bail!(Data, "crossing circle `{name}` has order 0");
            }
            crossing_circles.push(CrossingCircle {
                curve: atlas.curve(name)?.clone(),
                order: *order,
            });
        }
        let model = HNModel {
            fiber_genus,
            model_map,
            model_word,
            knot,
            crossing_circles,
            notes: Vec::new(),
        };
        let scenario = Scenario {
            name: data.name.clone(),
            alphabet,
            atlas,
            model,
            notes: Vec::new(),
            data,
        };
        scenario.check_invariants()?;
        Ok(scenario)
    }

    pub fn data(&self) -> &ScenarioData {
        &self.data
    }

    pub fn fiber_genus(&self) -> usize {
        self.model.fiber_genus
    }

    pub fn curve(&self, name: &str) -> Result<&Curve> {
        self.atlas.curve(name)
    }

    /// Meridian classes of the handlebody `S × I`.
    pub fn lagrangian(&self) -> Vec<HomologyClass> {
        meridians(self.fiber_genus()).into_iter().map(|m| m.2).collect()
    }

    /// Model invariants: the map fixes the bottom copy, the knot sits in
    /// preferred position against the meridians, crossing circles meet it
    /// twice with zero algebraic intersection, and the system curves span
    /// the meridian kernel.
    pub fn check_invariants(&self) -> Result<()> {
        let m = &self.model;
        if !m.fixes_bottom() {
            bail!(Data, "model map must fix the bottom copy of the fiber");
        }
        let knot = m.knot.name();
        for x in self.alphabet.names() {
            if self.atlas.geom_between(x, knot)? != 2 || self.atlas.alg_between(x, knot)? != 0 {
                bail!(Data, "knot `{knot}` is not in preferred position against `{x}`");
            }
        }
        for c in &m.crossing_circles {
            let l = c.curve.name();
            if self.atlas.geom_between(l, knot)? != 2 || self.atlas.alg_between(l, knot)? != 0 {
                bail!(Data, "`{l}` must meet the knot twice with zero algebraic intersection");
            }
        }
        let lag = self.lagrangian();
        for x in self.alphabet.names() {
            let class = self.atlas.curve(x)?.homology();
            for v in &lag {
                if !intersection_pairing(class, v)?.is_zero() {
                    bail!(Data, "system curve `{x}` is not a meridian of the product handlebody");
                }
            }
        }
        Ok(())
    }
}
