// SPDX-License-Identifier: Apache-2.0

//! JSON scenario files and knot tables.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use twistlab_core::adjacency::{validate_table, KnotRecord};
use twistlab_core::hn::{catalog_data, CurveData, Scenario, ScenarioData};

use crate::InputError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub name: String,
    pub system_word: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi1_word: Option<String>,
    pub homology: Vec<i64>,
    pub separating: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistEntry {
    pub curve: String,
    pub exp: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircleEntry {
    pub curve: String,
    pub order: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub name: String,
    pub genus: usize,
    pub alphabet: Vec<String>,
    pub curves: Vec<CurveFile>,
    pub geom: Vec<Vec<u64>>,
    pub alg: Vec<Vec<i64>>,
    pub monodromy_word: Vec<TwistEntry>,
    pub knot: String,
    pub crossing_circles: Vec<CircleEntry>,
}

impl From<&ScenarioData> for ScenarioFile {
    fn from(d: &ScenarioData) -> Self {
        ScenarioFile {
            name: d.name.clone(),
            genus: d.genus,
            alphabet: d.alphabet.clone(),
            curves: d
                .curves
                .iter()
                .map(|c| CurveFile {
                    name: c.name.clone(),
                    system_word: c.system_word.clone(),
                    pi1_word: c.pi1_word.clone(),
                    homology: c.homology.clone(),
                    separating: c.separating,
                })
                .collect(),
            geom: d.geom.clone(),
            alg: d.alg.clone(),
            monodromy_word: d
                .monodromy_word
                .iter()
                .map(|(curve, exp)| TwistEntry {
                    curve: curve.clone(),
                    exp: *exp,
                })
                .collect(),
            knot: d.knot.clone(),
            crossing_circles: d
                .crossing_circles
                .iter()
                .map(|(curve, order)| CircleEntry {
                    curve: curve.clone(),
                    order: *order,
                })
                .collect(),
        }
    }
}

impl From<ScenarioFile> for ScenarioData {
    fn from(f: ScenarioFile) -> Self {
        ScenarioData {
            name: f.name,
            genus: f.genus,
            alphabet: f.alphabet,
            curves: f
                .curves
                .into_iter()
                .map(|c| CurveData {
                    name: c.name,
                    system_word: c.system_word,
                    pi1_word: c.pi1_word,
                    homology: c.homology,
                    separating: c.separating,
                })
                .collect(),
            geom: f.geom,
            alg: f.alg,
            monodromy_word: f.monodromy_word.into_iter().map(|t| (t.curve, t.exp)).collect(),
            knot: f.knot,
            crossing_circles: f.crossing_circles.into_iter().map(|c| (c.curve, c.order)).collect(),
        }
    }
}

pub fn parse_scenario(text: &str) -> Result<Scenario, InputError> {
    let file: ScenarioFile = serde_json::from_str(text).map_err(|e| InputError(format!("scenario file: {e}")))?;
    Ok(Scenario::from_data(file.into())?)
}

/// Loads a scenario from a file path, falling back to the built-in catalog.
pub fn load_scenario(source: &str) -> Result<Scenario, InputError> {
    let path = Path::new(source);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| InputError(format!("{source}: {e}")))?;
        return parse_scenario(&text);
    }
    match catalog_entry(source) {
        Some(data) => Ok(Scenario::from_data(data)?),
        None => Err(InputError(format!(
            "`{source}` is neither a scenario file nor a catalog scenario"
        ))),
    }
}

pub fn catalog_entry(name: &str) -> Option<ScenarioData> {
    catalog_data().into_iter().find(|d| d.name == name)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotEntry {
    pub name: String,
    pub genus: u32,
    pub fibered: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scenario_ref: Option<String>,
}

impl From<&KnotRecord> for KnotEntry {
    fn from(k: &KnotRecord) -> Self {
        KnotEntry {
            name: k.name.clone(),
            genus: k.genus,
            fibered: k.fibered,
            scenario_ref: k.scenario_ref.clone(),
        }
    }
}

pub fn parse_knot_table(text: &str) -> Result<Vec<KnotRecord>, InputError> {
    let entries: Vec<KnotEntry> =
        serde_json::from_str(text).map_err(|e| InputError(format!("knot table: {e}")))?;
    let table: Vec<KnotRecord> = entries
        .iter()
        .map(|k| KnotRecord::new(&k.name, k.genus, k.fibered, k.scenario_ref.as_deref()))
        .collect();
    validate_table(&table)?;
    Ok(table)
}

/// Reads a knot table file; `builtin` names the shipped table.
pub fn load_knot_table(source: &str) -> Result<Vec<KnotRecord>, InputError> {
    let path = Path::new(source);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| InputError(format!("{source}: {e}")))?;
        return parse_knot_table(&text);
    }
    if source == "builtin" {
        return Ok(twistlab_core::adjacency::builtin_table());
    }
    Err(InputError(format!("`{source}` is not a knot table file")))
}
