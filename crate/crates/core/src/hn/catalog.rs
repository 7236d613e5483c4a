// SPDX-License-Identifier: Apache-2.0

//! Built-in scenarios.
//!
//! Each fibered knot is modelled on `Σ = ∂(S × I)` for its fiber `S`, with
//! the conventions of [`super::pi1`]. Geometric intersection numbers come from
//! the band pictures:
//!
//! * the meridian `x_{2m-1}` (dual to the band `α_m`) meets each copy of `α_m`
//!   once, and the meridian `x_{2m}` meets each copy of `β_m` once;
//! * every meridian meets `K = ∂S × {1/2}` twice and misses the other copies
//!   of core curves;
//! * `α_m` and `β_m` meet once within a copy, and the copies are disjoint;
//! * a crossing circle around the two strands of a band is a pushoff of the
//!   meridian dual to that band, so it copies that meridian's row, except that
//!   it meets `K` twice.
//!
//! Algebraic intersections are the homology pairing of the listed classes.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::scenario::{CurveData, Scenario, ScenarioData};
use crate::error::{Error, Result};
use crate::mcg::homology::{pairing_raw, HomologyClass};
use num_bigint::BigInt;

pub const CATALOG_NAMES: [&str; 4] = ["unknot", "trefoil", "figure8", "composite"];

fn curve(name: &str, system_word: &str, pi1: Option<&str>, homology: &[i64]) -> CurveData {
    CurveData {
        name: name.into(),
        system_word: system_word.into(),
        pi1_word: pi1.map(Into::into),
        homology: homology.to_vec(),
        separating: homology.iter().all(|&c| c == 0),
    }
}

fn pairing_table(curves: &[CurveData]) -> Vec<Vec<i64>> {
    let to_big = |c: &CurveData| -> Vec<BigInt> { c.homology.iter().map(|&x| BigInt::from(x)).collect() };
    curves
        .iter()
        .map(|u| {
            curves
                .iter()
                .map(|v| i64::try_from(pairing_raw(&to_big(u), &to_big(v))).expect("small"))
                .collect()
        })
        .collect()
}

/// Symmetric geometric table from the listed nonzero pairs.
fn geom_table(curves: &[CurveData], pairs: &[(&str, &str, u64)]) -> Vec<Vec<u64>> {
    let n = curves.len();
    let idx = |name: &str| curves.iter().position(|c| c.name == name).expect("catalog curve");
    let mut g = vec![vec![0; n]; n];
    for &(a, b, v) in pairs {
        let (i, j) = (idx(a), idx(b));
        g[i][j] = v;
        g[j][i] = v;
    }
    g
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn word(v: &[(&str, i64)]) -> Vec<(String, i64)> {
    v.iter().map(|&(c, e)| (c.to_string(), e)).collect()
}

/// The unknot: its fiber is a disc, so `Σ` is a sphere.
pub fn unknot_data() -> ScenarioData {
    let curves = vec![
        curve("K", "", None, &[]),
        curve("L1", "", None, &[]),
        curve("L2", "", None, &[]),
    ];
    let geom = geom_table(&curves, &[("K", "L1", 2), ("K", "L2", 2)]);
    ScenarioData {
        name: "unknot".into(),
        genus: 0,
        alphabet: Vec::new(),
        alg: pairing_table(&curves),
        curves,
        geom,
        monodromy_word: Vec::new(),
        knot: "K".into(),
        crossing_circles: word(&[("L1", 1), ("L2", -1)]),
    }
}

/// Curves shared by the genus-one fibered knots: the two meridians, `K`, the
/// band cores in both copies and the two crossing circles.
///
/// `L1` encircles band `β` and is a pushoff of `x2`; `L2` encircles band `α`
/// and is a pushoff of `x1`.
fn genus_one_curves() -> (Vec<CurveData>, Vec<Vec<u64>>) {
    let curves = vec![
        curve("x1", "", Some("a2 b1'"), &[0, -1, 1, 0]),
        curve("x2", "", Some("a1 b2'"), &[1, 0, 0, -1]),
        curve("K", "x1 x2 x1' x2'", Some("a1 b1 a1' b1'"), &[0, 0, 0, 0]),
        curve("a_top", "x1", Some("a1"), &[1, 0, 0, 0]),
        curve("b_top", "x2", Some("b1"), &[0, 1, 0, 0]),
        curve("a_bot", "x1", Some("b2"), &[0, 0, 0, 1]),
        curve("b_bot", "x2", Some("a2"), &[0, 0, 1, 0]),
        curve("L1", "", Some("a1 b2'"), &[1, 0, 0, -1]),
        curve("L2", "", Some("a2 b1'"), &[0, -1, 1, 0]),
    ];
    let geom = geom_table(
        &curves,
        &[
            ("x1", "K", 2),
            ("x2", "K", 2),
            ("x1", "a_top", 1),
            ("x1", "a_bot", 1),
            ("x2", "b_top", 1),
            ("x2", "b_bot", 1),
            ("a_top", "b_top", 1),
            ("a_bot", "b_bot", 1),
            ("L1", "K", 2),
            ("L1", "b_top", 1),
            ("L1", "b_bot", 1),
            ("L2", "K", 2),
            ("L2", "a_top", 1),
            ("L2", "a_bot", 1),
        ],
    );
    (curves, geom)
}

/// The trefoil: monodromy `T_a T_b`. Each crossing circle carries a crossing
/// change of order `-1`, which unknots it.
pub fn trefoil_data() -> ScenarioData {
    let (curves, geom) = genus_one_curves();
    ScenarioData {
        name: "trefoil".into(),
        genus: 2,
        alphabet: names(&["x1", "x2"]),
        alg: pairing_table(&curves),
        curves,
        geom,
        monodromy_word: word(&[("a_top", 1), ("b_top", 1)]),
        knot: "K".into(),
        crossing_circles: word(&[("L1", -1), ("L2", -1)]),
    }
}

/// The figure-eight knot: monodromy `T_a T_b^{-1}`, a plumbing of two once
/// twisted bands, with opposite-sign twists of order four on the two bands.
pub fn figure_eight_data() -> ScenarioData {
    let (curves, geom) = genus_one_curves();
    ScenarioData {
        name: "figure8".into(),
        genus: 2,
        alphabet: names(&["x1", "x2"]),
        alg: pairing_table(&curves),
        curves,
        geom,
        monodromy_word: word(&[("a_top", 1), ("b_top", -1)]),
        knot: "K".into(),
        crossing_circles: word(&[("L1", 4), ("L2", -4)]),
    }
}

/// Trefoil # figure-eight. The crossing circle `L` lies on the decomposing
/// sphere and separates the two summands' handles.
pub fn composite_data() -> ScenarioData {
    let curves = vec![
        curve("x1", "", Some("a4 b1'"), &[0, -1, 0, 0, 0, 0, 1, 0]),
        curve("x2", "", Some("a1 b4'"), &[1, 0, 0, 0, 0, 0, 0, -1]),
        curve("x3", "", Some("a3 b2'"), &[0, 0, 0, -1, 1, 0, 0, 0]),
        curve("x4", "", Some("a2 b3'"), &[0, 0, 1, 0, 0, -1, 0, 0]),
        curve(
            "K",
            "x1 x2 x1' x2' x3 x4 x3' x4'",
            Some("a1 b1 a1' b1' a2 b2 a2' b2'"),
            &[0; 8],
        ),
        curve("a1_top", "x1", Some("a1"), &[1, 0, 0, 0, 0, 0, 0, 0]),
        curve("b1_top", "x2", Some("b1"), &[0, 1, 0, 0, 0, 0, 0, 0]),
        curve("a2_top", "x3", Some("a2"), &[0, 0, 1, 0, 0, 0, 0, 0]),
        curve("b2_top", "x4", Some("b2"), &[0, 0, 0, 1, 0, 0, 0, 0]),
        curve("a1_bot", "x1", Some("b4"), &[0, 0, 0, 0, 0, 0, 0, 1]),
        curve("b1_bot", "x2", Some("a4"), &[0, 0, 0, 0, 0, 0, 1, 0]),
        curve("a2_bot", "x3", Some("b3"), &[0, 0, 0, 0, 0, 1, 0, 0]),
        curve("b2_bot", "x4", Some("a3"), &[0, 0, 0, 0, 1, 0, 0, 0]),
        curve("L", "", Some("a2 b2 a2' b2' a3 b3 a3' b3'"), &[0; 8]),
    ];
    let geom = geom_table(
        &curves,
        &[
            ("x1", "K", 2),
            ("x2", "K", 2),
            ("x3", "K", 2),
            ("x4", "K", 2),
            ("x1", "a1_top", 1),
            ("x1", "a1_bot", 1),
            ("x2", "b1_top", 1),
            ("x2", "b1_bot", 1),
            ("x3", "a2_top", 1),
            ("x3", "a2_bot", 1),
            ("x4", "b2_top", 1),
            ("x4", "b2_bot", 1),
            ("a1_top", "b1_top", 1),
            ("a2_top", "b2_top", 1),
            ("a1_bot", "b1_bot", 1),
            ("a2_bot", "b2_bot", 1),
            ("L", "K", 2),
        ],
    );
    ScenarioData {
        name: "composite".into(),
        genus: 4,
        alphabet: names(&["x1", "x2", "x3", "x4"]),
        alg: pairing_table(&curves),
        curves,
        geom,
        monodromy_word: word(&[("a1_top", 1), ("b1_top", 1), ("a2_top", 1), ("b2_top", -1)]),
        knot: "K".into(),
        crossing_circles: word(&[("L", 1)]),
    }
}

pub fn catalog_data() -> Vec<ScenarioData> {
    vec![unknot_data(), trefoil_data(), figure_eight_data(), composite_data()]
}

/// All built-in scenarios, validated.
pub fn catalog() -> Vec<Scenario> {
    catalog_data()
        .into_iter()
        .map(|d| Scenario::from_data(d).expect("built-in scenarios are valid"))
        .collect()
}

pub fn catalog_scenario(name: &str) -> Result<Scenario> {
    catalog_data()
        .into_iter()
        .find(|d| d.name == name)
        .ok_or_else(|| Error::UnknownName(name.into()))
        .and_then(Scenario::from_data)
}

/// Classes of the scenario curves, by name.
pub fn class_of(s: &Scenario, name: &str) -> Result<HomologyClass> {
    Ok(s.curve(name)?.homology().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hn::model::double_monodromy;
    use crate::mcg::symplectic::transvection;
    use crate::words::{curve_is_essential, is_disc_busting, check_admissible, DiscBusting};

    #[test]
    fn catalog_scenarios_validate() {
        let all = catalog();
        assert_eq!(all.len(), 4);
        for s in &all {
            s.check_invariants().unwrap();
            for c in s.atlas.curves() {
                assert_eq!(c.is_separating(), c.homology().is_zero(), "{}", c.name());
                if let Some(p) = c.pi1_word() {
                    if s.fiber_genus() > 0 {
                        let sys = crate::hn::pi1::system_word(s.fiber_genus(), p).unwrap();
                        assert_eq!(&sys, &c.system_word().reduce(), "{} in {}", c.name(), s.name);
                    }
                }
            }
        }
    }

    #[test]
    fn unknot_has_a_disc_fiber() {
        assert_eq!(catalog_scenario("unknot").unwrap().fiber_genus(), 0);
    }

    #[test]
    fn figure_eight_orders() {
        let s = catalog_scenario("figure8").unwrap();
        let orders: Vec<i64> = s.model.crossing_circles.iter().map(|c| c.order).collect();
        assert_eq!(orders, vec![4, -4]);
    }

    #[test]
    fn trefoil_model_is_the_doubled_monodromy() {
        let s = catalog_scenario("trefoil").unwrap();
        let a = HomologyClass::from_coords(&[1, 0]).unwrap();
        let b = HomologyClass::from_coords(&[0, 1]).unwrap();
        let h = transvection(&a, 1).compose(&transvection(&b, 1)).unwrap();
        assert_eq!(s.model.model_map, double_monodromy(&h));
        assert_eq!(s.model.model_map.trace(), BigInt::from(3));
    }

    #[test]
    fn knots_are_disc_busting_and_admissible() {
        for name in ["trefoil", "figure8", "composite"] {
            let s = catalog_scenario(name).unwrap();
            let k = &s.model.knot;
            assert_eq!(is_disc_busting(&s.alphabet, k, &s.atlas).unwrap(), DiscBusting::DiscBustingUpToAtlas);
            assert!(check_admissible(&s.alphabet, k, &s.atlas).unwrap());
            assert_eq!(curve_is_essential(k), Some(true));
        }
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert!(matches!(catalog_scenario("granny"), Err(Error::UnknownName(_))));
    }
}
