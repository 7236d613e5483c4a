// SPDX-License-Identifier: Apache-2.0

//! HN-models of fibered knot complements and crossing changes on them.

pub mod catalog;
pub mod filters;
pub mod model;
pub mod nugatory;
pub mod pi1;
pub mod scenario;

pub use catalog::{catalog, catalog_data, catalog_scenario, CATALOG_NAMES};
pub use filters::{
    monodromy_conjugacy_filter, splitting_equivalence_filter, verify_splitting_witness, ConjugacyVerdict,
    SplittingVerdict,
};
pub use model::{double_monodromy, seifert_shadow, CrossingCircle, HNModel, SeifertShadow};
pub use nugatory::{
    nugatory_analysis, verify_report, NugatoryReport, NugatoryVerdict, NugatoryWitness, ObstructionCertificate,
};
pub use pi1::involution;
pub use scenario::{CurveData, Scenario, ScenarioData};
