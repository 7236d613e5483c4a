// SPDX-License-Identifier: Apache-2.0

//! Deciding whether a crossing change is nugatory, at desk scale.
//!
//! The pipeline for a crossing circle `L` of order `q` in a model `(Σ, g)`:
//!
//! 1. A disc fiber, or `L` null-homotopic on `Σ`, makes the crossing nugatory.
//! 2. Case A: look for `H` with `H g H^{-1} = g T_L^{-q}` on homology. Then
//!    `T_L^{-q} = [g^{-1}, H]` has commutator length one, which the
//!    commutator bound may contradict.
//! 3. Case B: if `g(L)` bounds a meridian disc of the handlebody, `L` bounds
//!    a disc in the complement.
//! 4. Otherwise the answer is unknown at this budget.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;

use super::filters::{monodromy_conjugacy_filter, ConjugacyVerdict};
use super::pi1::{apply_twists, system_word, GeneratorTwist};
use super::scenario::Scenario;
use crate::error::{bail, Result};
use crate::mcg::homology::HomologyClass;
use crate::mcg::matrix::IntMatrix;
use crate::mcg::obstruction::{commutator_obstruction, ObstructionKind};
use crate::mcg::symplectic::{SpElement, TwistWord};
use crate::words::surface::{dehn_essential_test, Essentiality};
use crate::words::{Curve, CyclicWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NugatoryWitness {
    /// The fiber is a disc.
    DiscFiber,
    /// The crossing circle's `pi_1` word is trivial on `Σ`.
    TrivialWord { pi1_word: CyclicWord },
    /// `g(L)` has `pi_1` word `image`, whose system word reduces to empty.
    DiscBound { image: CyclicWord },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionCertificate {
    /// `H` with `H g H^{-1} = g T_L^{-q}` on homology.
    pub conjugator: TwistWord,
    pub bound: BigRational,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NugatoryVerdict {
    Nugatory(NugatoryWitness),
    Obstructed(ObstructionCertificate),
    Unknown { budget: usize },
}

impl NugatoryVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            NugatoryVerdict::Nugatory(_) => "Nugatory",
            NugatoryVerdict::Obstructed(_) => "Obstructed",
            NugatoryVerdict::Unknown { .. } => "Unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NugatoryReport {
    pub verdict: NugatoryVerdict,
    pub trace: Vec<String>,
}

/// Resolves the model word to twist automorphisms of `pi_1(Σ)`, when every
/// twist curve is a single generator.
fn pi1_twists(s: &Scenario) -> Option<Vec<GeneratorTwist>> {
    let genus = s.model.surface_genus();
    s.model
        .model_word
        .letters()
        .iter()
        .map(|l| {
            let c = s.atlas.curve(&l.curve).ok()?;
            GeneratorTwist::from_word(genus, c.pi1_word()?, l.exponent)
        })
        .collect()
}

/// The `pi_1` word of `g(L)`, when it can be computed.
pub fn image_word(s: &Scenario, l: &Curve) -> Option<CyclicWord> {
    let twists = pi1_twists(s)?;
    Some(apply_twists(&twists, l.pi1_word()?))
}

/// Transvection generators for the Case A search: one per distinct nonzero
/// atlas class up to sign, in atlas order.
fn search_generators(s: &Scenario) -> Vec<(String, HomologyClass)> {
    let mut seen: Vec<HomologyClass> = Vec::new();
    let mut out = Vec::new();
    for c in s.atlas.curves() {
        let h = c.homology();
        if h.is_zero() || seen.iter().any(|v| v == h || *v == h.neg()) {
            continue;
        }
        seen.push(h.clone());
        out.push((String::from(c.name()), h.clone()));
    }
    out
}

/// Length-lex search for `H` with `H g = target H`, up to `budget` letters.
fn find_conjugator(
    gens: &[(String, HomologyClass)],
    g: &IntMatrix,
    target: &IntMatrix,
    genus: usize,
    budget: usize,
) -> Option<TwistWord> {
    fn dfs(
        gens: &[(String, HomologyClass)],
        g: &IntMatrix,
        target: &IntMatrix,
        depth: usize,
        word: &mut Vec<(usize, i64)>,
        h: &SpElement,
    ) -> bool {
        if depth == 0 {
            return (h.matrix() * g) == (target * h.matrix());
        }
        for (i, (_, class)) in gens.iter().enumerate() {
            for e in [1i64, -1] {
                if word.last() == Some(&(i, -e)) {
                    continue;
                }
                word.push((i, e));
                let next = h.then_twist(class, e);
                if dfs(gens, g, target, depth - 1, word, &next) {
                    return true;
                }
                word.pop();
            }
        }
        false
    }
    for len in 0..=budget {
        let mut word = Vec::new();
        if dfs(gens, g, target, len, &mut word, &SpElement::identity(genus)) {
            let mut tw = TwistWord::empty(genus);
            for (i, e) in word {
                tw.push(&gens[i].0, e);
            }
            return Some(tw);
        }
    }
    None
}

/// Runs the nugatory pipeline for the crossing circle `l_name` with order `q`.
pub fn nugatory_analysis(s: &Scenario, l_name: &str, q: i64, budget: usize) -> Result<NugatoryReport> {
    if q == 0 {
        bail!(Domain, "crossing change order must be nonzero");
    }
    let Some(circle) = s.model.crossing_circle(l_name) else {
        bail!(Precondition, "`{l_name}` is not a crossing circle of `{}`", s.name);
    };
    let l = &circle.curve;
    let mut trace = Vec::new();

    if s.fiber_genus() == 0 {
        trace.push(String::from("step 1: the fiber is a disc"));
        return Ok(NugatoryReport {
            verdict: NugatoryVerdict::Nugatory(NugatoryWitness::DiscFiber),
            trace,
        });
    }
    let genus = s.model.surface_genus();
    let essential = match l.pi1_word() {
        Some(w) if genus >= 2 => {
            let v = dehn_essential_test(genus, w)?;
            if v == Essentiality::Trivial {
                trace.push(format!("step 1: pi_1 word `{w}` of {l_name} is trivial"));
                return Ok(NugatoryReport {
                    verdict: NugatoryVerdict::Nugatory(NugatoryWitness::TrivialWord { pi1_word: w.clone() }),
                    trace,
                });
            }
            trace.push(format!("step 1: pi_1 word `{w}` of {l_name} is essential"));
            true
        }
        _ => {
            let e = !l.homology().is_zero();
            trace.push(format!("step 1: no pi_1 word; essential from homology: {e}"));
            e
        }
    };

    let g = &s.model.model_map;
    if l.homology().is_zero() {
        trace.push(String::from("case A: skipped, L is null-homologous"));
    } else {
        let g_prime = g.then_twist(l.homology(), -q);
        match monodromy_conjugacy_filter(g, &g_prime)? {
            ConjugacyVerdict::DistinctCertified { reason } => {
                trace.push(format!("case A: g and g T_L^{} are not conjugate ({reason})", -q));
            }
            ConjugacyVerdict::PossiblyConjugate => {
                let gens = search_generators(s);
                match find_conjugator(&gens, g.matrix(), g_prime.matrix(), genus, budget) {
                    None => trace.push(format!("case A: no conjugator of length <= {budget}")),
                    Some(h) => {
                        trace.push(format!("case A: conjugator H = {h}"));
                        let v = commutator_obstruction(genus as i64, 1, q.abs(), 1, true, essential)?;
                        trace.push(format!("case A: {}", v.detail));
                        if v.kind == ObstructionKind::Contradiction {
                            return Ok(NugatoryReport {
                                verdict: NugatoryVerdict::Obstructed(ObstructionCertificate {
                                    conjugator: h,
                                    bound: v.bound,
                                    detail: v.detail,
                                }),
                                trace,
                            });
                        }
                    }
                }
            }
        }
    }

    match image_word(s, l) {
        None => trace.push(String::from("case B: g(L) is not computable from the model word")),
        Some(image) => {
            let sys = system_word(s.fiber_genus(), &image)?;
            if sys.is_empty() {
                trace.push(format!("case B: g(L) = `{image}` bounds a meridian disc"));
                return Ok(NugatoryReport {
                    verdict: NugatoryVerdict::Nugatory(NugatoryWitness::DiscBound { image }),
                    trace,
                });
            }
            trace.push(format!("case B: g(L) = `{image}` has system word `{sys}`"));
        }
    }
    trace.push(format!("unknown at budget {budget}"));
    Ok(NugatoryReport {
        verdict: NugatoryVerdict::Unknown { budget },
        trace,
    })
}

/// Re-checks the witness or certificate carried by a report.
pub fn verify_report(s: &Scenario, l_name: &str, q: i64, report: &NugatoryReport) -> Result<bool> {
    let Some(circle) = s.model.crossing_circle(l_name) else {
        bail!(Precondition, "`{l_name}` is not a crossing circle of `{}`", s.name);
    };
    let l = &circle.curve;
    Ok(match &report.verdict {
        NugatoryVerdict::Unknown { .. } => true,
        NugatoryVerdict::Nugatory(NugatoryWitness::DiscFiber) => s.fiber_genus() == 0,
        NugatoryVerdict::Nugatory(NugatoryWitness::TrivialWord { pi1_word }) => {
            l.pi1_word() == Some(pi1_word)
                && dehn_essential_test(s.model.surface_genus(), pi1_word)? == Essentiality::Trivial
        }
        NugatoryVerdict::Nugatory(NugatoryWitness::DiscBound { image }) => {
            image_word(s, l).as_ref() == Some(image) && system_word(s.fiber_genus(), image)?.is_empty()
        }
        NugatoryVerdict::Obstructed(cert) => {
            let g = &s.model.model_map;
            let target = g.then_twist(l.homology(), -q);
            let h = cert
                .conjugator
                .eval(|name| s.atlas.curve(name).ok().map(|c| c.homology().clone()))?;
            let conj = (h.matrix() * g.matrix()) == (target.matrix() * h.matrix());
            let v = commutator_obstruction(s.model.surface_genus() as i64, 1, q.abs(), 1, true, true)?;
            conj && v.kind == ObstructionKind::Contradiction && v.bound == cert.bound
        }
    })
}
