// SPDX-License-Identifier: Apache-2.0

//! `twistlab` subcommands. Exit codes: 0 computed, 2 input error, 3 the
//! search budget ran out before a verdict, 1 a certificate failed `--verify`.

use std::ffi::OsString;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};
use twistlab_core::adjacency::{fibered_dichotomy, genus_bound, monotonicity_closure, AdjacencyClaim, AdjacencyVerdict};
use twistlab_core::hn::{
    catalog_data, nugatory_analysis, verify_report, NugatoryVerdict, NugatoryWitness, Scenario, CATALOG_NAMES,
};
use twistlab_core::mcg::{
    commutator_obstruction, intersection_pairing, kotschick_bound, transvection, twist_homology, HomologyClass,
    ObstructionKind,
};
use twistlab_core::words::surface::{decode, dehn_reduce_codes, encode};
use twistlab_core::words::{disc_bound_test, is_disc_busting, CyclicWord, DiscBusting};

use crate::formats::{catalog_entry, load_knot_table, load_scenario, ScenarioFile};
use crate::report::Report;
use crate::InputError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "twistlab", version, about = "Dehn twists, handlebody words and nugatory crossings")]
struct Cli {
    /// Pretty-print the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
    /// Re-check every certificate before printing.
    #[arg(long, global = true)]
    verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Freely and cyclically reduce a word, e.g. "x1 x2' x1".
    Reduce { word: String },
    /// Does a scenario curve bound a meridian disc?
    DiscTest { scenario: String, curve: String },
    /// Dehn's algorithm on a surface-group word.
    Essential { genus: usize, word: String },
    /// Image of the class b under T_a^q; classes are comma-separated.
    #[command(allow_negative_numbers = true)]
    Twist {
        genus: usize,
        #[arg(allow_hyphen_values = true)]
        a: String,
        q: i64,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Lower bound on the commutator length of f^q.
    #[command(allow_negative_numbers = true)]
    Bound { k: i64, m: i64, q: i64 },
    /// Test a claimed commutator length against the bound.
    #[command(allow_negative_numbers = true)]
    Obstruct {
        k: i64,
        m: i64,
        q: i64,
        cl: i64,
        /// The twists do not all have the same sign.
        #[arg(long)]
        mixed_signs: bool,
        /// Some twist curve may be inessential.
        #[arg(long)]
        inessential: bool,
    },
    /// Is the crossing circle nugatory?
    #[command(allow_negative_numbers = true)]
    Nugatory {
        scenario: String,
        circle: String,
        q: i64,
        /// Maximum conjugator length searched.
        #[arg(long, env = "TWISTLAB_BUDGET", default_value_t = 3)]
        budget: usize,
    },
    /// Fibered-target dichotomy for an n-adjacency claim.
    Adjacency {
        /// Knot table file, or `builtin`.
        table: String,
        source: String,
        target: String,
        n: u32,
    },
    /// List the built-in scenarios or print one as a scenario file.
    Catalog {
        #[arg(long)]
        emit: Option<String>,
    },
}

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let start = Instant::now();
    let result = match &cli.command {
        Command::Catalog { emit: Some(name) } => {
            return match catalog_entry(name) {
                Some(data) => {
                    let file = ScenarioFile::from(&data);
                    let text = if cli.pretty {
                        serde_json::to_string_pretty(&file)
                    } else {
                        serde_json::to_string(&file)
                    };
                    Outcome {
                        code: EXIT_OK,
                        stdout: text.expect("scenarios serialize") + "\n",
                        stderr: String::new(),
                    }
                }
                None => input_error(&InputError(format!("no catalog scenario named `{name}`"))),
            };
        }
        cmd => execute(cmd, cli.verify),
    };
    match result {
        Err(e) => input_error(&e),
        Ok((mut report, code)) => {
            report.timing.elapsed_us = start.elapsed().as_micros().try_into().unwrap_or(u64::MAX);
            let failed = report.verified == Some(false);
            Outcome {
                code: if failed { EXIT_VERIFY_FAILED } else { code },
                stdout: report.to_json(cli.pretty) + "\n",
                stderr: if failed {
                    String::from("certificate verification failed\n")
                } else {
                    String::new()
                },
            }
        }
    }
}

fn input_error(e: &InputError) -> Outcome {
    Outcome {
        code: EXIT_INPUT,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

fn parse_class(genus: usize, text: &str) -> Result<HomologyClass, InputError> {
    let coords = text
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|_| InputError(format!("bad coordinate `{s}` in `{text}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != 2 * genus {
        return Err(InputError(format!(
            "`{text}` needs {} coordinates for genus {genus}",
            2 * genus
        )));
    }
    Ok(HomologyClass::from_coords(&coords)?)
}

fn verified_if(verify: bool, check: impl FnOnce() -> Result<bool, InputError>) -> Result<Option<bool>, InputError> {
    if verify {
        check().map(Some)
    } else {
        Ok(None)
    }
}

fn execute(cmd: &Command, verify: bool) -> Result<(Report, i32), InputError> {
    match cmd {
        Command::Reduce { word } => {
            let w = CyclicWord::parse(word)?;
            let r = w.reduce();
            let mut report = Report::new("reduce", r.to_string()).input("word", word.as_str());
            report.verified = verified_if(verify, || Ok(r.reduce() == r && r.is_reduced()))?;
            Ok((report, EXIT_OK))
        }
        Command::DiscTest { scenario, curve } => {
            let s = load_scenario(scenario)?;
            let c = s.curve(curve)?;
            let bounds = disc_bound_test(&s.alphabet, c)?;
            let reduced = c.system_word().reduce();
            let busting = match is_disc_busting(&s.alphabet, c, &s.atlas)? {
                DiscBusting::DiscBustingUpToAtlas => json!({ "disc_busting": "DiscBustingUpToAtlas" }),
                DiscBusting::NotDiscBusting { witness } => {
                    json!({ "disc_busting": "NotDiscBusting", "witness": witness })
                }
                DiscBusting::Degenerate => json!({ "disc_busting": "Degenerate" }),
            };
            let mut report = Report::new("disc-test", bounds.to_string())
                .input("scenario", scenario.as_str())
                .input("curve", curve.as_str())
                .certificate(json!({ "reduced_system_word": reduced.to_string() }))
                .certificate(busting);
            report.verified = verified_if(verify, || {
                let again = CyclicWord::parse(&reduced.to_string())?;
                Ok(again.reduce() == again && again.is_empty() == bounds)
            })?;
            Ok((report, EXIT_OK))
        }
        Command::Essential { genus, word } => {
            let w = CyclicWord::parse(word)?;
            let verdict = twistlab_core::words::dehn_essential_test(*genus, &w)?;
            let codes = dehn_reduce_codes(*genus, &encode(*genus, &w)?);
            let reduced = decode(&codes);
            let label = format!("{verdict:?}");
            let mut report = Report::new("essential", label)
                .input("genus", *genus)
                .input("word", word.as_str())
                .certificate(json!({ "dehn_reduced": reduced.to_string() }));
            report.verified = verified_if(verify, || {
                let again = encode(*genus, &reduced)?;
                let stable = dehn_reduce_codes(*genus, &again) == again;
                Ok(stable && reduced.is_empty() == (verdict == twistlab_core::words::Essentiality::Trivial))
            })?;
            Ok((report, EXIT_OK))
        }
        Command::Twist { genus, a, q, b } => {
            let ca = parse_class(*genus, a)?;
            let cb = parse_class(*genus, b)?;
            let image = twist_homology(&ca, *q, &cb)?;
            let pairing = intersection_pairing(&ca, &cb)?;
            let mut report = Report::new("twist", image.to_string())
                .input("genus", *genus)
                .input("a", a.as_str())
                .input("q", *q)
                .input("b", b.as_str())
                .certificate(json!({ "pairing": pairing.to_string() }));
            report.verified = verified_if(verify, || {
                let by_matrix = transvection(&ca, *q).apply(&cb)?;
                let by_formula = cb.checked_add(&ca.scaled(&(pairing.clone() * BigInt::from(*q))))?;
                Ok(by_matrix == image && by_formula == image)
            })?;
            Ok((report, EXIT_OK))
        }
        Command::Bound { k, m, q } => {
            let bound = kotschick_bound(*k, *m, *q)?;
            let mut report = Report::new("bound", bound.to_string())
                .input("k", *k)
                .input("m", *m)
                .input("q", *q);
            report.verified = verified_if(verify, || {
                let den = BigInt::from(18 * k - 6);
                Ok(&bound * BigRational::from_integer(den.clone()) == BigRational::from_integer(den + q * m))
            })?;
            Ok((report, EXIT_OK))
        }
        Command::Obstruct {
            k,
            m,
            q,
            cl,
            mixed_signs,
            inessential,
        } => {
            let v = commutator_obstruction(*k, *m, *q, *cl, !mixed_signs, !inessential)?;
            let mut report = Report::new("obstruct", format!("{:?}", v.kind))
                .input("k", *k)
                .input("m", *m)
                .input("q", *q)
                .input("cl", *cl)
                .input("mixed_signs", *mixed_signs)
                .input("inessential", *inessential)
                .certificate(json!({ "bound": v.bound.to_string(), "detail": v.detail }));
            report.verified = verified_if(verify, || {
                let expected = match kotschick_bound(*k, *m, q.abs()) {
                    Ok(b) => b,
                    Err(_) => return Ok(v.kind == ObstructionKind::NotApplicable),
                };
                let exceeds = expected > BigRational::from_integer(BigInt::from(*cl));
                Ok(match v.kind {
                    ObstructionKind::Contradiction => {
                        !mixed_signs && !inessential && exceeds && v.bound == expected
                    }
                    ObstructionKind::NotApplicable => *mixed_signs,
                    ObstructionKind::Consistent => {
                        !mixed_signs && (*inessential || !exceeds || (*k == 2 && q % 10 != 0))
                    }
                })
            })?;
            Ok((report, EXIT_OK))
        }
        Command::Nugatory {
            scenario,
            circle,
            q,
            budget,
        } => {
            let s = load_scenario(scenario)?;
            let r = nugatory_analysis(&s, circle, *q, *budget)?;
            let mut report = Report::new("nugatory", r.verdict.label())
                .input("scenario", scenario.as_str())
                .input("circle", circle.as_str())
                .input("q", *q)
                .input("budget", *budget)
                .certificate(nugatory_certificate(&r.verdict))
                .certificate(json!({ "trace": r.trace }));
            report.verified = verified_if(verify, || Ok(verify_report(&s, circle, *q, &r)?))?;
            let code = match r.verdict {
                NugatoryVerdict::Unknown { .. } => EXIT_UNKNOWN,
                _ => EXIT_OK,
            };
            Ok((report, code))
        }
        Command::Adjacency {
            table,
            source,
            target,
            n,
        } => {
            let knots = load_knot_table(table)?;
            let find = |name: &str| {
                knots
                    .iter()
                    .find(|k| k.name == *name)
                    .cloned()
                    .ok_or_else(|| InputError(format!("knot `{name}` is not in the table")))
            };
            let claim = AdjacencyClaim::new(find(source)?, find(target)?, *n)?;
            let verdict = fibered_dichotomy(&claim);
            let g = genus_bound(claim.source.genus.into(), claim.target.genus.into())?;
            let closure: Vec<(u32, AdjacencyVerdict)> = monotonicity_closure(&claim)
                .iter()
                .map(|c| (c.n, fibered_dichotomy(c)))
                .collect();
            let mut report = Report::new("adjacency", format!("{verdict:?}"))
                .input("table", table.as_str())
                .input("source", source.as_str())
                .input("target", target.as_str())
                .input("n", *n)
                .certificate(json!({ "genus_bound": g }))
                .certificate(json!({
                    "closure": closure
                        .iter()
                        .map(|(m, v)| json!({ "n": m, "verdict": format!("{v:?}") }))
                        .collect::<Vec<_>>()
                }));
            report.verified = verified_if(verify, || {
                let agree = closure
                    .iter()
                    .filter(|(m, _)| *m >= 2)
                    .all(|(_, v)| *v == verdict);
                let gs = (i64::from(claim.source.genus), i64::from(claim.target.genus));
                Ok(agree && closure.len() == *n as usize && g >= gs.0 && g >= gs.1 && (g == gs.0 || g == gs.1))
            })?;
            Ok((report, EXIT_OK))
        }
        Command::Catalog { .. } => {
            let mut report = Report::new("catalog", CATALOG_NAMES.join(","));
            for data in catalog_data() {
                let s = Scenario::from_data(data)?;
                report = report.certificate(json!({
                    "name": s.name,
                    "surface_genus": s.model.surface_genus(),
                    "knot": s.model.knot.name(),
                    "crossing_circles": s
                        .model
                        .crossing_circles
                        .iter()
                        .map(|c| json!({ "curve": c.curve.name(), "order": c.order }))
                        .collect::<Vec<_>>(),
                }));
            }
            report.verified = verified_if(verify, || {
                Ok(CATALOG_NAMES
                    .iter()
                    .all(|n| catalog_entry(n).is_some_and(|d| Scenario::from_data(d).is_ok())))
            })?;
            Ok((report, EXIT_OK))
        }
    }
}

fn nugatory_certificate(v: &NugatoryVerdict) -> Value {
    match v {
        NugatoryVerdict::Nugatory(NugatoryWitness::DiscFiber) => json!({ "witness": "DiscFiber" }),
        NugatoryVerdict::Nugatory(NugatoryWitness::TrivialWord { pi1_word }) => {
            json!({ "witness": "TrivialWord", "pi1_word": pi1_word.to_string() })
        }
        NugatoryVerdict::Nugatory(NugatoryWitness::DiscBound { image }) => {
            json!({ "witness": "DiscBound", "image": image.to_string() })
        }
        NugatoryVerdict::Obstructed(c) => json!({
            "obstruction": {
                "conjugator": c.conjugator.to_string(),
                "bound": c.bound.to_string(),
                "detail": c.detail,
            }
        }),
        NugatoryVerdict::Unknown { budget } => json!({ "budget": budget }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(args: &[&str]) -> (i32, Report) {
        let mut argv = vec!["twistlab"];
        argv.extend_from_slice(args);
        let out = run(argv);
        let r = serde_json::from_str(out.stdout.trim()).unwrap_or_else(|e| panic!("{e}: {out:?}"));
        (out.code, r)
    }

    #[test]
    fn class_parsing_accepts_both_spellings() {
        assert_eq!(parse_class(1, "1,-2").unwrap(), parse_class(1, "(1, -2)").unwrap());
        assert!(parse_class(2, "1,0").is_err());
        assert!(parse_class(1, "1,x").is_err());
    }

    #[test]
    fn obstruct_verdicts_follow_the_rule() {
        let (_, r) = report(&["obstruct", "3", "1", "60", "1", "--verify"]);
        assert_eq!(r.verdict, "Contradiction");
        assert_eq!(r.verified, Some(true));
        let (_, r) = report(&["obstruct", "3", "1", "60", "1", "--mixed-signs", "--verify"]);
        assert_eq!(r.verdict, "NotApplicable");
        assert_eq!(r.verified, Some(true));
        let (_, r) = report(&["obstruct", "2", "1", "7", "1", "--verify"]);
        assert_eq!(r.verdict, "Consistent");
        assert_eq!(r.verified, Some(true));
        let (_, r) = report(&["obstruct", "3", "1", "60", "1", "--inessential", "--verify"]);
        assert_eq!(r.verdict, "Consistent");
        assert_eq!(r.verified, Some(true));
    }

    #[test]
    fn twist_accepts_negative_arguments() {
        let (code, r) = report(&["twist", "1", "-1,0", "-2", "0,1", "--verify"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(r.verdict, "(-2,1)");
        assert_eq!(r.verified, Some(true));
    }
}
