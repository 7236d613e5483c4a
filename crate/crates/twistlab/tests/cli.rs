// SPDX-License-Identifier: Apache-2.0

use std::process::Command;

use twistlab::report::Report;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn twistlab(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_twistlab"));
    cmd.args(args).env_remove("TWISTLAB_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn report(args: &[&str]) -> (i32, Report) {
    let r = twistlab(args, &[]);
    assert_eq!(r.stdout.lines().count(), 1, "{}", r.stdout);
    (r.code, serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{e}: {}", r.stderr)))
}

#[test]
fn bound_reports_the_exact_fraction() {
    let (code, r) = report(&["bound", "2", "1", "1"]);
    assert_eq!((code, r.verdict.as_str(), r.command.as_str()), (0, "31/30", "bound"));
    assert_eq!(r.inputs["k"], 2);
}

#[test]
fn reduce_cancels_to_the_empty_word() {
    let (code, r) = report(&["reduce", "x1 x1'"]);
    assert_eq!((code, r.verdict.as_str()), (0, ""));
    let (_, r) = report(&["reduce", "x2' x1 x2"]);
    assert_eq!(r.verdict, "x1");
}

#[test]
fn figure_eight_order_four_is_never_nugatory() {
    let (code, r) = report(&["nugatory", "figure8", "L1", "4"]);
    assert!(code == 0 || code == 3, "exit {code}");
    assert!(r.verdict == "Obstructed" || r.verdict == "Unknown", "{}", r.verdict);
    assert_eq!(code == 3, r.verdict == "Unknown");
}

#[test]
fn nugatory_verdicts_and_exit_codes() {
    let (code, r) = report(&["nugatory", "unknot", "L1", "1"]);
    assert_eq!((code, r.verdict.as_str()), (0, "Nugatory"));
    assert_eq!(r.certificates[0]["witness"], "DiscFiber");
    let (code, r) = report(&["nugatory", "composite", "L", "1"]);
    assert_eq!((code, r.verdict.as_str()), (0, "Nugatory"));
    assert_eq!(r.certificates[0]["witness"], "DiscBound");
    let (code, r) = report(&["nugatory", "trefoil", "L1", "-1", "--budget", "1"]);
    assert_eq!((code, r.verdict.as_str()), (3, "Unknown"));
    assert_eq!(r.inputs["budget"], 1);
}

#[test]
fn budget_comes_from_the_environment() {
    let r = twistlab(&["nugatory", "trefoil", "L1", "-1"], &[("TWISTLAB_BUDGET", "2")]);
    let rep: Report = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(rep.inputs["budget"], 2);
    let r = twistlab(&["nugatory", "trefoil", "L1", "-1", "--budget", "1"], &[("TWISTLAB_BUDGET", "2")]);
    let rep: Report = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(rep.inputs["budget"], 1);
    let r = twistlab(&["nugatory", "trefoil", "L1", "-1"], &[("TWISTLAB_BUDGET", "lots")]);
    assert_eq!(r.code, 2);
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        &["frobnicate"][..],
        &["bound", "2", "1"],
        &["bound", "1", "1", "1"],
        &["bound", "2", "1", "1", "--colour"],
        &["essential", "2", "c7"],
        &["disc-test", "nowhere", "x1"],
        &["disc-test", "trefoil", "nothing"],
        &["nugatory", "figure8", "K", "1"],
        &["nugatory", "figure8", "L1", "0"],
        &["twist", "1", "1,0,0", "1", "0,1"],
        &["adjacency", "builtin", "trefoil", "unknot", "0"],
        &["adjacency", "builtin", "trefoil", "cinquefoil", "2"],
        &["catalog", "--emit", "granny"],
    ] {
        let r = twistlab(args, &[]);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stdout);
        assert!(r.stdout.is_empty());
        assert!(!r.stderr.is_empty());
    }
    assert!(twistlab(&["frobnicate"], &[]).stderr.contains("Usage"));
}

#[test]
fn reports_are_deterministic_modulo_timing() {
    for args in [
        &["nugatory", "figure8", "L1", "4"][..],
        &["essential", "2", "a1 b1 a1' b1' a2 b2 a2' b2'"],
        &["catalog"],
        &["adjacency", "builtin", "unknot", "trefoil", "3"],
    ] {
        let (_, a) = report(args);
        let (_, b) = report(args);
        assert_eq!(a.without_timing(), b.without_timing());
    }
}

#[test]
fn verify_always_succeeds() {
    let cases: &[&[&str]] = &[
        &["reduce", "x1 x2 x2' x1'"],
        &["essential", "2", "a1 b1 a1' b1' a2 b2 a2' b2'"],
        &["essential", "3", "a1 b2 a3'"],
        &["twist", "2", "1,0,1,0", "3", "0,1,0,0"],
        &["bound", "3", "2", "24"],
        &["obstruct", "2", "1", "30", "1"],
        &["obstruct", "2", "1", "3", "1"],
        &["obstruct", "3", "1", "1", "1", "--mixed-signs"],
        &["disc-test", "trefoil", "x1"],
        &["disc-test", "trefoil", "K"],
        &["nugatory", "unknot", "L2", "-1"],
        &["nugatory", "composite", "L", "1"],
        &["nugatory", "trefoil", "L1", "-1"],
        &["nugatory", "figure8", "L2", "-4"],
        &["adjacency", "builtin", "trefoil", "unknot", "2"],
        &["adjacency", "builtin", "trefoil", "trefoil", "2"],
        &["catalog"],
    ];
    for args in cases {
        let mut full = args.to_vec();
        full.push("--verify");
        let (code, r) = report(&full);
        assert!(code == 0 || code == 3, "{args:?} exit {code}");
        assert_eq!(r.verified, Some(true), "{args:?}");
    }
}

#[test]
fn adjacency_follows_the_dichotomy() {
    let (_, r) = report(&["adjacency", "builtin", "trefoil", "unknot", "2"]);
    assert_eq!(r.verdict, "GenusGreaterHolds");
    assert_eq!(r.certificates[0]["genus_bound"], 1);
    let (_, r) = report(&["adjacency", "builtin", "unknot", "trefoil", "2"]);
    assert_eq!(r.verdict, "Inconsistent");
    let (_, r) = report(&["adjacency", "builtin", "unknot", "trefoil", "1"]);
    assert_eq!(r.verdict, "NotApplicable");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("knots.json");
    std::fs::write(
        &path,
        r#"[{"name":"unknot","genus":0,"fibered":true},{"name":"cinquefoil","genus":2,"fibered":true},{"name":"stevedore","genus":1,"fibered":false}]"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let (_, r) = report(&["adjacency", p, "cinquefoil", "unknot", "2"]);
    assert_eq!(r.verdict, "GenusGreaterHolds");
    let (_, r) = report(&["adjacency", p, "unknot", "stevedore", "2"]);
    assert_eq!(r.verdict, "NotApplicable");
}

#[test]
fn emitted_scenarios_load_from_disk() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["unknot", "trefoil", "figure8", "composite"] {
        let r = twistlab(&["catalog", "--emit", name], &[]);
        assert_eq!(r.code, 0);
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(&path, &r.stdout).unwrap();
        let circle = if name == "composite" { "L" } else { "L1" };
        let (_, from_file) = report(&["nugatory", path.to_str().unwrap(), circle, "1", "--budget", "1"]);
        let (_, builtin) = report(&["nugatory", name, circle, "1", "--budget", "1"]);
        assert_eq!(from_file.verdict, builtin.verdict);
        assert_eq!(from_file.certificates, builtin.certificates);
    }
    let pretty = twistlab(&["catalog", "--emit", "trefoil", "--pretty"], &[]);
    assert!(pretty.stdout.lines().count() > 1);
}

#[test]
fn explicit_files_win_over_catalog_names() {
    let dir = tempfile::tempdir().unwrap();
    let text = twistlab(&["catalog", "--emit", "unknot"], &[]).stdout;
    std::fs::write(dir.path().join("trefoil"), text).unwrap();
    let r = Command::new(env!("CARGO_BIN_EXE_twistlab"))
        .current_dir(dir.path())
        .args(["nugatory", "trefoil", "L1", "1"])
        .output()
        .unwrap();
    let rep: Report = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(rep.certificates[0]["witness"], "DiscFiber");
}

#[test]
fn malformed_scenario_files_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let good = twistlab(&["catalog", "--emit", "trefoil"], &[]).stdout;
    let mut v: serde_json::Value = serde_json::from_str(&good).unwrap();
    v["extra"] = 1.into();
    let cases = [
        ("extra.json", v.to_string()),
        ("broken.json", String::from("{")),
        ("asymmetric.json", good.replacen("[0,", "[1,", 1)),
    ];
    for (file, text) in cases {
        let path = dir.path().join(file);
        std::fs::write(&path, text).unwrap();
        let r = twistlab(&["disc-test", path.to_str().unwrap(), "x1"], &[]);
        assert_eq!(r.code, 2, "{file}");
    }
}

#[test]
fn help_and_version_exit_cleanly() {
    let r = twistlab(&["--help"], &[]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("nugatory"));
    let r = twistlab(&["--version"], &[]);
    assert_eq!(r.code, 0);
}
