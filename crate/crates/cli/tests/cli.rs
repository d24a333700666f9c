//! Exit-code contract and round-trip tests for every subcommand.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_negdom"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("negdom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, contents: &str) -> PathBuf {
    let path = tmp(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const F_STAR: &str =
    r#"{"outcomes":[{"coords":["4","-2"],"prob":"1/2"},{"coords":["-2","4"],"prob":"1/2"}]}"#;
const ZERO: &str = r#"{"outcomes":[{"coords":["0","0"],"prob":"1"}]}"#;
const QUAD_LOWER: &str =
    r#"{"outcomes":[{"coords":["-2","3"],"prob":"1/2"},{"coords":["3","-2"],"prob":"1/2"}]}"#;

#[test]
fn replay_writes_a_manifest_that_reproduces_through_check() {
    let out_path = tmp("prop1.json");
    let status = bin()
        .args(["replay", "prop1", "--json", out_path.to_str().unwrap()])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["verdict"], "contradiction-reproduced");

    // the embedded manifest re-runs through `check` and reproduces the
    // violation (exit 1)
    let u = write("prop1-universe.json", &doc["universe"].to_string());
    let g = write("prop1-generators.json", &doc["generators"].to_string());
    let out = bin()
        .args([
            "check",
            "--universe",
            u.to_str().unwrap(),
            "--generators",
            g.to_str().unwrap(),
            "--axioms",
            "negative-dominance",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("violated"));
}

#[test]
fn prop9_manifest_checks_clean_through_the_cli() {
    let out_path = tmp("prop9.json");
    let status = bin()
        .args(["replay", "prop9", "--json", out_path.to_str().unwrap()])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(doc["verdict"], "consistency-verified");
    let u = write("prop9-universe.json", &doc["universe"].to_string());
    let g = write("prop9-generators.json", &doc["generators"].to_string());
    let out = bin()
        .args([
            "check",
            "--universe",
            u.to_str().unwrap(),
            "--generators",
            g.to_str().unwrap(),
            "--axioms",
            "negative-dominance,good-expectations,stochastic-dominance-respect,comparable-independence",
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
}

#[test]
fn replay_rejects_unknown_ids_and_bad_params() {
    let out = bin().args(["replay", "prop99"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["replay", "prop2", "--a", "-1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["replay", "kfact", "--k", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_exit_codes_cover_holds_violated_and_undetermined() {
    // holds: the consistency generators on a tiny good universe
    let u = write(
        "holds-universe.json",
        r#"{"lotteries":[
            {"outcomes":[{"coords":["0","0"],"prob":"1"}]},
            {"outcomes":[{"coords":["2","2"],"prob":"1"}]},
            {"outcomes":[{"coords":["1","1"],"prob":"1"}]},
            {"outcomes":[{"coords":["0","0"],"prob":"1/2"},{"coords":["2","2"],"prob":"1/2"}]}
        ]}"#,
    );
    let g = write(
        "holds-generators.json",
        r#"{"rules":["pareto-lift","good-expectations","stochastic-dominance"],"declared":[]}"#,
    );
    let out = bin()
        .args([
            "check",
            "--universe",
            u.to_str().unwrap(),
            "--generators",
            g.to_str().unwrap(),
            "--axioms",
            "negative-dominance,good-expectations,stochastic-dominance-respect",
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    // not-determinable only: a certainty-equivalent query with no witness
    let u2 = write(
        "nd-universe.json",
        r#"{"lotteries":[
            {"outcomes":[{"coords":["1","1"],"prob":"1"}]},
            {"outcomes":[{"coords":["4","-2"],"prob":"1/2"},{"coords":["-2","4"],"prob":"1/2"}]}
        ]}"#,
    );
    let g2 = write(
        "nd-generators.json",
        r#"{"rules":["pareto-lift"],"declared":[]}"#,
    );
    let out = bin()
        .args([
            "check",
            "--universe",
            u2.to_str().unwrap(),
            "--generators",
            g2.to_str().unwrap(),
            "--axioms",
            "certainty-equivalents",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));

    // parse errors exit 2
    let bad = write("bad-universe.json", r#"{"lotteries":[{"outcomes":[]}]}"#);
    let out = bin()
        .args([
            "check",
            "--universe",
            bad.to_str().unwrap(),
            "--generators",
            g2.to_str().unwrap(),
            "--axioms",
            "negative-dominance",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dominance_exit_codes_and_witness_round_trip() {
    let f = write("f.json", F_STAR);
    let z = write("z.json", ZERO);
    let q = write("q.json", QUAD_LOWER);
    let out = bin()
        .args([
            "dominance",
            "--order",
            "pareto",
            f.to_str().unwrap(),
            z.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let witness_path = tmp("witness.json");
    let out = bin()
        .args([
            "dominance",
            "--order",
            "pareto",
            f.to_str().unwrap(),
            q.to_str().unwrap(),
            "--json",
            witness_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&witness_path).unwrap()).unwrap();
    assert_eq!(doc["dominates"], true);
    assert_eq!(doc["strict_mass"], "1");
    // the emitted witness re-parses to an equal in-memory coupling
    let coupling: negdom::json::CouplingJson =
        serde_json::from_value(doc["witness"].clone()).unwrap();
    let parsed = coupling.to_coupling().unwrap();
    assert_eq!(
        negdom::json::CouplingJson::from_coupling(&parsed)
            .to_coupling()
            .unwrap(),
        parsed
    );

    // the naive definition accepts the divergence instance
    let rf = write(
        "divergence-f.json",
        r#"{"outcomes":[{"coords":["2","2"],"prob":"3/4"},{"coords":["0","0"],"prob":"1/4"}]}"#,
    );
    let rg = write(
        "divergence-g.json",
        r#"{"outcomes":[{"coords":["2","0"],"prob":"1/3"},{"coords":["0","2"],"prob":"1/3"},{"coords":["2","2"],"prob":"1/3"}]}"#,
    );
    let naive = bin()
        .args([
            "dominance",
            "--order",
            "pareto",
            rf.to_str().unwrap(),
            rg.to_str().unwrap(),
            "--naive",
        ])
        .output()
        .unwrap();
    assert_eq!(naive.status.code(), Some(0));
    let coupling = bin()
        .args([
            "dominance",
            "--order",
            "pareto",
            rf.to_str().unwrap(),
            rg.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(coupling.status.code(), Some(3));

    // a malformed lottery names its deficit and exits 2
    let short = write(
        "short.json",
        r#"{"outcomes":[{"coords":["0","0"],"prob":"1/3"},{"coords":["1","1"],"prob":"1/2"}]}"#,
    );
    let out = bin()
        .args([
            "dominance",
            "--order",
            "pareto",
            short.to_str().unwrap(),
            z.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("deficit 1/6"));
}

#[test]
fn region_is_byte_deterministic_and_matches_spot_cells() {
    let run = || {
        let out = bin()
            .args(["region", "--order", "lines:2,1/2"])
            .output()
            .unwrap();
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap()
    };
    let a = run();
    let b = run();
    assert_eq!(a, b);
    assert!(a.lines().count() == 1 + 41 * 41);
    assert!(a.contains("\n1,3,strictly-above\n"));
    assert!(a.contains("\n2,-2,incomparable\n"));
    assert!(a.contains("\n0,0,equivalent\n"));

    let out = bin()
        .args(["region", "--order", "pareto", "--step", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_cli_is_deterministic_and_respects_the_guard() {
    let p1 = tmp("search1.json");
    let p2 = tmp("search2.json");
    for p in [&p1, &p2] {
        let out = bin()
            .args([
                "search",
                "--question",
                "open-q3",
                "--budget",
                "4",
                "--seed",
                "9",
                "--json",
                p.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    assert_eq!(std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());

    // the guard env var caps universe bounds
    let out = bin()
        .args([
            "search",
            "--question",
            "open-q3",
            "--budget",
            "1",
            "--max-universe",
            "400",
        ])
        .env("NEGDOM_SEARCH_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_bound_flags_are_applied() {
    let out = bin()
        .args([
            "search",
            "--question",
            "conjecture1",
            "--budget",
            "2",
            "--seed",
            "5",
            "--coord-bound",
            "2",
            "--denom-bound",
            "1",
            "--max-support",
            "2",
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn unknown_axioms_and_orders_exit_2() {
    let u = write("u-any.json", &format!(r#"{{"lotteries":[{ZERO}]}}"#));
    let g = write("g-any.json", r#"{"rules":[],"declared":[]}"#);
    let out = bin()
        .args([
            "check",
            "--universe",
            u.to_str().unwrap(),
            "--generators",
            g.to_str().unwrap(),
            "--axioms",
            "negative-dominance",
            "--order",
            "boxes",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args([
            "check",
            "--universe",
            u.to_str().unwrap(),
            "--generators",
            g.to_str().unwrap(),
            "--axioms",
            "negative dominance",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args([
            "check",
            "--universe",
            u.to_str().unwrap(),
            "--generators",
            g.to_str().unwrap(),
            "--axioms",
            "independence",
            "--alphas",
            "1/0",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
