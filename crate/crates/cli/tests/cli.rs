use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alg2d")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(stdout(args).trim()).unwrap()
}

fn lines(v: &Value) -> Vec<&str> {
    v["lines"].as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect()
}

#[test]
fn analyze_a12_over_gf5() {
    let r = json(&["analyze", "gf(5)", "0,0,0,0;1,0,0,0", "--json"]);
    assert_eq!(lines(&r["subalgebras"]), ["F(e2)"]);
    assert!(r["idempotents"]["points"].as_array().unwrap().is_empty());
    assert!(r["idempotents"]["family"].is_null());
    for q in ["left_ideals", "right_ideals", "two_sided"] {
        assert_eq!(lines(&r[q]).len(), 1, "{q}");
    }
    assert_eq!(r["simple"], false);
    assert_eq!(r["quasiunits"], "none");
}

#[test]
fn analyze_a11_over_gf11_with_oracle() {
    let r = json(&["analyze", "gf(11)", "0,1,1,0;1,0,0,10", "--oracle", "--json"]);
    assert_eq!(lines(&r["subalgebras"]).len(), 3);
    assert!(lines(&r["left_ideals"]).is_empty());
    assert!(lines(&r["right_ideals"]).is_empty());
    assert_eq!(r["simple"], true);
}

#[test]
fn analyze_zero_algebra_over_q() {
    let r = json(&["analyze", "q", "0,0,0,0;0,0,0,0", "--json"]);
    for q in ["subalgebras", "left_ideals", "right_ideals", "two_sided"] {
        assert_eq!(r[q], "all", "{q}");
    }
    let text = stdout(&["analyze", "q", "0,0,0,0;0,0,0,0"]);
    assert!(text.contains("left ideals (inf): every line"), "{text}");
}

#[test]
fn oracle_over_q_is_rejected() {
    let out = run(&["analyze", "q", "0,0,0,0;0,0,0,0", "--oracle"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("infinite"));
}

#[test]
fn analyze_closed_lifts() {
    let r = json(&["analyze", "gf(5)", "0,1,1,0;1,0,0,4", "--closed", "--oracle", "--json"]);
    assert_eq!(r["enumerated_over"], "gf(5,2)");
    assert_eq!(lines(&r["subalgebras"]).len(), 3);
}

#[test]
fn canonical_examples() {
    let r = json(&["canonical", "A_10", "ne23", "", "gf(5)", "--json"]);
    let quasi = r["predictions"].as_array().unwrap().iter().find(|l| l["quantity"] == "quasiunits").unwrap();
    assert_eq!(quasi["solved"], "4*e2");
    assert_eq!(quasi["verdict"], "agree");
    assert_eq!(r["analysis"]["quasiunits"], "4*e2");

    let r = json(&["canonical", "A_8", "ne23", "5", "gf(7)", "--json"]);
    assert_eq!(r["analysis"]["subalgebras"], "all");
    let sub = &r["predictions"][0];
    assert_eq!((sub["quantity"].as_str(), sub["predicted"].as_str()), (Some("subalgebras"), Some("inf")));

    let out = run(&["canonical", "A_9", "ne23", "", "gf(3)"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("characteristic 3"));

    let out = run(&["canonical", "A_2", "ne23", "1", "gf(5)"]);
    assert!(!out.status.success());
}

#[test]
fn verify_census_gf2() {
    let text = stdout(&["verify", "all", "gf(2)", "--budget", "exhaustive"]);
    assert!(text.contains("census over gf(2): 256 algebras (exhaustive), 0 oracle disagreements"), "{text}");
    let text = stdout(&["verify", "all", "gf(3)", "--budget", "exhaustive"]);
    assert!(text.contains("census over gf(3): 6561 algebras (exhaustive), 0 oracle disagreements"), "{text}");
}

#[test]
fn verify_a4_gf5_json_lines() {
    let out = stdout(&["verify", "A_4", "gf(5)", "--budget", "exhaustive", "--json"]);
    let rows: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 25 * 5);
    let tables: std::collections::BTreeSet<&str> =
        rows.iter().map(|r| r["citation"].as_str().unwrap().split(',').next().unwrap()).collect();
    assert_eq!(tables.into_iter().collect::<Vec<_>>(), ["Table 1", "Table 3", "Table 5", "Table 7", "Table 9"]);
    for r in &rows {
        for key in ["family", "regime", "params", "quantity", "predicted", "solved", "oracle", "verdict", "citation"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn verify_lists_errata_but_exits_zero() {
    let text = stdout(&["verify", "A_7", "gf(2)", "--budget", "exhaustive"]);
    assert!(text.contains("2 table mismatches, 0 oracle mismatches"), "{text}");
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "all", "gf(3,2)", "--budget", "200", "--seed", "11", "--json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn roots_examples() {
    let r = json(&["roots", "gf(7)", "5,0,0,0", "--json"]);
    assert_eq!(r["category"], "Zero");
    assert!(r["roots"].as_array().unwrap().is_empty());

    let r = json(&["roots", "gf(2)", "1,0,0,1", "--json"]);
    assert_eq!(r["category"], "Three");
    assert_eq!(r["roots"], serde_json::json!(["1"]));
    assert_eq!(r["splitting_field"], "gf(2,2)");
    assert_eq!(r["splitting_roots"].as_array().unwrap().len(), 3);

    let r = json(&["roots", "gf(5)", "0,0,0,0", "--json"]);
    assert_eq!(r["category"], "Infinite");
    assert!(r["roots"].is_null());

    let r = json(&["roots", "q", "-4,0,1", "--json"]);
    assert_eq!(r["roots"], serde_json::json!(["-2", "2"]));

    assert!(!run(&["roots", "gf(5)", "1,0,0,0,1"]).status.success());
}
