//! The exports run natively too; these drive them the way the page does.

use fincat_web::{biproducts, check_witnesses, gallery_names, gallery_source, validate};
use serde_json::Value;

fn fixture(name: &str) -> String {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/fixtures/");
    std::fs::read_to_string(format!("{path}{name}")).unwrap()
}

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|e| panic!("not JSON ({e}): {s}"))
}

#[test]
fn validate_reports_pass_fail_and_parse_errors() {
    let ok = parse(&validate(&fixture("indiscrete.cat"), false));
    assert_eq!(ok["outcome"], "pass");
    assert_eq!(ok["command"][0], "validate");

    let bad = parse(&validate(&fixture("magma.cat"), false));
    assert_eq!(bad["outcome"], "fail");
    assert_eq!(bad["checks"][0]["counterexample"]["replays"], true);

    let missing = parse(&validate(&fixture("chain.cat"), false));
    assert_eq!(missing["error"]["kind"], "parse");
    let derived = parse(&validate(&fixture("chain.cat"), true));
    assert_eq!(derived["outcome"], "pass");
    assert_eq!(derived["command"][2], "--free-compose");
}

#[test]
fn biproducts_cover_every_pair_of_the_indiscrete_category() {
    let r = parse(&biproducts(&fixture("indiscrete.cat"), false));
    let checks = r["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 4);
    assert!(checks.iter().all(|c| c["outcome"] == "pass"));
    assert!(checks
        .iter()
        .all(|c| !c["certificates"].as_array().unwrap().is_empty()));

    // X + X would need both projections to be the identity, and then the
    // pair (1, e) has no mediating morphism
    let idempotent = "category E { objects: X; morphisms: e: X -> X; id X = 1; e . e = e; }";
    let none = parse(&biproducts(idempotent, false));
    assert_eq!(none["outcome"], "pass");
    assert_eq!(
        none["checks"][0]["notes"][0],
        "no pair has a biproduct in this fragment"
    );

    let broken = parse(&biproducts(&fixture("magma.cat"), false));
    assert_eq!(broken["outcome"], "fail");
    assert_eq!(broken["checks"].as_array().unwrap().len(), 1);
}

#[test]
fn declared_witnesses_are_checked_under_both_definitions() {
    let r = parse(&check_witnesses(&fixture("indiscrete.cat"), false));
    let labels: Vec<&str> = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["check"].as_str().unwrap())
        .collect();
    assert!(labels.iter().any(|l| l.ends_with("(new)")));
    assert!(labels.iter().any(|l| l.ends_with("(zero)")));
    assert_eq!(r["outcome"], "pass");

    let mistyped = parse(&check_witnesses(&fixture("walking_arrow.cat"), false));
    assert_eq!(mistyped["outcome"], "fail");
}

#[test]
fn every_gallery_entry_loads_and_validates() {
    let names: Vec<String> = serde_json::from_str(&gallery_names()).unwrap();
    assert!(names.len() > 10);
    for name in &names {
        let src = gallery_source(name);
        assert!(!src.is_empty(), "{name}");
        let r = parse(&validate(&src, false));
        assert_eq!(r["outcome"], "pass", "{name}");
        assert_eq!(r["category"]["name"], name.as_str());
    }
    assert_eq!(gallery_source("no-such-entry"), "");
}
