//! End-to-end runs of the binary: exit codes, golden JSON reports, and
//! certificates that survive a trip back through the text format.
//!
//! Golden files live in `tests/golden/`; run with `FINCAT_BLESS=1` to
//! rewrite them after an intended change.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

/// Runs the binary from the fixtures directory so that file arguments, and
/// therefore the echoed command, are the same on every machine.
fn fincat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fincat"))
        .current_dir(fixture(""))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn golden(name: &str, args: &[&str], expected_code: i32) {
    let out = fincat(args);
    assert_eq!(
        code(&out),
        expected_code,
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let actual = String::from_utf8(out.stdout).unwrap();
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("FINCAT_BLESS").is_some() {
        std::fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

#[test]
fn golden_reports() {
    golden(
        "validate-indiscrete.json",
        &["validate", "indiscrete.cat", "--json"],
        0,
    );
    golden(
        "validate-magma.json",
        &["validate", "magma.cat", "--json"],
        1,
    );
    golden(
        "biproducts-indiscrete-oracle.json",
        &[
            "biproducts",
            "indiscrete.cat",
            "--pair",
            "A,B",
            "--oracle",
            "--json",
        ],
        0,
    );
    golden(
        "check-witness-arrow.json",
        &[
            "check-witness",
            "walking_arrow.cat",
            "--witness",
            "w",
            "--json",
        ],
        1,
    );
    golden(
        "verify-ambiadjunction.json",
        &[
            "verify",
            "indiscrete.cat",
            "--theorem",
            "ambiadjunction",
            "--json",
        ],
        0,
    );
    golden("zeros-indiscrete.txt", &["zeros", "indiscrete.cat"], 0);
    golden(
        "chain-missing.json",
        &["validate", "chain.cat", "--json"],
        2,
    );
}

#[test]
fn exit_codes() {
    assert_eq!(code(&fincat(&["validate", "indiscrete.cat"])), 0);
    assert_eq!(code(&fincat(&["validate", "magma.cat"])), 1);
    assert_eq!(code(&fincat(&["validate", "chain.cat"])), 2);
    assert_eq!(
        code(&fincat(&["validate", "chain.cat", "--free-compose"])),
        0
    );
    assert_eq!(code(&fincat(&["validate", "no-such-file.cat"])), 2);
    assert_eq!(code(&fincat(&["biproducts", "indiscrete.cat"])), 2);
    assert_eq!(
        code(&fincat(&["biproducts", "indiscrete.cat", "--pair", "A,Q"])),
        2
    );
    assert_eq!(
        code(&fincat(&[
            "check-witness",
            "indiscrete.cat",
            "--witness",
            "nope"
        ])),
        2
    );
    assert_eq!(code(&fincat(&["gallery", "finset", "--max-size", "9"])), 3);
    assert_eq!(
        code(&fincat(&[
            "verify",
            "walking_arrow.cat",
            "--theorem",
            "corollary"
        ])),
        0
    );
    assert_eq!(
        code(&fincat(&[
            "biproducts",
            "walking_arrow.cat",
            "--pair",
            "A,B"
        ])),
        1
    );
    assert_eq!(
        code(&fincat(&["biproducts", "walking_arrow.cat", "--all-pairs"])),
        0
    );
    // every command on a table that is not a category stops at validation
    assert_eq!(code(&fincat(&["zeros", "magma.cat"])), 1);
}

#[test]
fn reports_are_stable_and_counterexamples_replay() {
    let args = [
        "biproducts",
        "indiscrete.cat",
        "--all-pairs",
        "--oracle",
        "--json",
    ];
    assert_eq!(fincat(&args).stdout, fincat(&args).stdout);
    let report = json(&fincat(&["validate", "magma.cat", "--json"]));
    let cx = &report["checks"][0]["counterexample"];
    assert_eq!(cx["kind"], "not_associative");
    assert_eq!(cx["replays"], true);
    assert_ne!(cx["left"], cx["right"]);
    let timed = json(&fincat(&[
        "validate",
        "indiscrete.cat",
        "--json",
        "--timing",
    ]));
    assert!(timed["timing_ms"].as_f64().is_some());
}

#[test]
fn errors_are_json_with_json_flag() {
    let out = fincat(&["validate", "chain.cat", "--json"]);
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "parse");
    assert!(v["error"]["message"]
        .as_str()
        .unwrap()
        .contains("6:1: missing composition `g . f`"));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
}

/// Builds a witness declaration from a certificate in a report.
fn witness_block(name: &str, cert: &Value) -> String {
    let mut s = format!(
        "\nwitness {name} {{ carrier: \"{}\";",
        cert["carrier"].as_str().unwrap()
    );
    for leg in cert["legs"].as_array().unwrap() {
        s += &format!(
            " {} = \"{}\";",
            leg["role"].as_str().unwrap(),
            leg["morphism"].as_str().unwrap()
        );
    }
    s + " }\n"
}

#[test]
fn emitted_gallery_certificates_check_under_every_definition() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("ab.cat");
    let f = file.to_str().unwrap();
    assert_eq!(
        code(&fincat(&["gallery", "ab", "--rank", "2", "--emit", f])),
        0
    );
    let report = json(&fincat(&["biproducts", f, "--pair", "Z2,Z2", "--json"]));
    let certs = report["checks"][0]["certificates"].as_array().unwrap();
    assert!(!certs.is_empty());
    let mut text = std::fs::read_to_string(&file).unwrap();
    for (k, c) in certs.iter().enumerate() {
        text += &witness_block(&format!("w{k}"), c);
    }
    std::fs::write(&file, text).unwrap();
    for k in 0..certs.len() {
        for def in ["new", "zero", "cmon"] {
            let w = format!("w{k}");
            let out = fincat(&["check-witness", f, "--witness", &w, "--definition", def]);
            assert_eq!(
                code(&out),
                0,
                "{w} {def}: {}",
                String::from_utf8_lossy(&out.stdout)
            );
        }
    }
    let out = fincat(&[
        "verify",
        f,
        "--theorem",
        "uniqueness",
        "--witness",
        "w0",
        "--witness",
        "w1",
    ]);
    assert_eq!(code(&out), 0);
    let out = fincat(&[
        "verify",
        f,
        "--theorem",
        "sum-eq-prod",
        "--witness",
        "w0",
        "--witness",
        "w1",
        "--f",
        "id_Z2",
        "--g",
        "id_Z2",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn gallery_builders_are_reachable_with_specs() {
    let cases: [&[&str]; 9] = [
        &["gallery", "pointed", "--max-size", "2"],
        &["gallery", "preorder", "--kind", "diamond"],
        &[
            "gallery",
            "preorder",
            "--spec",
            r#"{"elements":["a","b"],"relation":[["a","a"],["b","b"],["a","b"]]}"#,
        ],
        &["gallery", "ab", "--groups", "2,3"],
        &["gallery", "semigroup"],
        &["gallery", "con"],
        &[
            "gallery",
            "random",
            "--seed",
            "7",
            "--spec",
            r#"{"max_morphisms":20}"#,
        ],
        &["gallery", "indiscrete-3"],
        &["gallery", "ab-trivial"],
    ];
    for args in cases {
        let out = fincat(args);
        assert_eq!(
            code(&out),
            0,
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    assert_eq!(code(&fincat(&["gallery", "nonsense"])), 2);
    assert_eq!(code(&fincat(&["gallery", "preorder", "--spec", "{"])), 2);
}
