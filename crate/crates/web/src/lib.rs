//! WebAssembly bindings for the demo page in `www/`.
//!
//! Every export takes the text of a category description and returns a JSON
//! report with the same schema the command-line tool prints, or an object
//! with an `error` field when the text does not load.

use fincat::biproduct::{check_biproduct, check_zero_def_biproduct, find_biproducts};
use fincat::category::{find_zero_structure, validate_category};
use fincat::dsl::{load, render, CatDoc, Compiled, ParseOptions};
use fincat::gallery::standard_gallery;
use fincat::report::{CategorySummary, Certificate, Check, Outcome, Report, SCHEMA_VERSION};
use fincat::Category;
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

/// Label echoed as the input file in every report.
const SOURCE: &str = "<editor>";

fn error_json(command: &[&str], kind: &str, message: String) -> String {
    serde_json::to_string_pretty(&json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "error": { "kind": kind, "message": message },
    }))
    .expect("serializable")
}

fn echo(command: &str, free_compose: bool) -> Vec<&str> {
    let mut v = vec![command, SOURCE];
    if free_compose {
        v.push("--free-compose");
    }
    v
}

/// Loads `src`, or returns the error report to hand back unchanged.
fn load_or_error(
    src: &str,
    free_compose: bool,
    command: &[&str],
) -> Result<(String, Compiled), String> {
    load(src, ParseOptions { free_compose })
        .map(|(doc, compiled)| (doc.name, compiled))
        .map_err(|e| {
            let kind = if e.is_resource_guard() {
                "resource_guard"
            } else {
                "parse"
            };
            error_json(command, kind, e.to_string())
        })
}

fn new_report(command: &[&str], name: &str, c: &Compiled) -> Report {
    Report::new(
        command.iter().map(|s| s.to_string()).collect(),
        Some(CategorySummary::new(name, &c.cat, c.cmon.as_ref())),
    )
}

/// Runs `body` on a loaded category that satisfies the axioms; otherwise
/// the report carries only the failed validation.
fn with_valid(
    command: &str,
    src: &str,
    free_compose: bool,
    body: impl FnOnce(&Compiled, &mut Report),
) -> String {
    let command = echo(command, free_compose);
    let (name, c) = match load_or_error(src, free_compose, &command) {
        Ok(loaded) => loaded,
        Err(report) => return report,
    };
    let mut r = new_report(&command, &name, &c);
    let v = validate_category(&c.cat);
    if v.is_pass() {
        body(&c, &mut r);
    } else {
        r.push(
            Check::from_verdict("validate", &c.cat, &v)
                .note("not a category; nothing else was checked"),
        );
    }
    r.to_json()
}

/// Checks the category axioms and, when present, the addition tables.
#[wasm_bindgen]
pub fn validate(src: &str, free_compose: bool) -> String {
    let command = echo("validate", free_compose);
    let (name, c) = match load_or_error(src, free_compose, &command) {
        Ok(loaded) => loaded,
        Err(report) => return report,
    };
    let mut r = new_report(&command, &name, &c);
    let v = validate_category(&c.cat);
    r.push(Check::from_verdict("validate", &c.cat, &v));
    if let (Some(cm), true) = (&c.cmon, v.is_pass()) {
        r.push(match cm.validate(&c.cat) {
            Ok(_) => Check::new("cmon", Outcome::Pass),
            Err(e) => Check::new("cmon", Outcome::Fail).note(e.to_string()),
        });
    }
    r.to_json()
}

/// Every biproduct of every ordered pair, one check per pair that has one.
#[wasm_bindgen]
pub fn biproducts(src: &str, free_compose: bool) -> String {
    with_valid("biproducts", src, free_compose, |c, r| {
        let cat = &c.cat;
        let mut found_any = false;
        for a in cat.objects() {
            for b in cat.objects() {
                let found = find_biproducts(cat, a, b);
                if found.is_empty() {
                    continue;
                }
                found_any = true;
                let label = format!("biproducts ({}, {})", cat.object_name(a), cat.object_name(b));
                let mut check = Check::new(label, Outcome::Pass);
                for (k, w) in found.iter().enumerate() {
                    check = check.certificate(Certificate::biproduct(&format!("w{k}"), cat, w));
                }
                r.push(check);
            }
        }
        if !found_any {
            r.push(
                Check::new("biproducts", Outcome::Pass)
                    .note("no pair has a biproduct in this fragment"),
            );
        }
    })
}

/// Checks each declared witness against the idempotent definition, and
/// against the zero-morphism definition when every homset has a zero.
#[wasm_bindgen]
pub fn check_witnesses(src: &str, free_compose: bool) -> String {
    with_valid("check-witness", src, free_compose, |c, r| {
        let cat = &c.cat;
        if c.witnesses.is_empty() {
            r.push(Check::new("check-witness", Outcome::Vacuous).note("no witness is declared"));
            return;
        }
        let zeros = find_zero_structure(cat).structure;
        for (name, w) in &c.witnesses {
            let (a, b) = w.factors(cat);
            let pair = format!("({}, {})", cat.object_name(a), cat.object_name(b));
            let v = check_biproduct(cat, w, a, b);
            let mut check = Check::from_verdict(format!("check-witness {name} {pair} (new)"), cat, &v);
            if v.is_pass() {
                check = check.certificate(Certificate::biproduct(name, cat, w));
            }
            r.push(check);
            if let Some(zs) = &zeros {
                let v = check_zero_def_biproduct(cat, zs, w, a, b);
                r.push(Check::from_verdict(
                    format!("check-witness {name} {pair} (zero)"),
                    cat,
                    &v,
                ));
            }
        }
    })
}

/// Names of the built-in example categories, as a JSON array.
#[wasm_bindgen]
pub fn gallery_names() -> String {
    let names: Vec<String> = standard_gallery()
        .map(|g| g.into_iter().map(|e| e.name).collect())
        .unwrap_or_default();
    serde_json::to_string(&names).expect("serializable")
}

/// The text form of a built-in example, or an empty string for an unknown name.
#[wasm_bindgen]
pub fn gallery_source(name: &str) -> String {
    match standard_gallery() {
        Ok(entries) => entries
            .into_iter()
            .find(|e| e.name == name)
            .map(|e| render(&CatDoc::from_fincat(&e.name, &e.cat, e.cmon.as_ref())))
            .unwrap_or_default(),
        Err(_) => String::new(),
    }
}
