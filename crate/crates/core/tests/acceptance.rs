//! The twelve acceptance criteria, one line each.
//!
//! Runs without the libtest harness so every line reaches the output even
//! when all criteria pass. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use fincat::biproduct::oracle::oracle_biproducts;
use fincat::biproduct::{
    check_nary_biproduct, find_biproducts, ternary_from_nested, verify_ambiadjunction,
    verify_corollary_zeros, verify_lemma_zero, verify_uniqueness_all, BiproductAssignment,
    BiproductWitness, DefinitionCheck,
};
use fincat::category::find_zero_structure;
use fincat::gallery::{
    build_ab_fragment, build_finset_skeleton, build_random_category, standard_entry,
    standard_gallery, AbGroupFragmentSpec, ContractiveSystemSpec, GalleryCategory, RandomBounds,
    TERMINAL_SYSTEM,
};
use fincat::{Category, FinCat, ObjId, Op, Verdict};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn gallery() -> Vec<GalleryCategory> {
    standard_gallery().expect("standard gallery builds")
}

fn entry(name: &str) -> GalleryCategory {
    standard_entry(name)
        .unwrap()
        .unwrap_or_else(|| panic!("no gallery entry {name}"))
}

fn random_suite() -> Vec<FinCat> {
    (0..1000)
        .map(|seed| build_random_category(seed, RandomBounds::default()).expect("random category"))
        .collect()
}

fn pairs(cat: &FinCat) -> impl Iterator<Item = (ObjId, ObjId)> + '_ {
    cat.objects()
        .flat_map(move |a| cat.objects().map(move |b| (a, b)))
}

fn obj(cat: &FinCat, name: &str) -> ObjId {
    cat.find_object(name)
        .unwrap_or_else(|| panic!("no object {name}"))
}

fn names(cat: &FinCat, found: &BTreeSet<(ObjId, ObjId)>) -> Vec<(String, String)> {
    found
        .iter()
        .map(|&(a, b)| {
            (
                cat.object_name(a).to_string(),
                cat.object_name(b).to_string(),
            )
        })
        .collect()
}

fn pairs_with_biproducts(cat: &FinCat) -> BTreeSet<(ObjId, ObjId)> {
    pairs(cat)
        .filter(|&(a, b)| !find_biproducts(cat, a, b).is_empty())
        .collect()
}

fn c1_definition_soundness() -> Outcome {
    let cat = build_finset_skeleton(2).map_err(|e| e.to_string())?;
    // 0^0 + 0^1 + ... : sum over m, n <= 2 of n^m
    ensure!(
        cat.morphism_count() == 11,
        "{} morphisms",
        cat.morphism_count()
    );
    let found = pairs_with_biproducts(&cat);
    let expected: BTreeSet<_> = [(ObjId(0), ObjId(0))].into();
    ensure!(found == expected, "pairs {:?}", names(&cat, &found));

    // the same answer through the command line and the text format
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let file = dir.path().join("f.cat");
    let bin = env!("CARGO_BIN_EXE_fincat");
    let emit = Command::new(bin)
        .args(["gallery", "finset", "--max-size", "2", "--emit"])
        .arg(&file)
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(emit.status.success(), "gallery exited with {}", emit.status);
    let out = Command::new(bin)
        .arg("biproducts")
        .arg(&file)
        .args(["--all-pairs", "--json"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(
        out.status.code() == Some(0),
        "biproducts exited with {}",
        out.status
    );
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let checks: Vec<&str> = json["checks"]
        .as_array()
        .ok_or("no checks")?
        .iter()
        .map(|c| c["check"].as_str().unwrap_or(""))
        .collect();
    ensure!(checks == ["biproducts (0, 0)"], "reported {checks:?}");
    Ok("11 morphisms; only (0, 0) has a biproduct, library and CLI".into())
}

fn c2_lemma_suite() -> Outcome {
    let mut cats: Vec<(String, FinCat)> = random_suite()
        .into_iter()
        .enumerate()
        .map(|(k, c)| (format!("random seed {k}"), c))
        .collect();
    ensure!(
        cats.iter().all(|(_, c)| c.morphism_count() <= 12),
        "random category over 12 morphisms"
    );
    cats.extend(gallery().into_iter().map(|g| (g.name, g.cat)));
    let mut witnesses = 0;
    for (name, cat) in &cats {
        for (a, b) in pairs(cat) {
            for w in find_biproducts(cat, a, b) {
                witnesses += 1;
                let v = verify_lemma_zero(cat, &w).map_err(|e| format!("{name}: {e}"))?;
                ensure!(v == Verdict::Pass, "{name}: {v:?}");
            }
        }
    }
    ensure!(witnesses > 0, "no witnesses at all");
    Ok(format!(
        "{} categories, {witnesses} witnesses, zero failures",
        cats.len()
    ))
}

fn c3_corollary_suite() -> Outcome {
    let mut vacuous = 0;
    for g in gallery() {
        let v = verify_corollary_zeros(&g.cat);
        ensure!(v.is_pass(), "{}: {v:?}", g.name);
        if v == Verdict::Vacuous {
            vacuous += 1;
        }
    }
    // the indiscrete preorders and the closed Ab fragment have every binary
    // biproduct, so the hypothesis holds there
    for name in ["terminal", "indiscrete-2", "indiscrete-3", "ab-trivial"] {
        let v = verify_corollary_zeros(&entry(name).cat);
        ensure!(
            v == Verdict::Pass,
            "{name} not checked non-vacuously: {v:?}"
        );
    }
    Ok(format!("all gallery categories pass ({vacuous} vacuously); non-vacuous on indiscrete and closed Ab"))
}

fn c4_equivalence_suite() -> Outcome {
    let mut categories = 0;
    let mut tuples = 0;
    let mut with_cmon = 0;
    for g in gallery() {
        if find_zero_structure(&g.cat).structure.is_none() {
            continue;
        }
        categories += 1;
        let mut check = DefinitionCheck::new(&g.cat).map_err(|e| format!("{}: {e}", g.name))?;
        if let Some(cm) = &g.cmon {
            let valid = cm
                .validate(&g.cat)
                .map_err(|e| format!("{}: {e}", g.name))?;
            check = check.with_cmon(valid);
            with_cmon += 1;
        }
        for (a, b) in pairs(&g.cat) {
            let summary = check.agree_exhaustive(a, b);
            ensure!(
                summary.verdict.is_pass(),
                "{}: {:?}",
                g.name,
                summary.verdict
            );
            ensure!(
                summary.accepted == find_biproducts(&g.cat, a, b).len(),
                "{}: accepted {} tuples, search found {}",
                g.name,
                summary.accepted,
                find_biproducts(&g.cat, a, b).len()
            );
            tuples += summary.evaluated;
        }
    }
    ensure!(with_cmon > 0, "no category with addition was compared");
    Ok(format!(
        "{categories} categories with zero morphisms ({with_cmon} with addition), {tuples} tuples agree"
    ))
}

fn c5_uniqueness_suite() -> Outcome {
    let mut compared = 0;
    for g in gallery() {
        for (a, b) in pairs(&g.cat) {
            let found = find_biproducts(&g.cat, a, b);
            if found.len() < 2 {
                continue;
            }
            compared += found.len() * (found.len() - 1) / 2;
            let v =
                verify_uniqueness_all(&g.cat, &found).map_err(|e| format!("{}: {e}", g.name))?;
            ensure!(v == Verdict::Pass, "{} ({a}, {b}): {v:?}", g.name);
        }
    }
    ensure!(compared > 0, "no pair of distinct witnesses");
    Ok(format!("{compared} pairs of distinct witnesses"))
}

fn c6_preorder_iff() -> Outcome {
    let names = [
        "walking-arrow",
        "discrete-2",
        "chain-3",
        "diamond",
        "indiscrete-2",
        "indiscrete-3",
        "cluster",
    ];
    let mut checked = 0;
    for name in names {
        let cat = entry(name).cat;
        for (a, b) in pairs(&cat) {
            let iso = !cat.hom(a, b).is_empty() && !cat.hom(b, a).is_empty();
            let found = !find_biproducts(&cat, a, b).is_empty();
            ensure!(
                found == iso,
                "{name} ({a}, {b}): found {found}, isomorphic {iso}"
            );
            checked += 1;
        }
    }
    Ok(format!(
        "{} preorders, {checked} ordered pairs",
        names.len()
    ))
}

fn c7_inverse_semigroup_iff() -> Outcome {
    let g = entry("inverse-semigroups");
    let cat = &g.cat;
    // Z2 is the only unital member whose square is present; N3 has no
    // neutral element and Z2xZ2 squared is not in the fragment
    let expected: BTreeSet<_> = [(obj(cat, "Z2"), obj(cat, "Z2"))].into();
    let found = pairs_with_biproducts(cat);
    ensure!(found == expected, "found {:?}", names(cat, &found));
    for &((a, b), e) in &g.expected.biproducts {
        ensure!(
            found.contains(&(a, b)) == e,
            "gallery expectation differs at ({a}, {b})"
        );
    }
    Ok("biproduct only for (Z2, Z2); none involving N3 or Z2xZ2".into())
}

fn c8_con_iff() -> Outcome {
    let g = entry("con");
    let cat = &g.cat;
    let bang = obj(cat, TERMINAL_SYSTEM);
    for spec in ContractiveSystemSpec::standard_fragment() {
        let fixed = spec.fixed_points();
        ensure!(
            fixed.len() <= 1,
            "{} has {} fixed points",
            spec.name,
            fixed.len()
        );
        ensure!(
            fixed.len() == usize::from(!spec.points.is_empty()),
            "{}: nonempty finite contractive systems have a fixed point",
            spec.name
        );
        let s = obj(cat, &spec.name);
        let has_fixed = fixed.len() == 1;
        for (a, b) in [(s, bang), (bang, s)] {
            let found = !find_biproducts(cat, a, b).is_empty();
            ensure!(
                found == has_fixed,
                "{}: found {found}, fixed point {has_fixed}",
                spec.name
            );
        }
    }
    ensure!(
        ContractiveSystemSpec::terminal().fixed_points().len() == 1,
        "terminal system"
    );
    Ok("(s, !) found exactly for s2 and s3; the empty system has none".into())
}

fn c9_ambiadjunction() -> Outcome {
    let cat = entry("indiscrete-2").cat;
    let ba = BiproductAssignment::canonical(&cat).map_err(|e| e.to_string())?;
    let v = verify_ambiadjunction(&cat, &ba).map_err(|e| e.to_string())?;
    ensure!(v == Verdict::Pass, "{v:?}");
    Ok("functoriality, both adjunctions with naturality, section condition".into())
}

fn c10_oracle_equivalence() -> Outcome {
    let mut cats: Vec<(String, FinCat)> = gallery().into_iter().map(|g| (g.name, g.cat)).collect();
    cats.extend(
        random_suite()
            .into_iter()
            .enumerate()
            .map(|(k, c)| (format!("random seed {k}"), c)),
    );
    let mut compared = 0;
    let mut witnesses = 0;
    for (name, cat) in cats.iter().filter(|(_, c)| c.morphism_count() <= 40) {
        compared += 1;
        for (a, b) in pairs(cat) {
            let search = find_biproducts(cat, a, b);
            let mut oracle = oracle_biproducts(cat, a, b);
            let mut sorted = search.clone();
            sorted.sort();
            oracle.sort();
            ensure!(
                sorted == oracle,
                "{name} ({a}, {b}): search {search:?}, oracle {oracle:?}"
            );
            witnesses += search.len();
        }
    }
    Ok(format!(
        "{compared} categories with at most 40 morphisms, {witnesses} witnesses"
    ))
}

fn c11_duality() -> Outcome {
    let mut witnesses = 0;
    for g in gallery() {
        let cat = &g.cat;
        for (a, b) in pairs(cat) {
            let here: BTreeSet<BiproductWitness> = find_biproducts(cat, a, b).into_iter().collect();
            let there: BTreeSet<BiproductWitness> = find_biproducts(&Op(cat), a, b)
                .iter()
                .map(|w| w.dual())
                .collect();
            ensure!(here == there, "{} ({a}, {b}): witnesses differ", g.name);
            witnesses += here.len();
        }
    }
    Ok(format!("{witnesses} witnesses correspond under the swap"))
}

fn c12_ternary_coherence() -> Outcome {
    let frag =
        build_ab_fragment(&AbGroupFragmentSpec::elementary_2(3)).map_err(|e| e.to_string())?;
    let cat = &frag.cat;
    let (z2, z22, z222) = (obj(cat, "Z2"), obj(cat, "Z2xZ2"), obj(cat, "Z2xZ2xZ2"));
    let inner_all = find_biproducts(cat, z2, z2);
    ensure!(!inner_all.is_empty(), "no Z2 + Z2");
    let mut checked = 0;
    for inner in inner_all.iter().filter(|w| w.carrier == z22) {
        let outers = find_biproducts(cat, z22, z2);
        ensure!(
            outers.iter().any(|w| w.carrier == z222),
            "no (Z2 + Z2) + Z2 on Z2xZ2xZ2"
        );
        for outer in outers.iter().filter(|w| w.carrier == z222).take(8) {
            let t = ternary_from_nested(cat, inner, outer).ok_or("nesting did not type-check")?;
            let v = check_nary_biproduct(cat, &t);
            ensure!(v == Verdict::Pass, "{v:?}");
            checked += 1;
        }
    }
    Ok(format!("{checked} induced ternary witnesses on Z2xZ2xZ2"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("definition soundness", c1_definition_soundness),
        ("lemma suite", c2_lemma_suite),
        ("corollary suite", c3_corollary_suite),
        ("equivalence suite", c4_equivalence_suite),
        ("uniqueness suite", c5_uniqueness_suite),
        ("preorder iff", c6_preorder_iff),
        ("inverse-semigroup iff", c7_inverse_semigroup_iff),
        ("con iff", c8_con_iff),
        ("ambiadjunction", c9_ambiadjunction),
        ("oracle equivalence", c10_oracle_equivalence),
        ("duality", c11_duality),
        ("ternary coherence", c12_ternary_coherence),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({secs:.2}s) {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({secs:.2}s) {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {} of 12 criteria pass", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
