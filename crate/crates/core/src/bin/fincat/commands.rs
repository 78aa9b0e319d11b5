use std::collections::BTreeSet;
use std::io::Read;
use std::path::Path;

use fincat::biproduct::oracle::oracle_biproducts;
use fincat::biproduct::{
    check_biproduct, check_cmon_biproduct, check_nary_biproduct,
    check_sum_equals_product_of_morphisms, check_zero_def_biproduct, find_biproducts,
    ternary_from_nested, verify_ambiadjunction, verify_corollary_zeros, verify_lemma_zero,
    verify_uniqueness, verify_uniqueness_all, BiproductAssignment, BiproductWitness, CMonStructure,
};
use fincat::category::{classify_morphism, find_zero_structure, validate_category};
use fincat::dsl::{load, render, CatDoc, ParseOptions};
use fincat::gallery::{
    build_ab_fragment, build_con_fragment, build_finset_skeleton, build_inverse_semigroup_category,
    build_pointed_sets, build_preorder, build_random_category, standard_entry, AbGroupFragmentSpec,
    ContractiveSystemSpec, InverseSemigroupSpec, PreorderSpec, RandomBounds,
};
use fincat::report::{CategorySummary, Certificate, Check, Outcome, Report};
use fincat::universal::{find_coproducts, find_products};
use fincat::{Category, Counterexample, FinCat, MorId, ObjId, Verdict, VerifyError};
use serde::de::DeserializeOwned;

use crate::{CliError, Command, Definition, Input, Theorem};

/// Upper bound on the tuples an exhaustive command may enumerate.
const TUPLE_LIMIT: u128 = 50_000_000;

struct Loaded {
    name: String,
    cat: FinCat,
    cmon: Option<CMonStructure>,
    witnesses: Vec<(String, BiproductWitness)>,
}

impl Loaded {
    fn object(&self, name: &str) -> Result<ObjId, CliError> {
        self.cat
            .find_object(name)
            .ok_or_else(|| CliError::Usage(format!("no object named `{name}`")))
    }

    fn morphism(&self, name: &str) -> Result<MorId, CliError> {
        self.cat
            .find_morphism(name)
            .ok_or_else(|| CliError::Usage(format!("no morphism named `{name}`")))
    }

    fn witness(&self, name: &str) -> Result<BiproductWitness, CliError> {
        match self.witnesses.iter().find(|(n, _)| n == name) {
            Some((_, w)) => Ok(*w),
            None => {
                let known: Vec<&str> = self.witnesses.iter().map(|(n, _)| n.as_str()).collect();
                Err(CliError::Usage(format!(
                    "no witness named `{name}` (declared: {})",
                    if known.is_empty() {
                        "none".to_string()
                    } else {
                        known.join(", ")
                    }
                )))
            }
        }
    }

    fn obj_name(&self, a: ObjId) -> &str {
        self.cat.object_name(a)
    }

    fn pair_label(&self, a: ObjId, b: ObjId) -> String {
        format!("({}, {})", self.obj_name(a), self.obj_name(b))
    }

    fn report(&self, command: Vec<String>) -> Report {
        Report::new(
            command,
            Some(CategorySummary::new(
                &self.name,
                &self.cat,
                self.cmon.as_ref(),
            )),
        )
    }
}

fn read_source(path: &Path) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn load_input(input: &Input) -> Result<Loaded, CliError> {
    let src = read_source(&input.file)?;
    let options = ParseOptions {
        free_compose: input.free_compose,
    };
    let (doc, compiled) = load(&src, options).map_err(|source| CliError::Parse {
        path: input.file.display().to_string(),
        source,
    })?;
    Ok(Loaded {
        name: doc.name,
        cat: compiled.cat,
        cmon: compiled.cmon,
        witnesses: compiled.witnesses,
    })
}

/// Loads the input and checks the axioms; a category that fails them gets
/// a report with only that failure.
fn load_valid(input: &Input, command: &[String]) -> Result<Result<Loaded, Report>, CliError> {
    let l = load_input(input)?;
    let v = validate_category(&l.cat);
    if v.is_pass() {
        Ok(Ok(l))
    } else {
        let mut r = l.report(command.to_vec());
        r.push(
            Check::from_verdict("validate", &l.cat, &v)
                .note("not a category; nothing else was checked"),
        );
        Ok(Err(r))
    }
}

pub fn run(command: &Command, echo: Vec<String>) -> Result<Report, CliError> {
    macro_rules! valid {
        ($input:expr) => {
            match load_valid($input, &echo)? {
                Ok(l) => l,
                Err(report) => return Ok(report),
            }
        };
    }
    match command {
        Command::Validate { input } => {
            let l = load_input(input)?;
            let mut r = l.report(echo);
            let v = validate_category(&l.cat);
            r.push(Check::from_verdict("validate", &l.cat, &v));
            if let (Some(cm), true) = (&l.cmon, v.is_pass()) {
                r.push(match cm.validate(&l.cat) {
                    Ok(_) => Check::new("cmon", Outcome::Pass),
                    Err(e) => {
                        let mut c = Check::new("cmon", Outcome::Fail).note(e.to_string());
                        c.clause = Some("cmon".into());
                        c
                    }
                });
            }
            Ok(r)
        }
        Command::Classify { input, morphism } => {
            let l = valid!(input);
            let targets = match morphism {
                Some(name) => vec![l.morphism(name)?],
                None => l.cat.morphisms().collect(),
            };
            let mut check = Check::new("classify", Outcome::Pass);
            for m in targets {
                let class = classify_morphism(&l.cat, m);
                let mut tags = Vec::new();
                for (flag, tag) in [
                    (class.constant, "constant"),
                    (class.coconstant, "coconstant"),
                    (class.zero, "zero"),
                    (l.cat.inverse(m).is_some(), "iso"),
                    (l.cat.is_identity(m), "identity"),
                ] {
                    if flag {
                        tags.push(tag);
                    }
                }
                check = check.note(format!(
                    "{}: {} -> {}: {}",
                    l.cat.morphism_name(m),
                    l.obj_name(l.cat.dom(m)),
                    l.obj_name(l.cat.cod(m)),
                    if tags.is_empty() {
                        "-".to_string()
                    } else {
                        tags.join(" ")
                    }
                ));
            }
            let mut r = l.report(echo);
            r.push(check);
            Ok(r)
        }
        Command::Zeros { input } => {
            let l = valid!(input);
            let search = find_zero_structure(&l.cat);
            let mut check = Check::from_verdict("zeros", &l.cat, &search.verdict);
            if let Some(zs) = &search.structure {
                for a in l.cat.objects() {
                    for b in l.cat.objects() {
                        check = check.certificate(Certificate::zero(&l.cat, zs.zero(a, b)));
                    }
                }
            }
            let mut r = l.report(echo);
            r.push(check);
            Ok(r)
        }
        Command::Products { input, pair } | Command::Coproducts { input, pair } => {
            let l = valid!(input);
            let (a, b) = (l.object(&pair.0)?, l.object(&pair.1)?);
            let label = l.pair_label(a, b);
            let (kind, certs) = if matches!(command, Command::Products { .. }) {
                let found = find_products(&l.cat, a, b);
                let certs: Vec<Certificate> = found
                    .iter()
                    .enumerate()
                    .map(|(k, w)| Certificate::product(&format!("w{k}"), &l.cat, w))
                    .collect();
                ("product", certs)
            } else {
                let found = find_coproducts(&l.cat, a, b);
                let certs: Vec<Certificate> = found
                    .iter()
                    .enumerate()
                    .map(|(k, w)| Certificate::coproduct(&format!("w{k}"), &l.cat, w))
                    .collect();
                ("coproduct", certs)
            };
            let mut check = if certs.is_empty() {
                let mut c = Check::new(format!("{kind}s {label}"), Outcome::Fail)
                    .note(format!("no {kind} of {label} in this category"));
                c.clause = Some("exists".into());
                c
            } else {
                Check::new(format!("{kind}s {label}"), Outcome::Pass)
            };
            check.certificates = certs;
            let mut r = l.report(echo);
            r.push(check);
            Ok(r)
        }
        Command::Biproducts {
            input,
            pair,
            all_pairs,
            oracle,
        } => {
            let l = valid!(input);
            let pairs: Vec<(ObjId, ObjId)> = match pair {
                Some((a, b)) => vec![(l.object(a)?, l.object(b)?)],
                None => l
                    .cat
                    .objects()
                    .flat_map(|a| l.cat.objects().map(move |b| (a, b)))
                    .collect(),
            };
            if *oracle {
                let tuples: u128 = pairs.iter().map(|&(a, b)| tuple_count(&l.cat, a, b)).sum();
                if tuples > TUPLE_LIMIT {
                    return Err(CliError::Guard(format!(
                        "the oracle would enumerate {tuples} tuples (limit {TUPLE_LIMIT})"
                    )));
                }
            }
            let mut r = l.report(echo);
            let mut found_any = false;
            for &(a, b) in &pairs {
                let found = find_biproducts(&l.cat, a, b);
                let label = l.pair_label(a, b);
                if *oracle {
                    r.push(oracle_check(&l, a, b, &found));
                }
                if found.is_empty() {
                    if !*all_pairs {
                        let v = Verdict::fail(
                            "exists",
                            Counterexample::NoBiproduct { left: a, right: b },
                        );
                        r.push(Check::from_verdict(
                            format!("biproducts {label}"),
                            &l.cat,
                            &v,
                        ));
                    }
                    continue;
                }
                found_any = true;
                let mut check = Check::new(format!("biproducts {label}"), Outcome::Pass);
                for (k, w) in found.iter().enumerate() {
                    check = check.certificate(Certificate::biproduct(&format!("w{k}"), &l.cat, w));
                }
                r.push(check);
            }
            if *all_pairs && !found_any {
                r.push(
                    Check::new("biproducts", Outcome::Pass)
                        .note("no pair has a biproduct in this fragment"),
                );
            }
            Ok(r)
        }
        Command::CheckWitness {
            input,
            witness,
            definition,
        } => {
            let l = valid!(input);
            let w = l.witness(witness)?;
            let (a, b) = w.factors(&l.cat);
            let (name, v) = match definition {
                Definition::New => ("new", check_biproduct(&l.cat, &w, a, b)),
                Definition::Zero => {
                    let search = find_zero_structure(&l.cat);
                    let Some(zs) = search.structure else {
                        return Err(VerifyError::Precondition(
                            "the zero-morphism definition needs zero morphisms in every homset"
                                .into(),
                        )
                        .into());
                    };
                    ("zero", check_zero_def_biproduct(&l.cat, &zs, &w, a, b))
                }
                Definition::Cmon => {
                    let Some(cm) = &l.cmon else {
                        return Err(CliError::Usage(
                            "the addition-based definition needs `cmon` blocks in the input".into(),
                        ));
                    };
                    let valid = cm
                        .validate(&l.cat)
                        .map_err(|e| VerifyError::Precondition(e.to_string()))?;
                    ("cmon", check_cmon_biproduct(&l.cat, &valid, &w, a, b))
                }
            };
            let label = format!("check-witness {witness} {} ({name})", l.pair_label(a, b));
            let mut check = Check::from_verdict(label, &l.cat, &v);
            if v.is_pass() {
                check = check.certificate(Certificate::biproduct(witness, &l.cat, &w));
            }
            let mut r = l.report(echo);
            r.push(check);
            Ok(r)
        }
        Command::Verify {
            input,
            theorem,
            witness,
            f,
            g,
        } => {
            let l = valid!(input);
            let named: Vec<(String, BiproductWitness)> = witness
                .iter()
                .map(|n| Ok((n.clone(), l.witness(n)?)))
                .collect::<Result<_, CliError>>()?;
            let check = match theorem {
                Theorem::Lemma => verify_lemma(&l, &named)?,
                Theorem::Corollary => {
                    Check::from_verdict("corollary", &l.cat, &verify_corollary_zeros(&l.cat))
                }
                Theorem::Uniqueness => verify_unique(&l, &named)?,
                Theorem::Nary => verify_nary(&l, &named)?,
                Theorem::SumEqProd => verify_sum_product(&l, &named, f.as_deref(), g.as_deref())?,
                Theorem::Ambiadjunction => {
                    if !named.is_empty() {
                        return Err(CliError::Usage(
                            "ambiadjunction uses the canonical assignment; --witness is not accepted".into(),
                        ));
                    }
                    let ba = BiproductAssignment::canonical(&l.cat)?;
                    let v = verify_ambiadjunction(&l.cat, &ba)?;
                    Check::from_verdict("ambiadjunction", &l.cat, &v)
                        .note("canonical assignment: the first witness found for each pair")
                }
            };
            let mut r = l.report(echo);
            r.push(check);
            Ok(r)
        }
        Command::Gallery {
            name,
            max_size,
            kind,
            size,
            rank,
            groups,
            seed,
            spec,
            emit,
        } => {
            let (cat, cmon, notes) = build_gallery(
                name,
                GalleryArgs {
                    max_size: *max_size,
                    kind: kind.as_deref(),
                    size: *size,
                    rank: *rank,
                    groups: groups.as_deref(),
                    seed: *seed,
                    spec: spec.as_deref(),
                },
            )?;
            if let Some(path) = emit {
                let text = render(&CatDoc::from_fincat(name, &cat, cmon.as_ref()));
                std::fs::write(path, text).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
            }
            let mut r = Report::new(echo, Some(CategorySummary::new(name, &cat, cmon.as_ref())));
            let mut check = Check::from_verdict("validate", &cat, &validate_category(&cat));
            for n in notes {
                check = check.note(n);
            }
            if let Some(path) = emit {
                check = check.note(format!("written to {}", path.display()));
            }
            r.push(check);
            Ok(r)
        }
    }
}

/// Size of the all-5-tuples enumeration for one pair.
fn tuple_count(cat: &FinCat, a: ObjId, b: ObjId) -> u128 {
    cat.objects()
        .map(|c| {
            [cat.hom(c, a), cat.hom(c, b), cat.hom(a, c), cat.hom(b, c)]
                .iter()
                .map(|h| h.len() as u128)
                .product::<u128>()
        })
        .sum()
}

fn oracle_check(l: &Loaded, a: ObjId, b: ObjId, found: &[BiproductWitness]) -> Check {
    let label = format!("oracle {}", l.pair_label(a, b));
    let search: BTreeSet<BiproductWitness> = found.iter().copied().collect();
    let brute: BTreeSet<BiproductWitness> = oracle_biproducts(&l.cat, a, b).into_iter().collect();
    if search == brute {
        return Check::new(label, Outcome::Pass).note(format!(
            "search and oracle agree on {} witnesses",
            brute.len()
        ));
    }
    let (w, side) = match search.difference(&brute).next() {
        Some(w) => (w, "search only"),
        None => (
            brute.difference(&search).next().expect("sets differ"),
            "oracle only",
        ),
    };
    let v = Verdict::fail(
        "oracle-agrees",
        Counterexample::Disagreement {
            witness: w.morphisms(),
            detail: format!(
                "{side}; search found {}, oracle found {}",
                search.len(),
                brute.len()
            ),
        },
    );
    Check::from_verdict(label, &l.cat, &v)
}

/// Every witness found for every ordered pair, in search order.
fn all_found(cat: &FinCat) -> Vec<((ObjId, ObjId), Vec<BiproductWitness>)> {
    let mut out = Vec::new();
    for a in cat.objects() {
        for b in cat.objects() {
            let found = find_biproducts(cat, a, b);
            if !found.is_empty() {
                out.push(((a, b), found));
            }
        }
    }
    out
}

fn first_failure(
    l: &Loaded,
    label: &str,
    checks: impl IntoIterator<Item = Result<Verdict, VerifyError>>,
) -> Result<(Check, usize), CliError> {
    let mut count = 0;
    for v in checks {
        let v = v?;
        count += 1;
        if !v.is_pass() {
            return Ok((Check::from_verdict(label, &l.cat, &v), count));
        }
    }
    let outcome = if count == 0 {
        Outcome::Vacuous
    } else {
        Outcome::Pass
    };
    Ok((Check::new(label, outcome), count))
}

fn verify_lemma(l: &Loaded, named: &[(String, BiproductWitness)]) -> Result<Check, CliError> {
    if !named.is_empty() {
        let (mut check, _) = first_failure(
            l,
            "lemma",
            named.iter().map(|(_, w)| verify_lemma_zero(&l.cat, w)),
        )?;
        if check.outcome == Outcome::Pass {
            for (n, w) in named {
                check = check.certificate(Certificate::biproduct(n, &l.cat, w));
            }
        }
        return Ok(check);
    }
    let found = all_found(&l.cat);
    let witnesses: Vec<BiproductWitness> = found
        .iter()
        .flat_map(|(_, ws)| ws.iter().copied())
        .collect();
    let (check, count) = first_failure(
        l,
        "lemma",
        witnesses.iter().map(|w| verify_lemma_zero(&l.cat, w)),
    )?;
    Ok(check.note(format!(
        "checked {count} witnesses over {} pairs with a biproduct",
        found.len()
    )))
}

fn verify_unique(l: &Loaded, named: &[(String, BiproductWitness)]) -> Result<Check, CliError> {
    match named {
        [] => {
            let mut compared = 0;
            for ((a, b), ws) in all_found(&l.cat) {
                compared += ws.len() * (ws.len() - 1) / 2;
                let v = verify_uniqueness_all(&l.cat, &ws)?;
                if !v.is_pass() {
                    return Ok(Check::from_verdict(
                        format!("uniqueness {}", l.pair_label(a, b)),
                        &l.cat,
                        &v,
                    ));
                }
            }
            let outcome = if compared == 0 {
                Outcome::Vacuous
            } else {
                Outcome::Pass
            };
            Ok(Check::new("uniqueness", outcome)
                .note(format!("compared {compared} pairs of distinct witnesses")))
        }
        [(n1, w1), (n2, w2)] => {
            let v = verify_uniqueness(&l.cat, w1, w2)?;
            let mut check = Check::from_verdict("uniqueness", &l.cat, &v);
            if v.is_pass() {
                check = check
                    .certificate(Certificate::biproduct(n1, &l.cat, w1))
                    .certificate(Certificate::biproduct(n2, &l.cat, w2));
            }
            Ok(check)
        }
        _ => Err(CliError::Usage(
            "uniqueness takes exactly two --witness names, or none".into(),
        )),
    }
}

fn verify_nary(l: &Loaded, named: &[(String, BiproductWitness)]) -> Result<Check, CliError> {
    match named {
        [] => {
            // (A ⊕ B) ⊕ C for the first witness of every pair and every C
            let mut count = 0;
            for ((_, _), ws) in all_found(&l.cat) {
                let inner = ws[0];
                for c in l.cat.objects() {
                    let Some(outer) = find_biproducts(&l.cat, inner.carrier, c).first().copied()
                    else {
                        continue;
                    };
                    let Some(t) = ternary_from_nested(&l.cat, &inner, &outer) else {
                        continue;
                    };
                    count += 1;
                    let v = check_nary_biproduct(&l.cat, &t);
                    if !v.is_pass() {
                        return Ok(Check::from_verdict("nary", &l.cat, &v)
                            .note(format!("after {count} induced ternary witnesses")));
                    }
                }
            }
            let outcome = if count == 0 {
                Outcome::Vacuous
            } else {
                Outcome::Pass
            };
            Ok(Check::new("nary", outcome)
                .note(format!("checked {count} induced ternary witnesses")))
        }
        [(n, w)] => {
            let (a, b) = w.factors(&l.cat);
            let v = check_nary_biproduct(&l.cat, &(w, a, b).into());
            let mut check = Check::from_verdict("nary", &l.cat, &v);
            if v.is_pass() {
                check = check.certificate(Certificate::biproduct(n, &l.cat, w));
            }
            Ok(check)
        }
        [(n1, inner), (n2, outer)] => {
            let Some(t) = ternary_from_nested(&l.cat, inner, outer) else {
                return Err(VerifyError::Precondition(format!(
                    "`{n2}` is not a witness for a pair whose first factor is the carrier of `{n1}`"
                ))
                .into());
            };
            let v = check_nary_biproduct(&l.cat, &t);
            let mut check = Check::from_verdict("nary", &l.cat, &v);
            if v.is_pass() {
                check = check.certificate(Certificate::nary(&format!("({n1}) {n2}"), &l.cat, &t));
            }
            Ok(check)
        }
        _ => Err(CliError::Usage(
            "nary takes at most two --witness names".into(),
        )),
    }
}

fn verify_sum_product(
    l: &Loaded,
    named: &[(String, BiproductWitness)],
    f: Option<&str>,
    g: Option<&str>,
) -> Result<Check, CliError> {
    match (named, f, g) {
        ([(_, w1), (_, w2)], Some(f), Some(g)) => {
            let sp = check_sum_equals_product_of_morphisms(
                &l.cat,
                w1,
                w2,
                l.morphism(f)?,
                l.morphism(g)?,
            )?;
            Ok(
                Check::from_verdict("sum-eq-prod", &l.cat, &sp.verdict).note(format!(
                    "f + g = {}, f x g = {}",
                    l.cat.morphism_name(sp.sum),
                    l.cat.morphism_name(sp.product)
                )),
            )
        }
        ([], None, None) => {
            let firsts: Vec<BiproductWitness> =
                all_found(&l.cat).into_iter().map(|(_, ws)| ws[0]).collect();
            let mut total: u128 = 0;
            for w1 in &firsts {
                for w2 in &firsts {
                    let (a, b) = w1.factors(&l.cat);
                    let (c, d) = w2.factors(&l.cat);
                    total += l.cat.hom(a, c).len() as u128 * l.cat.hom(b, d).len() as u128;
                }
            }
            if total > TUPLE_LIMIT {
                return Err(CliError::Guard(format!(
                    "{total} morphism pairs to compare (limit {TUPLE_LIMIT}); name two witnesses and --f/--g"
                )));
            }
            let mut checks = Vec::new();
            for w1 in &firsts {
                for w2 in &firsts {
                    let (a, b) = w1.factors(&l.cat);
                    let (c, d) = w2.factors(&l.cat);
                    for &fm in l.cat.hom(a, c) {
                        for &gm in l.cat.hom(b, d) {
                            checks.push((*w1, *w2, fm, gm));
                        }
                    }
                }
            }
            let verdicts = checks.iter().map(|(w1, w2, fm, gm)| {
                check_sum_equals_product_of_morphisms(&l.cat, w1, w2, *fm, *gm).map(|sp| sp.verdict)
            });
            let (check, count) = first_failure(l, "sum-eq-prod", verdicts)?;
            Ok(check.note(format!(
                "compared {count} pairs (f, g) over the first witness of each pair"
            )))
        }
        _ => Err(CliError::Usage(
            "sum-eq-prod takes two --witness names with --f and --g, or none of them".into(),
        )),
    }
}

struct GalleryArgs<'a> {
    max_size: Option<usize>,
    kind: Option<&'a str>,
    size: Option<usize>,
    rank: Option<usize>,
    groups: Option<&'a str>,
    seed: Option<u64>,
    spec: Option<&'a str>,
}

/// Inline JSON, or the contents of a file when `text` names one.
fn read_spec<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    let json = if Path::new(text).is_file() {
        read_source(Path::new(text))?
    } else {
        text.to_string()
    };
    serde_json::from_str(&json).map_err(|e| CliError::Usage(format!("--spec: {e}")))
}

fn parse_groups(text: &str) -> Result<AbGroupFragmentSpec, CliError> {
    let mut factors = Vec::new();
    for group in text.split(',') {
        let f: Result<Vec<usize>, _> = group
            .trim()
            .split('x')
            .map(|n| n.trim().parse::<usize>())
            .collect();
        factors.push(f.map_err(|_| {
            CliError::Usage(format!("--groups: cannot read `{group}` as e.g. `2x2`"))
        })?);
    }
    let refs: Vec<&[usize]> = factors.iter().map(|f| f.as_slice()).collect();
    Ok(AbGroupFragmentSpec::from_factors(&refs))
}

type Built = (FinCat, Option<CMonStructure>, Vec<String>);

fn build_gallery(name: &str, args: GalleryArgs<'_>) -> Result<Built, CliError> {
    let plain = |cat: FinCat| (cat, None, Vec::new());
    Ok(match name {
        "finset" => plain(build_finset_skeleton(args.max_size.unwrap_or(2))?),
        "pointed" => plain(build_pointed_sets(args.max_size.unwrap_or(3))?),
        "preorder" => {
            let spec = match (args.spec, args.kind) {
                (Some(s), _) => read_spec::<PreorderSpec>(s)?,
                (None, kind) => {
                    let n = args.size.unwrap_or(3);
                    match kind.unwrap_or("chain") {
                        "chain" => PreorderSpec::chain(n),
                        "discrete" => PreorderSpec::discrete(n),
                        "indiscrete" => PreorderSpec::indiscrete(n),
                        "diamond" => PreorderSpec::diamond(),
                        "cluster" => PreorderSpec::cluster(),
                        other => {
                            return Err(CliError::Usage(format!(
                                "unknown preorder kind `{other}` (chain, discrete, indiscrete, diamond, cluster)"
                            )))
                        }
                    }
                }
            };
            plain(build_preorder(&spec)?)
        }
        "ab" => {
            let spec = match (args.spec, args.groups, args.rank) {
                (Some(s), _, _) => read_spec::<AbGroupFragmentSpec>(s)?,
                (None, Some(g), _) => parse_groups(g)?,
                (None, None, r) => AbGroupFragmentSpec::elementary_2(r.unwrap_or(2)),
            };
            let frag = build_ab_fragment(&spec)?;
            (frag.cat, Some(frag.cmon), vec!["homsets carry pointwise addition".into()])
        }
        "semigroup" => {
            let specs = match args.spec {
                Some(s) => read_spec::<Vec<InverseSemigroupSpec>>(s)?,
                None => InverseSemigroupSpec::standard_fragment(),
            };
            plain(build_inverse_semigroup_category(&specs)?)
        }
        "con" => {
            let specs = match args.spec {
                Some(s) => read_spec::<Vec<ContractiveSystemSpec>>(s)?,
                None => ContractiveSystemSpec::standard_fragment(),
            };
            plain(build_con_fragment(&specs)?)
        }
        "random" => {
            let bounds = match args.spec {
                Some(s) => read_spec::<RandomBounds>(s)?,
                None => RandomBounds::default(),
            };
            plain(build_random_category(args.seed.unwrap_or(0), bounds)?)
        }
        other => match standard_entry(other)? {
            Some(g) => {
                let predicted = g.expected.biproducts.iter().filter(|(_, e)| *e).count();
                let note = format!(
                    "{predicted} of {} ordered pairs predicted to have a biproduct in this fragment",
                    g.expected.biproducts.len()
                );
                (g.cat, g.cmon, vec![note])
            }
            None => {
                return Err(CliError::Usage(format!(
                    "unknown gallery `{other}` (finset, pointed, preorder, ab, semigroup, con, random, or a standard entry)"
                )))
            }
        },
    })
}
