//! Text format for finite categories, commutative-monoid tables and
//! biproduct witnesses.
//!
//! ```text
//! category Arrow {
//!   objects: A, B;
//!   morphisms: idA: A -> A, idB: B -> B, f: A -> B;
//!   id A = idA;
//!   id B = idB;
//! }
//! ```
//!
//! `g . f = h` declares `g ∘ f = h`. Every composable pair needs exactly one
//! equation, except that pairs involving an identity default to the unit
//! law. The full grammar is in `docs/dsl.md`.

mod lexer;
mod parser;
mod render;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::biproduct::{BiproductWitness, CMonStructure, HomMonoid};
use crate::category::{Category, FinCat, MorId, Morphism, ObjId, MAX_MORPHISMS};
use crate::error::StructureError;

pub use render::render;

use parser::{parse_raw, RawDoc, Sp};

/// 1-based line and column (in characters).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// Prefix `line:col: ` when a position is known.
struct At(Option<Pos>);

impl fmt::Display for At {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(p) => write!(f, "{p}: "),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Error)]
pub enum DslError {
    #[error("{pos}: syntax error: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("{}unresolved {kind} `{name}`", At(*.pos))]
    Unresolved {
        pos: Option<Pos>,
        kind: &'static str,
        name: String,
    },
    #[error("{}duplicate {what}", At(*.pos))]
    Duplicate { pos: Option<Pos>, what: String },
    #[error("{}missing composition `{g} . {f}`", At(*.pos))]
    MissingComposition {
        pos: Option<Pos>,
        g: String,
        f: String,
    },
    #[error("{}ambiguous composite for `{g} . {f}`: could be any of {}", At(*.pos), .candidates.join(", "))]
    Ambiguous {
        pos: Option<Pos>,
        g: String,
        f: String,
        candidates: Vec<String>,
    },
    #[error("{}type mismatch: {detail}", At(*.pos))]
    TypeMismatch { pos: Option<Pos>, detail: String },
    #[error("{}incomplete {what}", At(*.pos))]
    Incomplete { pos: Option<Pos>, what: String },
    #[error(transparent)]
    Structure(#[from] StructureError),
}

impl DslError {
    pub fn is_resource_guard(&self) -> bool {
        matches!(
            self,
            DslError::Structure(StructureError::ResourceGuard { .. })
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorphismDecl {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

/// `g . f = h`
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Composition {
    pub g: String,
    pub f: String,
    pub h: String,
}

/// Addition table of one homset: `zero` and the sums `f + g = h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomAddition {
    pub dom: String,
    pub cod: String,
    pub zero: String,
    pub sums: Vec<(String, String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessDecl {
    pub name: String,
    pub carrier: String,
    pub p_a: String,
    pub p_b: String,
    pub i_a: String,
    pub i_b: String,
}

/// A parsed document with all names resolved and every table complete.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatDoc {
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDecl>,
    /// Identity morphism per object, aligned with `objects`.
    pub identities: Vec<String>,
    pub compositions: Vec<Composition>,
    pub cmon: Vec<HomAddition>,
    pub witnesses: Vec<WitnessDecl>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Derive missing composites when every derivation agrees.
    pub free_compose: bool,
}

/// A document turned into checkable structures.
#[derive(Debug, Clone)]
pub struct Compiled {
    pub cat: FinCat,
    pub cmon: Option<CMonStructure>,
    pub witnesses: Vec<(String, BiproductWitness)>,
}

impl Compiled {
    pub fn witness(&self, name: &str) -> Option<BiproductWitness> {
        self.witnesses
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, w)| *w)
    }
}

/// Source positions for the entries of a [`CatDoc`]; empty for documents
/// built in code.
#[derive(Debug, Default)]
struct Spans {
    objects: Vec<Pos>,
    morphisms: Vec<[Pos; 3]>,
    identities: Vec<Option<[Pos; 2]>>,
    compositions: Vec<[Pos; 3]>,
    category_end: Option<Pos>,
    cmon: Vec<CmonSpans>,
    witnesses: Vec<WitnessSpans>,
}

#[derive(Debug)]
struct CmonSpans {
    dom: Pos,
    cod: Pos,
    zero: Option<Pos>,
    sums: Vec<[Pos; 3]>,
    end: Pos,
}

#[derive(Debug)]
struct WitnessSpans {
    name: Pos,
    /// carrier, pA, pB, iA, iB
    fields: [Option<Pos>; 5],
}

fn at<T: Copy>(v: &[T], i: usize) -> Option<T> {
    v.get(i).copied()
}

pub fn parse(src: &str) -> Result<CatDoc, DslError> {
    parse_with(src, ParseOptions::default())
}

pub fn parse_with(src: &str, options: ParseOptions) -> Result<CatDoc, DslError> {
    let raw = parse_raw(src)?;
    let (mut doc, spans) = lower(raw)?;
    let derived = check(&doc, &spans, options.free_compose)?.1;
    doc.compositions.extend(derived);
    Ok(doc)
}

/// Parses and compiles in one step.
pub fn load(src: &str, options: ParseOptions) -> Result<(CatDoc, Compiled), DslError> {
    let doc = parse_with(src, options)?;
    let compiled = doc.compile()?;
    Ok((doc, compiled))
}

impl CatDoc {
    pub fn compile(&self) -> Result<Compiled, DslError> {
        Ok(check(self, &Spans::default(), false)?.0)
    }

    /// Describes `cat` in the text format: identity compositions are left to
    /// the unit-law default and, in addition tables, sums with zero and the
    /// mirror image of a commutative sum are omitted.
    pub fn from_fincat(name: &str, cat: &FinCat, cmon: Option<&CMonStructure>) -> CatDoc {
        let mname = |m: MorId| cat.morphism_name(m).to_string();
        let oname = |a: ObjId| cat.object_name(a).to_string();
        let morphisms = cat
            .morphism_list()
            .iter()
            .map(|m| MorphismDecl {
                name: m.name.clone(),
                dom: oname(m.dom),
                cod: oname(m.cod),
            })
            .collect();
        let mut compositions = Vec::new();
        for g in cat.morphisms().filter(|&g| !cat.is_identity(g)) {
            for a in cat.objects() {
                for &f in cat.hom(a, cat.dom(g)) {
                    if !cat.is_identity(f) {
                        compositions.push(Composition {
                            g: mname(g),
                            f: mname(f),
                            h: mname(cat.comp(g, f)),
                        });
                    }
                }
            }
        }
        let mut additions = Vec::new();
        if let Some(cm) = cmon {
            for a in cat.objects() {
                for b in cat.objects() {
                    let Some(m) = cm.homset(a, b) else { continue };
                    if m.elements.len() <= 1 {
                        continue;
                    }
                    let mut sums = Vec::new();
                    for (i, &f) in m.elements.iter().enumerate() {
                        for (j, &g) in m.elements.iter().enumerate() {
                            let s = m.add(f, g).expect("homset member");
                            let implied = if f == m.zero {
                                s == g
                            } else if g == m.zero {
                                s == f
                            } else {
                                j < i && m.add(g, f) == Some(s)
                            };
                            if !implied {
                                sums.push((mname(f), mname(g), mname(s)));
                            }
                        }
                    }
                    additions.push(HomAddition {
                        dom: oname(a),
                        cod: oname(b),
                        zero: mname(m.zero),
                        sums,
                    });
                }
            }
            // one block marks the document as carrying addition even when
            // every homset is a singleton
            if additions.is_empty() {
                if let Some(a) = cat.objects().next() {
                    additions.push(HomAddition {
                        dom: oname(a),
                        cod: oname(a),
                        zero: mname(cat.identity(a)),
                        sums: Vec::new(),
                    });
                }
            }
        }
        CatDoc {
            name: name.to_string(),
            objects: cat.object_names().to_vec(),
            morphisms,
            identities: cat.objects().map(|a| mname(cat.identity(a))).collect(),
            compositions,
            cmon: additions,
            witnesses: Vec::new(),
        }
    }

    pub fn add_witness(&mut self, name: &str, cat: &FinCat, w: &BiproductWitness) {
        let m = |x: MorId| cat.morphism_name(x).to_string();
        self.witnesses.push(WitnessDecl {
            name: name.to_string(),
            carrier: cat.object_name(w.carrier).to_string(),
            p_a: m(w.p_a),
            p_b: m(w.p_b),
            i_a: m(w.i_a),
            i_b: m(w.i_b),
        });
    }
}

/// Raw syntax to a document; declares identities that were only named in an
/// `id` line and supplies `id_X` for objects without one.
fn lower(raw: RawDoc) -> Result<(CatDoc, Spans), DslError> {
    let c = raw.category;
    let mut spans = Spans {
        objects: c.objects.iter().map(|s| s.pos).collect(),
        morphisms: c
            .morphisms
            .iter()
            .map(|[n, d, e]| [n.pos, d.pos, e.pos])
            .collect(),
        compositions: c
            .compositions
            .iter()
            .map(|[g, f, h]| [g.pos, f.pos, h.pos])
            .collect(),
        category_end: Some(c.end),
        ..Spans::default()
    };
    let objects: Vec<String> = c.objects.iter().map(|s| s.text.clone()).collect();
    for (k, o) in c.objects.iter().enumerate() {
        if objects[..k].contains(&o.text) {
            return Err(DslError::Duplicate {
                pos: Some(o.pos),
                what: format!("object `{}`", o.text),
            });
        }
    }
    let mut morphisms: Vec<MorphismDecl> = c
        .morphisms
        .iter()
        .map(|[n, d, e]| MorphismDecl {
            name: n.text.clone(),
            dom: d.text.clone(),
            cod: e.text.clone(),
        })
        .collect();
    let mut identities: Vec<Option<String>> = vec![None; objects.len()];
    spans.identities = vec![None; objects.len()];
    for [obj, mor] in &c.identities {
        let Some(k) = objects.iter().position(|o| *o == obj.text) else {
            return Err(DslError::Unresolved {
                pos: Some(obj.pos),
                kind: "object",
                name: obj.text.clone(),
            });
        };
        if identities[k].is_some() {
            return Err(DslError::Duplicate {
                pos: Some(obj.pos),
                what: format!("identity declaration for `{}`", obj.text),
            });
        }
        if !morphisms.iter().any(|m| m.name == mor.text) {
            morphisms.push(MorphismDecl {
                name: mor.text.clone(),
                dom: obj.text.clone(),
                cod: obj.text.clone(),
            });
            spans.morphisms.push([mor.pos, obj.pos, obj.pos]);
        }
        identities[k] = Some(mor.text.clone());
        spans.identities[k] = Some([obj.pos, mor.pos]);
    }
    let mut ids = Vec::with_capacity(objects.len());
    for (k, id) in identities.into_iter().enumerate() {
        match id {
            Some(name) => ids.push(name),
            None => {
                let name = format!("id_{}", objects[k]);
                if morphisms.iter().any(|m| m.name == name) {
                    return Err(DslError::Incomplete {
                        pos: at(&spans.objects, k),
                        what: format!("object `{}`: no identity declared", objects[k]),
                    });
                }
                morphisms.push(MorphismDecl {
                    name: name.clone(),
                    dom: objects[k].clone(),
                    cod: objects[k].clone(),
                });
                let p = spans.objects[k];
                spans.morphisms.push([p, p, p]);
                ids.push(name);
            }
        }
    }
    let compositions = c
        .compositions
        .iter()
        .map(|[g, f, h]| Composition {
            g: g.text.clone(),
            f: f.text.clone(),
            h: h.text.clone(),
        })
        .collect();
    let mut cmon = Vec::new();
    for b in &raw.cmons {
        let Some(zero) = &b.zero else {
            return Err(DslError::Incomplete {
                pos: Some(b.end),
                what: format!("cmon hom({}, {}): no zero declared", b.dom.text, b.cod.text),
            });
        };
        cmon.push(HomAddition {
            dom: b.dom.text.clone(),
            cod: b.cod.text.clone(),
            zero: zero.text.clone(),
            sums: b
                .sums
                .iter()
                .map(|[f, g, h]| (f.text.clone(), g.text.clone(), h.text.clone()))
                .collect(),
        });
        spans.cmon.push(CmonSpans {
            dom: b.dom.pos,
            cod: b.cod.pos,
            zero: Some(zero.pos),
            sums: b
                .sums
                .iter()
                .map(|[f, g, h]| [f.pos, g.pos, h.pos])
                .collect(),
            end: b.end,
        });
    }
    let mut witnesses = Vec::new();
    const KEYS: [&str; 5] = ["carrier", "pA", "pB", "iA", "iB"];
    for w in &raw.witnesses {
        let mut vals: [Option<&Sp>; 5] = [None; 5];
        let mut pos: [Option<Pos>; 5] = [None; 5];
        for (key, value) in &w.fields {
            let k = KEYS
                .iter()
                .position(|x| *x == key.text)
                .expect("parser checks keys");
            if vals[k].is_some() {
                return Err(DslError::Duplicate {
                    pos: Some(key.pos),
                    what: format!("field `{}` in witness `{}`", key.text, w.name.text),
                });
            }
            vals[k] = Some(value);
            pos[k] = Some(value.pos);
        }
        if let Some(k) = vals.iter().position(|v| v.is_none()) {
            return Err(DslError::Incomplete {
                pos: Some(w.end),
                what: format!("witness `{}`: field `{}` missing", w.name.text, KEYS[k]),
            });
        }
        let v = |k: usize| vals[k].unwrap().text.clone();
        witnesses.push(WitnessDecl {
            name: w.name.text.clone(),
            carrier: v(0),
            p_a: v(1),
            p_b: v(2),
            i_a: v(3),
            i_b: v(4),
        });
        spans.witnesses.push(WitnessSpans {
            name: w.name.pos,
            fields: pos,
        });
    }
    let doc = CatDoc {
        name: c.name.map(|s| s.text).unwrap_or_default(),
        objects,
        morphisms,
        identities: ids,
        compositions,
        cmon,
        witnesses,
    };
    Ok((doc, spans))
}

struct Names<'a> {
    objects: HashMap<&'a str, usize>,
    morphisms: HashMap<&'a str, usize>,
}

impl<'a> Names<'a> {
    fn object(&self, name: &str, pos: Option<Pos>) -> Result<usize, DslError> {
        self.objects
            .get(name)
            .copied()
            .ok_or_else(|| DslError::Unresolved {
                pos,
                kind: "object",
                name: name.to_string(),
            })
    }

    fn morphism(&self, name: &str, pos: Option<Pos>) -> Result<usize, DslError> {
        self.morphisms
            .get(name)
            .copied()
            .ok_or_else(|| DslError::Unresolved {
                pos,
                kind: "morphism",
                name: name.to_string(),
            })
    }
}

/// Resolves every name, fills unit-law and (optionally) derived composites,
/// and builds the table. Returns the derived equations separately.
fn check(
    doc: &CatDoc,
    spans: &Spans,
    free: bool,
) -> Result<(Compiled, Vec<Composition>), DslError> {
    if doc.morphisms.len() > MAX_MORPHISMS {
        return Err(StructureError::ResourceGuard {
            morphisms: doc.morphisms.len(),
            limit: MAX_MORPHISMS,
        }
        .into());
    }
    let mut names = Names {
        objects: HashMap::new(),
        morphisms: HashMap::new(),
    };
    for (k, o) in doc.objects.iter().enumerate() {
        if names.objects.insert(o.as_str(), k).is_some() {
            return Err(DslError::Duplicate {
                pos: at(&spans.objects, k),
                what: format!("object `{o}`"),
            });
        }
    }
    let mut morphisms = Vec::with_capacity(doc.morphisms.len());
    for (k, m) in doc.morphisms.iter().enumerate() {
        let p = spans.morphisms.get(k);
        if names.morphisms.insert(m.name.as_str(), k).is_some() {
            return Err(DslError::Duplicate {
                pos: p.map(|p| p[0]),
                what: format!("morphism `{}`", m.name),
            });
        }
        morphisms.push(Morphism {
            name: m.name.clone(),
            dom: ObjId(names.object(&m.dom, p.map(|p| p[1]))?),
            cod: ObjId(names.object(&m.cod, p.map(|p| p[2]))?),
        });
    }
    if doc.identities.len() != doc.objects.len() {
        return Err(DslError::Incomplete {
            pos: None,
            what: "identity list: one entry per object required".into(),
        });
    }
    let mut identities = Vec::with_capacity(doc.objects.len());
    for (k, id) in doc.identities.iter().enumerate() {
        let p = spans.identities.get(k).copied().flatten();
        let m = names.morphism(id, p.map(|p| p[1]))?;
        if morphisms[m].dom.0 != k || morphisms[m].cod.0 != k {
            return Err(DslError::TypeMismatch {
                pos: p.map(|p| p[1]),
                detail: format!(
                    "identity `{id}` of `{}` must be an endomorphism of it",
                    doc.objects[k]
                ),
            });
        }
        identities.push(MorId(m));
    }
    let is_id = {
        let mut v = vec![false; morphisms.len()];
        for m in &identities {
            v[m.0] = true;
        }
        v
    };
    let n = morphisms.len();
    let mut table: Vec<Option<MorId>> = vec![None; n * n];
    for (k, c) in doc.compositions.iter().enumerate() {
        let p = spans.compositions.get(k);
        let g = names.morphism(&c.g, p.map(|p| p[0]))?;
        let f = names.morphism(&c.f, p.map(|p| p[1]))?;
        let h = names.morphism(&c.h, p.map(|p| p[2]))?;
        let (mf, mg, mh) = (&morphisms[f], &morphisms[g], &morphisms[h]);
        if mf.cod != mg.dom {
            return Err(DslError::TypeMismatch {
                pos: p.map(|p| p[0]),
                detail: format!(
                    "`{} . {}`: `{}` ends at `{}` but `{}` starts at `{}`",
                    c.g, c.f, c.f, doc.objects[mf.cod.0], c.g, doc.objects[mg.dom.0]
                ),
            });
        }
        if mh.dom != mf.dom || mh.cod != mg.cod {
            return Err(DslError::TypeMismatch {
                pos: p.map(|p| p[2]),
                detail: format!(
                    "`{} . {} = {}`: expected a morphism `{} -> {}`, `{}` is `{} -> {}`",
                    c.g,
                    c.f,
                    c.h,
                    doc.objects[mf.dom.0],
                    doc.objects[mg.cod.0],
                    c.h,
                    doc.objects[mh.dom.0],
                    doc.objects[mh.cod.0]
                ),
            });
        }
        if table[g * n + f].is_some() {
            return Err(DslError::Duplicate {
                pos: p.map(|p| p[0]),
                what: format!("composition `{} . {}`", c.g, c.f),
            });
        }
        table[g * n + f] = Some(MorId(h));
    }
    // unit-law defaults
    for f in 0..n {
        let left = identities[morphisms[f].cod.0].0;
        let right = identities[morphisms[f].dom.0].0;
        table[left * n + f].get_or_insert(MorId(f));
        table[f * n + right].get_or_insert(MorId(f));
    }
    let derived = if free {
        derive_composites(&morphisms, &mut table, doc, spans.category_end)?
    } else {
        Vec::new()
    };
    for g in 0..n {
        for f in 0..n {
            if morphisms[f].cod == morphisms[g].dom && table[g * n + f].is_none() {
                debug_assert!(!is_id[g] && !is_id[f]);
                return Err(DslError::MissingComposition {
                    pos: spans.category_end,
                    g: doc.morphisms[g].name.clone(),
                    f: doc.morphisms[f].name.clone(),
                });
            }
        }
    }
    let cat = FinCat::from_parts(doc.objects.clone(), morphisms, identities, table)?;
    let cmon = check_cmon(doc, spans, &names, &cat)?;
    let mut witnesses = Vec::new();
    for (k, w) in doc.witnesses.iter().enumerate() {
        let sp = spans.witnesses.get(k);
        let fp = |i: usize| sp.and_then(|s| s.fields[i]);
        if witnesses.iter().any(|(name, _)| *name == w.name) {
            return Err(DslError::Duplicate {
                pos: sp.map(|s| s.name),
                what: format!("witness `{}`", w.name),
            });
        }
        let witness = BiproductWitness {
            carrier: ObjId(names.object(&w.carrier, fp(0))?),
            p_a: MorId(names.morphism(&w.p_a, fp(1))?),
            p_b: MorId(names.morphism(&w.p_b, fp(2))?),
            i_a: MorId(names.morphism(&w.i_a, fp(3))?),
            i_b: MorId(names.morphism(&w.i_b, fp(4))?),
        };
        witnesses.push((w.name.clone(), witness));
    }
    Ok((
        Compiled {
            cat,
            cmon,
            witnesses,
        },
        derived,
    ))
}

/// Fills missing composites from singleton homsets and from associativity
/// against known factorizations, to a fixed point. Two different derived
/// values for one pair are an error.
fn derive_composites(
    morphisms: &[Morphism],
    table: &mut [Option<MorId>],
    doc: &CatDoc,
    end: Option<Pos>,
) -> Result<Vec<Composition>, DslError> {
    let n = morphisms.len();
    let typed = |m: usize, a: ObjId, b: ObjId| morphisms[m].dom == a && morphisms[m].cod == b;
    let get = |t: &[Option<MorId>], g: usize, f: usize| t[g * n + f].map(|m| m.0);
    let mut derived: Vec<(usize, usize, usize)> = Vec::new();
    loop {
        let mut progress = false;
        // factorizations x ∘ y = m, indexed by m
        let mut facts: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for x in 0..n {
            for y in 0..n {
                if let Some(m) = get(table, x, y) {
                    facts[m].push((x, y));
                }
            }
        }
        for g in 0..n {
            for f in 0..n {
                if morphisms[f].cod != morphisms[g].dom || table[g * n + f].is_some() {
                    continue;
                }
                let (a, c) = (morphisms[f].dom, morphisms[g].cod);
                let mut candidates: BTreeSet<usize> = BTreeSet::new();
                let parallel: Vec<usize> = (0..n).filter(|&m| typed(m, a, c)).collect();
                if parallel.len() == 1 {
                    candidates.insert(parallel[0]);
                }
                // f = x ∘ y gives g ∘ f = (g ∘ x) ∘ y
                for &(x, y) in &facts[f] {
                    if let Some(r) = get(table, g, x).and_then(|gx| get(table, gx, y)) {
                        candidates.insert(r);
                    }
                }
                // g = x ∘ y gives g ∘ f = x ∘ (y ∘ f)
                for &(x, y) in &facts[g] {
                    if let Some(r) = get(table, y, f).and_then(|yf| get(table, x, yf)) {
                        candidates.insert(r);
                    }
                }
                match candidates.len() {
                    0 => {}
                    1 => {
                        let h = *candidates.iter().next().unwrap();
                        table[g * n + f] = Some(MorId(h));
                        derived.push((g, f, h));
                        progress = true;
                    }
                    _ => {
                        return Err(DslError::Ambiguous {
                            pos: end,
                            g: doc.morphisms[g].name.clone(),
                            f: doc.morphisms[f].name.clone(),
                            candidates: candidates
                                .iter()
                                .map(|&h| doc.morphisms[h].name.clone())
                                .collect(),
                        })
                    }
                }
            }
        }
        if !progress {
            break;
        }
    }
    derived.sort();
    Ok(derived
        .into_iter()
        .map(|(g, f, h)| Composition {
            g: doc.morphisms[g].name.clone(),
            f: doc.morphisms[f].name.clone(),
            h: doc.morphisms[h].name.clone(),
        })
        .collect())
}

/// Resolves the addition tables. Homsets with one element need no block;
/// sums with zero default to neutrality and a missing `g + f` defaults to
/// `f + g`.
fn check_cmon(
    doc: &CatDoc,
    spans: &Spans,
    names: &Names<'_>,
    cat: &FinCat,
) -> Result<Option<CMonStructure>, DslError> {
    if doc.cmon.is_empty() {
        return Ok(None);
    }
    let mut cm = CMonStructure::empty(cat.object_count());
    let mut covered = vec![false; cat.object_count() * cat.object_count()];
    for (k, block) in doc.cmon.iter().enumerate() {
        let sp = spans.cmon.get(k);
        let a = ObjId(names.object(&block.dom, sp.map(|s| s.dom))?);
        let b = ObjId(names.object(&block.cod, sp.map(|s| s.cod))?);
        let slot = a.0 * cat.object_count() + b.0;
        if covered[slot] {
            return Err(DslError::Duplicate {
                pos: sp.map(|s| s.dom),
                what: format!("cmon block for hom({}, {})", block.dom, block.cod),
            });
        }
        covered[slot] = true;
        let elements = cat.hom(a, b).to_vec();
        let kk = elements.len();
        let position = |m: usize, pos: Option<Pos>, what: &str| -> Result<usize, DslError> {
            let name = &doc.morphisms[m].name;
            elements
                .iter()
                .position(|x| x.0 == m)
                .ok_or_else(|| DslError::TypeMismatch {
                    pos,
                    detail: format!(
                        "{what} `{name}` is not in hom({}, {})",
                        block.dom, block.cod
                    ),
                })
        };
        let zpos = sp.and_then(|s| s.zero);
        let zero = position(names.morphism(&block.zero, zpos)?, zpos, "zero")?;
        let mut sum: Vec<Option<MorId>> = vec![None; kk * kk];
        for (j, (f, g, h)) in block.sums.iter().enumerate() {
            let p = sp.and_then(|s| s.sums.get(j));
            let pf = p.map(|p| p[0]);
            let i = position(names.morphism(f, pf)?, pf, "summand")?;
            let pg = p.map(|p| p[1]);
            let l = position(names.morphism(g, pg)?, pg, "summand")?;
            let ph = p.map(|p| p[2]);
            let r = position(names.morphism(h, ph)?, ph, "sum")?;
            if sum[i * kk + l].is_some() {
                return Err(DslError::Duplicate {
                    pos: pf,
                    what: format!("sum `{f} + {g}`"),
                });
            }
            sum[i * kk + l] = Some(elements[r]);
        }
        for i in 0..kk {
            sum[zero * kk + i].get_or_insert(elements[i]);
            sum[i * kk + zero].get_or_insert(elements[i]);
        }
        for i in 0..kk {
            for l in 0..kk {
                if sum[i * kk + l].is_none() {
                    sum[i * kk + l] = sum[l * kk + i];
                }
            }
        }
        if let Some(missing) = sum.iter().position(Option::is_none) {
            let (f, g) = (elements[missing / kk], elements[missing % kk]);
            return Err(DslError::Incomplete {
                pos: sp.map(|s| s.end),
                what: format!(
                    "cmon hom({}, {}): no sum for `{} + {}`",
                    block.dom,
                    block.cod,
                    cat.morphism_name(f),
                    cat.morphism_name(g)
                ),
            });
        }
        cm.set(
            a,
            b,
            HomMonoid {
                elements: elements.clone(),
                zero: elements[zero],
                sum: sum.into_iter().map(Option::unwrap).collect(),
            },
        );
    }
    for a in cat.objects() {
        for b in cat.objects() {
            if let [only] = cat.hom(a, b) {
                if !covered[a.0 * cat.object_count() + b.0] {
                    cm.set(
                        a,
                        b,
                        HomMonoid {
                            elements: vec![*only],
                            zero: *only,
                            sum: vec![*only],
                        },
                    );
                }
            }
        }
    }
    Ok(Some(cm))
}
