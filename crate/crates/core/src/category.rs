//! Finite categories given by explicit multiplication tables.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::StructureError;
use crate::verdict::{Counterexample, Failure, Verdict};

/// Upper bound on the number of morphisms any constructor will tabulate.
pub const MAX_MORPHISMS: usize = 2048;

const NO_COMPOSITE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ObjId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MorId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "o{}", self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub name: String,
    pub dom: ObjId,
    pub cod: ObjId,
}

/// Read access to a finite category.
///
/// Everything in the crate that decides a universal property is written
/// against this trait so that the same code runs on a category and on its
/// opposite (through [`Op`]) without copying the composition table.
pub trait Category {
    fn object_count(&self) -> usize;
    fn morphism_count(&self) -> usize;
    fn dom(&self, m: MorId) -> ObjId;
    fn cod(&self, m: MorId) -> ObjId;
    fn identity(&self, a: ObjId) -> MorId;
    fn hom(&self, a: ObjId, b: ObjId) -> &[MorId];
    /// `g ∘ f`, defined exactly when `cod(f) = dom(g)`.
    fn compose(&self, g: MorId, f: MorId) -> Option<MorId>;

    /// `g ∘ f` for a pair already known to be composable.
    fn comp(&self, g: MorId, f: MorId) -> MorId {
        self.compose(g, f)
            .unwrap_or_else(|| panic!("{g} ∘ {f} is not composable"))
    }

    /// Composes a chain right to left: `[a, b, c]` is `a ∘ b ∘ c`.
    fn compose_chain(&self, chain: &[MorId]) -> Option<MorId> {
        let (&last, rest) = chain.split_last()?;
        rest.iter()
            .rev()
            .try_fold(last, |acc, &m| self.compose(m, acc))
    }

    fn objects(&self) -> ObjIter {
        ObjIter(0..self.object_count())
    }

    fn morphisms(&self) -> MorIter {
        MorIter(0..self.morphism_count())
    }

    fn has_morphism(&self, m: MorId) -> bool {
        m.0 < self.morphism_count()
    }

    fn is_typed(&self, m: MorId, dom: ObjId, cod: ObjId) -> bool {
        self.has_morphism(m) && self.dom(m) == dom && self.cod(m) == cod
    }

    fn is_identity(&self, m: MorId) -> bool {
        self.identity(self.dom(m)) == m
    }

    /// Some two-sided inverse of `m`, if `m` is an isomorphism.
    fn inverse(&self, m: MorId) -> Option<MorId> {
        let (a, b) = (self.dom(m), self.cod(m));
        self.hom(b, a)
            .iter()
            .copied()
            .find(|&n| self.comp(n, m) == self.identity(a) && self.comp(m, n) == self.identity(b))
    }

    fn isomorphic(&self, a: ObjId, b: ObjId) -> bool {
        self.hom(a, b).iter().any(|&m| self.inverse(m).is_some())
    }
}

#[derive(Debug, Clone)]
pub struct ObjIter(std::ops::Range<usize>);

impl Iterator for ObjIter {
    type Item = ObjId;
    fn next(&mut self) -> Option<ObjId> {
        self.0.next().map(ObjId)
    }
}

#[derive(Debug, Clone)]
pub struct MorIter(std::ops::Range<usize>);

impl Iterator for MorIter {
    type Item = MorId;
    fn next(&mut self) -> Option<MorId> {
        self.0.next().map(MorId)
    }
}

/// A finite category: objects, typed morphisms, identities and a dense
/// composition table indexed by `(g, f)` meaning `g ∘ f`.
///
/// Morphisms are equal exactly when their ids are equal. A `FinCat` is
/// structurally well formed once constructed; whether it satisfies the
/// category axioms is decided by [`validate_category`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<MorId>,
    table: Vec<u32>,
    homs: Vec<Vec<MorId>>,
}

impl FinCat {
    /// Builds a category from raw parts. `table[g * n + f]` holds `g ∘ f`
    /// or `None` for pairs without a composite.
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<MorId>,
        table: Vec<Option<MorId>>,
    ) -> Result<FinCat, StructureError> {
        let n_obj = objects.len();
        let n_mor = morphisms.len();
        if n_mor > MAX_MORPHISMS {
            return Err(StructureError::ResourceGuard {
                morphisms: n_mor,
                limit: MAX_MORPHISMS,
            });
        }
        for (i, m) in morphisms.iter().enumerate() {
            for end in [m.dom, m.cod] {
                if end.0 >= n_obj {
                    return Err(StructureError::IndexOutOfBounds {
                        what: format!("endpoint of morphism {i}"),
                        index: end.0,
                        bound: n_obj,
                    });
                }
            }
        }
        if identities.len() != n_obj {
            return Err(StructureError::TableShape {
                what: "identity list",
                expected: n_obj,
                found: identities.len(),
            });
        }
        for id in &identities {
            if id.0 >= n_mor {
                return Err(StructureError::IndexOutOfBounds {
                    what: "identity".into(),
                    index: id.0,
                    bound: n_mor,
                });
            }
        }
        if table.len() != n_mor * n_mor {
            return Err(StructureError::TableShape {
                what: "composition table",
                expected: n_mor * n_mor,
                found: table.len(),
            });
        }
        let mut dense = Vec::with_capacity(table.len());
        for (k, entry) in table.into_iter().enumerate() {
            match entry {
                Some(m) if m.0 >= n_mor => {
                    return Err(StructureError::IndexOutOfBounds {
                        what: format!("composite of ({}, {})", k / n_mor.max(1), k % n_mor.max(1)),
                        index: m.0,
                        bound: n_mor,
                    })
                }
                Some(m) => dense.push(m.0 as u32),
                None => dense.push(NO_COMPOSITE),
            }
        }
        let mut homs = vec![Vec::new(); n_obj * n_obj];
        for (i, m) in morphisms.iter().enumerate() {
            homs[m.dom.0 * n_obj + m.cod.0].push(MorId(i));
        }
        Ok(FinCat {
            objects,
            morphisms,
            identities,
            table: dense,
            homs,
        })
    }

    /// Builds a category whose composition is computed by `compose`, which
    /// is only consulted on composable pairs.
    pub fn tabulate(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<MorId>,
        mut compose: impl FnMut(MorId, MorId) -> Option<MorId>,
    ) -> Result<FinCat, StructureError> {
        let n = morphisms.len();
        if n > MAX_MORPHISMS {
            return Err(StructureError::ResourceGuard {
                morphisms: n,
                limit: MAX_MORPHISMS,
            });
        }
        let mut table = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                if morphisms[f].cod == morphisms[g].dom {
                    table[g * n + f] = compose(MorId(g), MorId(f));
                }
            }
        }
        FinCat::from_parts(objects, morphisms, identities, table)
    }

    pub fn empty() -> FinCat {
        FinCat::from_parts(vec![], vec![], vec![], vec![]).expect("empty category")
    }

    pub fn object_name(&self, a: ObjId) -> &str {
        &self.objects[a.0]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism(&self, m: MorId) -> &Morphism {
        &self.morphisms[m.0]
    }

    pub fn morphism_list(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism_name(&self, m: MorId) -> &str {
        &self.morphisms[m.0].name
    }

    pub fn find_object(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name).map(ObjId)
    }

    pub fn find_morphism(&self, name: &str) -> Option<MorId> {
        self.morphisms
            .iter()
            .position(|m| m.name == name)
            .map(MorId)
    }

    /// Raw table entry, including entries on non-composable pairs.
    pub fn raw_composite(&self, g: MorId, f: MorId) -> Option<MorId> {
        let v = self.table[g.0 * self.morphisms.len() + f.0];
        (v != NO_COMPOSITE).then_some(MorId(v as usize))
    }

    /// Borrowed opposite view.
    pub fn op(&self) -> Op<'_, FinCat> {
        Op(self)
    }
}

impl Category for FinCat {
    fn object_count(&self) -> usize {
        self.objects.len()
    }

    fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    fn dom(&self, m: MorId) -> ObjId {
        self.morphisms[m.0].dom
    }

    fn cod(&self, m: MorId) -> ObjId {
        self.morphisms[m.0].cod
    }

    fn identity(&self, a: ObjId) -> MorId {
        self.identities[a.0]
    }

    fn hom(&self, a: ObjId, b: ObjId) -> &[MorId] {
        &self.homs[a.0 * self.objects.len() + b.0]
    }

    fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        if self.morphisms[f.0].cod != self.morphisms[g.0].dom {
            return None;
        }
        self.raw_composite(g, f)
    }
}

/// The opposite of a borrowed category view: same ids, directions reversed.
#[derive(Debug, Clone, Copy)]
pub struct Op<'a, C: ?Sized>(pub &'a C);

impl<C: Category + ?Sized> Category for Op<'_, C> {
    fn object_count(&self) -> usize {
        self.0.object_count()
    }

    fn morphism_count(&self) -> usize {
        self.0.morphism_count()
    }

    fn dom(&self, m: MorId) -> ObjId {
        self.0.cod(m)
    }

    fn cod(&self, m: MorId) -> ObjId {
        self.0.dom(m)
    }

    fn identity(&self, a: ObjId) -> MorId {
        self.0.identity(a)
    }

    fn hom(&self, a: ObjId, b: ObjId) -> &[MorId] {
        self.0.hom(b, a)
    }

    fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.0.compose(f, g)
    }
}

/// Checks the category axioms on a structurally well-formed table and
/// reports the first violated law.
pub fn validate_category(cat: &FinCat) -> Verdict {
    for a in cat.objects() {
        let id = cat.identity(a);
        if cat.dom(id) != a || cat.cod(id) != a {
            return Verdict::Fail(Failure::new(
                "identity-type",
                Counterexample::Mistyped {
                    morphism: id,
                    expected_dom: a,
                    expected_cod: a,
                },
            ));
        }
    }
    for g in cat.morphisms() {
        for f in cat.morphisms() {
            let composable = cat.cod(f) == cat.dom(g);
            match (composable, cat.raw_composite(g, f)) {
                (true, None) => {
                    return Verdict::Fail(Failure::new(
                        "missing-composite",
                        Counterexample::NotComposable {
                            first: g,
                            second: f,
                        },
                    ))
                }
                (false, Some(_)) => {
                    return Verdict::Fail(Failure::new(
                        "spurious-composite",
                        Counterexample::NotComposable {
                            first: g,
                            second: f,
                        },
                    ))
                }
                (true, Some(gf)) => {
                    if cat.dom(gf) != cat.dom(f) || cat.cod(gf) != cat.cod(g) {
                        return Verdict::Fail(Failure::new(
                            "composite-type",
                            Counterexample::Mistyped {
                                morphism: gf,
                                expected_dom: cat.dom(f),
                                expected_cod: cat.cod(g),
                            },
                        ));
                    }
                }
                (false, None) => {}
            }
        }
    }
    for f in cat.morphisms() {
        let left = cat.identity(cat.cod(f));
        if cat.comp(left, f) != f {
            return Verdict::Fail(Failure::new(
                "left-unit",
                Counterexample::Unequal {
                    lhs: vec![left, f],
                    rhs: vec![f],
                },
            ));
        }
        let right = cat.identity(cat.dom(f));
        if cat.comp(f, right) != f {
            return Verdict::Fail(Failure::new(
                "right-unit",
                Counterexample::Unequal {
                    lhs: vec![f, right],
                    rhs: vec![f],
                },
            ));
        }
    }
    // Light's test: the g with (h g) f = h (g f) for all h, f are closed
    // under composition and include the identities, so checking g over a
    // generating set covers every triple.
    let ids: Vec<usize> = cat.objects().map(|a| cat.identity(a).0).collect();
    let generators = greedy_generators(cat.morphism_count(), &ids, |x, y| {
        cat.compose(MorId(x), MorId(y)).map(|m| m.0)
    });
    for g in generators.into_iter().map(MorId) {
        for a in cat.objects() {
            for &f in cat.hom(a, cat.dom(g)) {
                let gf = cat.comp(g, f);
                for d in cat.objects() {
                    for &h in cat.hom(cat.cod(g), d) {
                        if cat.comp(h, gf) != cat.comp(cat.comp(h, g), f) {
                            return Verdict::Fail(Failure::new(
                                "associativity",
                                Counterexample::NotAssociative { h, g, f },
                            ));
                        }
                    }
                }
            }
        }
    }
    Verdict::Pass
}

/// Greedy generating set of a partial magma on `0..n`: scans elements in
/// order and keeps each one not yet reachable from `seeds` and the kept
/// elements under `op` (tried both ways round). No associativity is
/// assumed; reachability is closure under the binary operation alone.
pub(crate) fn greedy_generators(
    n: usize,
    seeds: &[usize],
    op: impl Fn(usize, usize) -> Option<usize>,
) -> Vec<usize> {
    let mut reached = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    let mut pending: Vec<usize> = Vec::new();
    let mut generators = Vec::new();
    let admit =
        |x: usize, reached: &mut Vec<bool>, members: &mut Vec<usize>, pending: &mut Vec<usize>| {
            if !reached[x] {
                reached[x] = true;
                members.push(x);
                pending.push(x);
            }
        };
    for &s in seeds {
        admit(s, &mut reached, &mut members, &mut pending);
    }
    for start in 0..=n {
        while let Some(x) = pending.pop() {
            let mut k = 0;
            while k < members.len() {
                let y = members[k];
                for z in [op(x, y), op(y, x)].into_iter().flatten() {
                    admit(z, &mut reached, &mut members, &mut pending);
                }
                k += 1;
            }
        }
        if start < n && !reached[start] {
            generators.push(start);
            admit(start, &mut reached, &mut members, &mut pending);
        }
    }
    generators
}

/// Materialized opposite category. Morphism and object ids are preserved.
pub fn opposite(cat: &FinCat) -> FinCat {
    let n = cat.morphism_count();
    let morphisms = cat
        .morphism_list()
        .iter()
        .map(|m| Morphism {
            name: m.name.clone(),
            dom: m.cod,
            cod: m.dom,
        })
        .collect();
    let mut table = vec![None; n * n];
    for g in 0..n {
        for f in 0..n {
            table[g * n + f] = cat.raw_composite(MorId(f), MorId(g));
        }
    }
    FinCat::from_parts(
        cat.object_names().to_vec(),
        morphisms,
        cat.identities.clone(),
        table,
    )
    .expect("opposite of a well-formed table is well formed")
}

/// Disjoint union `c ⊔ d`. Objects and morphisms of `d` follow those of `c`;
/// names are prefixed only when the two sides collide.
pub fn coproduct_category(c: &FinCat, d: &FinCat) -> Result<FinCat, StructureError> {
    let clash_obj = c.object_names().iter().any(|o| d.find_object(o).is_some());
    let clash_mor = c
        .morphism_list()
        .iter()
        .any(|m| d.find_morphism(&m.name).is_some());
    let tag = |side: &str, name: &str, clash: bool| {
        if clash {
            format!("{side}_{name}")
        } else {
            name.to_string()
        }
    };
    let (oc, mc) = (c.object_count(), c.morphism_count());
    let mut objects: Vec<String> = c
        .object_names()
        .iter()
        .map(|o| tag("l", o, clash_obj))
        .collect();
    objects.extend(d.object_names().iter().map(|o| tag("r", o, clash_obj)));
    let mut morphisms: Vec<Morphism> = c
        .morphism_list()
        .iter()
        .map(|m| Morphism {
            name: tag("l", &m.name, clash_mor),
            ..m.clone()
        })
        .collect();
    morphisms.extend(d.morphism_list().iter().map(|m| Morphism {
        name: tag("r", &m.name, clash_mor),
        dom: ObjId(m.dom.0 + oc),
        cod: ObjId(m.cod.0 + oc),
    }));
    let mut identities = c.identities.clone();
    identities.extend(d.identities.iter().map(|m| MorId(m.0 + mc)));
    FinCat::tabulate(objects, morphisms, identities, |g, f| {
        match (g.0 < mc, f.0 < mc) {
            (true, true) => c.compose(g, f),
            (false, false) => d
                .compose(MorId(g.0 - mc), MorId(f.0 - mc))
                .map(|m| MorId(m.0 + mc)),
            _ => None,
        }
    })
}

/// Constancy flags of a single morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismClass {
    pub constant: bool,
    pub coconstant: bool,
    pub zero: bool,
}

/// `m: A → B` is constant when `m ∘ f = m ∘ g` for every parallel pair
/// `f, g: C → A`, coconstant dually, and zero when both hold.
pub fn classify_morphism<C: Category + ?Sized>(cat: &C, m: MorId) -> MorphismClass {
    let constant = is_constant(cat, m);
    let coconstant = is_coconstant(cat, m);
    MorphismClass {
        constant,
        coconstant,
        zero: constant && coconstant,
    }
}

fn is_constant<C: Category + ?Sized>(cat: &C, m: MorId) -> bool {
    let a = cat.dom(m);
    cat.objects().all(|c| {
        let mut images = cat.hom(c, a).iter().map(|&f| cat.comp(m, f));
        match images.next() {
            Some(first) => images.all(|x| x == first),
            None => true,
        }
    })
}

fn is_coconstant<C: Category + ?Sized>(cat: &C, m: MorId) -> bool {
    let b = cat.cod(m);
    cat.objects().all(|d| {
        let mut images = cat.hom(b, d).iter().map(|&g| cat.comp(g, m));
        match images.next() {
            Some(first) => images.all(|x| x == first),
            None => true,
        }
    })
}

/// A chosen zero morphism for every ordered pair of objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroStructure {
    objects: usize,
    zero_of: Vec<MorId>,
}

impl ZeroStructure {
    pub fn new(objects: usize, zero_of: Vec<MorId>) -> ZeroStructure {
        assert_eq!(zero_of.len(), objects * objects);
        ZeroStructure { objects, zero_of }
    }

    pub fn zero(&self, a: ObjId, b: ObjId) -> MorId {
        self.zero_of[a.0 * self.objects + b.0]
    }

    /// Exhaustively checks `g ∘ 0_{A,B} ∘ f = 0_{A',B'}` for every
    /// `f: A' → A` and `g: B → B'`.
    pub fn check_absorbing<C: Category + ?Sized>(&self, cat: &C) -> Verdict {
        for a in cat.objects() {
            for b in cat.objects() {
                let z = self.zero(a, b);
                if !cat.is_typed(z, a, b) {
                    return Verdict::Fail(Failure::new(
                        "zero-type",
                        Counterexample::Mistyped {
                            morphism: z,
                            expected_dom: a,
                            expected_cod: b,
                        },
                    ));
                }
            }
        }
        for f in cat.morphisms() {
            let (a2, a) = (cat.dom(f), cat.cod(f));
            for b in cat.objects() {
                let zf = cat.comp(self.zero(a, b), f);
                for b2 in cat.objects() {
                    for &g in cat.hom(b, b2) {
                        if cat.comp(g, zf) != self.zero(a2, b2) {
                            return Verdict::Fail(Failure::new(
                                "absorbing-law",
                                Counterexample::Unequal {
                                    lhs: vec![g, self.zero(a, b), f],
                                    rhs: vec![self.zero(a2, b2)],
                                },
                            ));
                        }
                    }
                }
            }
        }
        Verdict::Pass
    }
}

/// Outcome of [`find_zero_structure`].
#[derive(Debug, Clone)]
pub struct ZeroSearch {
    pub structure: Option<ZeroStructure>,
    pub verdict: Verdict,
}

/// Looks for a zero morphism in every homset. Zero morphisms between a
/// fixed pair are unique, so finding two is reported as an internal
/// inconsistency rather than a choice.
pub fn find_zero_structure<C: Category + ?Sized>(cat: &C) -> ZeroSearch {
    let n = cat.object_count();
    let mut zero_of = Vec::with_capacity(n * n);
    for a in cat.objects() {
        for b in cat.objects() {
            let zeros: Vec<MorId> = cat
                .hom(a, b)
                .iter()
                .copied()
                .filter(|&m| classify_morphism(cat, m).zero)
                .collect();
            match zeros.as_slice() {
                [] => {
                    return ZeroSearch {
                        structure: None,
                        verdict: Verdict::Fail(Failure::new(
                            "no-zero-morphism",
                            Counterexample::NoZero { from: a, to: b },
                        )),
                    }
                }
                [z] => zero_of.push(*z),
                _ => {
                    return ZeroSearch {
                        structure: None,
                        verdict: Verdict::Fail(Failure::new(
                            "internal: zero morphisms not unique",
                            Counterexample::ManyZeros {
                                from: a,
                                to: b,
                                zeros,
                            },
                        )),
                    }
                }
            }
        }
    }
    let zs = ZeroStructure::new(n, zero_of);
    let verdict = zs.check_absorbing(cat);
    if verdict.is_pass() {
        ZeroSearch {
            structure: Some(zs),
            verdict,
        }
    } else {
        ZeroSearch {
            structure: None,
            verdict,
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Thin category on `n` objects with a morphism `i → j` whenever
    /// `related(i, j)`; the relation must be a preorder.
    pub fn thin(n: usize, related: impl Fn(usize, usize) -> bool) -> FinCat {
        let objects: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let mut morphisms = Vec::new();
        let mut index = vec![None; n * n];
        for i in 0..n {
            for j in 0..n {
                if related(i, j) {
                    index[i * n + j] = Some(MorId(morphisms.len()));
                    morphisms.push(Morphism {
                        name: format!("x{i}_x{j}"),
                        dom: ObjId(i),
                        cod: ObjId(j),
                    });
                }
            }
        }
        let ids = (0..n).map(|i| index[i * n + i].unwrap()).collect();
        let ends: Vec<(usize, usize)> = morphisms.iter().map(|m| (m.dom.0, m.cod.0)).collect();
        FinCat::tabulate(objects, morphisms, ids, |g, f| {
            index[ends[f.0].0 * n + ends[g.0].1]
        })
        .unwrap()
    }

    pub fn terminal() -> FinCat {
        thin(1, |_, _| true)
    }

    pub fn walking_arrow() -> FinCat {
        thin(2, |i, j| i <= j)
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn terminal_and_walking_arrow_validate() {
        assert!(validate_category(&terminal()).is_pass());
        assert!(validate_category(&walking_arrow()).is_pass());
        assert!(validate_category(&FinCat::empty()).is_pass());
    }

    #[test]
    fn out_of_bounds_is_a_structure_error() {
        let err = FinCat::from_parts(
            vec!["A".into()],
            vec![Morphism {
                name: "f".into(),
                dom: ObjId(0),
                cod: ObjId(3),
            }],
            vec![MorId(0)],
            vec![Some(MorId(0))],
        )
        .unwrap_err();
        assert!(matches!(
            err,
            StructureError::IndexOutOfBounds { index: 3, .. }
        ));
    }

    // Walking arrow extended with a loop e: B → B, e∘e = e, then
    // deliberately breaking associativity in the table.
    #[test]
    fn associativity_violation_names_the_triple() {
        let objects = vec!["A".to_string(), "B".to_string()];
        let mk = |name: &str, d, c| Morphism {
            name: name.into(),
            dom: ObjId(d),
            cod: ObjId(c),
        };
        // 0 idA, 1 idB, 2 u: A→B, 3 v: A→B, 4 e: B→B
        let morphisms = vec![
            mk("idA", 0, 0),
            mk("idB", 1, 1),
            mk("u", 0, 1),
            mk("v", 0, 1),
            mk("e", 1, 1),
        ];
        let ids = vec![MorId(0), MorId(1)];
        let good = |g: MorId, f: MorId| -> Option<MorId> {
            Some(match (g.0, f.0) {
                (0, x) | (x, 0) => MorId(x),
                (1, x) | (x, 1) => MorId(x),
                (4, 2) | (4, 3) => MorId(3),
                (4, 4) => MorId(4),
                _ => return None,
            })
        };
        let cat = FinCat::tabulate(objects.clone(), morphisms.clone(), ids.clone(), good).unwrap();
        assert!(validate_category(&cat).is_pass());

        // e∘e = idB breaks (e∘e)∘u = e∘(e∘u): lhs idB∘u = u, rhs e∘v = v.
        let bad = |g: MorId, f: MorId| -> Option<MorId> {
            if (g.0, f.0) == (4, 4) {
                Some(MorId(1))
            } else {
                good(g, f)
            }
        };
        let cat = FinCat::tabulate(objects, morphisms, ids, bad).unwrap();
        let v = validate_category(&cat);
        let failure = v.failure().expect("must fail");
        assert_eq!(failure.clause, "associativity");
        let cx = failure.counterexample.as_ref().unwrap();
        assert!(cx.replays(&cat));
        let Counterexample::NotAssociative { h, g, f } = *cx else {
            panic!("{cx:?}");
        };
        assert_ne!(
            cat.comp(h, cat.comp(g, f)),
            cat.comp(cat.comp(h, g), f)
        );
        assert!([h, g, f].contains(&MorId(4)));
    }

    #[test]
    fn opposite_is_an_involution() {
        for c in [terminal(), walking_arrow(), thin(3, |_, _| true)] {
            assert_eq!(opposite(&opposite(&c)), c);
            assert!(validate_category(&opposite(&c)).is_pass());
        }
        let op = opposite(&walking_arrow());
        let u = op.find_morphism("x0_x1").unwrap();
        assert_eq!((op.dom(u), op.cod(u)), (ObjId(1), ObjId(0)));
    }

    #[test]
    fn coproduct_with_empty_and_terminal() {
        let c = walking_arrow();
        let cu = coproduct_category(&c, &FinCat::empty()).unwrap();
        assert_eq!(cu, c);
        let two = coproduct_category(&terminal(), &terminal()).unwrap();
        assert_eq!(two.object_count(), 2);
        assert_eq!(two.morphism_count(), 2);
        assert!(two.hom(ObjId(0), ObjId(1)).is_empty());
        assert!(validate_category(&two).is_pass());
    }

    #[test]
    fn terminal_identity_is_zero() {
        let t = terminal();
        let class = classify_morphism(&t, MorId(0));
        assert!(class.zero && class.constant && class.coconstant);
        assert!(find_zero_structure(&t).structure.is_some());
    }

    #[test]
    fn opposite_swaps_constancy() {
        let c = thin(3, |i, j| i <= j);
        let op = opposite(&c);
        for m in c.morphisms() {
            let a = classify_morphism(&c, m);
            let b = classify_morphism(&op, m);
            assert_eq!((a.constant, a.coconstant), (b.coconstant, b.constant));
            assert_eq!(b, classify_morphism(&c.op(), m));
        }
    }

    #[test]
    fn discrete_two_has_no_zero_structure() {
        let c = thin(2, |i, j| i == j);
        let search = find_zero_structure(&c);
        assert!(search.structure.is_none());
        let failure = search.verdict.failure().unwrap();
        assert_eq!(
            failure.counterexample,
            Some(Counterexample::NoZero {
                from: ObjId(0),
                to: ObjId(1)
            })
        );
    }
}
