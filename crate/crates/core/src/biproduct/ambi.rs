//! `(−)⊕(−)` as a two-sided adjoint to the diagonal `C → C × C`.
//!
//! The product category is never tabulated: its objects and morphisms are
//! handled as pairs.

use std::collections::HashMap;

use crate::category::{Category, MorId, ObjId};
use crate::error::VerifyError;
use crate::universal::{comediate, mediate};
use crate::verdict::{Counterexample, Verdict};

use super::{check_biproduct, find_biproducts, BiproductWitness};

/// A chosen biproduct for every ordered pair of objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiproductAssignment {
    objects: usize,
    entries: Vec<BiproductWitness>,
}

impl BiproductAssignment {
    pub fn new(objects: usize, entries: Vec<BiproductWitness>) -> BiproductAssignment {
        assert_eq!(entries.len(), objects * objects);
        BiproductAssignment { objects, entries }
    }

    /// The first witness found for each pair; fails when some pair has none.
    pub fn canonical<C: Category + ?Sized>(cat: &C) -> Result<BiproductAssignment, VerifyError> {
        let mut entries = Vec::new();
        for a in cat.objects() {
            for b in cat.objects() {
                match find_biproducts(cat, a, b).first() {
                    Some(w) => entries.push(*w),
                    None => {
                        return Err(VerifyError::Precondition(format!(
                            "no biproduct for the pair ({a}, {b}); no total assignment exists"
                        )))
                    }
                }
            }
        }
        Ok(BiproductAssignment::new(cat.object_count(), entries))
    }

    pub fn get(&self, a: ObjId, b: ObjId) -> &BiproductWitness {
        &self.entries[a.0 * self.objects + b.0]
    }

    fn certify<C: Category + ?Sized>(&self, cat: &C) -> Result<(), VerifyError> {
        if self.objects != cat.object_count() {
            return Err(VerifyError::Precondition(
                "assignment does not cover the category".into(),
            ));
        }
        for a in cat.objects() {
            for b in cat.objects() {
                if let Verdict::Fail(f) = check_biproduct(cat, self.get(a, b), a, b) {
                    return Err(VerifyError::Precondition(format!(
                        "assignment entry ({a}, {b}) is not a biproduct ({})",
                        f.clause
                    )));
                }
            }
        }
        Ok(())
    }
}

struct Ambi<'a, C: ?Sized> {
    cat: &'a C,
    ba: &'a BiproductAssignment,
    plus: HashMap<(MorId, MorId), MorId>,
}

fn unequal(clause: &str, lhs: Vec<MorId>, rhs: Vec<MorId>) -> Verdict {
    Verdict::fail(clause, Counterexample::Unequal { lhs, rhs })
}

impl<'a, C: Category + ?Sized> Ambi<'a, C> {
    fn w(&self, a: ObjId, b: ObjId) -> &'a BiproductWitness {
        self.ba.get(a, b)
    }

    fn plus(&self, f: MorId, g: MorId) -> MorId {
        self.plus[&(f, g)]
    }

    /// `f ⊕ g` on every pair of morphisms, computed as a tuple and checked
    /// against the cotuple.
    fn tabulate_plus(&mut self) -> Result<Verdict, VerifyError> {
        let cat = self.cat;
        for f in cat.morphisms() {
            for g in cat.morphisms() {
                let (a, a2, b, b2) = (cat.dom(f), cat.cod(f), cat.dom(g), cat.cod(g));
                let src = self.w(a, b);
                let dst = self.w(a2, b2);
                let tuple = mediate(cat, &dst.span(), cat.comp(f, src.p_a), cat.comp(g, src.p_b))?;
                let cotuple = comediate(
                    cat,
                    &src.cospan(),
                    cat.comp(dst.i_a, f),
                    cat.comp(dst.i_b, g),
                )?;
                if tuple != cotuple {
                    return Ok(unequal(
                        "functor: tuple equals cotuple",
                        vec![tuple],
                        vec![cotuple],
                    ));
                }
                self.plus.insert((f, g), tuple);
            }
        }
        Ok(Verdict::Pass)
    }

    fn functoriality(&self) -> Verdict {
        let cat = self.cat;
        for a in cat.objects() {
            for b in cat.objects() {
                let (ia, ib) = (cat.identity(a), cat.identity(b));
                let id = cat.identity(self.w(a, b).carrier);
                if self.plus(ia, ib) != id {
                    return unequal("functor: identities", vec![self.plus(ia, ib)], vec![id]);
                }
            }
        }
        for f in cat.morphisms() {
            for g in cat.morphisms() {
                let fg = self.plus(f, g);
                for f2 in cat.morphisms().filter(|&m| cat.dom(m) == cat.cod(f)) {
                    for g2 in cat.morphisms().filter(|&m| cat.dom(m) == cat.cod(g)) {
                        let lhs = self.plus(cat.comp(f2, f), cat.comp(g2, g));
                        if lhs != cat.comp(self.plus(f2, g2), fg) {
                            return unequal(
                                "functor: composition",
                                vec![lhs],
                                vec![self.plus(f2, g2), fg],
                            );
                        }
                    }
                }
            }
        }
        Verdict::Pass
    }

    /// Δ ⊣ ⊕: `hom(X, A) × hom(X, B) ≅ hom(X, A⊕B)` via tupling, natural
    /// in `X` and in `(A, B)`; the counit `(p_A, p_B)` is natural.
    fn right_adjunction(&self) -> Result<Verdict, VerifyError> {
        let cat = self.cat;
        for a in cat.objects() {
            for b in cat.objects() {
                let w = self.w(a, b);
                for x in cat.objects() {
                    let mut image = Vec::new();
                    for &f in cat.hom(x, a) {
                        for &g in cat.hom(x, b) {
                            let h = mediate(cat, &w.span(), f, g)?;
                            if cat.comp(w.p_a, h) != f || cat.comp(w.p_b, h) != g {
                                return Ok(unequal(
                                    "right adjunction: counit",
                                    vec![w.p_a, h],
                                    vec![f],
                                ));
                            }
                            image.push(h);
                            // naturality in X
                            for x2 in cat.objects() {
                                for &k in cat.hom(x2, x) {
                                    let lhs =
                                        mediate(cat, &w.span(), cat.comp(f, k), cat.comp(g, k))?;
                                    if lhs != cat.comp(h, k) {
                                        return Ok(unequal(
                                            "right adjunction: naturality in X",
                                            vec![lhs],
                                            vec![h, k],
                                        ));
                                    }
                                }
                            }
                            // naturality in (A, B)
                            for u in cat.morphisms().filter(|&u| cat.dom(u) == a) {
                                for v in cat.morphisms().filter(|&v| cat.dom(v) == b) {
                                    let w2 = self.w(cat.cod(u), cat.cod(v));
                                    let rhs =
                                        mediate(cat, &w2.span(), cat.comp(u, f), cat.comp(v, g))?;
                                    if cat.comp(self.plus(u, v), h) != rhs {
                                        return Ok(unequal(
                                            "right adjunction: naturality in (A, B)",
                                            vec![self.plus(u, v), h],
                                            vec![rhs],
                                        ));
                                    }
                                }
                            }
                        }
                    }
                    image.sort();
                    image.dedup();
                    if image.len() != cat.hom(x, w.carrier).len() {
                        return Ok(Verdict::fail(
                            "right adjunction: bijection",
                            Counterexample::NoMediator {
                                object: x,
                                cone: vec![w.p_a, w.p_b],
                            },
                        ));
                    }
                }
                for u in cat.morphisms().filter(|&u| cat.dom(u) == a) {
                    for v in cat.morphisms().filter(|&v| cat.dom(v) == b) {
                        let w2 = self.w(cat.cod(u), cat.cod(v));
                        let uv = self.plus(u, v);
                        if cat.comp(u, w.p_a) != cat.comp(w2.p_a, uv) {
                            return Ok(unequal(
                                "right adjunction: counit naturality",
                                vec![u, w.p_a],
                                vec![w2.p_a, uv],
                            ));
                        }
                        if cat.comp(v, w.p_b) != cat.comp(w2.p_b, uv) {
                            return Ok(unequal(
                                "right adjunction: counit naturality",
                                vec![v, w.p_b],
                                vec![w2.p_b, uv],
                            ));
                        }
                    }
                }
            }
        }
        Ok(Verdict::Pass)
    }

    /// ⊕ ⊣ Δ: `hom(A⊕B, X) ≅ hom(A, X) × hom(B, X)` via cotupling, natural
    /// in `X` and in `(A, B)`; the unit `(i_A, i_B)` is natural.
    fn left_adjunction(&self) -> Result<Verdict, VerifyError> {
        let cat = self.cat;
        for a in cat.objects() {
            for b in cat.objects() {
                let w = self.w(a, b);
                for x in cat.objects() {
                    let mut image = Vec::new();
                    for &f in cat.hom(a, x) {
                        for &g in cat.hom(b, x) {
                            let h = comediate(cat, &w.cospan(), f, g)?;
                            if cat.comp(h, w.i_a) != f || cat.comp(h, w.i_b) != g {
                                return Ok(unequal(
                                    "left adjunction: unit",
                                    vec![h, w.i_a],
                                    vec![f],
                                ));
                            }
                            image.push(h);
                            for x2 in cat.objects() {
                                for &k in cat.hom(x, x2) {
                                    let lhs = comediate(
                                        cat,
                                        &w.cospan(),
                                        cat.comp(k, f),
                                        cat.comp(k, g),
                                    )?;
                                    if lhs != cat.comp(k, h) {
                                        return Ok(unequal(
                                            "left adjunction: naturality in X",
                                            vec![lhs],
                                            vec![k, h],
                                        ));
                                    }
                                }
                            }
                            for u in cat.morphisms().filter(|&u| cat.cod(u) == a) {
                                for v in cat.morphisms().filter(|&v| cat.cod(v) == b) {
                                    let w2 = self.w(cat.dom(u), cat.dom(v));
                                    let rhs = comediate(
                                        cat,
                                        &w2.cospan(),
                                        cat.comp(f, u),
                                        cat.comp(g, v),
                                    )?;
                                    if cat.comp(h, self.plus(u, v)) != rhs {
                                        return Ok(unequal(
                                            "left adjunction: naturality in (A, B)",
                                            vec![h, self.plus(u, v)],
                                            vec![rhs],
                                        ));
                                    }
                                }
                            }
                        }
                    }
                    image.sort();
                    image.dedup();
                    if image.len() != cat.hom(w.carrier, x).len() {
                        return Ok(Verdict::fail(
                            "left adjunction: bijection",
                            Counterexample::NoMediator {
                                object: x,
                                cone: vec![w.i_a, w.i_b],
                            },
                        ));
                    }
                }
                for u in cat.morphisms().filter(|&u| cat.dom(u) == a) {
                    for v in cat.morphisms().filter(|&v| cat.dom(v) == b) {
                        let w2 = self.w(cat.cod(u), cat.cod(v));
                        let uv = self.plus(u, v);
                        if cat.comp(uv, w.i_a) != cat.comp(w2.i_a, u) {
                            return Ok(unequal(
                                "left adjunction: unit naturality",
                                vec![uv, w.i_a],
                                vec![w2.i_a, u],
                            ));
                        }
                        if cat.comp(uv, w.i_b) != cat.comp(w2.i_b, v) {
                            return Ok(unequal(
                                "left adjunction: unit naturality",
                                vec![uv, w.i_b],
                                vec![w2.i_b, v],
                            ));
                        }
                    }
                }
            }
        }
        Ok(Verdict::Pass)
    }

    /// For every `f: B → C` the square
    /// `A --i_A--> A⊕B --p_B--> B` over `A --i_A--> A⊕C --p_C--> C`
    /// with sides `id`, `id ⊕ f`, `f` commutes.
    fn theorem_square(&self) -> Verdict {
        let cat = self.cat;
        for a in cat.objects() {
            for f in cat.morphisms() {
                let (b, c) = (cat.dom(f), cat.cod(f));
                let top = self.w(a, b);
                let bottom = self.w(a, c);
                let mid = self.plus(cat.identity(a), f);
                if cat.comp(mid, top.i_a) != bottom.i_a {
                    return unequal(
                        "naturality square: left",
                        vec![mid, top.i_a],
                        vec![bottom.i_a],
                    );
                }
                if cat.comp(bottom.p_b, mid) != cat.comp(f, top.p_b) {
                    return unequal(
                        "naturality square: right",
                        vec![bottom.p_b, mid],
                        vec![f, top.p_b],
                    );
                }
                let lhs = vec![f, top.p_b, top.i_a];
                let rhs = vec![bottom.p_b, bottom.i_a];
                if cat.compose_chain(&lhs) != cat.compose_chain(&rhs) {
                    return unequal("naturality square", lhs, rhs);
                }
            }
        }
        Verdict::Pass
    }

    fn section(&self) -> Verdict {
        let cat = self.cat;
        for a in cat.objects() {
            for b in cat.objects() {
                let w = self.w(a, b);
                for (p, i, x) in [(w.p_a, w.i_a, a), (w.p_b, w.i_b, b)] {
                    if cat.comp(p, i) != cat.identity(x) {
                        return unequal("section", vec![p, i], vec![cat.identity(x)]);
                    }
                }
            }
        }
        Verdict::Pass
    }
}

/// Checks that the assignment extends to a functor `C × C → C` that is both
/// left and right adjoint to the diagonal, with each unit component a
/// section of the corresponding counit component.
pub fn verify_ambiadjunction<C: Category + ?Sized>(
    cat: &C,
    ba: &BiproductAssignment,
) -> Result<Verdict, VerifyError> {
    ba.certify(cat)?;
    let mut ambi = Ambi {
        cat,
        ba,
        plus: HashMap::new(),
    };
    let v = ambi.tabulate_plus()?;
    if !v.is_pass() {
        return Ok(v);
    }
    for v in [
        ambi.functoriality(),
        ambi.right_adjunction()?,
        ambi.left_adjunction()?,
        ambi.theorem_square(),
        ambi.section(),
    ] {
        if !v.is_pass() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}
