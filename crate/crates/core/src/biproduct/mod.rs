//! Biproducts without enrichment.
//!
//! A biproduct of `A` and `B` is a tuple `(A⊕B, p_A, p_B, i_A, i_B)` that is
//! at once a product and a coproduct, whose projections split the
//! injections, and whose two canonical idempotents `i_A p_A` and `i_B p_B`
//! commute. The classical zero-morphism and commutative-monoid variants live
//! alongside for comparison.

mod ambi;
mod cmon;
mod nary;
pub mod oracle;
mod verify;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::category::{Category, MorId, ObjId, ZeroStructure};
use crate::universal::{check_coproduct, check_product, find_products, CospanWitness, SpanWitness};
use crate::verdict::{Counterexample, Failure, Verdict};

pub use ambi::{verify_ambiadjunction, BiproductAssignment};
pub use cmon::{check_cmon_biproduct, CMonStructure, HomMonoid, ValidCMon};
pub use nary::{check_nary_biproduct, ternary_from_nested, NaryBiproductWitness};
pub use verify::{
    check_sum_equals_product_of_morphisms, definitions_agree, verify_corollary_zeros,
    verify_lemma_zero, verify_uniqueness, verify_uniqueness_all, AgreementSummary, DefinitionCheck,
    SumProduct,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BiproductWitness {
    pub carrier: ObjId,
    pub p_a: MorId,
    pub p_b: MorId,
    pub i_a: MorId,
    pub i_b: MorId,
}

impl BiproductWitness {
    pub fn span(&self) -> SpanWitness {
        SpanWitness {
            apex: self.carrier,
            left: self.p_a,
            right: self.p_b,
        }
    }

    pub fn cospan(&self) -> CospanWitness {
        CospanWitness {
            nadir: self.carrier,
            left: self.i_a,
            right: self.i_b,
        }
    }

    /// The same tuple read in the opposite category: injections become
    /// projections and vice versa.
    pub fn dual(&self) -> BiproductWitness {
        BiproductWitness {
            carrier: self.carrier,
            p_a: self.i_a,
            p_b: self.i_b,
            i_a: self.p_a,
            i_b: self.p_b,
        }
    }

    /// The pair `(A, B)` read off the projections.
    pub fn factors<C: Category + ?Sized>(&self, cat: &C) -> (ObjId, ObjId) {
        (cat.cod(self.p_a), cat.cod(self.p_b))
    }

    pub fn morphisms(&self) -> Vec<MorId> {
        vec![self.p_a, self.p_b, self.i_a, self.i_b]
    }
}

pub(crate) fn check_typing<C: Category + ?Sized>(
    cat: &C,
    w: &BiproductWitness,
    a: ObjId,
    b: ObjId,
) -> Verdict {
    let c = w.carrier;
    for (m, d, e) in [(w.p_a, c, a), (w.p_b, c, b), (w.i_a, a, c), (w.i_b, b, c)] {
        if !cat.is_typed(m, d, e) {
            return Verdict::fail(
                "well-typed",
                Counterexample::Mistyped {
                    morphism: m,
                    expected_dom: d,
                    expected_cod: e,
                },
            );
        }
    }
    Verdict::Pass
}

fn retraction<C: Category + ?Sized>(cat: &C, p: MorId, i: MorId, clause: &str) -> Verdict {
    let id = cat.identity(cat.dom(i));
    if cat.comp(p, i) == id {
        Verdict::Pass
    } else {
        Verdict::fail(
            clause,
            Counterexample::Unequal {
                lhs: vec![p, i],
                rhs: vec![id],
            },
        )
    }
}

/// `i_A p_A i_B p_B = i_B p_B i_A p_A`, evaluated literally.
fn idempotents_commute<C: Category + ?Sized>(cat: &C, w: &BiproductWitness) -> Verdict {
    let lhs = vec![w.i_a, w.p_a, w.i_b, w.p_b];
    let rhs = vec![w.i_b, w.p_b, w.i_a, w.p_a];
    if cat.compose_chain(&lhs) == cat.compose_chain(&rhs) {
        Verdict::Pass
    } else {
        Verdict::fail(
            "commuting-idempotents",
            Counterexample::Unequal { lhs, rhs },
        )
    }
}

fn first_failure(steps: impl IntoIterator<Item = Verdict>) -> Verdict {
    for v in steps {
        if !v.is_pass() {
            return v;
        }
    }
    Verdict::Pass
}

/// Checks the enrichment-free definition: product, coproduct, both
/// retractions, and commuting idempotents, reporting the first failing
/// clause in that order.
pub fn check_biproduct<C: Category + ?Sized>(
    cat: &C,
    w: &BiproductWitness,
    a: ObjId,
    b: ObjId,
) -> Verdict {
    let typing = check_typing(cat, w, a, b);
    if !typing.is_pass() {
        return typing;
    }
    // Lazily evaluated so later clauses never run after a failure.
    let clauses: [&dyn Fn() -> Verdict; 5] = [
        &|| check_product(cat, &w.span(), a, b).within("product"),
        &|| check_coproduct(cat, &w.cospan(), a, b).within("coproduct"),
        &|| retraction(cat, w.p_a, w.i_a, "retraction-a"),
        &|| retraction(cat, w.p_b, w.i_b, "retraction-b"),
        &|| idempotents_commute(cat, w),
    ];
    first_failure(clauses.iter().map(|c| c()))
}

/// The classical definition with zero morphisms: product and coproduct,
/// retractions, and `p_B i_A = 0_{A,B}`, `p_A i_B = 0_{B,A}`.
pub fn check_zero_def_biproduct<C: Category + ?Sized>(
    cat: &C,
    zs: &ZeroStructure,
    w: &BiproductWitness,
    a: ObjId,
    b: ObjId,
) -> Verdict {
    let typing = check_typing(cat, w, a, b);
    if !typing.is_pass() {
        return typing;
    }
    let zero_clause = |p: MorId, i: MorId, from: ObjId, to: ObjId, clause: &str| {
        let z = zs.zero(from, to);
        if cat.comp(p, i) == z {
            Verdict::Pass
        } else {
            Verdict::fail(
                clause,
                Counterexample::Unequal {
                    lhs: vec![p, i],
                    rhs: vec![z],
                },
            )
        }
    };
    let clauses: [&dyn Fn() -> Verdict; 6] = [
        &|| check_product(cat, &w.span(), a, b).within("product"),
        &|| check_coproduct(cat, &w.cospan(), a, b).within("coproduct"),
        &|| retraction(cat, w.p_a, w.i_a, "retraction-a"),
        &|| retraction(cat, w.p_b, w.i_b, "retraction-b"),
        &|| zero_clause(w.p_b, w.i_a, a, b, "zero-ab"),
        &|| zero_clause(w.p_a, w.i_b, b, a, "zero-ba"),
    ];
    first_failure(clauses.iter().map(|c| c()))
}

/// All biproduct witnesses for `(a, b)`, ordered lexicographically by
/// `(carrier, p_A, p_B, i_A, i_B)`.
///
/// Product spans are certified first; injections are then filtered by the
/// equations before the coproduct property is checked.
pub fn find_biproducts<C: Category + ?Sized>(cat: &C, a: ObjId, b: ObjId) -> Vec<BiproductWitness> {
    let mut found = Vec::new();
    let mut coproduct_cache: HashMap<CospanWitness, bool> = HashMap::new();
    for span in find_products(cat, a, b) {
        let c = span.apex;
        let (p_a, p_b) = (span.left, span.right);
        let id_a = cat.identity(a);
        let id_b = cat.identity(b);
        let sections_a: Vec<MorId> = cat
            .hom(a, c)
            .iter()
            .copied()
            .filter(|&i| cat.comp(p_a, i) == id_a)
            .collect();
        let sections_b: Vec<MorId> = cat
            .hom(b, c)
            .iter()
            .copied()
            .filter(|&i| cat.comp(p_b, i) == id_b)
            .collect();
        for &i_a in &sections_a {
            for &i_b in &sections_b {
                let w = BiproductWitness {
                    carrier: c,
                    p_a,
                    p_b,
                    i_a,
                    i_b,
                };
                if !idempotents_commute(cat, &w).is_pass() {
                    continue;
                }
                let cospan = w.cospan();
                let is_coproduct = *coproduct_cache
                    .entry(cospan)
                    .or_insert_with(|| check_coproduct(cat, &cospan, a, b).is_pass());
                if is_coproduct {
                    found.push(w);
                }
            }
        }
    }
    found
}

/// Whether `(a, b)` has at least one biproduct.
pub fn has_biproduct<C: Category + ?Sized>(cat: &C, a: ObjId, b: ObjId) -> bool {
    !find_biproducts(cat, a, b).is_empty()
}

/// `find_biproducts` over every ordered pair, keeping only nonempty results.
pub fn all_biproducts<C: Category + ?Sized>(
    cat: &C,
) -> Vec<((ObjId, ObjId), Vec<BiproductWitness>)> {
    let mut out = Vec::new();
    for a in cat.objects() {
        for b in cat.objects() {
            let ws = find_biproducts(cat, a, b);
            if !ws.is_empty() {
                out.push(((a, b), ws));
            }
        }
    }
    out
}

pub(crate) fn precondition_certified<C: Category + ?Sized>(
    cat: &C,
    w: &BiproductWitness,
    what: &str,
) -> Result<(ObjId, ObjId), crate::error::VerifyError> {
    if !cat.has_morphism(w.p_a) || !cat.has_morphism(w.p_b) {
        return Err(crate::error::VerifyError::Precondition(format!(
            "{what}: unknown morphism"
        )));
    }
    let (a, b) = w.factors(cat);
    match check_biproduct(cat, w, a, b) {
        Verdict::Fail(Failure { clause, .. }) => Err(crate::error::VerifyError::Precondition(
            format!("{what} is not a certified biproduct ({clause})"),
        )),
        _ => Ok((a, b)),
    }
}

#[cfg(test)]
mod tests;
