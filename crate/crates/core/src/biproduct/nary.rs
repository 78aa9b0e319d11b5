use serde::{Deserialize, Serialize};

use crate::category::{Category, MorId, ObjId, Op};
use crate::universal::check_cone;
use crate::verdict::{Counterexample, Verdict};

use super::BiproductWitness;

/// A finite biproduct `⊕_k A_k` with one projection and one injection per
/// factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NaryBiproductWitness {
    pub carrier: ObjId,
    pub factors: Vec<ObjId>,
    pub projections: Vec<MorId>,
    pub injections: Vec<MorId>,
}

impl From<(&BiproductWitness, ObjId, ObjId)> for NaryBiproductWitness {
    fn from((w, a, b): (&BiproductWitness, ObjId, ObjId)) -> Self {
        NaryBiproductWitness {
            carrier: w.carrier,
            factors: vec![a, b],
            projections: vec![w.p_a, w.p_b],
            injections: vec![w.i_a, w.i_b],
        }
    }
}

/// n-ary product and coproduct, `p_k i_k = id` for every factor, and the
/// idempotents `i_k p_k` commuting pairwise.
pub fn check_nary_biproduct<C: Category + ?Sized>(cat: &C, w: &NaryBiproductWitness) -> Verdict {
    let n = w.factors.len();
    if w.projections.len() != n || w.injections.len() != n {
        return Verdict::Fail(crate::verdict::Failure::bare("well-typed"));
    }
    for k in 0..n {
        let i = w.injections[k];
        if !cat.is_typed(i, w.factors[k], w.carrier) {
            return Verdict::fail(
                "well-typed",
                Counterexample::Mistyped {
                    morphism: i,
                    expected_dom: w.factors[k],
                    expected_cod: w.carrier,
                },
            );
        }
    }
    let product = check_cone(cat, w.carrier, &w.projections, &w.factors);
    if !product.is_pass() {
        return product.within("product");
    }
    let coproduct = check_cone(&Op(cat), w.carrier, &w.injections, &w.factors);
    if !coproduct.is_pass() {
        return coproduct.within("coproduct");
    }
    for k in 0..n {
        let (p, i) = (w.projections[k], w.injections[k]);
        let id = cat.identity(w.factors[k]);
        if cat.comp(p, i) != id {
            return Verdict::fail(
                format!("retraction-{k}"),
                Counterexample::Unequal {
                    lhs: vec![p, i],
                    rhs: vec![id],
                },
            );
        }
    }
    for k in 0..n {
        for l in k + 1..n {
            let lhs = vec![
                w.injections[k],
                w.projections[k],
                w.injections[l],
                w.projections[l],
            ];
            let rhs = vec![
                w.injections[l],
                w.projections[l],
                w.injections[k],
                w.projections[k],
            ];
            if cat.compose_chain(&lhs) != cat.compose_chain(&rhs) {
                return Verdict::fail(
                    format!("commuting-idempotents-{k}-{l}"),
                    Counterexample::Unequal { lhs, rhs },
                );
            }
        }
    }
    Verdict::Pass
}

/// The ternary witness induced by `A⊕B` and `(A⊕B)⊕C`: projections
/// `p_A q_P, p_B q_P, q_C` and injections `j_P i_A, j_P i_B, j_C`.
///
/// `inner` must be a witness for `(A, B)` and `outer` one for
/// `(carrier(inner), C)`.
pub fn ternary_from_nested<C: Category + ?Sized>(
    cat: &C,
    inner: &BiproductWitness,
    outer: &BiproductWitness,
) -> Option<NaryBiproductWitness> {
    let (a, b) = inner.factors(cat);
    let (p, c) = outer.factors(cat);
    if p != inner.carrier {
        return None;
    }
    Some(NaryBiproductWitness {
        carrier: outer.carrier,
        factors: vec![a, b, c],
        projections: vec![
            cat.compose(inner.p_a, outer.p_a)?,
            cat.compose(inner.p_b, outer.p_a)?,
            outer.p_b,
        ],
        injections: vec![
            cat.compose(outer.i_a, inner.i_a)?,
            cat.compose(outer.i_a, inner.i_b)?,
            outer.i_b,
        ],
    })
}
