//! Mechanical checks of the structural facts about biproducts.

use crate::category::{
    classify_morphism, find_zero_structure, Category, FinCat, MorId, ObjId, ZeroStructure,
};
use crate::error::VerifyError;
use crate::universal::{comediate, mediate};
use crate::verdict::{Counterexample, Failure, Verdict};

use super::{
    check_biproduct, check_cmon_biproduct, check_zero_def_biproduct, has_biproduct,
    precondition_certified, BiproductWitness, ValidCMon,
};

/// For a certified biproduct, `p_B i_A` and `p_A i_B` are zero morphisms.
pub fn verify_lemma_zero<C: Category + ?Sized>(
    cat: &C,
    w: &BiproductWitness,
) -> Result<Verdict, VerifyError> {
    precondition_certified(cat, w, "witness")?;
    for (p, i) in [(w.p_b, w.i_a), (w.p_a, w.i_b)] {
        let m = cat.comp(p, i);
        let class = classify_morphism(cat, m);
        if !class.zero {
            return Ok(Verdict::fail(
                "cross-composite-is-zero",
                Counterexample::NotZero { morphism: m, class },
            ));
        }
    }
    Ok(Verdict::Pass)
}

/// If every ordered pair has a biproduct, the category has zero morphisms.
/// Vacuous when some pair has none.
pub fn verify_corollary_zeros<C: Category + ?Sized>(cat: &C) -> Verdict {
    for a in cat.objects() {
        for b in cat.objects() {
            if !has_biproduct(cat, a, b) {
                return Verdict::Vacuous;
            }
        }
    }
    match find_zero_structure(cat).verdict {
        Verdict::Fail(f) => Verdict::Fail(Failure {
            clause: format!("zero-structure: {}", f.clause),
            ..f
        }),
        _ => Verdict::Pass,
    }
}

/// Two certified biproducts of the same pair are related by exactly one
/// morphism compatible with both structures, and it is an isomorphism.
///
/// `f` is the product comparison `carrier₁ → carrier₂` and `g` the
/// coproduct comparison; they must coincide.
pub fn verify_uniqueness<C: Category + ?Sized>(
    cat: &C,
    w1: &BiproductWitness,
    w2: &BiproductWitness,
) -> Result<Verdict, VerifyError> {
    let pair1 = precondition_certified(cat, w1, "first witness")?;
    let pair2 = precondition_certified(cat, w2, "second witness")?;
    if pair1 != pair2 {
        return Err(VerifyError::Precondition(
            "witnesses are for different pairs".into(),
        ));
    }
    compare_certified(cat, w1, w2)
}

/// [`verify_uniqueness`] for every pair of distinct witnesses in `ws`,
/// certifying each witness once. Stops at the first failure.
pub fn verify_uniqueness_all<C: Category + ?Sized>(
    cat: &C,
    ws: &[BiproductWitness],
) -> Result<Verdict, VerifyError> {
    let mut pair = None;
    for (k, w) in ws.iter().enumerate() {
        let p = precondition_certified(cat, w, &format!("witness {k}"))?;
        if pair.is_some_and(|q| q != p) {
            return Err(VerifyError::Precondition(
                "witnesses are for different pairs".into(),
            ));
        }
        pair = Some(p);
    }
    for (i, w1) in ws.iter().enumerate() {
        for w2 in &ws[i + 1..] {
            let v = compare_certified(cat, w1, w2)?;
            if !v.is_pass() {
                return Ok(v);
            }
        }
    }
    Ok(Verdict::Pass)
}

fn compare_certified<C: Category + ?Sized>(
    cat: &C,
    w1: &BiproductWitness,
    w2: &BiproductWitness,
) -> Result<Verdict, VerifyError> {
    let f = mediate(cat, &w2.span(), w1.p_a, w1.p_b)?;
    let g = comediate(cat, &w1.cospan(), w2.i_a, w2.i_b)?;
    if f != g {
        return Ok(Verdict::fail(
            "comparisons-coincide",
            Counterexample::Unequal {
                lhs: vec![f],
                rhs: vec![g],
            },
        ));
    }
    if cat.inverse(f).is_none() {
        return Ok(Verdict::fail(
            "isomorphism",
            Counterexample::NotIso { morphism: f },
        ));
    }
    let compatible = |h: MorId| {
        cat.comp(w2.p_a, h) == w1.p_a
            && cat.comp(w2.p_b, h) == w1.p_b
            && cat.comp(h, w1.i_a) == w2.i_a
            && cat.comp(h, w1.i_b) == w2.i_b
    };
    let mut all = cat
        .hom(w1.carrier, w2.carrier)
        .iter()
        .copied()
        .filter(|&h| compatible(h));
    match (all.next(), all.next()) {
        (Some(h), None) if h == f => Ok(Verdict::Pass),
        (Some(h1), Some(h2)) => Ok(Verdict::fail(
            "unique-compatible-map",
            Counterexample::NotUnique {
                first: h1,
                second: h2,
            },
        )),
        _ => Err(VerifyError::Contract(
            "comparison map is not compatible with both structures".into(),
        )),
    }
}

/// `f + g` (cotupling through `A⊕B`) and `f × g` (tupling through `C⊕D`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumProduct {
    pub sum: MorId,
    pub product: MorId,
    pub verdict: Verdict,
}

/// For `f: A → C` and `g: B → D`, compares `[i_C f, i_D g]` with
/// `⟨f p_A, g p_B⟩` as morphisms `A⊕B → C⊕D`.
pub fn check_sum_equals_product_of_morphisms<C: Category + ?Sized>(
    cat: &C,
    w_ab: &BiproductWitness,
    w_cd: &BiproductWitness,
    f: MorId,
    g: MorId,
) -> Result<SumProduct, VerifyError> {
    let (a, b) = precondition_certified(cat, w_ab, "source witness")?;
    let (c, d) = precondition_certified(cat, w_cd, "target witness")?;
    if !cat.is_typed(f, a, c) || !cat.is_typed(g, b, d) {
        return Err(VerifyError::Precondition(
            "f and g must be typed A → C and B → D".into(),
        ));
    }
    let sum = comediate(
        cat,
        &w_ab.cospan(),
        cat.comp(w_cd.i_a, f),
        cat.comp(w_cd.i_b, g),
    )?;
    let product = mediate(
        cat,
        &w_cd.span(),
        cat.comp(f, w_ab.p_a),
        cat.comp(g, w_ab.p_b),
    )?;
    let verdict = if sum == product {
        Verdict::Pass
    } else {
        Verdict::fail(
            "sum-equals-product",
            Counterexample::Unequal {
                lhs: vec![sum],
                rhs: vec![product],
            },
        )
    };
    Ok(SumProduct {
        sum,
        product,
        verdict,
    })
}

/// Compares the enrichment-free definition with the zero-morphism one (and
/// with the commutative-monoid one when a structure is supplied) in a
/// category that has zero morphisms.
#[derive(Debug, Clone)]
pub struct DefinitionCheck<'a> {
    cat: &'a FinCat,
    zeros: ZeroStructure,
    cmon: Option<ValidCMon<'a>>,
}

/// Totals from [`DefinitionCheck::agree_exhaustive`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementSummary {
    /// Tuples on which every checker was evaluated.
    pub evaluated: usize,
    /// Tuples accepted by all definitions.
    pub accepted: usize,
    pub verdict: Verdict,
}

impl<'a> DefinitionCheck<'a> {
    pub fn new(cat: &'a FinCat) -> Result<DefinitionCheck<'a>, VerifyError> {
        let search = find_zero_structure(cat);
        match search.structure {
            Some(zeros) => Ok(DefinitionCheck {
                cat,
                zeros,
                cmon: None,
            }),
            None => Err(VerifyError::Precondition(
                "the category has no zero morphisms".into(),
            )),
        }
    }

    pub fn with_cmon(mut self, cm: ValidCMon<'a>) -> DefinitionCheck<'a> {
        self.cmon = Some(cm);
        self
    }

    pub fn zeros(&self) -> &ZeroStructure {
        &self.zeros
    }

    /// Verdict of each definition on `w`, in the order new, zero, cmon.
    pub fn verdicts(&self, w: &BiproductWitness, a: ObjId, b: ObjId) -> Vec<Verdict> {
        let mut out = vec![
            check_biproduct(self.cat, w, a, b),
            check_zero_def_biproduct(self.cat, &self.zeros, w, a, b),
        ];
        if let Some(cm) = &self.cmon {
            out.push(check_cmon_biproduct(self.cat, cm, w, a, b));
        }
        out
    }

    pub fn agree(&self, w: &BiproductWitness, a: ObjId, b: ObjId) -> Verdict {
        let verdicts = self.verdicts(w, a, b);
        let first = verdicts[0].is_pass();
        if verdicts.iter().all(|v| v.is_pass() == first) {
            return Verdict::Pass;
        }
        let names = ["new", "zero", "cmon"];
        let detail = verdicts
            .iter()
            .zip(names)
            .map(|(v, n)| format!("{n}={}", if v.is_pass() { "pass" } else { "fail" }))
            .collect::<Vec<_>>()
            .join(" ");
        Verdict::fail(
            "definitions-agree",
            Counterexample::Disagreement {
                witness: w.morphisms(),
                detail,
            },
        )
    }

    /// Every well-typed tuple `(c, p_A, p_B, i_A, i_B)` for `(a, b)`.
    ///
    /// All definitions require `p_A i_A = id_A` and `p_B i_B = id_B`, so a
    /// tuple outside the product of the two sets of retraction pairs is
    /// rejected by each of them; the comparison runs on that product.
    pub fn agree_exhaustive(&self, a: ObjId, b: ObjId) -> AgreementSummary {
        let cat = self.cat;
        let mut evaluated = 0;
        let mut accepted = 0;
        for c in cat.objects() {
            let pairs_a = retraction_pairs(cat, c, a);
            let pairs_b = retraction_pairs(cat, c, b);
            for &(p_a, i_a) in &pairs_a {
                for &(p_b, i_b) in &pairs_b {
                    let w = BiproductWitness {
                        carrier: c,
                        p_a,
                        p_b,
                        i_a,
                        i_b,
                    };
                    evaluated += 1;
                    let v = self.agree(&w, a, b);
                    if !v.is_pass() {
                        return AgreementSummary {
                            evaluated,
                            accepted,
                            verdict: v,
                        };
                    }
                    if check_biproduct(cat, &w, a, b).is_pass() {
                        accepted += 1;
                    }
                }
            }
        }
        AgreementSummary {
            evaluated,
            accepted,
            verdict: Verdict::Pass,
        }
    }

    /// Literal enumeration of all well-typed tuples; only for small categories.
    pub fn agree_all_tuples(&self, a: ObjId, b: ObjId) -> AgreementSummary {
        let cat = self.cat;
        let mut evaluated = 0;
        let mut accepted = 0;
        for c in cat.objects() {
            for &p_a in cat.hom(c, a) {
                for &p_b in cat.hom(c, b) {
                    for &i_a in cat.hom(a, c) {
                        for &i_b in cat.hom(b, c) {
                            let w = BiproductWitness {
                                carrier: c,
                                p_a,
                                p_b,
                                i_a,
                                i_b,
                            };
                            evaluated += 1;
                            let v = self.agree(&w, a, b);
                            if !v.is_pass() {
                                return AgreementSummary {
                                    evaluated,
                                    accepted,
                                    verdict: v,
                                };
                            }
                            if check_biproduct(cat, &w, a, b).is_pass() {
                                accepted += 1;
                            }
                        }
                    }
                }
            }
        }
        AgreementSummary {
            evaluated,
            accepted,
            verdict: Verdict::Pass,
        }
    }
}

fn retraction_pairs(cat: &FinCat, c: ObjId, a: ObjId) -> Vec<(MorId, MorId)> {
    let id = cat.identity(a);
    cat.hom(c, a)
        .iter()
        .flat_map(|&p| {
            cat.hom(a, c)
                .iter()
                .filter(move |&&i| cat.comp(p, i) == id)
                .map(move |&i| (p, i))
        })
        .collect()
}

/// One-shot comparison of the enrichment-free and zero-morphism definitions
/// on a single witness. Fails its precondition without zero morphisms.
pub fn definitions_agree(
    cat: &FinCat,
    w: &BiproductWitness,
    a: ObjId,
    b: ObjId,
) -> Result<Verdict, VerifyError> {
    Ok(DefinitionCheck::new(cat)?.agree(w, a, b))
}
