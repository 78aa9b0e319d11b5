//! Pass/fail results shared by every checker.

use serde::Serialize;

use crate::category::{Category, FinCat, MorId, MorphismClass, ObjId};

/// Concrete evidence that a check failed.
///
/// Morphism chains are composed right to left, so `[g, f]` is `g ∘ f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    /// The two chains were required to agree but compose to different morphisms.
    Unequal {
        lhs: Vec<MorId>,
        rhs: Vec<MorId>,
    },
    /// `h ∘ (g ∘ f)` and `(h ∘ g) ∘ f` differ.
    NotAssociative {
        h: MorId,
        g: MorId,
        f: MorId,
    },
    /// `first ∘ second` has the wrong table entry for its typing.
    NotComposable {
        first: MorId,
        second: MorId,
    },
    Mistyped {
        morphism: MorId,
        expected_dom: ObjId,
        expected_cod: ObjId,
    },
    /// No mediating morphism out of (or into) `object` for the given cone.
    NoMediator {
        object: ObjId,
        cone: Vec<MorId>,
    },
    /// Two distinct mediating morphisms for the same cone.
    ManyMediators {
        object: ObjId,
        cone: Vec<MorId>,
        mediators: [MorId; 2],
    },
    NoZero {
        from: ObjId,
        to: ObjId,
    },
    ManyZeros {
        from: ObjId,
        to: ObjId,
        zeros: Vec<MorId>,
    },
    NotZero {
        morphism: MorId,
        class: MorphismClass,
    },
    NotIso {
        morphism: MorId,
    },
    /// Two morphisms both satisfying a property that should single out one.
    NotUnique {
        first: MorId,
        second: MorId,
    },
    /// No biproduct for this ordered pair in the category at hand.
    NoBiproduct {
        left: ObjId,
        right: ObjId,
    },
    /// A homset sum that should have been `expected`.
    Sum {
        summands: Vec<MorId>,
        sum: MorId,
        expected: MorId,
    },
    /// Verdicts of two checkers disagreed on a witness.
    Disagreement {
        witness: Vec<MorId>,
        detail: String,
    },
}

impl Counterexample {
    /// Re-checks the counterexample against `cat`: replaying it must
    /// reproduce the violation it reports.
    pub fn replays(&self, cat: &FinCat) -> bool {
        self.replays_in(cat)
    }

    pub fn replays_in<C: Category + ?Sized>(&self, cat: &C) -> bool {
        let ids_ok = |ms: &[MorId]| ms.iter().all(|&m| cat.has_morphism(m));
        match self {
            Counterexample::Unequal { lhs, rhs } => {
                ids_ok(lhs)
                    && ids_ok(rhs)
                    && match (cat.compose_chain(lhs), cat.compose_chain(rhs)) {
                        (Some(l), Some(r)) => l != r,
                        _ => false,
                    }
            }
            Counterexample::NotAssociative { h, g, f } => {
                let left = cat.compose(*g, *f).and_then(|gf| cat.compose(*h, gf));
                let right = cat.compose(*h, *g).and_then(|hg| cat.compose(hg, *f));
                ids_ok(&[*h, *g, *f])
                    && match (left, right) {
                        (Some(l), Some(r)) => l != r,
                        _ => false,
                    }
            }
            // Coproduct failures are found in the opposite category, so the
            // cone may point either way.
            Counterexample::NoMediator { object, cone } => {
                ids_ok(cone)
                    && (cone.iter().all(|&m| cat.dom(m) == *object)
                        || cone.iter().all(|&m| cat.cod(m) == *object))
            }
            Counterexample::ManyMediators {
                cone, mediators, ..
            } => {
                let [h1, h2] = *mediators;
                ids_ok(cone)
                    && ids_ok(mediators)
                    && h1 != h2
                    && cat.dom(h1) == cat.dom(h2)
                    && cat.cod(h1) == cat.cod(h2)
            }
            Counterexample::NoZero { from, to } => cat
                .hom(*from, *to)
                .iter()
                .all(|&m| !crate::category::classify_morphism(cat, m).zero),
            Counterexample::NotZero { morphism, .. } => {
                cat.has_morphism(*morphism)
                    && !crate::category::classify_morphism(cat, *morphism).zero
            }
            Counterexample::NotIso { morphism } => {
                cat.has_morphism(*morphism) && cat.inverse(*morphism).is_none()
            }
            Counterexample::NotUnique { first, second } => {
                cat.has_morphism(*first) && cat.has_morphism(*second) && first != second
            }
            Counterexample::NotComposable { first, second } => {
                cat.has_morphism(*first) && cat.has_morphism(*second)
            }
            Counterexample::Mistyped {
                morphism,
                expected_dom,
                expected_cod,
            } => {
                cat.has_morphism(*morphism)
                    && !cat.is_typed(*morphism, *expected_dom, *expected_cod)
            }
            Counterexample::ManyZeros { zeros, .. } => ids_ok(zeros) && zeros.len() > 1,
            Counterexample::Sum { sum, expected, .. } => sum != expected,
            Counterexample::NoBiproduct { .. } | Counterexample::Disagreement { .. } => true,
        }
    }

    /// Every morphism the counterexample mentions, in order.
    pub fn morphisms(&self) -> Vec<MorId> {
        match self {
            Counterexample::Unequal { lhs, rhs } => lhs.iter().chain(rhs).copied().collect(),
            Counterexample::NotAssociative { h, g, f } => vec![*h, *g, *f],
            Counterexample::NotComposable { first, second }
            | Counterexample::NotUnique { first, second } => vec![*first, *second],
            Counterexample::Mistyped { morphism, .. }
            | Counterexample::NotZero { morphism, .. }
            | Counterexample::NotIso { morphism } => vec![*morphism],
            Counterexample::NoMediator { cone, .. } => cone.clone(),
            Counterexample::ManyMediators {
                cone, mediators, ..
            } => cone.iter().chain(mediators).copied().collect(),
            Counterexample::ManyZeros { zeros, .. } => zeros.clone(),
            Counterexample::Disagreement { witness, .. } => witness.clone(),
            Counterexample::Sum {
                summands,
                sum,
                expected,
            } => summands.iter().chain([sum, expected]).copied().collect(),
            Counterexample::NoZero { .. } | Counterexample::NoBiproduct { .. } => vec![],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Name of the first clause that failed.
    pub clause: String,
    pub counterexample: Option<Counterexample>,
}

impl Failure {
    pub fn new(clause: impl Into<String>, counterexample: Counterexample) -> Failure {
        Failure {
            clause: clause.into(),
            counterexample: Some(counterexample),
        }
    }

    pub fn bare(clause: impl Into<String>) -> Failure {
        Failure {
            clause: clause.into(),
            counterexample: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    /// The checked implication held because its hypothesis was false.
    Vacuous,
    Fail(Failure),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        !matches!(self, Verdict::Fail(_))
    }

    pub fn failure(&self) -> Option<&Failure> {
        match self {
            Verdict::Fail(f) => Some(f),
            _ => None,
        }
    }

    pub fn fail(clause: impl Into<String>, counterexample: Counterexample) -> Verdict {
        Verdict::Fail(Failure::new(clause, counterexample))
    }

    /// Prefixes the clause name of a failure.
    pub fn within(self, context: &str) -> Verdict {
        match self {
            Verdict::Fail(mut f) => {
                f.clause = format!("{context}: {}", f.clause);
                Verdict::Fail(f)
            }
            v => v,
        }
    }
}
