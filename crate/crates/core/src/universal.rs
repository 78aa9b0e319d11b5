//! Products and coproducts decided by exhaustive enumeration of mediators.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::category::{Category, MorId, ObjId, Op};
use crate::error::VerifyError;
use crate::verdict::{Counterexample, Verdict};

/// A candidate product cone `A ← apex → B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SpanWitness {
    pub apex: ObjId,
    pub left: MorId,
    pub right: MorId,
}

/// A candidate coproduct cocone `A → nadir ← B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CospanWitness {
    pub nadir: ObjId,
    pub left: MorId,
    pub right: MorId,
}

impl CospanWitness {
    /// The same data read as a span in the opposite category.
    pub fn as_op_span(self) -> SpanWitness {
        SpanWitness {
            apex: self.nadir,
            left: self.left,
            right: self.right,
        }
    }
}

impl SpanWitness {
    pub fn as_op_cospan(self) -> CospanWitness {
        CospanWitness {
            nadir: self.apex,
            left: self.left,
            right: self.right,
        }
    }
}

/// Decides whether `legs: apex → targets[k]` is a product cone: for every
/// object `X`, the map `h ↦ (leg_k ∘ h)_k` from `hom(X, apex)` to the
/// product of the `hom(X, target_k)` must be a bijection.
///
/// Failures carry either a cone with no mediator or two distinct mediators
/// for one cone. Objects are scanned in order; within an object, ambiguous
/// cones are reported before missing ones.
pub fn check_cone<C: Category + ?Sized>(
    cat: &C,
    apex: ObjId,
    legs: &[MorId],
    targets: &[ObjId],
) -> Verdict {
    if legs.len() != targets.len() {
        return Verdict::Fail(crate::verdict::Failure::bare("well-typed"));
    }
    for (&leg, &t) in legs.iter().zip(targets) {
        if !cat.is_typed(leg, apex, t) {
            return Verdict::fail(
                "well-typed",
                Counterexample::Mistyped {
                    morphism: leg,
                    expected_dom: apex,
                    expected_cod: t,
                },
            );
        }
    }
    for x in cat.objects() {
        if let Some(cx) = cone_failure_at(cat, apex, legs, targets, x) {
            return Verdict::Fail(cx);
        }
    }
    Verdict::Pass
}

fn cone_failure_at<C: Category + ?Sized>(
    cat: &C,
    apex: ObjId,
    legs: &[MorId],
    targets: &[ObjId],
    x: ObjId,
) -> Option<crate::verdict::Failure> {
    let homs: Vec<&[MorId]> = targets.iter().map(|&t| cat.hom(x, t)).collect();
    let total = homs
        .iter()
        .try_fold(1u128, |acc, h| acc.checked_mul(h.len() as u128));
    let mediators = cat.hom(x, apex);
    let mut seen: HashMap<u128, MorId> = HashMap::with_capacity(mediators.len());
    for &h in mediators {
        let mut code = 0u128;
        for (k, &leg) in legs.iter().enumerate() {
            let image = cat.comp(leg, h);
            // homsets are listed in increasing id order
            let pos = homs[k]
                .binary_search(&image)
                .expect("composite lies in its homset");
            code = code * homs[k].len() as u128 + pos as u128;
        }
        if let Some(&first) = seen.get(&code) {
            return Some(crate::verdict::Failure::new(
                "uniqueness",
                Counterexample::ManyMediators {
                    object: x,
                    cone: legs.iter().map(|&leg| cat.comp(leg, h)).collect(),
                    mediators: [first, h],
                },
            ));
        }
        seen.insert(code, h);
    }
    let complete = match total {
        Some(t) => seen.len() as u128 == t,
        None => false,
    };
    if complete {
        return None;
    }
    let missing = (0u128..)
        .find(|c| !seen.contains_key(c))
        .expect("unbounded");
    let mut rest = missing;
    let mut cone = vec![MorId(0); legs.len()];
    for k in (0..legs.len()).rev() {
        let len = homs[k].len() as u128;
        cone[k] = homs[k][(rest % len) as usize];
        rest /= len;
    }
    Some(crate::verdict::Failure::new(
        "existence",
        Counterexample::NoMediator { object: x, cone },
    ))
}

/// Whether `(apex, left, right)` is a product of `a` and `b`.
pub fn check_product<C: Category + ?Sized>(
    cat: &C,
    w: &SpanWitness,
    a: ObjId,
    b: ObjId,
) -> Verdict {
    check_cone(cat, w.apex, &[w.left, w.right], &[a, b])
}

/// Whether `(nadir, left, right)` is a coproduct of `a` and `b`; the dual of
/// [`check_product`], run in the opposite category.
pub fn check_coproduct<C: Category + ?Sized>(
    cat: &C,
    w: &CospanWitness,
    a: ObjId,
    b: ObjId,
) -> Verdict {
    check_product(&Op(cat), &w.as_op_span(), a, b)
}

/// Necessary condition for `apex` to carry a product cone over `targets`:
/// `|hom(X, apex)| = Π |hom(X, t)|` for every object `X`.
pub fn cardinality_admits<C: Category + ?Sized>(cat: &C, apex: ObjId, targets: &[ObjId]) -> bool {
    cat.objects().all(|x| {
        let need = targets
            .iter()
            .try_fold(1usize, |acc, &t| acc.checked_mul(cat.hom(x, t).len()));
        need == Some(cat.hom(x, apex).len())
    })
}

/// Every product span over `(a, b)`, apexes in object order and projection
/// pairs in id order.
pub fn find_products<C: Category + ?Sized>(cat: &C, a: ObjId, b: ObjId) -> Vec<SpanWitness> {
    let mut found = Vec::new();
    for apex in cat.objects() {
        if !cardinality_admits(cat, apex, &[a, b]) {
            continue;
        }
        for &left in cat.hom(apex, a) {
            for &right in cat.hom(apex, b) {
                let w = SpanWitness { apex, left, right };
                if check_product(cat, &w, a, b).is_pass() {
                    found.push(w);
                }
            }
        }
    }
    found
}

pub fn find_coproducts<C: Category + ?Sized>(cat: &C, a: ObjId, b: ObjId) -> Vec<CospanWitness> {
    find_products(&Op(cat), a, b)
        .into_iter()
        .map(SpanWitness::as_op_cospan)
        .collect()
}

/// The tuple `⟨legs⟩`: the unique `h: X → apex` with `cone_k ∘ h = legs_k`.
pub fn mediate_cone<C: Category + ?Sized>(
    cat: &C,
    cone: &[MorId],
    legs: &[MorId],
) -> Result<MorId, VerifyError> {
    let x = match legs.first() {
        Some(&f) => cat.dom(f),
        None => return Err(VerifyError::Contract("empty cone".into())),
    };
    if cone.len() != legs.len() || cone.is_empty() {
        return Err(VerifyError::Contract(
            "cone and legs differ in length".into(),
        ));
    }
    let apex = cat.dom(cone[0]);
    for (&c, &f) in cone.iter().zip(legs) {
        if cat.dom(c) != apex || cat.dom(f) != x || cat.cod(f) != cat.cod(c) {
            return Err(VerifyError::Contract(format!(
                "leg {f} does not match cone leg {c}"
            )));
        }
    }
    let mut hits = cat
        .hom(x, apex)
        .iter()
        .copied()
        .filter(|&h| cone.iter().zip(legs).all(|(&c, &f)| cat.comp(c, h) == f));
    match (hits.next(), hits.next()) {
        (Some(h), None) => Ok(h),
        (None, _) => Err(VerifyError::Contract(
            "no mediating morphism; the cone is not a certified product".into(),
        )),
        (Some(_), Some(_)) => Err(VerifyError::Contract(
            "mediating morphism is not unique; the cone is not a certified product".into(),
        )),
    }
}

/// Tupling `⟨f, g⟩` through a certified product.
pub fn mediate<C: Category + ?Sized>(
    cat: &C,
    w: &SpanWitness,
    f: MorId,
    g: MorId,
) -> Result<MorId, VerifyError> {
    mediate_cone(cat, &[w.left, w.right], &[f, g])
}

/// Cotupling `[f, g]` through a certified coproduct.
pub fn comediate<C: Category + ?Sized>(
    cat: &C,
    w: &CospanWitness,
    f: MorId,
    g: MorId,
) -> Result<MorId, VerifyError> {
    mediate(&Op(cat), &w.as_op_span(), f, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::fixtures::{terminal, thin, walking_arrow};
    use crate::category::{opposite, FinCat};

    fn span(c: &FinCat, apex: usize, l: &str, r: &str) -> SpanWitness {
        SpanWitness {
            apex: ObjId(apex),
            left: c.find_morphism(l).unwrap(),
            right: c.find_morphism(r).unwrap(),
        }
    }

    #[test]
    fn terminal_identity_span_is_a_product() {
        let t = terminal();
        let w = span(&t, 0, "x0_x0", "x0_x0");
        assert!(check_product(&t, &w, ObjId(0), ObjId(0)).is_pass());
        assert_eq!(find_products(&t, ObjId(0), ObjId(0)), vec![w]);
        assert_eq!(mediate(&t, &w, w.left, w.right).unwrap(), MorId(0));
    }

    #[test]
    fn chain_top_is_not_a_product_of_both_ends() {
        let c = walking_arrow();
        // apex x1 has no morphism to x0
        let w = SpanWitness {
            apex: ObjId(1),
            left: MorId(0),
            right: c.identity(ObjId(1)),
        };
        assert!(!check_product(&c, &w, ObjId(0), ObjId(1)).is_pass());
        // the meet of x0 and x1 is x0
        let ps = find_products(&c, ObjId(0), ObjId(1));
        assert_eq!(ps, vec![span(&c, 0, "x0_x0", "x0_x1")]);
    }

    #[test]
    fn indiscrete_join_is_a_coproduct() {
        let c = thin(2, |_, _| true);
        let w = CospanWitness {
            nadir: ObjId(0),
            left: c.find_morphism("x0_x0").unwrap(),
            right: c.find_morphism("x1_x0").unwrap(),
        };
        assert!(check_coproduct(&c, &w, ObjId(0), ObjId(1)).is_pass());
    }

    #[test]
    fn discrete_pair_has_no_products_or_coproducts() {
        let c = thin(2, |i, j| i == j);
        assert!(find_products(&c, ObjId(0), ObjId(1)).is_empty());
        assert!(find_coproducts(&c, ObjId(0), ObjId(1)).is_empty());
    }

    #[test]
    fn coproducts_are_products_in_the_opposite() {
        let c = thin(3, |i, j| i <= j || (i, j) == (2, 1));
        let op = opposite(&c);
        for a in c.objects() {
            for b in c.objects() {
                let direct = find_coproducts(&c, a, b);
                let via_op: Vec<_> = find_products(&op, a, b)
                    .into_iter()
                    .map(SpanWitness::as_op_cospan)
                    .collect();
                assert_eq!(direct, via_op);
            }
        }
    }

    #[test]
    fn missing_mediator_is_reported() {
        use crate::category::Morphism;
        // two parallel arrows u, v: A → B and identities
        let mk = |name: &str, d, c| Morphism {
            name: name.into(),
            dom: ObjId(d),
            cod: ObjId(c),
        };
        let c = FinCat::tabulate(
            vec!["A".into(), "B".into()],
            vec![
                mk("idA", 0, 0),
                mk("idB", 1, 1),
                mk("u", 0, 1),
                mk("v", 0, 1),
            ],
            vec![MorId(0), MorId(1)],
            |g, f| Some(if g.0 < 2 { f } else { g }),
        )
        .unwrap();
        // (A, idA, u) over (A, B): the cone (idA, v) out of A has no mediator.
        let w = SpanWitness {
            apex: ObjId(0),
            left: MorId(0),
            right: MorId(2),
        };
        let v = check_product(&c, &w, ObjId(0), ObjId(1));
        let f = v.failure().unwrap();
        assert_eq!(f.clause, "existence");
        assert_eq!(
            f.counterexample,
            Some(Counterexample::NoMediator {
                object: ObjId(0),
                cone: vec![MorId(0), MorId(3)]
            })
        );
        assert!(f.counterexample.as_ref().unwrap().replays(&c));
    }

    #[test]
    fn uniqueness_failure_is_reported() {
        // A single object with an idempotent e: hom(*, *) = {id, e}, e∘e = e.
        let c = FinCat::tabulate(
            vec!["*".into()],
            vec![
                crate::category::Morphism {
                    name: "id".into(),
                    dom: ObjId(0),
                    cod: ObjId(0),
                },
                crate::category::Morphism {
                    name: "e".into(),
                    dom: ObjId(0),
                    cod: ObjId(0),
                },
            ],
            vec![MorId(0)],
            |g, f| {
                Some(if g.0 == 0 {
                    f
                } else if f.0 == 0 {
                    g
                } else {
                    MorId(1)
                })
            },
        )
        .unwrap();
        // (*, e, e): h ↦ (e∘h, e∘h) sends both id and e to (e, e).
        let w = SpanWitness {
            apex: ObjId(0),
            left: MorId(1),
            right: MorId(1),
        };
        let v = check_product(&c, &w, ObjId(0), ObjId(0));
        let f = v.failure().unwrap();
        assert_eq!(f.clause, "uniqueness");
        assert_eq!(
            f.counterexample,
            Some(Counterexample::ManyMediators {
                object: ObjId(0),
                cone: vec![MorId(1), MorId(1)],
                mediators: [MorId(0), MorId(1)],
            })
        );
        assert!(mediate(&c, &w, MorId(1), MorId(1)).is_err());
    }
}
