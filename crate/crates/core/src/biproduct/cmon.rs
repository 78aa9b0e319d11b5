use crate::category::{greedy_generators, Category, FinCat, MorId, ObjId, ZeroStructure};
use crate::error::CMonError;
use crate::verdict::{Counterexample, Verdict};

use super::{check_typing, first_failure, retraction, BiproductWitness};

/// Commutative monoid on one homset. `sum` is indexed by positions in
/// `elements`, which lists the homset in id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomMonoid {
    pub elements: Vec<MorId>,
    pub zero: MorId,
    pub sum: Vec<MorId>,
}

impl HomMonoid {
    fn position(&self, m: MorId) -> Option<usize> {
        self.elements.binary_search(&m).ok()
    }

    pub fn add(&self, f: MorId, g: MorId) -> Option<MorId> {
        let (i, j) = (self.position(f)?, self.position(g)?);
        Some(self.sum[i * self.elements.len() + j])
    }
}

/// Addition tables for every homset of a category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMonStructure {
    objects: usize,
    homs: Vec<Option<HomMonoid>>,
}

impl CMonStructure {
    pub fn empty(objects: usize) -> CMonStructure {
        CMonStructure {
            objects,
            homs: vec![None; objects * objects],
        }
    }

    /// Tabulates `add` on every homset of `cat`.
    pub fn from_fn<C: Category + ?Sized>(
        cat: &C,
        zero: impl Fn(ObjId, ObjId) -> MorId,
        add: impl Fn(MorId, MorId) -> MorId,
    ) -> CMonStructure {
        let mut cm = CMonStructure::empty(cat.object_count());
        for a in cat.objects() {
            for b in cat.objects() {
                let elements = cat.hom(a, b).to_vec();
                let sum = elements
                    .iter()
                    .flat_map(|&f| elements.iter().map(move |&g| (f, g)))
                    .map(|(f, g)| add(f, g))
                    .collect();
                cm.set(
                    a,
                    b,
                    HomMonoid {
                        elements,
                        zero: zero(a, b),
                        sum,
                    },
                );
            }
        }
        cm
    }

    pub fn set(&mut self, a: ObjId, b: ObjId, monoid: HomMonoid) {
        self.homs[a.0 * self.objects + b.0] = Some(monoid);
    }

    pub fn homset(&self, a: ObjId, b: ObjId) -> Option<&HomMonoid> {
        self.homs.get(a.0 * self.objects + b.0)?.as_ref()
    }

    /// Checks the monoid laws on each homset and bilinearity of composition.
    pub fn validate<'a>(&'a self, cat: &'a FinCat) -> Result<ValidCMon<'a>, CMonError> {
        let name = |a: ObjId, b: ObjId| format!("{}, {}", cat.object_name(a), cat.object_name(b));
        if self.objects != cat.object_count() {
            return Err(CMonError::Zeros(
                "object count differs from the category".into(),
            ));
        }
        for a in cat.objects() {
            for b in cat.objects() {
                let hs = name(a, b);
                let Some(m) = self.homset(a, b) else {
                    return Err(CMonError::MissingHomset(
                        cat.object_name(a).into(),
                        cat.object_name(b).into(),
                    ));
                };
                let k = m.elements.len();
                if m.elements != cat.hom(a, b) {
                    return Err(CMonError::Table {
                        homset: hs,
                        detail: "element list is not the homset".into(),
                    });
                }
                if m.sum.len() != k * k || m.sum.iter().any(|s| m.position(*s).is_none()) {
                    return Err(CMonError::Table {
                        homset: hs,
                        detail: "sum table leaves the homset".into(),
                    });
                }
                if m.position(m.zero).is_none() {
                    return Err(CMonError::Table {
                        homset: hs,
                        detail: "zero is not in the homset".into(),
                    });
                }
                let z = m.position(m.zero).unwrap();
                for i in 0..k {
                    if m.sum[z * k + i] != m.elements[i] {
                        return Err(CMonError::NotNeutral {
                            homset: hs,
                            element: cat.morphism_name(m.elements[i]).into(),
                        });
                    }
                    for j in 0..k {
                        if m.sum[i * k + j] != m.sum[j * k + i] {
                            return Err(CMonError::NotCommutative {
                                homset: hs,
                                left: cat.morphism_name(m.elements[i]).into(),
                                right: cat.morphism_name(m.elements[j]).into(),
                            });
                        }
                    }
                }
                // Light's test: middle elements satisfying (x + a) + y =
                // x + (a + y) form a submonoid, so additive generators suffice.
                let pos = |x: MorId| m.position(x).unwrap();
                let gens = greedy_generators(k, &[z], |x, y| Some(pos(m.sum[x * k + y])));
                for &j in &gens {
                    for i in 0..k {
                        let ij = pos(m.sum[i * k + j]);
                        for l in 0..k {
                            let jl = pos(m.sum[j * k + l]);
                            if m.sum[ij * k + l] != m.sum[i * k + jl] {
                                return Err(CMonError::NotAssociative { homset: hs });
                            }
                        }
                    }
                }
            }
        }
        self.check_bilinear(cat)?;
        let zs = ZeroStructure::new(
            cat.object_count(),
            cat.objects()
                .flat_map(|a| cat.objects().map(move |b| (a, b)))
                .map(|(a, b)| self.homset(a, b).unwrap().zero)
                .collect(),
        );
        if let Verdict::Fail(f) = zs.check_absorbing(cat) {
            return Err(CMonError::Zeros(f.clause));
        }
        Ok(ValidCMon {
            cmon: self,
            zeros: zs,
        })
    }

    /// Morphisms that distribute over every sum on one side are closed under
    /// composition, so `h` and `e` range over a compositional generating set
    /// only; identities distribute trivially.
    fn check_bilinear(&self, cat: &FinCat) -> Result<(), CMonError> {
        let show = |m: MorId| cat.morphism_name(m).to_string();
        let ids: Vec<usize> = cat.objects().map(|a| cat.identity(a).0).collect();
        let generators: Vec<MorId> = greedy_generators(cat.morphism_count(), &ids, |x, y| {
            cat.compose(MorId(x), MorId(y)).map(|m| m.0)
        })
        .into_iter()
        .map(MorId)
        .collect();
        let from = |x: ObjId, y: ObjId| {
            generators
                .iter()
                .copied()
                .filter(move |&g| cat.dom(g) == x && cat.cod(g) == y)
        };
        for a in cat.objects() {
            for b in cat.objects() {
                let m = self.homset(a, b).unwrap();
                let k = m.elements.len();
                for c in cat.objects() {
                    let out = self.homset(a, c).unwrap();
                    for h in from(b, c) {
                        // h ∘ 0 = 0 and h ∘ (f + g) = h∘f + h∘g
                        if cat.comp(h, m.zero) != out.zero {
                            return Err(CMonError::NotDistributive {
                                detail: format!("{} ∘ {} is not zero", show(h), show(m.zero)),
                            });
                        }
                        let post: Vec<MorId> = m.elements.iter().map(|&f| cat.comp(h, f)).collect();
                        for i in 0..k {
                            for j in i..k {
                                let lhs = cat.comp(h, m.sum[i * k + j]);
                                if out.add(post[i], post[j]) != Some(lhs) {
                                    return Err(CMonError::NotDistributive {
                                        detail: format!(
                                            "{} ∘ ({} + {})",
                                            show(h),
                                            show(m.elements[i]),
                                            show(m.elements[j])
                                        ),
                                    });
                                }
                            }
                        }
                    }
                    let inn = self.homset(c, b).unwrap();
                    for e in from(c, a) {
                        if cat.comp(m.zero, e) != inn.zero {
                            return Err(CMonError::NotDistributive {
                                detail: format!("{} ∘ {} is not zero", show(m.zero), show(e)),
                            });
                        }
                        let pre: Vec<MorId> = m.elements.iter().map(|&f| cat.comp(f, e)).collect();
                        for i in 0..k {
                            for j in i..k {
                                let lhs = cat.comp(m.sum[i * k + j], e);
                                if inn.add(pre[i], pre[j]) != Some(lhs) {
                                    return Err(CMonError::NotDistributive {
                                        detail: format!(
                                            "({} + {}) ∘ {}",
                                            show(m.elements[i]),
                                            show(m.elements[j]),
                                            show(e)
                                        ),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A [`CMonStructure`] that passed [`CMonStructure::validate`].
#[derive(Debug, Clone)]
pub struct ValidCMon<'a> {
    cmon: &'a CMonStructure,
    zeros: ZeroStructure,
}

impl ValidCMon<'_> {
    pub fn add(&self, f: MorId, g: MorId, cat: &FinCat) -> MorId {
        self.cmon
            .homset(cat.dom(f), cat.cod(f))
            .and_then(|m| m.add(f, g))
            .expect("parallel morphisms")
    }

    pub fn zeros(&self) -> &ZeroStructure {
        &self.zeros
    }
}

/// The classical enriched definition: `p_A i_A = id`, `p_B i_B = id`,
/// `p_B i_A = 0`, `p_A i_B = 0` and `i_A p_A + i_B p_B = id`.
pub fn check_cmon_biproduct(
    cat: &FinCat,
    cm: &ValidCMon<'_>,
    w: &BiproductWitness,
    a: ObjId,
    b: ObjId,
) -> Verdict {
    let typing = check_typing(cat, w, a, b);
    if !typing.is_pass() {
        return typing;
    }
    let zero_clause = |p: MorId, i: MorId, from: ObjId, to: ObjId, clause: &str| {
        let z = cm.zeros.zero(from, to);
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
    let sum_clause = || {
        let ea = cat.comp(w.i_a, w.p_a);
        let eb = cat.comp(w.i_b, w.p_b);
        let sum = cm.add(ea, eb, cat);
        let id = cat.identity(w.carrier);
        if sum == id {
            Verdict::Pass
        } else {
            Verdict::fail(
                "sum-of-idempotents",
                Counterexample::Sum {
                    summands: vec![ea, eb],
                    sum,
                    expected: id,
                },
            )
        }
    };
    let clauses: [&dyn Fn() -> Verdict; 5] = [
        &|| retraction(cat, w.p_a, w.i_a, "retraction-a"),
        &|| retraction(cat, w.p_b, w.i_b, "retraction-b"),
        &|| zero_clause(w.p_b, w.i_a, a, b, "zero-ab"),
        &|| zero_clause(w.p_a, w.i_b, b, a, "zero-ba"),
        &sum_clause,
    ];
    first_failure(clauses.iter().map(|c| c()))
}
