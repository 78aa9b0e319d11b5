//! Brute-force reference search.
//!
//! Shares nothing with the main search beyond the category table: every
//! well-typed 5-tuple is tested against the definition by direct counting,
//! scanning the full morphism list instead of the cached homsets.

use crate::category::{Category, FinCat, MorId, ObjId};

use super::BiproductWitness;

fn between(cat: &FinCat, from: ObjId, to: ObjId) -> Vec<MorId> {
    (0..cat.morphism_count())
        .map(MorId)
        .filter(|&m| cat.morphism(m).dom == from && cat.morphism(m).cod == to)
        .collect()
}

fn raw(cat: &FinCat, g: MorId, f: MorId) -> MorId {
    cat.raw_composite(g, f)
        .expect("composable pair has a composite")
}

/// Every `(f, g)` out of every object factors through `(p, q)` exactly once.
fn is_product(cat: &FinCat, apex: ObjId, p: MorId, q: MorId, a: ObjId, b: ObjId) -> bool {
    (0..cat.object_count()).map(ObjId).all(|x| {
        let hs = between(cat, x, apex);
        between(cat, x, a).into_iter().all(|f| {
            between(cat, x, b).into_iter().all(|g| {
                hs.iter()
                    .filter(|&&h| raw(cat, p, h) == f && raw(cat, q, h) == g)
                    .count()
                    == 1
            })
        })
    })
}

/// Every `(f, g)` into every object factors through `(i, j)` exactly once.
fn is_coproduct(cat: &FinCat, nadir: ObjId, i: MorId, j: MorId, a: ObjId, b: ObjId) -> bool {
    (0..cat.object_count()).map(ObjId).all(|x| {
        let hs = between(cat, nadir, x);
        between(cat, a, x).into_iter().all(|f| {
            between(cat, b, x).into_iter().all(|g| {
                hs.iter()
                    .filter(|&&h| raw(cat, h, i) == f && raw(cat, h, j) == g)
                    .count()
                    == 1
            })
        })
    })
}

/// All biproduct witnesses for `(a, b)` found by testing every tuple.
pub fn oracle_biproducts(cat: &FinCat, a: ObjId, b: ObjId) -> Vec<BiproductWitness> {
    let id_a = cat.identity(a);
    let id_b = cat.identity(b);
    let mut out = Vec::new();
    for c in (0..cat.object_count()).map(ObjId) {
        for p_a in between(cat, c, a) {
            for p_b in between(cat, c, b) {
                for i_a in between(cat, a, c) {
                    if raw(cat, p_a, i_a) != id_a {
                        continue;
                    }
                    for i_b in between(cat, b, c) {
                        if raw(cat, p_b, i_b) != id_b {
                            continue;
                        }
                        let e_a = raw(cat, i_a, p_a);
                        let e_b = raw(cat, i_b, p_b);
                        if raw(cat, e_a, e_b) != raw(cat, e_b, e_a) {
                            continue;
                        }
                        if is_product(cat, c, p_a, p_b, a, b)
                            && is_coproduct(cat, c, i_a, i_b, a, b)
                        {
                            out.push(BiproductWitness {
                                carrier: c,
                                p_a,
                                p_b,
                                i_a,
                                i_b,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}
