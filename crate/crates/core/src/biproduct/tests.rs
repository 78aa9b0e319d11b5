use super::*;
use crate::category::fixtures::{terminal, thin, walking_arrow};
use crate::category::{find_zero_structure, opposite, Category, FinCat, ObjId};
use crate::error::VerifyError;
use crate::gallery::{
    build_ab_fragment, build_finset_skeleton, build_pointed_sets, standard_entry,
    AbGroupFragmentSpec,
};
use crate::verdict::Verdict;

fn identity_witness(cat: &FinCat, z: ObjId) -> BiproductWitness {
    let id = cat.identity(z);
    BiproductWitness {
        carrier: z,
        p_a: id,
        p_b: id,
        i_a: id,
        i_b: id,
    }
}

fn clause(v: &Verdict) -> &str {
    &v.failure().expect("expected a failure").clause
}

fn mor(cat: &FinCat, name: &str) -> MorId {
    cat.find_morphism(name)
        .unwrap_or_else(|| panic!("no morphism named {name}"))
}

fn ab(rank: usize) -> crate::gallery::AbFragment {
    build_ab_fragment(&AbGroupFragmentSpec::elementary_2(rank)).unwrap()
}

#[test]
fn empty_set_is_its_own_biproduct() {
    let c = build_finset_skeleton(2).unwrap();
    let empty = ObjId(0);
    let w = identity_witness(&c, empty);
    assert_eq!(check_biproduct(&c, &w, empty, empty), Verdict::Pass);
    assert_eq!(find_biproducts(&c, empty, empty), vec![w]);
    let pairs: Vec<_> = all_biproducts(&c).into_iter().map(|(p, _)| p).collect();
    assert_eq!(pairs, vec![(empty, empty)]);
}

#[test]
fn zero_object_is_its_own_biproduct() {
    let t = terminal();
    assert_eq!(
        check_biproduct(&t, &identity_witness(&t, ObjId(0)), ObjId(0), ObjId(0)),
        Verdict::Pass
    );
    let p = build_pointed_sets(3).unwrap();
    let point = ObjId(0);
    let w = identity_witness(&p, point);
    assert_eq!(check_biproduct(&p, &w, point, point), Verdict::Pass);
    let zs = find_zero_structure(&p).structure.unwrap();
    assert_eq!(
        check_zero_def_biproduct(&p, &zs, &w, point, point),
        Verdict::Pass
    );
}

#[test]
fn walking_arrow_pair_has_no_biproduct() {
    let c = walking_arrow();
    let (x0, x1) = (ObjId(0), ObjId(1));
    let mut candidates = 0;
    for carrier in c.objects() {
        for &p_a in c.hom(carrier, x0) {
            for &p_b in c.hom(carrier, x1) {
                for &i_a in c.hom(x0, carrier) {
                    for &i_b in c.hom(x1, carrier) {
                        let w = BiproductWitness {
                            carrier,
                            p_a,
                            p_b,
                            i_a,
                            i_b,
                        };
                        candidates += 1;
                        assert!(!check_biproduct(&c, &w, x0, x1).is_pass());
                    }
                }
            }
        }
    }
    // only carrier x0 has maps to both factors, and x1 ↛ x0 kills i_b
    assert_eq!(candidates, 0);
    assert!(find_biproducts(&c, x0, x1).is_empty());
    // the meet x0 is a product of (x0, x1) but not a coproduct
    let w = BiproductWitness {
        carrier: x0,
        p_a: c.identity(x0),
        p_b: mor(&c, "x0_x1"),
        i_a: c.identity(x0),
        i_b: mor(&c, "x0_x1"),
    };
    assert_eq!(clause(&check_biproduct(&c, &w, x0, x1)), "well-typed");
}

#[test]
fn isomorphic_pairs_in_preorders() {
    let ind = thin(2, |_, _| true);
    assert!(has_biproduct(&ind, ObjId(0), ObjId(1)));
    let disc = thin(2, |i, j| i == j);
    assert!(find_biproducts(&disc, ObjId(0), ObjId(1)).is_empty());
    assert!(has_biproduct(&disc, ObjId(1), ObjId(1)));
}

#[test]
fn failing_clause_is_named_in_order() {
    let frag = ab(2);
    let c = &frag.cat;
    let z2 = ObjId(1);
    let w = find_biproducts(c, z2, z2)[0];
    assert_eq!(c.object_name(w.carrier), "Z2xZ2");
    // p_A replaced by p_B: the span is no longer a product
    let bad = BiproductWitness { p_a: w.p_b, ..w };
    assert!(clause(&check_biproduct(c, &bad, z2, z2)).starts_with("product"));
    let bad = BiproductWitness { i_a: w.i_b, ..w };
    assert!(clause(&check_biproduct(c, &bad, z2, z2)).starts_with("coproduct"));
    let bad = BiproductWitness { i_a: w.p_a, ..w };
    assert_eq!(clause(&check_biproduct(c, &bad, z2, z2)), "well-typed");
}

#[test]
fn self_duality_on_small_categories() {
    for cat in [terminal(), walking_arrow(), thin(2, |_, _| true), ab(1).cat] {
        let op = opposite(&cat);
        for a in cat.objects() {
            for b in cat.objects() {
                let here = find_biproducts(&cat, a, b);
                let mut there: Vec<_> = find_biproducts(&op, a, b)
                    .iter()
                    .map(|w| w.dual())
                    .collect();
                there.sort_by_key(|w| (w.carrier, w.p_a, w.p_b, w.i_a, w.i_b));
                assert_eq!(here, there);
            }
        }
    }
}

#[test]
fn search_matches_oracle_on_fixtures() {
    for cat in [
        terminal(),
        walking_arrow(),
        thin(3, |_, _| true),
        build_pointed_sets(2).unwrap(),
        ab(1).cat,
    ] {
        for a in cat.objects() {
            for b in cat.objects() {
                assert_eq!(
                    find_biproducts(&cat, a, b),
                    oracle::oracle_biproducts(&cat, a, b)
                );
            }
        }
    }
}

#[test]
fn zero_definition_rejects_perturbed_witness() {
    let p = build_pointed_sets(3).unwrap();
    let zs = find_zero_structure(&p).structure.unwrap();
    let (point, p3) = (ObjId(0), ObjId(2));
    let w = find_biproducts(&p, p3, point)[0];
    assert_eq!(
        check_zero_def_biproduct(&p, &zs, &w, p3, point),
        Verdict::Pass
    );
    // i_A = a non-identity idempotent keeps the typing but breaks the retraction
    let collapse = mor(&p, "f_P3_P3_000");
    let bad = BiproductWitness { i_a: collapse, ..w };
    let v = check_zero_def_biproduct(&p, &zs, &bad, p3, point);
    assert!(clause(&v).starts_with("coproduct"), "{v:?}");
    assert!(!check_biproduct(&p, &bad, p3, point).is_pass());
}

#[test]
fn cmon_definition_on_elementary_abelian_groups() {
    let frag = ab(3);
    let c = &frag.cat;
    let cm = frag.cmon.validate(c).unwrap();
    let z2 = ObjId(1);
    let w = find_biproducts(c, z2, z2)[0];
    assert_eq!(check_cmon_biproduct(c, &cm, &w, z2, z2), Verdict::Pass);
    let zero_in = cm.zeros().zero(z2, w.carrier);
    let bad = BiproductWitness { i_a: zero_in, ..w };
    assert_eq!(
        clause(&check_cmon_biproduct(c, &cm, &bad, z2, z2)),
        "retraction-a"
    );
    // two coordinate axes of Z2³: retractions and zeros hold, the sum misses
    // the third coordinate
    let axes = BiproductWitness {
        carrier: c.find_object("Z2xZ2xZ2").unwrap(),
        p_a: mor(c, "h_Z2xZ2xZ2_Z2_00001111"),
        p_b: mor(c, "h_Z2xZ2xZ2_Z2_00110011"),
        i_a: mor(c, "h_Z2_Z2xZ2xZ2_04"),
        i_b: mor(c, "h_Z2_Z2xZ2xZ2_02"),
    };
    let v = check_cmon_biproduct(c, &cm, &axes, z2, z2);
    assert_eq!(clause(&v), "sum-of-idempotents");
    assert!(v
        .failure()
        .unwrap()
        .counterexample
        .as_ref()
        .unwrap()
        .replays(c));
    assert!(!check_biproduct(c, &axes, z2, z2).is_pass());
    // zero object
    let zero = ObjId(0);
    let id = identity_witness(c, zero);
    assert_eq!(check_cmon_biproduct(c, &cm, &id, zero, zero), Verdict::Pass);
}

#[test]
fn definitions_agree_exhaustively() {
    let p = build_pointed_sets(3).unwrap();
    let check = DefinitionCheck::new(&p).unwrap();
    for a in p.objects() {
        for b in p.objects() {
            let s = check.agree_exhaustive(a, b);
            assert_eq!(s.verdict, Verdict::Pass);
            assert_eq!(s.accepted, find_biproducts(&p, a, b).len());
            let lit = check.agree_all_tuples(a, b);
            assert_eq!(lit.verdict, Verdict::Pass);
            assert_eq!(lit.accepted, s.accepted);
        }
    }
    let frag = ab(2);
    let check = DefinitionCheck::new(&frag.cat)
        .unwrap()
        .with_cmon(frag.cmon.validate(&frag.cat).unwrap());
    for a in frag.cat.objects() {
        for b in frag.cat.objects() {
            assert_eq!(check.agree_exhaustive(a, b).verdict, Verdict::Pass);
        }
    }
    let f = build_finset_skeleton(1).unwrap();
    let w = identity_witness(&f, ObjId(0));
    assert!(matches!(
        definitions_agree(&f, &w, ObjId(0), ObjId(0)),
        Err(VerifyError::Precondition(_))
    ));
}

#[test]
fn lemma_on_gallery_witnesses() {
    let f = build_finset_skeleton(2).unwrap();
    let w = identity_witness(&f, ObjId(0));
    assert_eq!(verify_lemma_zero(&f, &w).unwrap(), Verdict::Pass);
    let ind = thin(2, |_, _| true);
    for w in find_biproducts(&ind, ObjId(0), ObjId(1)) {
        assert_eq!(verify_lemma_zero(&ind, &w).unwrap(), Verdict::Pass);
    }
    let mixed = standard_entry("ab-sqcup-set").unwrap().unwrap();
    let z2 = mixed.cat.find_object("Z2").unwrap();
    let ws = find_biproducts(&mixed.cat, z2, z2);
    assert!(!ws.is_empty());
    for w in ws {
        assert_eq!(verify_lemma_zero(&mixed.cat, &w).unwrap(), Verdict::Pass);
    }
    // not a biproduct: precondition error, not a verdict
    let c = walking_arrow();
    let w = identity_witness(&c, ObjId(0));
    assert!(matches!(
        verify_lemma_zero(
            &c,
            &BiproductWitness {
                p_b: mor(&c, "x0_x1"),
                ..w
            }
        ),
        Err(VerifyError::Precondition(_))
    ));
}

#[test]
fn corollary_cases() {
    assert_eq!(verify_corollary_zeros(&thin(2, |_, _| true)), Verdict::Pass);
    assert_eq!(
        verify_corollary_zeros(&build_finset_skeleton(2).unwrap()),
        Verdict::Vacuous
    );
    let trivial = build_ab_fragment(&AbGroupFragmentSpec::trivial_copies(2)).unwrap();
    assert_eq!(verify_corollary_zeros(&trivial.cat), Verdict::Pass);
}

#[test]
fn uniqueness_cases() {
    let ind = thin(3, |_, _| true);
    let ws = find_biproducts(&ind, ObjId(0), ObjId(1));
    let carriers: Vec<_> = ws.iter().map(|w| w.carrier).collect();
    assert_eq!(carriers, vec![ObjId(0), ObjId(1), ObjId(2)]);
    for w1 in &ws {
        for w2 in &ws {
            assert_eq!(verify_uniqueness(&ind, w1, w2).unwrap(), Verdict::Pass);
        }
    }
    let frag = ab(2);
    let ws = find_biproducts(&frag.cat, ObjId(1), ObjId(1));
    assert!(ws.len() > 1);
    for w1 in &ws {
        for w2 in &ws {
            assert_eq!(verify_uniqueness(&frag.cat, w1, w2).unwrap(), Verdict::Pass);
        }
    }
    assert_eq!(
        verify_uniqueness_all(&frag.cat, &ws).unwrap(),
        Verdict::Pass
    );
    let w = ws[0];
    let other = find_biproducts(&frag.cat, ObjId(0), ObjId(1))[0];
    assert!(matches!(
        verify_uniqueness(&frag.cat, &w, &other),
        Err(VerifyError::Precondition(_))
    ));
    assert!(matches!(
        verify_uniqueness_all(&frag.cat, &[w, other]),
        Err(VerifyError::Precondition(_))
    ));
}

#[test]
fn nary_cases() {
    let frag = ab(3);
    let c = &frag.cat;
    let z2 = ObjId(1);
    let unary = NaryBiproductWitness {
        carrier: z2,
        factors: vec![z2],
        projections: vec![c.identity(z2)],
        injections: vec![c.identity(z2)],
    };
    assert_eq!(check_nary_biproduct(c, &unary), Verdict::Pass);
    // binary agreement over every retraction-pair tuple
    let small = ab(2);
    for a in small.cat.objects() {
        for b in small.cat.objects() {
            for carrier in small.cat.objects() {
                for &p_a in small.cat.hom(carrier, a) {
                    for &p_b in small.cat.hom(carrier, b) {
                        let w = BiproductWitness {
                            carrier,
                            p_a,
                            p_b,
                            i_a: small.cat.hom(a, carrier)[0],
                            i_b: small.cat.hom(b, carrier)[0],
                        };
                        let nary = NaryBiproductWitness::from((&w, a, b));
                        assert_eq!(
                            check_nary_biproduct(&small.cat, &nary).is_pass(),
                            check_biproduct(&small.cat, &w, a, b).is_pass()
                        );
                    }
                }
            }
        }
    }
    for inner in find_biproducts(c, z2, z2) {
        for outer in find_biproducts(c, inner.carrier, z2) {
            let t = ternary_from_nested(c, &inner, &outer).unwrap();
            assert_eq!(c.object_name(t.carrier), "Z2xZ2xZ2");
            assert_eq!(check_nary_biproduct(c, &t), Verdict::Pass);
        }
    }
}

#[test]
fn sum_equals_product_cases() {
    let frag = ab(2);
    let c = &frag.cat;
    let z2 = ObjId(1);
    let w = find_biproducts(c, z2, z2)[0];
    let id = c.identity(z2);
    let sp = check_sum_equals_product_of_morphisms(c, &w, &w, id, id).unwrap();
    assert_eq!(
        (sp.sum, sp.product, sp.verdict),
        (c.identity(w.carrier), c.identity(w.carrier), Verdict::Pass)
    );
    let zeros = frag.cmon.validate(c).unwrap().zeros().clone();
    let z = zeros.zero(z2, z2);
    let sp = check_sum_equals_product_of_morphisms(c, &w, &w, z, z).unwrap();
    assert_eq!(sp.sum, zeros.zero(w.carrier, w.carrier));
    assert_eq!(sp.product, sp.sum);
    let ind = thin(2, |_, _| true);
    let w = find_biproducts(&ind, ObjId(0), ObjId(1))[0];
    let f = ind.hom(ObjId(0), ObjId(1))[0];
    let g = ind.hom(ObjId(1), ObjId(0))[0];
    assert!(check_sum_equals_product_of_morphisms(
        &ind,
        &w,
        &w.clone(),
        ind.identity(ObjId(0)),
        ind.identity(ObjId(1))
    )
    .unwrap()
    .verdict
    .is_pass());
    let w_ba = find_biproducts(&ind, ObjId(1), ObjId(0))[0];
    assert!(check_sum_equals_product_of_morphisms(&ind, &w, &w_ba, f, g)
        .unwrap()
        .verdict
        .is_pass());
}

#[test]
fn ambiadjunction_cases() {
    let t = terminal();
    let ba = BiproductAssignment::canonical(&t).unwrap();
    assert_eq!(verify_ambiadjunction(&t, &ba).unwrap(), Verdict::Pass);
    let ind = thin(2, |_, _| true);
    let ba = BiproductAssignment::canonical(&ind).unwrap();
    assert_eq!(verify_ambiadjunction(&ind, &ba).unwrap(), Verdict::Pass);
    let trivial = build_ab_fragment(&AbGroupFragmentSpec::trivial_copies(2)).unwrap();
    let ba = BiproductAssignment::canonical(&trivial.cat).unwrap();
    assert_eq!(
        verify_ambiadjunction(&trivial.cat, &ba).unwrap(),
        Verdict::Pass
    );
    let f = build_finset_skeleton(2).unwrap();
    assert!(matches!(
        BiproductAssignment::canonical(&f),
        Err(VerifyError::Precondition(_))
    ));
}
