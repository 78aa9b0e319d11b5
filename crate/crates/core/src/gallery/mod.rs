//! Finite example categories with the results they are expected to show.
//!
//! Every builder returns a validated [`FinCat`]. Expectations are derived
//! from the construction itself (isomorphism classes, unitality, fixed
//! points), never from running the biproduct search, and are relative to the
//! finite fragment: a missing biproduct means none exists in this fragment.

mod ab;
mod con;
mod finset;
mod preorder;
mod random;
mod semigroup;

use std::collections::HashMap;

use crate::biproduct::CMonStructure;
use crate::category::{
    coproduct_category, validate_category, Category, FinCat, MorId, Morphism, ObjId, MAX_MORPHISMS,
};
use crate::error::{GalleryError, StructureError};

pub use ab::{build_ab_fragment, AbFragment, AbGroupFragmentSpec, AbGroupSpec};
pub use con::{build_con_fragment, ContractiveSystemSpec, TERMINAL_SYSTEM};
pub use finset::{build_finset_skeleton, build_pointed_sets};
pub use preorder::{build_preorder, PreorderSpec};
pub use random::{build_random_category, RandomBounds};
pub use semigroup::{build_inverse_semigroup_category, InverseSemigroupSpec};

/// A gallery category together with what the construction predicts about it.
#[derive(Debug, Clone)]
pub struct GalleryCategory {
    pub name: String,
    pub cat: FinCat,
    pub cmon: Option<CMonStructure>,
    pub expected: Expectations,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Expectations {
    /// Ordered pairs with a predicted answer to "does a biproduct exist here".
    pub biproducts: Vec<((ObjId, ObjId), bool)>,
    pub zero_structure: Option<bool>,
}

impl Expectations {
    pub fn for_all_pairs(cat: &FinCat, exists: impl Fn(ObjId, ObjId) -> bool) -> Expectations {
        let biproducts = cat
            .objects()
            .flat_map(|a| cat.objects().map(move |b| (a, b)))
            .map(|(a, b)| ((a, b), exists(a, b)))
            .collect();
        Expectations {
            biproducts,
            zero_structure: None,
        }
    }

    pub fn with_zero_structure(mut self, present: bool) -> Expectations {
        self.zero_structure = Some(present);
        self
    }

    /// Whether every ordered pair is covered and predicted to have a biproduct.
    pub fn all_pairs_have_biproducts(&self, cat: &FinCat) -> bool {
        self.biproducts.len() == cat.object_count() * cat.object_count()
            && self.biproducts.iter().all(|&(_, e)| e)
    }
}

impl GalleryCategory {
    pub fn new(name: impl Into<String>, cat: FinCat, expected: Expectations) -> GalleryCategory {
        GalleryCategory {
            name: name.into(),
            cat,
            cmon: None,
            expected,
        }
    }
}

pub(crate) fn checked(cat: FinCat) -> Result<FinCat, GalleryError> {
    match validate_category(&cat).failure() {
        None => Ok(cat),
        Some(f) => Err(GalleryError::InvalidSpec(format!(
            "construction violates the category axioms ({})",
            f.clause
        ))),
    }
}

/// Every function `{0..m} → {0..n}` in lexicographic order of image lists.
pub(crate) fn all_functions(m: usize, n: usize) -> Result<Vec<Vec<usize>>, GalleryError> {
    let count = (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if count > MAX_MORPHISMS as u128 {
        return Err(StructureError::ResourceGuard {
            morphisms: count.min(usize::MAX as u128) as usize,
            limit: MAX_MORPHISMS,
        }
        .into());
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut current = vec![0; m];
    if m > 0 && n == 0 {
        return Ok(out);
    }
    loop {
        out.push(current.clone());
        // odometer, least significant digit last
        let mut k = m;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            current[k] += 1;
            if current[k] < n {
                break;
            }
            current[k] = 0;
        }
    }
}

pub(crate) fn image_label(images: &[usize]) -> String {
    if images.iter().all(|&x| x < 10) {
        images.iter().map(|x| x.to_string()).collect()
    } else {
        images
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join("_")
    }
}

/// A subcategory of finite sets: objects carry sizes, `homs(a, b)` lists the
/// admitted functions, and composition is composition of functions. Fails if
/// the admitted functions are not closed under composition or miss an
/// identity.
pub(crate) fn function_category(
    objects: &[(String, usize)],
    prefix: &str,
    mut homs: impl FnMut(usize, usize) -> Result<Vec<Vec<usize>>, GalleryError>,
) -> Result<(FinCat, Vec<Vec<usize>>), GalleryError> {
    let n = objects.len();
    let mut morphisms = Vec::new();
    let mut maps: Vec<Vec<usize>> = Vec::new();
    let mut index: HashMap<(usize, usize, Vec<usize>), MorId> = HashMap::new();
    for a in 0..n {
        for b in 0..n {
            let mut fs = homs(a, b)?;
            fs.sort();
            fs.dedup();
            for f in fs {
                if morphisms.len() >= MAX_MORPHISMS {
                    return Err(StructureError::ResourceGuard {
                        morphisms: morphisms.len() + 1,
                        limit: MAX_MORPHISMS,
                    }
                    .into());
                }
                let identity = a == b && f.iter().enumerate().all(|(i, &x)| i == x);
                let name = if identity {
                    format!("id_{}", objects[a].0)
                } else {
                    let label = image_label(&f);
                    if label.is_empty() {
                        format!("{prefix}_{}_{}", objects[a].0, objects[b].0)
                    } else {
                        format!("{prefix}_{}_{}_{label}", objects[a].0, objects[b].0)
                    }
                };
                index.insert((a, b, f.clone()), MorId(morphisms.len()));
                morphisms.push(Morphism {
                    name,
                    dom: ObjId(a),
                    cod: ObjId(b),
                });
                maps.push(f);
            }
        }
    }
    let mut identities = Vec::with_capacity(n);
    for (a, (name, size)) in objects.iter().enumerate() {
        let id: Vec<usize> = (0..*size).collect();
        match index.get(&(a, a, id)) {
            Some(&m) => identities.push(m),
            None => {
                return Err(GalleryError::InvalidSpec(format!(
                    "identity of {name} is not an admitted morphism"
                )))
            }
        }
    }
    let m = morphisms.len();
    let mut table = vec![None; m * m];
    for g in 0..m {
        for f in 0..m {
            if morphisms[f].cod != morphisms[g].dom {
                continue;
            }
            let gf: Vec<usize> = maps[f].iter().map(|&x| maps[g][x]).collect();
            let key = (morphisms[f].dom.0, morphisms[g].cod.0, gf);
            match index.get(&key) {
                Some(&h) => table[g * m + f] = Some(h),
                None => {
                    return Err(GalleryError::InvalidSpec(format!(
                        "admitted maps are not closed under composition: {} ∘ {}",
                        morphisms[g].name, morphisms[f].name
                    )))
                }
            }
        }
    }
    let names = objects.iter().map(|(name, _)| name.clone()).collect();
    let cat = FinCat::from_parts(names, morphisms, identities, table)?;
    Ok((checked(cat)?, maps))
}

/// `c ⊔ d` with expectations transported blockwise: pairs inside a block
/// keep that block's predictions, mixed pairs have no biproduct.
pub fn build_coproduct(
    name: impl Into<String>,
    left: &GalleryCategory,
    right: &GalleryCategory,
) -> Result<GalleryCategory, GalleryError> {
    let cat = checked(coproduct_category(&left.cat, &right.cat)?)?;
    let offset = left.cat.object_count();
    let shift = |(a, b): (ObjId, ObjId)| (ObjId(a.0 + offset), ObjId(b.0 + offset));
    let mut biproducts: Vec<((ObjId, ObjId), bool)> = left.expected.biproducts.clone();
    biproducts.extend(
        right
            .expected
            .biproducts
            .iter()
            .map(|&(p, e)| (shift(p), e)),
    );
    for a in 0..offset {
        for b in offset..cat.object_count() {
            biproducts.push(((ObjId(a), ObjId(b)), false));
            biproducts.push(((ObjId(b), ObjId(a)), false));
        }
    }
    biproducts.sort();
    let both_nonempty = left.cat.object_count() > 0 && right.cat.object_count() > 0;
    let zero_structure = if both_nonempty {
        Some(false)
    } else {
        left.expected
            .zero_structure
            .or(right.expected.zero_structure)
    };
    Ok(GalleryCategory {
        name: name.into(),
        cat,
        cmon: None,
        expected: Expectations {
            biproducts,
            zero_structure,
        },
    })
}

/// The fixed collection used by the acceptance and property suites.
pub fn standard_gallery() -> Result<Vec<GalleryCategory>, GalleryError> {
    let mut out = vec![
        preorder::named("terminal", &PreorderSpec::indiscrete(1))?,
        preorder::named("walking-arrow", &PreorderSpec::chain(2))?,
        preorder::named("discrete-2", &PreorderSpec::discrete(2))?,
        preorder::named("chain-3", &PreorderSpec::chain(3))?,
        preorder::named("diamond", &PreorderSpec::diamond())?,
        preorder::named("indiscrete-2", &PreorderSpec::indiscrete(2))?,
        preorder::named("indiscrete-3", &PreorderSpec::indiscrete(3))?,
        preorder::named("cluster", &PreorderSpec::cluster())?,
    ];
    for size in [0, 2, 3] {
        out.push(finset::finset_gallery(size)?);
    }
    for size in [3, 4] {
        out.push(finset::pointed_gallery(size)?);
    }
    let ab_small = ab::gallery("ab-0-2-22", &AbGroupFragmentSpec::elementary_2(2), true)?;
    out.push(ab_small.clone());
    out.push(ab::gallery(
        "ab-0-2-22-222",
        &AbGroupFragmentSpec::elementary_2(3),
        true,
    )?);
    out.push(ab::gallery(
        "ab-2-3",
        &AbGroupFragmentSpec::from_factors(&[&[2], &[3]]),
        false,
    )?);
    out.push(ab::gallery(
        "ab-trivial",
        &AbGroupFragmentSpec::trivial_copies(2),
        true,
    )?);
    out.push(build_coproduct(
        "ab-sqcup-set",
        &ab_small,
        &finset::finset_gallery(2)?,
    )?);
    out.push(semigroup::gallery(
        "inverse-semigroups",
        &InverseSemigroupSpec::standard_fragment(),
    )?);
    out.push(con::gallery(
        "con",
        &ContractiveSystemSpec::standard_fragment(),
    )?);
    Ok(out)
}

/// Looks up a gallery entry by name.
pub fn standard_entry(name: &str) -> Result<Option<GalleryCategory>, GalleryError> {
    Ok(standard_gallery()?.into_iter().find(|g| g.name == name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn function_enumeration_counts() {
        assert_eq!(all_functions(0, 0).unwrap(), vec![Vec::<usize>::new()]);
        assert!(all_functions(1, 0).unwrap().is_empty());
        assert_eq!(all_functions(2, 2).unwrap().len(), 4);
        assert_eq!(all_functions(3, 2).unwrap()[1], vec![0, 0, 1]);
        assert!(all_functions(12, 3).unwrap_err().is_resource_guard());
    }

    #[test]
    fn every_gallery_category_validates() {
        for g in standard_gallery().unwrap() {
            assert!(validate_category(&g.cat).is_pass(), "{}", g.name);
        }
    }
}
