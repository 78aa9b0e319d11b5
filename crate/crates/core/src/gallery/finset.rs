use crate::category::FinCat;
use crate::error::GalleryError;

use super::{all_functions, function_category, Expectations, GalleryCategory};

/// Objects `0, 1, …, max_size` (one set per cardinality) and every function.
pub fn build_finset_skeleton(max_size: usize) -> Result<FinCat, GalleryError> {
    let objects: Vec<(String, usize)> = (0..=max_size).map(|n| (n.to_string(), n)).collect();
    let (cat, _) = function_category(&objects, "f", all_functions)?;
    Ok(cat)
}

/// Pointed sets with `1..=max_size` elements, basepoint `0`, and every
/// basepoint-preserving function.
pub fn build_pointed_sets(max_size: usize) -> Result<FinCat, GalleryError> {
    if max_size == 0 {
        return Err(GalleryError::InvalidSpec(
            "pointed sets have at least one element".into(),
        ));
    }
    let objects: Vec<(String, usize)> = (1..=max_size).map(|n| (format!("P{n}"), n)).collect();
    let (cat, _) = function_category(&objects, "f", |a, b| {
        let (m, n) = (a + 1, b + 1);
        Ok(all_functions(m, n)?
            .into_iter()
            .filter(|f| f[0] == 0)
            .collect())
    })?;
    Ok(cat)
}

/// Only `∅ ⊕ ∅` exists; zero morphisms exist only when `∅` is alone.
pub(crate) fn finset_gallery(max_size: usize) -> Result<GalleryCategory, GalleryError> {
    let cat = build_finset_skeleton(max_size)?;
    let expected = Expectations::for_all_pairs(&cat, |a, b| a.0 == 0 && b.0 == 0)
        .with_zero_structure(max_size == 0);
    Ok(GalleryCategory::new(
        format!("finset-{max_size}"),
        cat,
        expected,
    ))
}

/// The product of pointed sets with `j` and `k` points has `jk` points and
/// the wedge `j + k − 1`; they agree only when one side is the point.
pub(crate) fn pointed_gallery(max_size: usize) -> Result<GalleryCategory, GalleryError> {
    let cat = build_pointed_sets(max_size)?;
    let expected =
        Expectations::for_all_pairs(&cat, |a, b| a.0 == 0 || b.0 == 0).with_zero_structure(true);
    Ok(GalleryCategory::new(
        format!("pointed-{max_size}"),
        cat,
        expected,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{classify_morphism, find_zero_structure, Category, ObjId};

    /// Σ over m, n ≤ max of n^m.
    fn count_functions(max: u32) -> usize {
        (0..=max)
            .flat_map(|m| (0..=max).map(move |n| (n as usize).pow(m)))
            .sum()
    }

    #[test]
    fn skeleton_sizes() {
        assert_eq!(build_finset_skeleton(0).unwrap().morphism_count(), 1);
        assert_eq!(count_functions(2), 11);
        assert_eq!(build_finset_skeleton(2).unwrap().morphism_count(), 11);
        assert_eq!(
            build_finset_skeleton(3).unwrap().morphism_count(),
            count_functions(3)
        );
        assert!(build_finset_skeleton(6).unwrap_err().is_resource_guard());
    }

    #[test]
    fn empty_to_point_is_zero_and_non_constant_map_is_not() {
        let c = build_finset_skeleton(2).unwrap();
        let bang = c.find_morphism("f_0_1").unwrap();
        assert!(classify_morphism(&c, bang).zero);
        let id2 = c.find_morphism("id_2").unwrap();
        assert!(!classify_morphism(&c, id2).constant);
        // the swap is separated by the two points 1 → 2
        let swap = c.find_morphism("f_2_2_10").unwrap();
        assert!(!classify_morphism(&c, swap).constant);
    }

    #[test]
    fn finset_lacks_zero_structure_at_point_to_empty() {
        let c = build_finset_skeleton(2).unwrap();
        let search = find_zero_structure(&c);
        assert!(search.structure.is_none());
        let cx = search
            .verdict
            .failure()
            .unwrap()
            .counterexample
            .clone()
            .unwrap();
        assert_eq!(
            cx,
            crate::verdict::Counterexample::NoZero {
                from: ObjId(1),
                to: ObjId(0)
            }
        );
    }

    #[test]
    fn pointed_sets_have_zero_morphisms() {
        let c = build_pointed_sets(3).unwrap();
        let zs = find_zero_structure(&c).structure.expect("zero structure");
        for a in c.objects() {
            for b in c.objects() {
                // the map sending everything to the basepoint
                let expected = if (a.0, b.0) == (0, 0) {
                    "id_P1".to_string()
                } else {
                    format!("f_P{}_P{}_{}", a.0 + 1, b.0 + 1, "0".repeat(a.0 + 1))
                };
                assert_eq!(c.morphism_name(zs.zero(a, b)), expected);
            }
        }
    }
}
