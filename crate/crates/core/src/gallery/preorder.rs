use serde::{Deserialize, Serialize};

use crate::category::{FinCat, MorId, Morphism, ObjId};
use crate::error::GalleryError;

use super::{checked, Expectations, GalleryCategory};

/// A finite preorder given by its elements and related pairs `(x, y)`,
/// read as `x ≤ y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreorderSpec {
    pub elements: Vec<String>,
    pub relation: Vec<(String, String)>,
}

impl PreorderSpec {
    fn from_fn(names: Vec<String>, rel: impl Fn(usize, usize) -> bool) -> PreorderSpec {
        let n = names.len();
        let mut relation = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if rel(i, j) {
                    relation.push((names[i].clone(), names[j].clone()));
                }
            }
        }
        PreorderSpec {
            elements: names,
            relation,
        }
    }

    fn numbered(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    pub fn chain(n: usize) -> PreorderSpec {
        PreorderSpec::from_fn(Self::numbered(n), |i, j| i <= j)
    }

    pub fn discrete(n: usize) -> PreorderSpec {
        PreorderSpec::from_fn(Self::numbered(n), |i, j| i == j)
    }

    pub fn indiscrete(n: usize) -> PreorderSpec {
        PreorderSpec::from_fn(Self::numbered(n), |_, _| true)
    }

    /// `bot ≤ left, right ≤ top`.
    pub fn diamond() -> PreorderSpec {
        let names = ["bot", "left", "right", "top"].map(String::from).to_vec();
        PreorderSpec::from_fn(names, |i, j| i == j || i == 0 || j == 3)
    }

    /// `a ≅ b ≤ c`: an isomorphic pair below a third element.
    pub fn cluster() -> PreorderSpec {
        let names = ["a", "b", "c"].map(String::from).to_vec();
        PreorderSpec::from_fn(names, |i, j| i == j || j == 2 || (i < 2 && j < 2))
    }

    fn matrix(&self) -> Result<Vec<bool>, GalleryError> {
        let n = self.elements.len();
        let pos = |name: &str| {
            self.elements
                .iter()
                .position(|e| e == name)
                .ok_or_else(|| GalleryError::InvalidSpec(format!("unknown element {name}")))
        };
        for (i, e) in self.elements.iter().enumerate() {
            if self.elements[..i].contains(e) {
                return Err(GalleryError::InvalidSpec(format!("duplicate element {e}")));
            }
        }
        let mut rel = vec![false; n * n];
        for (x, y) in &self.relation {
            rel[pos(x)? * n + pos(y)?] = true;
        }
        for i in 0..n {
            if !rel[i * n + i] {
                return Err(GalleryError::InvalidSpec(format!(
                    "relation is not reflexive at {}",
                    self.elements[i]
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if rel[i * n + j] && rel[j * n + k] && !rel[i * n + k] {
                        return Err(GalleryError::InvalidSpec(format!(
                            "relation is not transitive: {} ≤ {} ≤ {}",
                            self.elements[i], self.elements[j], self.elements[k]
                        )));
                    }
                }
            }
        }
        Ok(rel)
    }
}

/// The thin category of a preorder: one morphism `x → y` per related pair.
pub fn build_preorder(spec: &PreorderSpec) -> Result<FinCat, GalleryError> {
    let rel = spec.matrix()?;
    let n = spec.elements.len();
    let mut morphisms = Vec::new();
    let mut index = vec![None; n * n];
    for i in 0..n {
        for j in 0..n {
            if rel[i * n + j] {
                index[i * n + j] = Some(MorId(morphisms.len()));
                let name = if i == j {
                    format!("id_{}", spec.elements[i])
                } else {
                    format!("{}_{}", spec.elements[i], spec.elements[j])
                };
                morphisms.push(Morphism {
                    name,
                    dom: ObjId(i),
                    cod: ObjId(j),
                });
            }
        }
    }
    let identities = (0..n)
        .map(|i| index[i * n + i].expect("reflexive"))
        .collect();
    let ends: Vec<(usize, usize)> = morphisms.iter().map(|m| (m.dom.0, m.cod.0)).collect();
    let cat = FinCat::tabulate(spec.elements.clone(), morphisms, identities, |g, f| {
        index[ends[f.0].0 * n + ends[g.0].1]
    })?;
    checked(cat)
}

/// Gallery entry: in a preorder `A⊕B` exists exactly when `A ≅ B`.
pub(crate) fn named(name: &str, spec: &PreorderSpec) -> Result<GalleryCategory, GalleryError> {
    let rel = spec.matrix()?;
    let n = spec.elements.len();
    let cat = build_preorder(spec)?;
    let expected =
        Expectations::for_all_pairs(&cat, |a, b| rel[a.0 * n + b.0] && rel[b.0 * n + a.0]);
    Ok(GalleryCategory::new(name, cat, expected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::Category;

    #[test]
    fn chain_of_two_is_the_walking_arrow() {
        let c = build_preorder(&PreorderSpec::chain(2)).unwrap();
        assert_eq!(c.object_count(), 2);
        assert_eq!(c.morphism_count(), 3);
        assert_eq!(c.hom(ObjId(0), ObjId(1)).len(), 1);
        assert!(c.hom(ObjId(1), ObjId(0)).is_empty());
    }

    #[test]
    fn indiscrete_pair_has_four_morphisms() {
        let c = build_preorder(&PreorderSpec::indiscrete(2)).unwrap();
        assert_eq!((c.object_count(), c.morphism_count()), (2, 4));
    }

    #[test]
    fn rejects_non_preorders() {
        let mut spec = PreorderSpec::chain(3);
        spec.relation.retain(|(x, y)| !(x == "x0" && y == "x2"));
        assert!(
            matches!(build_preorder(&spec), Err(GalleryError::InvalidSpec(m)) if m.contains("transitive"))
        );
        let mut spec = PreorderSpec::chain(2);
        spec.relation.retain(|(x, y)| x != y || x != "x1");
        assert!(
            matches!(build_preorder(&spec), Err(GalleryError::InvalidSpec(m)) if m.contains("reflexive"))
        );
    }
}
