use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::category::{Category, FinCat};
use crate::error::GalleryError;

use super::{all_functions, function_category, Expectations, GalleryCategory};

/// Name of the one-point system, which every fragment includes.
pub const TERMINAL_SYSTEM: &str = "bang";

/// A finite metric space with exact rational distances and a contractive
/// self-map `endo`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractiveSystemSpec {
    pub name: String,
    pub points: Vec<String>,
    pub distances: Vec<Vec<Ratio<i64>>>,
    pub endo: Vec<usize>,
}

impl ContractiveSystemSpec {
    pub fn terminal() -> ContractiveSystemSpec {
        ContractiveSystemSpec {
            name: TERMINAL_SYSTEM.into(),
            points: vec!["*".into()],
            distances: vec![vec![Ratio::from_integer(0)]],
            endo: vec![0],
        }
    }

    pub fn empty(name: &str) -> ContractiveSystemSpec {
        ContractiveSystemSpec {
            name: name.into(),
            points: vec![],
            distances: vec![],
            endo: vec![],
        }
    }

    /// Two points at distance 1, both sent to the first.
    pub fn collapse2() -> ContractiveSystemSpec {
        let r = |n| Ratio::from_integer(n);
        ContractiveSystemSpec {
            name: "s2".into(),
            points: vec!["x0".into(), "x1".into()],
            distances: vec![vec![r(0), r(1)], vec![r(1), r(0)]],
            endo: vec![0, 0],
        }
    }

    /// `r ↦ q ↦ p ↦ p` with `d(p,q) = 1` and `d(p,r) = d(q,r) = 2`.
    pub fn cascade3() -> ContractiveSystemSpec {
        let r = |n| Ratio::from_integer(n);
        ContractiveSystemSpec {
            name: "s3".into(),
            points: vec!["p".into(), "q".into(), "r".into()],
            distances: vec![
                vec![r(0), r(1), r(2)],
                vec![r(1), r(0), r(2)],
                vec![r(2), r(2), r(0)],
            ],
            endo: vec![0, 0, 1],
        }
    }

    /// Two systems with fixed points and the empty one; the terminal system
    /// is added by the builder.
    pub fn standard_fragment() -> Vec<ContractiveSystemSpec> {
        vec![
            ContractiveSystemSpec::collapse2(),
            ContractiveSystemSpec::cascade3(),
            ContractiveSystemSpec::empty("e"),
        ]
    }

    fn d(&self, x: usize, y: usize) -> Ratio<i64> {
        self.distances[x][y]
    }

    pub fn validate(&self) -> Result<(), GalleryError> {
        let n = self.points.len();
        let bad = |msg: String| Err(GalleryError::InvalidSpec(format!("{}: {msg}", self.name)));
        if self.distances.len() != n || self.distances.iter().any(|row| row.len() != n) {
            return bad(format!("distance table must be {n}×{n}"));
        }
        if self.endo.len() != n || self.endo.iter().any(|&y| y >= n) {
            return bad("endo is not a self-map".into());
        }
        let zero = Ratio::from_integer(0);
        for x in 0..n {
            if self.d(x, x) != zero {
                return bad(format!("d({0}, {0}) is not zero", self.points[x]));
            }
            for y in 0..n {
                if x != y && self.d(x, y) <= zero {
                    return bad(format!(
                        "d({}, {}) is not positive",
                        self.points[x], self.points[y]
                    ));
                }
                if self.d(x, y) != self.d(y, x) {
                    return bad(format!(
                        "d is not symmetric at ({}, {})",
                        self.points[x], self.points[y]
                    ));
                }
                for z in 0..n {
                    if self.d(x, z) > self.d(x, y) + self.d(y, z) {
                        return bad(format!(
                            "triangle inequality fails at ({}, {}, {})",
                            self.points[x], self.points[y], self.points[z]
                        ));
                    }
                }
            }
        }
        // on a finite space a uniform factor below 1 exists iff every
        // distance strictly shrinks
        for x in 0..n {
            for y in 0..n {
                if x != y && self.d(self.endo[x], self.endo[y]) >= self.d(x, y) {
                    return bad(format!(
                        "endo does not contract ({}, {})",
                        self.points[x], self.points[y]
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&x| self.endo[x] == x)
            .collect()
    }

    /// Nonexpansive and equivariant.
    fn admits(&self, target: &ContractiveSystemSpec, h: &[usize]) -> bool {
        let n = self.points.len();
        (0..n).all(|x| h[self.endo[x]] == target.endo[h[x]])
            && (0..n).all(|x| (0..n).all(|y| target.d(h[x], h[y]) <= self.d(x, y)))
    }
}

/// The given systems plus the terminal one, with nonexpansive equivariant
/// maps.
pub fn build_con_fragment(specs: &[ContractiveSystemSpec]) -> Result<FinCat, GalleryError> {
    Ok(with_terminal(specs)?.1)
}

fn with_terminal(
    specs: &[ContractiveSystemSpec],
) -> Result<(Vec<ContractiveSystemSpec>, FinCat), GalleryError> {
    let mut all = specs.to_vec();
    if all.iter().any(|s| s.name == TERMINAL_SYSTEM) {
        return Err(GalleryError::InvalidSpec(format!(
            "{TERMINAL_SYSTEM} is reserved for the terminal system"
        )));
    }
    all.push(ContractiveSystemSpec::terminal());
    for (i, s) in all.iter().enumerate() {
        s.validate()?;
        if all[..i].iter().any(|t| t.name == s.name) {
            return Err(GalleryError::InvalidSpec(format!(
                "duplicate system {}",
                s.name
            )));
        }
    }
    let objects: Vec<(String, usize)> = all
        .iter()
        .map(|s| (s.name.clone(), s.points.len()))
        .collect();
    let (cat, _) = function_category(&objects, "h", |a, b| {
        let (s, t) = (&all[a], &all[b]);
        Ok(all_functions(s.points.len(), t.points.len())?
            .into_iter()
            .filter(|h| s.admits(t, h))
            .collect())
    })?;
    Ok((all, cat))
}

/// Predictions cover the pairs `(s, bang)` and `(bang, s)`: a biproduct
/// exists exactly when `s` has a fixed point.
pub(crate) fn gallery(
    name: &str,
    specs: &[ContractiveSystemSpec],
) -> Result<GalleryCategory, GalleryError> {
    let (all, cat) = with_terminal(specs)?;
    let bang = cat
        .find_object(TERMINAL_SYSTEM)
        .expect("terminal system present");
    let mut biproducts = Vec::new();
    for s in cat.objects() {
        let fixed = !all[s.0].fixed_points().is_empty();
        biproducts.push(((s, bang), fixed));
        if s != bang {
            biproducts.push(((bang, s), fixed));
        }
    }
    biproducts.sort();
    let expected = Expectations {
        biproducts,
        zero_structure: None,
    };
    Ok(GalleryCategory::new(name, cat, expected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::ObjId;

    #[test]
    fn standard_systems_validate_with_unique_fixed_points() {
        for s in ContractiveSystemSpec::standard_fragment() {
            s.validate().unwrap();
            assert!(s.fixed_points().len() <= 1, "{}", s.name);
        }
        assert_eq!(ContractiveSystemSpec::cascade3().fixed_points(), vec![0]);
        assert!(ContractiveSystemSpec::empty("e").fixed_points().is_empty());
    }

    #[test]
    fn rejects_bad_metrics_and_expanding_maps() {
        let mut s = ContractiveSystemSpec::cascade3();
        s.distances[0][2] = Ratio::from_integer(4);
        s.distances[2][0] = Ratio::from_integer(4);
        assert!(
            matches!(s.validate(), Err(GalleryError::InvalidSpec(m)) if m.contains("triangle"))
        );
        let mut s = ContractiveSystemSpec::collapse2();
        s.endo = vec![1, 0];
        assert!(
            matches!(s.validate(), Err(GalleryError::InvalidSpec(m)) if m.contains("contract"))
        );
        let mut s = ContractiveSystemSpec::collapse2();
        s.distances[0][1] = Ratio::new(1, 2);
        assert!(
            matches!(s.validate(), Err(GalleryError::InvalidSpec(m)) if m.contains("symmetric"))
        );
    }

    #[test]
    fn maps_out_of_the_terminal_system_pick_fixed_points() {
        let cat = build_con_fragment(&ContractiveSystemSpec::standard_fragment()).unwrap();
        let bang = cat.find_object(TERMINAL_SYSTEM).unwrap();
        assert_eq!(cat.hom(bang, ObjId(0)).len(), 1);
        assert_eq!(cat.hom(bang, ObjId(1)).len(), 1);
        assert!(cat.hom(bang, ObjId(2)).is_empty());
        // the empty system is initial
        for t in cat.objects() {
            assert_eq!(cat.hom(ObjId(2), t).len(), 1);
        }
    }
}
