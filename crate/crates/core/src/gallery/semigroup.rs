use serde::{Deserialize, Serialize};

use crate::category::FinCat;
use crate::error::GalleryError;

use super::{all_functions, function_category, Expectations, GalleryCategory};

/// A commutative inverse semigroup as a multiplication table:
/// `table[i][j]` is the index of `elements[i] · elements[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseSemigroupSpec {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl InverseSemigroupSpec {
    /// The two-element group `{e, g}`.
    pub fn z2() -> InverseSemigroupSpec {
        InverseSemigroupSpec {
            name: "Z2".into(),
            elements: vec!["e".into(), "g".into()],
            table: vec![vec![0, 1], vec![1, 0]],
        }
    }

    /// `{0, a, b}` with `x·x = x` and `x·y = 0` otherwise: a semilattice
    /// without a neutral element.
    pub fn semilattice3() -> InverseSemigroupSpec {
        InverseSemigroupSpec {
            name: "N3".into(),
            elements: vec!["z".into(), "a".into(), "b".into()],
            table: vec![vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 2]],
        }
    }

    /// Componentwise product.
    pub fn product(&self, other: &InverseSemigroupSpec) -> InverseSemigroupSpec {
        let (m, n) = (self.elements.len(), other.elements.len());
        let elements = (0..m * n)
            .map(|k| format!("{}{}", self.elements[k / n], other.elements[k % n]))
            .collect();
        let table = (0..m * n)
            .map(|x| {
                (0..m * n)
                    .map(|y| self.table[x / n][y / n] * n + other.table[x % n][y % n])
                    .collect()
            })
            .collect();
        InverseSemigroupSpec {
            name: format!("{}x{}", self.name, other.name),
            elements,
            table,
        }
    }

    pub fn standard_fragment() -> Vec<InverseSemigroupSpec> {
        let z2 = InverseSemigroupSpec::z2();
        vec![
            z2.clone(),
            InverseSemigroupSpec::semilattice3(),
            z2.product(&z2),
        ]
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn validate(&self) -> Result<(), GalleryError> {
        let n = self.elements.len();
        let bad = |msg: String| Err(GalleryError::InvalidSpec(format!("{}: {msg}", self.name)));
        if self.table.len() != n
            || self
                .table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
        {
            return bad("table is not a closed square".into());
        }
        for x in 0..n {
            for y in 0..n {
                if self.mul(x, y) != self.mul(y, x) {
                    return bad(format!("not commutative at ({x}, {y})"));
                }
                for z in 0..n {
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return bad(format!("not associative at ({x}, {y}, {z})"));
                    }
                }
            }
        }
        for x in 0..n {
            let inverses = self.inverses_of(x);
            if inverses.len() != 1 {
                return bad(format!(
                    "{} has {} inverses, expected exactly one",
                    self.elements[x],
                    inverses.len()
                ));
            }
        }
        Ok(())
    }

    /// Every `y` with `x y x = x` and `y x y = y`.
    pub fn inverses_of(&self, x: usize) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&y| self.mul(self.mul(x, y), x) == x && self.mul(self.mul(y, x), y) == y)
            .collect()
    }

    pub fn neutral(&self) -> Option<usize> {
        let n = self.elements.len();
        (0..n).find(|&e| (0..n).all(|x| self.mul(e, x) == x))
    }

    fn is_homomorphism(&self, target: &InverseSemigroupSpec, f: &[usize]) -> bool {
        let n = self.elements.len();
        (0..n).all(|x| (0..n).all(|y| f[self.mul(x, y)] == target.mul(f[x], f[y])))
    }

    /// Unital: every neutral element of the source maps to a neutral element
    /// of the target. Holds vacuously when the source has none.
    fn is_unital(&self, target: &InverseSemigroupSpec, f: &[usize]) -> bool {
        match self.neutral() {
            None => true,
            Some(e) => target.neutral() == Some(f[e]),
        }
    }

    fn isomorphic(&self, other: &InverseSemigroupSpec) -> bool {
        let n = self.elements.len();
        if n != other.elements.len() {
            return false;
        }
        all_functions(n, n).is_ok_and(|fs| {
            fs.iter().any(|f| {
                let mut seen = vec![false; n];
                f.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
                    && self.is_homomorphism(other, f)
            })
        })
    }
}

/// Commutative inverse semigroups with unital homomorphisms.
pub fn build_inverse_semigroup_category(
    specs: &[InverseSemigroupSpec],
) -> Result<FinCat, GalleryError> {
    for s in specs {
        s.validate()?;
    }
    let objects: Vec<(String, usize)> = specs
        .iter()
        .map(|s| (s.name.clone(), s.elements.len()))
        .collect();
    let (cat, _) = function_category(&objects, "h", |a, b| {
        let (s, t) = (&specs[a], &specs[b]);
        Ok(all_functions(s.elements.len(), t.elements.len())?
            .into_iter()
            .filter(|f| s.is_homomorphism(t, f) && s.is_unital(t, f))
            .collect())
    })?;
    Ok(cat)
}

/// `S ⊕ T` exists exactly when both have a neutral element and the fragment
/// holds a copy of `S × T`.
pub(crate) fn gallery(
    name: &str,
    specs: &[InverseSemigroupSpec],
) -> Result<GalleryCategory, GalleryError> {
    let cat = build_inverse_semigroup_category(specs)?;
    let expected = Expectations::for_all_pairs(&cat, |a, b| {
        let (s, t) = (&specs[a.0], &specs[b.0]);
        let prod = s.product(t);
        s.neutral().is_some() && t.neutral().is_some() && specs.iter().any(|u| u.isomorphic(&prod))
    });
    Ok(GalleryCategory::new(name, cat, expected))
}
