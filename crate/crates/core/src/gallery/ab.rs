use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::biproduct::CMonStructure;
use crate::category::{Category, FinCat, MorId, ObjId};
use crate::error::GalleryError;

use super::{function_category, Expectations, GalleryCategory};

/// A finite abelian group `Z_{n1} × … × Z_{nk}`; an empty factor list is the
/// trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbGroupSpec {
    pub name: String,
    pub factors: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbGroupFragmentSpec {
    pub groups: Vec<AbGroupSpec>,
}

impl AbGroupSpec {
    pub fn cyclic_product(factors: &[usize]) -> AbGroupSpec {
        let name = if factors.iter().all(|&n| n <= 1) {
            "Z1".to_string()
        } else {
            factors
                .iter()
                .filter(|&&n| n > 1)
                .map(|n| format!("Z{n}"))
                .collect::<Vec<_>>()
                .join("x")
        };
        AbGroupSpec {
            name,
            factors: factors.to_vec(),
        }
    }

    /// Prime-power orders of the cyclic decomposition, sorted; two finite
    /// abelian groups are isomorphic exactly when these agree.
    pub fn elementary_divisors(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for &n in &self.factors {
            let mut n = n;
            let mut p = 2;
            while n > 1 {
                let mut q = 1;
                while n % p == 0 {
                    n /= p;
                    q *= p;
                }
                if q > 1 {
                    out.push(q);
                }
                p += 1;
            }
        }
        out.sort();
        out
    }
}

impl AbGroupFragmentSpec {
    pub fn from_factors(groups: &[&[usize]]) -> AbGroupFragmentSpec {
        AbGroupFragmentSpec {
            groups: groups
                .iter()
                .map(|f| AbGroupSpec::cyclic_product(f))
                .collect(),
        }
    }

    /// `{Z1, Z2, Z2², …, Z2^max_rank}`.
    pub fn elementary_2(max_rank: usize) -> AbGroupFragmentSpec {
        AbGroupFragmentSpec {
            groups: (0..=max_rank)
                .map(|r| AbGroupSpec::cyclic_product(&vec![2; r]))
                .collect(),
        }
    }

    /// `copies` trivial groups; the only finite fragments of nonzero size
    /// closed under binary direct sums.
    pub fn trivial_copies(copies: usize) -> AbGroupFragmentSpec {
        AbGroupFragmentSpec {
            groups: (0..copies)
                .map(|k| AbGroupSpec {
                    name: format!("Z1_{k}"),
                    factors: vec![],
                })
                .collect(),
        }
    }
}

/// A group as an addition table on `0..order`, with `0` the identity.
#[derive(Debug, Clone)]
struct Table {
    order: usize,
    add: Vec<usize>,
}

impl Table {
    fn of(spec: &AbGroupSpec) -> Result<Table, GalleryError> {
        if spec.factors.contains(&0) {
            return Err(GalleryError::InvalidSpec(format!(
                "{}: cyclic factors must be positive",
                spec.name
            )));
        }
        let order: usize = spec.factors.iter().product();
        if order > 16 {
            return Err(GalleryError::InvalidSpec(format!(
                "{}: order {order} exceeds 16",
                spec.name
            )));
        }
        // mixed radix, last factor least significant
        let digits = |mut x: usize| {
            let mut d = vec![0; spec.factors.len()];
            for k in (0..spec.factors.len()).rev() {
                d[k] = x % spec.factors[k];
                x /= spec.factors[k];
            }
            d
        };
        let encode = |d: &[usize]| {
            d.iter()
                .zip(&spec.factors)
                .fold(0, |acc, (x, n)| acc * n + x)
        };
        let mut add = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                let s: Vec<usize> = digits(x)
                    .iter()
                    .zip(digits(y))
                    .zip(&spec.factors)
                    .map(|((a, b), n)| (a + b) % n)
                    .collect();
                add[x * order + y] = encode(&s);
            }
        }
        Ok(Table { order, add })
    }

    fn sum(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y]
    }

    /// Greedy generating set read off the table.
    fn generators(&self) -> Vec<usize> {
        let mut span = vec![false; self.order];
        span[0] = true;
        let mut gens = Vec::new();
        for g in 0..self.order {
            if span[g] {
                continue;
            }
            gens.push(g);
            let mut changed = true;
            while changed {
                changed = false;
                for x in 0..self.order {
                    if span[x] && !span[self.sum(x, g)] {
                        span[self.sum(x, g)] = true;
                        changed = true;
                    }
                }
            }
        }
        gens
    }
}

/// Homomorphisms `src → dst` as image lists: generator images are chosen
/// freely, extended along the table, and kept when the extension is
/// consistent and additive.
fn homomorphisms(src: &Table, dst: &Table) -> Vec<Vec<usize>> {
    let gens = src.generators();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        if let Some(f) = extend(src, dst, &gens, &choice) {
            out.push(f);
        }
        let mut k = gens.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < dst.order {
                break;
            }
            choice[k] = 0;
        }
    }
}

fn extend(src: &Table, dst: &Table, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut f: Vec<Option<usize>> = vec![None; src.order];
    f[0] = Some(0);
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        let fx = f[x].unwrap();
        for (&g, &y) in gens.iter().zip(images) {
            let (s, t) = (src.sum(x, g), dst.sum(fx, y));
            match f[s] {
                None => {
                    f[s] = Some(t);
                    frontier.push(s);
                }
                Some(u) if u != t => return None,
                Some(_) => {}
            }
        }
    }
    let f: Vec<usize> = f.into_iter().collect::<Option<_>>()?;
    for x in 0..src.order {
        for y in 0..src.order {
            if f[src.sum(x, y)] != dst.sum(f[x], f[y]) {
                return None;
            }
        }
    }
    Some(f)
}

/// The fragment, its homomorphisms as image lists, and pointwise addition.
#[derive(Debug, Clone)]
pub struct AbFragment {
    pub cat: FinCat,
    pub cmon: CMonStructure,
    pub specs: Vec<AbGroupSpec>,
}

/// All homomorphisms between the chosen groups, with the pointwise
/// commutative-monoid structure on each homset.
pub fn build_ab_fragment(spec: &AbGroupFragmentSpec) -> Result<AbFragment, GalleryError> {
    let tables: Vec<Table> = spec
        .groups
        .iter()
        .map(Table::of)
        .collect::<Result<_, _>>()?;
    for (i, g) in spec.groups.iter().enumerate() {
        if spec.groups[..i].iter().any(|h| h.name == g.name) {
            return Err(GalleryError::InvalidSpec(format!(
                "duplicate group {}",
                g.name
            )));
        }
    }
    let objects: Vec<(String, usize)> = spec
        .groups
        .iter()
        .zip(&tables)
        .map(|(g, t)| (g.name.clone(), t.order))
        .collect();
    let (cat, maps) = function_category(&objects, "h", |a, b| {
        Ok(homomorphisms(&tables[a], &tables[b]))
    })?;
    let lookup: HashMap<(ObjId, ObjId, &[usize]), MorId> = cat
        .morphisms()
        .map(|m| ((cat.dom(m), cat.cod(m), maps[m.0].as_slice()), m))
        .collect();
    let zero = |a: ObjId, b: ObjId| {
        let z = vec![0; tables[a.0].order];
        lookup[&(a, b, z.as_slice())]
    };
    let add = |f: MorId, g: MorId| {
        let t = &tables[cat.cod(f).0];
        let s: Vec<usize> = maps[f.0]
            .iter()
            .zip(&maps[g.0])
            .map(|(&x, &y)| t.sum(x, y))
            .collect();
        lookup[&(cat.dom(f), cat.cod(f), s.as_slice())]
    };
    let cmon = CMonStructure::from_fn(&cat, zero, add);
    Ok(AbFragment {
        cat,
        cmon,
        specs: spec.groups.clone(),
    })
}

/// `G ⊕ H` exists in the fragment exactly when some member is isomorphic to
/// `G × H`.
pub(crate) fn gallery(
    name: &str,
    spec: &AbGroupFragmentSpec,
    with_cmon: bool,
) -> Result<GalleryCategory, GalleryError> {
    let frag = build_ab_fragment(spec)?;
    let divisors: Vec<Vec<usize>> = frag
        .specs
        .iter()
        .map(AbGroupSpec::elementary_divisors)
        .collect();
    let expected = Expectations::for_all_pairs(&frag.cat, |a, b| {
        let mut want = divisors[a.0].clone();
        want.extend(&divisors[b.0]);
        want.sort();
        divisors.contains(&want)
    })
    .with_zero_structure(true);
    let mut g = GalleryCategory::new(name, frag.cat, expected);
    if with_cmon {
        g.cmon = Some(frag.cmon);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_counts_match_group_theory() {
        // |hom(Z2^a, Z2^b)| = 2^(ab); |hom(Zm, Zn)| = gcd(m, n)
        let frag = build_ab_fragment(&AbGroupFragmentSpec::elementary_2(2)).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(frag.cat.hom(ObjId(a), ObjId(b)).len(), 1 << (a * b));
            }
        }
        let frag =
            build_ab_fragment(&AbGroupFragmentSpec::from_factors(&[&[4], &[6], &[2, 3]])).unwrap();
        let gcd = |m: usize, n: usize| {
            (1..=m.min(n))
                .rev()
                .find(|d| m.is_multiple_of(*d) && n.is_multiple_of(*d))
                .unwrap()
        };
        let orders = [4, 6, 6];
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(
                    frag.cat.hom(ObjId(a), ObjId(b)).len(),
                    gcd(orders[a], orders[b])
                );
            }
        }
    }

    #[test]
    fn elementary_divisors_detect_isomorphism() {
        assert_eq!(
            AbGroupSpec::cyclic_product(&[6]).elementary_divisors(),
            vec![2, 3]
        );
        assert_eq!(
            AbGroupSpec::cyclic_product(&[2, 3]).elementary_divisors(),
            vec![2, 3]
        );
        assert_eq!(
            AbGroupSpec::cyclic_product(&[4]).elementary_divisors(),
            vec![4]
        );
        assert_ne!(
            AbGroupSpec::cyclic_product(&[4]).elementary_divisors(),
            AbGroupSpec::cyclic_product(&[2, 2]).elementary_divisors()
        );
        assert!(AbGroupSpec::cyclic_product(&[])
            .elementary_divisors()
            .is_empty());
    }

    #[test]
    fn pointwise_addition_validates() {
        let frag = build_ab_fragment(&AbGroupFragmentSpec::elementary_2(2)).unwrap();
        frag.cmon.validate(&frag.cat).unwrap();
        let frag = build_ab_fragment(&AbGroupFragmentSpec::from_factors(&[&[2], &[3]])).unwrap();
        frag.cmon.validate(&frag.cat).unwrap();
    }
}
