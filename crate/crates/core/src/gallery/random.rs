use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::category::FinCat;
use crate::error::GalleryError;

use super::function_category;

/// Size limits for [`build_random_category`].
/// Missing fields take their default when read from JSON.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct RandomBounds {
    pub max_objects: usize,
    pub max_set_size: usize,
    pub max_generators: usize,
    pub max_morphisms: usize,
    pub retries: usize,
}

impl Default for RandomBounds {
    fn default() -> RandomBounds {
        RandomBounds {
            max_objects: 3,
            max_set_size: 3,
            max_generators: 4,
            max_morphisms: 12,
            retries: 64,
        }
    }
}

/// A random category: objects are small sets, a few random functions are
/// drawn as generators, and the result is the subcategory they generate.
/// Paths are composed freely and two paths are identified when they denote
/// the same function, which is always a confluent identification.
/// Same seed, same category.
pub fn build_random_category(seed: u64, bounds: RandomBounds) -> Result<FinCat, GalleryError> {
    if bounds.max_objects == 0 {
        return Err(GalleryError::InvalidSpec(
            "max_objects must be positive".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..bounds.retries.max(1) {
        let n = rng.gen_range(1..=bounds.max_objects);
        let sizes: Vec<usize> = (0..n)
            .map(|_| rng.gen_range(0..=bounds.max_set_size))
            .collect();
        let mut arrows: BTreeSet<(usize, usize, Vec<usize>)> = BTreeSet::new();
        for (a, &size) in sizes.iter().enumerate() {
            arrows.insert((a, a, (0..size).collect()));
        }
        for _ in 0..rng.gen_range(0..=bounds.max_generators) {
            let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if sizes[a] > 0 && sizes[b] == 0 {
                continue;
            }
            let f = (0..sizes[a]).map(|_| rng.gen_range(0..sizes[b])).collect();
            arrows.insert((a, b, f));
        }
        if let Some(closed) = close(arrows, bounds.max_morphisms) {
            let objects: Vec<(String, usize)> = sizes
                .iter()
                .enumerate()
                .map(|(i, &s)| (format!("X{i}"), s))
                .collect();
            let (cat, _) = function_category(&objects, "r", |a, b| {
                Ok(closed
                    .iter()
                    .filter(|(x, y, _)| (*x, *y) == (a, b))
                    .map(|(_, _, f)| f.clone())
                    .collect())
            })?;
            return Ok(cat);
        }
    }
    Err(GalleryError::RetryExhausted(bounds.retries.max(1)))
}

/// Closure under composition, or `None` once it exceeds `limit`.
fn close(
    arrows: BTreeSet<(usize, usize, Vec<usize>)>,
    limit: usize,
) -> Option<BTreeSet<(usize, usize, Vec<usize>)>> {
    let mut all = arrows;
    if all.len() > limit {
        return None;
    }
    let mut seen: HashSet<(usize, usize, Vec<usize>)> = all.iter().cloned().collect();
    loop {
        let mut fresh = Vec::new();
        for (a, b, f) in &all {
            for (c, d, g) in &all {
                if b != c {
                    continue;
                }
                let gf: Vec<usize> = f.iter().map(|&x| g[x]).collect();
                let key = (*a, *d, gf);
                if seen.insert(key.clone()) {
                    fresh.push(key);
                }
            }
        }
        if fresh.is_empty() {
            return Some(all);
        }
        all.extend(fresh);
        if all.len() > limit {
            return None;
        }
    }
}
