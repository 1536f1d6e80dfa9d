use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coloring::{Coloring, UNASSIGNED};
use crate::combinatorics::{colex_unrank, rank_unchecked};
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

/// Generator used by [`random_cover`]; attempt `a` is seeded with
/// `seed + a` through `SeedableRng::seed_from_u64`.
pub const COVER_RNG: &str = "rand_chacha::ChaCha8Rng/seed_from_u64";

#[derive(Debug, Clone)]
pub struct CoverSpec {
    /// Template whose permuted copies form the color classes.
    pub base: UniformHypergraph,
    pub k: u16,
    pub seed: u64,
    pub max_retries: u32,
}

#[derive(Debug, Clone)]
pub struct CoverOutcome {
    pub coloring: Coloring,
    /// Zero-based attempt that succeeded.
    pub attempt: u32,
    pub rng: &'static str,
}

/// Covers the complete host with k randomly permuted copies of the base;
/// each edge takes the smallest copy index that covers it. `Ok(None)` if
/// some edge stayed uncovered in every attempt.
pub fn random_cover(spec: &CoverSpec) -> Result<Option<CoverOutcome>> {
    if spec.base.is_empty() {
        return Err(Error::Precondition("base hypergraph has no edges".into()));
    }
    if spec.k == 0 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    let (r, n) = (spec.base.r(), spec.base.n());
    let base_edges: Vec<Vec<u32>> = spec
        .base
        .ranks()
        .iter()
        .map(|&x| colex_unrank(x, r))
        .collect();
    for attempt in 0..=spec.max_retries {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed.wrapping_add(attempt as u64));
        let mut coloring = Coloring::unassigned(r, n, spec.k)?;
        let mut perm: Vec<u32> = (0..n as u32).collect();
        let mut img = vec![0u32; r];
        for color in 0..spec.k {
            perm.shuffle(&mut rng);
            for e in &base_edges {
                for (slot, &x) in img.iter_mut().zip(e) {
                    *slot = perm[x as usize];
                }
                img.sort_unstable();
                let rank = rank_unchecked(&img);
                if coloring.get_rank(rank) == UNASSIGNED {
                    coloring.set_rank(rank, color)?;
                }
            }
        }
        if coloring.is_total() {
            return Ok(Some(CoverOutcome {
                coloring,
                attempt,
                rng: COVER_RNG,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_base_covers_in_one_color() {
        let spec = CoverSpec {
            base: UniformHypergraph::complete(3, 6).unwrap(),
            k: 1,
            seed: 1,
            max_retries: 0,
        };
        let out = random_cover(&spec).unwrap().unwrap();
        assert!(out.coloring.colors().iter().all(|&c| c == 0));
    }

    #[test]
    fn single_edge_cannot_cover() {
        let spec = CoverSpec {
            base: UniformHypergraph::from_edges(3, 5, [[0u32, 1, 2]]).unwrap(),
            k: 1,
            seed: 3,
            max_retries: 5,
        };
        assert!(random_cover(&spec).unwrap().is_none());
    }

    #[test]
    fn empty_base_fails() {
        let spec = CoverSpec {
            base: UniformHypergraph::empty(3, 5).unwrap(),
            k: 3,
            seed: 0,
            max_retries: 0,
        };
        assert!(random_cover(&spec).is_err());
    }

    #[test]
    fn deterministic_per_seed() {
        let spec = CoverSpec {
            base: crate::constructions::balanced_rpartite(6, 3).unwrap(),
            k: 12,
            seed: 99,
            max_retries: 20,
        };
        let a = random_cover(&spec).unwrap().unwrap();
        let b = random_cover(&spec).unwrap().unwrap();
        assert_eq!(a.coloring, b.coloring);
        assert_eq!(a.attempt, b.attempt);
    }
}
