//! Point bases for testing: a seeded random sample and an exhaustive listing.
//!
//! A basis is grown one point at a time. Point `j ≥ 3` is either free, or a
//! satellite lying on `E_{j-2}`, or keeps lying on the same earlier curve as
//! point `j - 1` did.

use std::collections::HashSet;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::proximity::{PointBasis, ProximityMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Free,
    OnPrevious,
    Continue,
}

/// Proximity relations `(j, h)` for the satellites, or `None` when a
/// `Continue` follows a free point.
fn grow(choices: &[Step]) -> Option<Vec<(usize, usize)>> {
    let mut target: Vec<Option<usize>> = vec![None, None];
    let mut relations = Vec::new();
    for (k, step) in choices.iter().enumerate() {
        let j = k + 3;
        let t = match step {
            Step::Free => None,
            Step::OnPrevious => Some(j - 2),
            Step::Continue => Some(target[j - 2]?),
        };
        if let Some(h) = t {
            relations.push((j, h));
        }
        target.push(t);
    }
    Some(relations)
}

fn basis_of(n: usize, choices: &[Step]) -> Option<PointBasis> {
    let relations = grow(choices)?;
    Some(ProximityMatrix::from_relations(n, &relations).ok()?.point_basis())
}

/// Up to `count` distinct point bases with `1 ≤ n ≤ n_max` and `a_1 ≤ a_max`,
/// reproducible from `seed`. Fewer are returned only when the space is smaller.
pub fn random_point_bases(n_max: usize, a_max: u64, count: usize, seed: u64) -> Vec<PointBasis> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    if n_max == 0 {
        return out;
    }
    let cap = BigInt::from(a_max);
    let mut misses = 0usize;
    while out.len() < count && misses < 200 * count.max(1) {
        let n = rng.gen_range(1..=n_max);
        let choices: Vec<Step> = (3..=n)
            .map(|_| match rng.gen_range(0..3) {
                0 => Step::Free,
                1 => Step::OnPrevious,
                _ => Step::Continue,
            })
            .collect();
        match basis_of(n, &choices) {
            Some(b) if b.a(1) <= &cap && seen.insert(b.clone()) => {
                out.push(b);
                misses = 0;
            }
            _ => misses += 1,
        }
    }
    out
}

/// Every point basis with at most `n_max` points, ordered by `n` then
/// lexicographically.
pub fn all_point_bases(n_max: usize) -> Vec<PointBasis> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let mut level: Vec<PointBasis> = Vec::new();
        let mut seen = HashSet::new();
        let len = n.saturating_sub(2);
        let mut choices = vec![Step::Free; len];
        loop {
            if let Some(b) = basis_of(n, &choices) {
                if seen.insert(b.clone()) {
                    level.push(b);
                }
            }
            // Odometer over the three steps.
            let mut k = 0;
            while k < len {
                choices[k] = match choices[k] {
                    Step::Free => Step::OnPrevious,
                    Step::OnPrevious => Step::Continue,
                    Step::Continue => Step::Free,
                };
                if choices[k] != Step::Free {
                    break;
                }
                k += 1;
            }
            if k == len {
                break;
            }
        }
        level.sort_by(|a, b| a.multiplicities().cmp(b.multiplicities()));
        out.extend(level);
    }
    out
}
