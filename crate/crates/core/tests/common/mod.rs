#![allow(dead_code)]

use jn_core::corpus::random_point_bases;
use jn_core::{PointBasis, SimpleIdeal};
use proptest::prelude::*;

pub const SEED: u64 = 20_240_611;

/// 200+ distinct bases with `n ≤ 8` and `a_1 ≤ 30`, plus the named examples.
pub fn corpus() -> Vec<PointBasis> {
    let mut out: Vec<PointBasis> = [&[2, 1, 1][..], &[2, 2, 1, 1], &[6, 3, 3, 3, 1, 1, 1, 1], &[3, 1, 1, 1], &[1]]
        .iter()
        .map(|a| PointBasis::from_ints(a).unwrap())
        .collect();
    for b in random_point_bases(8, 30, 240, SEED) {
        if !out.contains(&b) {
            out.push(b);
        }
    }
    out
}

pub fn ideals() -> Vec<SimpleIdeal> {
    corpus().into_iter().map(SimpleIdeal::new).collect()
}

pub fn small_point_basis(n_max: usize) -> impl Strategy<Value = PointBasis> {
    (any::<u64>(), 1..=n_max).prop_map(move |(seed, n)| random_point_bases(n, u64::MAX, 1, seed).pop().unwrap())
}
