mod common;

use std::sync::Arc;

use common::{ideals, small_point_basis};
use jn_core::{BigInt, Divisor, Lattice, PointBasis, ProximityMatrix};
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn lattice_of(b: &PointBasis) -> Arc<Lattice> {
    Lattice::new(&ProximityMatrix::from_point_basis(b))
}

/// A basis with `n ≤ n_max` and a divisor on it with entries in `lo..=hi`.
fn basis_and_divisor(n_max: usize, lo: i64, hi: i64) -> impl Strategy<Value = (PointBasis, Vec<i64>)> {
    small_point_basis(n_max).prop_flat_map(move |b| {
        let n = b.n();
        (Just(b), prop::collection::vec(lo..=hi, n))
    })
}

fn divisor(l: &Arc<Lattice>, c: &[i64]) -> Divisor {
    Divisor::from_ints(l, c).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn base_changes_round_trip((b, c) in basis_and_divisor(10, -50, 50)) {
        let l = lattice_of(&b);
        let d = divisor(&l, &c);
        prop_assert_eq!(Divisor::from_star(&l, d.to_star()).unwrap(), d.clone());
        prop_assert_eq!(Divisor::from_hat(&l, d.to_hat()).unwrap(), d.clone());
        // D·E_j = -d̂_j, D·E*_j = -d*_j, D·Ê_j = -d_j
        for j in 1..=b.n() {
            prop_assert_eq!(d.intersect(&Divisor::e(&l, j)).unwrap(), -d.to_hat()[j - 1].clone());
            prop_assert_eq!(d.intersect(&Divisor::e_star(&l, j)).unwrap(), -d.to_star()[j - 1].clone());
            prop_assert_eq!(d.intersect(&Divisor::e_hat(&l, j)).unwrap(), -d.coeffs()[j - 1].clone());
        }
    }

    #[test]
    fn closure_properties((b, c) in basis_and_divisor(8, -5, 5), bump in prop::collection::vec(0i64..3, 8)) {
        let l = lattice_of(&b);
        let d = divisor(&l, &c);
        let closed = d.antinef_closure().unwrap();
        prop_assert!(closed.is_antinef());
        prop_assert!(d.positive_part().le(&closed));
        prop_assert_eq!(&closed.antinef_closure().unwrap(), &closed);
        prop_assert_eq!(&d.positive_part().antinef_closure().unwrap(), &closed);
        prop_assert_eq!(&d.antinef_closure_fast().unwrap(), &closed);
        let bigger: Vec<i64> = c.iter().zip(&bump).map(|(x, y)| x + y).collect();
        let bigger = divisor(&l, &bigger).antinef_closure().unwrap();
        prop_assert!(closed.le(&bigger));
    }

    #[test]
    fn laufer_order_does_not_matter((b, c) in basis_and_divisor(8, -5, 8), seed in any::<u64>()) {
        let l = lattice_of(&b);
        let d = divisor(&l, &c);
        let first = d.antinef_closure().unwrap();
        let last = d.antinef_closure_with(|cands| *cands.last().unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let random = d.antinef_closure_with(|cands| cands[rng.gen_range(0..cands.len())]).unwrap();
        prop_assert_eq!(&first, &last);
        prop_assert_eq!(&first, &random);
    }

    #[test]
    fn closure_is_the_least_antinef_divisor_above((b, c) in basis_and_divisor(5, -5, 5)) {
        let l = lattice_of(&b);
        let d = divisor(&l, &c);
        let closed = d.antinef_closure().unwrap();
        let low: Vec<i64> = c.iter().map(|&x| x.max(0)).collect();
        let high: Vec<i64> = closed.coeffs().iter().map(|x| x.to_i64().unwrap() + 1).collect();
        let size: i64 = low.iter().zip(&high).map(|(a, b)| b - a + 1).product();
        prop_assume!(size <= 200_000);
        let n = c.len();
        let mut f = low.clone();
        loop {
            let cand = divisor(&l, &f);
            if cand.is_antinef() {
                prop_assert!(closed.le(&cand), "{:?} is antinef above {:?} but not above {:?}", f, c, closed.coeffs());
            }
            let mut k = 0;
            while k < n {
                f[k] += 1;
                if f[k] <= high[k] {
                    break;
                }
                f[k] = low[k];
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
}

#[test]
fn canonical_divisor_is_row_sums() {
    for ideal in ideals() {
        let l = Lattice::new(ideal.proximity());
        let k = Divisor::canonical(&l);
        for i in 1..=ideal.n() {
            let row: BigInt = (1..=ideal.n()).map(|j| ideal.x(i, j).clone()).sum();
            assert_eq!(k.coeffs()[i - 1], row);
        }
        // The simple ideal itself is antinef with factorization e_n.
        let i_div = Divisor::new(&l, (1..=ideal.n()).map(|j| l.pairing(ideal.n(), j).clone()).collect()).unwrap();
        let v = i_div.ideal_of_divisor().unwrap();
        assert_eq!(v.factorization, Divisor::e(&l, ideal.n()).coeffs());
    }
}
