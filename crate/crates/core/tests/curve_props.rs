mod common;

use common::ideals;
use jn_core::curve::{
    characteristic_exponents, curve_jumping_numbers, equisingularity_from_jumps, ideal_from_class,
    ideal_jumps_from_curve, pairs_to_generators, to_pairs, to_sequence, EquisingularityClass, IdealDatum,
    MultiplicitySequence,
};
use jn_core::rational::int;
use jn_core::{generators, BigInt, ProximityMatrix, Rational, SimpleIdeal};
use num_integer::Integer;
use num_traits::Zero;

fn classes() -> Vec<EquisingularityClass> {
    ideals().iter().map(EquisingularityClass::of_ideal).collect()
}

#[test]
fn class_of_an_ideal_rebuilds_it() {
    for ideal in ideals() {
        let ec = EquisingularityClass::of_ideal(&ideal);
        assert_eq!(&ideal_from_class(&ec), ideal.basis());
    }
}

#[test]
fn curve_jumps_are_periodic_and_contain_one() {
    let bound = int(3);
    for ec in classes() {
        let hc = curve_jumping_numbers(&ec, &bound).unwrap();
        assert!(hc.contains(&int(1)));
        for c in &hc {
            let next = c + int(1);
            if next <= bound {
                assert!(hc.contains(&next), "{} lacks {next}", ec.curve);
            }
        }
        let ideal = SimpleIdeal::new(ideal_from_class(&EquisingularityClass::new(ec.curve.clone(), 0)));
        let ha = generators(&ideal).enumerate_values(&bound).unwrap();
        assert!(!ha.contains(&int(1)));
        let below = |v: &[Rational]| v.iter().filter(|c| *c < &int(1)).cloned().collect::<Vec<_>>();
        assert_eq!(below(&hc), below(&ha));
    }
}

#[test]
fn curve_jumps_ignore_extra_points() {
    for ec in classes().into_iter().take(80) {
        let base = curve_jumping_numbers(&EquisingularityClass::new(ec.curve.clone(), 0), &int(3)).unwrap();
        for t in 1..=3 {
            let other = curve_jumping_numbers(&EquisingularityClass::new(ec.curve.clone(), t), &int(3)).unwrap();
            assert_eq!(other, base);
        }
    }
}

#[test]
fn curve_jumps_depend_only_on_the_sequence() {
    for ideal in ideals() {
        // Same ideal reached through its proximity relations instead of its multiplicities.
        let p = ideal.proximity();
        let relations: Vec<(usize, usize)> =
            (1..=p.n()).flat_map(|j| (1..j).filter(move |&i| p.is_proximate(j, i)).map(move |i| (j, i))).collect();
        let rebuilt = SimpleIdeal::from_proximity(ProximityMatrix::from_relations(p.n(), &relations).unwrap());
        let a = EquisingularityClass::of_ideal(&ideal);
        let b = EquisingularityClass::of_ideal(&rebuilt);
        assert_eq!(a, b);
        assert_eq!(curve_jumping_numbers(&a, &int(2)).unwrap(), curve_jumping_numbers(&b, &int(2)).unwrap());
    }
}

#[test]
fn ideal_jumps_recovered_from_curve_jumps() {
    let bound = int(3);
    for ideal in ideals() {
        let ec = EquisingularityClass::of_ideal(&ideal);
        let expect = generators(&ideal).enumerate_values(&bound).unwrap();
        let hc = curve_jumping_numbers(&ec, &bound).unwrap();
        let v = ideal.basis().self_intersection();
        assert_eq!(ideal_jumps_from_curve(&hc, &IdealDatum::Valuation(v), &bound).unwrap(), expect);
        assert_eq!(ideal_jumps_from_curve(&hc, &IdealDatum::Length(ideal.n()), &bound).unwrap(), expect);
        let below: Vec<Rational> = hc.iter().filter(|c| *c < &int(1)).cloned().collect();
        assert_eq!(equisingularity_from_jumps(&below).unwrap(), ec.curve);
    }
}

#[test]
fn pairs_and_sequences_convert_both_ways() {
    for ec in classes() {
        let ms = &ec.curve;
        let cp = to_pairs(ms);
        assert_eq!(cp.genus(), ms.genus());
        assert_eq!(&to_sequence(&cp).unwrap(), ms);
        assert_eq!(to_pairs(&to_sequence(&cp).unwrap()), cp);
        let via_ideal = generators(&SimpleIdeal::new(ideal_from_class(&EquisingularityClass::new(ms.clone(), 0))));
        assert_eq!(pairs_to_generators(&cp).unwrap(), via_ideal, "{ms}");
    }
}

#[test]
fn characteristic_exponent_gcds() {
    for ec in classes() {
        let ms: &MultiplicitySequence = &ec.curve;
        let beta = characteristic_exponents(ms);
        let ideal = SimpleIdeal::new(ms.as_point_basis().clone());
        let gs = ideal.structure();
        let mut g = BigInt::zero();
        for (k, b) in beta.iter().enumerate() {
            g = g.gcd(b);
            let expect = if ms.len() == 1 { BigInt::from(1) } else { ideal.basis().a(gs.gamma(k)).clone() };
            assert_eq!(g, expect, "{ms} k={k}");
        }
        assert!(beta.windows(2).all(|w| w[0] < w[1]));
    }
}
