//! Plane branches described by their equisingularity data, and the simple
//! ideals they define.
//!
//! A branch is given by its multiplicity sequence (the point basis up to the
//! last terminal satellite) or by its characteristic pairs. Adding `t` free
//! points of multiplicity one gives the ideal of the class `(C, t)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::closed_form::{
    generators, multiplicities_from_jumps_below_one, prefix_from_pairs, JumpError, JumpingSetDescription,
};
use crate::proximity::{PointBasis, SimpleIdeal};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("invalid multiplicity sequence: {0}")]
    InvalidSequence(String),
    #[error("invalid characteristic pairs: {0}")]
    InvalidPairs(String),
    #[error(transparent)]
    Jump(#[from] JumpError),
}

/// `(a_1, ..., a_{γ_g})`: a point basis whose last point is a satellite, or `(1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicitySequence(PointBasis);

impl MultiplicitySequence {
    pub fn new(m: Vec<BigInt>) -> Result<Self, CurveError> {
        let basis = PointBasis::new(m).map_err(|e| CurveError::InvalidSequence(e.to_string()))?;
        Self::from_basis(basis)
    }

    pub fn from_ints<T: Clone + Into<BigInt>>(m: &[T]) -> Result<Self, CurveError> {
        Self::new(m.iter().cloned().map(Into::into).collect())
    }

    fn from_basis(basis: PointBasis) -> Result<Self, CurveError> {
        let n = basis.n();
        let smooth = n == 1;
        if !smooth && !ideal_of(&basis).structure().is_satellite(n) {
            return Err(CurveError::InvalidSequence(format!("last point of {basis} is free")));
        }
        Ok(MultiplicitySequence(basis))
    }

    /// The multiplicity sequence of the branch of a simple ideal: its point
    /// basis cut at the last terminal satellite.
    pub fn of_ideal(ideal: &SimpleIdeal) -> Self {
        let gs = ideal.structure();
        let end = if gs.g() == 0 { 1 } else { gs.gamma(gs.g()) };
        let m = ideal.basis().multiplicities()[..end].to_vec();
        MultiplicitySequence(PointBasis::new(m).expect("a prefix ending at a satellite is a point basis"))
    }

    pub fn len(&self) -> usize {
        self.0.n()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn multiplicities(&self) -> &[BigInt] {
        self.0.multiplicities()
    }

    pub fn as_point_basis(&self) -> &PointBasis {
        &self.0
    }

    /// The genus `g`: the number of terminal satellites.
    pub fn genus(&self) -> usize {
        if self.0.n() == 1 {
            0
        } else {
            ideal_of(&self.0).structure().g()
        }
    }

    /// `Σ a_i²`, the intersection of the branch with its own t = 0 ideal.
    pub fn square_sum(&self) -> BigInt {
        self.0.self_intersection()
    }
}

impl fmt::Display for MultiplicitySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn ideal_of(basis: &PointBasis) -> SimpleIdeal {
    SimpleIdeal::new(basis.clone())
}

/// `(m_1, n_1), ..., (m_g, n_g)`; the branch has Puiseux exponents
/// `m_k / (n_1 ⋯ n_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharacteristicPairs(Vec<(BigInt, BigInt)>);

impl CharacteristicPairs {
    /// Needs `n_k ≥ 2`, `gcd(m_k, n_k) = 1`, `m_1 > n_1` and `m_k > n_k m_{k-1}`.
    pub fn new(pairs: Vec<(BigInt, BigInt)>) -> Result<Self, CurveError> {
        let bad = |m: String| Err(CurveError::InvalidPairs(m));
        for (k, (m, n)) in pairs.iter().enumerate() {
            let k = k + 1;
            if n < &BigInt::from(2) {
                return bad(format!("n_{k} = {n} is below 2"));
            }
            if !m.gcd(n).is_one() {
                return bad(format!("m_{k} = {m} and n_{k} = {n} are not coprime"));
            }
        }
        if let Some((m, n)) = pairs.first() {
            if m <= n {
                return bad(format!("m_1 = {m} does not exceed n_1 = {n}"));
            }
        }
        let cp = CharacteristicPairs(pairs);
        if let Some(k) = cp.phi().iter().position(|p| !p.is_positive()) {
            return bad(format!("φ_{} is not positive", k + 1));
        }
        Ok(cp)
    }

    pub fn from_ints(pairs: &[(i64, i64)]) -> Result<Self, CurveError> {
        Self::new(pairs.iter().map(|&(m, n)| (m.into(), n.into())).collect())
    }

    pub fn pairs(&self) -> &[(BigInt, BigInt)] {
        &self.0
    }

    pub fn genus(&self) -> usize {
        self.0.len()
    }

    /// `φ_1 = m_1` and `φ_k = m_k - n_k m_{k-1}`.
    fn phi(&self) -> Vec<BigInt> {
        let mut prev = BigInt::zero();
        self.0
            .iter()
            .map(|(m, n)| {
                let phi = m - n * &prev;
                prev = m.clone();
                phi
            })
            .collect()
    }

    /// `n_i ⋯ n_j` with 1-based indices, and 1 when `i > j`.
    fn prod(&self, i: usize, j: usize) -> BigInt {
        (i..=j).map(|k| self.0[k - 1].1.clone()).product()
    }
}

impl fmt::Display for CharacteristicPairs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(m, n)| format!("({m},{n})")).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A branch together with `t` extra free points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EquisingularityClass {
    pub curve: MultiplicitySequence,
    pub t: usize,
}

impl EquisingularityClass {
    pub fn new(curve: MultiplicitySequence, t: usize) -> Self {
        EquisingularityClass { curve, t }
    }

    /// The class of a simple ideal: its branch and the number of trailing free points.
    pub fn of_ideal(ideal: &SimpleIdeal) -> Self {
        let curve = MultiplicitySequence::of_ideal(ideal);
        let t = ideal.n() - curve.len();
        EquisingularityClass { curve, t }
    }
}

/// The point basis of the class: the sequence followed by `t` ones.
pub fn ideal_from_class(ec: &EquisingularityClass) -> PointBasis {
    let mut a = ec.curve.multiplicities().to_vec();
    a.extend(std::iter::repeat_n(BigInt::one(), ec.t));
    PointBasis::new(a).expect("a branch extended by free points is a point basis")
}

/// `(β_0, ..., β_g)` with `β_0 = a_1` and `β_k = a_1 + ρ_{n,γ_0} + ... + ρ_{n,γ_{k-1}}`.
pub fn characteristic_exponents(ms: &MultiplicitySequence) -> Vec<BigInt> {
    let ideal = ideal_of(ms.as_point_basis());
    let n = ideal.n();
    let mut beta = vec![ms.multiplicities()[0].clone()];
    for k in 0..ms.genus() {
        let next = beta[k].clone() + ideal.rho(n, k).expect("ν within range");
        beta.push(next);
    }
    beta
}

/// Characteristic pairs of a branch: `m_k = β_k / a_{γ_k}` and
/// `n_k = a_{γ_{k-1}} / a_{γ_k}`.
pub fn to_pairs(ms: &MultiplicitySequence) -> CharacteristicPairs {
    let beta = characteristic_exponents(ms);
    let ideal = ideal_of(ms.as_point_basis());
    let gs = ideal.structure();
    let a = |k: usize| ideal.basis().a(gs.gamma(k)).clone();
    let pairs = (1..beta.len()).map(|k| (&beta[k] / a(k), a(k - 1) / a(k))).collect();
    CharacteristicPairs::new(pairs).expect("pairs of a valid sequence are valid")
}

/// The multiplicity sequence with the given characteristic pairs.
pub fn to_sequence(cp: &CharacteristicPairs) -> Result<MultiplicitySequence, CurveError> {
    if cp.genus() == 0 {
        return MultiplicitySequence::from_ints(&[1]);
    }
    let d = pairs_to_generators(cp)?;
    let basis = prefix_from_pairs(d.pairs()).map_err(|e| CurveError::InvalidPairs(e.to_string()))?;
    MultiplicitySequence::from_basis(basis)
}

/// Generator pairs of the `t = 0` ideal straight from the characteristic pairs:
/// `a_k = n_{k+1} ⋯ n_g` and `b_k = Σ_{i ≤ k+1} (n_{i+1} ⋯ n_g)(n_i ⋯ n_k) φ_i`.
pub fn pairs_to_generators(cp: &CharacteristicPairs) -> Result<JumpingSetDescription, CurveError> {
    let g = cp.genus();
    if g == 0 {
        return Ok(JumpingSetDescription::new(vec![(BigInt::one(), BigInt::one())], vec![])?);
    }
    let phi = cp.phi();
    let pairs: Vec<(BigInt, BigInt)> = (0..g)
        .map(|k| {
            let b = (1..=k + 1).map(|i| cp.prod(i + 1, g) * cp.prod(i, k) * &phi[i - 1]).sum();
            (cp.prod(k + 1, g), b)
        })
        .collect();
    let caps = pairs[1..].iter().map(|(a, _)| a.clone()).collect();
    JumpingSetDescription::new(pairs, caps).map_err(|e| CurveError::InvalidPairs(e.to_string()))
}

/// Jumping numbers of the branch up to `bound`: the ideal jumps in `(0, 1)`,
/// and 1, shifted by every natural number.
pub fn curve_jumping_numbers(ec: &EquisingularityClass, bound: &Rational) -> Result<Vec<Rational>, CurveError> {
    if !bound.is_positive() {
        return Err(JumpError::NonpositiveBound(bound.clone()).into());
    }
    let base = EquisingularityClass::new(ec.curve.clone(), 0);
    let d = generators(&SimpleIdeal::new(ideal_from_class(&base)));
    let one = Rational::one();
    let mut seeds = d.enumerate_values(&one)?;
    seeds.retain(|c| c < &one);
    seeds.push(one);
    let mut out = Vec::new();
    let mut shift = BigInt::zero();
    loop {
        let before = out.len();
        out.extend(seeds.iter().map(|c| c + int(shift.clone())).filter(|c| c <= bound));
        if out.len() == before {
            break;
        }
        shift += 1u32;
    }
    out.sort();
    Ok(out)
}

/// What is known about the ideal beyond the branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealDatum {
    /// The number of points `n` of the ideal.
    Length(usize),
    /// `v(𝔞) = I·I`.
    Valuation(BigInt),
}

/// The ideal's jumping numbers in `(0, bound]` from the branch's jumping numbers
/// (complete up to `bound`) and `n` or `v(𝔞)`: `(H_C ∖ {1}) ∪ {1 + (k+1)/v}`.
pub fn ideal_jumps_from_curve(
    curve_jumps: &[Rational],
    datum: &IdealDatum,
    bound: &Rational,
) -> Result<Vec<Rational>, CurveError> {
    if !bound.is_positive() {
        return Err(JumpError::NonpositiveBound(bound.clone()).into());
    }
    let malformed = |m: String| CurveError::Jump(JumpError::MalformedJumpSet(m));
    let one = Rational::one();
    let mut sorted: Vec<Rational> = curve_jumps.iter().filter(|c| *c <= bound).cloned().collect();
    sorted.sort();
    sorted.dedup();
    if bound >= &one && !sorted.contains(&one) {
        return Err(malformed("1 is missing from the curve jumps".into()));
    }
    let v = match datum {
        IdealDatum::Valuation(v) => {
            if !v.is_positive() {
                return Err(malformed(format!("v = {v} is not positive")));
            }
            v.clone()
        }
        IdealDatum::Length(n) => {
            let below: Vec<Rational> = sorted.iter().filter(|c| *c < &one).cloned().collect();
            let ms = equisingularity_from_jumps(&below)?;
            let t = n
                .checked_sub(ms.len())
                .ok_or_else(|| malformed(format!("n = {n} is below the {} points of the branch", ms.len())))?;
            ms.square_sum() + BigInt::from(t)
        }
    };
    let mut out: Vec<Rational> = sorted.into_iter().filter(|c| c != &one).collect();
    let mut k = BigInt::one();
    loop {
        let c = &one + Rational::new(k.clone(), v.clone());
        if &c > bound {
            break;
        }
        out.push(c);
        k += 1u32;
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The branch whose jumping numbers in `(0, 1)` are `jumps_below_one`.
pub fn equisingularity_from_jumps(jumps_below_one: &[Rational]) -> Result<MultiplicitySequence, CurveError> {
    let basis = multiplicities_from_jumps_below_one(jumps_below_one)?;
    MultiplicitySequence::from_basis(basis).map_err(|e| CurveError::Jump(JumpError::MalformedJumpSet(e.to_string())))
}

pub fn genus(ms: &MultiplicitySequence) -> usize {
    ms.genus()
}
