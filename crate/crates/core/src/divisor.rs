//! The lattice of exceptional divisors `Λ = ZE_1 + ... + ZE_n`.
//!
//! A divisor is stored by its coefficients `d` in the basis `E`. With
//! `E = Pᵀ E*` and `E* = P Ê` the other coordinates are `d* = dPᵀ` and
//! `d̂ = dPᵀP`, and `D·F = -d*·f*`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::proximity::ProximityMatrix;

/// Upper bound on Laufer steps. Reaching it means a bug, not bad input.
pub const STEP_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("divisors live on different lattices")]
    ContextMismatch,
    #[error("expected {expected} coefficients, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("divisor is not antinef: E_{index}·D = {value} > 0")]
    NotAntinef { index: usize, value: BigInt },
    #[error("internal error: {0}")]
    InternalError(String),
}

/// `P`, `PᵀP = (-E_i·E_j)` and `(PᵀP)^{-1} = (X_i·X_j)` for one blow-up tower.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    prox: ProximityMatrix,
    gram: Vec<Vec<i64>>,
    pairing: Vec<Vec<BigInt>>,
}

impl Lattice {
    pub fn new(prox: &ProximityMatrix) -> Arc<Self> {
        let n = prox.n();
        let gram = (1..=n)
            .map(|i| (1..=n).map(|j| (1..=n).map(|k| prox.entry(k, i) * prox.entry(k, j)).sum()).collect())
            .collect();
        let rows = prox.inverse_rows();
        let pairing =
            rows.iter().map(|xi| rows.iter().map(|xj| xi.iter().zip(xj).map(|(a, b)| a * b).sum()).collect()).collect();
        Arc::new(Lattice { prox: prox.clone(), gram, pairing })
    }

    pub fn n(&self) -> usize {
        self.prox.n()
    }

    pub fn proximity(&self) -> &ProximityMatrix {
        &self.prox
    }

    /// `PᵀP`; its `(i, j)` entry is `-E_i·E_j`.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// `X_i·X_j`, 1-based.
    pub fn pairing(&self, i: usize, j: usize) -> &BigInt {
        &self.pairing[i - 1][j - 1]
    }
}

/// Integer types the Laufer kernel runs on: `BigInt`, or `i128` when the
/// caller has checked that values stay small.
pub(crate) trait Coeff: Integer + Signed + Clone + From<i64> {}
impl<T: Integer + Signed + Clone + From<i64>> Coeff for T {}

pub(crate) fn hat_of<T: Coeff>(gram: &[Vec<i64>], d: &[T]) -> Vec<T> {
    let n = d.len();
    (0..n)
        .map(|j| {
            let mut s = T::zero();
            for (i, di) in d.iter().enumerate() {
                let g = gram[i][j];
                if g != 0 && !di.is_zero() {
                    s = s + di.clone() * T::from(g);
                }
            }
            s
        })
        .collect()
}

/// Laufer's algorithm, adding as many copies of the first offending `E_ν` as
/// keep `E_ν·D` positive before each addition. Every addition is an ordinary
/// Laufer step, so the result is the same minimal antinef divisor.
pub(crate) fn close_batched<T: Coeff>(gram: &[Vec<i64>], d: &mut [T]) -> Result<(), LatticeError> {
    let mut hat = hat_of(gram, d);
    let mut steps = 0u64;
    while let Some(v) = hat.iter().position(|h| h.is_negative()) {
        steps += 1;
        if steps > STEP_BUDGET {
            return Err(LatticeError::InternalError("Laufer step budget exhausted".into()));
        }
        let w = T::from(gram[v][v]);
        let count = (-hat[v].clone()).div_ceil(&w);
        d[v] = d[v].clone() + count.clone();
        for (h, &g) in hat.iter_mut().zip(&gram[v]) {
            if g != 0 {
                *h = h.clone() + count.clone() * T::from(g);
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct Divisor {
    coeffs: Vec<BigInt>,
    lattice: Arc<Lattice>,
}

impl PartialEq for Divisor {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_lattice(&self.lattice, &other.lattice)
    }
}

impl Eq for Divisor {}

fn same_lattice(a: &Arc<Lattice>, b: &Arc<Lattice>) -> bool {
    Arc::ptr_eq(a, b) || a.prox == b.prox
}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i - 1] = BigInt::from(1);
    v
}

impl Divisor {
    /// A divisor from its `E`-coordinates.
    pub fn new(lattice: &Arc<Lattice>, coeffs: Vec<BigInt>) -> Result<Self, LatticeError> {
        if coeffs.len() != lattice.n() {
            return Err(LatticeError::DimensionMismatch { expected: lattice.n(), got: coeffs.len() });
        }
        Ok(Divisor { coeffs, lattice: Arc::clone(lattice) })
    }

    pub fn from_ints(lattice: &Arc<Lattice>, coeffs: &[i64]) -> Result<Self, LatticeError> {
        Self::new(lattice, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(lattice: &Arc<Lattice>) -> Self {
        Divisor { coeffs: vec![BigInt::zero(); lattice.n()], lattice: Arc::clone(lattice) }
    }

    /// `E_i`.
    pub fn e(lattice: &Arc<Lattice>, i: usize) -> Self {
        Divisor { coeffs: unit(lattice.n(), i), lattice: Arc::clone(lattice) }
    }

    /// `E*_i`, the total transform of the `i`-th exceptional curve.
    pub fn e_star(lattice: &Arc<Lattice>, i: usize) -> Self {
        Self::from_star(lattice, unit(lattice.n(), i)).expect("length n")
    }

    /// `Ê_i`, the divisor of the simple ideal `𝔭_i`.
    pub fn e_hat(lattice: &Arc<Lattice>, i: usize) -> Self {
        Self::from_hat(lattice, unit(lattice.n(), i)).expect("length n")
    }

    /// `d = d* (P^{-1})ᵀ`, so `d_j = d*·X_j`.
    pub fn from_star(lattice: &Arc<Lattice>, star: Vec<BigInt>) -> Result<Self, LatticeError> {
        let rows = lattice.prox.inverse_rows();
        if star.len() != rows.len() {
            return Err(LatticeError::DimensionMismatch { expected: rows.len(), got: star.len() });
        }
        let coeffs = rows.iter().map(|xj| xj.iter().zip(&star).map(|(x, s)| x * s).sum()).collect();
        Self::new(lattice, coeffs)
    }

    /// `d = d̂ (PᵀP)^{-1}`, so `d_j = Σ_i d̂_i X_i·X_j`.
    pub fn from_hat(lattice: &Arc<Lattice>, hat: Vec<BigInt>) -> Result<Self, LatticeError> {
        let n = lattice.n();
        if hat.len() != n {
            return Err(LatticeError::DimensionMismatch { expected: n, got: hat.len() });
        }
        let coeffs = (0..n).map(|j| hat.iter().enumerate().map(|(i, h)| h * &lattice.pairing[i][j]).sum()).collect();
        Self::new(lattice, coeffs)
    }

    /// `K = E*_1 + ... + E*_n`; `k_i` is the sum of the entries of `X_i`.
    pub fn canonical(lattice: &Arc<Lattice>) -> Self {
        Self::from_star(lattice, vec![BigInt::from(1); lattice.n()]).expect("length n")
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `d* = dPᵀ`.
    pub fn to_star(&self) -> Vec<BigInt> {
        let p = &self.lattice.prox;
        (1..=p.n())
            .map(|j| {
                self.coeffs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| p.entry(j, i + 1) != 0)
                    .map(|(i, d)| d * p.entry(j, i + 1))
                    .sum()
            })
            .collect()
    }

    /// `d̂ = dPᵀP`; `d̂_i = -E_i·D`.
    pub fn to_hat(&self) -> Vec<BigInt> {
        hat_of(&self.lattice.gram, &self.coeffs)
    }

    pub fn intersect(&self, other: &Divisor) -> Result<BigInt, LatticeError> {
        if !same_lattice(&self.lattice, &other.lattice) {
            return Err(LatticeError::ContextMismatch);
        }
        let (a, b) = (self.to_star(), other.to_star());
        Ok(-a.iter().zip(&b).map(|(x, y)| x * y).sum::<BigInt>())
    }

    pub fn add(&self, other: &Divisor) -> Result<Divisor, LatticeError> {
        if !same_lattice(&self.lattice, &other.lattice) {
            return Err(LatticeError::ContextMismatch);
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Divisor { coeffs, lattice: Arc::clone(&self.lattice) })
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Divisor) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum with the zero divisor.
    pub fn positive_part(&self) -> Divisor {
        let coeffs = self.coeffs.iter().map(|c| c.max(&BigInt::zero()).clone()).collect();
        Divisor { coeffs, lattice: Arc::clone(&self.lattice) }
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// `E_i·D ≤ 0` for every `i`.
    pub fn is_antinef(&self) -> bool {
        self.to_hat().iter().all(|h| !h.is_negative())
    }

    /// Minimal antinef divisor `D~ ≥ D`, by Laufer's algorithm: while some
    /// `E_ν·D > 0`, add `E_ν` for the smallest such `ν`.
    pub fn antinef_closure(&self) -> Result<Divisor, LatticeError> {
        self.antinef_closure_with(|candidates| candidates[0])
    }

    /// Laufer's algorithm with the step chosen by `select` among the indices
    /// `ν` (1-based, ascending) with `E_ν·D > 0`.
    pub fn antinef_closure_with(&self, mut select: impl FnMut(&[usize]) -> usize) -> Result<Divisor, LatticeError> {
        let gram = &self.lattice.gram;
        let mut d = self.coeffs.clone();
        let mut hat = self.to_hat();
        for _ in 0..STEP_BUDGET {
            let candidates: Vec<usize> = (1..=d.len()).filter(|&v| hat[v - 1].is_negative()).collect();
            if candidates.is_empty() {
                return Divisor::new(&self.lattice, d);
            }
            let v = select(&candidates);
            if !candidates.contains(&v) {
                return Err(LatticeError::InternalError(format!("selected E_{v} is not a valid step")));
            }
            d[v - 1] += 1;
            for (h, &g) in hat.iter_mut().zip(&gram[v - 1]) {
                *h += g;
            }
        }
        Err(LatticeError::InternalError("Laufer step budget exhausted".into()))
    }

    /// Same result as [`Divisor::antinef_closure`], adding several copies of
    /// `E_ν` per step.
    pub fn antinef_closure_fast(&self) -> Result<Divisor, LatticeError> {
        let mut d = self.coeffs.clone();
        close_batched(&self.lattice.gram, &mut d)?;
        Divisor::new(&self.lattice, d)
    }

    /// The complete ideal `∏ 𝔭_i^{d̂_i}` whose valuation vector is `d`.
    pub fn ideal_of_divisor(&self) -> Result<CompleteIdealVector, LatticeError> {
        let hat = self.to_hat();
        if let Some(i) = hat.iter().position(|h| h.is_negative()) {
            return Err(LatticeError::NotAntinef { index: i + 1, value: -hat[i].clone() });
        }
        Ok(CompleteIdealVector { valuation: self.coeffs.clone(), factorization: hat })
    }
}

/// A complete ideal with invertible transform on the resolution, by its
/// valuations `v_i` and its exponents in the factorization into `𝔭_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompleteIdealVector {
    pub valuation: Vec<BigInt>,
    pub factorization: Vec<BigInt>,
}

impl CompleteIdealVector {
    pub fn is_unit(&self) -> bool {
        self.valuation.iter().all(Zero::is_zero)
    }

    /// Ideal containment `self ⊇ other`.
    pub fn contains(&self, other: &CompleteIdealVector) -> bool {
        self.valuation.iter().zip(&other.valuation).all(|(a, b)| a <= b)
    }
}
