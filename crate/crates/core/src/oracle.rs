//! Multiplier ideals `J(𝔞^c)` computed from their definition, and jumping
//! numbers and thresholds found by scanning, independent of the closed form.
//!
//! With `D = Ê_n` (coefficients `X_i·I`) and `K` the canonical divisor,
//! `J(𝔞^c)` is the complete ideal of the antinef closure of `⌊cD⌋ - K`.
//! `⌊cD⌋` only changes at `c = k/(X_i·I)`, so scanning those values finds
//! every jump.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::divisor::{close_batched, hat_of, Coeff, CompleteIdealVector, Divisor, Lattice, LatticeError};
use crate::proximity::{SimpleIdeal, Span};
use crate::rational::{floor_times, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("exponent {0} is negative")]
    NegativeExponent(Rational),
    #[error("bound {0} is not positive")]
    NonpositiveBound(Rational),
    #[error("expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("entry {index} is negative")]
    NegativeEntry { index: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierIdeal {
    pub exponent: Rational,
    pub ideal: CompleteIdealVector,
}

/// A jumping number with the multiplier ideals on either side of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleJump {
    pub value: Rational,
    /// `J(𝔞^c)` for `c` just below `value`.
    pub before: CompleteIdealVector,
    /// `J(𝔞^value)`.
    pub after: CompleteIdealVector,
}

struct Setup {
    lattice: Arc<Lattice>,
    // X_i·I and Σ X_i.
    d: Vec<BigInt>,
    k: Vec<BigInt>,
}

impl Setup {
    fn new(ideal: &SimpleIdeal) -> Self {
        let lattice = Lattice::new(ideal.proximity());
        let n = ideal.n();
        let d = (1..=n).map(|i| lattice.pairing(i, n).clone()).collect();
        let k = Divisor::canonical(&lattice).coeffs().to_vec();
        Setup { lattice, d, k }
    }

    fn ideal_vector(&self, valuation: Vec<BigInt>) -> CompleteIdealVector {
        let factorization = hat_of(self.lattice.gram(), &valuation);
        CompleteIdealVector { valuation, factorization }
    }

    /// Whether scanning up to `bound` can run on `i128`.
    fn fits_i128(&self, bound: &Rational) -> bool {
        let limit = BigInt::one() << 40;
        let small = |v: &BigInt| v.abs() < limit;
        self.d.iter().all(small)
            && self.k.iter().all(small)
            && small(bound.numer())
            && small(bound.denom())
            && floor_times(bound, &BigInt::one()) < (BigInt::one() << 20)
    }
}

/// Integer kernel of the scan, generic over the coefficient type.
struct Scan<T> {
    gram: Vec<Vec<i64>>,
    d: Vec<T>,
    k: Vec<T>,
}

fn narrow<T: TryFrom<BigInt>>(v: &BigInt) -> T {
    T::try_from(v.clone()).ok().expect("range checked before narrowing")
}

impl<T: Coeff + Ord + TryFrom<BigInt>> Scan<T>
where
    BigInt: From<T>,
{
    fn new(setup: &Setup) -> Self {
        Scan {
            gram: setup.lattice.gram().to_vec(),
            d: setup.d.iter().map(narrow).collect(),
            k: setup.k.iter().map(narrow).collect(),
        }
    }

    /// Grid points `k/den ≤ bound`, sorted and without repeats.
    fn candidates(&self, bound: &Rational) -> Vec<(T, T)> {
        let (bn, bd): (T, T) = (narrow(bound.numer()), narrow(bound.denom()));
        let mut dens = self.d.clone();
        dens.sort();
        dens.dedup();
        let mut out = Vec::new();
        for den in dens {
            let kmax = (bn.clone() * den.clone()).div_floor(&bd);
            let mut k = T::one();
            while k <= kmax {
                out.push((k.clone(), den.clone()));
                k = k + T::one();
            }
        }
        out.sort_by(|(a, b), (c, e)| (a.clone() * e.clone()).cmp(&(c.clone() * b.clone())));
        out.dedup_by(|x, y| x.0.clone() * y.1.clone() == y.0.clone() * x.1.clone());
        out
    }

    /// Closure of `⌊(k/den) D⌋ - K`, warm-started from a closure at a smaller
    /// exponent: both the start and the answer lie above that closure.
    fn closure(&self, k: &T, den: &T, below: &[T]) -> Result<Vec<T>, LatticeError> {
        let mut v: Vec<T> = self
            .d
            .iter()
            .zip(&self.k)
            .zip(below)
            .map(|((d, kk), b)| {
                let s = (k.clone() * d.clone()).div_floor(den) - kk.clone();
                if &s < b {
                    b.clone()
                } else {
                    s
                }
            })
            .collect();
        close_batched(&self.gram, &mut v)?;
        Ok(v)
    }

    fn to_big(v: &[T]) -> Vec<BigInt> {
        v.iter().cloned().map(BigInt::from).collect()
    }

    fn jumps(&self, setup: &Setup, bound: &Rational) -> Result<Vec<OracleJump>, LatticeError> {
        let mut prev = vec![T::zero(); self.d.len()];
        let mut out = Vec::new();
        for (k, den) in self.candidates(bound) {
            let cur = self.closure(&k, &den, &prev)?;
            if cur != prev {
                out.push(OracleJump {
                    value: Rational::new(k.into(), den.into()),
                    before: setup.ideal_vector(Self::to_big(&prev)),
                    after: setup.ideal_vector(Self::to_big(&cur)),
                });
            }
            prev = cur;
        }
        Ok(out)
    }

    /// Smallest grid point `c ≤ bound` whose closure is not below `v`.
    fn first_escape(&self, v: &[T], bound: &Rational) -> Result<Option<Rational>, LatticeError> {
        let mut prev = vec![T::zero(); self.d.len()];
        for (k, den) in self.candidates(bound) {
            let cur = self.closure(&k, &den, &prev)?;
            if cur.iter().zip(v).any(|(a, b)| a > b) {
                return Ok(Some(Rational::new(k.into(), den.into())));
            }
            prev = cur;
        }
        Ok(None)
    }
}

pub fn multiplier_ideal(ideal: &SimpleIdeal, c: &Rational) -> Result<MultiplierIdeal, OracleError> {
    if c.is_negative() {
        return Err(OracleError::NegativeExponent(c.clone()));
    }
    let setup = Setup::new(ideal);
    let mut v: Vec<BigInt> = setup.d.iter().zip(&setup.k).map(|(d, k)| floor_times(c, d) - k).collect();
    close_batched(setup.lattice.gram(), &mut v)?;
    Ok(MultiplierIdeal { exponent: c.clone(), ideal: setup.ideal_vector(v) })
}

/// Every jumping number in `(0, bound]` with the ideals around it.
pub fn oracle_jumps(ideal: &SimpleIdeal, bound: &Rational) -> Result<Vec<OracleJump>, OracleError> {
    if !bound.is_positive() {
        return Err(OracleError::NonpositiveBound(bound.clone()));
    }
    let setup = Setup::new(ideal);
    let out = if setup.fits_i128(bound) {
        Scan::<i128>::new(&setup).jumps(&setup, bound)
    } else {
        Scan::<BigInt>::new(&setup).jumps(&setup, bound)
    };
    Ok(out?)
}

pub fn oracle_jumping_numbers(ideal: &SimpleIdeal, bound: &Rational) -> Result<Vec<Rational>, OracleError> {
    Ok(oracle_jumps(ideal, bound)?.into_iter().map(|j| j.value).collect())
}

/// `R̃ = R P^{-1} = Σ r_i X_i`.
fn r_tilde(ideal: &SimpleIdeal, r: &[BigInt]) -> Result<Vec<BigInt>, OracleError> {
    let n = ideal.n();
    if r.len() != n {
        return Err(OracleError::DimensionMismatch { expected: n, got: r.len() });
    }
    if let Some(i) = r.iter().position(|x| x.is_negative()) {
        return Err(OracleError::NegativeEntry { index: i + 1 });
    }
    let mut t = vec![BigInt::zero(); n];
    for (i, ri) in r.iter().enumerate() {
        if !ri.is_zero() {
            for (tj, x) in t.iter_mut().zip(ideal.proximity().inverse_row(i + 1)) {
                *tj += ri * x;
            }
        }
    }
    Ok(t)
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `R[X_i] = (R̃·X_i + ΣX_i + 1) / (X_i·I)`.
fn r_value(ideal: &SimpleIdeal, rt: &[BigInt], i: usize) -> Rational {
    let xi = ideal.proximity().inverse_row(i);
    let sum: BigInt = xi.iter().sum();
    let den = ideal.dot(i, ideal.n(), Span::All).expect("index in range");
    Rational::new(dot(rt, xi) + sum + 1, den)
}

fn min_r_value(ideal: &SimpleIdeal, r: &[BigInt], over: impl Iterator<Item = usize>) -> Result<Rational, OracleError> {
    let rt = r_tilde(ideal, r)?;
    Ok(over.map(|i| r_value(ideal, &rt, i)).min().expect("n ≥ 1"))
}

/// `c_R` as the minimum of `R[X_i]` over all points.
pub fn c_r_direct(ideal: &SimpleIdeal, r: &[BigInt]) -> Result<Rational, OracleError> {
    min_r_value(ideal, r, 1..=ideal.n())
}

/// `c_R` as the minimum of `R[X_γ]` over `γ ∈ Γ* ∪ {n}`.
pub fn c_r_reduced(ideal: &SimpleIdeal, r: &[BigInt]) -> Result<Rational, OracleError> {
    min_r_value(ideal, r, ideal.structure().gamma_bar().into_iter())
}

/// `c_R` as the least `c` with `J(𝔞^c) ⊉ 𝔟_R = ∏ 𝔭_i^{r_i}`, by scanning.
pub fn c_r_definitional(ideal: &SimpleIdeal, r: &[BigInt]) -> Result<Rational, OracleError> {
    let rt = r_tilde(ideal, r)?;
    let n = ideal.n();
    let v: Vec<BigInt> = (1..=n).map(|j| dot(&rt, ideal.proximity().inverse_row(j))).collect();
    let setup = Setup::new(ideal);
    // At this exponent ⌊cD⌋ - K already exceeds v in coordinate n.
    let bound = Rational::new(&v[n - 1] + &setup.k[n - 1] + 1, setup.d[n - 1].clone());
    let small = setup.fits_i128(&bound) && v.iter().all(|x| x.bits() < 60);
    let found = if small {
        let vv: Vec<i128> = v.iter().map(narrow).collect();
        Scan::<i128>::new(&setup).first_escape(&vv, &bound)?
    } else {
        Scan::<BigInt>::new(&setup).first_escape(&v, &bound)?
    };
    found.ok_or_else(|| OracleError::Lattice(LatticeError::InternalError("scan found no threshold".into())))
}
