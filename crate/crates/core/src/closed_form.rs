//! The jumping numbers of a simple complete ideal in closed form.
//!
//! With `a_ν = a_{γ_ν}` and `b_ν = I·I^{≤γ_{ν+1}} / a_ν` for `0 ≤ ν ≤ g*`,
//! the jumping numbers are `H_0 ∪ ... ∪ H_{g*}` where, for `ν < g*`,
//!
//! ```text
//! H_ν = { (s+1)/a_ν + (t+1)/b_ν + m/a_{ν+1} : (s+1)/a_ν + (t+1)/b_ν < 1/a_{ν+1} }
//! ```
//!
//! and `H_{g*} = { (s+1)/a_{g*} + (t+1)/b_{g*} }`, over `s, t, m ≥ 0`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::proximity::{point_basis_from_puiseux, PointBasis, SimpleIdeal, Span};
use crate::rational::{as_positive_integer, recip, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JumpError {
    #[error("bound {0} is not positive")]
    NonpositiveBound(Rational),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("not an integer: {0}")]
    NotInteger(String),
    #[error("malformed jump set: {0}")]
    MalformedJumpSet(String),
    #[error("invalid generator pairs: {0}")]
    InvalidDescription(String),
}

/// Generator pairs `(a_ν, b_ν)` for `0 ≤ ν ≤ g*` and caps `a_{ν+1}` for
/// `ν < g*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpingSetDescription {
    pairs: Vec<(BigInt, BigInt)>,
    caps: Vec<BigInt>,
}

/// `value = (s+1)/a_ν + (t+1)/b_ν + m/a_{ν+1}`, with `m` absent in the last block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JumpDecomposition {
    pub block: usize,
    pub s: BigInt,
    pub t: BigInt,
    pub m: Option<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jump {
    pub value: Rational,
    pub decompositions: Vec<JumpDecomposition>,
}

impl JumpingSetDescription {
    /// Checks `a_ν ≤ b_ν`, `gcd(a_ν, b_ν) = a_{ν+1}` (with `a_{g*+1} = 1`),
    /// and that the caps are the next `a`s.
    pub fn new(pairs: Vec<(BigInt, BigInt)>, caps: Vec<BigInt>) -> Result<Self, JumpError> {
        let bad = |m: String| Err(JumpError::InvalidDescription(m));
        if pairs.is_empty() {
            return bad("no pairs".into());
        }
        if caps.len() + 1 != pairs.len() {
            return bad(format!("{} pairs need {} caps, got {}", pairs.len(), pairs.len() - 1, caps.len()));
        }
        for (nu, (a, b)) in pairs.iter().enumerate() {
            if !a.is_positive() || a > b {
                return bad(format!("pair {nu} = ({a}, {b}) needs 0 < a ≤ b"));
            }
            let next = caps.get(nu).cloned().unwrap_or_else(BigInt::one);
            if a.gcd(b) != next {
                return bad(format!("gcd({a}, {b}) != {next}"));
            }
            if nu + 1 < pairs.len() && (pairs[nu + 1].0 != next || &next >= a) {
                return bad(format!("cap {next} after pair {nu} does not match the next pair"));
            }
        }
        Ok(JumpingSetDescription { pairs, caps })
    }

    pub fn pairs(&self) -> &[(BigInt, BigInt)] {
        &self.pairs
    }

    pub fn caps(&self) -> &[BigInt] {
        &self.caps
    }

    /// `g*`, the index of the last (uncapped) block.
    pub fn g_star(&self) -> usize {
        self.pairs.len() - 1
    }

    /// `ξ′_ν = 1/a_ν + 1/b_ν`, the least element of `H_ν`.
    pub fn xi_prime(&self, nu: usize) -> Result<Rational, JumpError> {
        let (a, b) = self
            .pairs
            .get(nu)
            .ok_or_else(|| JumpError::IndexOutOfRange(format!("ν = {nu} with g* = {}", self.g_star())))?;
        Ok(recip(a) + recip(b))
    }

    /// The log canonical threshold `ξ′_0`.
    pub fn lct(&self) -> Rational {
        self.xi_prime(0).expect("at least one pair")
    }

    pub fn xi_primes(&self) -> Vec<Rational> {
        (0..self.pairs.len()).map(|nu| self.xi_prime(nu).unwrap()).collect()
    }

    /// All jumping numbers in `(0, bound]` with every decomposition.
    pub fn enumerate(&self, bound: &Rational) -> Result<Vec<Jump>, JumpError> {
        if !bound.is_positive() {
            return Err(JumpError::NonpositiveBound(bound.clone()));
        }
        let (p, q) = (bound.numer(), bound.denom());
        let mut found: BTreeMap<Rational, Vec<JumpDecomposition>> = BTreeMap::new();
        for (nu, (a, b)) in self.pairs.iter().enumerate() {
            let l = a * b;
            let limit = p * &l;
            let within = |num: &BigInt| num * q <= limit;
            let mut s = BigInt::zero();
            match self.caps.get(nu) {
                Some(cap) => {
                    let step = &l / cap;
                    while (&s + 1u32) * cap < *a {
                        let mut t = BigInt::zero();
                        loop {
                            let base = (&s + 1u32) * b + (&t + 1u32) * a;
                            if &base * cap >= l || !within(&base) {
                                break;
                            }
                            let mut m = BigInt::zero();
                            let mut num = base.clone();
                            while within(&num) {
                                found.entry(Rational::new(num.clone(), l.clone())).or_default().push(
                                    JumpDecomposition { block: nu, s: s.clone(), t: t.clone(), m: Some(m.clone()) },
                                );
                                m += 1u32;
                                num += &step;
                            }
                            t += 1u32;
                        }
                        s += 1u32;
                    }
                }
                None => loop {
                    if !within(&((&s + 1u32) * b + a)) {
                        break;
                    }
                    let mut t = BigInt::zero();
                    loop {
                        let num = (&s + 1u32) * b + (&t + 1u32) * a;
                        if !within(&num) {
                            break;
                        }
                        found.entry(Rational::new(num, l.clone())).or_default().push(JumpDecomposition {
                            block: nu,
                            s: s.clone(),
                            t: t.clone(),
                            m: None,
                        });
                        t += 1u32;
                    }
                    s += 1u32;
                },
            }
        }
        Ok(found
            .into_iter()
            .map(|(value, mut decompositions)| {
                decompositions.sort();
                Jump { value, decompositions }
            })
            .collect())
    }

    pub fn enumerate_values(&self, bound: &Rational) -> Result<Vec<Rational>, JumpError> {
        Ok(self.enumerate(bound)?.into_iter().map(|j| j.value).collect())
    }

    /// A decomposition of `c` if `c` is a jumping number.
    pub fn is_jumping_number(&self, c: &Rational) -> Option<JumpDecomposition> {
        if !c.is_positive() {
            return None;
        }
        for (nu, (a, b)) in self.pairs.iter().enumerate() {
            let l = a * b;
            match self.caps.get(nu) {
                Some(cap) => {
                    let mut s = BigInt::zero();
                    while (&s + 1u32) * cap < *a {
                        let mut t = BigInt::zero();
                        loop {
                            let base = (&s + 1u32) * b + (&t + 1u32) * a;
                            if &base * cap >= l {
                                break;
                            }
                            let rest = c - Rational::new(base, l.clone());
                            if rest.is_negative() {
                                break;
                            }
                            let m = rest * Rational::from_integer(cap.clone());
                            if m.is_integer() {
                                return Some(JumpDecomposition { block: nu, s, t, m: Some(m.to_integer()) });
                            }
                            t += 1u32;
                        }
                        s += 1u32;
                    }
                }
                None => {
                    let num = c * Rational::from_integer(l.clone());
                    if num.is_integer() {
                        if let Some((u, v)) = positive_solution(b, a, num.numer()) {
                            return Some(JumpDecomposition { block: nu, s: u - 1u32, t: v - 1u32, m: None });
                        }
                    }
                }
            }
        }
        None
    }

    /// Rebuilds the pairs from `ξ′_0, ..., ξ′_{g*}` alone. With
    /// `a_{γ_{g*+1}} = 1` known, `a_{γ_{ν+1}} ξ′_ν = (u+v)/(uv)` in lowest terms
    /// where `u = a_ν / a_{ν+1}` and `v = b_ν / a_{ν+1}` are the roots of
    /// `ω² - (u+v)ω + uv`.
    pub fn from_xi_primes(xis: &[Rational]) -> Result<Self, JumpError> {
        let bad = |m: String| JumpError::InvalidDescription(m);
        let mut low = BigInt::one();
        let mut pairs = Vec::with_capacity(xis.len());
        let mut caps = Vec::new();
        for (k, xi) in xis.iter().enumerate().rev() {
            let scaled = xi * Rational::from_integer(low.clone());
            let (sum, prod) = (scaled.numer(), scaled.denom());
            let disc = sum * sum - 4u32 * prod;
            if disc.is_negative() || &disc.sqrt() * &disc.sqrt() != disc {
                return Err(bad(format!("ξ′_{k} = {xi} gives no integer roots")));
            }
            let root = disc.sqrt();
            let (u, v) = ((sum - &root) / 2u32, (sum + &root) / 2u32);
            if !u.is_positive() || (sum - &root).is_odd() {
                return Err(bad(format!("ξ′_{k} = {xi} gives no positive integer roots")));
            }
            if k + 1 < xis.len() {
                caps.push(low.clone());
            }
            let a = &low * u;
            pairs.push((a.clone(), &low * v));
            low = a;
        }
        pairs.reverse();
        caps.reverse();
        Self::new(pairs, caps)
    }
}

/// `u, v ≥ 1` with `u·a + v·b = n`, the one with the smallest `u`.
pub fn positive_solution(a: &BigInt, b: &BigInt, n: &BigInt) -> Option<(BigInt, BigInt)> {
    let ext = a.extended_gcd(b);
    let g = ext.gcd;
    if !n.is_multiple_of(&g) {
        return None;
    }
    let (a1, b1, n1) = (a / &g, b / &g, n / &g);
    // ext.x * a1 ≡ 1 (mod b1)
    let mut u = (&n1 * &ext.x).mod_floor(&b1);
    if u.is_zero() {
        u = b1.clone();
    }
    let rest = &n1 - &u * &a1;
    if rest.is_positive() {
        let v = rest / &b1;
        if v.is_positive() {
            return Some((u, v));
        }
    }
    None
}

/// Generator pairs and caps of a simple ideal.
pub fn generators(ideal: &SimpleIdeal) -> JumpingSetDescription {
    let gs = ideal.structure();
    let n = ideal.n();
    let gstar = gs.g_star();
    let mut pairs = Vec::with_capacity(gstar + 1);
    for nu in 0..=gstar {
        let a = ideal.basis().a(gs.gamma(nu)).clone();
        let top = ideal.dot(n, n, Span::UpTo(gs.gamma(nu + 1))).expect("indices in range");
        let (b, r) = top.div_rem(&a);
        debug_assert!(r.is_zero(), "a_γ divides I·I^≤γ'");
        pairs.push((a, b));
    }
    let caps = (1..=gstar).map(|nu| ideal.basis().a(gs.gamma(nu)).clone()).collect();
    JumpingSetDescription::new(pairs, caps).expect("generator pairs of a simple ideal are valid")
}

/// `(β̄_0, ..., β̄_{g+1})` with `β̄_0 = a_1` and `β̄_ν = I·X_{τ_ν}`.
pub fn zariski_exponents(ideal: &SimpleIdeal) -> Vec<BigInt> {
    let gs = ideal.structure();
    let n = ideal.n();
    let mut out = vec![ideal.basis().a(1).clone()];
    out.extend((1..=gs.g() + 1).map(|nu| ideal.dot(n, gs.tau(nu), Span::All).unwrap()));
    out
}

/// `e(𝔞) = I·I`, which is `1/(ξ - 1)` for the least jump `ξ > 1`.
pub fn hilbert_samuel(ideal: &SimpleIdeal) -> BigInt {
    let e = ideal.basis().self_intersection();
    debug_assert_eq!(
        generators(ideal)
            .enumerate_values(&(Rational::one() + recip(&e)))
            .ok()
            .and_then(|v| v.into_iter().find(|x| x > &Rational::one())),
        Some(Rational::one() + recip(&e))
    );
    e
}

/// The order `a_1` from the three smallest jumping numbers.
pub fn order_from_three_smallest(xi: &Rational, psi: &Rational, zeta: &Rational) -> Result<BigInt, JumpError> {
    let fail = |m: String| JumpError::NotInteger(m);
    if !(xi.is_positive() && xi < psi && psi < zeta) {
        return Err(fail(format!("need 0 < ξ < ψ < ζ, got {xi}, {psi}, {zeta}")));
    }
    let six = Rational::from_integer(6.into());
    let ten = Rational::from_integer(10.into());
    let five = Rational::from_integer(5.into());
    let two = Rational::from_integer(2.into());
    let ord = if &six * xi == &ten * psi - &five * zeta {
        five / (Rational::from_integer(3.into()) * xi)
    } else {
        let d = &two * xi - psi;
        if !d.is_positive() {
            return Err(fail(format!("2ξ - ψ = {d} is not positive")));
        }
        d.recip()
    };
    let ord = as_positive_integer(&ord).ok_or_else(|| fail(format!("order {ord} is not a positive integer")))?;
    let one = Rational::one();
    if (xi > &one) != ord.is_one() {
        return Err(fail(format!("order {ord} disagrees with ξ = {xi} on either side of 1")));
    }
    if xi < &one && zeta > &one && ord != BigInt::from(2) {
        return Err(fail(format!("ξ < 1 < ζ forces order 2, got {ord}")));
    }
    Ok(ord)
}

fn malformed(m: impl Into<String>) -> JumpError {
    JumpError::MalformedJumpSet(m.into())
}

fn integer_recip(x: &Rational, what: &str) -> Result<BigInt, JumpError> {
    if !x.is_positive() {
        return Err(malformed(format!("{what} = 1/({x}) is not positive")));
    }
    as_positive_integer(&x.recip()).ok_or_else(|| malformed(format!("{what} = 1/({x}) is not an integer")))
}

/// The multiplicities `a_1, ..., a_{γ_g}` from the jumping numbers in `(0, 1)`.
pub fn multiplicities_from_jumps_below_one(below: &[Rational]) -> Result<PointBasis, JumpError> {
    check_sorted(below)?;
    if let Some(x) = below.iter().find(|x| !x.is_positive() || x >= &&Rational::one()) {
        return Err(malformed(format!("{x} is not in (0, 1)")));
    }
    let fixed = |a: &[i64], expect: &[(i64, i64)]| -> Result<PointBasis, JumpError> {
        let want: Vec<Rational> = expect.iter().map(|&(p, q)| Rational::new(p.into(), q.into())).collect();
        if below != want.as_slice() {
            return Err(malformed(format!("a set of {} jumps below 1 must be {}", want.len(), show(&want))));
        }
        Ok(PointBasis::from_ints(a).unwrap())
    };
    let pairs = match below.len() {
        0 => return Ok(PointBasis::from_ints(&[1]).unwrap()),
        1 => return fixed(&[2, 1, 1], &[(5, 6)]),
        2 => return fixed(&[2, 2, 1, 1], &[(7, 10), (9, 10)]),
        _ => {
            let a0 = order_from_three_smallest(&below[0], &below[1], &below[2])
                .map_err(|e| malformed(format!("order of the ideal: {e}")))?;
            let b0 = integer_recip(&(&below[0] - recip(&a0)), "b_0")?;
            let mut pairs = vec![(a0, b0)];
            loop {
                let (a, b) = pairs.last().unwrap();
                let next = a.gcd(b);
                if next.is_one() {
                    break pairs;
                }
                if &next >= a {
                    return Err(malformed(format!("a_γ = {a} divides b = {b}")));
                }
                let k = pairs.len();
                let lower = recip(&next);
                let xi = below
                    .iter()
                    .find(|x| *x >= &lower)
                    .ok_or_else(|| malformed(format!("no jump ≥ 1/{next} below 1 for ξ′_{k}")))?;
                let b = integer_recip(&(xi - lower), &format!("b_{k}"))?;
                pairs.push((next, b));
            }
        }
    };
    prefix_from_pairs(&pairs)
}

/// The multiplicities up to the last terminal satellite from the generator
/// pairs `(a_0, b_0), ..., (a_{g-1}, b_{g-1})` of the blocks below 1.
pub(crate) fn prefix_from_pairs(pairs: &[(BigInt, BigInt)]) -> Result<PointBasis, JumpError> {
    // a_ν b_ν - a_{ν-1} b_{ν-1} = a_ν ρ_ν, with a_0 b_0 = a_0² + a_0 ρ_0.
    let mut beta = Vec::with_capacity(pairs.len());
    let mut prev = BigInt::zero();
    for (k, (a, b)) in pairs.iter().enumerate() {
        let cur = a * b;
        let delta = if k == 0 { &cur - a * a } else { &cur - &prev };
        if !delta.is_positive() || !delta.is_multiple_of(a) {
            return Err(malformed(format!("ρ_{k} = ({delta})/{a} is not a positive integer")));
        }
        beta.push(Rational::one() + Rational::new(delta / a, a.clone()));
        prev = cur;
    }
    point_basis_from_puiseux(&beta).map_err(|e| malformed(format!("multiplicities: {e}")))
}

fn check_sorted(jumps: &[Rational]) -> Result<(), JumpError> {
    if let Some(w) = jumps.windows(2).find(|w| w[0] >= w[1]) {
        return Err(malformed(format!("not strictly increasing at {} then {}", w[0], w[1])));
    }
    Ok(())
}

fn show(xs: &[Rational]) -> String {
    let v: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

/// The point basis whose jumping numbers in `(0, 2]` are exactly `jumps`.
pub fn invert_jumping_numbers(jumps: &[Rational]) -> Result<PointBasis, JumpError> {
    check_sorted(jumps)?;
    let one = Rational::one();
    let two = Rational::from_integer(2.into());
    if jumps.first().is_some_and(|x| !x.is_positive()) || jumps.last() != Some(&two) {
        return Err(malformed("jumps must lie in (0, 2] and include 2"));
    }
    let below: Vec<Rational> = jumps.iter().filter(|x| *x < &one).cloned().collect();
    let xi1 = jumps.iter().find(|x| *x > &one).expect("2 is present");
    let total = integer_recip(&(xi1 - &one), "I·I")?;
    let basis = if below.is_empty() {
        let n = total.to_usize().ok_or_else(|| malformed(format!("n = {total} is too large")))?;
        PointBasis::from_ints(&vec![1; n]).unwrap()
    } else {
        let prefix = multiplicities_from_jumps_below_one(&below)?;
        let xi2 = below.last().unwrap();
        let head = integer_recip(&(&one - xi2), "(I^≤γ_g)²")?;
        if head != prefix.self_intersection() {
            return Err(malformed(format!(
                "largest jump below 1 is {xi2} but the multiplicities {prefix} give 1 - 1/{}",
                prefix.self_intersection()
            )));
        }
        let tail = (&total - &head)
            .to_usize()
            .ok_or_else(|| malformed(format!("tail length {} - {head} is not a count", total)))?;
        let mut a = prefix.multiplicities().to_vec();
        a.extend(std::iter::repeat_n(BigInt::one(), tail));
        PointBasis::new(a).map_err(|e| malformed(e.to_string()))?
    };
    let again = generators(&SimpleIdeal::new(basis.clone())).enumerate_values(&two)?;
    if again != jumps {
        return Err(malformed(format!("the jumps of the reconstruction {basis} differ from the input")));
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn desc(a: &[i64]) -> JumpingSetDescription {
        generators(&SimpleIdeal::from_ints(a).unwrap())
    }

    fn pairs(d: &JumpingSetDescription) -> Vec<(i64, i64)> {
        d.pairs().iter().map(|(a, b)| (a.to_i64().unwrap(), b.to_i64().unwrap())).collect()
    }

    fn caps(d: &JumpingSetDescription) -> Vec<i64> {
        d.caps().iter().map(|a| a.to_i64().unwrap()).collect()
    }

    #[test]
    fn generator_pairs() {
        let d = desc(&[6, 3, 3, 3, 1, 1, 1, 1]);
        assert_eq!(pairs(&d), vec![(6, 9), (3, 22), (1, 67)]);
        assert_eq!(caps(&d), vec![3, 1]);
        let d = desc(&[1]);
        assert_eq!((pairs(&d), caps(&d)), (vec![(1, 1)], vec![]));
        assert_eq!(pairs(&desc(&[2, 1, 1])), vec![(2, 3)]);
    }

    #[test]
    fn enumeration_examples() {
        let v = desc(&[2, 1, 1]).enumerate_values(&ratio(4, 3)).unwrap();
        assert_eq!(v, vec![ratio(5, 6), ratio(7, 6), ratio(4, 3)]);
        let v = desc(&[3, 1, 1, 1]).enumerate_values(&int(1)).unwrap();
        assert_eq!(v, vec![ratio(7, 12), ratio(10, 12), ratio(11, 12)]);
        let v = desc(&[6, 3, 3, 3, 1, 1, 1, 1]).enumerate_values(&ratio(28, 66)).unwrap();
        assert_eq!(v, vec![ratio(5, 18), ratio(25, 66), ratio(28, 66)]);
        assert_eq!(desc(&[1]).enumerate_values(&int(3)).unwrap(), vec![int(2), int(3)]);
        assert!(desc(&[1]).enumerate(&int(0)).is_err());
    }

    #[test]
    fn decompositions_span_blocks() {
        let d = desc(&[6, 3, 3, 3, 1, 1, 1, 1]);
        let j = d.enumerate(&int(2)).unwrap();
        let two = j.iter().find(|j| j.value == int(2)).unwrap();
        assert_eq!(two.decompositions, vec![JumpDecomposition { block: 2, s: 0.into(), t: 66.into(), m: None }]);
        let j = desc(&[1]).enumerate(&int(3)).unwrap();
        assert_eq!(j[1].decompositions.len(), 2);
        let j = desc(&[6, 3, 3, 3, 1, 1, 1, 1]).enumerate(&ratio(1, 1)).unwrap();
        let blocks: std::collections::BTreeSet<usize> =
            j.iter().flat_map(|j| j.decompositions.iter().map(|d| d.block)).collect();
        assert_eq!(blocks.into_iter().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn membership() {
        let d = desc(&[2, 1, 1]);
        assert_eq!(d.is_jumping_number(&int(1)), None);
        assert_eq!(
            d.is_jumping_number(&ratio(5, 6)),
            Some(JumpDecomposition { block: 0, s: 0.into(), t: 0.into(), m: None })
        );
        let d = desc(&[6, 3, 3, 3, 1, 1, 1, 1]);
        for a in [6, 3, 1] {
            assert_eq!(d.is_jumping_number(&ratio(1, a)), None);
        }
        assert_eq!(d.is_jumping_number(&ratio(5, 18)).unwrap().block, 0);
        assert_eq!(d.is_jumping_number(&ratio(25, 66)).unwrap().block, 1);
    }

    #[test]
    fn xi_primes_and_invariants() {
        let d = desc(&[6, 3, 3, 3, 1, 1, 1, 1]);
        assert_eq!(d.xi_primes(), vec![ratio(5, 18), ratio(25, 66), ratio(68, 67)]);
        assert_eq!(desc(&[1]).lct(), int(2));
        assert_eq!(desc(&[2, 1, 1]).lct(), ratio(5, 6));
        assert!(d.xi_prime(3).is_err());
        assert_eq!(JumpingSetDescription::from_xi_primes(&d.xi_primes()).unwrap(), d);
    }

    #[test]
    fn zariski_and_multiplicity() {
        let z = |a: &[i64]| zariski_exponents(&SimpleIdeal::from_ints(a).unwrap());
        let ints = |v: Vec<BigInt>| v.into_iter().map(|x| x.to_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(ints(z(&[6, 3, 3, 3, 1, 1, 1, 1])), vec![6, 9, 22, 67]);
        assert_eq!(ints(z(&[1])), vec![1, 1]);
        assert_eq!(ints(z(&[2, 1, 1])), vec![2, 3, 6]);
        let e = |a: &[i64]| hilbert_samuel(&SimpleIdeal::from_ints(a).unwrap());
        assert_eq!(e(&[6, 3, 3, 3, 1, 1, 1, 1]), 67.into());
        assert_eq!(e(&[1]), 1.into());
        assert_eq!(e(&[2, 1, 1]), 6.into());
    }

    #[test]
    fn order_formula() {
        assert_eq!(order_from_three_smallest(&ratio(5, 6), &ratio(7, 6), &ratio(8, 6)).unwrap(), 2.into());
        assert_eq!(order_from_three_smallest(&ratio(7, 12), &ratio(10, 12), &ratio(11, 12)).unwrap(), 3.into());
        assert_eq!(order_from_three_smallest(&ratio(5, 18), &ratio(25, 66), &ratio(28, 66)).unwrap(), 6.into());
        assert_eq!(order_from_three_smallest(&int(2), &int(3), &int(4)).unwrap(), 1.into());
        assert!(matches!(
            order_from_three_smallest(&ratio(1, 2), &ratio(3, 5), &ratio(7, 10)),
            Err(JumpError::NotInteger(_))
        ));
        assert!(order_from_three_smallest(&ratio(5, 6), &ratio(5, 6), &ratio(8, 6)).is_err());
    }

    #[test]
    fn inversion_examples() {
        for a in [vec![2, 1, 1], vec![1], vec![6, 3, 3, 3, 1, 1, 1, 1], vec![2, 2, 1, 1], vec![1, 1, 1]] {
            let jumps = desc(&a).enumerate_values(&int(2)).unwrap();
            assert_eq!(invert_jumping_numbers(&jumps).unwrap(), PointBasis::from_ints(&a).unwrap());
        }
        assert_eq!(invert_jumping_numbers(&[int(2)]).unwrap().to_string(), "1");
        assert!(matches!(invert_jumping_numbers(&[ratio(1, 2), int(2)]), Err(JumpError::MalformedJumpSet(_))));
        assert!(invert_jumping_numbers(&[int(1), int(2)]).is_err());
        assert!(invert_jumping_numbers(&[ratio(3, 2)]).is_err());
        assert!(invert_jumping_numbers(&[int(2), ratio(3, 2)]).is_err());
    }

    #[test]
    fn positive_solutions() {
        assert_eq!(positive_solution(&3.into(), &4.into(), &7.into()), Some((1.into(), 1.into())));
        assert_eq!(positive_solution(&3.into(), &4.into(), &12.into()), None);
        assert_eq!(positive_solution(&2.into(), &4.into(), &7.into()), None);
        assert_eq!(positive_solution(&2.into(), &4.into(), &8.into()), Some((2.into(), 1.into())));
    }
}
