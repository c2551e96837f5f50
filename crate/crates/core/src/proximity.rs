//! Point bases, proximity matrices and the combinatorics of terminal points.
//!
//! Point `j` is proximate to point `i` (written `j ≻ i`) when `j` lies on the
//! strict transform of the exceptional curve created by blowing up `i`. Every
//! point after the first is proximate to its predecessor; a *satellite* point
//! is proximate to one further, earlier point.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProximityError {
    #[error("a_{index} = {value} is not positive")]
    NotPositive { index: usize, value: BigInt },
    #[error("not the point basis of a simple ideal: {0}")]
    NotSimple(String),
    #[error("inconsistent proximity: {0}")]
    InconsistentProximity(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("inconsistent Puiseux exponents: {0}")]
    Inconsistent(String),
}

/// A validated point basis `(a_1, ..., a_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointBasis {
    a: Vec<BigInt>,
    // 0-based: reach[i] is the last point proximate to point i, or i itself.
    reach: Vec<usize>,
}

impl PointBasis {
    pub fn new(raw: Vec<BigInt>) -> Result<Self, ProximityError> {
        let n = raw.len();
        if n == 0 {
            return Err(ProximityError::NotSimple("empty point basis".into()));
        }
        for (i, v) in raw.iter().enumerate() {
            if !v.is_positive() {
                return Err(ProximityError::NotPositive { index: i + 1, value: v.clone() });
            }
        }
        if !raw[n - 1].is_one() {
            return Err(ProximityError::NotSimple(format!("a_n = {} but must be 1", raw[n - 1])));
        }
        let mut reach = vec![0; n];
        reach[n - 1] = n - 1;
        for i in 0..n - 1 {
            let mut acc = BigInt::zero();
            let mut found = None;
            for (j, v) in raw.iter().enumerate().skip(i + 1) {
                acc += v;
                if acc >= raw[i] {
                    if acc == raw[i] {
                        found = Some(j);
                    }
                    break;
                }
            }
            reach[i] = found
                .ok_or_else(|| ProximityError::NotSimple(format!("no k with a_{} = a_{} + ... + a_k", i + 1, i + 2)))?;
        }
        for j in 1..n {
            let count = (0..j).filter(|&i| reach[i] >= j).count();
            if count > 2 {
                return Err(ProximityError::InconsistentProximity(format!(
                    "point {} would be proximate to {count} earlier points",
                    j + 1
                )));
            }
        }
        Ok(PointBasis { a: raw, reach })
    }

    pub fn from_ints<T: Clone + Into<BigInt>>(raw: &[T]) -> Result<Self, ProximityError> {
        Self::new(raw.iter().cloned().map(Into::into).collect())
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn multiplicities(&self) -> &[BigInt] {
        &self.a
    }

    /// `a_i`, 1-based.
    pub fn a(&self, i: usize) -> &BigInt {
        &self.a[i - 1]
    }

    /// `max{ν : ν ≻ i}`, or `i` when nothing is proximate to `i`. 1-based.
    pub fn reach(&self, i: usize) -> usize {
        self.reach[i - 1] + 1
    }

    /// `I·I = Σ a_i²`.
    pub fn self_intersection(&self) -> BigInt {
        self.a.iter().map(|v| v * v).sum()
    }
}

impl fmt::Display for PointBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.a)
    }
}

pub(crate) fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    for (k, v) in xs.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Unit lower-triangular proximity matrix `P` with `p_ij = -1` iff `i ≻ j`,
/// together with the rows `X_1, ..., X_n` of `P^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProximityMatrix {
    n: usize,
    p: Vec<i64>,
    reach: Vec<usize>,
    inverse: Vec<Vec<BigInt>>,
}

impl ProximityMatrix {
    pub fn from_point_basis(b: &PointBasis) -> Self {
        Self::from_reach(b.reach.clone())
    }

    /// Builds `P` from relations `(j, i)` meaning `j ≻ i`. The relations
    /// `j ≻ j - 1` are implied and may be omitted.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self, ProximityError> {
        if n == 0 {
            return Err(ProximityError::NotSimple("no points".into()));
        }
        let mut prox = vec![vec![false; n]; n];
        for j in 1..n {
            prox[j][j - 1] = true;
        }
        for &(j, i) in relations {
            if i == 0 || j > n || i >= j {
                return Err(ProximityError::IndexOutOfRange(format!("relation {j}>{i} with n = {n}")));
            }
            prox[j - 1][i - 1] = true;
        }
        let mut reach: Vec<usize> = (0..n).collect();
        for (j, row) in prox.iter().enumerate() {
            let targets: Vec<usize> = (0..j).filter(|&i| row[i]).collect();
            if targets.len() > 2 {
                return Err(ProximityError::InconsistentProximity(format!(
                    "point {} is proximate to {} earlier points",
                    j + 1,
                    targets.len()
                )));
            }
            for &i in &targets {
                reach[i] = reach[i].max(j);
            }
        }
        for i in 0..n {
            for (j, row) in prox.iter().enumerate().take(reach[i] + 1).skip(i + 1) {
                if !row[i] {
                    return Err(ProximityError::InconsistentProximity(format!(
                        "point {} is proximate to {} but point {} is not",
                        reach[i] + 1,
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self::from_reach(reach))
    }

    fn from_reach(reach: Vec<usize>) -> Self {
        let n = reach.len();
        let mut p = vec![0i64; n * n];
        for i in 0..n {
            p[i * n + i] = 1;
            for j in i + 1..=reach[i] {
                p[j * n + i] = -1;
            }
        }
        // P X = 1 with P unit lower-triangular gives X_i = e_i + Σ_{i ≻ k} X_k.
        let mut inverse: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = vec![BigInt::zero(); n];
            row[i] = BigInt::one();
            for k in 0..i {
                if p[i * n + k] == -1 {
                    for (r, x) in row.iter_mut().zip(&inverse[k]).take(k + 1) {
                        *r += x;
                    }
                }
            }
            inverse.push(row);
        }
        ProximityMatrix { n, p, reach, inverse }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `p_ij`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.p[(i - 1) * self.n + (j - 1)]
    }

    /// Whether `j ≻ i`.
    pub fn is_proximate(&self, j: usize, i: usize) -> bool {
        self.entry(j, i) == -1
    }

    /// `max{ν : ν ≻ i}`, or `i` when nothing is proximate to `i`.
    pub fn reach(&self, i: usize) -> usize {
        self.reach[i - 1] + 1
    }

    /// The earlier point other than `j - 1` that `j` is proximate to.
    pub fn satellite_target(&self, j: usize) -> Option<usize> {
        (1..j.saturating_sub(1)).find(|&i| self.is_proximate(j, i))
    }

    /// Row `X_i` of `P^{-1}`, padded with zeros to length `n`.
    pub fn inverse_row(&self, i: usize) -> &[BigInt] {
        &self.inverse[i - 1]
    }

    pub fn inverse_rows(&self) -> &[Vec<BigInt>] {
        &self.inverse
    }

    /// The bottom row of `P^{-1}`.
    pub fn point_basis(&self) -> PointBasis {
        PointBasis::new(self.inverse[self.n - 1].clone()).expect("bottom row of a proximity inverse is a point basis")
    }

    /// Checks the structural invariants of `P` and `P^{-1}`.
    pub fn check(&self) -> Result<(), ProximityError> {
        let n = self.n;
        let bad = |m: String| Err(ProximityError::InconsistentProximity(m));
        for i in 1..=n {
            if self.entry(i, i) != 1 {
                return bad(format!("p_{i}{i} != 1"));
            }
            let mut minus = 0;
            for j in 1..=n {
                let e = self.entry(i, j);
                if j > i && e != 0 {
                    return bad(format!("p_{i}{j} above the diagonal"));
                }
                if j < i && e != 0 && e != -1 {
                    return bad(format!("p_{i}{j} = {e}"));
                }
                if j < i && e == -1 {
                    minus += 1;
                    if j < i - 1 && (j + 1..=i).any(|v| self.entry(v, j) != -1) {
                        return bad(format!("satellite column {j} not contiguous up to row {i}"));
                    }
                }
            }
            if i >= 2 && self.entry(i, i - 1) != -1 {
                return bad(format!("p_{i}{} != -1", i - 1));
            }
            if minus > 2 {
                return bad(format!("row {i} has {minus} entries -1"));
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                let s: BigInt = (1..=n).map(|k| BigInt::from(self.entry(i, k)) * &self.inverse[k - 1][j - 1]).sum();
                if s != BigInt::from((i == j) as i64) {
                    return bad(format!("(P P^-1)_{i}{j} = {s}"));
                }
                if self.inverse[i - 1][j - 1].is_negative() {
                    return bad(format!("negative entry in P^-1 at {i},{j}"));
                }
            }
        }
        Ok(())
    }
}

/// Run-length data `s` repeated `r` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub value: BigInt,
    pub r: usize,
}

/// Terminal satellites `γ_ν`, terminal free points `τ_ν`, the run-length data
/// of the multiplicities between consecutive `γ`s, and the derived `κ`, `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaStructure {
    n: usize,
    satellite: Vec<bool>,
    gamma: Vec<usize>,
    tau: Vec<usize>,
    runs: Vec<Vec<Run>>,
    kappa: Vec<Vec<usize>>,
    in_u: Vec<bool>,
}

impl GammaStructure {
    pub fn classify(p: &ProximityMatrix) -> Self {
        let n = p.n();
        let a = p.inverse_row(n);
        let satellite: Vec<bool> = (1..=n).map(|j| p.satellite_target(j).is_some()).collect();
        let sat = |i: usize| satellite[i - 1];
        let gamma: Vec<usize> = (1..=n).filter(|&i| sat(i) && (i == n || !sat(i + 1))).collect();
        let tau: Vec<usize> = (1..n).filter(|&i| !sat(i) && sat(i + 1)).collect();
        let g = gamma.len();
        let gamma_at = |nu: usize| match nu {
            0 => 1,
            k if k <= g => gamma[k - 1],
            _ => n,
        };

        let mut runs = Vec::with_capacity(g + 1);
        let mut kappa = Vec::with_capacity(g + 1);
        let mut in_u = vec![false; n];
        for nu in 1..=g + 1 {
            let (lo, hi) = (gamma_at(nu - 1), gamma_at(nu));
            let mut seg: Vec<Run> = Vec::new();
            for v in &a[lo - 1..hi] {
                match seg.last_mut() {
                    Some(run) if &run.value == v => run.r += 1,
                    _ => seg.push(Run { value: v.clone(), r: 1 }),
                }
            }
            seg.last_mut().expect("segment is nonempty").r -= 1;
            let mut ks = vec![lo - 1];
            for run in &seg {
                ks.push(ks.last().unwrap() + run.r);
            }
            for mu in (1..=seg.len()).step_by(2) {
                for i in ks[mu - 1] + 1..=ks[mu] {
                    in_u[i - 1] = true;
                }
            }
            runs.push(seg);
            kappa.push(ks);
        }
        in_u[n - 1] = true;
        GammaStructure { n, satellite, gamma, tau, runs, kappa, in_u }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of terminal satellites.
    pub fn g(&self) -> usize {
        self.gamma.len()
    }

    /// Number of terminal satellites other than `n`.
    pub fn g_star(&self) -> usize {
        self.gamma.iter().filter(|&&v| v < self.n).count()
    }

    /// `γ_ν` for `0 ≤ ν ≤ g + 1`, with `γ_0 = 1` and `γ_{g+1} = n`.
    pub fn gamma(&self, nu: usize) -> usize {
        match nu {
            0 => 1,
            k if k <= self.g() => self.gamma[k - 1],
            k if k == self.g() + 1 => self.n,
            k => panic!("γ_{k} out of range (g = {})", self.g()),
        }
    }

    /// `τ_ν` for `0 ≤ ν ≤ g + 1`, with `τ_0 = 1` and `τ_{g+1} = n`.
    pub fn tau(&self, nu: usize) -> usize {
        match nu {
            0 => 1,
            k if k <= self.g() => self.tau[k - 1],
            k if k == self.g() + 1 => self.n,
            k => panic!("τ_{k} out of range (g = {})", self.g()),
        }
    }

    /// `Γ`, the terminal satellite points.
    pub fn terminal_satellites(&self) -> &[usize] {
        &self.gamma
    }

    /// `Γ*`, the terminal satellites below `n`.
    pub fn gamma_star(&self) -> Vec<usize> {
        self.gamma.iter().copied().filter(|&v| v < self.n).collect()
    }

    /// `Γ* ∪ {n}`.
    pub fn gamma_bar(&self) -> Vec<usize> {
        let mut v = self.gamma_star();
        v.push(self.n);
        v
    }

    /// `τ_1, ..., τ_g`.
    pub fn terminal_free_points(&self) -> &[usize] {
        &self.tau
    }

    pub fn is_satellite(&self, i: usize) -> bool {
        self.satellite[i - 1]
    }

    /// Runs `(s_{ν,μ}, r_{ν,μ})` for `1 ≤ ν ≤ g + 1`. The last run of each
    /// segment covers `r + 1` entries, the final one being `a_{γ_ν}`.
    pub fn runs(&self, nu: usize) -> &[Run] {
        &self.runs[nu - 1]
    }

    /// `κ_{ν,μ}` for `1 ≤ ν ≤ g + 1`, `0 ≤ μ ≤ m_ν`.
    pub fn kappa(&self, nu: usize, mu: usize) -> usize {
        self.kappa[nu - 1][mu]
    }

    pub fn in_u(&self, i: usize) -> bool {
        self.in_u[i - 1]
    }

    pub fn u_set(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| self.in_u(i)).collect()
    }
}

/// Index ranges for truncated rows, 1-based and inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Span {
    All,
    /// `X^{≤k}`
    UpTo(usize),
    /// `X^{>k}`
    Above(usize),
    /// `X^{[lo,hi]}`
    Between(usize, usize),
}

impl Span {
    fn bounds(self, n: usize) -> (usize, usize) {
        match self {
            Span::All => (1, n),
            Span::UpTo(k) => (1, k.min(n)),
            Span::Above(k) => (k + 1, n),
            Span::Between(lo, hi) => (lo.max(1), hi.min(n)),
        }
    }
}

/// A point basis with its proximity matrix and terminal-point structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleIdeal {
    basis: PointBasis,
    prox: ProximityMatrix,
    gs: GammaStructure,
}

impl SimpleIdeal {
    pub fn new(basis: PointBasis) -> Self {
        let prox = ProximityMatrix::from_point_basis(&basis);
        let gs = GammaStructure::classify(&prox);
        SimpleIdeal { basis, prox, gs }
    }

    pub fn from_ints<T: Clone + Into<BigInt>>(raw: &[T]) -> Result<Self, ProximityError> {
        PointBasis::from_ints(raw).map(Self::new)
    }

    pub fn from_proximity(prox: ProximityMatrix) -> Self {
        let basis = prox.point_basis();
        let gs = GammaStructure::classify(&prox);
        SimpleIdeal { basis, prox, gs }
    }

    pub fn basis(&self) -> &PointBasis {
        &self.basis
    }

    pub fn proximity(&self) -> &ProximityMatrix {
        &self.prox
    }

    pub fn structure(&self) -> &GammaStructure {
        &self.gs
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }

    /// `x_ij`, the `j`-th entry of `X_i`; zero for `j > i`.
    pub fn x(&self, i: usize, j: usize) -> &BigInt {
        &self.prox.inverse_row(i)[j - 1]
    }

    fn check_index(&self, what: &str, i: usize) -> Result<(), ProximityError> {
        if i == 0 || i > self.n() {
            return Err(ProximityError::IndexOutOfRange(format!("{what} = {i} with n = {}", self.n())));
        }
        Ok(())
    }

    /// Dot product of `X_i` and `X_j` restricted to `span`.
    pub fn dot(&self, i: usize, j: usize, span: Span) -> Result<BigInt, ProximityError> {
        self.check_index("i", i)?;
        self.check_index("j", j)?;
        let (lo, hi) = span.bounds(self.n());
        let (xi, xj) = (self.prox.inverse_row(i), self.prox.inverse_row(j));
        Ok((lo..=hi).map(|k| &xi[k - 1] * &xj[k - 1]).sum())
    }

    /// `[X_i·X_j]_ν`, the dot product over `(γ_ν, γ_{ν+1}]`.
    pub fn bracket(&self, i: usize, j: usize, nu: usize) -> Result<BigInt, ProximityError> {
        self.check_nu(nu)?;
        self.dot(i, j, Span::Between(self.gs.gamma(nu) + 1, self.gs.gamma(nu + 1)))
    }

    fn check_nu(&self, nu: usize) -> Result<(), ProximityError> {
        if nu > self.gs.g() {
            return Err(ProximityError::IndexOutOfRange(format!("ν = {nu} with g = {}", self.gs.g())));
        }
        Ok(())
    }

    /// `ρ_{i,γ_ν} = x_{i,γ_ν+1} + ... + x_{i,τ_{ν+1}}`, zero when `i ≤ γ_ν`.
    pub fn rho(&self, i: usize, nu: usize) -> Result<BigInt, ProximityError> {
        self.check_index("i", i)?;
        self.check_nu(nu)?;
        let lo = self.gs.gamma(nu);
        if i <= lo {
            return Ok(BigInt::zero());
        }
        Ok((lo + 1..=self.gs.tau(nu + 1)).map(|k| self.x(i, k)).sum())
    }

    /// `β′_ν = (a_{γ_{ν-1}} + ... + a_{τ_ν}) / a_{γ_{ν-1}}` for `1 ≤ ν ≤ g + 1`.
    pub fn puiseux_exponents(&self) -> Vec<Rational> {
        let a = self.basis.multiplicities();
        (1..=self.gs.g() + 1)
            .map(|nu| {
                let lo = self.gs.gamma(nu - 1);
                let sum: BigInt = a[lo - 1..self.gs.tau(nu)].iter().sum();
                Rational::new(sum, a[lo - 1].clone())
            })
            .collect()
    }
}

/// Rebuilds the point basis from `β′_1, ..., β′_k` by descending Euclidean
/// division, starting from `a_{γ_k} = 1`. A trailing `β′ = 1` may be omitted.
pub fn point_basis_from_puiseux(beta: &[Rational]) -> Result<PointBasis, ProximityError> {
    let fail = |m: String| ProximityError::Inconsistent(m);
    if beta.is_empty() {
        return Err(fail("no exponents".into()));
    }
    let mut segments: Vec<Vec<BigInt>> = Vec::with_capacity(beta.len());
    let mut low = BigInt::one();
    for b in beta.iter().rev() {
        if b < &Rational::one() {
            return Err(fail(format!("exponent {b} is below 1")));
        }
        let (mut x, mut y) = (&low * b.numer(), &low * b.denom());
        let head = y.clone();
        let mut seg = Vec::new();
        while !y.is_zero() {
            let (q, r) = x.div_rem(&y);
            let q = q.to_usize().ok_or_else(|| fail(format!("run of length {q} is too long")))?;
            seg.extend(std::iter::repeat_n(y.clone(), q));
            x = std::mem::replace(&mut y, r);
        }
        segments.push(seg);
        low = head;
    }
    let mut a: Vec<BigInt> = Vec::new();
    for (k, seg) in segments.into_iter().rev().enumerate() {
        a.extend(seg.into_iter().skip(usize::from(k > 0)));
    }
    let basis = PointBasis::new(a).map_err(|e| fail(e.to_string()))?;
    let back = SimpleIdeal::new(basis.clone()).puiseux_exponents();
    let trailing_one = back.len() == beta.len() + 1 && back.last() == Some(&Rational::one());
    if back[..beta.len().min(back.len())] != *beta || !(back.len() == beta.len() || trailing_one) {
        let shown: Vec<String> = back.iter().map(|b| b.to_string()).collect();
        return Err(fail(format!("reconstruction {basis} has exponents ({})", shown.join(","))));
    }
    Ok(basis)
}
