use std::fmt::Write as _;

use jn_core::closed_form::{hilbert_samuel, zariski_exponents};
use jn_core::curve::{characteristic_exponents, equisingularity_from_jumps, to_pairs};
use jn_core::oracle::{c_r_definitional, c_r_direct, c_r_reduced, oracle_jumps};
use jn_core::rational::int;
use jn_core::{
    generators, invert_jumping_numbers, BigInt, DualGraph, Jump, JumpDecomposition, PointBasis, Rational, SimpleIdeal,
};
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{Failure, Resolved};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    Dot,
    Ascii,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum InvertMode {
    Ideal,
    Curve,
}

fn num(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse().expect("an integer is a JSON number"))
}

fn nums(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(num).collect())
}

fn rat(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn rats(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(rat).collect())
}

fn pair_array(pairs: &[(BigInt, BigInt)]) -> Value {
    Value::Array(pairs.iter().map(|(a, b)| json!([num(a), num(b)])).collect())
}

fn list<T: ToString>(xs: &[T]) -> String {
    if xs.is_empty() {
        return "-".into();
    }
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

fn pair_list(pairs: &[(BigInt, BigInt)]) -> String {
    if pairs.is_empty() {
        return "-".into();
    }
    pairs.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(", ")
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn positive(bound: &Rational) -> Result<(), Failure> {
    if bound.is_positive() {
        Ok(())
    } else {
        Err(Failure::Validation(format!("bound {bound} is not positive")))
    }
}

fn decomposition_json(x: &JumpDecomposition) -> Value {
    json!({ "block": x.block, "s": num(&x.s), "t": num(&x.t), "m": x.m.as_ref().map(num) })
}

fn decomposition_text(x: &JumpDecomposition) -> String {
    match &x.m {
        Some(m) => format!("block {}: s={} t={} m={m}", x.block, x.s, x.t),
        None => format!("block {}: s={} t={}", x.block, x.s, x.t),
    }
}

pub fn jumps(input: &Resolved, bound: &Rational, format: Format) -> Result<String, Failure> {
    positive(bound)?;
    let d = generators(&input.ideal);
    let found: Vec<Jump> = d.enumerate(bound)?;
    Ok(match format {
        Format::Json => pretty(&json!({
            "input": input.description,
            "point_basis": nums(input.ideal.basis().multiplicities()),
            "up_to": rat(bound),
            "generators": pair_array(d.pairs()),
            "caps": nums(d.caps()),
            "jumps": found.iter().map(|j| json!({
                "value": rat(&j.value),
                "decompositions": j.decompositions.iter().map(decomposition_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let width = found.iter().map(|j| j.value.to_string().len()).max().unwrap_or(0);
            let mut out = String::new();
            for j in &found {
                let parts: Vec<String> = j.decompositions.iter().map(decomposition_text).collect();
                let _ = writeln!(out, "{:<width$}  {}", j.value.to_string(), parts.join("; "));
            }
            out
        }
    })
}

pub fn dual_graph(input: &Resolved, format: GraphFormat) -> Result<String, Failure> {
    let g = DualGraph::build(input.ideal.proximity());
    Ok(match format {
        GraphFormat::Dot => g.to_dot(),
        GraphFormat::Ascii => g.to_ascii(),
        GraphFormat::Json => {
            let (stars, ends) = g.stars_and_ends();
            pretty(&json!({
                "input": input.description,
                "n": g.n(),
                "weights": g.weights(),
                "multiplicities": nums(input.ideal.basis().multiplicities()),
                "edges": g.edges().iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
                "stars": stars,
                "ends": ends,
            }))
        }
    })
}

/// The numbers reported by `info` and `invert`.
struct Invariants {
    basis: Vec<BigInt>,
    ord: BigInt,
    lct: Rational,
    e: BigInt,
    zariski: Vec<BigInt>,
}

impl Invariants {
    fn of(ideal: &SimpleIdeal) -> Self {
        Invariants {
            basis: ideal.basis().multiplicities().to_vec(),
            ord: ideal.basis().a(1).clone(),
            lct: generators(ideal).lct(),
            e: hilbert_samuel(ideal),
            zariski: zariski_exponents(ideal),
        }
    }

    fn json(&self) -> Value {
        json!({
            "point_basis": nums(&self.basis),
            "ord": num(&self.ord),
            "e": num(&self.e),
            "lct": rat(&self.lct),
            "zariski_exponents": nums(&self.zariski),
        })
    }

    fn text(&self, out: &mut String) {
        let _ = writeln!(out, "point basis  {}", list(&self.basis));
        let _ = writeln!(out, "ord          {}", self.ord);
        let _ = writeln!(out, "e            {}", self.e);
        let _ = writeln!(out, "lct          {}", self.lct);
        let _ = writeln!(out, "Zariski      {}", list(&self.zariski));
    }
}

pub fn invert(jumps: &[Rational], mode: InvertMode, format: Format) -> Result<String, Failure> {
    let mut jumps = jumps.to_vec();
    jumps.sort();
    jumps.dedup();
    match mode {
        InvertMode::Ideal => {
            jumps.retain(|c| c <= &int(2));
            let basis = invert_jumping_numbers(&jumps)?;
            let inv = Invariants::of(&SimpleIdeal::new(basis));
            Ok(match format {
                Format::Json => pretty(&json!({ "mode": "ideal", "result": inv.json() })),
                Format::Text => {
                    let mut out = String::new();
                    inv.text(&mut out);
                    out
                }
            })
        }
        InvertMode::Curve => {
            jumps.retain(|c| c < &Rational::one());
            let ms = equisingularity_from_jumps(&jumps)?;
            let cp = to_pairs(&ms);
            let beta = characteristic_exponents(&ms);
            let inv = Invariants::of(&SimpleIdeal::new(ms.as_point_basis().clone()));
            Ok(match format {
                Format::Json => pretty(&json!({
                    "mode": "curve",
                    "multiplicity_sequence": nums(ms.multiplicities()),
                    "characteristic_exponents": nums(&beta),
                    "characteristic_pairs": pair_array(cp.pairs()),
                    "genus": ms.genus(),
                    "result": inv.json(),
                })),
                Format::Text => {
                    let mut out = String::new();
                    let _ = writeln!(out, "sequence     {}", list(ms.multiplicities()));
                    let _ = writeln!(out, "char. exp.   {}", list(&beta));
                    let _ = writeln!(out, "char. pairs  {}", pair_list(cp.pairs()));
                    let _ = writeln!(out, "genus        {}", ms.genus());
                    inv.text(&mut out);
                    out
                }
            })
        }
    }
}

pub fn info(input: &Resolved, format: Format) -> Result<String, Failure> {
    let ideal = &input.ideal;
    let gs = ideal.structure();
    let d = generators(ideal);
    let inv = Invariants::of(ideal);
    let beta = ideal.puiseux_exponents();
    let self_int = ideal.basis().self_intersection();
    Ok(match format {
        Format::Json => pretty(&json!({
            "input": input.description,
            "n": ideal.n(),
            "gamma": gs.terminal_satellites(),
            "gamma_star": gs.gamma_star(),
            "tau": gs.terminal_free_points(),
            "puiseux_exponents": rats(&beta),
            "generators": pair_array(d.pairs()),
            "caps": nums(d.caps()),
            "xi_primes": rats(&d.xi_primes()),
            "self_intersection": num(&self_int),
            "result": inv.json(),
        })),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "n            {}", ideal.n());
            let _ = writeln!(out, "Γ            {}", list(gs.terminal_satellites()));
            let _ = writeln!(out, "Γ*           {}", list(&gs.gamma_star()));
            let _ = writeln!(out, "τ            {}", list(gs.terminal_free_points()));
            let _ = writeln!(out, "Puiseux β′   {}", list(&beta));
            let _ = writeln!(out, "generators   {}", pair_list(d.pairs()));
            let _ = writeln!(out, "caps         {}", list(d.caps()));
            let _ = writeln!(out, "ξ′           {}", list(&d.xi_primes()));
            let _ = writeln!(out, "I²           {self_int}");
            inv.text(&mut out);
            out
        }
    })
}

/// Closed form against the oracle, then every oracle jump and every unit
/// vector `R = e_i` through the three `c_R` evaluators.
fn check_instance(ideal: &SimpleIdeal, bound: &Rational) -> Result<String, String> {
    let closed = generators(ideal).enumerate_values(bound).map_err(|e| e.to_string())?;
    let oracle = oracle_jumps(ideal, bound).map_err(|e| e.to_string())?;
    let values: Vec<Rational> = oracle.iter().map(|j| j.value.clone()).collect();
    if closed != values {
        let missing: Vec<&Rational> = values.iter().filter(|c| !closed.contains(c)).collect();
        let extra: Vec<&Rational> = closed.iter().filter(|c| !values.contains(c)).collect();
        return Err(format!("closed form vs oracle: missing {}, extra {}", list(&missing), list(&extra)));
    }
    let n = ideal.n();
    let mut rs: Vec<Vec<BigInt>> = oracle.iter().map(|j| j.before.factorization.clone()).collect();
    for i in 0..n {
        let mut r = vec![BigInt::from(0); n];
        r[i] = BigInt::one();
        rs.push(r);
    }
    for r in &rs {
        let direct = c_r_direct(ideal, r).map_err(|e| e.to_string())?;
        let reduced = c_r_reduced(ideal, r).map_err(|e| e.to_string())?;
        let scanned = c_r_definitional(ideal, r).map_err(|e| e.to_string())?;
        if direct != reduced || direct != scanned {
            return Err(format!("c_R for R = {r:?}: direct {direct}, reduced {reduced}, definitional {scanned}"));
        }
        if &direct <= bound && !values.contains(&direct) {
            return Err(format!("c_R = {direct} for R = {r:?} is not a jump"));
        }
    }
    Ok(format!("{} jumps, {} thresholds", values.len(), rs.len()))
}

pub struct VerifyReport {
    pub text: String,
    pub failed: usize,
}

pub fn verify(instances: &[(String, PointBasis)], bound: &Rational, format: Format) -> Result<VerifyReport, Failure> {
    positive(bound)?;
    // Each instance is checked independently; collect keeps input order.
    let results: Vec<Result<String, String>> =
        instances.par_iter().map(|(_, b)| check_instance(&SimpleIdeal::new(b.clone()), bound)).collect();
    let failed = results.iter().filter(|r| r.is_err()).count();
    let passed = results.len() - failed;
    let text = match format {
        Format::Json => pretty(&json!({
            "up_to": rat(bound),
            "passed": passed,
            "failed": failed,
            "instances": instances.iter().zip(&results).map(|((label, _), r)| match r {
                Ok(detail) => json!({ "input": label, "status": "PASS", "detail": detail }),
                Err(detail) => json!({ "input": label, "status": "FAIL", "detail": detail }),
            }).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = String::new();
            for ((label, _), r) in instances.iter().zip(&results) {
                let _ = match r {
                    Ok(detail) => writeln!(out, "PASS {label}: {detail}"),
                    Err(detail) => writeln!(out, "FAIL {label}: {detail}"),
                };
            }
            let _ = writeln!(out, "{passed} passed, {failed} failed");
            out
        }
    };
    Ok(VerifyReport { text, failed })
}
