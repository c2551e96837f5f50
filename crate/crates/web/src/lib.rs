//! Browser bindings. Every export takes plain strings and returns a JSON
//! string: the result object, or `{"error": "..."}`.

use jn_core::curve::{equisingularity_from_jumps, to_pairs, to_sequence};
use jn_core::proximity::point_basis_from_puiseux;
use jn_core::rational::{parse, Rational};
use jn_core::{generators, invert_jumping_numbers, BigInt, CharacteristicPairs, DualGraph, PointBasis, SimpleIdeal};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest bound the page will enumerate to; the jump count grows quadratically.
const MAX_BOUND: i64 = 20;

fn integers(text: &str) -> Result<Vec<BigInt>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("not an integer: {s:?}")))
        .collect()
}

fn rationals(text: &str) -> Result<Vec<Rational>, String> {
    text.split([',', '\n', ' ']).map(str::trim).filter(|s| !s.is_empty()).map(parse).collect()
}

/// `kind` is `point-basis`, `char-pairs` (`"3:2;7:2"`) or `puiseux` (`"3/2,7/3,2"`).
fn ideal(kind: &str, text: &str) -> Result<SimpleIdeal, String> {
    let basis = match kind {
        "point-basis" => PointBasis::new(integers(text)?).map_err(|e| e.to_string())?,
        "char-pairs" => {
            let pairs = text
                .split(';')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|p| {
                    let (m, n) = p.split_once(':').ok_or_else(|| format!("expected m:n, got {p:?}"))?;
                    let one = |s: &str| s.trim().parse::<BigInt>().map_err(|_| format!("not an integer: {s:?}"));
                    Ok((one(m)?, one(n)?))
                })
                .collect::<Result<Vec<_>, String>>()?;
            let cp = CharacteristicPairs::new(pairs).map_err(|e| e.to_string())?;
            to_sequence(&cp).map_err(|e| e.to_string())?.as_point_basis().clone()
        }
        "puiseux" => point_basis_from_puiseux(&rationals(text)?).map_err(|e| e.to_string())?,
        other => return Err(format!("unknown input kind {other:?}")),
    };
    Ok(SimpleIdeal::new(basis))
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(T::to_string).collect()
}

fn pairs(ps: &[(BigInt, BigInt)]) -> Vec<[String; 2]> {
    ps.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect()
}

fn answer(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

pub fn jumps_value(kind: &str, text: &str, up_to: &str) -> Result<Value, String> {
    let ideal = ideal(kind, text)?;
    let bound = parse(up_to)?;
    if bound > Rational::from_integer(MAX_BOUND.into()) {
        return Err(format!("bound {bound} is above {MAX_BOUND}"));
    }
    let d = generators(&ideal);
    let jumps = d.enumerate(&bound).map_err(|e| e.to_string())?;
    Ok(json!({
        "point_basis": strings(ideal.basis().multiplicities()),
        "generators": pairs(d.pairs()),
        "caps": strings(d.caps()),
        "lct": d.lct().to_string(),
        "jumps": jumps.iter().map(|j| json!({
            "value": j.value.to_string(),
            "blocks": j.decompositions.iter().map(|x| x.block).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    }))
}

pub fn dual_graph_value(kind: &str, text: &str) -> Result<Value, String> {
    let ideal = ideal(kind, text)?;
    let g = DualGraph::build(ideal.proximity());
    let (stars, ends) = g.stars_and_ends();
    Ok(json!({
        "point_basis": strings(ideal.basis().multiplicities()),
        "weights": g.weights(),
        "edges": g.edges().iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
        "stars": stars,
        "ends": ends,
        "dot": g.to_dot(),
        "ascii": g.to_ascii(),
    }))
}

/// `mode` is `ideal` (all jumps in `(0, 2]`) or `curve` (all jumps in `(0, 1)`).
pub fn invert_value(jumps: &str, mode: &str) -> Result<Value, String> {
    let mut values = rationals(jumps)?;
    values.sort();
    values.dedup();
    match mode {
        "ideal" => {
            values.retain(|c| c <= &Rational::from_integer(2.into()));
            let b = invert_jumping_numbers(&values).map_err(|e| e.to_string())?;
            Ok(
                json!({ "point_basis": strings(b.multiplicities()), "self_intersection": b.self_intersection().to_string() }),
            )
        }
        "curve" => {
            values.retain(|c| c < &Rational::from_integer(1.into()));
            let ms = equisingularity_from_jumps(&values).map_err(|e| e.to_string())?;
            Ok(json!({
                "multiplicity_sequence": strings(ms.multiplicities()),
                "characteristic_pairs": pairs(to_pairs(&ms).pairs()),
            }))
        }
        other => Err(format!("unknown mode {other:?}")),
    }
}

#[wasm_bindgen]
pub fn jumps(kind: &str, text: &str, up_to: &str) -> String {
    answer(jumps_value(kind, text, up_to))
}

#[wasm_bindgen]
pub fn dual_graph(kind: &str, text: &str) -> String {
    answer(dual_graph_value(kind, text))
}

#[wasm_bindgen]
pub fn invert(jumps: &str, mode: &str) -> String {
    answer(invert_value(jumps, mode))
}
