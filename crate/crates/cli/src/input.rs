use std::fmt;

use clap::Args;
use jn_core::curve::{to_sequence, EquisingularityClass};
use jn_core::proximity::point_basis_from_puiseux;
use jn_core::rational::parse as parse_rational;
use jn_core::{
    BigInt, CharacteristicPairs, CurveError, JumpError, MultiplicitySequence, OracleError, PointBasis, ProximityError,
    ProximityMatrix, Rational, SimpleIdeal,
};
use serde_json::{json, Value};

/// Failure classes, one per exit code.
#[derive(Debug)]
pub enum Failure {
    Parse(String),
    Validation(String),
    Malformed(String),
    Mismatch(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Validation(_) => 3,
            Failure::Malformed(_) => 4,
            Failure::Mismatch(_) => 5,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Parse(m) => write!(f, "parse error: {m}"),
            Failure::Validation(m) => write!(f, "invalid input: {m}"),
            Failure::Malformed(m) => write!(f, "malformed jump set: {m}"),
            Failure::Mismatch(m) => write!(f, "mismatch: {m}"),
        }
    }
}

impl From<ProximityError> for Failure {
    fn from(e: ProximityError) -> Self {
        Failure::Validation(e.to_string())
    }
}

impl From<JumpError> for Failure {
    fn from(e: JumpError) -> Self {
        match e {
            JumpError::MalformedJumpSet(m) => Failure::Malformed(m),
            other => Failure::Validation(other.to_string()),
        }
    }
}

impl From<CurveError> for Failure {
    fn from(e: CurveError) -> Self {
        match e {
            CurveError::Jump(j) => j.into(),
            other => Failure::Validation(other.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::Validation(e.to_string())
    }
}

#[derive(Args, Debug, Default, Clone)]
#[group(id = "source", multiple = false)]
pub struct Source {
    /// Point basis, e.g. 6,3,3,3,1,1,1,1
    #[arg(long, value_name = "A1,A2,...")]
    pub point_basis: Option<String>,
    /// Proximity relations i>j, e.g. 3>1,6>4,7>4; the relations i>i-1 are implied
    #[arg(long, value_name = "I>J,...")]
    pub proximity: Option<String>,
    /// Multiplicity sequence of a branch, e.g. 2,1,1
    #[arg(long, value_name = "M1,M2,...")]
    pub multiplicity_seq: Option<String>,
    /// Characteristic pairs of a branch, e.g. "3:2;7:2"
    #[arg(long, value_name = "M:N;...")]
    pub char_pairs: Option<String>,
    /// Puiseux exponents, e.g. 3/2,7/3,2
    #[arg(long, value_name = "P/Q,...")]
    pub puiseux: Option<String>,
}

#[derive(Args, Debug, Default, Clone)]
pub struct InputArgs {
    #[command(flatten)]
    pub source: Source,
    /// Number of points for --proximity (default: the largest index mentioned)
    #[arg(long, value_name = "N", requires = "proximity")]
    pub points: Option<usize>,
    /// Extra free points after a branch given by --multiplicity-seq or --char-pairs
    #[arg(long, value_name = "T", default_value_t = 0)]
    pub t: usize,
}

/// A parsed input, always reduced to a simple ideal.
pub struct Resolved {
    pub ideal: SimpleIdeal,
    pub description: Value,
}

impl InputArgs {
    pub fn resolve(&self) -> Result<Resolved, Failure> {
        let s = &self.source;
        let extra_t = |kind: &str| {
            if self.t > 0 {
                Err(Failure::Parse(format!("--t only applies to branch inputs, not {kind}")))
            } else {
                Ok(())
            }
        };
        if let Some(text) = &s.point_basis {
            extra_t("--point-basis")?;
            let basis = PointBasis::new(integers(text)?)?;
            return Ok(Resolved { description: json!({ "point_basis": text.trim() }), ideal: SimpleIdeal::new(basis) });
        }
        if let Some(text) = &s.proximity {
            extra_t("--proximity")?;
            let relations = relations(text)?;
            let mentioned = relations.iter().map(|&(j, _)| j).max().unwrap_or(1);
            let n = self.points.unwrap_or(mentioned);
            let p = ProximityMatrix::from_relations(n, &relations)?;
            return Ok(Resolved {
                description: json!({ "proximity": text.trim(), "points": n }),
                ideal: SimpleIdeal::from_proximity(p),
            });
        }
        if let Some(text) = &s.multiplicity_seq {
            let ms = MultiplicitySequence::new(integers(text)?)?;
            return Ok(self.branch(json!({ "multiplicity_sequence": text.trim(), "t": self.t }), ms));
        }
        if let Some(text) = &s.char_pairs {
            let cp = CharacteristicPairs::new(pairs(text)?)?;
            let ms = to_sequence(&cp)?;
            return Ok(self.branch(json!({ "characteristic_pairs": text.trim(), "t": self.t }), ms));
        }
        if let Some(text) = &s.puiseux {
            extra_t("--puiseux")?;
            let beta = rationals(text)?;
            let basis = point_basis_from_puiseux(&beta)?;
            return Ok(Resolved { description: json!({ "puiseux": text.trim() }), ideal: SimpleIdeal::new(basis) });
        }
        Err(Failure::Parse(
            "one of --point-basis, --proximity, --multiplicity-seq, --char-pairs, --puiseux is required".into(),
        ))
    }

    fn branch(&self, description: Value, ms: MultiplicitySequence) -> Resolved {
        let basis = jn_core::curve::ideal_from_class(&EquisingularityClass::new(ms, self.t));
        Resolved { ideal: SimpleIdeal::new(basis), description }
    }
}

fn items(text: &str, sep: char) -> impl Iterator<Item = &str> {
    text.split(sep).map(str::trim).filter(|s| !s.is_empty())
}

pub fn integer(text: &str) -> Result<BigInt, Failure> {
    text.trim().parse().map_err(|_| Failure::Parse(format!("not an integer: {:?}", text.trim())))
}

pub fn integers(text: &str) -> Result<Vec<BigInt>, Failure> {
    let v: Vec<BigInt> = items(text, ',').map(integer).collect::<Result<_, _>>()?;
    if v.is_empty() {
        return Err(Failure::Parse("empty integer list".into()));
    }
    Ok(v)
}

pub fn rational(text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(Failure::Parse)
}

pub fn rationals(text: &str) -> Result<Vec<Rational>, Failure> {
    items(text, ',').map(rational).collect()
}

/// `"3:2;7:2"`; the empty string is the smooth branch.
fn pairs(text: &str) -> Result<Vec<(BigInt, BigInt)>, Failure> {
    items(text, ';')
        .map(|p| {
            let (m, n) = p.split_once(':').ok_or_else(|| Failure::Parse(format!("expected m:n, got {p:?}")))?;
            Ok((integer(m)?, integer(n)?))
        })
        .collect()
}

/// `"3>1,6>4"` as `(j, i)` pairs meaning `j ≻ i`.
fn relations(text: &str) -> Result<Vec<(usize, usize)>, Failure> {
    let index =
        |s: &str| s.trim().parse::<usize>().map_err(|_| Failure::Parse(format!("not a point index: {:?}", s.trim())));
    items(text, ',')
        .map(|r| {
            let (j, i) = r.split_once('>').ok_or_else(|| Failure::Parse(format!("expected i>j, got {r:?}")))?;
            Ok((index(j)?, index(i)?))
        })
        .collect()
}

/// Jump list file: one value per line, `#` starts a comment.
pub fn jump_file(content: &str) -> Result<Vec<Rational>, Failure> {
    content.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()).map(rational).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_format() {
        let v = jump_file("# jumps\n5/6\n\n7/6  # second\n4/3\n").unwrap();
        assert_eq!(v.iter().map(|c| c.to_string()).collect::<Vec<_>>(), ["5/6", "7/6", "4/3"]);
        assert!(matches!(jump_file("0.5"), Err(Failure::Parse(_))));
    }

    #[test]
    fn pair_and_relation_grammar() {
        assert_eq!(pairs("3:2; 7:2").unwrap(), vec![(3.into(), 2.into()), (7.into(), 2.into())]);
        assert!(pairs("").unwrap().is_empty());
        assert!(pairs("3-2").is_err());
        assert_eq!(relations("3>1, 6>4").unwrap(), vec![(3, 1), (6, 4)]);
        assert!(relations("3<1").is_err());
    }
}
