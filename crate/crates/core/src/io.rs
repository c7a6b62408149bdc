//! JSON formats for tensors, ideals, monomials and search outcomes.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::apolarity::{Convention, Tensor};
use crate::error::{Error, Result};
use crate::ideals::{GradedIdeal, MonomialIdeal};
use crate::linalg::Q;
use crate::movefit::SearchOutcome;
use crate::poly::Polynomial;
use crate::ring::{format_monomial, parse_monomial, FactorShape, Monomial, MultiDegree};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConventionJson {
    #[default]
    Divided,
    Plain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub exp: Vec<Vec<u32>>,
    pub num: String,
    #[serde(default = "one_string")]
    pub den: String,
}

fn one_string() -> String {
    "1".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorJson {
    pub shape: Vec<u32>,
    pub degree: Vec<i64>,
    #[serde(default)]
    pub convention: ConventionJson,
    pub terms: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialJson {
    pub exponents: Vec<Vec<u32>>,
}

/// A monomial given either in text form (`a0^2*a1|b1`) or as grouped
/// exponents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonomialSpec {
    Text(String),
    Exponents(MonomialJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorJson {
    pub degree: Vec<i64>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    pub shape: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monomial_generators: Option<Vec<MonomialSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<GeneratorJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
}

/// A parsed ideal file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealSpec {
    Monomial(MonomialIdeal),
    Graded(GradedIdeal),
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim().parse::<BigInt>().map_err(|_| Error::parse(format!("not an integer: {s:?}")))
}

fn parse_rational(num: &str, den: &str) -> Result<Q> {
    let d = parse_int(den)?;
    if d.is_zero() {
        return Err(Error::parse("zero denominator"));
    }
    Ok(Q::new(parse_int(num)?, d))
}

fn term_json(shape: &FactorShape, m: &Monomial, c: &Q) -> TermJson {
    TermJson { exp: shape.group(m), num: c.numer().to_string(), den: c.denom().to_string() }
}

fn parse_shape(factors: &[u32]) -> Result<FactorShape> {
    FactorShape::new(factors.to_vec())
}

pub fn monomial_from_json(shape: &FactorShape, m: &MonomialJson) -> Result<Monomial> {
    shape.monomial(&m.exponents)
}

pub fn monomial_to_json(shape: &FactorShape, m: &Monomial) -> MonomialJson {
    MonomialJson { exponents: shape.group(m) }
}

fn monomial_from_spec(shape: &FactorShape, m: &MonomialSpec) -> Result<Monomial> {
    match m {
        MonomialSpec::Text(s) => parse_monomial(shape, s),
        MonomialSpec::Exponents(j) => monomial_from_json(shape, j),
    }
}

pub fn tensor_from_json(t: &TensorJson) -> Result<Tensor> {
    let shape = parse_shape(&t.shape)?;
    let mut terms = Vec::with_capacity(t.terms.len());
    for term in &t.terms {
        terms.push((shape.monomial(&term.exp)?, parse_rational(&term.num, &term.den)?));
    }
    let convention = match t.convention {
        ConventionJson::Divided => Convention::Divided,
        ConventionJson::Plain => Convention::Plain,
    };
    Tensor::with_convention(shape, MultiDegree::new(t.degree.clone()), convention, terms)
}

/// Always written in the divided-power convention.
pub fn tensor_to_json(t: &Tensor) -> TensorJson {
    TensorJson {
        shape: t.shape().factors().to_vec(),
        degree: t.degree().entries().to_vec(),
        convention: ConventionJson::Divided,
        terms: t.terms().map(|(m, c)| term_json(t.shape(), m, c)).collect(),
        description: None,
    }
}

pub fn parse_tensor(text: &str) -> Result<Tensor> {
    let j: TensorJson = serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
    tensor_from_json(&j)
}

pub fn print_tensor(t: &Tensor) -> String {
    serde_json::to_string_pretty(&tensor_to_json(t)).expect("serializable")
}

fn polynomial_from_terms(shape: &FactorShape, terms: &[TermJson]) -> Result<Polynomial> {
    let mut p = Polynomial::zero();
    for term in terms {
        p.add_term(shape.monomial(&term.exp)?, parse_rational(&term.num, &term.den)?);
    }
    Ok(p)
}

pub fn ideal_from_json(j: &IdealJson) -> Result<IdealSpec> {
    let shape = parse_shape(&j.shape)?;
    match (&j.monomial_generators, &j.generators) {
        (Some(gens), None) => {
            let ms = gens.iter().map(|g| monomial_from_spec(&shape, g)).collect::<Result<Vec<_>>>()?;
            Ok(IdealSpec::Monomial(MonomialIdeal::try_new(shape, ms)?))
        }
        (None, Some(gens)) => {
            let mut tagged = Vec::with_capacity(gens.len());
            for g in gens {
                tagged.push((MultiDegree::new(g.degree.clone()), polynomial_from_terms(&shape, &g.terms)?));
            }
            Ok(IdealSpec::Graded(GradedIdeal::new(shape, tagged)?))
        }
        _ => Err(Error::parse("an ideal needs exactly one of monomial_generators or generators")),
    }
}

pub fn monomial_ideal_to_json(i: &MonomialIdeal) -> IdealJson {
    let shape = crate::ideals::Ideal::shape(i);
    IdealJson {
        shape: shape.factors().to_vec(),
        monomial_generators: Some(
            i.generators().iter().map(|m| MonomialSpec::Exponents(monomial_to_json(shape, m))).collect(),
        ),
        generators: None,
        description: None,
    }
}

pub fn graded_ideal_to_json(i: &GradedIdeal) -> IdealJson {
    let shape = crate::ideals::Ideal::shape(i);
    IdealJson {
        shape: shape.factors().to_vec(),
        monomial_generators: None,
        generators: Some(
            i.generators()
                .iter()
                .map(|(d, p)| GeneratorJson {
                    degree: d.entries().to_vec(),
                    terms: p.terms().map(|(m, c)| term_json(shape, m, c)).collect(),
                })
                .collect(),
        ),
        description: None,
    }
}

pub fn ideal_to_json(i: &IdealSpec) -> IdealJson {
    match i {
        IdealSpec::Monomial(m) => monomial_ideal_to_json(m),
        IdealSpec::Graded(g) => graded_ideal_to_json(g),
    }
}

pub fn parse_ideal(text: &str) -> Result<IdealSpec> {
    let j: IdealJson = serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
    ideal_from_json(&j)
}

pub fn print_ideal(i: &IdealSpec) -> String {
    serde_json::to_string_pretty(&ideal_to_json(i)).expect("serializable")
}

/// Text form of a monomial, for reports.
pub fn monomial_text(shape: &FactorShape, m: &Monomial) -> String {
    format_monomial(shape, m).unwrap_or_else(|_| format!("{:?}", m.exponents()))
}

pub fn search_outcome_json(out: &SearchOutcome, shape: &FactorShape) -> Value {
    let mut v = json!({
        "status": out.status,
        "r": out.r,
        "horizon": out.horizon,
        "note": out.note(),
        "statistics": out.stats,
    });
    if let Some(i) = &out.candidate {
        v["candidate"] = serde_json::to_value(monomial_ideal_to_json(i)).expect("serializable");
    }
    if let Some(pieces) = &out.pieces {
        v["pieces"] = pieces
            .iter()
            .map(|p| {
                json!({
                    "degree": p.degree,
                    "monomials": p.monomials.iter().map(|m| monomial_text(shape, m)).collect::<Vec<_>>(),
                })
            })
            .collect();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn tensor_round_trip() {
        let text = r#"{"shape":[1,1],"degree":[2,1],"convention":"plain",
            "terms":[{"exp":[[2,0],[1,0]],"num":"3","den":"2"},{"exp":[[1,1],[0,1]],"num":"-1"}]}"#;
        let t = parse_tensor(text).unwrap();
        // Plain x0^2 carries a factor 2! in divided powers.
        assert_eq!(t.coefficient(&Monomial::new(vec![2, 0, 1, 0])), q(3));
        let again = parse_tensor(&print_tensor(&t)).unwrap();
        assert_eq!(t, again);
    }

    #[test]
    fn rejects_unknown_fields_and_bad_numbers() {
        assert!(parse_tensor(r#"{"shape":[1],"degree":[1],"terms":[],"extra":1}"#).is_err());
        assert!(parse_tensor(r#"{"shape":[1],"degree":[1],"terms":[{"exp":[[1,0]],"num":"x"}]}"#).is_err());
        assert!(parse_tensor(r#"{"shape":[1],"degree":[1],"terms":[{"exp":[[1,0]],"num":"1","den":"0"}]}"#).is_err());
        assert!(parse_tensor(r#"{"shape":[1],"degree":[2],"terms":[{"exp":[[1,0]],"num":"1"}]}"#).is_err());
    }

    #[test]
    fn ideal_round_trip() {
        let text = r#"{"shape":[2,1],"monomial_generators":["a0^2|1",{"exponents":[[0,1,0],[0,1]]}]}"#;
        let i = parse_ideal(text).unwrap();
        assert_eq!(parse_ideal(&print_ideal(&i)).unwrap(), i);
        let g = r#"{"shape":[1],"generators":[{"degree":[2],"terms":[{"exp":[[2,0]],"num":"1"},{"exp":[[0,2]],"num":"-1","den":"3"}]}]}"#;
        let i = parse_ideal(g).unwrap();
        assert!(matches!(i, IdealSpec::Graded(_)));
        assert_eq!(parse_ideal(&print_ideal(&i)).unwrap(), i);
        assert!(parse_ideal(r#"{"shape":[1]}"#).is_err());
    }
}
