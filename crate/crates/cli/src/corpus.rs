//! The shipped instances and their expected outcomes.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;
use std::time::Instant;

use apolar::io::{parse_ideal, parse_tensor};
use apolar::movefit::SearchConfig;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::{bounds_document, search_document, verify_document, CliError, Result};

/// Every corpus file, by name.
pub const FILES: &[(&str, &str)] = &[
    ("catalog.json", include_str!("../corpus/catalog.json")),
    ("mono-4443.json", include_str!("../corpus/mono-4443.json")),
    ("mono-222.json", include_str!("../corpus/mono-222.json")),
    ("mono-2211.json", include_str!("../corpus/mono-2211.json")),
    ("mono-1111.json", include_str!("../corpus/mono-1111.json")),
    ("mono-2221.json", include_str!("../corpus/mono-2221.json")),
    ("mono-2222.json", include_str!("../corpus/mono-2222.json")),
    ("mono-3311.json", include_str!("../corpus/mono-3311.json")),
    ("mono-3321.json", include_str!("../corpus/mono-3321.json")),
    ("mono-3322.json", include_str!("../corpus/mono-3322.json")),
    ("mono-11111.json", include_str!("../corpus/mono-11111.json")),
    ("mono-22111.json", include_str!("../corpus/mono-22111.json")),
    ("mono-33111.json", include_str!("../corpus/mono-33111.json")),
    ("mono-3100.json", include_str!("../corpus/mono-3100.json")),
    ("mono-p2xp1.json", include_str!("../corpus/mono-p2xp1.json")),
    ("tangent-ideal.json", include_str!("../corpus/tangent-ideal.json")),
    ("brank3-tensor.json", include_str!("../corpus/brank3-tensor.json")),
    ("brank3-ideal.json", include_str!("../corpus/brank3-ideal.json")),
    ("wild-cubic.json", include_str!("../corpus/wild-cubic.json")),
    ("wild-cubic-ideal.json", include_str!("../corpus/wild-cubic-ideal.json")),
];

pub fn file(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseKind {
    Bounds,
    Search,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Size {
    Fast,
    Slow,
}

/// A corpus instance. `expect` maps JSON pointers into the report to the
/// values they must hold.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Case {
    pub name: String,
    pub kind: CaseKind,
    pub size: Size,
    pub tensor: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub horizon: Option<u32>,
    pub description: String,
    pub expect: BTreeMap<String, Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Catalog {
    cases: Vec<Case>,
}

pub fn catalog() -> &'static [Case] {
    static CATALOG: OnceLock<Vec<Case>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let c: Catalog = serde_json::from_str(file("catalog.json").expect("shipped")).expect("catalog parses");
        c.cases
    })
}

pub fn case(name: &str) -> Option<&'static Case> {
    catalog().iter().find(|c| c.name == name)
}

/// Cases whose name or description contains `filter`.
pub fn list(filter: &str) -> Vec<&'static Case> {
    catalog().iter().filter(|c| c.name.contains(filter) || c.description.contains(filter)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub pointer: String,
    pub expected: Value,
    pub actual: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub kind: CaseKind,
    pub size: Size,
    pub pass: bool,
    pub elapsed_ms: u64,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RunSummary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: Vec<String>,
    pub cases: Vec<CaseResult>,
}

fn load_tensor(name: &str) -> Result<apolar::Tensor> {
    let text = file(name).ok_or_else(|| CliError::Job(format!("no corpus file {name}")))?;
    parse_tensor(text).map_err(|e| CliError::Parse { context: name.into(), message: e.to_string() })
}

/// The report a case produces, with `jobs` workers for searches.
pub fn case_document(case: &Case, jobs: usize) -> Result<Value> {
    let f = load_tensor(&case.tensor)?;
    let tpath = Path::new(&case.tensor);
    let need_r = || case.r.ok_or_else(|| CliError::Job(format!("case {} has no r", case.name)));
    match case.kind {
        CaseKind::Bounds => bounds_document(&f, tpath),
        CaseKind::Search => {
            let mut config = SearchConfig::new(need_r()?).jobs(jobs);
            if let Some(t) = case.horizon {
                config = config.horizon(t);
            }
            Ok(search_document(&f, tpath, &config)?.0)
        }
        CaseKind::Verify => {
            let iname = case.ideal.as_deref().ok_or_else(|| CliError::Job(format!("case {} has no ideal", case.name)))?;
            let text = file(iname).ok_or_else(|| CliError::Job(format!("no corpus file {iname}")))?;
            let ideal = parse_ideal(text).map_err(|e| CliError::Parse { context: iname.into(), message: e.to_string() })?;
            verify_document(&ideal, &f, need_r()?, case.horizon, Path::new(iname), tpath)
        }
    }
}

/// Compares a report against the case's expectations.
pub fn check(case: &Case, document: &Value) -> Vec<Mismatch> {
    case.expect
        .iter()
        .filter_map(|(pointer, expected)| {
            let actual = document.pointer(pointer).cloned();
            (actual.as_ref() != Some(expected)).then(|| Mismatch { pointer: pointer.clone(), expected: expected.clone(), actual })
        })
        .collect()
}

pub fn run_case(case: &Case, jobs: usize) -> CaseResult {
    let start = Instant::now();
    let (mismatches, error) = match case_document(case, jobs) {
        Ok(doc) => (check(case, &doc), None),
        Err(e) => (Vec::new(), Some(e.to_string())),
    };
    CaseResult {
        name: case.name.clone(),
        kind: case.kind,
        size: case.size,
        pass: mismatches.is_empty() && error.is_none(),
        elapsed_ms: start.elapsed().as_millis() as u64,
        mismatches,
        error,
    }
}

/// Runs the named cases; `all` (or no names) selects every fast case, and
/// slow ones too when `slow` is set. Named cases run regardless of size.
pub fn run(names: &[String], slow: bool, jobs: usize) -> Result<RunSummary> {
    let mut selected: Vec<&Case> = Vec::new();
    let mut summary = RunSummary::default();
    if names.is_empty() || names.iter().any(|n| n == "all") {
        for c in catalog() {
            if c.size == Size::Slow && !slow {
                summary.skipped.push(c.name.clone());
            } else {
                selected.push(c);
            }
        }
    } else {
        for n in names {
            selected.push(case(n).ok_or_else(|| CliError::Job(format!("unknown corpus case {n:?}")))?);
        }
    }
    for c in selected {
        let result = run_case(c, jobs);
        if result.pass {
            summary.passed += 1;
        } else {
            summary.failed += 1;
        }
        summary.cases.push(result);
    }
    Ok(summary)
}
