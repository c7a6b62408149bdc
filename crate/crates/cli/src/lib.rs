//! Job dispatch, the shipped corpus, and JSON reports for the `apolar`
//! command-line tool.

pub mod corpus;

use std::path::{Path, PathBuf};
use std::time::Instant;

use apolar::bounds::bound_report;
use apolar::ideals::{generator_degree_distribution, saturation_witness_power};
use apolar::io::{parse_ideal, parse_tensor, search_outcome_json, IdealSpec};
use apolar::macaulay::{lexbar_profile, macaulay_coefficients};
use apolar::movefit::{search, verify_candidate, verify_monomial_candidate, SearchConfig, Status};
use apolar::poly::Polynomial;
use apolar::ring::{format_monomial, piece_dimension_u64};
use apolar::{ErrorKind, Ideal, MultiDegree, Tensor};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

/// Environment variable holding the default worker count.
pub const JOBS_ENV: &str = "APOLAR_JOBS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("cannot parse {context}: {message}")]
    Parse { context: String, message: String },

    #[error(transparent)]
    Core(#[from] apolar::Error),

    #[error("invalid job: {0}")]
    Job(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => EXIT_FAILURE,
            CliError::Parse { .. } => EXIT_PARSE,
            CliError::Core(e) => match e.kind() {
                ErrorKind::Parse => EXIT_PARSE,
                ErrorKind::Precondition => EXIT_PRECONDITION,
            },
            CliError::Job(_) => EXIT_PRECONDITION,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            EXIT_PARSE => "parse",
            EXIT_PRECONDITION => "precondition",
            _ => "io",
        }
    }

    /// The machine-readable form written to the error stream.
    pub fn to_json(&self) -> Value {
        json!({"error": {"kind": self.kind(), "message": self.to_string()}})
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Bounds,
    Search,
    Verify,
    Macaulay,
    Corpus,
}

/// Overrides for [`SearchConfig`]; unset fields keep the defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchOverrides {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub horizon: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetry: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub growth: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jobs: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
}

impl SearchOverrides {
    fn config(&self, r: u64) -> SearchConfig {
        let mut c = SearchConfig::new(r)
            .symmetry(self.symmetry.unwrap_or(true))
            .growth(self.growth.unwrap_or(false))
            .jobs(self.jobs.unwrap_or_else(default_jobs));
        if let Some(t) = self.horizon {
            c = c.horizon(t);
        }
        if let Some(b) = self.budget {
            c = c.budget(b);
        }
        c
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MacaulayJob {
    pub r: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lexbar: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorpusAction {
    List,
    Run,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusJob {
    pub action: CorpusAction,
    /// Case names, or `all`. For `list` the first entry is a substring filter.
    #[serde(default)]
    pub names: Vec<String>,
    #[serde(default)]
    pub slow: bool,
}

/// One unit of work, as read from a job file or assembled from flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Job {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tensor: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<PathBuf>,
    #[serde(default)]
    pub search: SearchOverrides,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub macaulay: Option<MacaulayJob>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corpus: Option<CorpusJob>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
}

impl Job {
    pub fn new(command: Command) -> Self {
        Job {
            command,
            tensor: None,
            ideal: None,
            search: SearchOverrides::default(),
            macaulay: None,
            corpus: None,
            output: None,
        }
    }

    /// Reads a job file. Relative paths inside it are taken relative to the
    /// file's directory.
    pub fn from_file(path: &Path) -> Result<Job> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
        let mut job: Job = serde_json::from_str(&text)
            .map_err(|e| CliError::Parse { context: path.display().to_string(), message: e.to_string() })?;
        let base = path.parent().unwrap_or(Path::new("."));
        for p in [&mut job.tensor, &mut job.ideal].into_iter().flatten() {
            if p.is_relative() && base.join(&*p).exists() {
                *p = base.join(&*p);
            }
        }
        if let Some(out) = &mut job.output {
            if out.is_relative() {
                *out = base.join(&*out);
            }
        }
        Ok(job)
    }
}

/// The JSON document produced by a job and the process exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub document: Value,
    pub exit_code: i32,
}

impl Report {
    fn ok(document: Value) -> Self {
        Report { document, exit_code: EXIT_OK }
    }
}

/// `APOLAR_JOBS`, or 0 (all threads) when unset or malformed.
pub fn default_jobs() -> usize {
    std::env::var(JOBS_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(0)
}

/// Reads `path`, falling back to the shipped corpus when no such file exists.
pub fn read_input(path: &Path) -> Result<String> {
    match std::fs::read_to_string(path) {
        Ok(text) => Ok(text),
        Err(e) => {
            let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
            corpus::file(name)
                .or_else(|| corpus::file(&format!("{name}.json")))
                .map(str::to_string)
                .ok_or_else(|| CliError::Io { path: path.display().to_string(), message: e.to_string() })
        }
    }
}

pub fn load_tensor(path: &Path) -> Result<Tensor> {
    let text = read_input(path)?;
    parse_tensor(&text).map_err(|e| CliError::Parse { context: path.display().to_string(), message: e.to_string() })
}

pub fn load_ideal(path: &Path) -> Result<IdealSpec> {
    let text = read_input(path)?;
    parse_ideal(&text).map_err(|e| CliError::Parse { context: path.display().to_string(), message: e.to_string() })
}

fn required<'a, T>(v: &'a Option<T>, what: &str) -> Result<&'a T> {
    v.as_ref().ok_or_else(|| CliError::Job(format!("missing {what}")))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// Runs a job and returns its report. Writing the report is left to the
/// caller; see [`write_report`].
pub fn run(job: &Job) -> Result<Report> {
    match job.command {
        Command::Bounds => {
            let path = required(&job.tensor, "tensor")?;
            let f = load_tensor(path)?;
            Ok(Report::ok(bounds_document(&f, path)?))
        }
        Command::Search => {
            let path = required(&job.tensor, "tensor")?;
            let r = *required(&job.search.r, "r")?;
            let f = load_tensor(path)?;
            let (document, status) = search_document(&f, path, &job.search.config(r))?;
            let exit_code = if status == Status::BudgetExceeded { EXIT_BUDGET } else { EXIT_OK };
            Ok(Report { document, exit_code })
        }
        Command::Verify => {
            let ipath = required(&job.ideal, "ideal")?;
            let tpath = required(&job.tensor, "tensor")?;
            let r = *required(&job.search.r, "r")?;
            let ideal = load_ideal(ipath)?;
            let f = load_tensor(tpath)?;
            Ok(Report::ok(verify_document(&ideal, &f, r, job.search.horizon, ipath, tpath)?))
        }
        Command::Macaulay => Ok(Report::ok(macaulay_document(required(&job.macaulay, "macaulay arguments")?)?)),
        Command::Corpus => {
            let c = required(&job.corpus, "corpus arguments")?;
            match c.action {
                CorpusAction::List => {
                    let filter = c.names.first().map(String::as_str).unwrap_or("");
                    Ok(Report::ok(json!({"command": "corpus", "cases": corpus::list(filter)})))
                }
                CorpusAction::Run => {
                    let jobs = job.search.jobs.unwrap_or_else(default_jobs);
                    let summary = corpus::run(&c.names, c.slow, jobs)?;
                    let exit_code = if summary.failed == 0 { EXIT_OK } else { EXIT_FAILURE };
                    Ok(Report { document: json!({"command": "corpus", "run": to_value(&summary)}), exit_code })
                }
            }
        }
    }
}

/// Writes the report to `job.output`, or returns the text for stdout.
pub fn write_report(job: &Job, report: &Report) -> Result<Option<String>> {
    let text = serde_json::to_string_pretty(&report.document).expect("serializable") + "\n";
    match &job.output {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| CliError::Io { path: p.display().to_string(), message: e.to_string() })?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

fn input_name(p: &Path) -> String {
    p.display().to_string()
}

pub fn bounds_document(f: &Tensor, path: &Path) -> Result<Value> {
    let report = bound_report(f)?;
    Ok(json!({
        "command": "bounds",
        "input": {"tensor": input_name(path), "shape": f.shape().factors(), "degree": f.degree()},
        "report": to_value(&report),
    }))
}

pub fn search_document(f: &Tensor, path: &Path, config: &SearchConfig) -> Result<(Value, Status)> {
    let start = Instant::now();
    let out = search(f, config)?;
    let mut outcome = search_outcome_json(&out, f.shape());
    outcome["statistics"]["wall_time_ms"] = json!(start.elapsed().as_millis() as u64);
    let doc = json!({
        "command": "search",
        "input": {"tensor": input_name(path), "shape": f.shape().factors(), "degree": f.degree()},
        "config": {
            "r": config.r,
            "horizon": out.horizon,
            "symmetry_pruning": config.symmetry_pruning,
            "growth_pruning": config.growth_pruning,
            "jobs": config.jobs,
            "node_budget": config.node_budget,
        },
        "outcome": outcome,
    });
    Ok((doc, out.status))
}

/// Largest graded piece examined when hunting for a saturation witness.
const WITNESS_PIECE_LIMIT: u64 = 1500;

/// A variable certifying that a graded ideal is not saturated, if one is
/// found within the piece-size limit.
fn variable_witness<I: Ideal>(ideal: &I) -> Result<Option<(String, u32)>> {
    let shape = ideal.shape();
    for v in 0..shape.num_vars() {
        let var = shape.variable(v);
        let d = shape.degree_of(&var);
        let mut max_k = 0;
        while max_k < 8 {
            let up = d.add(&MultiDegree::new(vec![max_k as i64 + 1; shape.num_factors()]));
            if piece_dimension_u64(shape, &up)?.is_none_or(|n| n > WITNESS_PIECE_LIMIT) {
                break;
            }
            max_k += 1;
        }
        if let Some(k) = saturation_witness_power(ideal, &Polynomial::monomial(var.clone()), max_k)? {
            return Ok(Some((format_monomial(shape, &var)?, k)));
        }
    }
    Ok(None)
}

pub fn verify_document(
    ideal: &IdealSpec,
    f: &Tensor,
    r: u64,
    horizon: Option<u32>,
    ipath: &Path,
    tpath: &Path,
) -> Result<Value> {
    let t = horizon.unwrap_or(f.degree().total() as u32);
    let (report, distribution, kind, witness) = match ideal {
        IdealSpec::Monomial(i) => {
            (verify_monomial_candidate(i, f, r, t)?, generator_degree_distribution(i, t as i64)?, "monomial", None)
        }
        IdealSpec::Graded(g) => {
            let w = variable_witness(g)?;
            (verify_candidate(g, f, r, t)?, generator_degree_distribution(g, t as i64)?, "graded", w)
        }
    };
    let generators: Vec<Value> = distribution.iter().map(|(d, c)| json!({"degree": d, "count": c})).collect();
    let total: u64 = distribution.values().sum();
    let saturated = match (&report.saturation, &witness) {
        (Some(s), _) => json!(s.saturated),
        (None, Some(_)) => json!(false),
        (None, None) => Value::Null,
    };
    let mut doc = json!({
        "command": "verify",
        "input": {"ideal": input_name(ipath), "tensor": input_name(tpath), "kind": kind},
        "report": to_value(&report),
        "minimal_generators": {"total": total, "by_degree": generators},
        "saturated": saturated,
    });
    if let Some((var, k)) = witness {
        doc["saturation_witness"] = json!({"element": var, "power": k});
    }
    Ok(doc)
}

pub fn macaulay_document(m: &MacaulayJob) -> Result<Value> {
    let mut doc = json!({"command": "macaulay", "r": m.r});
    if m.d.is_none() && m.lexbar.is_none() {
        return Err(CliError::Job("macaulay needs --d or --lexbar".into()));
    }
    if let Some(d) = m.d {
        let dec = macaulay_coefficients(m.r, d)?;
        doc["decomposition"] = json!({"d": d, "coefficients": dec.coefficients, "exponent": dec.exponent()});
    }
    if let Some(degrees) = &m.lexbar {
        let n = *required(&m.n, "n for --lexbar")?;
        doc["lexbar"] = to_value(&lexbar_profile(degrees, n, m.r)?);
    }
    Ok(doc)
}
