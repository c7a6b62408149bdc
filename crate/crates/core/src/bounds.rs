//! Border-rank bounds for monomials, and necessary tests for minimal border
//! rank.

use rayon::prelude::*;
use serde::Serialize;

use crate::apolarity::{bounded_compositions, catalecticant_lower_bound, is_concise, Tensor};
use crate::binomial::binomial_i;
use crate::error::{Error, Result};
use crate::ideals::{minimal_generator_count, ApolarIdeal, Ideal};
use crate::linalg::Subspace;
use crate::macaulay::lexbar_growth;
use crate::poly::Polynomial;
use crate::ring::{enumerate_monomials, piece_dimension_u64, FactorShape, Monomial, MultiDegree};

fn dim_pn(n: u32, d: i64) -> u64 {
    binomial_i(n as i64 + d, n as i64)
}

/// The chart choice: one dropped variable per factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartWitness {
    /// Global index of the dropped variable of each factor.
    pub dropped: Vec<usize>,
    pub value: u64,
}

/// Border rank is at most the product of `a_i + 1` over the variables left
/// after dropping the largest exponent in each factor.
pub fn upper_bound_monomial(f: &Tensor) -> Result<ChartWitness> {
    let a = f.expect_monomial()?;
    let shape = f.shape();
    let mut dropped = Vec::with_capacity(shape.num_factors());
    let mut value: u64 = 1;
    for j in 0..shape.num_factors() {
        let vars = shape.factor_vars(j);
        // First variable attaining the maximum.
        let drop = vars.clone().fold(vars.start, |best, v| if a.exponents()[v] > a.exponents()[best] { v } else { best });
        dropped.push(drop);
        for v in vars.filter(|&v| v != drop) {
            value = value.saturating_mul(a.exponents()[v] as u64 + 1);
        }
    }
    Ok(ChartWitness { dropped, value })
}

/// One degree of the disjoint-module argument and its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisjointModuleWitness {
    /// The factor whose variables carry the direct-sum decomposition.
    pub factor: usize,
    /// The full degree `D`; its `factor` entry is `d`.
    pub degree: MultiDegree,
    pub d: u64,
    /// The largest rank excluded at this degree.
    pub ruled_out: u64,
    pub dim_apolar: u64,
    pub dim_piece: u64,
    pub dim_apolar_next: u64,
    pub dim_piece_next: u64,
    /// `codim(I_D ⊂ F^⊥_D)` and the same one degree up, at `ruled_out`.
    pub codim: u64,
    pub codim_next: u64,
    /// Lex-bar growth for `codim`.
    pub growth: u64,
    /// Part of `F^⊥` one degree up not reached from degree `D`.
    pub extra: u64,
    /// Summand degrees `d - a_i - 1` with multiplicities.
    pub summands: Vec<(u32, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisjointModuleBound {
    pub value: u64,
    /// The best degree; `None` when no rank above the catalecticant bound is
    /// excluded.
    pub witness: Option<DisjointModuleWitness>,
    /// Every degree that excludes some rank, best first.
    pub scans: Vec<DisjointModuleWitness>,
}

struct FactorData {
    n: u32,
    exps: Vec<u32>,
    /// Generator degrees `a_i + 1`.
    gens: Vec<i64>,
}

impl FactorData {
    fn apolar_dim(&self, d: i64) -> u64 {
        if d < 0 {
            return 0;
        }
        dim_pn(self.n, d) - bounded_compositions(&self.exps, d as u64)
    }

    /// Monomials of degree `d` divisible by some `alpha_i^{a_i + 1}` with
    /// `a_i + 1 <= limit`.
    fn image_dim(&self, d: i64, limit: i64) -> u64 {
        let shape = FactorShape::projective_space(self.n);
        let ms = enumerate_monomials(&shape, &MultiDegree::new(vec![d])).expect("single factor");
        ms.iter()
            .filter(|m| {
                m.exponents().iter().zip(&self.gens).any(|(&e, &g)| g <= limit && e as i64 >= g)
            })
            .count() as u64
    }
}

/// The direct-sum data of `F^⊥` at `P^n`-degree `d`, each summand repeated
/// `mult` times. `None` when two generators meet in degree `d`.
pub(crate) struct DegreeSetup {
    n: u32,
    summands: Vec<(u32, u64)>,
    expanded: Vec<u32>,
    dim_s: u64,
    dim_s_next: u64,
    apolar: u64,
    apolar_next: u64,
    extra: u64,
}

impl DegreeSetup {
    fn new(fd: &FactorData, d: i64, mult: u64) -> Option<Self> {
        let present: Vec<i64> = fd.gens.iter().copied().filter(|&g| g <= d).collect();
        for (x, &g) in present.iter().enumerate() {
            if present[x + 1..].iter().any(|&h| g + h <= d) {
                return None;
            }
        }
        let mut degs: Vec<u32> = present.iter().map(|&g| (d - g) as u32).collect();
        degs.sort_unstable();
        let mut summands: Vec<(u32, u64)> = Vec::new();
        for &s in &degs {
            match summands.last_mut() {
                Some((t, m)) if *t == s => *m += mult,
                _ => summands.push((s, mult)),
            }
        }
        let expanded = summands.iter().flat_map(|&(s, m)| std::iter::repeat_n(s, m as usize)).collect();
        let apolar_next = fd.apolar_dim(d + 1) * mult;
        Some(DegreeSetup {
            n: fd.n,
            summands,
            expanded,
            dim_s: dim_pn(fd.n, d) * mult,
            dim_s_next: dim_pn(fd.n, d + 1) * mult,
            apolar: fd.apolar_dim(d) * mult,
            apolar_next,
            extra: apolar_next - fd.image_dim(d + 1, d) * mult,
        })
    }

    /// `(codim, codim_next, growth)` when rank `r` is excluded.
    fn excludes(&self, r: u64) -> Option<(u64, u64, u64)> {
        let ideal_dim = self.dim_s - r.min(self.dim_s);
        let ideal_next = self.dim_s_next - r.min(self.dim_s_next);
        if ideal_dim > self.apolar || ideal_next > self.apolar_next {
            // The catalecticant already rules this out.
            return None;
        }
        let c = self.apolar - ideal_dim;
        let c_next = self.apolar_next - ideal_next;
        let growth = lexbar_growth(&self.expanded, self.n, c).expect("codimension within range");
        (growth + self.extra < c_next).then_some((c, c_next, growth))
    }
}

fn factor_data(shape: &FactorShape, a: &Monomial, j: usize) -> FactorData {
    let exps = a.exponents()[shape.factor_vars(j)].to_vec();
    let gens = exps.iter().map(|&e| e as i64 + 1).collect();
    FactorData { n: shape.factors()[j], exps, gens }
}

/// The Lex-bar test at a full degree `D`, splitting along factor `j`: true
/// when no monomial ideal inside `F^⊥` can have `dim (S/I) = min(r, dim S)`
/// in both `D` and `D + e_j`. Degrees whose other coordinates leave the box
/// of smallest exponents are never excluded.
pub(crate) fn lexbar_excludes(shape: &FactorShape, a: &Monomial, degree: &MultiDegree, j: usize, r: u64) -> bool {
    let mut others = degree.clone();
    others.0[j] = 0;
    for k in (0..shape.num_factors()).filter(|&k| k != j) {
        let min = a.exponents()[shape.factor_vars(k)].iter().copied().min().unwrap_or(0) as i64;
        if others.0[k] > min {
            return false;
        }
    }
    let Ok(Some(mult)) = piece_dimension_u64(shape, &others) else {
        return false;
    };
    let fd = factor_data(shape, a, j);
    DegreeSetup::new(&fd, degree.0[j], mult).is_some_and(|s| s.excludes(r).is_some())
}

/// The Lex-bar lower bound for a monomial.
///
/// For each factor `P^n` and each degree `D_Y` of the other factors inside
/// the box of their smallest exponents, `F^⊥` in degree `(d, D_Y)` splits as
/// a direct sum of `alpha_i^{a_i+1} * S_{d - a_i - 1}` pieces whenever no
/// two generators meet in degree `d`. A rank `r` is excluded when the
/// largest possible codimension of `I_{d+1}` in `F^⊥_{d+1}` falls short of
/// what `min(r, dim S)` demands.
pub fn disjoint_module_lower_bound(f: &Tensor) -> Result<DisjointModuleBound> {
    let a = f.expect_monomial()?.clone();
    let shape = f.shape().clone();
    let upper = upper_bound_monomial(f)?.value;
    let (cat, _) = catalecticant_lower_bound(f)?;

    let mut jobs: Vec<(usize, MultiDegree, i64)> = Vec::new();
    for j in 0..shape.num_factors() {
        let exps = &a.exponents()[shape.factor_vars(j)];
        let total: i64 = exps.iter().map(|&e| e as i64).sum();
        let mut corner = vec![0i64; shape.num_factors()];
        for k in (0..shape.num_factors()).filter(|&k| k != j) {
            corner[k] = a.exponents()[shape.factor_vars(k)].iter().copied().min().unwrap_or(0) as i64;
        }
        for dy in MultiDegree::new(corner).lower_box() {
            for d in 0..=total + 1 {
                let mut full = dy.clone();
                full.0[j] = d;
                jobs.push((j, full, d));
            }
        }
    }

    let mut scans: Vec<DisjointModuleWitness> = jobs
        .par_iter()
        .filter_map(|(j, full, d)| {
            let j = *j;
            let fd = factor_data(&shape, &a, j);
            let mut others = full.clone();
            others.0[j] = 0;
            let mult = piece_dimension_u64(&shape, &others).ok()??;
            let setup = DegreeSetup::new(&fd, *d, mult)?;
            let (r, (c, c_next, growth)) =
                (cat.max(1)..upper).rev().find_map(|r| setup.excludes(r).map(|x| (r, x)))?;
            Some(DisjointModuleWitness {
                factor: j,
                degree: full.clone(),
                d: *d as u64,
                ruled_out: r,
                dim_apolar: setup.apolar,
                dim_piece: setup.dim_s,
                dim_apolar_next: setup.apolar_next,
                dim_piece_next: setup.dim_s_next,
                codim: c,
                codim_next: c_next,
                growth,
                extra: setup.extra,
                summands: setup.summands.clone(),
            })
        })
        .collect();
    // Best first; ties go to the smaller factor, then smaller degree.
    scans.sort_by(|x, y| {
        y.ruled_out.cmp(&x.ruled_out).then(x.factor.cmp(&y.factor)).then(x.degree.total().cmp(&y.degree.total())).then(x.degree.cmp(&y.degree))
    });
    let witness = scans.first().filter(|w| w.ruled_out + 1 > cat).cloned();
    let value = witness.as_ref().map_or(cat, |w| w.ruled_out + 1);
    Ok(DisjointModuleBound { value, witness, scans })
}

fn supported_closed_form(shape: &FactorShape) -> bool {
    let twos = shape.factors().iter().filter(|&&a| a == 2).count();
    shape.factors().iter().all(|&a| a == 1 || a == 2) && twos <= 1
}

/// Exact border rank of a monomial on `P^2 x (P^1)^k`, on `(P^1)^k`, or on
/// `P^2`: the product over factors of `(a + 1)` over all but the largest
/// exponent.
pub fn closed_form_border_rank(f: &Tensor) -> Result<u64> {
    f.expect_monomial()?;
    if !supported_closed_form(f.shape()) {
        return Err(Error::UnsupportedShape(format!(
            "closed form needs P^2 x (P^1)^k or (P^1)^k, got {}",
            f.shape()
        )));
    }
    Ok(upper_bound_monomial(f)?.value)
}

/// Exact border rank when `a_0 >= a_1 + ... + a_n - 1` (exponents sorted
/// descending).
pub fn almost_unbalanced_check(f: &Tensor) -> Result<Option<u64>> {
    let a = f.expect_monomial()?;
    if f.shape().num_factors() != 1 {
        return Err(Error::UnsupportedShape(format!("expected a single factor, got {}", f.shape())));
    }
    let mut e: Vec<u64> = a.exponents().iter().map(|&x| x as u64).collect();
    e.sort_unstable_by(|x, y| y.cmp(x));
    let rest: u64 = e[1..].iter().sum();
    if e[0] + 1 >= rest {
        Ok(Some(e[1..].iter().map(|x| x + 1).product()))
    } else {
        Ok(None)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "necessary condition holds")]
    NecessaryConditionHolds,
    #[serde(rename = "not minimal border rank")]
    NotMinimalBorderRank,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityTest {
    pub value: u64,
    pub threshold: u64,
    pub verdict: Verdict,
}

/// On `(P^a)^w`: a concise tensor of minimal border rank has at least `a`
/// minimal generators of `F^⊥` in degree `L`.
pub fn minimal_border_rank_generator_test(f: &Tensor) -> Result<MinimalityTest> {
    let shape = f.shape();
    let a = shape.factors()[0];
    if shape.factors().iter().any(|&x| x != a) {
        return Err(Error::UnsupportedShape(format!("expected a power of one P^a, got {shape}")));
    }
    if !is_concise(f)? {
        return Err(Error::NotConcise);
    }
    let count = minimal_generator_count(&ApolarIdeal(f), f.degree())?;
    let threshold = a as u64;
    let verdict = if count >= threshold { Verdict::NecessaryConditionHolds } else { Verdict::NotMinimalBorderRank };
    Ok(MinimalityTest { value: count, threshold, verdict })
}

/// `dim S_L / (F^⊥_{L - e_j} * S_{e_j})` for a factor `j` of maximal
/// dimension; below `dim S_{e_j}` the tensor is not of minimal border rank.
pub fn minimal_border_rank_quotient_test(f: &Tensor, j: usize) -> Result<MinimalityTest> {
    let shape = f.shape();
    if j >= shape.num_factors() {
        return Err(Error::OutOfRange(format!("factor {j} of {shape}")));
    }
    let max = *shape.factors().iter().max().expect("non-empty shape");
    if shape.factors()[j] != max {
        return Err(Error::OutOfRange(format!("factor {j} is not of maximal dimension in {shape}")));
    }
    if !is_concise(f)? {
        return Err(Error::NotConcise);
    }
    let l = f.degree();
    let e = shape.unit_degree(j);
    let lower = l.sub(&e);
    let ideal = ApolarIdeal(f);
    let (basis, _) = ideal.piece(l)?;
    let mut rows = Vec::new();
    if lower.is_effective() {
        let (lb, ls) = ideal.piece(&lower)?;
        for v in ls.basis() {
            let p = Polynomial::from_vector(v, &lb);
            for var in shape.factor_vars(j) {
                rows.push(p.mul_monomial(&shape.variable(var)).to_vector(&basis)?);
            }
        }
    }
    let span = Subspace::from_spanning(rows, basis.len());
    let value = (basis.len() - span.dim()) as u64;
    let threshold = max as u64 + 1;
    let verdict = if value >= threshold { Verdict::NecessaryConditionHolds } else { Verdict::NotMinimalBorderRank };
    Ok(MinimalityTest { value, threshold, verdict })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Catalecticant,
    DisjointModule,
    ClosedForm,
    AlmostUnbalanced,
    Chart,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: u64,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalecticantWitness {
    pub value: u64,
    pub degree: MultiDegree,
}

/// Lower and upper border-rank bounds with their witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub lower: Bound,
    pub upper: Option<Bound>,
    pub catalecticant: CatalecticantWitness,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disjoint_module: Option<DisjointModuleBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chart: Option<ChartWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub almost_unbalanced: Option<u64>,
    pub concise: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator_test: Option<MinimalityTest>,
}

pub fn bound_report(f: &Tensor) -> Result<BoundReport> {
    let (cat, cat_degree) = catalecticant_lower_bound(f)?;
    let concise = is_concise(f)?;
    let catalecticant = CatalecticantWitness { value: cat, degree: cat_degree };
    let mut lower = Bound { value: cat, provenance: Provenance::Catalecticant };
    let mut raise = |value: u64, provenance: Provenance| {
        if value > lower.value {
            lower = Bound { value, provenance };
        }
    };

    if f.as_monomial().is_none() {
        let generator_test = if concise && f.shape().factors().windows(2).all(|w| w[0] == w[1]) {
            Some(minimal_border_rank_generator_test(f)?)
        } else {
            None
        };
        return Ok(BoundReport {
            lower,
            upper: None,
            catalecticant,
            disjoint_module: None,
            chart: None,
            closed_form: None,
            almost_unbalanced: None,
            concise,
            generator_test,
        });
    }

    let chart = upper_bound_monomial(f)?;
    let dm = disjoint_module_lower_bound(f)?;
    raise(dm.value, Provenance::DisjointModule);
    let almost_unbalanced =
        if f.shape().num_factors() == 1 { almost_unbalanced_check(f)? } else { None };
    if let Some(v) = almost_unbalanced {
        raise(v, Provenance::AlmostUnbalanced);
    }
    let closed_form = closed_form_border_rank(f).ok();
    if let Some(v) = closed_form {
        raise(v, Provenance::ClosedForm);
    }
    let upper_provenance = if closed_form.is_some() { Provenance::ClosedForm } else { Provenance::Chart };
    Ok(BoundReport {
        lower,
        upper: Some(Bound { value: chart.value, provenance: upper_provenance }),
        catalecticant,
        disjoint_module: Some(dm),
        chart: Some(chart),
        closed_form,
        almost_unbalanced,
        concise,
        generator_test: None,
    })
}

/// Convenience constructor for a monomial tensor from grouped exponents.
pub fn monomial_tensor(factors: &[u32], groups: &[Vec<u32>]) -> Result<Tensor> {
    let shape = FactorShape::new(factors.to_vec())?;
    let m: Monomial = shape.monomial(groups)?;
    Tensor::monomial(shape, m)
}
