//! The move-fit search: is there a monomial ideal `I ⊂ F^⊥` with
//! `dim (S/I)_D = min(r, dim S_D)` in every degree up to a horizon?
//!
//! Degrees are processed in increasing total degree, ties broken
//! lexicographically. In each degree the piece `I_D` must contain every
//! variable multiple of the pieces already chosen (the forced monomials) and
//! is completed by subsets of the remaining `F^⊥_D` monomials, tried in
//! descending grevlex. Exhaustion proves border rank `> r`; a completed
//! ideal is only a candidate, since nothing here decides whether it is a
//! limit of saturated ideals of points.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering as AtomicOrdering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::apolarity::Tensor;
use crate::bounds::lexbar_excludes;
use crate::error::{Error, Result};
use crate::ideals::{contained_in_apolar, HilbertValue, Ideal, MonomialIdeal};
use crate::ring::{enumerate_monomials, grevlex, piece_dimension, FactorShape, Monomial, MultiDegree};

/// `min(r, dim S_D)`.
pub fn generic_hilbert(shape: &FactorShape, r: u64, d: &MultiDegree) -> Result<u64> {
    let dim = piece_dimension(shape, d)?;
    Ok(if dim < r.into() { num_traits::ToPrimitive::to_u64(&dim).expect("below r") } else { r })
}

/// Largest symmetry group enumerated for pruning; any subset is sound.
const MAX_GROUP: usize = 5040;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub r: u64,
    /// Highest total degree examined; `None` means the total degree of `L`.
    pub horizon: Option<u32>,
    pub symmetry_pruning: bool,
    pub growth_pruning: bool,
    /// Worker count; `0` uses the global thread pool size.
    pub jobs: usize,
    pub node_budget: Option<u64>,
}

impl SearchConfig {
    pub fn new(r: u64) -> Self {
        SearchConfig { r, horizon: None, symmetry_pruning: true, growth_pruning: false, jobs: 1, node_budget: None }
    }

    pub fn horizon(mut self, t: u32) -> Self {
        self.horizon = Some(t);
        self
    }

    pub fn symmetry(mut self, on: bool) -> Self {
        self.symmetry_pruning = on;
        self
    }

    pub fn growth(mut self, on: bool) -> Self {
        self.growth_pruning = on;
        self
    }

    pub fn jobs(mut self, k: usize) -> Self {
        self.jobs = k;
        self
    }

    pub fn budget(mut self, nodes: u64) -> Self {
        self.node_budget = Some(nodes);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Exhausted,
    Found,
    BudgetExceeded,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Prunings {
    /// Forced monomials already exceed the required dimension.
    pub overfull: u64,
    /// Too few `F^⊥` monomials left to reach the required dimension.
    pub insufficient: u64,
    /// A placement forces too much in a later degree.
    pub forward: u64,
    pub symmetry: u64,
    pub growth: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Monomial placements.
    pub nodes: u64,
    pub prunings: Prunings,
    pub tasks: usize,
    pub group_order: usize,
    pub wall_time_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub degree: MultiDegree,
    pub monomials: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: Status,
    pub r: u64,
    pub horizon: u32,
    /// On `Found`: the pieces `I_D` for every degree up to the horizon.
    pub pieces: Option<Vec<Piece>>,
    /// On `Found`: the ideal generated by those pieces.
    pub candidate: Option<MonomialIdeal>,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn note(&self) -> String {
        match self.status {
            Status::Exhausted => format!("no monomial ideal fits; border rank > {}", self.r),
            Status::Found => format!(
                "candidate up to degree {}; flat-limit condition not verified",
                self.horizon
            ),
            Status::BudgetExceeded => "node budget exhausted before a decision".into(),
        }
    }
}

struct Level {
    degree: MultiDegree,
    basis: Vec<Monomial>,
    required: usize,
    /// Indices of `F^⊥_D` monomials, ascending.
    candidates: Vec<usize>,
    in_apolar: Vec<bool>,
    /// For each basis monomial, its variable multiples inside the horizon.
    succ: Vec<Vec<(usize, usize)>>,
    /// Image of each basis index under each group element.
    sym: Vec<Vec<u32>>,
    growth_ok: bool,
}

struct Problem {
    levels: Vec<Level>,
}

fn symmetry_group(shape: &FactorShape, a: &Monomial) -> Vec<Vec<usize>> {
    // Classes of variables within a factor sharing an exponent.
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for j in 0..shape.num_factors() {
        let mut by_exp: Vec<(u32, Vec<usize>)> = Vec::new();
        for v in shape.factor_vars(j) {
            let e = a.exponents()[v];
            match by_exp.iter_mut().find(|(x, _)| *x == e) {
                Some((_, vs)) => vs.push(v),
                None => by_exp.push((e, vec![v])),
            }
        }
        classes.extend(by_exp.into_iter().map(|(_, vs)| vs).filter(|vs| vs.len() > 1));
    }
    let n = shape.num_vars();
    let mut group: Vec<Vec<usize>> = vec![(0..n).collect()];
    for class in &classes {
        let perms = permutations(class.len());
        let mut next = Vec::new();
        'outer: for g in &group {
            for p in &perms {
                let mut h = g.clone();
                for (i, &pi) in p.iter().enumerate() {
                    h[class[i]] = g[class[pi]];
                }
                next.push(h);
                if next.len() >= MAX_GROUP {
                    break 'outer;
                }
            }
        }
        group = next;
    }
    // Identity first; drop it.
    group.retain(|g| g.iter().enumerate().any(|(i, &x)| i != x));
    group
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn apply_perm(g: &[usize], m: &Monomial) -> Monomial {
    let mut e = vec![0; g.len()];
    for (v, &x) in m.exponents().iter().enumerate() {
        e[g[v]] = x;
    }
    Monomial::new(e)
}

fn schedule(w: usize, t: u32) -> Vec<MultiDegree> {
    (0..=t as i64).flat_map(|s| MultiDegree::of_total(w, s)).collect()
}

impl Problem {
    fn build(f: &Tensor, a: &Monomial, r: u64, t: u32, symmetry: bool, growth: bool) -> Result<(Self, usize)> {
        let shape = f.shape();
        let degrees = schedule(shape.num_factors(), t);
        let level_of: HashMap<MultiDegree, usize> = degrees.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        let group = if symmetry { symmetry_group(shape, a) } else { Vec::new() };
        let bases: Vec<Vec<Monomial>> =
            degrees.iter().map(|d| enumerate_monomials(shape, d)).collect::<Result<_>>()?;
        let indices: Vec<HashMap<&Monomial, usize>> =
            bases.iter().map(|b| b.iter().enumerate().map(|(i, m)| (m, i)).collect()).collect();
        let mut levels = Vec::with_capacity(degrees.len());
        for (k, d) in degrees.iter().enumerate() {
            let basis = &bases[k];
            let in_apolar: Vec<bool> = basis.iter().map(|m| !m.divides(a)).collect();
            let candidates = (0..basis.len()).filter(|&i| in_apolar[i]).collect();
            let required = basis.len() - (r.min(basis.len() as u64) as usize);
            let mut succ = Vec::with_capacity(basis.len());
            for m in basis {
                let mut s = Vec::new();
                for j in 0..shape.num_factors() {
                    let Some(&lk) = level_of.get(&d.add(&shape.unit_degree(j))) else { continue };
                    for v in shape.factor_vars(j) {
                        s.push((lk, indices[lk][&m.times_var(v)]));
                    }
                }
                succ.push(s);
            }
            let sym = group
                .iter()
                .map(|g| basis.iter().map(|m| indices[k][&apply_perm(g, m)] as u32).collect())
                .collect();
            let growth_ok = !growth
                || d.total() + 1 > t as i64
                || !(0..shape.num_factors()).any(|j| lexbar_excludes(shape, a, d, j, r));
            levels.push(Level {
                degree: d.clone(),
                basis: basis.clone(),
                required,
                candidates,
                in_apolar,
                succ,
                sym,
                growth_ok,
            });
        }
        Ok((Problem { levels }, group.len()))
    }
}

#[derive(Clone)]
struct State {
    counts: Vec<Vec<u32>>,
    covered: Vec<usize>,
    pieces: Vec<Vec<usize>>,
    stabilizer: Vec<u32>,
}

impl State {
    fn root(p: &Problem, group_order: usize) -> Self {
        State {
            counts: p.levels.iter().map(|l| vec![0; l.basis.len()]).collect(),
            covered: vec![0; p.levels.len()],
            pieces: Vec::with_capacity(p.levels.len()),
            stabilizer: (0..group_order as u32).collect(),
        }
    }

    /// Adds the multiples of basis element `i` of level `k`; false if some
    /// later degree becomes overfull. Always applied in full.
    fn place(&mut self, p: &Problem, k: usize, i: usize) -> bool {
        let mut ok = true;
        for &(lk, idx) in &p.levels[k].succ[i] {
            let c = &mut self.counts[lk][idx];
            if *c == 0 {
                self.covered[lk] += 1;
                if self.covered[lk] > p.levels[lk].required {
                    ok = false;
                }
            }
            *c += 1;
        }
        ok
    }

    fn unplace(&mut self, p: &Problem, k: usize, i: usize) {
        for &(lk, idx) in &p.levels[k].succ[i] {
            let c = &mut self.counts[lk][idx];
            *c -= 1;
            if *c == 0 {
                self.covered[lk] -= 1;
            }
        }
    }
}

enum Flow {
    Continue,
    Found(Vec<Vec<usize>>),
    Stop,
}

struct Shared<'a> {
    nodes: &'a AtomicU64,
    budget: Option<u64>,
    exceeded: &'a AtomicBool,
    best: &'a AtomicUsize,
}

struct Worker<'a> {
    p: &'a Problem,
    shared: &'a Shared<'a>,
    index: usize,
    prunings: Prunings,
    /// When set, stop at this level and record the state instead.
    split: Option<usize>,
    frontier: Vec<State>,
}

impl<'a> Worker<'a> {
    fn cancelled(&self) -> bool {
        self.shared.exceeded.load(AtomicOrdering::Relaxed) || self.shared.best.load(AtomicOrdering::Relaxed) < self.index
    }

    fn count_node(&mut self) -> bool {
        let n = self.shared.nodes.fetch_add(1, AtomicOrdering::Relaxed) + 1;
        if self.shared.budget.is_some_and(|b| n > b) {
            self.shared.exceeded.store(true, AtomicOrdering::Relaxed);
            return false;
        }
        true
    }

    fn enter(&mut self, s: &mut State, k: usize) -> Flow {
        if self.cancelled() {
            return Flow::Stop;
        }
        if k == self.p.levels.len() {
            return Flow::Found(s.pieces.clone());
        }
        if self.split == Some(k) {
            self.frontier.push(s.clone());
            return Flow::Continue;
        }
        let level = &self.p.levels[k];
        if !level.growth_ok {
            self.prunings.growth += 1;
            return Flow::Continue;
        }
        let forced: Vec<usize> = (0..level.basis.len()).filter(|&i| s.counts[k][i] > 0).collect();
        debug_assert!(forced.iter().all(|&i| level.in_apolar[i]), "forced monomials lie in F^⊥");
        if forced.len() > level.required {
            self.prunings.overfull += 1;
            return Flow::Continue;
        }
        let mut ok = true;
        for &i in &forced {
            ok &= s.place(self.p, k, i);
        }
        let flow = if !ok {
            self.prunings.forward += 1;
            Flow::Continue
        } else {
            let avail: Vec<usize> = level.candidates.iter().copied().filter(|&i| s.counts[k][i] == 0).collect();
            let need = level.required - forced.len();
            if avail.len() < need {
                self.prunings.insufficient += 1;
                Flow::Continue
            } else {
                let mut chosen = Vec::with_capacity(need);
                self.choose(s, k, &forced, &avail, 0, need, &mut chosen)
            }
        };
        for &i in &forced {
            s.unplace(self.p, k, i);
        }
        flow
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &mut self,
        s: &mut State,
        k: usize,
        forced: &[usize],
        avail: &[usize],
        start: usize,
        need: usize,
        chosen: &mut Vec<usize>,
    ) -> Flow {
        if need == 0 {
            return self.complete(s, k, forced, chosen);
        }
        for x in start..=avail.len() - need {
            if !self.count_node() {
                return Flow::Stop;
            }
            let i = avail[x];
            let ok = s.place(self.p, k, i);
            let flow = if ok {
                chosen.push(i);
                let f = self.choose(s, k, forced, avail, x + 1, need - 1, chosen);
                chosen.pop();
                f
            } else {
                self.prunings.forward += 1;
                Flow::Continue
            };
            s.unplace(self.p, k, i);
            if !matches!(flow, Flow::Continue) {
                return flow;
            }
        }
        Flow::Continue
    }

    fn complete(&mut self, s: &mut State, k: usize, forced: &[usize], chosen: &[usize]) -> Flow {
        let mut piece: Vec<usize> = forced.iter().chain(chosen).copied().collect();
        piece.sort_unstable();
        let level = &self.p.levels[k];
        let mut kept = Vec::with_capacity(s.stabilizer.len());
        let mut image: Vec<usize> = Vec::with_capacity(piece.len());
        for &g in &s.stabilizer {
            let map = &level.sym[g as usize];
            image.clear();
            image.extend(piece.iter().map(|&i| map[i] as usize));
            image.sort_unstable();
            match image.cmp(&piece) {
                std::cmp::Ordering::Less => {
                    self.prunings.symmetry += 1;
                    return Flow::Continue;
                }
                std::cmp::Ordering::Equal => kept.push(g),
                std::cmp::Ordering::Greater => {}
            }
        }
        let saved = std::mem::replace(&mut s.stabilizer, kept);
        s.pieces.push(piece);
        let flow = self.enter(s, k + 1);
        s.pieces.pop();
        s.stabilizer = saved;
        flow
    }
}

/// Runs the move-fit search for a monomial `F`.
pub fn search(f: &Tensor, config: &SearchConfig) -> Result<SearchOutcome> {
    let start = Instant::now();
    let a = f.expect_monomial()?.clone();
    let shape = f.shape();
    if config.r == 0 {
        return Err(Error::OutOfRange("search needs r >= 1".into()));
    }
    let dim_l = piece_dimension(shape, f.degree())?;
    if dim_l < config.r.into() {
        return Err(Error::VacuousRank { r: config.r, dim: dim_l.to_string() });
    }
    let t = config.horizon.unwrap_or(f.degree().total() as u32);
    if t == 0 {
        return Err(Error::OutOfRange("horizon must be at least 1".into()));
    }
    let (problem, group_order) =
        Problem::build(f, &a, config.r, t, config.symmetry_pruning, config.growth_pruning)?;

    let nodes = AtomicU64::new(0);
    let exceeded = AtomicBool::new(false);
    let best = AtomicUsize::new(usize::MAX);
    let shared = Shared { nodes: &nodes, budget: config.node_budget, exceeded: &exceeded, best: &best };
    let mut prunings = Prunings::default();

    let jobs = if config.jobs == 0 { rayon::current_num_threads() } else { config.jobs };
    // Expand a frontier level by level until there is enough parallel work.
    let mut tasks = vec![State::root(&problem, group_order)];
    let mut early: Option<(Flow, usize)> = None;
    if jobs > 1 {
        for split in 1..problem.levels.len() {
            let mut w = Worker { p: &problem, shared: &shared, index: 0, prunings: Prunings::default(), split: Some(split), frontier: Vec::new() };
            let mut root = State::root(&problem, group_order);
            let flow = w.enter(&mut root, 0);
            add_prunings(&mut prunings, &w.prunings);
            let frontier = std::mem::take(&mut w.frontier);
            if !matches!(flow, Flow::Continue) {
                early = Some((flow, 0));
                break;
            }
            tasks = frontier;
            if tasks.len() >= 4 * jobs || tasks.is_empty() {
                break;
            }
        }
    }

    let task_count = if early.is_some() { 0 } else { tasks.len() };
    let results: Vec<(Flow, Prunings)> = if early.is_some() {
        Vec::new()
    } else {
        let run = |(index, task): (usize, State)| {
            let mut w = Worker { p: &problem, shared: &shared, index, prunings: Prunings::default(), split: None, frontier: Vec::new() };
            let mut s = task;
            let k = s.pieces.len();
            let flow = w.enter(&mut s, k);
            if matches!(flow, Flow::Found(_)) {
                best.fetch_min(index, AtomicOrdering::Relaxed);
            }
            (flow, w.prunings)
        };
        if jobs > 1 {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| Error::OutOfRange(e.to_string()))?;
            pool.install(|| tasks.into_par_iter().enumerate().map(run).collect())
        } else {
            tasks.into_iter().enumerate().map(run).collect()
        }
    };

    let mut status = Status::Exhausted;
    let mut found: Option<Vec<Vec<usize>>> = None;
    if let Some((flow, _)) = early {
        match flow {
            Flow::Found(p) => found = Some(p),
            _ => status = Status::BudgetExceeded,
        }
    }
    for (flow, pr) in results {
        add_prunings(&mut prunings, &pr);
        if found.is_some() || status == Status::BudgetExceeded {
            continue;
        }
        match flow {
            Flow::Found(p) => found = Some(p),
            // Stopped by the budget before any earlier task succeeded.
            Flow::Stop if exceeded.load(AtomicOrdering::Relaxed) => status = Status::BudgetExceeded,
            _ => {}
        }
    }
    if exceeded.load(AtomicOrdering::Relaxed) && found.is_none() {
        status = Status::BudgetExceeded;
    }

    let (pieces, candidate) = match found {
        Some(p) if status != Status::BudgetExceeded => {
            status = Status::Found;
            let pieces: Vec<Piece> = problem
                .levels
                .iter()
                .zip(&p)
                .map(|(l, idx)| Piece { degree: l.degree.clone(), monomials: idx.iter().map(|&i| l.basis[i].clone()).collect() })
                .collect();
            let gens = pieces.iter().flat_map(|pc| pc.monomials.iter().cloned()).collect();
            (Some(pieces), Some(MonomialIdeal::new(shape.clone(), gens)))
        }
        _ => (None, None),
    };
    let stats = SearchStats {
        nodes: nodes.load(AtomicOrdering::Relaxed),
        prunings,
        tasks: task_count,
        group_order: group_order + 1,
        wall_time_ms: start.elapsed().as_millis() as u64,
    };
    Ok(SearchOutcome { status, r: config.r, horizon: t, pieces, candidate, stats })
}

fn add_prunings(acc: &mut Prunings, p: &Prunings) {
    acc.overfull += p.overfull;
    acc.insufficient += p.insufficient;
    acc.forward += p.forward;
    acc.symmetry += p.symmetry;
    acc.growth += p.growth;
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: MultiDegree,
    pub required_quotient: u64,
    pub actual: HilbertValue,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationCheck {
    pub saturated: bool,
    /// Hilbert function of the saturation on the same degrees.
    pub saturation_quotient: Vec<(MultiDegree, u64)>,
    pub saturation_generators: usize,
}

/// Replay of conditions (1)-(3) for a given ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub r: u64,
    pub horizon: u32,
    pub degrees: Vec<DegreeCheck>,
    pub hilbert_ok: bool,
    pub contained: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub saturation: Option<SaturationCheck>,
    pub pass: bool,
}

/// Checks `dim (S/I)_D = min(r, dim S_D)` for all degrees of total degree at
/// most `t`, and `I ⊂ F^⊥`.
pub fn verify_candidate<I: Ideal + ?Sized>(ideal: &I, f: &Tensor, r: u64, t: u32) -> Result<VerifyReport> {
    verify_inner(ideal, f, r, t, None)
}

/// [`verify_candidate`] plus a saturation comparison.
pub fn verify_monomial_candidate(ideal: &MonomialIdeal, f: &Tensor, r: u64, t: u32) -> Result<VerifyReport> {
    verify_inner(ideal, f, r, t, Some(ideal))
}

fn verify_inner<I: Ideal + ?Sized>(
    ideal: &I,
    f: &Tensor,
    r: u64,
    t: u32,
    monomial: Option<&MonomialIdeal>,
) -> Result<VerifyReport> {
    let shape = ideal.shape();
    let degrees = schedule(shape.num_factors(), t);
    let actual = degrees.par_iter().map(|d| ideal.hilbert(d)).collect::<Result<Vec<_>>>()?;
    let mut checks = Vec::with_capacity(degrees.len());
    for (d, h) in degrees.iter().zip(actual) {
        let required = generic_hilbert(shape, r, d)?;
        checks.push(DegreeCheck { degree: d.clone(), required_quotient: required, actual: h, ok: h.quotient == required });
    }
    let hilbert_ok = checks.iter().all(|c| c.ok);
    let contained = contained_in_apolar(ideal, f)?;
    let saturation = match monomial {
        Some(m) => {
            let sat = m.saturate();
            let saturation_quotient = degrees
                .iter()
                .map(|d| sat.hilbert(d).map(|h| (d.clone(), h.quotient)))
                .collect::<Result<Vec<_>>>()?;
            Some(SaturationCheck { saturated: sat == *m, saturation_quotient, saturation_generators: sat.generators().len() })
        }
        None => None,
    };
    Ok(VerifyReport { r, horizon: t, degrees: checks, hilbert_ok, contained, saturation, pass: hilbert_ok && contained })
}

/// Canonical order of pieces used by [`search`]: descending grevlex.
pub fn sort_piece(ms: &mut [Monomial]) {
    ms.sort_by(|a, b| grevlex(b, a));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::monomial_tensor;

    fn mono(exps: &[u32]) -> Tensor {
        monomial_tensor(&[exps.len() as u32 - 1], &[exps.to_vec()]).unwrap()
    }

    #[test]
    fn generic_hilbert_values() {
        let p2 = FactorShape::projective_space(2);
        let h: Vec<u64> = (0..4).map(|d| generic_hilbert(&p2, 3, &MultiDegree::new(vec![d])).unwrap()).collect();
        assert_eq!(h, vec![1, 3, 3, 3]);
        assert_eq!(generic_hilbert(&p2, 0, &MultiDegree::new(vec![2])).unwrap(), 0);
    }

    #[test]
    fn small_line_cases() {
        let f = mono(&[2, 1]);
        let out = search(&f, &SearchConfig::new(2)).unwrap();
        assert_eq!(out.status, Status::Found);
        assert_eq!(out.candidate.unwrap().generators(), &[Monomial::new(vec![0, 2])]);
        let out = search(&f, &SearchConfig::new(1)).unwrap();
        assert_eq!(out.status, Status::Exhausted);
        assert!(matches!(search(&f, &SearchConfig::new(5)), Err(Error::VacuousRank { .. })));
    }

    #[test]
    fn ternary_222_needs_nine() {
        let f = mono(&[2, 2, 2]);
        assert_eq!(search(&f, &SearchConfig::new(8).horizon(5)).unwrap().status, Status::Exhausted);
        assert_eq!(search(&f, &SearchConfig::new(9)).unwrap().status, Status::Found);
    }

    #[test]
    fn symmetry_group_sizes() {
        let s = FactorShape::projective_space(2);
        assert_eq!(symmetry_group(&s, &Monomial::new(vec![2, 2, 2])).len(), 5);
        assert_eq!(symmetry_group(&s, &Monomial::new(vec![3, 2, 1])).len(), 0);
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn budget_is_reported() {
        let f = mono(&[2, 2, 2]);
        let out = search(&f, &SearchConfig::new(8).symmetry(false).budget(3)).unwrap();
        assert_eq!(out.status, Status::BudgetExceeded);
    }

    #[test]
    fn parallel_matches_serial() {
        for (exps, r) in [(&[2u32, 2, 2][..], 9u64), (&[2, 1, 1][..], 4), (&[3, 1][..], 2)] {
            let f = mono(exps);
            let one = search(&f, &SearchConfig::new(r)).unwrap();
            let many = search(&f, &SearchConfig::new(r).jobs(4)).unwrap();
            assert_eq!(one.status, many.status);
            assert_eq!(one.pieces, many.pieces);
        }
    }
}
