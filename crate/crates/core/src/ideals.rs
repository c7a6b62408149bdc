//! Monomial ideals and generator-presented graded ideals.
//!
//! Every ideal here is evaluated one graded piece at a time: a monomial ideal
//! by divisibility, a graded ideal by the span of `g * m` over generators `g`
//! and monomials `m` of complementary degree.

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;
use rayon::prelude::*;

use crate::apolarity::{apolar_subspace, Tensor};
use crate::error::{Error, Result};
use crate::linalg::{Subspace, Q};
use crate::poly::Polynomial;
use crate::ring::{enumerate_monomials, grevlex, FactorShape, Monomial, MonomialBasis, MultiDegree};

/// A homogeneous ideal whose graded pieces can be materialized.
pub trait Ideal: Sync {
    fn shape(&self) -> &FactorShape;

    /// `I_D` as a subspace of `S_D` in the grevlex monomial basis.
    fn piece(&self, d: &MultiDegree) -> Result<(MonomialBasis, Subspace)>;

    /// `(dim I_D, dim (S/I)_D)`.
    fn hilbert(&self, d: &MultiDegree) -> Result<HilbertValue> {
        let (basis, space) = self.piece(d)?;
        Ok(HilbertValue { ideal: space.dim() as u64, quotient: (basis.len() - space.dim()) as u64 })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HilbertValue {
    pub ideal: u64,
    pub quotient: u64,
}

/// Hilbert function values over a finite set of degrees.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HilbertRecord {
    pub values: BTreeMap<MultiDegree, HilbertValue>,
}

impl HilbertRecord {
    /// Evaluates `ideal` at every degree, in parallel.
    pub fn compute<I: Ideal + ?Sized>(ideal: &I, degrees: &[MultiDegree]) -> Result<Self> {
        let values = degrees
            .par_iter()
            .map(|d| ideal.hilbert(d).map(|h| (d.clone(), h)))
            .collect::<Result<Vec<_>>>()?;
        Ok(HilbertRecord { values: values.into_iter().collect() })
    }

    /// All effective degrees of total degree at most `t`.
    pub fn up_to_total<I: Ideal + ?Sized>(ideal: &I, t: i64) -> Result<Self> {
        let w = ideal.shape().num_factors();
        let degrees: Vec<MultiDegree> = (0..=t).flat_map(|s| MultiDegree::of_total(w, s)).collect();
        Self::compute(ideal, &degrees)
    }

    pub fn get(&self, d: &MultiDegree) -> Option<HilbertValue> {
        self.values.get(d).copied()
    }
}

pub fn hilbert_function<I: Ideal + ?Sized>(ideal: &I, d: &MultiDegree) -> Result<HilbertValue> {
    ideal.hilbert(d)
}

/// A monomial ideal with a minimal generating set, kept sorted descending in
/// grevlex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    shape: FactorShape,
    generators: Vec<Monomial>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(grevlex);
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| grevlex(b, a));
    kept
}

impl MonomialIdeal {
    /// Panics if a generator does not fit `shape`; see [`MonomialIdeal::try_new`].
    pub fn new(shape: FactorShape, generators: Vec<Monomial>) -> Self {
        Self::try_new(shape, generators).expect("generators fit the shape")
    }

    pub fn try_new(shape: FactorShape, generators: Vec<Monomial>) -> Result<Self> {
        for g in &generators {
            shape.check_monomial(g)?;
        }
        Ok(MonomialIdeal { shape, generators: minimalize(generators) })
    }

    pub fn zero(shape: FactorShape) -> Self {
        MonomialIdeal { shape, generators: Vec::new() }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Monomial>) -> Self {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        MonomialIdeal { shape: self.shape.clone(), generators: minimalize(gens) }
    }

    /// All degree-`D` monomials of the ideal, descending in grevlex.
    pub fn monomial_piece(&self, d: &MultiDegree) -> Result<Vec<Monomial>> {
        Ok(enumerate_monomials(&self.shape, d)?.into_iter().filter(|m| self.contains(m)).collect())
    }

    /// `(I : m)`.
    pub fn colon(&self, m: &Monomial) -> Self {
        MonomialIdeal {
            shape: self.shape.clone(),
            generators: minimalize(self.generators.iter().map(|g| g.saturating_div(m)).collect()),
        }
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Self {
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal { shape: self.shape.clone(), generators: minimalize(gens) }
    }

    /// `(I : B)` for the irrelevant ideal `B`.
    pub fn colon_irrelevant(&self) -> Self {
        let mut acc: Option<MonomialIdeal> = None;
        for b in irrelevant_generators(&self.shape) {
            let c = self.colon(&b);
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c),
            });
        }
        acc.expect("the irrelevant ideal has generators")
    }

    /// The smallest saturated ideal containing `self`.
    pub fn saturate(&self) -> Self {
        let mut cur = self.clone();
        loop {
            let next = cur.colon_irrelevant();
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_saturated(&self) -> bool {
        self.colon_irrelevant() == *self
    }
}

impl Ideal for MonomialIdeal {
    fn shape(&self) -> &FactorShape {
        &self.shape
    }

    fn piece(&self, d: &MultiDegree) -> Result<(MonomialBasis, Subspace)> {
        let basis = MonomialBasis::new(&self.shape, d)?;
        let idx: Vec<usize> =
            basis.monomials().iter().enumerate().filter(|(_, m)| self.contains(m)).map(|(i, _)| i).collect();
        let n = basis.len();
        Ok((basis, Subspace::coordinate(idx, n)))
    }

    fn hilbert(&self, d: &MultiDegree) -> Result<HilbertValue> {
        let all = enumerate_monomials(&self.shape, d)?;
        let inside = all.iter().filter(|m| self.contains(m)).count() as u64;
        Ok(HilbertValue { ideal: inside, quotient: all.len() as u64 - inside })
    }
}

/// Generators of the irrelevant ideal: one variable from each factor.
pub fn irrelevant_generators(shape: &FactorShape) -> Vec<Monomial> {
    let mut out = vec![shape.one()];
    for j in 0..shape.num_factors() {
        out = out.iter().flat_map(|m| shape.factor_vars(j).map(move |v| m.times_var(v))).collect();
    }
    out
}

/// An ideal given by homogeneous generators with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdeal {
    shape: FactorShape,
    generators: Vec<(MultiDegree, Polynomial)>,
}

impl GradedIdeal {
    /// Zero generators are dropped. A generator's tag must match its terms.
    pub fn new(shape: FactorShape, generators: Vec<(MultiDegree, Polynomial)>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for (d, g) in generators {
            shape.check_degree(&d)?;
            match g.homogeneous_degree(&shape)? {
                None => continue,
                Some(actual) if actual != d => {
                    return Err(Error::DegreeMismatch { degree: actual.to_string(), expected: d.to_string() })
                }
                Some(_) => gens.push((d, g)),
            }
        }
        Ok(GradedIdeal { shape, generators: gens })
    }

    pub fn from_polynomials(shape: FactorShape, generators: Vec<Polynomial>) -> Result<Self> {
        let mut tagged = Vec::with_capacity(generators.len());
        for g in generators {
            if let Some(d) = g.homogeneous_degree(&shape)? {
                tagged.push((d, g));
            }
        }
        Self::new(shape, tagged)
    }

    pub fn from_monomial_ideal(i: &MonomialIdeal) -> Self {
        let gens = i
            .generators()
            .iter()
            .map(|m| (i.shape().degree_of(m), Polynomial::monomial(m.clone())))
            .collect();
        GradedIdeal { shape: i.shape().clone(), generators: gens }
    }

    pub fn generators(&self) -> &[(MultiDegree, Polynomial)] {
        &self.generators
    }

    /// Spanning vectors `g * m` of `I_D`.
    fn spanning(&self, basis: &MonomialBasis) -> Result<Vec<Vec<Q>>> {
        let d = basis.degree();
        let mut rows = Vec::new();
        for (gd, g) in &self.generators {
            let rest = d.sub(gd);
            if !rest.is_effective() {
                continue;
            }
            for m in enumerate_monomials(&self.shape, &rest)? {
                rows.push(g.mul_monomial(&m).to_vector(basis)?);
            }
        }
        Ok(rows)
    }

    /// True iff the polynomial lies in `I_D` for its degree `D`.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        let Some(d) = f.homogeneous_degree(&self.shape)? else {
            return Ok(true);
        };
        let (basis, space) = self.piece(&d)?;
        Ok(space.contains(&f.to_vector(&basis)?))
    }
}

impl Ideal for GradedIdeal {
    fn shape(&self) -> &FactorShape {
        &self.shape
    }

    fn piece(&self, d: &MultiDegree) -> Result<(MonomialBasis, Subspace)> {
        let basis = MonomialBasis::new(&self.shape, d)?;
        let rows = self.spanning(&basis)?;
        let n = basis.len();
        Ok((basis, Subspace::from_spanning(rows, n)))
    }
}

/// `F^⊥` viewed as an [`Ideal`].
#[derive(Clone, Copy, Debug)]
pub struct ApolarIdeal<'a>(pub &'a Tensor);

impl Ideal for ApolarIdeal<'_> {
    fn shape(&self) -> &FactorShape {
        self.0.shape()
    }

    fn piece(&self, d: &MultiDegree) -> Result<(MonomialBasis, Subspace)> {
        apolar_subspace(self.0, d)
    }
}

fn check_same_shape(a: &FactorShape, b: &FactorShape) -> Result<()> {
    if a != b {
        return Err(Error::ShapeMismatch(format!("{a} vs {b}")));
    }
    Ok(())
}

/// `I ⊂ F^⊥`, decided in degree `L` alone.
///
/// Generators whose degree is not below `L` never reach `I_L` and annihilate
/// `F` trivially, so they are accepted.
pub fn contained_in_apolar<I: Ideal + ?Sized>(ideal: &I, f: &Tensor) -> Result<bool> {
    check_same_shape(ideal.shape(), f.shape())?;
    let (basis, space) = ideal.piece(f.degree())?;
    let mut fv = vec![Q::zero(); basis.len()];
    for (m, c) in f.terms() {
        fv[basis.index_of(m).expect("F has degree L")] = c.clone();
    }
    Ok(space.basis().iter().all(|v| v.iter().zip(&fv).map(|(a, b)| a * b).sum::<Q>().is_zero()))
}

/// Degree-by-degree check of `I_D ⊂ F^⊥_D` for every effective `D <= L`.
pub fn contained_in_apolar_every_degree<I: Ideal + ?Sized>(ideal: &I, f: &Tensor) -> Result<bool> {
    check_same_shape(ideal.shape(), f.shape())?;
    for d in f.degree().lower_box() {
        let (_, mine) = ideal.piece(&d)?;
        let (_, apolar) = apolar_subspace(f, &d)?;
        if !mine.is_subspace_of(&apolar) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `dim I_D - dim (sum_j I_{D - e_j} * S_{e_j})`.
pub fn minimal_generator_count<I: Ideal + ?Sized>(ideal: &I, d: &MultiDegree) -> Result<u64> {
    let shape = ideal.shape();
    let (basis, space) = ideal.piece(d)?;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for j in 0..shape.num_factors() {
        let lower = d.sub(&shape.unit_degree(j));
        if !lower.is_effective() {
            continue;
        }
        let (lb, ls) = ideal.piece(&lower)?;
        for v in ls.basis() {
            let p = Polynomial::from_vector(v, &lb);
            for var in shape.factor_vars(j) {
                rows.push(p.mul_monomial(&shape.variable(var)).to_vector(&basis)?);
            }
        }
    }
    let decomposable = Subspace::from_spanning(rows, basis.len());
    Ok((space.dim() - decomposable.dim()) as u64)
}

/// Minimal generator counts in every degree of total degree at most `t`
/// where the count is non-zero.
pub fn generator_degree_distribution<I: Ideal + ?Sized>(ideal: &I, t: i64) -> Result<BTreeMap<MultiDegree, u64>> {
    let w = ideal.shape().num_factors();
    let degrees: Vec<MultiDegree> = (0..=t).flat_map(|s| MultiDegree::of_total(w, s)).collect();
    let counts = degrees
        .par_iter()
        .map(|d| minimal_generator_count(ideal, d).map(|c| (d.clone(), c)))
        .collect::<Result<Vec<_>>>()?;
    Ok(counts.into_iter().filter(|(_, c)| *c > 0).collect())
}

/// True iff `f` certifies that `I` is not saturated: `f` is outside `I` but
/// `f * b` lies in `I` for every generator `b` of the irrelevant ideal.
pub fn is_saturation_witness<I: Ideal + ?Sized>(ideal: &I, f: &Polynomial) -> Result<bool> {
    Ok(saturation_witness_power(ideal, f, 1)? == Some(1))
}

/// Smallest `k <= max_k` with `f * B^k ⊂ I` while `f` is outside `I`, where
/// `B` is the irrelevant ideal.
pub fn saturation_witness_power<I: Ideal + ?Sized>(ideal: &I, f: &Polynomial, max_k: u32) -> Result<Option<u32>> {
    let shape = ideal.shape();
    let Some(d) = f.homogeneous_degree(shape)? else {
        return Ok(None);
    };
    let (basis, space) = ideal.piece(&d)?;
    if space.contains(&f.to_vector(&basis)?) {
        return Ok(None);
    }
    for k in 1..=max_k {
        let bdeg = MultiDegree::new(vec![k as i64; shape.num_factors()]);
        let (up_basis, up_space) = ideal.piece(&d.add(&bdeg))?;
        let mut inside = true;
        for b in enumerate_monomials(shape, &bdeg)? {
            if !up_space.contains(&f.mul_monomial(&b).to_vector(&up_basis)?) {
                inside = false;
                break;
            }
        }
        if inside {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Distinct monomials of `I_D` produced by multiplying `piece` by the
/// variables of every factor.
pub fn variable_multiples(shape: &FactorShape, piece: &[Monomial]) -> Vec<Monomial> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for m in piece {
        for v in 0..shape.num_vars() {
            let up = m.times_var(v);
            if seen.insert(up.clone()) {
                out.push(up);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn p(n: u32) -> FactorShape {
        FactorShape::projective_space(n)
    }

    fn md(v: &[i64]) -> MultiDegree {
        MultiDegree::new(v.to_vec())
    }

    fn mono(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    #[test]
    fn minimal_generators() {
        let i = MonomialIdeal::new(p(1), vec![mono(&[2, 0]), mono(&[3, 0]), mono(&[1, 1]), mono(&[2, 0])]);
        assert_eq!(i.generators(), &[mono(&[2, 0]), mono(&[1, 1])]);
    }

    #[test]
    fn pieces_and_hilbert() {
        let i = MonomialIdeal::new(p(3), vec![mono(&[3, 0, 0, 0]), mono(&[0, 3, 0, 0]), mono(&[0, 0, 2, 0]), mono(&[0, 0, 0, 2])]);
        assert_eq!(i.monomial_piece(&md(&[3])).unwrap().len(), 10);
        let j = MonomialIdeal::new(p(1), vec![mono(&[1, 0])]);
        assert_eq!(j.monomial_piece(&md(&[2])).unwrap(), vec![mono(&[2, 0]), mono(&[1, 1])]);
        let z = MonomialIdeal::zero(p(2));
        assert!(z.monomial_piece(&md(&[4])).unwrap().is_empty());
        assert_eq!(z.hilbert(&md(&[2])).unwrap(), HilbertValue { ideal: 0, quotient: 6 });
        let g = GradedIdeal::from_monomial_ideal(&i);
        for t in 0..5 {
            assert_eq!(g.hilbert(&md(&[t])).unwrap(), i.hilbert(&md(&[t])).unwrap());
        }
    }

    #[test]
    fn colon_examples() {
        let i = MonomialIdeal::new(p(2), vec![mono(&[2, 0, 0])]);
        assert_eq!(i.colon(&mono(&[1, 0, 0])).generators(), &[mono(&[1, 0, 0])]);
        let j = MonomialIdeal::new(p(2), vec![mono(&[2, 0, 0]), mono(&[1, 1, 0]), mono(&[1, 0, 1])]);
        let c = j.colon(&mono(&[1, 0, 0]));
        assert_eq!(c.generators().len(), 3);
        let k = MonomialIdeal::new(p(2), vec![mono(&[0, 3, 0])]);
        assert_eq!(k.colon(&mono(&[1, 0, 0])), k);
    }

    #[test]
    fn saturation_examples() {
        let j = MonomialIdeal::new(p(2), vec![mono(&[2, 0, 0]), mono(&[1, 1, 0]), mono(&[1, 0, 1])]);
        assert_eq!(j.saturate().generators(), &[mono(&[1, 0, 0])]);
        assert!(!j.is_saturated());
        let a = MonomialIdeal::new(p(2), vec![mono(&[1, 0, 0])]);
        assert!(a.is_saturated());
        let s = FactorShape::new(vec![1, 1]).unwrap();
        let b = MonomialIdeal::new(s.clone(), vec![mono(&[1, 0, 1, 0]), mono(&[1, 0, 0, 1])]);
        assert_eq!(b.saturate().generators(), &[mono(&[1, 0, 0, 0])]);
        // The irrelevant ideal itself saturates to the unit ideal.
        let irr = MonomialIdeal::new(s.clone(), irrelevant_generators(&s));
        assert_eq!(irr.saturate().generators(), &[s.one()]);
    }

    #[test]
    fn containment() {
        let f = Tensor::monomial(p(1), mono(&[3, 0])).unwrap();
        let i = MonomialIdeal::new(p(1), vec![mono(&[1, 0])]);
        assert!(!contained_in_apolar(&i, &f).unwrap());
        let j = MonomialIdeal::new(p(1), vec![mono(&[0, 1])]);
        assert!(contained_in_apolar(&j, &f).unwrap());
        // A generator above L is harmless.
        let k = MonomialIdeal::new(p(1), vec![mono(&[0, 1]), mono(&[5, 0])]);
        assert!(contained_in_apolar(&k, &f).unwrap());
        assert!(contained_in_apolar_every_degree(&k, &f).unwrap());
    }

    #[test]
    fn generator_counts() {
        let f = Tensor::monomial(p(3), mono(&[2, 2, 1, 1])).unwrap();
        assert_eq!(minimal_generator_count(&ApolarIdeal(&f), &md(&[2])).unwrap(), 2);
        assert_eq!(minimal_generator_count(&ApolarIdeal(&f), &md(&[3])).unwrap(), 2);
        let g = GradedIdeal::from_polynomials(
            p(1),
            vec![
                Polynomial::from_terms([(mono(&[1, 0]), q(1)), (mono(&[0, 1]), q(-1))]),
                Polynomial::from_terms([(mono(&[2, 0]), q(1)), (mono(&[1, 1]), q(-1))]),
                Polynomial::monomial(mono(&[0, 2])),
            ],
        )
        .unwrap();
        assert_eq!(minimal_generator_count(&g, &md(&[1])).unwrap(), 1);
        // alpha_0^2 - alpha_0 alpha_1 is redundant, alpha_1^2 is not.
        assert_eq!(minimal_generator_count(&g, &md(&[2])).unwrap(), 1);
    }

    #[test]
    fn saturation_witness() {
        let j = MonomialIdeal::new(p(2), vec![mono(&[2, 0, 0]), mono(&[1, 1, 0]), mono(&[1, 0, 1])]);
        assert!(is_saturation_witness(&j, &Polynomial::monomial(mono(&[1, 0, 0]))).unwrap());
        assert!(!is_saturation_witness(&j, &Polynomial::monomial(mono(&[0, 1, 0]))).unwrap());
    }

    #[test]
    fn graded_tags_checked() {
        let bad = GradedIdeal::new(p(1), vec![(md(&[2]), Polynomial::monomial(mono(&[1, 0])))]);
        assert!(matches!(bad, Err(Error::DegreeMismatch { .. })));
    }
}
