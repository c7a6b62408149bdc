//! The hook (apolarity) action of the Cox ring on its divided-power dual,
//! apolar ideals, catalecticants and conciseness.
//!
//! In divided powers a monomial `alpha^e` acts on `x^(a)` by exponent
//! subtraction with coefficient exactly one, so the pairing between `S_D`
//! and `S~_D` is the identity in the monomial bases.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideals::MonomialIdeal;
use crate::linalg::{Echelon, Subspace, Q};
use crate::poly::Polynomial;
use crate::ring::{FactorShape, Monomial, MonomialBasis, MultiDegree};

/// Coefficient convention of tensor input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// Coefficients of divided-power monomials `x^(a)`.
    Divided,
    /// Coefficients of ordinary monomials `x^a = (prod a_i!) x^(a)`.
    Plain,
}

/// A partially symmetric tensor `F` in `S~_L`, stored in divided powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    shape: FactorShape,
    degree: MultiDegree,
    terms: BTreeMap<Monomial, Q>,
}

fn factorial_product(m: &Monomial) -> BigInt {
    let mut acc = BigInt::one();
    for &e in m.exponents() {
        for k in 2..=e {
            acc *= k;
        }
    }
    acc
}

impl Tensor {
    /// Builds a tensor from divided-power coefficients. Zero coefficients are
    /// dropped; every term must have degree `degree`.
    pub fn new(
        shape: FactorShape,
        degree: MultiDegree,
        terms: impl IntoIterator<Item = (Monomial, Q)>,
    ) -> Result<Self> {
        Self::with_convention(shape, degree, Convention::Divided, terms)
    }

    pub fn with_convention(
        shape: FactorShape,
        degree: MultiDegree,
        convention: Convention,
        terms: impl IntoIterator<Item = (Monomial, Q)>,
    ) -> Result<Self> {
        shape.check_degree(&degree)?;
        if !degree.is_effective() {
            return Err(Error::OutOfRange(format!("tensor degree {degree} is not effective")));
        }
        let mut map: BTreeMap<Monomial, Q> = BTreeMap::new();
        for (m, c) in terms {
            shape.check_monomial(&m)?;
            let d = shape.degree_of(&m);
            if d != degree {
                return Err(Error::DegreeMismatch { degree: d.to_string(), expected: degree.to_string() });
            }
            let c = match convention {
                Convention::Divided => c,
                Convention::Plain => c * Q::from_integer(factorial_product(&m)),
            };
            *map.entry(m).or_insert_with(Q::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Tensor { shape, degree, terms: map })
    }

    /// The divided-power monomial `x^(exps)`.
    pub fn monomial(shape: FactorShape, exps: Monomial) -> Result<Self> {
        shape.check_monomial(&exps)?;
        let degree = shape.degree_of(&exps);
        Self::new(shape, degree, [(exps, Q::one())])
    }

    pub fn shape(&self) -> &FactorShape {
        &self.shape
    }

    pub fn degree(&self) -> &MultiDegree {
        &self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// Divided-power coefficients rewritten in the plain convention.
    pub fn plain_terms(&self) -> Vec<(Monomial, Q)> {
        self.terms.iter().map(|(m, c)| (m.clone(), c / Q::from_integer(factorial_product(m)))).collect()
    }

    /// The exponent vector when `F` has exactly one non-zero term.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.terms.len() == 1 {
            self.terms.keys().next()
        } else {
            None
        }
    }

    pub fn expect_monomial(&self) -> Result<&Monomial> {
        self.as_monomial().ok_or(Error::NotMonomial { terms: self.terms.len() })
    }
}

/// `theta ⌟ x^(a)`: `x^(a - e)` when `a - e >= 0`, otherwise zero.
pub fn hook(theta: &Monomial, m: &Monomial) -> Result<Option<Monomial>> {
    if theta.exponents().len() != m.exponents().len() {
        return Err(Error::ShapeMismatch(format!(
            "{} vs {} variables",
            theta.exponents().len(),
            m.exponents().len()
        )));
    }
    Ok(theta.quotient_of(m))
}

/// Bilinear extension of [`hook`] to a homogeneous `theta` and a tensor.
pub fn hook_tensor(theta: &Polynomial, f: &Tensor) -> Result<Tensor> {
    let shape = f.shape();
    let Some(d) = theta.homogeneous_degree(shape)? else {
        return Tensor::new(shape.clone(), f.degree().clone(), std::iter::empty());
    };
    let target = f.degree().sub(&d);
    if !target.is_effective() {
        return Err(Error::DegreeMismatch { degree: d.to_string(), expected: format!("<= {}", f.degree()) });
    }
    let mut out: BTreeMap<Monomial, Q> = BTreeMap::new();
    for (e, c) in theta.terms() {
        for (a, fc) in f.terms() {
            if let Some(rest) = e.quotient_of(a) {
                *out.entry(rest).or_insert_with(Q::zero) += c * fc;
            }
        }
    }
    Tensor::new(shape.clone(), target, out)
}

/// The catalecticant `S_D -> S~_{L-D}`, `theta -> theta ⌟ F`.
#[derive(Clone, Debug)]
pub struct CatalecticantMatrix {
    pub rows: MonomialBasis,
    pub cols: MonomialBasis,
    /// `entries[e][m]` is the coefficient of `x^(e+m)` in `F`.
    pub entries: Vec<Vec<Q>>,
}

impl CatalecticantMatrix {
    pub fn rank(&self) -> usize {
        Echelon::new(self.entries.clone(), self.cols.len()).rank()
    }
}

pub fn catalecticant(f: &Tensor, d: &MultiDegree) -> Result<CatalecticantMatrix> {
    let shape = f.shape();
    shape.check_degree(d)?;
    let rows = MonomialBasis::new(shape, d)?;
    let cols = MonomialBasis::new(shape, &f.degree().sub(d))?;
    let mut entries = vec![vec![Q::zero(); cols.len()]; rows.len()];
    // Walk the support of F instead of the full grid.
    for (a, c) in f.terms() {
        for (i, e) in rows.monomials().iter().enumerate() {
            if let Some(rest) = e.quotient_of(a) {
                let j = cols.index_of(&rest).expect("quotient has complementary degree");
                entries[i][j] = c.clone();
            }
        }
    }
    Ok(CatalecticantMatrix { rows, cols, entries })
}

/// `F^⊥_D` as a subspace of `S_D` in the grevlex monomial basis.
pub fn apolar_subspace(f: &Tensor, d: &MultiDegree) -> Result<(MonomialBasis, Subspace)> {
    let cat = catalecticant(f, d)?;
    let n = cat.rows.len();
    let kernel = crate::linalg::left_kernel(&cat.entries, cat.cols.len());
    let space = Subspace::from_spanning(kernel, n);
    Ok((cat.rows, space))
}

/// Exact basis of `F^⊥_D`.
pub fn apolar_piece(f: &Tensor, d: &MultiDegree) -> Result<Vec<Polynomial>> {
    let (basis, space) = apolar_subspace(f, d)?;
    Ok(space.basis().iter().map(|v| Polynomial::from_vector(v, &basis)).collect())
}

/// `F^⊥` of a monomial `x^(a)`: generated by `alpha_i^{a_i + 1}`.
pub fn apolar_of_monomial(f: &Tensor) -> Result<MonomialIdeal> {
    let a = f.expect_monomial()?;
    let n = a.exponents().len();
    let gens = (0..n).map(|i| {
        let mut e = vec![0; n];
        e[i] = a.exponents()[i] + 1;
        Monomial::new(e)
    });
    Ok(MonomialIdeal::new(f.shape().clone(), gens.collect()))
}

/// True iff `F^⊥` has no forms in any variable degree.
pub fn is_concise(f: &Tensor) -> Result<bool> {
    let shape = f.shape();
    for j in 0..shape.num_factors() {
        let (_, space) = apolar_subspace(f, &shape.unit_degree(j))?;
        if space.dim() > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank of the catalecticant at `D`, i.e. `dim (S/F^⊥)_D`.
pub fn catalecticant_rank(f: &Tensor, d: &MultiDegree) -> Result<u64> {
    if let Some(a) = f.as_monomial() {
        return Ok(monomial_quotient_dim(f.shape(), a, d));
    }
    Ok(catalecticant(f, d)?.rank() as u64)
}

/// Number of monomials `e <= a` componentwise with `deg e = D`.
pub(crate) fn monomial_quotient_dim(shape: &FactorShape, a: &Monomial, d: &MultiDegree) -> u64 {
    if d.len() != shape.num_factors() || !d.is_effective() {
        return 0;
    }
    let mut acc: u64 = 1;
    for j in 0..shape.num_factors() {
        let bounds = &a.exponents()[shape.factor_vars(j)];
        acc = acc.saturating_mul(bounded_compositions(bounds, d.entries()[j] as u64));
        if acc == 0 {
            return 0;
        }
    }
    acc
}

/// Number of `(e_0..e_k)` with `0 <= e_i <= bounds_i` summing to `total`.
pub(crate) fn bounded_compositions(bounds: &[u32], total: u64) -> u64 {
    let t = total as usize;
    let mut ways = vec![0u64; t + 1];
    ways[0] = 1;
    for &b in bounds {
        let mut next = vec![0u64; t + 1];
        for (s, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for e in 0..=(b as usize).min(t - s) {
                next[s + e] = next[s + e].saturating_add(w);
            }
        }
        ways = next;
    }
    ways[t]
}

/// The catalecticant lower bound: the largest catalecticant rank over
/// effective `D <= L`, with the first degree attaining it.
pub fn catalecticant_lower_bound(f: &Tensor) -> Result<(u64, MultiDegree)> {
    if f.is_zero() {
        return Err(Error::OutOfRange("catalecticant bound of the zero tensor".into()));
    }
    let degrees = f.degree().lower_box();
    let ranks: Vec<u64> =
        degrees.par_iter().map(|d| catalecticant_rank(f, d)).collect::<Result<Vec<_>>>()?;
    let (i, best) = ranks
        .iter()
        .enumerate()
        .fold((0, 0), |(bi, bv), (i, &v)| if v > bv { (i, v) } else { (bi, bv) });
    Ok((best, degrees[i].clone()))
}
