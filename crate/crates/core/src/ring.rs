//! The multigraded Cox ring of a product of projective spaces.
//!
//! Variables are ordered factor-major: all variables of the first factor,
//! then all variables of the second, and so on. Multidegrees live in `Z^w`,
//! one coordinate per factor.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::Range;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::binomial;
use crate::error::{Error, Result};

/// The ambient variety `P^{a_1} x ... x P^{a_w}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorShape {
    factors: Vec<u32>,
    offsets: Vec<usize>,
}

impl FactorShape {
    /// A product of positive-dimensional projective spaces.
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.contains(&0) {
            return Err(Error::InvalidShape(
                "point factors need FactorShape::with_point_factors".into(),
            ));
        }
        Self::with_point_factors(factors)
    }

    /// Like [`FactorShape::new`] but admits zero-dimensional factors.
    pub fn with_point_factors(factors: Vec<u32>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidShape("at least one factor required".into()));
        }
        let mut offsets = Vec::with_capacity(factors.len() + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for &a in &factors {
            acc += a as usize + 1;
            offsets.push(acc);
        }
        Ok(FactorShape { factors, offsets })
    }

    pub fn projective_space(n: u32) -> Self {
        Self::new(vec![n]).expect("P^n with n >= 1")
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn num_vars(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// Variable indices belonging to factor `j`.
    pub fn factor_vars(&self, j: usize) -> Range<usize> {
        self.offsets[j]..self.offsets[j + 1]
    }

    pub fn factor_of_var(&self, v: usize) -> usize {
        self.offsets[1..].iter().position(|&o| v < o).expect("variable index in range")
    }

    /// Degree of any variable of factor `j`.
    pub fn unit_degree(&self, j: usize) -> MultiDegree {
        let mut e = vec![0; self.num_factors()];
        e[j] = 1;
        MultiDegree(e)
    }

    pub fn zero_degree(&self) -> MultiDegree {
        MultiDegree(vec![0; self.num_factors()])
    }

    pub fn check_degree(&self, d: &MultiDegree) -> Result<()> {
        if d.len() != self.num_factors() {
            return Err(Error::DimensionMismatch { expected: self.num_factors(), got: d.len() });
        }
        Ok(())
    }

    pub fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.exponents().len() != self.num_vars() {
            return Err(Error::ShapeMismatch(format!(
                "monomial has {} variables, shape has {}",
                m.exponents().len(),
                self.num_vars()
            )));
        }
        Ok(())
    }

    /// Per-factor exponent sums of `m`.
    pub fn degree_of(&self, m: &Monomial) -> MultiDegree {
        MultiDegree(
            (0..self.num_factors())
                .map(|j| m.exponents()[self.factor_vars(j)].iter().map(|&e| e as i64).sum())
                .collect(),
        )
    }

    /// Builds a monomial from exponents grouped by factor.
    pub fn monomial(&self, groups: &[Vec<u32>]) -> Result<Monomial> {
        if groups.len() != self.num_factors() {
            return Err(Error::DimensionMismatch { expected: self.num_factors(), got: groups.len() });
        }
        let mut exps = Vec::with_capacity(self.num_vars());
        for (j, g) in groups.iter().enumerate() {
            if g.len() != self.factors[j] as usize + 1 {
                return Err(Error::ShapeMismatch(format!(
                    "factor {j} expects {} exponents, got {}",
                    self.factors[j] + 1,
                    g.len()
                )));
            }
            exps.extend_from_slice(g);
        }
        Ok(Monomial::new(exps))
    }

    /// Exponents of `m` grouped by factor.
    pub fn group(&self, m: &Monomial) -> Vec<Vec<u32>> {
        (0..self.num_factors()).map(|j| m.exponents()[self.factor_vars(j)].to_vec()).collect()
    }

    pub fn variable(&self, v: usize) -> Monomial {
        let mut exps = vec![0; self.num_vars()];
        exps[v] = 1;
        Monomial::new(exps)
    }

    pub fn one(&self) -> Monomial {
        Monomial::new(vec![0; self.num_vars()])
    }
}

impl fmt::Display for FactorShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|a| format!("P^{a}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// An element of `Pic(X) = Z^w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiDegree(pub Vec<i64>);

impl MultiDegree {
    pub fn new(entries: Vec<i64>) -> Self {
        MultiDegree(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&d| d >= 0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &MultiDegree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// All effective degrees `E` with `E <= self` componentwise, in
    /// lexicographic order.
    pub fn lower_box(&self) -> Vec<MultiDegree> {
        if !self.is_effective() {
            return Vec::new();
        }
        let mut out = vec![Vec::new()];
        for &d in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    (0..=d).map(move |e| {
                        let mut p = prefix.clone();
                        p.push(e);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(MultiDegree).collect()
    }

    /// All effective degrees in `w` coordinates of total degree exactly `t`,
    /// in lexicographic order.
    pub fn of_total(w: usize, t: i64) -> Vec<MultiDegree> {
        fn rec(w: usize, t: i64, prefix: &mut Vec<i64>, out: &mut Vec<MultiDegree>) {
            if w == 1 {
                prefix.push(t);
                out.push(MultiDegree(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in 0..=t {
                prefix.push(e);
                rec(w - 1, t - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if t >= 0 && w > 0 {
            rec(w, t, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A monomial in the Cox ring, or a divided-power monomial of the dual ring.
///
/// Exponents are stored flat in factor-major order; grouping is recovered
/// through the owning [`FactorShape`]. The derived `Ord` is plain
/// lexicographic and only used for map keys; the monomial order proper is
/// [`compare_grevlex`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::new(other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    /// Exponents `max(self_i - other_i, 0)`.
    pub fn saturating_div(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    pub fn times_var(&self, v: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[v] += 1;
        Monomial::new(exps)
    }
}

/// Dimension of the graded piece `S_D`: the product of `C(a_j + d_j, a_j)`,
/// or zero if `D` is not effective.
pub fn piece_dimension(shape: &FactorShape, d: &MultiDegree) -> Result<BigUint> {
    shape.check_degree(d)?;
    if !d.is_effective() {
        return Ok(BigUint::zero());
    }
    let mut acc = BigUint::one();
    for (&a, &dj) in shape.factors().iter().zip(d.entries()) {
        acc *= binomial(a as u64 + dj as u64, a as u64);
    }
    Ok(acc)
}

/// [`piece_dimension`] narrowed to `u64`; `None` on overflow.
pub fn piece_dimension_u64(shape: &FactorShape, d: &MultiDegree) -> Result<Option<u64>> {
    Ok(piece_dimension(shape, d)?.to_u64())
}

/// Grevlex on the factor-major exponent vectors: larger total degree wins;
/// otherwise `m1 > m2` iff the last non-zero entry of `m1 - m2` is negative.
pub fn compare_grevlex(m1: &Monomial, m2: &Monomial) -> Result<Ordering> {
    if m1.exps.len() != m2.exps.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} vs {} variables",
            m1.exps.len(),
            m2.exps.len()
        )));
    }
    Ok(grevlex(m1, m2))
}

pub(crate) fn grevlex(m1: &Monomial, m2: &Monomial) -> Ordering {
    match m1.total_degree().cmp(&m2.total_degree()) {
        Ordering::Equal => {}
        other => return other,
    }
    for (a, b) in m1.exps.iter().zip(&m2.exps).rev() {
        if a != b {
            // a < b means the difference is negative, so m1 is greater.
            return b.cmp(a);
        }
    }
    Ordering::Equal
}

fn compositions(n_vars: usize, total: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, t: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 1 {
            prefix.push(t);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=t).rev() {
            prefix.push(e);
            rec(n - 1, t - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n_vars, total, &mut Vec::new(), &mut out);
    out
}

/// All monomials of multidegree `D`, sorted descending in grevlex.
pub fn enumerate_monomials(shape: &FactorShape, d: &MultiDegree) -> Result<Vec<Monomial>> {
    shape.check_degree(d)?;
    if !d.is_effective() {
        return Ok(Vec::new());
    }
    let mut acc: Vec<Vec<u32>> = vec![Vec::new()];
    for (j, &dj) in d.entries().iter().enumerate() {
        let parts = compositions(shape.factors()[j] as usize + 1, dj as u32);
        let mut next = Vec::with_capacity(acc.len() * parts.len());
        for prefix in &acc {
            for p in &parts {
                let mut v = prefix.clone();
                v.extend_from_slice(p);
                next.push(v);
            }
        }
        acc = next;
    }
    let mut out: Vec<Monomial> = acc.into_iter().map(Monomial::new).collect();
    out.sort_by(|a, b| grevlex(b, a));
    Ok(out)
}

/// The grevlex-ordered monomial basis of one graded piece with an index.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    degree: MultiDegree,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(shape: &FactorShape, d: &MultiDegree) -> Result<Self> {
        let monomials = enumerate_monomials(shape, d)?;
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(MonomialBasis { degree: d.clone(), monomials, index })
    }

    pub fn degree(&self) -> &MultiDegree {
        &self.degree
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

fn factor_letter(j: usize) -> Result<char> {
    if j >= 26 {
        return Err(Error::parse("text format supports at most 26 factors"));
    }
    Ok((b'a' + j as u8) as char)
}

/// Prints `m` as `a0^2*a1|b1`: factors separated by `|`, variables of
/// factor `j` named by the `j`-th letter, exponent 1 implicit, an empty
/// factor printed as `1`.
pub fn format_monomial(shape: &FactorShape, m: &Monomial) -> Result<String> {
    shape.check_monomial(m)?;
    let mut parts = Vec::with_capacity(shape.num_factors());
    for j in 0..shape.num_factors() {
        let letter = factor_letter(j)?;
        let vars = shape.factor_vars(j);
        let terms: Vec<String> = m.exponents()[vars]
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("{letter}{i}") } else { format!("{letter}{i}^{e}") })
            .collect();
        parts.push(if terms.is_empty() { "1".to_string() } else { terms.join("*") });
    }
    Ok(parts.join("|"))
}

/// Inverse of [`format_monomial`]. Also accepts explicit `^1` and `^0`.
pub fn parse_monomial(shape: &FactorShape, s: &str) -> Result<Monomial> {
    let groups: Vec<&str> = s.trim().split('|').collect();
    if groups.len() != shape.num_factors() {
        return Err(Error::parse(format!(
            "expected {} factors in {s:?}, found {}",
            shape.num_factors(),
            groups.len()
        )));
    }
    let mut exps = vec![0u32; shape.num_vars()];
    for (j, g) in groups.iter().enumerate() {
        let letter = factor_letter(j)?;
        let g = g.trim();
        if g == "1" {
            continue;
        }
        for term in g.split('*') {
            let term = term.trim();
            let rest = term
                .strip_prefix(letter)
                .ok_or_else(|| Error::parse(format!("bad variable {term:?} in factor {j}")))?;
            let (idx, e) = match rest.split_once('^') {
                Some((i, e)) => (i, e.parse::<u32>().map_err(|_| Error::parse(format!("bad exponent in {term:?}")))?),
                None => (rest, 1),
            };
            let idx: usize = idx.parse().map_err(|_| Error::parse(format!("bad index in {term:?}")))?;
            if idx > shape.factors()[j] as usize {
                return Err(Error::parse(format!("variable {term:?} out of range")));
            }
            exps[shape.factor_vars(j).start + idx] += e;
        }
    }
    Ok(Monomial::new(exps))
}
