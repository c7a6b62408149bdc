//! Sparse polynomials with exact rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::ring::{FactorShape, Monomial, MonomialBasis, MultiDegree};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Q>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Q::from_integer(1.into()))
    }

    pub fn term(m: Monomial, c: Q) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
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

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        Polynomial::from_terms(self.terms().map(|(m, x)| (m.clone(), x * c)))
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&Q::from_integer((-1).into())))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// The common multidegree of all terms; zero polynomials have none.
    pub fn homogeneous_degree(&self, shape: &FactorShape) -> Result<Option<MultiDegree>> {
        let mut deg = None;
        for m in self.terms.keys() {
            shape.check_monomial(m)?;
            let d = shape.degree_of(m);
            match &deg {
                None => deg = Some(d),
                Some(prev) if *prev != d => return Err(Error::Inhomogeneous),
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Coordinates in a monomial basis. Terms outside the basis are an error.
    pub fn to_vector(&self, basis: &MonomialBasis) -> Result<Vec<Q>> {
        let mut v = vec![Q::zero(); basis.len()];
        for (m, c) in self.terms() {
            let i = basis.index_of(m).ok_or_else(|| Error::DegreeMismatch {
                degree: format!("{:?}", m.exponents()),
                expected: basis.degree().to_string(),
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn from_vector(v: &[Q], basis: &MonomialBasis) -> Polynomial {
        Polynomial::from_terms(
            v.iter().zip(basis.monomials()).filter(|(c, _)| !c.is_zero()).map(|(c, m)| (m.clone(), c.clone())),
        )
    }
}
