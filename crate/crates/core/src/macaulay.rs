//! Macaulay coefficients and exponents, grevlex lex-segments, and the
//! Lex-bar bound on codimension growth of a direct sum of graded pieces.

use serde::Serialize;

use crate::binomial::binomial_i;
use crate::error::{Error, Result};
use crate::ring::{enumerate_monomials, FactorShape, Monomial, MultiDegree};

/// `r = sum_i C(a_i, i)` with `a_d > a_{d-1} > ... > a_1 >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MacaulayDecomposition {
    pub r: u64,
    pub d: u32,
    /// `(a_d, ..., a_1)`. Exhausted positions hold `a_i = i - 1`.
    pub coefficients: Vec<u64>,
}

impl MacaulayDecomposition {
    pub fn exponent(&self) -> u64 {
        self.coefficients
            .iter()
            .zip((1..=self.d as i64).rev())
            .map(|(&a, i)| binomial_i(a as i64 + 1, i + 1))
            .fold(0u64, u64::saturating_add)
    }
}

/// Largest `a` with `C(a, i) <= rem`, for `rem >= 1`.
fn largest_below(i: i64, rem: u64) -> u64 {
    if i == 1 {
        return rem;
    }
    let mut lo = i; // C(i, i) = 1 <= rem
    let mut step = 1i64;
    while binomial_i(lo + step, i) <= rem {
        lo += step;
        step *= 2;
    }
    let mut hi = lo + step; // C(hi, i) > rem
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binomial_i(mid, i) <= rem {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo as u64
}

pub fn macaulay_coefficients(r: u64, d: u32) -> Result<MacaulayDecomposition> {
    if d == 0 {
        return Err(Error::OutOfRange("Macaulay decomposition needs d >= 1".into()));
    }
    let mut rem = r;
    let mut coefficients = Vec::with_capacity(d as usize);
    for i in (1..=d as i64).rev() {
        if rem == 0 {
            coefficients.push((i - 1) as u64);
            continue;
        }
        let a = largest_below(i, rem);
        rem -= binomial_i(a as i64, i);
        coefficients.push(a);
    }
    Ok(MacaulayDecomposition { r, d, coefficients })
}

/// `r^<d>`.
pub fn macaulay_exponent(r: u64, d: u32) -> Result<u64> {
    Ok(macaulay_coefficients(r, d)?.exponent())
}

fn dim_sd(n: u32, d: i64) -> u64 {
    binomial_i(n as i64 + d, n as i64)
}

/// The last `dim S_d - r` monomials of `S_d` on `P^n` in grevlex.
pub fn lex_segment(n: u32, d: u32, r: u64) -> Result<Vec<Monomial>> {
    let shape = FactorShape::projective_space(n.max(1));
    if n == 0 {
        return Err(Error::OutOfRange("lex-segments need n >= 1".into()));
    }
    let all = enumerate_monomials(&shape, &MultiDegree::new(vec![d as i64]))?;
    if r > all.len() as u64 {
        return Err(Error::OutOfRange(format!("codimension {r} exceeds dim S_{d} = {}", all.len())));
    }
    Ok(all[r as usize..].to_vec())
}

/// The Lex-bar configuration: codimension removed from the smallest degrees
/// first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LexBarProfile {
    pub degrees: Vec<u32>,
    pub n: u32,
    pub codims: Vec<u64>,
    pub total: u64,
    /// `codim(Lex-bar * S_1)` inside the sum of the `S_{d_i + 1}`.
    pub growth: u64,
}

pub fn lexbar_profile(degrees: &[u32], n: u32, r: u64) -> Result<LexBarProfile> {
    if degrees.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::OutOfRange("Lex-bar degrees must be ascending".into()));
    }
    let capacity: u64 = degrees.iter().map(|&d| dim_sd(n, d as i64)).fold(0, u64::saturating_add);
    if r > capacity {
        return Err(Error::OutOfRange(format!("codimension {r} exceeds total dimension {capacity}")));
    }
    let mut rem = r;
    let mut codims = Vec::with_capacity(degrees.len());
    let mut growth = 0u64;
    for &d in degrees {
        let dim = dim_sd(n, d as i64);
        let c = rem.min(dim);
        rem -= c;
        codims.push(c);
        if c == dim && dim > 0 {
            growth = growth.saturating_add(dim_sd(n, d as i64 + 1));
        } else if c > 0 {
            growth = growth.saturating_add(macaulay_exponent(c, d)?);
        }
    }
    Ok(LexBarProfile { degrees: degrees.to_vec(), n, codims, total: r, growth })
}

/// Maximal codimension of `W * S_1` over subspaces `W` of the direct sum of
/// `S_{d_i}` with total codimension `r`.
pub fn lexbar_growth(degrees: &[u32], n: u32, r: u64) -> Result<u64> {
    Ok(lexbar_profile(degrees, n, r)?.growth)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients_examples() {
        assert_eq!(macaulay_coefficients(15, 3).unwrap().coefficients, vec![5, 3, 2]);
        assert_eq!(macaulay_coefficients(16, 3).unwrap().coefficients, vec![5, 4, 0]);
        assert_eq!(macaulay_coefficients(10, 2).unwrap().coefficients, vec![5, 0]);
        assert_eq!(macaulay_coefficients(0, 3).unwrap().coefficients, vec![2, 1, 0]);
        assert!(macaulay_coefficients(3, 0).is_err());
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(macaulay_exponent(15, 3).unwrap(), 22);
        assert_eq!(macaulay_exponent(16, 3).unwrap(), 25);
        assert_eq!(macaulay_exponent(10, 2).unwrap(), 20);
        assert_eq!(macaulay_exponent(3, 3).unwrap(), 3);
        assert_eq!(macaulay_exponent(13, 3).unwrap(), 19);
        assert_eq!(macaulay_exponent(12, 4).unwrap(), 15);
        assert_eq!(macaulay_exponent(0, 5).unwrap(), 0);
        // Degree one: r linear forms cut out r forms' worth of growth.
        assert_eq!(macaulay_exponent(7, 1).unwrap(), 28);
    }

    #[test]
    fn decomposition_sums_back() {
        for d in 1..6u32 {
            for r in 0..500u64 {
                let dec = macaulay_coefficients(r, d).unwrap();
                let sum: u64 = dec.coefficients.iter().zip((1..=d as i64).rev()).map(|(&a, i)| binomial_i(a as i64, i)).sum();
                assert_eq!(sum, r);
                assert!(dec.coefficients.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }

    #[test]
    fn lex_segments() {
        let seg = lex_segment(1, 2, 1).unwrap();
        assert_eq!(seg, vec![Monomial::new(vec![1, 1]), Monomial::new(vec![0, 2])]);
        assert!(lex_segment(2, 2, 6).unwrap().is_empty());
        assert!(lex_segment(2, 2, 10).is_err());
        assert_eq!(lex_segment(2, 2, 3).unwrap().len(), 3);
    }

    #[test]
    fn lexbar_examples() {
        assert_eq!(lexbar_growth(&[2, 3, 3, 4], 3, 38).unwrap(), 65);
        assert_eq!(lexbar_growth(&[3, 3, 3, 4], 3, 15).unwrap(), 22);
        assert_eq!(lexbar_growth(&[1, 2], 2, 0).unwrap(), 0);
        let prof = lexbar_profile(&[2, 3, 3, 4], 3, 38).unwrap();
        assert_eq!(prof.codims, vec![10, 20, 8, 0]);
        assert!(lexbar_growth(&[3, 2], 3, 1).is_err());
        assert!(lexbar_growth(&[1], 1, 3).is_err());
        // Degree-zero summands are either full or emptied.
        assert_eq!(lexbar_growth(&[0, 1], 2, 1).unwrap(), 3);
    }
}
