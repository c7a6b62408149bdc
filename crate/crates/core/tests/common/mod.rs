//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use apolar::ring::enumerate_monomials;
use apolar::{FactorShape, Monomial, MultiDegree, Tensor};

/// Exponent vectors of degree `d` in `k` variables.
pub fn monomials(k: usize, d: u32) -> Vec<Vec<u32>> {
    if k == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials(k - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `codim(W * S_1 ⊂ S_{d+1})` for `W` spanned by the given monomials.
pub fn growth_codim(k: usize, d: u32, w: &[Vec<u32>]) -> u64 {
    let mut up = BTreeSet::new();
    for m in w {
        for v in 0..k {
            let mut n = m.clone();
            n[v] += 1;
            up.insert(n);
        }
    }
    binom(k as u64 + d as u64, d as u64 + 1) - up.len() as u64
}

pub fn chosen(all: &[Vec<u32>], mask: u32) -> Vec<Vec<u32>> {
    all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, m)| m.clone()).collect()
}

/// Every effective degree of total degree at most `t`, by total degree.
pub fn degrees(w: usize, t: i64) -> Vec<MultiDegree> {
    fn rec(w: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<MultiDegree>) {
        if cur.len() == w - 1 {
            cur.push(left);
            out.push(MultiDegree::new(cur.clone()));
            cur.pop();
            return;
        }
        for k in (0..=left).rev() {
            cur.push(k);
            rec(w, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for s in 0..=t {
        rec(w, s, &mut Vec::new(), &mut out);
    }
    out
}

pub fn subsets<T: Clone>(items: &[T], k: usize, f: &mut dyn FnMut(&[T]) -> bool) -> bool {
    fn go<T: Clone>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, f: &mut dyn FnMut(&[T]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i].clone());
            if go(items, k, i + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(items, k, 0, &mut Vec::new(), f)
}

/// True iff some monomial ideal inside `F^⊥` has `dim (S/I)_D = min(r, dim S_D)`
/// for every degree of total degree at most `|L|`.
pub fn oracle_fits(f: &Tensor, r: u64) -> bool {
    let shape = f.shape().clone();
    let a = f.as_monomial().unwrap().exponents().to_vec();
    let in_apolar = |m: &Monomial| m.exponents().iter().zip(&a).any(|(e, ai)| e > ai);
    let schedule = degrees(shape.num_factors(), f.degree().total());
    fn rec(
        shape: &FactorShape,
        schedule: &[MultiDegree],
        i: usize,
        r: u64,
        chosen: &mut BTreeMap<MultiDegree, BTreeSet<Monomial>>,
        in_apolar: &dyn Fn(&Monomial) -> bool,
    ) -> bool {
        let Some(d) = schedule.get(i) else { return true };
        let all = enumerate_monomials(shape, d).unwrap();
        let need = all.len() as u64 - r.min(all.len() as u64);
        let mut forced = BTreeSet::new();
        for (dd, set) in chosen.iter() {
            let diff = d.sub(dd);
            if diff.total() == 1 && diff.is_effective() {
                let j = diff.entries().iter().position(|&x| x == 1).unwrap();
                for m in set {
                    for v in shape.factor_vars(j) {
                        forced.insert(m.times_var(v));
                    }
                }
            }
        }
        if forced.len() as u64 > need {
            return false;
        }
        let free: Vec<Monomial> = all.into_iter().filter(|m| !forced.contains(m) && in_apolar(m)).collect();
        let k = (need - forced.len() as u64) as usize;
        if free.len() < k {
            return false;
        }
        let d = d.clone();
        subsets(&free, k, &mut |extra| {
            let mut set = forced.clone();
            set.extend(extra.iter().cloned());
            chosen.insert(d.clone(), set);
            let ok = rec(shape, schedule, i + 1, r, chosen, in_apolar);
            chosen.remove(&d);
            ok
        })
    }
    rec(&shape, &schedule, 0, r, &mut BTreeMap::new(), &in_apolar)
}

pub fn monomials_up_to(factors: &[u32], max_total: u32) -> Vec<Tensor> {
    let shape = FactorShape::new(factors.to_vec()).unwrap();
    let mut out = Vec::new();
    for d in degrees(factors.len(), max_total as i64) {
        if d.total() == 0 {
            continue;
        }
        for m in enumerate_monomials(&shape, &d).unwrap() {
            out.push(Tensor::monomial(shape.clone(), m).unwrap());
        }
    }
    out
}

pub fn dim_sl(f: &Tensor) -> u64 {
    enumerate_monomials(f.shape(), f.degree()).unwrap().len() as u64
}
