use std::cmp::Ordering;

use apolar::apolarity::{apolar_of_monomial, catalecticant, catalecticant_rank, hook_tensor, is_concise};
use apolar::bounds::{bound_report, monomial_tensor, upper_bound_monomial};
use apolar::ideals::{
    contained_in_apolar, contained_in_apolar_every_degree, irrelevant_generators, ApolarIdeal, GradedIdeal,
};
use apolar::linalg::{q, Q};
use apolar::poly::Polynomial;
use apolar::ring::{compare_grevlex, enumerate_monomials, piece_dimension};
use apolar::{FactorShape, Ideal, Monomial, MonomialIdeal, MultiDegree, Tensor};
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn shapes() -> impl Strategy<Value = Vec<u32>> {
    prop_oneof![
        Just(vec![1]),
        Just(vec![2]),
        Just(vec![3]),
        Just(vec![1, 1]),
        Just(vec![2, 1]),
        Just(vec![1, 1, 1]),
    ]
}

/// A shape and a random degree on it.
fn shape_and_degree(max: i64) -> impl Strategy<Value = (FactorShape, MultiDegree)> {
    shapes().prop_flat_map(move |f| {
        let w = f.len();
        (Just(f), proptest::collection::vec(0..=max, w))
            .prop_map(|(f, d)| (FactorShape::new(f).unwrap(), MultiDegree::new(d)))
    })
}

/// A random tensor with small integer coefficients on a random subset of
/// the monomials of its degree.
fn tensors(max: i64) -> impl Strategy<Value = Tensor> {
    shape_and_degree(max)
        .prop_filter("non-zero degree", |(_, d)| d.total() > 0)
        .prop_flat_map(|(shape, d)| {
            let n = enumerate_monomials(&shape, &d).unwrap().len();
            (Just(shape), Just(d), proptest::collection::vec(-3i64..=3, n))
        })
        .prop_filter_map("non-zero tensor", |(shape, d, coeffs)| {
            let ms = enumerate_monomials(&shape, &d).unwrap();
            let terms: Vec<(Monomial, Q)> = ms.into_iter().zip(coeffs).map(|(m, c)| (m, q(c))).collect();
            let t = Tensor::new(shape, d, terms).unwrap();
            (!t.is_zero()).then_some(t)
        })
}

fn monomial_in(shape: &FactorShape, d: &MultiDegree, pick: usize) -> Monomial {
    let ms = enumerate_monomials(shape, d).unwrap();
    ms[pick % ms.len()].clone()
}

/// Independent grevlex on one block of variables: higher total degree wins;
/// otherwise the last non-zero entry of `a - b` decides, negative meaning `a`
/// is larger.
fn grevlex_oracle(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    if da != db {
        return da.cmp(&db);
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[test]
fn grevlex_examples() {
    let m = |e: &[u32]| Monomial::new(e.to_vec());
    assert_eq!(compare_grevlex(&m(&[2, 0, 0]), &m(&[1, 1, 0])).unwrap(), Ordering::Greater);
    assert_eq!(compare_grevlex(&m(&[1, 0, 1]), &m(&[0, 2, 0])).unwrap(), Ordering::Less);
    assert_eq!(compare_grevlex(&m(&[1, 1, 1]), &m(&[1, 1, 1])).unwrap(), Ordering::Equal);
}

#[test]
fn grevlex_total_order_exhaustive() {
    for (factors, d) in [(vec![2], vec![3]), (vec![3], vec![2]), (vec![1, 1], vec![2, 1]), (vec![2, 1], vec![1, 2])] {
        let shape = FactorShape::new(factors.clone()).unwrap();
        let ms = enumerate_monomials(&shape, &MultiDegree::new(d)).unwrap();
        for a in &ms {
            for b in &ms {
                let ab = compare_grevlex(a, b).unwrap();
                assert_eq!(ab, compare_grevlex(b, a).unwrap().reverse());
                assert_eq!(ab == Ordering::Equal, a == b);
                if factors.len() == 1 {
                    assert_eq!(ab, grevlex_oracle(a.exponents(), b.exponents()));
                }
                for c in &ms {
                    if ab == Ordering::Greater && compare_grevlex(b, c).unwrap() == Ordering::Greater {
                        assert_eq!(compare_grevlex(a, c).unwrap(), Ordering::Greater);
                    }
                }
            }
        }
        // Enumeration lists the basis in descending grevlex.
        assert!(ms.windows(2).all(|w| compare_grevlex(&w[0], &w[1]).unwrap() == Ordering::Greater));
    }
}

#[test]
fn piece_dimension_exhaustive() {
    for factors in [vec![1], vec![2], vec![4], vec![1, 1], vec![2, 1], vec![1, 1, 1], vec![2, 2], vec![1, 1, 1, 1]] {
        let shape = FactorShape::new(factors.clone()).unwrap();
        let w = factors.len();
        for total in 0..=8i64 {
            for d in MultiDegree::of_total(w, total) {
                let n = enumerate_monomials(&shape, &d).unwrap().len() as u64;
                let formula: u64 =
                    factors.iter().zip(d.entries()).map(|(&a, &k)| binom(a as u64 + k as u64, a as u64)).product();
                assert_eq!(piece_dimension(&shape, &d).unwrap().to_u64().unwrap(), n, "{factors:?} {d}");
                assert_eq!(n, formula);
            }
        }
    }
}

#[test]
fn piece_dimension_multiplicative() {
    for (a, b) in [(1u32, 2u32), (2, 2), (3, 1)] {
        let ab = FactorShape::new(vec![a, b]).unwrap();
        for i in 0..5i64 {
            for j in 0..5i64 {
                let lhs = piece_dimension(&ab, &MultiDegree::new(vec![i, j])).unwrap();
                let pa = piece_dimension(&FactorShape::new(vec![a]).unwrap(), &MultiDegree::new(vec![i])).unwrap();
                let pb = piece_dimension(&FactorShape::new(vec![b]).unwrap(), &MultiDegree::new(vec![j])).unwrap();
                assert_eq!(lhs, pa * pb);
            }
        }
    }
}

/// `dim (S/F^⊥)_D` for a monomial counts exponents `e <= a` of degree `D`.
#[test]
fn monomial_quotient_counts_bounded_exponents() {
    for factors in [vec![2], vec![3], vec![1, 1], vec![2, 1]] {
        let shape = FactorShape::new(factors.clone()).unwrap();
        for total in 1..=5i64 {
            for l in MultiDegree::of_total(factors.len(), total) {
                for a in enumerate_monomials(&shape, &l).unwrap() {
                    let f = Tensor::monomial(shape.clone(), a.clone()).unwrap();
                    for d in l.lower_box() {
                        let count = enumerate_monomials(&shape, &d)
                            .unwrap()
                            .iter()
                            .filter(|e| e.exponents().iter().zip(a.exponents()).all(|(x, y)| x <= y))
                            .count() as u64;
                        assert_eq!(catalecticant_rank(&f, &d).unwrap(), count);
                        assert_eq!(ApolarIdeal(&f).hilbert(&d).unwrap().quotient, count);
                    }
                }
            }
        }
    }
}

#[test]
fn concise_examples() {
    let diag = Tensor::new(
        FactorShape::new(vec![1, 1, 1]).unwrap(),
        MultiDegree::new(vec![1, 1, 1]),
        [
            (Monomial::new(vec![1, 0, 1, 0, 1, 0]), q(1)),
            (Monomial::new(vec![0, 1, 0, 1, 0, 1]), q(1)),
        ],
    )
    .unwrap();
    assert!(is_concise(&diag).unwrap());
    let x0 = monomial_tensor(&[1], &[vec![3, 0]]).unwrap();
    assert!(!is_concise(&x0).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hook_is_associative(f in tensors(3), p1 in 0usize..50, p2 in 0usize..50, s1 in 0u64..4, s2 in 0u64..4) {
        let shape = f.shape().clone();
        let l = f.degree().clone();
        // Split L into D1 + D2 + rest.
        let d1 = MultiDegree::new(l.entries().iter().map(|&x| (s1 as i64).min(x)).collect());
        let rest = l.sub(&d1);
        let d2 = MultiDegree::new(rest.entries().iter().map(|&x| (s2 as i64).min(x)).collect());
        let t1 = Polynomial::from_terms([
            (monomial_in(&shape, &d1, p1), q(2)),
            (monomial_in(&shape, &d1, p1 + 1), q(-1)),
        ]);
        let t2 = Polynomial::from_terms([
            (monomial_in(&shape, &d2, p2), q(1)),
            (monomial_in(&shape, &d2, p2 + 3), q(3)),
        ]);
        let lhs = hook_tensor(&t1.mul(&t2), &f).unwrap();
        let rhs = hook_tensor(&t1, &hook_tensor(&t2, &f).unwrap()).unwrap();
        prop_assert_eq!(lhs.degree(), rhs.degree());
        prop_assert_eq!(lhs.terms().collect::<Vec<_>>(), rhs.terms().collect::<Vec<_>>());
    }

    #[test]
    fn catalecticant_symmetry(f in tensors(3)) {
        let l = f.degree().clone();
        for d in l.lower_box() {
            let here = catalecticant_rank(&f, &d).unwrap();
            let there = catalecticant_rank(&f, &l.sub(&d)).unwrap();
            prop_assert_eq!(here, there, "D = {}", d);
            let h = ApolarIdeal(&f).hilbert(&d).unwrap();
            prop_assert_eq!(h.quotient, here);
            prop_assert_eq!(h.ideal + h.quotient, piece_dimension(f.shape(), &d).unwrap().to_u64().unwrap());
            let m = catalecticant(&f, &d).unwrap();
            prop_assert_eq!(m.rank() as u64, here);
        }
    }

    #[test]
    fn apolar_paths_agree_for_monomials((shape, l) in shape_and_degree(3), pick in 0usize..100) {
        prop_assume!(l.total() > 0);
        let a = monomial_in(&shape, &l, pick);
        let f = Tensor::monomial(shape.clone(), a).unwrap();
        let mono = apolar_of_monomial(&f).unwrap();
        let total = l.total();
        for t in 0..=total {
            for d in MultiDegree::of_total(shape.num_factors(), t) {
                let (b1, s1) = ApolarIdeal(&f).piece(&d).unwrap();
                let (b2, s2) = mono.piece(&d).unwrap();
                prop_assert_eq!(b1.monomials(), b2.monomials());
                prop_assert!(s1.is_subspace_of(&s2) && s2.is_subspace_of(&s1), "D = {}", d);
            }
        }
    }

    #[test]
    fn containment_in_degree_l_matches_every_degree(f in tensors(2), gens in proptest::collection::vec((0usize..40, 0u64..3), 1..4)) {
        let shape = f.shape().clone();
        let l = f.degree().clone();
        // Generators are apolar pieces plus perturbations, so both outcomes occur.
        let mut polys = Vec::new();
        for (pick, s) in gens {
            let d = MultiDegree::new(l.entries().iter().map(|&x| x.min(s as i64)).collect());
            if d.total() == 0 {
                continue;
            }
            let (basis, space) = ApolarIdeal(&f).piece(&d).unwrap();
            let p = match space.basis().get(pick % (space.dim() + 1)) {
                Some(v) => Polynomial::from_vector(v, &basis),
                None => Polynomial::monomial(monomial_in(&shape, &d, pick)),
            };
            polys.push(p);
        }
        let ideal = GradedIdeal::from_polynomials(shape, polys).unwrap();
        prop_assert_eq!(contained_in_apolar(&ideal, &f).unwrap(), contained_in_apolar_every_degree(&ideal, &f).unwrap());
    }

    #[test]
    fn saturation_idempotent_and_extensive(factors in shapes(), raw in proptest::collection::vec(proptest::collection::vec(0u32..3, 6), 1..5)) {
        let shape = FactorShape::new(factors).unwrap();
        let n = shape.num_vars();
        let gens: Vec<Monomial> = raw.into_iter().map(|v| Monomial::new(v[..n].to_vec())).collect();
        let i = MonomialIdeal::new(shape.clone(), gens);
        let sat = i.saturate();
        prop_assert_eq!(sat.saturate(), sat.clone());
        prop_assert!(sat.is_saturated());
        for g in i.generators() {
            prop_assert!(sat.contains(g));
        }
        // m is in the saturation iff m * b^k lies in I for every irrelevant
        // generator b, with k the largest generator degree.
        let k = i.generators().iter().map(|g| g.total_degree()).max().unwrap_or(0) as usize + 1;
        let irr = irrelevant_generators(&shape);
        for total in 0..=3i64 {
            for d in MultiDegree::of_total(shape.num_factors(), total) {
                for m in enumerate_monomials(&shape, &d).unwrap() {
                    let oracle = irr.iter().all(|b| {
                        let mut p = m.clone();
                        for _ in 0..k {
                            p = p.mul(b);
                        }
                        i.contains(&p)
                    });
                    prop_assert_eq!(sat.contains(&m), oracle, "m = {:?}", m.exponents());
                }
            }
        }
    }

    #[test]
    fn hilbert_parts_sum_to_piece_dimension(factors in shapes(), raw in proptest::collection::vec(proptest::collection::vec(0u32..3, 6), 0..4), total in 0i64..5) {
        let shape = FactorShape::new(factors).unwrap();
        let n = shape.num_vars();
        let gens: Vec<Monomial> = raw.into_iter().map(|v| Monomial::new(v[..n].to_vec())).collect();
        let i = MonomialIdeal::new(shape.clone(), gens);
        let g = GradedIdeal::from_monomial_ideal(&i);
        for d in MultiDegree::of_total(shape.num_factors(), total) {
            let h = i.hilbert(&d).unwrap();
            prop_assert_eq!(h, g.hilbert(&d).unwrap());
            prop_assert_eq!(h.ideal + h.quotient, piece_dimension(&shape, &d).unwrap().to_u64().unwrap());
        }
    }

    #[test]
    fn bounds_are_ordered_and_monotone(a in proptest::collection::vec(0u32..4, 4), bump in 0usize..4) {
        prop_assume!(a.iter().sum::<u32>() > 0);
        let f = monomial_tensor(&[3], std::slice::from_ref(&a)).unwrap();
        let mut b = a.clone();
        b[bump] += 1;
        let g = monomial_tensor(&[3], &[b]).unwrap();
        let rf = bound_report(&f).unwrap();
        let rg = bound_report(&g).unwrap();
        let uf = upper_bound_monomial(&f).unwrap().value;
        let ug = upper_bound_monomial(&g).unwrap().value;
        prop_assert!(rf.catalecticant.value <= rf.disjoint_module.as_ref().unwrap().value);
        prop_assert!(rf.disjoint_module.as_ref().unwrap().value <= uf);
        prop_assert!(rf.lower.value <= uf);
        prop_assert!(uf <= ug);
        prop_assert!(rf.catalecticant.value <= rg.catalecticant.value);
    }
}
