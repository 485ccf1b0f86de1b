use std::cmp::Ordering;

use dualskew_core::exactmath::{factor_degrees_mod_p, rat, BigRat, IntPoly, RatPoly};
use dualskew_core::roots::{count_roots, isolate_roots, refine_root, sturm_chain};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn int_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
}

fn nonzero_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    int_poly(max_deg, bound).prop_filter("nonzero", |p| !p.is_zero())
}

/// Product of linear factors `(d t - n)` with distinct roots in `(0, 1)`.
fn rooted_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::btree_set((1i64..40, 2i64..41), 1..6).prop_map(|pairs| {
        let mut roots: Vec<BigRat> = pairs.into_iter().filter(|(n, d)| n < d).map(|(n, d)| rat(n, d)).collect();
        roots.sort();
        roots.dedup();
        roots.into_iter().fold(IntPoly::one(), |acc, r| {
            &acc * &IntPoly::new(vec![-r.numer().clone(), r.denom().clone()])
        })
    })
}

fn brute_force_count(p: &IntPoly, a: &BigRat, b: &BigRat) -> usize {
    // roots are n/d with d <= 40, so distinct roots are at least 1/1600 apart
    let steps = 40 * 41 * 4;
    let mut count = 0;
    let mut prev = p.sign_at(a);
    for k in 1..=steps {
        let x = a + (b - a) * rat(k, steps);
        let s = p.sign_at(&x);
        if s == Ordering::Equal {
            count += 1;
        } else if prev != Ordering::Equal && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

proptest! {
    #[test]
    fn leibniz_rule(p in int_poly(8, 20), q in int_poly(8, 20)) {
        let lhs = (&p * &q).derive(1);
        let rhs = &(&p.derive(1) * &q) + &(&p * &q.derive(1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn division_reconstructs(p in int_poly(10, 50), d in nonzero_poly(5, 9)) {
        let (pr, dr) = (RatPoly::from(&p), RatPoly::from(&d));
        let (q, r) = pr.div_rem(&dr).unwrap();
        prop_assert!(r.is_zero() || r.degree() < dr.degree());
        prop_assert_eq!(&(&q * &dr) + &r, pr);
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in int_poly(6, 30), q in int_poly(6, 30), n in -20i64..20, d in 1i64..20) {
        let x = rat(n, d);
        prop_assert_eq!((&p * &q).eval_rat(&x), p.eval_rat(&x) * q.eval_rat(&x));
        prop_assert_eq!((&p + &q).eval_rat(&x), p.eval_rat(&x) + q.eval_rat(&x));
    }

    #[test]
    fn factor_degrees_sum_to_degree(p in nonzero_poly(12, 30), idx in 0usize..6) {
        let prime = [3u64, 5, 7, 11, 13, 101][idx];
        if let Ok(degs) = factor_degrees_mod_p(&p, prime) {
            prop_assert_eq!(degs.iter().sum::<usize>(), p.degree().unwrap());
        }
    }

    #[test]
    fn sturm_matches_brute_force(p in rooted_poly(), c in 1i64..9) {
        let q = p.scale(&BigInt::from(-c));
        let chain = sturm_chain(&q).unwrap();
        let (a, b) = (BigRat::zero(), rat(1, 1));
        prop_assert_eq!(count_roots(&chain, &a, &b, true).unwrap(), brute_force_count(&q, &a, &b));
    }

    #[test]
    fn refinement_keeps_the_root(p in rooted_poly(), e in 4u32..60) {
        let sq = p.squarefree_part().unwrap();
        let eps = BigRat::new(BigInt::from(1), BigInt::from(1u64) << e);
        for bx in isolate_roots(&sq, &BigRat::zero(), &rat(1, 1)).unwrap() {
            let r = refine_root(&sq, &bx, &eps).unwrap();
            if let Some(x) = r.exact_value() {
                prop_assert!(sq.eval_rat(x).is_zero());
            } else {
                prop_assert!(r.width() < eps);
                prop_assert!(r.low() >= bx.low() && r.high() <= bx.high());
                let lo = sq.sign_at(r.low());
                let hi = sq.sign_at(r.high());
                prop_assert!(lo == Ordering::Equal || lo != hi);
            }
        }
    }
}
