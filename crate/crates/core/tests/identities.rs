use dualskew_core::exactmath::rat;
use dualskew_core::orthopoly::{
    verify_d_from_b, verify_formula_a, verify_jacobi_identity, verify_legendre_identity, verify_recurrence,
    verify_rodrigues,
};
use dualskew_core::roots::{boundary_sign_check, smallest_root, verify_conjecture2};
use dualskew_core::skewgrowth::{
    derivative_at_one, derivative_at_one_closed_form, has_factor_one_minus_2t, CoxeterType, Series,
};

#[test]
fn orthogonal_polynomial_identities_to_rank_40() {
    for s in Series::ALL {
        for l in s.min_rank()..=40 {
            assert!(verify_rodrigues(s, l).unwrap().holds(), "{s}{l}");
            let c = s.at(l).unwrap();
            assert!(verify_jacobi_identity(c, None).unwrap().holds(), "{c}");
            if s != Series::D {
                assert!(verify_legendre_identity(s, l).unwrap().holds(), "{c}");
            } else {
                assert!(verify_d_from_b(l).unwrap().holds(), "{c}");
            }
        }
    }
    for l in 1..=40 {
        assert!(verify_recurrence(Series::A, l).unwrap().holds());
    }
    for l in 3..=40 {
        assert!(verify_formula_a(l).unwrap());
    }
}

#[test]
fn dihedral_jacobi_identities() {
    for p in 3..=20 {
        assert!(verify_jacobi_identity(CoxeterType::i2(p).unwrap(), None).unwrap().holds(), "I2({p})");
    }
}

#[test]
fn root_counts_and_boundary_values() {
    for s in Series::ALL {
        for l in s.min_rank()..=25 {
            let c = s.at(l).unwrap();
            assert!(verify_conjecture2(c).unwrap().holds(), "{c}");
            assert_eq!(derivative_at_one(c), derivative_at_one_closed_form(c).unwrap());
        }
    }
    for c in CoxeterType::exceptional() {
        assert!(boundary_sign_check(c).unwrap(), "{c}");
    }
}

#[test]
fn divisibility_by_one_minus_2t() {
    for l in 1..=30 {
        assert_eq!(has_factor_one_minus_2t(CoxeterType::a(l).unwrap()), l % 2 == 0);
    }
    for l in 4..=30 {
        assert_eq!(has_factor_one_minus_2t(CoxeterType::d(l).unwrap()), l == 4);
    }
}

#[test]
fn smallest_roots_shrink() {
    let eps = rat(1, 1 << 30);
    let (_, a10) = smallest_root(CoxeterType::a(10).unwrap(), &eps).unwrap();
    let (_, a20) = smallest_root(CoxeterType::a(20).unwrap(), &eps).unwrap();
    assert!(a10.strictly_above(&a20));
}
