use proptest::prelude::*;
use skewsym::chromatic::{
    c_via_nc_p, gamma_beta, harada_precup_with, omega_x, verify_e_recurrence_with,
    verify_p_recurrence_with, ChromaticTable,
};
use skewsym::congruence::{in_perp, WordCongruence};
use skewsym::lr::{lr_classical, lr_plactic, lr_skew_expansion, lr_skew_matches_determinant};
use skewsym::poset::{height, DegVariant, Nuio};
use skewsym::symfun::{is_symmetric, Basis, SymElem};
use skewsym::{IntVector, Partition, QPoly};

fn contents(n: usize, max_total: usize) -> Vec<IntVector> {
    IntVector::all_nonnegative(n, max_total)
}

#[test]
fn chromatic_functions_are_symmetric_and_orthogonal() {
    for n in 1..=4 {
        for p in Nuio::all(n) {
            let ip = WordCongruence::unit_interval(p.clone());
            for beta in contents(n, 5) {
                assert!(
                    in_perp(&gamma_beta(&p, &beta).unwrap(), &ip),
                    "{p} {beta:?}"
                );
                assert!(is_symmetric(&omega_x(&p, &beta).unwrap()), "{p} {beta:?}");
            }
        }
    }
}

#[test]
fn coefficients_vanish_beyond_the_height() {
    for n in 1..=4 {
        for p in Nuio::all(n) {
            let h = height(&p);
            let mut table = ChromaticTable::new(p.clone());
            for beta in contents(n, 5) {
                let x = table.expansion(&beta).unwrap().unwrap();
                assert!(x.coeffs().keys().all(|mu| mu.len() <= h), "{p} {beta:?}");
                assert_eq!(c_via_nc_p(&p, &beta).unwrap(), x.one_row(), "{p} {beta:?}");
            }
        }
    }
}

#[test]
fn recurrences_hold_for_every_target() {
    for n in 1..=3 {
        for p in Nuio::all(n) {
            let mut table = ChromaticTable::new(p.clone());
            for beta in contents(n, 5) {
                let d = beta.sum() as usize;
                for k in 1..=d.min(3) {
                    for lambda in Partition::all(d - k) {
                        for variant in [DegVariant::A, DegVariant::B] {
                            let e =
                                verify_e_recurrence_with(&mut table, &beta, k, &lambda, variant)
                                    .unwrap();
                            assert!(e.holds, "e {p} {beta:?} {k} {lambda} {variant}");
                            let pr =
                                verify_p_recurrence_with(&mut table, &beta, k, &lambda, variant)
                                    .unwrap();
                            assert!(pr.holds, "p {p} {beta:?} {k} {lambda} {variant}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn total_orders_give_a_single_coefficient() {
    // A chain has height N, so every μ with N parts is admissible.
    for n in 1..=4 {
        let p = Nuio::chain(n);
        let mut table = ChromaticTable::new(p.clone());
        for beta in contents(n, 5) {
            let x = table.sym(&beta).unwrap();
            let d = beta.sum() as usize;
            for mu in Partition::all(d).into_iter().filter(|m| m.len() == n) {
                let r = harada_precup_with(&mut table, &beta, &mu).unwrap();
                assert!(r.holds, "{beta:?} {mu}");
                assert_eq!(r.lhs, x.coeff(&mu));
            }
        }
    }
}

fn nuio_and_content() -> impl Strategy<Value = (Nuio, IntVector)> {
    (1usize..=5).prop_flat_map(|n| {
        let all = Nuio::all(n);
        (
            (0..all.len()).prop_map(move |i| all[i].clone()),
            prop::collection::vec(0i64..=2, n).prop_map(IntVector::new),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn harada_precup_on_random_orders((p, beta) in nuio_and_content()) {
        let d = beta.sum() as usize;
        let h = height(&p);
        let mut table = ChromaticTable::new(p.clone());
        for mu in Partition::all(d).into_iter().filter(|m| m.len() == h) {
            let r = harada_precup_with(&mut table, &beta, &mu).unwrap();
            prop_assert!(r.holds, "{} {:?} {}", p, beta, mu);
        }
    }

    #[test]
    fn elementary_recurrence_on_random_orders((p, beta) in nuio_and_content(), k in 1usize..=3) {
        let d = beta.sum() as usize;
        prop_assume!(k <= d && d <= 7);
        let mut table = ChromaticTable::new(p.clone());
        for lambda in Partition::all(d - k) {
            let r = verify_e_recurrence_with(&mut table, &beta, k, &lambda, DegVariant::B).unwrap();
            prop_assert!(r.holds, "{} {:?} {} {}", p, beta, k, lambda);
        }
    }
}

#[test]
fn lr_coefficients_agree_and_are_symmetric() {
    for n in 0..=6 {
        for lambda in Partition::all(n) {
            for m in 0..=n {
                for mu in Partition::all(m) {
                    let skewed = lr_skew_expansion(&lambda, &mu);
                    assert!(lr_skew_matches_determinant(&lambda, &mu));
                    for nu in Partition::all(n - m) {
                        let c = lr_classical(&lambda, &mu, &nu).unwrap();
                        assert_eq!(c, lr_classical(&lambda, &nu, &mu).unwrap());
                        assert_eq!(c, skewed.coeff(&nu), "{lambda} {mu} {nu}");
                        if n <= 5 {
                            let count = lr_plactic(&lambda, &mu, &nu, None).unwrap();
                            assert_eq!(c, QPoly::from_int(count as i64), "{lambda} {mu} {nu}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn skew_by_a_full_shape_is_a_unit() {
    for lambda in Partition::all_up_to(6) {
        assert_eq!(lr_skew_expansion(&lambda, &lambda), SymElem::one(Basis::S));
    }
}
