mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use zeon::linalg::{
    determinant, determinant_elimination, determinant_permutation, eliminate, orthonormalize,
    EliminationOptions, Pivoting,
};
use zeon::{Tolerances, ZeonElement, ZeonMatrix, ZeonVector};

const TOL: Tolerances = Tolerances::DEFAULT;

fn vector_strategy(m: usize, n: usize) -> impl Strategy<Value = ZeonVector> {
    proptest::collection::vec(element_strategy(n), m).prop_map(|v| ZeonVector::new(v).unwrap())
}

proptest! {
    #[test]
    fn inner_product_properties(
        (x, y, a) in (1usize..=4, 0usize..=4).prop_flat_map(|(m, n)| (vector_strategy(m, n), vector_strategy(m, n), element_strategy(n)))
    ) {
        let xy = x.inner_product(&y).unwrap();
        let yx = y.inner_product(&x).unwrap();
        prop_assert!(xy.distance(&yx.conjugate()) < 1e-10);
        let scaled = x.scale(&a).inner_product(&y).unwrap();
        prop_assert!(scaled.distance(&(&a * &xy)) < 1e-9);
        let scaled = x.inner_product(&y.scale(&a)).unwrap();
        prop_assert!(scaled.distance(&(&a.conjugate() * &xy)) < 1e-9);
        let xx = x.inner_product(&x).unwrap();
        prop_assert!(xx.is_real(1e-10));
        prop_assert!(xx.scalar_part().re >= -1e-12);
        prop_assert!((x.spectral_seminorm().powi(2) - xx.scalar_part().re).abs() < 1e-9);
    }

    #[test]
    fn normalization(x in (1usize..=4, 0usize..=4).prop_flat_map(|(m, n)| vector_strategy(m, n))) {
        if x.spectral_seminorm() > 0.1 {
            let v = x.normalize(&TOL).unwrap();
            let one = ZeonElement::one(x.n());
            prop_assert!(v.inner_product(&v).unwrap().distance(&one) < 1e-9);
        } else {
            prop_assert!(x.spectral_seminorm() > 0.0 || x.normalize(&TOL).is_err());
        }
    }
}

#[test]
fn gram_schmidt_gives_orthonormal_family() {
    let mut rng = rng(10);
    for _ in 0..100 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(0..=4);
        let vs: Vec<ZeonVector> = (0..m).map(|_| random_vector(&mut rng, m, n)).collect();
        let Ok(us) = orthonormalize(&vs, &TOL) else {
            continue;
        };
        let scalar = ZeonMatrix::from_columns(&vs).unwrap().scalar_part();
        let cond =
            scalar.determinant().norm() / vs.iter().map(|v| v.spectral_seminorm()).product::<f64>();
        if cond < 0.05 {
            continue;
        }
        for (i, u) in us.iter().enumerate() {
            for (j, w) in us.iter().enumerate() {
                let target = if i == j {
                    ZeonElement::one(n)
                } else {
                    ZeonElement::zero(n)
                };
                let d = u.inner_product(w).unwrap().distance(&target);
                assert!(d < 1e-8, "{d} {cond}");
            }
        }
    }
}

#[test]
fn permutation_sum_matches_elimination() {
    let mut rng = rng(11);
    for _ in 0..200 {
        let n = rng.gen_range(0..=4);
        let a = random_matrix(&mut rng, 3, n);
        let p = determinant_permutation(&a, &TOL).unwrap();
        let e = determinant_elimination(&a, &TOL).unwrap();
        assert!(p.distance(&e) < 1e-9, "{a}");
    }
    for m in [1, 2, 4, 5] {
        for _ in 0..20 {
            let a = random_matrix(&mut rng, m, 3);
            let p = determinant_permutation(&a, &TOL).unwrap();
            let e = determinant_elimination(&a, &TOL).unwrap();
            assert!(p.distance(&e) < 1e-9 * (1.0 + p.max_abs()), "m = {m}");
        }
    }
}

#[test]
fn determinant_is_multiplicative() {
    let mut rng = rng(12);
    for _ in 0..100 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(0..=4);
        let a = random_matrix(&mut rng, m, n);
        let b = random_matrix(&mut rng, m, n);
        let ab = determinant(&a.try_mul(&b).unwrap(), &TOL).unwrap();
        let prod = &determinant(&a, &TOL).unwrap() * &determinant(&b, &TOL).unwrap();
        assert!(ab.distance(&prod) < 1e-9 * (1.0 + ab.max_abs()));
    }
}

#[test]
fn determinant_of_nilpotent_matrix_is_nilpotent() {
    let mut rng = rng(13);
    let a = random_matrix(&mut rng, 3, 3).dual_part();
    let d = determinant(&a, &TOL).unwrap();
    assert!(d.scalar_part().norm() < 1e-15);
    assert!(a.is_nilpotent(&TOL).unwrap());
}

#[test]
fn matrix_inverse_round_trip() {
    let mut rng = rng(14);
    let mut checked = 0;
    for _ in 0..200 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(0..=4);
        let a = random_matrix(&mut rng, m, n);
        if a.scalar_part().determinant().norm() < 0.1 {
            assert!(a.scalar_part().determinant().norm() > 1e-9 || a.inverse(&TOL).is_err());
            continue;
        }
        let inv = a.inverse(&TOL).unwrap();
        let id = ZeonMatrix::identity(m, n);
        let scale = (1.0 + a.max_abs()) * (1.0 + inv.max_abs());
        assert!(a.try_mul(&inv).unwrap().distance(&id) < 1e-9 * scale);
        assert!(inv.try_mul(&a).unwrap().distance(&id) < 1e-9 * scale);
        checked += 1;
    }
    assert!(checked > 50, "{checked}");
}

#[test]
fn elimination_replays_and_tracks_determinant() {
    let mut rng = rng(15);
    for trial in 0..100 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(0..=3);
        let a = random_matrix(&mut rng, m, n);
        let options = EliminationOptions {
            pivoting: if trial % 2 == 0 {
                Pivoting::MaxModulus
            } else {
                Pivoting::FirstInvertible
            },
            unit_pivots: trial % 3 == 0,
        };
        let rep = eliminate(&a, options, &TOL);
        assert!(rep.replay(&a).distance(&rep.upper) < 1e-9);
        for (i, &(row, col)) in rep.pivots.iter().enumerate() {
            assert_eq!(row, i);
            assert!(rep.upper.get(row, col).is_invertible(TOL.scalar_zero));
            for r in row + 1..m {
                assert!(rep.upper.get(r, col).is_zero());
            }
        }
        let du = determinant(&rep.upper, &TOL).unwrap();
        let da = &rep.det_factor * &determinant(&a, &TOL).unwrap();
        assert!(du.distance(&da) < 1e-8 * (1.0 + du.max_abs()));
    }
}

#[test]
fn rank_deficiency_shows_as_missing_pivots() {
    let n = 2;
    let s = |x: f64| ZeonElement::scalar(n, x);
    let z1 = ZeonElement::generator(n, 1);
    let a = ZeonMatrix::from_rows(vec![vec![s(1.0), s(2.0)], vec![s(2.0), &s(4.0) + &z1]]).unwrap();
    let rep = eliminate(&a, EliminationOptions::default(), &TOL);
    assert_eq!(rep.pivot_count, 1);
    assert_eq!(rep.free_columns(), vec![1]);
    assert!(!rep.upper.get(1, 1).is_invertible(TOL.scalar_zero));
}
