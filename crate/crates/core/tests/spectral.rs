mod common;

use common::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use zeon::linalg::orthonormalize;
use zeon::spectral::{
    cayley_hamilton_residual, charpoly, eigen_independence_check, eigenpairs, eigenvalues,
    spectral_decompose,
};
use zeon::{Complex64, Tolerances, ZeonElement, ZeonMatrix, ZeonPolynomial, ZeonVector};

const TOL: Tolerances = Tolerances::DEFAULT;

/// `sum_j lambda_j v_j v_j^dag` from Gram-Schmidt vectors and real zeon
/// eigenvalues with scalar parts at least 0.5 apart.
fn planted_self_adjoint(
    rng: &mut ChaCha8Rng,
    m: usize,
    n: usize,
) -> (ZeonMatrix, Vec<ZeonElement>, Vec<ZeonVector>) {
    let vs = loop {
        let raw: Vec<ZeonVector> = (0..m).map(|_| random_vector(rng, m, n)).collect();
        let scalar = ZeonMatrix::from_columns(&raw).unwrap().scalar_part();
        let norms: f64 = raw.iter().map(|v| v.spectral_seminorm()).product();
        if norms > 0.0 && scalar.determinant().norm() / norms > 0.1 {
            break orthonormalize(&raw, &TOL).unwrap();
        }
    };
    let mut scalars: Vec<f64> = Vec::new();
    while scalars.len() < m {
        let s = rng.gen_range(-4.0..4.0);
        if scalars.iter().all(|t: &f64| (s - t).abs() >= 0.5) {
            scalars.push(s);
        }
    }
    let lambdas: Vec<ZeonElement> = scalars
        .iter()
        .map(|&s| &random_real_element(rng, n, 0.5).dual_part() + &ZeonElement::scalar(n, s))
        .collect();
    let mut a = ZeonMatrix::zeros(m, m, n);
    for (l, v) in lambdas.iter().zip(&vs) {
        a = a.try_add(&v.outer(v).unwrap().scale(l)).unwrap();
    }
    (a, lambdas, vs)
}

#[test]
fn cayley_hamilton_on_random_matrices() {
    let mut rng = rng(30);
    for _ in 0..200 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(0..=4);
        let a = random_matrix(&mut rng, m, n);
        let scale = (1.0 + a.max_abs()).powi(m as i32);
        assert!(cayley_hamilton_residual(&a).unwrap() < m as f64 * scale * 1e-8);
    }
}

#[test]
fn charpoly_agrees_with_complex_determinant() {
    let mut rng = rng(31);
    for _ in 0..100 {
        let m = rng.gen_range(1..=4);
        let a = random_matrix(&mut rng, m, 3);
        let f = charpoly(&a).unwrap().induce_complex();
        let c0 = a.scalar_part();
        for _ in 0..3 {
            let t = random_complex(&mut rng);
            let shifted = zeon::linalg::ComplexMatrix::from_fn(m, m, |i, j| {
                let d = if i == j { t } else { Complex64::default() };
                d - c0[(i, j)]
            });
            let det = shifted.determinant();
            assert!((f.eval(t) - det).norm() < 1e-9 * (1.0 + det.norm()));
        }
    }
}

#[test]
fn eigenpairs_of_general_matrices() {
    let mut rng = rng(32);
    let mut seen = 0;
    for _ in 0..100 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(0..=4);
        let a = random_matrix(&mut rng, m, n);
        let Ok(ev) = eigenvalues(&a, &TOL) else {
            continue;
        };
        if !ev.spectrally_simple {
            continue;
        }
        let c0 = a.scalar_part();
        let pairs = eigenpairs(&a, &TOL).unwrap();
        for p in &pairs {
            let lambda0 = p.value.scalar_part();
            let shifted = zeon::linalg::ComplexMatrix::from_fn(m, m, |i, j| {
                let d = if i == j {
                    lambda0
                } else {
                    Complex64::default()
                };
                d - c0[(i, j)]
            });
            let scale = (1.0 + c0.max_abs() + lambda0.norm()).powi(m as i32);
            assert!(shifted.determinant().norm() < 1e-9 * scale);
            assert!(p.vector.has_invertible_component(TOL.scalar_zero));
            let residual = a
                .mul_vector(&p.vector)
                .unwrap()
                .distance(&p.vector.scale(&p.value));
            assert!(residual < 1e-8 * (1.0 + p.vector.max_abs()) * (1.0 + a.max_abs()));
        }
        assert!(eigen_independence_check(&pairs, &TOL));
        seen += 1;
    }
    assert!(seen > 50);
}

#[test]
fn functional_calculus() {
    let mut rng = rng(33);
    for _ in 0..50 {
        let m = rng.gen_range(1..=3);
        let n = rng.gen_range(0..=3);
        let (a, _, _) = planted_self_adjoint(&mut rng, m, n);
        let degree = rng.gen_range(0..=3);
        let f = ZeonPolynomial::new(
            n,
            (0..=degree)
                .map(|_| random_element(&mut rng, n, 0.5))
                .collect(),
        )
        .unwrap();
        let fa = f.eval_matrix(&a).unwrap();
        for p in eigenpairs(&a, &TOL).unwrap() {
            let lhs = fa.mul_vector(&p.vector).unwrap();
            let rhs = p.vector.scale(&f.eval(&p.value).unwrap());
            assert!(lhs.distance(&rhs) < 1e-7 * (1.0 + rhs.max_abs()));
        }
    }
}

#[test]
fn planted_spectrum_is_recovered() {
    let mut rng = rng(34);
    for _ in 0..100 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(0..=4);
        let (a, lambdas, vs) = planted_self_adjoint(&mut rng, m, n);
        let d = spectral_decompose(&a, &TOL).unwrap();
        let c = d.checks;
        for r in [
            c.idempotent,
            c.orthogonal,
            c.identity,
            c.reconstruction,
            c.cayley_hamilton,
        ] {
            assert!(r < 1e-7, "{c:?}");
        }
        for (l, v) in lambdas.iter().zip(&vs) {
            let j = d
                .eigenpairs
                .iter()
                .position(|p| (p.value.scalar_part() - l.scalar_part()).norm() < 1e-6)
                .expect("planted eigenvalue");
            assert!(d.eigenpairs[j].value.distance(l) < 1e-7);
            assert!(
                d.eigenpairs[j]
                    .value
                    .conjugate()
                    .distance(&d.eigenpairs[j].value)
                    < 1e-9
            );
            assert!(d.projections[j].distance(&v.outer(v).unwrap()) < 1e-7);
        }
        for (j, p) in d.eigenpairs.iter().enumerate() {
            for q in &d.eigenpairs[j + 1..] {
                assert!(p.normalized.inner_product(&q.normalized).unwrap().max_abs() < 1e-8);
            }
        }
    }
}

#[test]
fn invertible_matrices_have_invertible_eigenvalues() {
    let mut rng = rng(35);
    for _ in 0..30 {
        let (a, _, _) = planted_self_adjoint(&mut rng, 3, 2);
        if a.scalar_part().determinant().norm() < 1e-3 {
            continue;
        }
        for l in eigenvalues(&a, &TOL).unwrap().values {
            assert!(l.is_invertible(TOL.scalar_zero));
        }
    }
}
