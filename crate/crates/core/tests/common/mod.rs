#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use zeon::{Complex64, SubsetIndex, ZeonElement, ZeonMatrix, ZeonPolynomial, ZeonVector};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
}

/// A random element with about `density` of its `2^n` blades populated.
pub fn random_element(rng: &mut ChaCha8Rng, n: usize, density: f64) -> ZeonElement {
    let mut terms = Vec::new();
    for bits in 0..1u64 << n {
        if rng.gen_bool(density) {
            terms.push((SubsetIndex::from_bits(bits), random_complex(rng)));
        }
    }
    ZeonElement::from_terms(n, terms).unwrap()
}

/// Random element whose scalar part has modulus at least 0.5.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> ZeonElement {
    let mut u = random_element(rng, n, 0.6).dual_part();
    let r = rng.gen_range(0.5..2.0);
    let theta = rng.gen_range(-3.0..3.0);
    u += &ZeonElement::scalar(n, Complex64::from_polar(r, theta));
    u
}

pub fn random_real_element(rng: &mut ChaCha8Rng, n: usize, density: f64) -> ZeonElement {
    let mut terms = Vec::new();
    for bits in 0..1u64 << n {
        if rng.gen_bool(density) {
            terms.push((
                SubsetIndex::from_bits(bits),
                c(rng.gen_range(-2.0..2.0), 0.0),
            ));
        }
    }
    ZeonElement::from_terms(n, terms).unwrap()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, m: usize, n: usize) -> ZeonMatrix {
    let entries = (0..m * m).map(|_| random_element(rng, n, 0.5)).collect();
    ZeonMatrix::new(m, m, n, entries).unwrap()
}

pub fn random_vector(rng: &mut ChaCha8Rng, m: usize, n: usize) -> ZeonVector {
    ZeonVector::new((0..m).map(|_| random_element(rng, n, 0.5)).collect()).unwrap()
}

/// Sum over the dense `2^n` coefficient arrays; the reference product.
pub fn dense_mul(a: &ZeonElement, b: &ZeonElement) -> Vec<Complex64> {
    let n = a.n();
    let size = 1usize << n;
    let mut da = vec![Complex64::default(); size];
    let mut db = vec![Complex64::default(); size];
    for (i, x) in a.terms() {
        da[i.bits() as usize] = x;
    }
    for (i, x) in b.terms() {
        db[i.bits() as usize] = x;
    }
    let mut out = vec![Complex64::default(); size];
    for (i, x) in da.iter().enumerate() {
        for (j, y) in db.iter().enumerate() {
            if i & j == 0 {
                out[i | j] += x * y;
            }
        }
    }
    out
}

pub fn dense(a: &ZeonElement) -> Vec<Complex64> {
    let mut out = vec![Complex64::default(); 1usize << a.n()];
    for (i, x) in a.terms() {
        out[i.bits() as usize] = x;
    }
    out
}

/// Relabels generators: generator `g` becomes `perm[g - 1]`.
pub fn permute_generators(u: &ZeonElement, perm: &[usize]) -> ZeonElement {
    let terms = u.terms().map(|(i, x)| {
        let gens: Vec<usize> = i.generators().map(|g| perm[g - 1]).collect();
        (SubsetIndex::from_generators(&gens), x)
    });
    ZeonElement::from_terms(u.n(), terms).unwrap()
}

pub fn permute_poly(p: &ZeonPolynomial, perm: &[usize]) -> ZeonPolynomial {
    ZeonPolynomial::new(
        p.n(),
        p.coeffs()
            .iter()
            .map(|x| permute_generators(x, perm))
            .collect(),
    )
    .unwrap()
}

pub fn element_strategy(n: usize) -> impl Strategy<Value = ZeonElement> {
    let blades = 1u64 << n;
    proptest::collection::vec((0..blades, -3.0..3.0f64, -3.0..3.0f64), 0..8).prop_map(
        move |terms| {
            ZeonElement::from_terms(
                n,
                terms
                    .into_iter()
                    .map(|(b, re, im)| (SubsetIndex::from_bits(b), c(re, im))),
            )
            .unwrap()
        },
    )
}

/// Elements with scalar part of modulus in `[0.5, 3]`.
pub fn invertible_strategy(n: usize) -> impl Strategy<Value = ZeonElement> {
    (element_strategy(n), 0.5..3.0f64, -3.0..3.0f64).prop_map(move |(u, r, theta)| {
        &u.dual_part() + &ZeonElement::scalar(n, Complex64::from_polar(r, theta))
    })
}
