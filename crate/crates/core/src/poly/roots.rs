//! All complex roots of a polynomial by Aberth-Ehrlich simultaneous
//! iteration, with multiplicities recovered by clustering.

use std::f64::consts::TAU;

use num_complex::Complex64;

use super::ComplexPolynomial;
use crate::error::{Result, ZeonError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootFinderOptions {
    pub max_iterations: usize,
    /// Relative distance below which two approximations are always merged.
    pub cluster_tol: f64,
    /// A root is simple when `|f'(r)| > simple_tol * (1 + sum |a_k| |r|^k)`.
    pub simple_tol: f64,
}

impl Default for RootFinderOptions {
    fn default() -> Self {
        RootFinderOptions {
            max_iterations: 200,
            cluster_tol: 1e-6,
            simple_tol: 1e-8,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Root {
    pub value: Complex64,
    pub multiplicity: usize,
    pub simple: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootReport {
    /// Distinct roots, descending by real part then imaginary part.
    pub roots: Vec<Root>,
    /// Largest `|f(r)|` over the reported roots.
    pub residual: f64,
    pub iterations: usize,
}

impl RootReport {
    pub fn all_simple(&self) -> bool {
        self.roots.iter().all(|r| r.simple)
    }

    pub fn degree(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }
}

/// Whether `z` is a simple root of `f` by the derivative test used by
/// [`complex_roots`].
pub fn is_simple_root(f: &ComplexPolynomial, z: Complex64, simple_tol: f64) -> bool {
    f.derivative().eval(z).norm() > simple_tol * (1.0 + f.magnitude_at(z))
}

/// Orders roots descending by real part, then by imaginary part. Real parts
/// within `1e-9` relative are treated as tied.
pub(crate) fn sort_descending(values: &mut [Complex64]) {
    values.sort_by(|a, b| b.re.total_cmp(&a.re));
    let mut start = 0;
    while start < values.len() {
        let mut end = start + 1;
        while end < values.len()
            && (values[end].re - values[start].re).abs() <= 1e-9 * (1.0 + values[start].re.abs())
        {
            end += 1;
        }
        values[start..end].sort_by(|a, b| b.im.total_cmp(&a.im));
        start = end;
    }
}

pub fn complex_roots(f: &ComplexPolynomial) -> Result<RootReport> {
    complex_roots_with(f, RootFinderOptions::default())
}

pub fn complex_roots_with(f: &ComplexPolynomial, opts: RootFinderOptions) -> Result<RootReport> {
    let degree = f.degree().unwrap_or(0);
    if degree == 0 {
        return Err(ZeonError::Domain(
            "root finding needs a polynomial of degree at least 1".into(),
        ));
    }
    let lead = f.leading().expect("degree >= 1");
    let monic = ComplexPolynomial::new(f.coeffs().iter().map(|c| c / lead).collect());

    // Roots at zero are exact: factor out z^k.
    let zeros = monic
        .coeffs()
        .iter()
        .take_while(|c| **c == Complex64::default())
        .count();
    let reduced = ComplexPolynomial::new(monic.coeffs()[zeros..].to_vec());

    let (approx, iterations, converged) = aberth(&reduced, opts.max_iterations);
    let mut roots = cluster(&reduced, &approx, &opts);
    if zeros > 0 {
        roots.push(Root {
            value: Complex64::default(),
            multiplicity: zeros,
            simple: zeros == 1 && is_simple_root(&monic, Complex64::default(), opts.simple_tol),
        });
    }
    let mut values: Vec<Complex64> = roots.iter().map(|r| r.value).collect();
    sort_descending(&mut values);
    roots.sort_by_key(|r| values.iter().position(|v| *v == r.value));

    let residual = roots
        .iter()
        .map(|r| monic.eval(r.value).norm())
        .fold(0.0, f64::max);
    let report = RootReport {
        roots,
        residual,
        iterations,
    };
    if converged {
        Ok(report)
    } else {
        Err(ZeonError::NoConvergence {
            iterations,
            partial: Box::new(report),
        })
    }
}

/// Returns the approximations, the iteration count and whether every
/// approximation reached the rounding-error floor.
fn aberth(p: &ComplexPolynomial, max_iterations: usize) -> (Vec<Complex64>, usize, bool) {
    let d = p.degree().unwrap_or(0);
    if d == 0 {
        return (Vec::new(), 0, true);
    }
    let c = p.coeffs();
    if d == 1 {
        return (vec![-c[0] / c[1]], 0, true);
    }

    // Initial points on a circle about the centroid of the roots, with an
    // angular offset so real polynomials do not start on the real axis.
    let center = -c[d - 1] / d as f64;
    let radius = (0..d)
        .map(|k| c[k].norm().powf(1.0 / (d - k) as f64))
        .fold(0.0, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| center + Complex64::from_polar(radius, TAU * k as f64 / d as f64 + 0.4))
        .collect();
    let mut done = vec![false; d];

    let eps = f64::EPSILON;
    for iter in 1..=max_iterations {
        for i in 0..d {
            if done[i] {
                continue;
            }
            let (fz, dfz) = p.eval_with_derivative(z[i]);
            if fz.norm() <= 4.0 * eps * p.magnitude_at(z[i]) {
                done[i] = true;
                continue;
            }
            let ratio = fz / dfz;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != i)
                .map(|j| 1.0 / (z[i] - z[j]))
                .sum();
            let step = ratio / (1.0 - ratio * repulsion);
            if !(step.re.is_finite() && step.im.is_finite()) {
                continue;
            }
            z[i] -= step;
            if step.norm() <= eps * z[i].norm() {
                done[i] = true;
            }
        }
        if done.iter().all(|&x| x) {
            return (z, iter, true);
        }
    }
    (z, max_iterations, false)
}

/// Groups approximations of the same root.
///
/// Each approximation `z_i` gets the inclusion radius `d |f(z_i)| / |prod_{j != i} (z_i - z_j)|`
/// (with `|f(z_i)|` floored at its rounding-error bound); overlapping discs,
/// or points closer than `cluster_tol` relative, are merged. The cluster's
/// multiplicity is its size and its value the mean of its members, refined
/// for multiple roots.
fn cluster(monic: &ComplexPolynomial, z: &[Complex64], opts: &RootFinderOptions) -> Vec<Root> {
    let d = z.len();
    let eps = f64::EPSILON;
    let radii: Vec<f64> = (0..d)
        .map(|i| {
            let fz = monic
                .eval(z[i])
                .norm()
                .max(4.0 * eps * monic.magnitude_at(z[i]));
            let denom: f64 = (0..d)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).norm())
                .product();
            if denom == 0.0 {
                f64::INFINITY
            } else {
                d as f64 * fz / denom
            }
        })
        .collect();

    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..d {
        for j in i + 1..d {
            let dist = (z[i] - z[j]).norm();
            let close = dist <= opts.cluster_tol * (1.0 + z[i].norm().max(z[j].norm()));
            if close || dist <= radii[i] + radii[j] {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }

    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut group_of = vec![usize::MAX; d];
    for i in 0..d {
        let r = find(&mut parent, i);
        if group_of[r] == usize::MAX {
            group_of[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[group_of[r]].push(i);
    }

    groups
        .into_iter()
        .map(|members| {
            let k = members.len();
            let mean = members.iter().map(|&i| z[i]).sum::<Complex64>() / k as f64;
            let value = if k > 1 {
                refine_multiple(monic, mean, k)
            } else {
                mean
            };
            let value =
                Complex64::new(clean(value.re, value.norm()), clean(value.im, value.norm()));
            let simple = k == 1 && is_simple_root(monic, value, opts.simple_tol);
            Root {
                value,
                multiplicity: k,
                simple,
            }
        })
        .collect()
}

/// A root of multiplicity `k` is a simple root of the `(k-1)`-th derivative;
/// Newton on that derivative sharpens the cluster mean.
fn refine_multiple(f: &ComplexPolynomial, start: Complex64, k: usize) -> Complex64 {
    let mut h = f.clone();
    for _ in 1..k {
        h = h.derivative();
    }
    let mut z = start;
    let mut value = h.eval(z).norm();
    for _ in 0..8 {
        let (v, d) = h.eval_with_derivative(z);
        if v == Complex64::default() || d == Complex64::default() {
            break;
        }
        let next = z - v / d;
        let next_value = h.eval(next).norm();
        if next_value >= value || (next - start).norm() > 1e-3 * (1.0 + start.norm()) {
            break;
        }
        z = next;
        value = next_value;
    }
    z
}

/// Drops a component that is pure rounding noise relative to the modulus.
fn clean(x: f64, scale: f64) -> f64 {
    if x.abs() <= 4.0 * f64::EPSILON * scale {
        0.0
    } else {
        x
    }
}
