use super::ZeonMatrix;
use crate::element::ZeonElement;
use crate::error::{Result, ZeonError};
use crate::tolerance::Tolerances;

/// Largest size for which [`determinant`] uses the permutation sum.
pub const PERMUTATION_SUM_MAX: usize = 4;

fn require_square(a: &ZeonMatrix) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(ZeonError::Dimension(format!(
            "determinant of a {}x{} matrix",
            a.rows(),
            a.cols()
        )))
    }
}

/// `|A|`: the permutation sum for `m <= 4`, elimination otherwise.
pub fn determinant(a: &ZeonMatrix, tol: &Tolerances) -> Result<ZeonElement> {
    require_square(a)?;
    if a.rows() <= PERMUTATION_SUM_MAX {
        determinant_permutation(a, tol)
    } else {
        determinant_elimination(a, tol)
    }
}

/// `sum_{sigma in S_m} sgn(sigma) prod_j a_{j, sigma(j)}`, enumerating
/// permutations with Heap's algorithm.
pub fn determinant_permutation(a: &ZeonMatrix, tol: &Tolerances) -> Result<ZeonElement> {
    require_square(a)?;
    let m = a.rows();
    let mut perm: Vec<usize> = (0..m).collect();
    let mut counters = vec![0usize; m];
    let mut sign = 1.0;
    let mut total = ZeonElement::zero(a.n());

    let add_term = |perm: &[usize], sign: f64, total: &mut ZeonElement| {
        let mut prod = ZeonElement::one(a.n());
        for (row, &col) in perm.iter().enumerate() {
            let e = a.get(row, col);
            if e.is_zero() {
                return;
            }
            prod = &prod * e;
            if prod.is_zero() {
                return;
            }
        }
        *total += &prod.scale(sign);
    };

    add_term(&perm, sign, &mut total);
    let mut i = 0;
    while i < m {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            sign = -sign;
            add_term(&perm, sign, &mut total);
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok(total.pruned(tol.prune))
}

/// Determinant by elimination over the local ring.
///
/// With an invertible pivot `p` (largest scalar-part modulus in the first
/// column), `|A| = sign * p * |S|` for the Schur complement
/// `S = A22 - A21 p^-1 A12`. A column with no invertible entry is expanded by
/// cofactors instead; its entries are all nilpotent, so those branches die
/// out after at most `n` levels.
pub fn determinant_elimination(a: &ZeonMatrix, tol: &Tolerances) -> Result<ZeonElement> {
    require_square(a)?;
    let rows: Vec<Vec<ZeonElement>> = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
    Ok(det_rec(rows, a.n(), tol)?.pruned(tol.prune))
}

fn det_rec(mut m: Vec<Vec<ZeonElement>>, n: usize, tol: &Tolerances) -> Result<ZeonElement> {
    let k = m.len();
    match k {
        0 => return Ok(ZeonElement::one(n)),
        1 => return Ok(m[0][0].clone()),
        _ => {}
    }
    let p = (0..k)
        .max_by(|&x, &y| {
            m[x][0]
                .scalar_part()
                .norm()
                .total_cmp(&m[y][0].scalar_part().norm())
        })
        .expect("k >= 2");
    if m[p][0].is_invertible(tol.scalar_zero) {
        let sign = if p != 0 { -1.0 } else { 1.0 };
        m.swap(0, p);
        let pivot = m[0][0].clone();
        let pivot_inv = pivot.inverse(tol)?;
        let mut schur = Vec::with_capacity(k - 1);
        for r in 1..k {
            let factor = &m[r][0] * &pivot_inv;
            let row: Vec<ZeonElement> = (1..k).map(|c| &m[r][c] - &(&factor * &m[0][c])).collect();
            schur.push(row);
        }
        let sub = det_rec(schur, n, tol)?;
        Ok((&pivot * &sub).scale(sign))
    } else {
        let mut total = ZeonElement::zero(n);
        for r in 0..k {
            if m[r][0].is_zero() {
                continue;
            }
            let minor: Vec<Vec<ZeonElement>> = (0..k)
                .filter(|&i| i != r)
                .map(|i| m[i][1..].to_vec())
                .collect();
            let term = &m[r][0] * &det_rec(minor, n, tol)?;
            if r % 2 == 0 {
                total += &term;
            } else {
                total -= &term;
            }
        }
        Ok(total)
    }
}
