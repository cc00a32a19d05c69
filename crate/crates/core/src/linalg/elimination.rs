use serde::Serialize;

use super::ZeonMatrix;
use crate::element::ZeonElement;
use crate::tolerance::Tolerances;

/// How the pivot row is chosen within a column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pivoting {
    /// Row whose entry has the largest scalar-part modulus.
    #[default]
    MaxModulus,
    /// First row (from the top of the unreduced block) with an invertible entry.
    FirstInvertible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EliminationOptions {
    pub pivoting: Pivoting,
    /// Scale each pivot row so that its pivot becomes 1.
    pub unit_pivots: bool,
}

/// An elementary row operation. Rows are 0-based.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum RowOp {
    /// Exchange rows `i` and `j`; negates the determinant.
    Swap { i: usize, j: usize },
    /// Multiply `row` by the invertible `factor`; multiplies the determinant
    /// by `factor`.
    Scale { row: usize, factor: ZeonElement },
    /// `row[to] += factor * row[from]`; leaves the determinant unchanged.
    Axpy {
        from: usize,
        to: usize,
        factor: ZeonElement,
    },
}

impl RowOp {
    pub fn apply(&self, m: &mut ZeonMatrix) {
        match self {
            RowOp::Swap { i, j } => m.swap_rows(*i, *j),
            RowOp::Scale { row, factor } => {
                for e in m.row_mut(*row) {
                    *e = &*e * factor;
                }
            }
            RowOp::Axpy { from, to, factor } => {
                let src: Vec<ZeonElement> = m.row(*from).iter().map(|e| e * factor).collect();
                for (e, s) in m.row_mut(*to).iter_mut().zip(&src) {
                    *e += s;
                }
            }
        }
    }
}

/// Result of reducing a matrix with elementary row operations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EliminationReport {
    pub upper: ZeonMatrix,
    pub ops: Vec<RowOp>,
    /// Product of the determinant effects of `ops`: `|upper| = det_factor |A|`.
    pub det_factor: ZeonElement,
    pub pivot_count: usize,
    /// `(row, column)` of each invertible pivot, in elimination order.
    pub pivots: Vec<(usize, usize)>,
}

impl EliminationReport {
    /// Applies the recorded operations to `input`.
    pub fn replay(&self, input: &ZeonMatrix) -> ZeonMatrix {
        let mut m = input.clone();
        for op in &self.ops {
            op.apply(&mut m);
        }
        m
    }

    /// Columns without a pivot.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.upper.cols())
            .filter(|c| !self.pivots.iter().any(|&(_, pc)| pc == *c))
            .collect()
    }
}

/// Reduces `a` to row-echelon form using only invertible pivots.
///
/// Columns are processed left to right. A column whose remaining entries are
/// all nilpotent has no pivot and is skipped, so rank deficiency shows up as
/// `pivot_count < rows`. Entries below a pivot are cleared with
/// [`RowOp::Axpy`] and set to exact zero.
pub fn eliminate(
    a: &ZeonMatrix,
    options: EliminationOptions,
    tol: &Tolerances,
) -> EliminationReport {
    let mut m = a.clone();
    let mut ops = Vec::new();
    let mut det_factor = ZeonElement::one(a.n());
    let mut pivots = Vec::new();
    let mut row = 0;

    for col in 0..m.cols() {
        if row == m.rows() {
            break;
        }
        let candidates = row..m.rows();
        let chosen = match options.pivoting {
            Pivoting::MaxModulus => candidates
                .max_by(|&x, &y| {
                    let nx = m.get(x, col).scalar_part().norm();
                    let ny = m.get(y, col).scalar_part().norm();
                    // ties go to the upper row
                    nx.total_cmp(&ny).then(y.cmp(&x))
                })
                .filter(|&r| m.get(r, col).is_invertible(tol.scalar_zero)),
            Pivoting::FirstInvertible => candidates
                .into_iter()
                .find(|&r| m.get(r, col).is_invertible(tol.scalar_zero)),
        };
        let Some(p) = chosen else {
            continue;
        };
        if p != row {
            let op = RowOp::Swap { i: row, j: p };
            op.apply(&mut m);
            ops.push(op);
            det_factor = -det_factor;
        }
        let pivot_inv = m
            .get(row, col)
            .inverse(tol)
            .expect("pivot was checked invertible");
        if options.unit_pivots {
            let op = RowOp::Scale {
                row,
                factor: pivot_inv.clone(),
            };
            op.apply(&mut m);
            ops.push(op);
            det_factor = &det_factor * &pivot_inv;
            m.set(row, col, ZeonElement::one(a.n()));
        }
        let pivot_inv = if options.unit_pivots {
            ZeonElement::one(a.n())
        } else {
            pivot_inv
        };
        for r in row + 1..m.rows() {
            let below = m.get(r, col);
            if below.is_zero() {
                continue;
            }
            let factor = -(below * &pivot_inv).pruned(tol.prune);
            let op = RowOp::Axpy {
                from: row,
                to: r,
                factor,
            };
            op.apply(&mut m);
            ops.push(op);
            m.set(r, col, ZeonElement::zero(a.n()));
        }
        pivots.push((row, col));
        row += 1;
    }

    EliminationReport {
        upper: m.pruned(tol.prune),
        ops,
        det_factor: det_factor.pruned(tol.prune),
        pivot_count: pivots.len(),
        pivots,
    }
}
