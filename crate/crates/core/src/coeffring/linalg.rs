//! Exact linear algebra over a field: sparse Gaussian elimination with
//! pivoting by sparsity (fewest nonzeros first), ranks, and solving with
//! right-hand sides in a module over the field.

use super::{ArithError, FieldCoeff};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinSolveError {
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("underdetermined linear system: column {0} has no pivot")]
    Underdetermined(usize),
    #[error("scalar arithmetic failed: {0}")]
    Arith(#[from] ArithError),
}

/// One equation: a sparse row of coefficients and its right-hand side.
pub type SparseRow<F> = (BTreeMap<usize, F>, F);

/// Solves `A x = b` for the unique exact solution.  Errors if the system is
/// inconsistent or the columns are not of full rank.  Deterministic: pivots
/// are chosen among candidate rows by fewest nonzeros, then lowest index.
pub fn solve_sparse_unique<F: FieldCoeff>(
    ncols: usize,
    rows: Vec<SparseRow<F>>,
) -> Result<Vec<F>, LinSolveError> {
    let mut rows: Vec<Option<SparseRow<F>>> = rows.into_iter().map(Some).collect();
    let mut pivots: Vec<(usize, BTreeMap<usize, F>, F)> = Vec::with_capacity(ncols);
    // Lazy min-heap on (row length, row index); stale entries are skipped.
    let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<(usize, usize)>> = rows
        .iter()
        .enumerate()
        .filter_map(|(r, row)| row.as_ref().map(|(c, _)| std::cmp::Reverse((c.len(), r))))
        .collect();

    loop {
        // Pick the sparsest remaining nonzero row (lazy staleness handling:
        // a popped entry whose recorded length is outdated is re-pushed with
        // its current length).
        let r = loop {
            let Some(std::cmp::Reverse((n, r))) = heap.pop() else {
                break None;
            };
            match &rows[r] {
                Some((coeffs, _)) if !coeffs.is_empty() => {
                    if coeffs.len() == n {
                        break Some(r);
                    }
                    heap.push(std::cmp::Reverse((coeffs.len(), r)));
                }
                _ => {}
            }
        };
        let Some(r) = r else { break };
        let (mut row, mut rhs) = rows[r].take().expect("selected row present");
        let (&col, _) = row.iter().next().expect("nonzero row");
        let lead = row.remove(&col).expect("leading entry");
        let inv = lead.inv_ref()?;
        for v in row.values_mut() {
            *v = v.mul_ref(&inv);
        }
        rhs = rhs.mul_ref(&inv);
        // Eliminate from earlier pivot rows and from remaining rows.
        for (_, prow, prhs) in pivots.iter_mut() {
            if let Some(factor) = prow.remove(&col) {
                for (c, v) in &row {
                    eliminate(prow, *c, &factor.mul_ref(v));
                }
                *prhs = prhs.sub_ref(&factor.mul_ref(&rhs));
            }
        }
        for (i, slot) in rows.iter_mut().enumerate() {
            let Some((irow, irhs)) = slot else { continue };
            if let Some(factor) = irow.remove(&col) {
                for (c, v) in &row {
                    eliminate(irow, *c, &factor.mul_ref(v));
                }
                *irhs = irhs.sub_ref(&factor.mul_ref(&rhs));
                heap.push(std::cmp::Reverse((irow.len(), i)));
            }
        }
        pivots.push((col, row, rhs));
    }

    // Remaining rows are all-zero coefficient rows: their rhs must vanish.
    for slot in rows.iter().flatten() {
        if !slot.1.is_zero() {
            return Err(LinSolveError::Inconsistent);
        }
    }
    let mut solution: Vec<Option<F>> = vec![None; ncols];
    for (col, row, rhs) in pivots {
        // After full elimination every pivot row is a singleton unless some
        // column never received a pivot; that case errors below.
        if row.is_empty() {
            solution[col] = Some(rhs);
        }
    }
    if ncols == 0 {
        return Ok(vec![]);
    }
    solution
        .into_iter()
        .enumerate()
        .map(|(c, v)| v.ok_or(LinSolveError::Underdetermined(c)))
        .collect()
}

/// Applies `row[col] -= delta`, dropping entries that cancel to zero.
fn eliminate<F: FieldCoeff>(row: &mut BTreeMap<usize, F>, col: usize, delta: &F) {
    match row.get_mut(&col) {
        Some(v) => {
            let next = v.sub_ref(delta);
            if next.is_zero() {
                row.remove(&col);
            } else {
                *v = next;
            }
        }
        None => {
            if !delta.is_zero() {
                row.insert(col, delta.neg_ref());
            }
        }
    }
}

/// Rank of a dense matrix over a field.
pub fn rank_dense<F: FieldCoeff>(mut rows: Vec<Vec<F>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv_ref().expect("nonzero pivot");
        for c in col..ncols {
            rows[rank][c] = rows[rank][c].mul_ref(&inv);
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = factor.mul_ref(&rows[rank][c]);
                    rows[r][c] = rows[r][c].sub_ref(&delta);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// A module over the coefficient field, for right-hand sides that are not
/// plain scalars (e.g. polynomial-valued unknowns).
pub trait LinModule<F>: Clone {
    fn m_add(&self, other: &Self) -> Self;
    fn m_sub(&self, other: &Self) -> Self;
    fn m_scale(&self, factor: &F) -> Self;
    fn m_is_zero(&self) -> bool;
}

impl<F: FieldCoeff> LinModule<F> for super::MultiPoly<F> {
    fn m_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn m_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn m_scale(&self, factor: &F) -> Self {
        self.scalar_mul(factor)
    }
    fn m_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl<F: FieldCoeff> LinModule<F> for F {
    fn m_add(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn m_sub(&self, other: &Self) -> Self {
        self.sub_ref(other)
    }
    fn m_scale(&self, factor: &F) -> Self {
        self.mul_ref(factor)
    }
    fn m_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// Solves `A x = b` where `A` has field entries and `b` lives in a module
/// over the field.  Returns any solution (free variables are set to zero) or
/// `None` when the system is inconsistent.
pub fn solve_dense_module<F: FieldCoeff, M: LinModule<F>>(
    mut a: Vec<Vec<F>>,
    mut b: Vec<M>,
    zero_m: M,
) -> Option<Vec<M>> {
    assert_eq!(a.len(), b.len());
    let ncols = a.first().map_or(0, |r| r.len());
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        b.swap(rank, pivot);
        let inv = a[rank][col].inv_ref().ok()?;
        for c in col..ncols {
            a[rank][c] = a[rank][c].mul_ref(&inv);
        }
        b[rank] = b[rank].m_scale(&inv);
        for r in 0..a.len() {
            if r != rank && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..ncols {
                    let delta = factor.mul_ref(&a[rank][c]);
                    a[r][c] = a[r][c].sub_ref(&delta);
                }
                let delta = b[rank].m_scale(&factor);
                b[r] = b[r].m_sub(&delta);
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    // Consistency: zero rows must have zero rhs.
    for r in rank..a.len() {
        if !b[r].m_is_zero() {
            return None;
        }
    }
    let mut solution = vec![zero_m; ncols];
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        if let Some(r) = pivot {
            solution[col] = b[*r].clone();
        }
    }
    Some(solution)
}

#[cfg(test)]
mod tests {
    use super::super::{rat, Rational};
    use super::*;

    fn row(entries: &[(usize, i64)], rhs: i64) -> SparseRow<Rational> {
        (
            entries.iter().map(|&(c, v)| (c, rat(v, 1))).collect(),
            rat(rhs, 1),
        )
    }

    #[test]
    fn solves_small_unique_system() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1.
        let rows = vec![row(&[(0, 1), (1, 1)], 3), row(&[(0, 1), (1, -1)], 1)];
        let sol = solve_sparse_unique(2, rows).unwrap();
        assert_eq!(sol, vec![rat(2, 1), rat(1, 1)]);
    }

    #[test]
    fn detects_inconsistency_and_underdetermination() {
        let rows = vec![row(&[(0, 1)], 1), row(&[(0, 1)], 2)];
        assert_eq!(
            solve_sparse_unique(1, rows),
            Err(LinSolveError::Inconsistent)
        );
        let rows = vec![row(&[(0, 1), (1, 1)], 3)];
        assert!(matches!(
            solve_sparse_unique(2, rows),
            Err(LinSolveError::Underdetermined(_))
        ));
    }

    #[test]
    fn redundant_rows_are_fine() {
        let rows = vec![
            row(&[(0, 1), (1, 1)], 3),
            row(&[(0, 2), (1, 2)], 6),
            row(&[(1, 1)], 1),
        ];
        let sol = solve_sparse_unique(2, rows).unwrap();
        assert_eq!(sol, vec![rat(2, 1), rat(1, 1)]);
    }

    #[test]
    fn dense_rank() {
        let m = vec![
            vec![rat(1, 1), rat(2, 1), rat(3, 1)],
            vec![rat(2, 1), rat(4, 1), rat(6, 1)],
            vec![rat(0, 1), rat(1, 1), rat(1, 1)],
        ];
        assert_eq!(rank_dense(m), 2);
    }

    #[test]
    fn module_solver_returns_any_solution() {
        // x0 + x1 = b with a free variable: x1 = 0 chosen.
        let a = vec![vec![rat(1, 1), rat(1, 1)]];
        let b = vec![rat(5, 1)];
        let sol = solve_dense_module(a, b, rat(0, 1)).unwrap();
        assert_eq!(sol, vec![rat(5, 1), rat(0, 1)]);
        // Inconsistent.
        let a = vec![vec![rat(0, 1)]];
        let b = vec![rat(1, 1)];
        assert!(solve_dense_module(a, b, rat(0, 1)).is_none());
    }
}
