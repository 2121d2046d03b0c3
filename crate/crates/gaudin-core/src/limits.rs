//! Limits of families of subspaces along rational curves eps -> 0.
//!
//! The limit of the row span in the Grassmannian is computed by Gauss-Jordan
//! elimination over the local ring of rational functions regular at eps = 0,
//! interleaved with valuation renormalization: every row is rescaled by the
//! inverse of its lowest eps-order before a pivot of order zero is chosen.
//! Pivot entries are exact units, so evaluating the reduced rows at eps = 0
//! always yields independent rows, preserving the generic rank even when a
//! naive row-by-row evaluation would collapse.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ratfunc::RatFunc;
use crate::scalar::Scalar;

/// Limit at eps = 0 of the row span of `rows`, as the canonical rref basis.
/// Errors if the rows are dependent for generic eps.
pub fn subspace_limit(rows: &[Vec<RatFunc>]) -> Result<Matrix<Scalar>> {
    let n = rows.len();
    if n == 0 {
        return Ok(Matrix::from_rows(vec![]));
    }
    let cols = rows[0].len();
    let generic = Matrix::from_rows(rows.to_vec());
    if generic.rank() < n {
        return Err(Error::RankDeficient);
    }

    let mut processed: Vec<(Vec<RatFunc>, usize)> = Vec::new();
    for row in rows {
        let mut w = row.clone();
        // reduce against existing pivots
        for (p, c) in &processed {
            if w[*c].is_zero() {
                continue;
            }
            let factor = w[*c].clone();
            for j in 0..cols {
                let d = factor.mul(&p[j]);
                w[j] = w[j].sub(&d);
            }
        }
        // renormalize to valuation zero
        let nu = w
            .iter()
            .filter_map(|e| e.ord())
            .min()
            .expect("row cannot vanish: generic rank is full");
        if nu != 0 {
            for e in w.iter_mut() {
                *e = e.shift(-nu);
            }
        }
        // pivot: first column whose entry is a unit at eps = 0
        let c = (0..cols)
            .find(|&j| w[j].ord() == Some(0))
            .expect("an order-zero entry exists after renormalization");
        let inv = w[c].inv();
        for j in 0..cols {
            w[j] = w[j].mul(&inv);
        }
        // clear the new pivot column from earlier rows
        for (p, _) in processed.iter_mut() {
            if p[c].is_zero() {
                continue;
            }
            let factor = p[c].clone();
            for j in 0..cols {
                let d = factor.mul(&w[j]);
                p[j] = p[j].sub(&d);
            }
        }
        processed.push((w, c));
    }

    let evaluated: Vec<Vec<Scalar>> = processed
        .iter()
        .map(|(w, _)| {
            w.iter()
                .map(|e| match e.limit_at_zero() {
                    crate::ratfunc::Limit::Finite(v) => v,
                    crate::ratfunc::Limit::Infinite => {
                        unreachable!("processed rows are regular at eps = 0")
                    }
                })
                .collect()
        })
        .collect();
    let m = Matrix::from_rows(evaluated);
    debug_assert_eq!(m.rank(), n);
    Ok(m.row_space())
}

/// Exact evaluation of a rational-function matrix at a scalar point; None if
/// any denominator vanishes there. Used by tests as the independent
/// "evaluate at small eps and track the rank" oracle.
pub fn evaluate_rows_at(rows: &[Vec<RatFunc>], x: &Scalar) -> Option<Matrix<Scalar>> {
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let mut r = Vec::with_capacity(row.len());
        for e in row {
            r.push(e.eval(x)?);
        }
        out.push(r);
    }
    Some(Matrix::from_rows(out))
}
