//! Exact matrices over a field, with reduced row echelon form as the
//! canonical representative of a row space. Generic over the entry field so
//! the same elimination drives rational, algebraic-extension and
//! rational-function computations.

use std::fmt;

use crate::scalar::Scalar;

/// Minimal field interface for exact elimination.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Scalar::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Scalar::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Scalar::mul(self, other)
    }
    fn div(&self, other: &Self) -> Self {
        Scalar::div(self, other)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field = Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Outcome of solving a linear system exactly.
#[derive(Clone, Debug, PartialEq)]
pub enum LinSolve<F: Field = Scalar> {
    Unique(Vec<F>),
    NoSolution,
    NonUnique,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Matrix<F> {
        assert_eq!(data.len(), rows * cols, "inconsistent dimensions");
        Matrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Matrix<F> {
        Matrix::new(rows, cols, vec![F::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Matrix<F> {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Matrix<F> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut F {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut m = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *m.get_mut(c, r) = self.get(r, c).clone();
            }
        }
        m
    }

    pub fn matmul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows);
        let mut m: Matrix<F> = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = a.mul(other.get(k, c));
                    let cur = m.get(r, c).add(&v);
                    *m.get_mut(r, c) = cur;
                }
            }
        }
        m
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = F::zero();
                for (c, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc = acc.add(&self.get(r, c).mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form: pivots are 1 with zeros above and below,
    /// pivot selection is the first nonzero entry per column. Returns the
    /// pivot columns. The result is the unique canonical form of the row
    /// space plus zero rows.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = F::one().div(m.get(r, c));
            for j in 0..m.cols {
                *m.get_mut(r, j) = m.get(r, j).mul(&inv);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(r, j).mul(&factor);
                    *m.get_mut(i, j) = m.get(i, j).sub(&v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the row space: rref with zero rows dropped.
    pub fn row_space(&self) -> Matrix<F> {
        let (m, pivots) = self.rref();
        let k = pivots.len();
        Matrix::from_rows((0..k).map(|r| m.row(r).to_vec()).collect())
    }

    /// Solve self * x = b, reporting non-uniqueness and inconsistency as
    /// outcomes rather than failures.
    pub fn solve(&self, b: &[F]) -> LinSolve<F> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.get_mut(r, c) = self.get(r, c).clone();
            }
            *aug.get_mut(r, self.cols) = b[r].clone();
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return LinSolve::NoSolution;
        }
        if pivots.len() < self.cols {
            return LinSolve::NonUnique;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = red.get(r, self.cols).clone();
        }
        LinSolve::Unique(x)
    }

    /// Basis of the right kernel {x : self * x = 0}, one vector per free
    /// column of the rref, in column order.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (red, pivots) = self.rref();
        let mut out = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(r);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = red.get(r, free).neg();
            }
            out.push(v);
        }
        out
    }

    pub fn vstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix::new(self.rows + other.rows, self.cols, data)
    }
}

/// Reduce `v` against rref rows with the given pivot columns; the residue is
/// the canonical representative of `v` modulo the row space.
pub fn reduce_against<F: Field>(rref: &Matrix<F>, pivots: &[usize], v: &[F]) -> Vec<F> {
    let mut v = v.to_vec();
    for (r, &c) in pivots.iter().enumerate() {
        if v[c].is_zero() {
            continue;
        }
        let factor = v[c].clone();
        for j in 0..v.len() {
            let d = rref.get(r, j).mul(&factor);
            v[j] = v[j].sub(&d);
        }
    }
    v
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| s(x)).collect()).collect())
    }

    #[test]
    fn rref_rank_one() {
        let (r, p) = m(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_identity_fixed() {
        let id: Matrix = Matrix::identity(3);
        assert_eq!(id.rref().0, id);
    }

    #[test]
    fn rref_permutation() {
        let (r, _) = m(&[&[0, 1], &[1, 0]]).rref();
        assert_eq!(r, Matrix::identity(2));
    }

    #[test]
    fn rref_idempotent() {
        let a = m(&[&[2, 4, 1], &[3, 1, 0], &[5, 5, 1]]);
        let (r1, _) = a.rref();
        let (r2, _) = r1.rref();
        assert_eq!(r1, r2);
    }

    #[test]
    fn solve_diagonal() {
        let a = m(&[&[2, 0], &[0, 4]]);
        let b = vec![s(1), s(1)];
        assert_eq!(
            a.solve(&b),
            LinSolve::Unique(vec![Scalar::from_ratio(1, 2), Scalar::from_ratio(1, 4)])
        );
    }

    #[test]
    fn solve_inconsistent() {
        let a = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(a.solve(&[s(1), s(2)]), LinSolve::NoSolution);
    }

    #[test]
    fn solve_underdetermined() {
        let a = m(&[&[1, 1]]);
        assert_eq!(a.solve(&[s(1)]), LinSolve::NonUnique);
    }

    #[test]
    fn solution_satisfies_system() {
        let a = m(&[&[3, 1, 2], &[1, 0, 1], &[0, 5, 1]]);
        let b = vec![s(7), s(-2), s(9)];
        let LinSolve::Unique(x) = a.solve(&b) else {
            panic!("expected unique");
        };
        assert_eq!(a.apply(&x), b);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ker = a.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(a.apply(v).iter().all(|x| x.is_zero()));
        }
    }
}
