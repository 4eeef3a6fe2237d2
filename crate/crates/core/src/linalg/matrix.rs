use std::fmt;

use super::Scalar;

/// Dense row-major matrix over [`Scalar`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Panics if `entries.len() != rows * cols`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols, "matrix entry count mismatch");
        Matrix { rows, cols, entries }
    }

    /// Builds a matrix from equally long rows. An empty slice gives `0 x cols`
    /// only through [`Matrix::zeros`]; here it yields `0 x 0`.
    pub fn from_rows(rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().cloned().collect(),
        }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Matrix::from_entries(rows, cols, entries.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Scalar] {
        &mut self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scaled(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scaled(&Scalar::from_int(-1))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    /// Matrix product; skips zero entries of `self`, which dominate the
    /// coboundary matrices this is used on.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.entries[i * other.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc.add_mul(a, b);
                }
                acc
            })
            .collect()
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip().expect("nonzero pivot");
            if !inv.is_one() {
                for x in m.row_mut(r)[c..].iter_mut() {
                    *x = &*x * &inv;
                }
            }
            let pivot_row: Vec<Scalar> = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m[(i, c)].clone();
                if factor.is_zero() {
                    continue;
                }
                let row = m.row_mut(i);
                for (x, p) in row[c..].iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &(&factor * p);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rank by exact forward elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip().expect("nonzero pivot");
            let pivot_row: Vec<Scalar> = m.row(r)[c..].to_vec();
            for i in r + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = &m[(i, c)] * &inv;
                let row = m.row_mut(i);
                for (x, p) in row[c..].iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &(&factor * p);
                    }
                }
            }
            r += 1;
        }
        r
    }

    /// `(rank, nullity)`; the two always sum to the column count.
    pub fn rank_nullity(&self) -> (usize, usize) {
        let r = self.rank();
        (r, self.cols - r)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            aug.row_mut(i)[..n].clone_from_slice(self.row(i));
            aug[(i, n + i)] = Scalar::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots.last().is_some_and(|&p| p >= n) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            inv.row_mut(i).clone_from_slice(&red.row(i)[n..]);
        }
        Some(inv)
    }

    /// A basis of `{v : self * v = 0}`, one vector per free column of the
    /// reduced echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (red, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[free] = Scalar::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&red[(row, free)];
                }
                v
            })
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}
