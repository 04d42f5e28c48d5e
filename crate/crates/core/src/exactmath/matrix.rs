//! Dense exact matrices. Tensor products use the lexicographic basis order:
//! e_i ⊗ e_j sits at index i * dim(B) + j.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            field,
            data,
        }
    }

    pub fn from_data(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        Matrix {
            rows,
            cols,
            field,
            data,
        }
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(field: FieldSpec, rows: usize, cols: usize, vals: &[i64]) -> Self {
        assert_eq!(vals.len(), rows * cols);
        Self::from_data(
            field,
            rows,
            cols,
            vals.iter().map(|&v| Scalar::from_int(field, v)).collect(),
        )
    }

    /// The 1x1 matrix holding `s`.
    pub fn scalar(s: Scalar) -> Self {
        let field = s.field();
        Self::from_data(field, 1, 1, vec![s])
    }

    /// Standard basis column vector e_i of length n.
    pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, n, 1);
        v.set(i, 0, Scalar::one(field));
        v
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        self.data[i * self.cols + j] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn column(&self, j: usize) -> Self {
        Self::from_fn(self.field, self.rows, 1, |i, _| self.get(i, j).clone())
    }

    pub fn row(&self, i: usize) -> Self {
        Self::from_fn(self.field, 1, self.cols, |_, j| self.get(i, j).clone())
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        Self::from_fn(self.field, rows.len(), cols.len(), |i, j| {
            self.get(rows.start + i, cols.start + j).clone()
        })
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.field, self.rows, idx.len(), |i, j| {
            self.get(i, idx[j]).clone()
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.field, idx.len(), self.cols, |i, j| {
            self.get(idx[i], j).clone()
        })
    }

    pub fn from_columns(field: FieldSpec, rows: usize, cols: &[Matrix]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.shape(), (rows, 1));
            for i in 0..rows {
                m.set(i, j, c.get(i, 0).clone());
            }
        }
        m
    }

    pub fn hstack(&self, other: &Matrix) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self::from_data(self.field, self.rows + other.rows, self.cols, data)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Self {
        Self::from_fn(
            self.field,
            self.rows + other.rows,
            self.cols + other.cols,
            |i, j| match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => other.get(i - self.rows, j - self.cols).clone(),
                _ => Scalar::zero(self.field),
            },
        )
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// Product skipping zero entries of the left factor.
    pub fn matmul(&self, rhs: &Matrix) -> Self {
        assert_eq!(
            self.cols,
            rhs.rows,
            "matmul shape mismatch: {:?} * {:?}",
            self.shape(),
            rhs.shape()
        );
        let mut out = Self::zeros(self.field, self.rows, rhs.cols);
        // Nonzero pattern of rhs rows, computed once.
        let rhs_nz: Vec<Vec<usize>> = (0..rhs.rows)
            .map(|k| {
                (0..rhs.cols)
                    .filter(|&j| !rhs.get(k, j).is_zero())
                    .collect()
            })
            .collect();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() || rhs_nz[k].is_empty() {
                    continue;
                }
                let base = i * rhs.cols;
                for &j in &rhs_nz[k] {
                    out.data[base + j].add_mul(a, rhs.get(k, j));
                }
            }
        }
        out
    }

    /// Kronecker product: (A⊗B)(e_i⊗e_j) = Ae_i ⊗ Be_j.
    pub fn kron(&self, rhs: &Matrix) -> Self {
        let (r1, c1) = self.shape();
        let (r2, c2) = rhs.shape();
        let mut out = Self::zeros(self.field, r1 * r2, c1 * c2);
        for i1 in 0..r1 {
            for j1 in 0..c1 {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..r2 {
                    for j2 in 0..c2 {
                        let b = rhs.get(i2, j2);
                        if !b.is_zero() {
                            out.set(i1 * r2 + i2, j1 * c2 + j2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Iterates over (row, col, value) for nonzero entries in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data.iter().enumerate().filter_map(move |(k, s)| {
            if s.is_zero() {
                None
            } else {
                Some((k / self.cols, k % self.cols, s))
            }
        })
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|s| !s.is_zero()).count()
    }
}

/// Kronecker product of a list of factors, left to right.
pub fn kron_all(field: FieldSpec, factors: &[&Matrix]) -> Matrix {
    let mut acc = Matrix::identity(field, 1);
    for f in factors {
        acc = acc.kron(f);
    }
    acc
}

/// The permutation ⊗ᵢ Vᵢ → ⊗ⱼ V_{perm[j]}: output factor j is input factor perm[j].
pub fn tensor_permutation(field: FieldSpec, dims: &[usize], perm: &[usize]) -> Matrix {
    assert_eq!(dims.len(), perm.len());
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut m = Matrix::zeros(field, total, total);
    let mut idx = vec![0usize; dims.len()];
    for col in 0..total {
        let mut rem = col;
        for k in (0..dims.len()).rev() {
            idx[k] = rem % dims[k];
            rem /= dims[k];
        }
        let mut row = 0;
        for (j, &p) in perm.iter().enumerate() {
            row = row * out_dims[j] + idx[p];
        }
        m.set(row, col, Scalar::one(field));
    }
    m
}

/// The flip A⊗B → B⊗A.
pub fn swap(field: FieldSpec, da: usize, db: usize) -> Matrix {
    tensor_permutation(field, &[da, db], &[1, 0])
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &'a Matrix) -> Matrix {
        self.matmul(rhs)
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "add shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "sub shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_index_order() {
        let f = FieldSpec::rational();
        let a = Matrix::from_ints(f, 2, 1, &[1, 2]);
        let b = Matrix::from_ints(f, 2, 1, &[3, 4]);
        assert_eq!(a.kron(&b), Matrix::from_ints(f, 4, 1, &[3, 4, 6, 8]));
    }

    #[test]
    fn swap_moves_factors() {
        let f = FieldSpec::rational();
        let a = Matrix::from_ints(f, 2, 1, &[1, 2]);
        let b = Matrix::from_ints(f, 3, 1, &[3, 4, 5]);
        assert_eq!(&swap(f, 2, 3) * &a.kron(&b), b.kron(&a));
    }

    #[test]
    fn permutation_of_three_factors() {
        let f = FieldSpec::rational();
        let a = Matrix::from_ints(f, 2, 1, &[1, 2]);
        let b = Matrix::from_ints(f, 3, 1, &[3, 4, 5]);
        let c = Matrix::from_ints(f, 2, 1, &[7, 11]);
        let p = tensor_permutation(f, &[2, 3, 2], &[2, 0, 1]);
        assert_eq!(&p * &kron_all(f, &[&a, &b, &c]), kron_all(f, &[&c, &a, &b]));
    }
}
