use std::fmt;

use num::BigRational;

use super::{LinalgError, TensorShape};
use crate::field::Field;
use crate::scalars::{Scalar, ScalarError};

/// Dense row-major matrix over a field.
///
/// When the matrix acts on a tensor power `V^{⊗N}` it may carry a
/// [`TensorShape`] tag; rows and columns are then composite indices in the
/// big-endian encoding of [`super::encode_index`].
#[derive(Clone)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
    tensor: Option<TensorShape>,
}

impl<S> Matrix<S> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn tensor(&self) -> Option<TensorShape> {
        self.tensor
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn map<T>(&self, f: impl FnMut(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            tensor: self.tensor,
        }
    }

    pub fn try_map<T, E>(&self, f: impl FnMut(&S) -> Result<T, E>) -> Result<Matrix<T>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
            tensor: self.tensor,
        })
    }
}

impl<S: Field> Matrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DataLength {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            data,
            tensor: None,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
            tensor: None,
        }
    }

    pub fn identity(k: usize) -> Self {
        Self::from_fn(k, k, |r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            data,
            tensor: None,
        }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinalgError::DataLength {
                expected: cols,
                found: bad.len(),
            });
        }
        let n = rows.len();
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    /// Attaches a tensor tag; the matrix must be `n^N × n^N`.
    pub fn with_tensor(mut self, shape: TensorShape) -> Result<Self, LinalgError> {
        let size = shape.size();
        if self.rows != size || self.cols != size {
            return Err(LinalgError::ShapeMismatch {
                op: "tensor tag",
                left: (self.rows, self.cols),
                right: (size, size),
            });
        }
        self.tensor = Some(shape);
        Ok(self)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone());
        out.tensor = self.tensor;
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn matmul(&self, rhs: &Matrix<S>) -> Result<Matrix<S>, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "matmul",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            let out_row = &mut out.data[r * rhs.cols..(r + 1) * rhs.cols];
            for (k, a) in self.row(r).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (slot, b) in out_row.iter_mut().zip(rhs.row(k)) {
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.clone() * b;
                    *slot = std::mem::replace(slot, S::zero()) + &prod;
                }
            }
        }
        if self.tensor == rhs.tensor {
            out.tensor = self.tensor;
        }
        Ok(out)
    }

    /// `M v` for a column vector.
    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::ShapeMismatch {
                op: "matrix-vector product",
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|r| dot(self.row(r).iter(), v.iter()))
            .collect())
    }

    /// `vᵀ M` for a row vector.
    pub fn vec_mul(&self, v: &[S]) -> Result<Vec<S>, LinalgError> {
        if v.len() != self.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "vector-matrix product",
                left: (1, v.len()),
                right: (self.rows, self.cols),
            });
        }
        Ok((0..self.cols)
            .map(|c| dot((0..self.rows).map(|r| self.get(r, c)), v.iter()))
            .collect())
    }

    /// Kronecker product: `(A⊗B)[(i,k),(j,l)] = A[i,j]·B[k,l]`.
    pub fn kron(&self, rhs: &Matrix<S>) -> Matrix<S> {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * rhs.rows + k) * cols + j * rhs.cols + l] = a.clone() * b;
                        }
                    }
                }
            }
        }
        if let (Some(a), Some(b)) = (self.tensor, rhs.tensor) {
            if a.dim == b.dim {
                out.tensor = Some(TensorShape::new(a.dim, a.legs + b.legs));
            }
        }
        out
    }

    /// Places a two-leg operator on legs `m, m+1` (1-based) of `V^{⊗legs}`:
    /// `id^{⊗(m-1)} ⊗ op ⊗ id^{⊗(legs-m-1)}`.
    pub fn embed_at(&self, m: usize, legs: usize, n: usize) -> Result<Matrix<S>, LinalgError> {
        let pair = n * n;
        if self.rows != pair || self.cols != pair {
            return Err(LinalgError::ShapeMismatch {
                op: "embed_at",
                left: (self.rows, self.cols),
                right: (pair, pair),
            });
        }
        if m == 0 || m + 1 > legs {
            return Err(LinalgError::PositionOutOfRange { position: m, legs });
        }
        let left = Self::identity(n.pow((m - 1) as u32));
        let right = Self::identity(n.pow((legs - m - 1) as u32));
        let out = left.kron(self).kron(&right);
        out.with_tensor(TensorShape::new(n, legs))
    }

    pub fn add(&self, rhs: &Matrix<S>) -> Result<Matrix<S>, LinalgError> {
        self.zip_with(rhs, "add", |a, b| a.clone() + b)
    }

    pub fn sub(&self, rhs: &Matrix<S>) -> Result<Matrix<S>, LinalgError> {
        self.zip_with(rhs, "sub", |a, b| a.clone() - b)
    }

    fn zip_with(
        &self,
        rhs: &Matrix<S>,
        op: &'static str,
        f: impl Fn(&S, &S) -> S,
    ) -> Result<Matrix<S>, LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::ShapeMismatch {
                op,
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
            tensor: if self.tensor == rhs.tensor {
                self.tensor
            } else {
                None
            },
        })
    }

    pub fn scale(&self, s: &S) -> Matrix<S> {
        self.map(|a| a.clone() * s)
    }

    /// First entry (row-major) where the two matrices differ.
    pub fn first_difference(&self, rhs: &Matrix<S>) -> Option<(usize, usize)> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Some((0, 0));
        }
        self.data
            .iter()
            .zip(&rhs.data)
            .position(|(a, b)| a != b)
            .map(|idx| (idx / self.cols, idx % self.cols))
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix<S>, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(LinalgError::Singular)?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a.get(col, col).clone();
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                a.axpy_row(r, col, &f);
                inv.axpy_row(r, col, &f);
            }
        }
        inv.tensor = self.tensor;
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Divides row `r` by `p`.
    fn scale_row(&mut self, r: usize, p: &S) {
        if p.is_one() {
            return;
        }
        for v in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            if !v.is_zero() {
                *v = std::mem::replace(v, S::zero()) / p;
            }
        }
    }

    /// `row[target] -= f · row[source]`
    fn axpy_row(&mut self, target: usize, source: usize, f: &S) {
        for c in 0..self.cols {
            let s = &self.data[source * self.cols + c];
            if s.is_zero() {
                continue;
            }
            let delta = f.clone() * s;
            let t = &mut self.data[target * self.cols + c];
            *t = std::mem::replace(t, S::zero()) - &delta;
        }
    }
}

impl Matrix<Scalar> {
    /// Specializes every entry at `q = q0`.
    pub fn evaluate_at(&self, q0: &BigRational) -> Result<Matrix<BigRational>, ScalarError> {
        self.try_map(|s| s.evaluate_at(q0))
    }
}

fn dot<'a, S: Field>(
    a: impl Iterator<Item = &'a S>,
    b: impl Iterator<Item = &'a S>,
) -> S {
    let mut acc = S::zero();
    for (x, y) in a.zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc + &(x.clone() * y);
        }
    }
    acc
}

/// Shape and entries only; the tensor tag is bookkeeping.
impl<S: PartialEq> PartialEq for Matrix<S> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<S: fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str("  ")?;
                }
                write!(f, "{:>width$}", cells[r * self.cols + c])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &self.data)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_scalar;
    use num::One;

    fn s(text: &str) -> Scalar {
        parse_scalar(text).unwrap()
    }

    fn m(rows: &[&[&str]]) -> Matrix<Scalar> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|t| s(t)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let a = m(&[&["1", "q"], &["q^2", "1/q"]]);
        assert_eq!(Matrix::identity(2).matmul(&a).unwrap(), a);
        assert_eq!(a.matmul(&Matrix::identity(2)).unwrap(), a);
    }

    #[test]
    fn product_with_inverse() {
        let a = m(&[&["1", "q"], &["q^2", "1/q"], ]);
        let inv = a.inverse().unwrap();
        assert!(a.matmul(&inv).unwrap().is_identity());
        assert!(inv.matmul(&a).unwrap().is_identity());
    }

    #[test]
    fn one_by_one_product() {
        let a = m(&[&["q"]]);
        assert_eq!(a.matmul(&a).unwrap(), m(&[&["q^2"]]));
    }

    #[test]
    fn shape_mismatch() {
        let a = Matrix::<Scalar>::zeros(2, 3);
        assert!(matches!(a.matmul(&a), Err(LinalgError::ShapeMismatch { .. })));
        assert!(matches!(
            Matrix::<Scalar>::new(2, 2, vec![Scalar::one()]),
            Err(LinalgError::DataLength { .. })
        ));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let a = m(&[&["1", "q"], &["q", "q^2"]]);
        assert_eq!(a.inverse().unwrap_err(), LinalgError::Singular);
    }

    #[test]
    fn kron_examples() {
        let id2 = Matrix::<Scalar>::identity(2);
        assert_eq!(id2.kron(&id2), Matrix::identity(4));
        let a = m(&[&["q"]]);
        let b = m(&[&["1", "2"], &["3", "4"]]);
        assert_eq!(a.kron(&b), b.scale(&s("q")));
        // (A⊗B)[(i,k),(j,l)] = A[i,j] B[k,l]
        let x = m(&[&["1", "q"], &["2", "3"]]);
        let y = m(&[&["5", "q^2", "7"], &["1", "0", "q"]]);
        let xy = x.kron(&y);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..3 {
                        assert_eq!(
                            xy.get(i * 2 + k, j * 3 + l),
                            &(x.get(i, j).clone() * y.get(k, l))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn embed_examples() {
        let b = m(&[
            &["q", "0", "0", "0"],
            &["0", "0", "1", "0"],
            &["0", "1", "q - 1/q", "0"],
            &["0", "0", "0", "q"],
        ]);
        assert_eq!(b.embed_at(1, 2, 2).unwrap(), b);
        assert_eq!(
            b.embed_at(2, 3, 2).unwrap(),
            Matrix::identity(2).kron(&b)
        );
        assert!(Matrix::<Scalar>::identity(4)
            .embed_at(2, 4, 2)
            .unwrap()
            .is_identity());
        assert!(matches!(
            b.embed_at(3, 3, 2),
            Err(LinalgError::PositionOutOfRange { .. })
        ));
        assert!(matches!(
            b.embed_at(0, 3, 2),
            Err(LinalgError::PositionOutOfRange { .. })
        ));
    }

    #[test]
    fn distant_embeddings_commute() {
        let b = m(&[
            &["q", "0", "0", "0"],
            &["0", "0", "1", "0"],
            &["0", "1", "q - 1/q", "0"],
            &["0", "0", "0", "q"],
        ]);
        let b1 = b.embed_at(1, 4, 2).unwrap();
        let b3 = b.embed_at(3, 4, 2).unwrap();
        assert_eq!(b1.matmul(&b3).unwrap(), b3.matmul(&b1).unwrap());
    }
}
