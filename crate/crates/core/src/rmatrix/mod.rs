//! R-matrices, their validation, and the braid matrix `B = P∘R`.
//!
//! Index convention: `R^{ij}_{kl}` is the entry at composite row `(i,j)` and
//! composite column `(k,l)`, with the big-endian encoding of
//! [`crate::linalg::encode_index`]. Upper indices are outputs.

mod catalog;
mod document;

use serde::Serialize;
use thiserror::Error;

use crate::field::{Field, FractionField};
use crate::linalg::{self, LinalgError, Matrix, TensorShape};

pub use catalog::{catalog, CatalogError, CatalogName};
pub use document::{load_rmatrix, EntryRecord, LoadError, RMatrixDocument};

/// Location and values of the first entry where two sides of a matrix
/// identity disagree. Row and column are given as multi-indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub row: Vec<usize>,
    pub col: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "row {:?}, column {:?}: {} != {}",
            self.row, self.col, self.lhs, self.rhs
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail(Witness),
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RMatrixError {
    #[error("matrix is {0}x{1}; expected n^2 x n^2")]
    Shape(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("Yang-Baxter equation violated at {0}")]
    YbeViolation(Witness),
    #[error("braid relation violated at {0}")]
    BraidViolation(Witness),
}

/// Returns `n` if the matrix is `n² × n²`.
pub fn pair_dim<S>(m: &Matrix<S>) -> Result<usize, RMatrixError> {
    let (r, c) = (m.rows(), m.cols());
    let n = (r as f64).sqrt().round() as usize;
    if r != c || n == 0 || n * n != r {
        return Err(RMatrixError::Shape(r, c));
    }
    Ok(n)
}

/// The flip `P^{ij}_{kl} = δ^i_l δ^j_k`.
pub fn flip<S: Field>(n: usize) -> Matrix<S> {
    let shape = TensorShape::new(n, 2);
    Matrix::from_fn(n * n, n * n, |r, c| {
        let (i, j) = (r / n, r % n);
        let (k, l) = (c / n, c % n);
        if i == l && j == k {
            S::one()
        } else {
            S::zero()
        }
    })
    .with_tensor(shape)
    .expect("flip shape")
}

fn witness<S: Field>(lhs: &Matrix<S>, rhs: &Matrix<S>, n: usize, legs: usize) -> Option<Witness> {
    lhs.first_difference(rhs).map(|(r, c)| Witness {
        row: linalg::decode_index(r, n, legs),
        col: linalg::decode_index(c, n, legs),
        lhs: lhs.get(r, c).to_string(),
        rhs: rhs.get(r, c).to_string(),
    })
}

/// Checks `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` on `V^{⊗3}`.
pub fn check_ybe<S: Field>(r: &Matrix<S>) -> Result<CheckOutcome, RMatrixError> {
    let n = pair_dim(r)?;
    let id = Matrix::<S>::identity(n);
    let r12 = r.kron(&id);
    let r23 = id.kron(r);
    let r13 = Matrix::from_fn(n * n * n, n * n * n, |row, col| {
        let (a, b, c) = (row / (n * n), (row / n) % n, row % n);
        let (d, e, f) = (col / (n * n), (col / n) % n, col % n);
        if b == e {
            r.get(a * n + c, d * n + f).clone()
        } else {
            S::zero()
        }
    });
    let lhs = r12.matmul(&r13).and_then(|m| m.matmul(&r23)).map_err(shape_err)?;
    let rhs = r23.matmul(&r13).and_then(|m| m.matmul(&r12)).map_err(shape_err)?;
    Ok(match witness(&lhs, &rhs, n, 3) {
        None => CheckOutcome::Pass,
        Some(w) => CheckOutcome::Fail(w),
    })
}

/// Checks `B₁B₂B₁ = B₂B₁B₂` on `V^{⊗3}`.
pub fn check_braid<S: Field>(b: &Matrix<S>) -> Result<CheckOutcome, RMatrixError> {
    let n = pair_dim(b)?;
    let b1 = b.embed_at(1, 3, n).map_err(shape_err)?;
    let b2 = b.embed_at(2, 3, n).map_err(shape_err)?;
    let lhs = b1.matmul(&b2).and_then(|m| m.matmul(&b1)).map_err(shape_err)?;
    let rhs = b2.matmul(&b1).and_then(|m| m.matmul(&b2)).map_err(shape_err)?;
    Ok(match witness(&lhs, &rhs, n, 3) {
        None => CheckOutcome::Pass,
        Some(w) => CheckOutcome::Fail(w),
    })
}

fn shape_err(e: LinalgError) -> RMatrixError {
    match e {
        LinalgError::ShapeMismatch { left, .. } => RMatrixError::Shape(left.0, left.1),
        _ => RMatrixError::Shape(0, 0),
    }
}

/// An invertible solution of the Yang-Baxter equation on `V⊗V`.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix<S> {
    dim: usize,
    matrix: Matrix<S>,
}

impl<S: FractionField> RMatrix<S> {
    /// Validates invertibility and the Yang-Baxter equation.
    pub fn new(matrix: Matrix<S>) -> Result<Self, RMatrixError> {
        let n = pair_dim(&matrix)?;
        if linalg::rank(&matrix) != n * n {
            return Err(RMatrixError::Singular);
        }
        if let CheckOutcome::Fail(w) = check_ybe(&matrix)? {
            return Err(RMatrixError::YbeViolation(w));
        }
        let matrix = matrix
            .with_tensor(TensorShape::new(n, 2))
            .expect("validated shape");
        Ok(RMatrix { dim: n, matrix })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    /// `R^{ij}_{kl}`
    pub fn entry(&self, i: usize, j: usize, k: usize, l: usize) -> &S {
        self.matrix.get(i * self.dim + j, k * self.dim + l)
    }

    pub fn inverse(&self) -> Matrix<S> {
        self.matrix.inverse().expect("validated R is invertible")
    }

    /// `B^{ij}_{mn} = R^{ji}_{mn}`, i.e. `B = P·R`.
    ///
    /// A validated R always yields a braid matrix; a failed braid check here
    /// means the index convention is broken and is reported as an error
    /// rather than silently returned.
    pub fn braid(&self) -> Result<BraidMatrix<S>, RMatrixError> {
        let n = self.dim;
        let b = Matrix::from_fn(n * n, n * n, |r, c| {
            let (i, j) = (r / n, r % n);
            self.matrix.get(j * n + i, c).clone()
        })
        .with_tensor(TensorShape::new(n, 2))
        .expect("square");
        if let CheckOutcome::Fail(w) = check_braid(&b)? {
            return Err(RMatrixError::BraidViolation(w));
        }
        Ok(BraidMatrix { dim: n, matrix: b })
    }
}

/// Alias for [`RMatrix::braid`].
pub fn braid_from_r<S: FractionField>(r: &RMatrix<S>) -> Result<BraidMatrix<S>, RMatrixError> {
    r.braid()
}

/// A solution of the braid relation on `V⊗V`.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidMatrix<S> {
    dim: usize,
    matrix: Matrix<S>,
}

impl<S: FractionField> BraidMatrix<S> {
    /// Validates shape, invertibility and the braid relation.
    pub fn new(matrix: Matrix<S>) -> Result<Self, RMatrixError> {
        let n = pair_dim(&matrix)?;
        if linalg::rank(&matrix) != n * n {
            return Err(RMatrixError::Singular);
        }
        if let CheckOutcome::Fail(w) = check_braid(&matrix)? {
            return Err(RMatrixError::BraidViolation(w));
        }
        let matrix = matrix
            .with_tensor(TensorShape::new(n, 2))
            .expect("validated shape");
        Ok(BraidMatrix { dim: n, matrix })
    }
}

impl<S> BraidMatrix<S> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{parse_scalar, Scalar};
    use num::{One, Zero};

    fn diag(params: &[&str]) -> Matrix<Scalar> {
        let n2 = params.len();
        Matrix::from_fn(n2, n2, |r, c| {
            if r == c {
                parse_scalar(params[r]).unwrap()
            } else {
                Scalar::zero()
            }
        })
    }

    #[test]
    fn identity_braid_is_flip() {
        let r = RMatrix::new(Matrix::<Scalar>::identity(4)).unwrap();
        assert_eq!(r.braid().unwrap().matrix(), &flip::<Scalar>(2));
    }

    #[test]
    fn flip_braid_is_identity() {
        let r = RMatrix::new(flip::<Scalar>(3)).unwrap();
        assert!(r.braid().unwrap().matrix().is_identity());
    }

    #[test]
    fn one_dimensional_braid_equals_r() {
        let r = RMatrix::new(diag(&["q"])).unwrap();
        assert_eq!(r.braid().unwrap().matrix(), &diag(&["q"]));
    }

    #[test]
    fn diagonal_braid_closed_form() {
        let params = ["q", "2", "1/q", "q^2 + 1"];
        let r = RMatrix::new(diag(&params)).unwrap();
        let b = r.braid().unwrap();
        let n = 2;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let expected = if i == l && j == k {
                            parse_scalar(params[j * n + i]).unwrap()
                        } else {
                            Scalar::zero()
                        };
                        assert_eq!(b.matrix().get(i * n + j, k * n + l), &expected);
                    }
                }
            }
        }
    }

    #[test]
    fn singular_and_misshapen_rejected() {
        assert_eq!(
            RMatrix::new(diag(&["q", "0", "1", "1"])).unwrap_err(),
            RMatrixError::Singular
        );
        assert!(matches!(
            RMatrix::new(Matrix::<Scalar>::identity(3)),
            Err(RMatrixError::Shape(3, 3))
        ));
        assert!(matches!(
            check_ybe(&Matrix::<Scalar>::zeros(4, 2)),
            Err(RMatrixError::Shape(4, 2))
        ));
    }

    #[test]
    fn braid_matrix_validation() {
        assert!(BraidMatrix::new(flip::<Scalar>(2)).is_ok());
        assert!(check_braid(&Matrix::<Scalar>::identity(4)).unwrap().passed());
        // a generic non-diagonal matrix violates the braid relation
        let mut m = Matrix::<Scalar>::identity(4);
        m.set(0, 1, Scalar::one());
        m.set(1, 3, Scalar::q());
        assert!(matches!(
            BraidMatrix::new(m),
            Err(RMatrixError::BraidViolation(_))
        ));
    }
}
