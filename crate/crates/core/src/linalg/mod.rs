//! Dense exact matrices with tensor-power indexing, and kernels.

mod matrix;
mod nullspace;

use thiserror::Error;

pub use matrix::Matrix;
pub use nullspace::{
    canonical_basis, complement_modulo, left_nullspace, normalize_vector, rank, reduced_echelon,
    right_nullspace, span_dim, KernelBasis, KernelSide,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("expected {expected} entries, found {found}")]
    DataLength { expected: usize, found: usize },
    #[error("position {position} out of range for {legs} tensor legs")]
    PositionOutOfRange { position: usize, legs: usize },
    #[error("matrix is {0}x{1}, not square")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
}

/// `V^{⊗legs}` with `dim V = dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TensorShape {
    pub dim: usize,
    pub legs: usize,
}

impl TensorShape {
    pub fn new(dim: usize, legs: usize) -> Self {
        TensorShape { dim, legs }
    }

    /// `dim^legs`
    pub fn size(&self) -> usize {
        self.dim.pow(self.legs as u32)
    }

    pub fn encode(&self, indices: &[usize]) -> usize {
        debug_assert_eq!(indices.len(), self.legs);
        encode_index(indices, self.dim)
    }

    pub fn decode(&self, composite: usize) -> Vec<usize> {
        decode_index(composite, self.dim, self.legs)
    }

    /// All multi-indices in composite order.
    pub fn multi_indices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.size()).map(|c| self.decode(c))
    }
}

/// Big-endian composite index: `(i_1,…,i_N) ↦ i_1·n^{N-1} + … + i_N`.
pub fn encode_index(indices: &[usize], n: usize) -> usize {
    indices.iter().fold(0, |acc, &i| {
        debug_assert!(i < n);
        acc * n + i
    })
}

pub fn decode_index(mut composite: usize, n: usize, legs: usize) -> Vec<usize> {
    let mut out = vec![0; legs];
    for slot in out.iter_mut().rev() {
        *slot = composite % n;
        composite /= n;
    }
    out
}
