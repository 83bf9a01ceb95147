//! JSON document format for R-matrices:
//!
//! ```json
//! { "dim": 2,
//!   "entries": [ { "i": 0, "j": 0, "k": 0, "l": 0, "value": "q" }, ... ] }
//! ```
//!
//! `value` is `R^{ij}_{kl}` in the scalar grammar. Omitted entries are zero
//! and a repeated `(i, j, k, l)` is rejected.

use std::collections::BTreeSet;

use num::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{RMatrix, RMatrixError};
use crate::linalg::Matrix;
use crate::scalars::{parse_scalar, Scalar, ScalarError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryRecord {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RMatrixDocument {
    pub dim: usize,
    pub entries: Vec<EntryRecord>,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("dimension must be positive")]
    ZeroDim,
    #[error("entry {index}: index ({i},{j},{k},{l}) out of range for dim {dim}")]
    IndexOutOfRange {
        index: usize,
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        dim: usize,
    },
    #[error("entry {index}: duplicate index ({i},{j},{k},{l})")]
    Duplicate {
        index: usize,
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },
    #[error("entry {index}: {source}")]
    Value { index: usize, source: ScalarError },
    #[error(transparent)]
    Invalid(#[from] RMatrixError),
}

impl RMatrixDocument {
    /// Nonzero entries in composite (row, column) order.
    pub fn from_rmatrix(r: &RMatrix<Scalar>) -> Self {
        Self::from_matrix(r.dim(), r.matrix())
    }

    /// As [`Self::from_rmatrix`] for an unvalidated `n² × n²` matrix.
    pub fn from_matrix(n: usize, m: &Matrix<Scalar>) -> Self {
        let mut entries = Vec::new();
        for row in 0..n * n {
            for col in 0..n * n {
                let v = m.get(row, col);
                if !v.is_zero() {
                    entries.push(EntryRecord {
                        i: row / n,
                        j: row % n,
                        k: col / n,
                        l: col % n,
                        value: v.to_string(),
                    });
                }
            }
        }
        RMatrixDocument { dim: n, entries }
    }

    /// Builds the matrix without validating it.
    pub fn to_matrix(&self) -> Result<Matrix<Scalar>, LoadError> {
        let n = self.dim;
        if n == 0 {
            return Err(LoadError::ZeroDim);
        }
        let mut m = Matrix::zeros(n * n, n * n);
        let mut seen = BTreeSet::new();
        for (index, e) in self.entries.iter().enumerate() {
            let (i, j, k, l) = (e.i, e.j, e.k, e.l);
            if [i, j, k, l].iter().any(|&x| x >= n) {
                return Err(LoadError::IndexOutOfRange {
                    index,
                    i,
                    j,
                    k,
                    l,
                    dim: n,
                });
            }
            if !seen.insert((i, j, k, l)) {
                return Err(LoadError::Duplicate { index, i, j, k, l });
            }
            let v = parse_scalar(&e.value).map_err(|source| LoadError::Value { index, source })?;
            m.set(i * n + j, k * n + l, v);
        }
        Ok(m)
    }

    pub fn parse(text: &str) -> Result<Self, LoadError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// Parses and validates an R-matrix document.
pub fn load_rmatrix(text: &str) -> Result<RMatrix<Scalar>, LoadError> {
    let doc = RMatrixDocument::parse(text)?;
    Ok(RMatrix::new(doc.to_matrix()?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_document() {
        let text = r#"{"dim": 2, "entries": [
            {"i":0,"j":0,"k":0,"l":0,"value":"1"},
            {"i":0,"j":1,"k":0,"l":1,"value":"1"},
            {"i":1,"j":0,"k":1,"l":0,"value":"1"},
            {"i":1,"j":1,"k":1,"l":1,"value":"1"}]}"#;
        let r = load_rmatrix(text).unwrap();
        assert!(r.matrix().is_identity());
    }

    #[test]
    fn diagonal_document() {
        let text = r#"{"dim": 2, "entries": [
            {"i":0,"j":0,"k":0,"l":0,"value":"q"},
            {"i":0,"j":1,"k":0,"l":1,"value":"q^2 + 3"},
            {"i":1,"j":0,"k":1,"l":0,"value":"-1/q"},
            {"i":1,"j":1,"k":1,"l":1,"value":"7"}]}"#;
        assert!(load_rmatrix(text).is_ok());
    }

    #[test]
    fn rejects_duplicates_and_bad_indices() {
        let dup = r#"{"dim": 1, "entries": [
            {"i":0,"j":0,"k":0,"l":0,"value":"1"},
            {"i":0,"j":0,"k":0,"l":0,"value":"2"}]}"#;
        assert!(matches!(load_rmatrix(dup), Err(LoadError::Duplicate { index: 1, .. })));
        let oob = r#"{"dim": 1, "entries": [{"i":1,"j":0,"k":0,"l":0,"value":"1"}]}"#;
        assert!(matches!(load_rmatrix(oob), Err(LoadError::IndexOutOfRange { .. })));
        let bad = r#"{"dim": 1, "entries": [{"i":0,"j":0,"k":0,"l":0,"value":"q +"}]}"#;
        assert!(matches!(load_rmatrix(bad), Err(LoadError::Value { index: 0, .. })));
        assert!(matches!(load_rmatrix("{\"dim\": 1}"), Err(LoadError::Json(_))));
        let zero = r#"{"dim": 0, "entries": []}"#;
        assert!(matches!(load_rmatrix(zero), Err(LoadError::ZeroDim)));
        let singular = r#"{"dim": 1, "entries": []}"#;
        assert!(matches!(
            load_rmatrix(singular),
            Err(LoadError::Invalid(RMatrixError::Singular))
        ));
    }

    #[test]
    fn document_round_trip() {
        let r = super::super::catalog(&super::super::CatalogName::SlnStandard, 2).unwrap();
        let doc = RMatrixDocument::from_rmatrix(&r);
        let back = load_rmatrix(&doc.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
