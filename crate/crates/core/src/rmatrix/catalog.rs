//! Built-in R-matrices.

use std::fmt;
use std::str::FromStr;

use num::{One, Zero};
use thiserror::Error;

use super::{flip, RMatrix, RMatrixError};
use crate::linalg::Matrix;
use crate::scalars::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogName {
    Identity,
    Flip,
    /// `R^{ij}_{ij} = r_{ij}`, parameters in row-major order of `(i, j)`.
    Diagonal(Vec<Scalar>),
    /// The vector-representation R-matrix of `U_q(sl_n)`:
    /// `q` on `e_ii⊗e_ii`, `1` on `e_ii⊗e_jj` (`i ≠ j`) and `q - q^{-1}` on
    /// `e_ij⊗e_ji` for `i < j`.
    SlnStandard,
    /// `q` times [`CatalogName::SlnStandard`]. The braid matrix then has
    /// eigenvalues `q²` and `-1`, the latter with multiplicity `n(n-1)/2`.
    SlnQuantumPlane,
}

impl CatalogName {
    pub const NAMES: [&'static str; 5] = [
        "identity",
        "flip",
        "diagonal",
        "sln_standard",
        "sln_quantum_plane",
    ];

    pub fn describe(name: &str) -> &'static str {
        match name {
            "identity" => "R = 1 on V⊗V",
            "flip" => "R = P, the tensor flip",
            "diagonal" => "R^{ij}_{ij} = r_ij (n² nonzero parameters)",
            "sln_standard" => "standard U_q(sl_n) vector R-matrix, n >= 2",
            "sln_quantum_plane" => "q · sln_standard; braid eigenvalues q² and -1",
            _ => "",
        }
    }

    /// Parses a catalog name; `diagonal` takes its parameters separately.
    pub fn from_parts(name: &str, params: Vec<Scalar>) -> Result<Self, CatalogError> {
        let entry = match name {
            "identity" => CatalogName::Identity,
            "flip" => CatalogName::Flip,
            "diagonal" => CatalogName::Diagonal(params),
            "sln_standard" => CatalogName::SlnStandard,
            "sln_quantum_plane" => CatalogName::SlnQuantumPlane,
            other => return Err(CatalogError::UnknownName(other.to_string())),
        };
        Ok(entry)
    }
}

impl FromStr for CatalogName {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::from_parts(s, Vec::new())
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CatalogName::Identity => "identity",
            CatalogName::Flip => "flip",
            CatalogName::Diagonal(_) => "diagonal",
            CatalogName::SlnStandard => "sln_standard",
            CatalogName::SlnQuantumPlane => "sln_quantum_plane",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry '{0}'")]
    UnknownName(String),
    #[error("invalid dimension {n} for {name}")]
    InvalidDimension { name: String, n: usize },
    #[error("diagonal R needs {expected} parameters, got {found}")]
    ParameterCount { expected: usize, found: usize },
    #[error(transparent)]
    Invalid(#[from] RMatrixError),
}

pub fn catalog(name: &CatalogName, n: usize) -> Result<RMatrix<Scalar>, CatalogError> {
    let min = match name {
        CatalogName::SlnStandard | CatalogName::SlnQuantumPlane => 2,
        _ => 1,
    };
    if n < min {
        return Err(CatalogError::InvalidDimension {
            name: name.to_string(),
            n,
        });
    }
    let n2 = n * n;
    let m = match name {
        CatalogName::Identity => Matrix::identity(n2),
        CatalogName::Flip => flip(n),
        CatalogName::Diagonal(params) => {
            if params.len() != n2 {
                return Err(CatalogError::ParameterCount {
                    expected: n2,
                    found: params.len(),
                });
            }
            Matrix::from_fn(n2, n2, |r, c| {
                if r == c {
                    params[r].clone()
                } else {
                    Scalar::zero()
                }
            })
        }
        CatalogName::SlnStandard => sln_standard(n),
        CatalogName::SlnQuantumPlane => sln_standard(n).scale(&Scalar::q()),
    };
    Ok(RMatrix::new(m)?)
}

fn sln_standard(n: usize) -> Matrix<Scalar> {
    let q = Scalar::q();
    let gap = &q - &Scalar::q_power(-1);
    Matrix::from_fn(n * n, n * n, |r, c| {
        let (i, j) = (r / n, r % n);
        let (k, l) = (c / n, c % n);
        if (i, j) == (k, l) {
            if i == j {
                q.clone()
            } else {
                Scalar::one()
            }
        } else if i < j && (k, l) == (j, i) {
            gap.clone()
        } else {
            Scalar::zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatrix::check_braid;

    #[test]
    fn identity_entry() {
        let r = catalog(&CatalogName::Identity, 2).unwrap();
        assert!(r.matrix().is_identity());
    }

    #[test]
    fn sl2_is_valid_and_braids() {
        for n in 2..=3 {
            for name in [CatalogName::SlnStandard, CatalogName::SlnQuantumPlane] {
                let r = catalog(&name, n).unwrap();
                let b = r.braid().unwrap();
                assert!(check_braid(b.matrix()).unwrap().passed());
            }
        }
    }

    #[test]
    fn sl2_entries() {
        let r = catalog(&CatalogName::SlnStandard, 2).unwrap();
        assert_eq!(r.entry(0, 0, 0, 0), &Scalar::q());
        assert_eq!(r.entry(0, 1, 0, 1), &Scalar::one());
        assert_eq!(r.entry(0, 1, 1, 0).to_string(), "(q^2 - 1)/q");
        assert!(r.entry(1, 0, 0, 1).is_zero());
    }

    #[test]
    fn bad_requests() {
        assert!(matches!(
            catalog(&CatalogName::SlnStandard, 1),
            Err(CatalogError::InvalidDimension { .. })
        ));
        assert!(matches!(
            "su2".parse::<CatalogName>(),
            Err(CatalogError::UnknownName(_))
        ));
        assert!(matches!(
            catalog(&CatalogName::Diagonal(vec![Scalar::one()]), 2),
            Err(CatalogError::ParameterCount { .. })
        ));
        assert!(matches!(
            catalog(&CatalogName::Diagonal(vec![Scalar::zero()]), 1),
            Err(CatalogError::Invalid(RMatrixError::Singular))
        ));
    }
}
