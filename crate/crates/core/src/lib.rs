//! Exact computer algebra for Yang-Baxter bialgebras: R-matrix validation,
//! braid matrices, braided factorials, the skew pairing between the plus and
//! minus bialgebras, and q-Serre relators read off as kernel vectors of
//! braided factorials.
//!
//! Everything is generic over [`field::FractionField`]. The aliases below fix
//! the scalar to `Q(q)` ([`Scalar`]), which is what the CLI uses, or to the
//! rationals for specialized values.
//!
//! ```
//! use qserre::{catalog, braided_factorial, right_nullspace, CatalogName};
//!
//! let r = catalog(&CatalogName::SlnQuantumPlane, 2).unwrap();
//! let f2 = braided_factorial(&r.braid().unwrap(), 2);
//! assert_eq!(right_nullspace(&f2.matrix).len(), 1);
//! ```

pub mod braided;
pub mod field;
pub mod freealg;
pub mod linalg;
pub mod rmatrix;
pub mod scalars;
pub mod serre;

pub use braided::{braided_factorial, braided_integer, pairing_gram_oracle, GramOracle};
pub use linalg::{left_nullspace, rank, right_nullspace, KernelBasis};
pub use rmatrix::{catalog, check_braid, check_ybe, load_rmatrix, CatalogName};
pub use scalars::{parse_scalar, Poly, Scalar};

pub type Rational = num::BigRational;

pub type ExactMatrix = linalg::Matrix<Scalar>;
pub type RationalMatrix = linalg::Matrix<Rational>;
pub type RMatrix = rmatrix::RMatrix<Scalar>;
pub type BraidMatrix = rmatrix::BraidMatrix<Scalar>;
pub type BraidedFactorial = braided::BraidedFactorial<Scalar>;
pub type FreePoly = freealg::FreePoly<Scalar>;
pub type Relator = serre::Relator<Scalar>;
