//! Generalized q-Serre relators: kernel vectors of braided factorials.
//!
//! An E-side relator of degree `N` is `Σ ω^{a₁…a_N} E_{a₁}⋯E_{a_N}` with
//! `[N!]_B ω = 0`; an F-side relator is `Σ η_{a₁…a_N} F^{a₁}⋯F^{a_N}` with
//! `η [N!]_B = 0`. [`new_relators`] keeps only the part of the kernel not
//! already spanned by lower-degree relators placed at every tensor position.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::braided::{braided_factorial, BraidedFactorial};
use crate::field::FractionField;
use crate::freealg::{alphabet, FreePoly, Letter, Monomial, Side, SkewPairing};
use crate::linalg::{complement_modulo, decode_index, encode_index, left_nullspace, right_nullspace, Matrix};
use crate::rmatrix::RMatrix;
use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RelatorSide {
    E,
    F,
}

impl fmt::Display for RelatorSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelatorSide::E => "E",
            RelatorSide::F => "F",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SerreError {
    #[error("degree must be at least {min}, got {found}")]
    Degree { min: usize, found: usize },
    #[error("lower kernel basis for degree {0} is missing")]
    MissingDegree(usize),
    #[error("lower kernel vector for degree {degree} has length {found}, expected {expected}")]
    VectorLength {
        degree: usize,
        expected: usize,
        found: usize,
    },
    #[error("polynomial is not a homogeneous {side}-word combination of degree {degree}")]
    NotARelator { side: RelatorSide, degree: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Relator<S> {
    pub side: RelatorSide,
    pub dim: usize,
    pub degree: usize,
    /// indexed by the big-endian composite of `(a₁, …, a_N)`
    pub coefficients: Vec<S>,
}

impl<S: FractionField> Relator<S> {
    fn letter(&self, a: usize) -> Letter {
        match self.side {
            RelatorSide::E => Letter::E(a),
            RelatorSide::F => Letter::F(a),
        }
    }

    /// Nonzero coefficients with their multi-indices.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &S)> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (decode_index(k, self.dim, self.degree), c))
    }

    pub fn rendering(&self) -> FreePoly<S> {
        let mut p = FreePoly::zero();
        for (idx, c) in self.entries() {
            let word = Monomial::new(idx.iter().map(|&a| self.letter(a)).collect());
            p.add_term(word, c.clone());
        }
        p
    }

    /// Reads the coefficient vector back from a rendering.
    pub fn from_poly(
        poly: &FreePoly<S>,
        side: RelatorSide,
        dim: usize,
        degree: usize,
    ) -> Result<Self, SerreError> {
        let bad = || SerreError::NotARelator { side, degree };
        let mut coefficients = vec![S::zero(); dim.pow(degree as u32)];
        for (m, c) in poly.terms() {
            if m.len() != degree {
                return Err(bad());
            }
            let mut idx = Vec::with_capacity(degree);
            for l in m.letters() {
                match (side, l) {
                    (RelatorSide::E, Letter::E(a)) | (RelatorSide::F, Letter::F(a)) if *a < dim => {
                        idx.push(*a)
                    }
                    _ => return Err(bad()),
                }
            }
            coefficients[encode_index(&idx, dim)] = c.clone();
        }
        Ok(Relator {
            side,
            dim,
            degree,
            coefficients,
        })
    }
}

fn wrap<S: FractionField>(vectors: Vec<Vec<S>>, side: RelatorSide, dim: usize, degree: usize) -> Vec<Relator<S>> {
    vectors
        .into_iter()
        .map(|coefficients| Relator {
            side,
            dim,
            degree,
            coefficients,
        })
        .collect()
}

/// Relators from an already computed factorial.
pub fn kernel_relators<S: FractionField>(fact: &BraidedFactorial<S>, side: RelatorSide) -> Vec<Relator<S>> {
    let basis = match side {
        RelatorSide::E => right_nullspace(&fact.matrix),
        RelatorSide::F => left_nullspace(&fact.matrix),
    };
    wrap(basis.into_vectors(), side, fact.dim, fact.degree)
}

fn check_degree(degree: usize) -> Result<(), SerreError> {
    if degree < 2 {
        return Err(SerreError::Degree {
            min: 2,
            found: degree,
        });
    }
    Ok(())
}

fn braided<S: FractionField>(r: &RMatrix<S>, degree: usize) -> BraidedFactorial<S> {
    let b = r.braid().expect("a validated R-matrix yields a braid matrix");
    braided_factorial(&b, degree)
}

/// Basis of `ker [N!]_B` as E-side relators.
pub fn e_relators<S: FractionField>(r: &RMatrix<S>, degree: usize) -> Result<Vec<Relator<S>>, SerreError> {
    check_degree(degree)?;
    Ok(kernel_relators(&braided(r, degree), RelatorSide::E))
}

/// Basis of the left kernel of `[N!]_B` as F-side relators.
pub fn f_relators<S: FractionField>(r: &RMatrix<S>, degree: usize) -> Result<Vec<Relator<S>>, SerreError> {
    check_degree(degree)?;
    Ok(kernel_relators(&braided(r, degree), RelatorSide::F))
}

/// Vectors `e_α ⊗ κ ⊗ e_β` for every `κ` in a lower kernel and every
/// placement inside `V^{⊗N}`.
pub fn ideal_component<S: FractionField>(
    dim: usize,
    degree: usize,
    lower: &BTreeMap<usize, Vec<Vec<S>>>,
) -> Result<Vec<Vec<S>>, SerreError> {
    let size = dim.pow(degree as u32);
    let mut out = Vec::new();
    for d in 2..degree {
        let basis = lower.get(&d).ok_or(SerreError::MissingDegree(d))?;
        let inner = dim.pow(d as u32);
        for kappa in basis {
            if kappa.len() != inner {
                return Err(SerreError::VectorLength {
                    degree: d,
                    expected: inner,
                    found: kappa.len(),
                });
            }
            for before in 0..=degree - d {
                let after = degree - d - before;
                let tail = dim.pow(after as u32);
                for alpha in 0..dim.pow(before as u32) {
                    for beta in 0..tail {
                        let mut v = vec![S::zero(); size];
                        for (c, x) in kappa.iter().enumerate() {
                            if !x.is_zero() {
                                v[(alpha * inner + c) * tail + beta] = x.clone();
                            }
                        }
                        out.push(v);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Kernel of `[N!]_B` on the given side modulo the two-sided ideal component
/// generated by `lower` (full kernel bases of the same side for every degree
/// `2 ≤ d < N`).
pub fn new_relators<S: FractionField>(
    r: &RMatrix<S>,
    degree: usize,
    side: RelatorSide,
    lower: &BTreeMap<usize, Vec<Vec<S>>>,
) -> Result<Vec<Relator<S>>, SerreError> {
    check_degree(degree)?;
    let kernel = kernel_relators(&braided(r, degree), side);
    new_relators_from_kernel(&kernel, r.dim(), degree, side, lower)
}

/// As [`new_relators`], reusing an already computed kernel.
pub fn new_relators_from_kernel<S: FractionField>(
    kernel: &[Relator<S>],
    dim: usize,
    degree: usize,
    side: RelatorSide,
    lower: &BTreeMap<usize, Vec<Vec<S>>>,
) -> Result<Vec<Relator<S>>, SerreError> {
    let ideal = ideal_component(dim, degree, lower)?;
    let vectors: Vec<Vec<S>> = kernel.iter().map(|k| k.coefficients.clone()).collect();
    let fresh = complement_modulo(&vectors, ideal, dim.pow(degree as u32));
    Ok(wrap(fresh, side, dim, degree))
}

/// Gram matrix of the pairing between degree-`d` `u`-words (rows) and
/// `t`-words (columns), both in canonical word order.
pub fn tu_null_gram<S: FractionField>(r: &RMatrix<S>, degree: usize) -> Matrix<S> {
    let pairing = SkewPairing::new(r);
    tu_null_gram_with(&pairing, degree)
}

pub fn tu_null_gram_with<S: FractionField>(pairing: &SkewPairing<S>, degree: usize) -> Matrix<S> {
    let n = pairing.dim();
    let pick = |side: Side| -> Vec<Letter> {
        alphabet(side, n)
            .into_iter()
            .filter(|l| matches!(l, Letter::T(..) | Letter::U(..)))
            .collect()
    };
    let rows = Monomial::all_words(&pick(Side::Plus), degree);
    let cols = Monomial::all_words(&pick(Side::Minus), degree);
    Matrix::from_fn(rows.len(), cols.len(), |i, j| {
        pairing
            .pair(&rows[i], &cols[j])
            .expect("words are generated on the correct sides")
    })
}

/// The degree-`d` `t`-words indexing the columns of [`tu_null_gram`].
pub fn t_words(n: usize, degree: usize) -> Vec<Monomial> {
    let letters: Vec<Letter> = alphabet(Side::Minus, n)
        .into_iter()
        .filter(|l| matches!(l, Letter::T(..)))
        .collect();
    Monomial::all_words(&letters, degree)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientRecord {
    pub indices: Vec<usize>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelatorRecord {
    pub side: RelatorSide,
    pub degree: usize,
    pub coefficients: Vec<CoefficientRecord>,
    pub rendering: String,
}

impl Relator<Scalar> {
    pub fn to_record(&self) -> RelatorRecord {
        RelatorRecord {
            side: self.side,
            degree: self.degree,
            coefficients: self
                .entries()
                .map(|(indices, c)| CoefficientRecord {
                    indices,
                    value: c.to_string(),
                })
                .collect(),
            rendering: self.rendering().to_string(),
        }
    }
}

impl fmt::Display for Relator<Scalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rendering())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_poly;
    use crate::rmatrix::{catalog, CatalogName};
    use crate::scalars::parse_scalar;

    fn one_dim(text: &str) -> RMatrix<Scalar> {
        RMatrix::new(Matrix::from_rows(vec![vec![parse_scalar(text).unwrap()]]).unwrap()).unwrap()
    }

    fn lower_of(rels: &[Relator<Scalar>]) -> Vec<Vec<Scalar>> {
        rels.iter().map(|r| r.coefficients.clone()).collect()
    }

    #[test]
    fn minus_one_squares() {
        let r = one_dim("-1");
        let e = e_relators(&r, 2).unwrap();
        let f = f_relators(&r, 2).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(f.len(), 1);
        assert_eq!(e[0].rendering().to_string(), "E[0]*E[0]");
        assert_eq!(f[0].rendering().to_string(), "F[0]*F[0]");
        let mut lower = BTreeMap::new();
        lower.insert(2, lower_of(&e));
        assert!(new_relators(&r, 3, RelatorSide::E, &lower).unwrap().is_empty());
        lower.insert(3, lower_of(&e_relators(&r, 3).unwrap()));
        assert!(new_relators(&r, 4, RelatorSide::E, &lower).unwrap().is_empty());
    }

    #[test]
    fn generic_q_has_no_relators() {
        let r = one_dim("q");
        for degree in 2..=4 {
            assert!(e_relators(&r, degree).unwrap().is_empty());
            assert!(f_relators(&r, degree).unwrap().is_empty());
        }
    }

    #[test]
    fn quantum_plane_degree_two() {
        let r = catalog(&CatalogName::SlnQuantumPlane, 2).unwrap();
        let e = e_relators(&r, 2).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].rendering().to_string(), "q*E[0]*E[1] - E[1]*E[0]");
        let f = f_relators(&r, 2).unwrap();
        assert_eq!(f.len(), 1);
    }

    #[test]
    fn quantum_plane_nothing_new_at_three() {
        let r = catalog(&CatalogName::SlnQuantumPlane, 2).unwrap();
        for side in [RelatorSide::E, RelatorSide::F] {
            let k2 = kernel_relators(&braided(&r, 2), side);
            let k3 = kernel_relators(&braided(&r, 3), side);
            assert_eq!(k3.len(), 4);
            let mut lower = BTreeMap::new();
            lower.insert(2, lower_of(&k2));
            assert!(new_relators(&r, 3, side, &lower).unwrap().is_empty());
        }
    }

    #[test]
    fn missing_lower_degree_is_an_error() {
        let r = one_dim("-1");
        assert_eq!(
            new_relators(&r, 3, RelatorSide::E, &BTreeMap::new()),
            Err(SerreError::MissingDegree(2))
        );
        assert!(matches!(e_relators(&r, 1), Err(SerreError::Degree { .. })));
    }

    #[test]
    fn rendering_round_trip() {
        let r = catalog(&CatalogName::SlnQuantumPlane, 2).unwrap();
        for side in [RelatorSide::E, RelatorSide::F] {
            for rel in kernel_relators(&braided(&r, 3), side) {
                let text = rel.rendering().to_string();
                let back = Relator::from_poly(&parse_poly(&text).unwrap(), side, 2, 3).unwrap();
                assert_eq!(back, rel);
            }
        }
    }

    #[test]
    fn tu_gram_degree_one_is_r() {
        let r = catalog(&CatalogName::SlnStandard, 2).unwrap();
        let g = tu_null_gram(&r, 1);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        assert_eq!(g.get(i * 2 + j, k * 2 + l), r.entry(i, k, j, l));
                    }
                }
            }
        }
        let rr = one_dim("q + 2");
        let g2 = tu_null_gram(&rr, 2);
        assert_eq!(g2.rows(), 1);
        // u and t are grouplike for n = 1, so <u^a, t^b> = r^{ab}
        assert_eq!(g2.get(0, 0), &parse_scalar("(q + 2)^4").unwrap());
        assert!(right_nullspace(&g2).is_empty());
    }

    #[test]
    fn record_shape() {
        let r = one_dim("-1");
        let rec = e_relators(&r, 2).unwrap()[0].to_record();
        assert_eq!(rec.side, RelatorSide::E);
        assert_eq!(rec.coefficients, vec![CoefficientRecord { indices: vec![0, 0], value: "1".into() }]);
    }
}
