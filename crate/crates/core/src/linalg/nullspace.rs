//! Fraction-free (Bareiss) elimination and canonical kernel bases.
//!
//! Rows are first cleared of denominators, which does not change the kernel.
//! Elimination then runs in the underlying gcd domain with complete pivoting
//! on [`PivotWeight`](crate::field::PivotWeight); every division in the
//! update step is exact. Only back substitution returns to the field.
//!
//! Kernel vectors are reported in a canonical form: the basis is brought to
//! reduced row echelon form and each vector is then scaled to a primitive
//! ring vector whose first nonzero entry has positive leading coefficient.
//! The result depends only on the kernel, not on the pivot sequence.

use num::{One, Zero};

use super::Matrix;
use crate::field::{Field, FractionField, GcdDomain};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelSide {
    /// `vᵀ M = 0`
    Left,
    /// `M v = 0`
    Right,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KernelBasis<S> {
    side: KernelSide,
    ambient: usize,
    vectors: Vec<Vec<S>>,
}

impl<S> KernelBasis<S> {
    pub fn side(&self) -> KernelSide {
        self.side
    }

    /// Length of each vector.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<S>] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<Vec<S>> {
        self.vectors
    }
}

/// Upper echelon form over the ring: `rows[k]` has its pivot in column
/// `pivots[k]` and zeros in all earlier pivot columns.
struct Echelon<R> {
    rows: Vec<Vec<R>>,
    pivots: Vec<usize>,
}

fn clear_denominators<F: FractionField>(row: &[F]) -> Vec<F::Ring> {
    let parts: Vec<(F::Ring, F::Ring)> = row.iter().map(FractionField::split).collect();
    let common = parts
        .iter()
        .filter(|(n, _)| !n.is_zero())
        .fold(F::Ring::one(), |acc, (_, d)| acc.lcm(d));
    parts
        .into_iter()
        .map(|(n, d)| {
            if n.is_zero() {
                n
            } else {
                n * &common.div_exact(&d)
            }
        })
        .collect()
}

fn echelon<F: FractionField>(m: &Matrix<F>) -> Echelon<F::Ring> {
    let mut a: Vec<Vec<F::Ring>> = (0..m.rows()).map(|r| clear_denominators(m.row(r))).collect();
    let cols = m.cols();
    let mut is_pivot_col = vec![false; cols];
    let mut pivots = Vec::new();
    let mut prev = F::Ring::one();

    for k in 0..a.len().min(cols) {
        let mut best: Option<(crate::field::PivotWeight, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (c, v) in row.iter().enumerate() {
                if is_pivot_col[c] || v.is_zero() {
                    continue;
                }
                let w = v.weight();
                // strict comparison keeps the lowest (row, col) on ties
                if best.as_ref().is_none_or(|(bw, _, _)| w < *bw) {
                    best = Some((w, i, c));
                }
            }
        }
        let Some((_, pi, pc)) = best else { break };
        a.swap(k, pi);
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let p = pivot_row[pc].clone();
        for row in tail.iter_mut() {
            let factor = row[pc].clone();
            for c in 0..cols {
                if is_pivot_col[c] || c == pc {
                    continue;
                }
                let scaled = if factor.is_zero() || pivot_row[c].is_zero() {
                    if row[c].is_zero() {
                        continue;
                    }
                    row[c].clone() * &p
                } else {
                    row[c].clone() * &p - &(factor.clone() * &pivot_row[c])
                };
                row[c] = if prev.is_one() {
                    scaled
                } else {
                    scaled.div_exact(&prev)
                };
            }
            row[pc] = F::Ring::zero();
        }
        prev = p;
        is_pivot_col[pc] = true;
        pivots.push(pc);
    }
    a.truncate(pivots.len());
    Echelon { rows: a, pivots }
}

/// Rank over the field, from the same elimination used for kernels.
pub fn rank<F: FractionField>(m: &Matrix<F>) -> usize {
    echelon(m).pivots.len()
}

pub fn right_nullspace<F: FractionField>(m: &Matrix<F>) -> KernelBasis<F> {
    let cols = m.cols();
    let ech = echelon(m);
    let mut is_pivot_col = vec![false; cols];
    for &c in &ech.pivots {
        is_pivot_col[c] = true;
    }
    let field_rows: Vec<Vec<F>> = ech
        .rows
        .iter()
        .map(|r| r.iter().map(F::from_ring).collect())
        .collect();

    let mut raw = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot_col[c]) {
        let mut x = vec![F::zero(); cols];
        x[free] = F::one();
        for k in (0..ech.pivots.len()).rev() {
            let pc = ech.pivots[k];
            let row = &field_rows[k];
            let mut acc = F::zero();
            for c in 0..cols {
                if c == pc || row[c].is_zero() || x[c].is_zero() {
                    continue;
                }
                acc = acc + &(row[c].clone() * &x[c]);
            }
            if !acc.is_zero() {
                x[pc] = -(acc / &row[pc]);
            }
        }
        raw.push(x);
    }
    KernelBasis {
        side: KernelSide::Right,
        ambient: cols,
        vectors: canonical_basis(raw, cols),
    }
}

pub fn left_nullspace<F: FractionField>(m: &Matrix<F>) -> KernelBasis<F> {
    let mut k = right_nullspace(&m.transpose());
    k.side = KernelSide::Left;
    k
}

/// Reduced row echelon form of the span of `vectors` (zero rows dropped),
/// with the pivot column of each returned row.
pub fn reduced_echelon<S: Field>(vectors: Vec<Vec<S>>, dim: usize) -> (Vec<Vec<S>>, Vec<usize>) {
    let mut rows = vectors;
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..dim {
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let p = rows[next][col].clone();
        if !p.is_one() {
            for v in rows[next].iter_mut() {
                if !v.is_zero() {
                    *v = std::mem::replace(v, S::zero()) / &p;
                }
            }
        }
        let (before, rest) = rows.split_at_mut(next);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row");
        for other in before.iter_mut().chain(after.iter_mut()) {
            eliminate(other, pivot_row, col);
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    (rows, pivots)
}

/// `target -= target[col] · pivot_row`, where `pivot_row[col] = 1`.
fn eliminate<S: Field>(target: &mut [S], pivot_row: &[S], col: usize) {
    if target[col].is_zero() {
        return;
    }
    let f = target[col].clone();
    for (t, p) in target.iter_mut().zip(pivot_row) {
        if !p.is_zero() {
            *t = std::mem::replace(t, S::zero()) - &(f.clone() * p);
        }
    }
}

/// Clears denominators, divides by the content and fixes the sign.
pub fn normalize_vector<F: FractionField>(v: &[F]) -> Vec<F> {
    let mut ring = clear_denominators(v);
    F::Ring::make_primitive(&mut ring);
    ring.iter().map(F::from_ring).collect()
}

/// Canonical basis of `span(vectors)`: reduced echelon form, then each row
/// normalized.
pub fn canonical_basis<F: FractionField>(vectors: Vec<Vec<F>>, dim: usize) -> Vec<Vec<F>> {
    let (rows, _) = reduced_echelon(vectors, dim);
    rows.iter().map(|r| normalize_vector(r)).collect()
}

/// Canonical basis of a complement of `span(subspace)` inside
/// `span(subspace) + span(vectors)`: each vector is reduced against the
/// echelon form of the subspace and the nonzero residues are canonicalized.
pub fn complement_modulo<F: FractionField>(
    vectors: &[Vec<F>],
    subspace: Vec<Vec<F>>,
    dim: usize,
) -> Vec<Vec<F>> {
    let (sub, sub_pivots) = reduced_echelon(subspace, dim);
    let residues: Vec<Vec<F>> = vectors
        .iter()
        .map(|v| {
            let mut r = v.clone();
            for (row, &col) in sub.iter().zip(&sub_pivots) {
                eliminate(&mut r, row, col);
            }
            r
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    canonical_basis(residues, dim)
}

/// Dimension of the span of a list of vectors.
pub fn span_dim<S: Field>(vectors: Vec<Vec<S>>, dim: usize) -> usize {
    reduced_echelon(vectors, dim).0.len()
}
