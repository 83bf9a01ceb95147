//! Braided integers and factorials on `V^{⊗N}`, and the Gram matrix of the
//! `F`-word / `E`-word pairing computed by direct index contraction.
//!
//! With `B_m` the braid matrix acting on legs `m, m+1`:
//!
//! ```text
//! [N]_B  = Σ_{k=1}^{N} B_k B_{k+1} ⋯ B_{N-1}        (k = N term is 1)
//! [N!]_B = [N]_B · ([(N-1)!]_B ⊗ 1),   [1!]_B = 1
//! ```
//!
//! [`GramOracle`] builds the same matrices one level at a time from the
//! contraction that moves slot `k` of the row multi-index to the last
//! position through a chain of braid entries. It shares no code with the
//! product form and serves as its independent check.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::field::Field;
use crate::linalg::{decode_index, encode_index, Matrix, TensorShape};
use crate::rmatrix::BraidMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    ProductForm,
    OracleRecursion,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BraidedFactorial<S> {
    pub dim: usize,
    pub degree: usize,
    pub matrix: Matrix<S>,
    pub provenance: Provenance,
}

fn tagged<S: Field>(m: Matrix<S>, n: usize, degree: usize) -> Matrix<S> {
    m.with_tensor(TensorShape::new(n, degree))
        .expect("braided operator has tensor shape")
}

/// `[N]_B`. Panics if `degree` is zero.
pub fn braided_integer<S: Field>(b: &BraidMatrix<S>, degree: usize) -> Matrix<S> {
    assert!(degree >= 1, "braided integers start at degree 1");
    let n = b.dim();
    let size = n.pow(degree as u32);
    let mut acc = Matrix::identity(size);
    let mut chain = Matrix::identity(size);
    for k in (1..degree).rev() {
        let bk = b.matrix().embed_at(k, degree, n).expect("valid position");
        chain = bk.matmul(&chain).expect("square");
        acc = acc.add(&chain).expect("square");
    }
    tagged(acc, n, degree)
}

/// `[N!]_B` by the product recursion. Panics if `degree` is zero.
pub fn braided_factorial<S: Field>(b: &BraidMatrix<S>, degree: usize) -> BraidedFactorial<S> {
    assert!(degree >= 1, "braided factorials start at degree 1");
    let n = b.dim();
    let id = Matrix::<S>::identity(n);
    let mut fact = Matrix::identity(n);
    for level in 2..=degree {
        let extended = fact.kron(&id);
        fact = braided_integer(b, level)
            .matmul(&extended)
            .expect("square");
    }
    BraidedFactorial {
        dim: n,
        degree,
        matrix: tagged(fact, n, degree),
        provenance: Provenance::ProductForm,
    }
}

/// Level-by-level Gram matrices `G_N[(q_1…q_N), (a_1…a_N)]`, memoized.
///
/// ```text
/// G_N[(q),(a)] = Σ_{k=1}^{N} Σ B^{q_k q_{k+1}}_{p_k b_{k+1}} B^{b_{k+1} q_{k+2}}_{p_{k+1} b_{k+2}}
///                            ⋯ B^{b_{N-1} q_N}_{p_{N-1} a_N}
///                            · G_{N-1}[(q_1…q_{k-1} p_k…p_{N-1}), (a_1…a_{N-1})]
/// ```
///
/// where the `k = N` chain is `δ^{q_N}_{a_N}` and `G_1 = 1`.
pub struct GramOracle<S> {
    n: usize,
    /// nonzero entries of each braid row `(x, y)`: `(p, b, value)`
    rows: Vec<Vec<(usize, usize, S)>>,
    levels: Mutex<Vec<Arc<Matrix<S>>>>,
}

impl<S: Field> GramOracle<S> {
    pub fn new(b: &BraidMatrix<S>) -> Self {
        let n = b.dim();
        let m = b.matrix();
        let rows = (0..n * n)
            .map(|r| {
                (0..n * n)
                    .filter(|&c| !m.get(r, c).is_zero())
                    .map(|c| (c / n, c % n, m.get(r, c).clone()))
                    .collect()
            })
            .collect();
        GramOracle {
            n,
            rows,
            levels: Mutex::new(vec![Arc::new(tagged(Matrix::identity(n), n, 1))]),
        }
    }

    /// `G_N`; each level is computed at most once.
    pub fn gram(&self, degree: usize) -> Arc<Matrix<S>> {
        assert!(degree >= 1, "Gram matrices start at degree 1");
        let mut levels = self.levels.lock().expect("oracle cache poisoned");
        while levels.len() < degree {
            let next = self.next_level(levels.last().expect("level 1"), levels.len() + 1);
            levels.push(Arc::new(next));
        }
        Arc::clone(&levels[degree - 1])
    }

    fn next_level(&self, prev: &Matrix<S>, degree: usize) -> Matrix<S> {
        let n = self.n;
        let size = n.pow(degree as u32);
        let prev_size = size / n;
        let mut out = Matrix::zeros(size, size);
        for row in 0..size {
            let q = decode_index(row, n, degree);
            let mut acc: HashMap<usize, S> = HashMap::new();
            for k in 1..=degree {
                for (moved, last, coeff) in self.chains(&q, k) {
                    // row multi-index of G_{N-1}: q_1…q_{k-1} followed by p_k…p_{N-1}
                    let mut lower = q[..k - 1].to_vec();
                    lower.extend_from_slice(&moved);
                    let lower_row = encode_index(&lower, n);
                    for a_head in 0..prev_size {
                        let g = prev.get(lower_row, a_head);
                        if g.is_zero() {
                            continue;
                        }
                        let col = a_head * n + last;
                        let term = coeff.clone() * g;
                        let slot = acc.entry(col).or_insert_with(S::zero);
                        *slot = std::mem::replace(slot, S::zero()) + &term;
                    }
                }
            }
            for (col, v) in acc {
                out.set(row, col, v);
            }
        }
        tagged(out, n, degree)
    }

    /// All chains moving slot `k` (1-based) of `q` to the end: returns
    /// `(p_k…p_{N-1}, a_N, product of braid entries)`.
    fn chains(&self, q: &[usize], k: usize) -> Vec<(Vec<usize>, usize, S)> {
        let degree = q.len();
        if k == degree {
            return vec![(Vec::new(), q[degree - 1], S::one())];
        }
        let mut out = Vec::new();
        self.extend_chain(q, k, q[k - 1], Vec::new(), S::one(), &mut out);
        out
    }

    /// At position `m` (1-based), the carried index `carry = b_m` meets
    /// `q_{m+1}` in braid row `(b_m, q_{m+1})`; each nonzero column
    /// `(p_m, b_{m+1})` extends the chain.
    fn extend_chain(
        &self,
        q: &[usize],
        m: usize,
        carry: usize,
        moved: Vec<usize>,
        coeff: S,
        out: &mut Vec<(Vec<usize>, usize, S)>,
    ) {
        let degree = q.len();
        let row = carry * self.n + q[m];
        for (p, b, v) in &self.rows[row] {
            let mut next_moved = moved.clone();
            next_moved.push(*p);
            let next_coeff = coeff.clone() * v;
            if m + 1 == degree {
                out.push((next_moved, *b, next_coeff));
            } else {
                self.extend_chain(q, m + 1, *b, next_moved, next_coeff, out);
            }
        }
    }
}

/// `G_N` from a fresh oracle.
pub fn pairing_gram_oracle<S: Field>(b: &BraidMatrix<S>, degree: usize) -> BraidedFactorial<S> {
    let oracle = GramOracle::new(b);
    BraidedFactorial {
        dim: b.dim(),
        degree,
        matrix: (*oracle.gram(degree)).clone(),
        provenance: Provenance::OracleRecursion,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatrix::{catalog, CatalogName, RMatrix};
    use crate::scalars::{parse_scalar, Scalar};
    use num::Zero;

    fn one_dim(b: &str) -> BraidMatrix<Scalar> {
        let m = Matrix::from_rows(vec![vec![parse_scalar(b).unwrap()]]).unwrap();
        BraidMatrix::new(m).unwrap()
    }

    fn sl2() -> BraidMatrix<Scalar> {
        catalog(&CatalogName::SlnStandard, 2).unwrap().braid().unwrap()
    }

    #[test]
    fn degree_one_is_identity() {
        let b = sl2();
        assert!(braided_integer(&b, 1).is_identity());
        assert!(braided_factorial(&b, 1).matrix.is_identity());
        assert!(pairing_gram_oracle(&b, 1).matrix.is_identity());
    }

    #[test]
    fn degree_two_is_one_plus_b() {
        let b = sl2();
        let expected = Matrix::identity(4).add(b.matrix()).unwrap();
        assert_eq!(braided_integer(&b, 2), expected);
        assert_eq!(braided_factorial(&b, 2).matrix, expected);
        assert_eq!(pairing_gram_oracle(&b, 2).matrix, expected);
    }

    #[test]
    fn one_dimensional_q_integers() {
        let b = one_dim("q");
        assert_eq!(
            braided_integer(&b, 3).get(0, 0),
            &parse_scalar("1 + q + q^2").unwrap()
        );
        assert_eq!(
            braided_factorial(&b, 3).matrix.get(0, 0),
            &parse_scalar("(1 + q)*(1 + q + q^2)").unwrap()
        );
    }

    #[test]
    fn minus_one_kills_second_factorial() {
        let b = one_dim("-1");
        assert!(braided_factorial(&b, 2).matrix.get(0, 0).is_zero());
    }

    #[test]
    fn oracle_matches_product_form_sl2() {
        let b = sl2();
        for degree in 1..=4 {
            assert_eq!(
                pairing_gram_oracle(&b, degree).matrix,
                braided_factorial(&b, degree).matrix,
                "degree {degree}"
            );
        }
    }

    #[test]
    fn mirrored_recursion_disagrees() {
        let b = sl2();
        let mirrored = braided_factorial(&b, 2)
            .matrix
            .kron(&Matrix::identity(2))
            .matmul(&braided_integer(&b, 3))
            .unwrap();
        assert_ne!(mirrored, pairing_gram_oracle(&b, 3).matrix);
    }

    #[test]
    fn oracle_levels_are_cached() {
        let oracle = GramOracle::new(&sl2());
        let first = oracle.gram(3);
        let again = oracle.gram(3);
        assert!(Arc::ptr_eq(&first, &again));
        assert_eq!(oracle.gram(2).rows(), 4);
    }

    #[test]
    fn identity_r_gives_symmetrizer() {
        // B = P: [2!] = 1 + P, [3!] = sum over all six permutations
        let b = RMatrix::new(Matrix::<Scalar>::identity(4))
            .unwrap()
            .braid()
            .unwrap();
        let f3 = braided_factorial(&b, 3).matrix;
        assert_eq!(f3.get(0, 0), &Scalar::from_int(6));
        let row: Vec<Scalar> = f3.row(1).to_vec();
        let total = row.iter().fold(Scalar::zero(), |acc, x| acc + x);
        assert_eq!(total, Scalar::from_int(6));
        assert!(row.iter().all(|x| x.is_zero() || x == &Scalar::from_int(2)));
    }
}
