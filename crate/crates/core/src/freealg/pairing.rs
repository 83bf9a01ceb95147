//! Skew pairing `<x, a>` of a plus word `x` with a minus word `a`, and its
//! convolution inverse `<x, a>⁻`.
//!
//! Generator values (`<u^i_j, t^k_l> = R^{ik}_{jl}`, `<1, t^i_j> = <u^i_j, 1>
//! = δ^i_j`, `<F^i, E_j> = δ^i_j`, all else zero) are extended by
//!
//! ```text
//! <g x', a>  = Σ <g, a₁><x', a₂>          <g, b a''>  = Σ <g₁, a''><g₂, b>
//! <g x', a>⁻ = Σ <g, a₂>⁻<x', a₁>⁻        <g, b a''>⁻ = Σ <g₁, b>⁻<g₂, a''>⁻
//! ```
//!
//! where the inverse uses `R⁻¹` and `<F^i, E_j>⁻ = -δ^i_j`. Both vanish
//! unless the number of `E` letters in `a` equals the number of `F` letters
//! in `x`.

use std::collections::HashMap;
use std::sync::Mutex;

use thiserror::Error;

use super::{coproduct, counit, letter_coproduct, FreePoly, Letter, Monomial, Side, WordSide};
use crate::field::FractionField;
use crate::linalg::Matrix;
use crate::rmatrix::RMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairingKind {
    Direct,
    Inverse,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PairingError {
    #[error("{argument} argument '{word}' is not a {expected}-side element")]
    WrongSide {
        argument: &'static str,
        word: String,
        expected: Side,
    },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
}

pub struct SkewPairing<S> {
    n: usize,
    kind: PairingKind,
    /// `<u^i_j, t^k_l>` at row `(i,k)`, column `(j,l)`
    ut: Matrix<S>,
    fe: S,
    cache: Mutex<HashMap<(Monomial, Monomial), S>>,
}

impl<S: FractionField> SkewPairing<S> {
    pub fn new(r: &RMatrix<S>) -> Self {
        Self::build(r.dim(), PairingKind::Direct, r.matrix().clone(), S::one())
    }

    pub fn inverse(r: &RMatrix<S>) -> Self {
        Self::build(r.dim(), PairingKind::Inverse, r.inverse(), -S::one())
    }

    pub fn with_kind(r: &RMatrix<S>, kind: PairingKind) -> Self {
        match kind {
            PairingKind::Direct => Self::new(r),
            PairingKind::Inverse => Self::inverse(r),
        }
    }

    fn build(n: usize, kind: PairingKind, ut: Matrix<S>, fe: S) -> Self {
        SkewPairing {
            n,
            kind,
            ut,
            fe,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> PairingKind {
        self.kind
    }

    fn validate(&self, m: &Monomial, argument: &'static str, side: Side) -> Result<(), PairingError> {
        if !matches!(m.side(), WordSide::Unit) && m.side() != WordSide::Pure(side) {
            return Err(PairingError::WrongSide {
                argument,
                word: m.to_string(),
                expected: side,
            });
        }
        match m.max_index() {
            Some(index) if index >= self.n => Err(PairingError::IndexOutOfRange { index, dim: self.n }),
            _ => Ok(()),
        }
    }

    /// `<x, a>` for a plus word `x` and a minus word `a`.
    pub fn pair(&self, x: &Monomial, a: &Monomial) -> Result<S, PairingError> {
        self.validate(x, "first", Side::Plus)?;
        self.validate(a, "second", Side::Minus)?;
        Ok(self.eval(x, a))
    }

    /// Bilinear extension to polynomials.
    pub fn pair_poly(&self, x: &FreePoly<S>, a: &FreePoly<S>) -> Result<S, PairingError> {
        let mut acc = S::zero();
        for (xm, xc) in x.terms() {
            for (am, ac) in a.terms() {
                let v = self.pair(xm, am)?;
                if !v.is_zero() {
                    acc = acc + &(v * xc * ac);
                }
            }
        }
        Ok(acc)
    }

    fn eval(&self, x: &Monomial, a: &Monomial) -> S {
        if x.ef_degree() != a.ef_degree() {
            return S::zero();
        }
        if x.is_unit() {
            return counit(a);
        }
        if a.is_unit() {
            return counit(x);
        }
        if x.len() == 1 && a.len() == 1 {
            return self.generator(x.letters()[0], a.letters()[0]);
        }
        let key = (x.clone(), a.clone());
        if let Some(v) = self.cache.lock().expect("pairing cache poisoned").get(&key) {
            return v.clone();
        }
        let v = if x.len() >= 2 {
            self.peel_plus(x, a)
        } else {
            self.peel_minus(x.letters()[0], a)
        };
        self.cache
            .lock()
            .expect("pairing cache poisoned")
            .insert(key, v.clone());
        v
    }

    /// `x = g x'`: expand `a` by its coproduct.
    fn peel_plus(&self, x: &Monomial, a: &Monomial) -> S {
        let g = Monomial::letter(x.letters()[0]);
        let rest = Monomial::new(x.letters()[1..].to_vec());
        let mut acc = S::zero();
        for ((a1, a2), c) in coproduct::<S>(a, self.n).terms() {
            let (first, second) = match self.kind {
                PairingKind::Direct => (a1, a2),
                PairingKind::Inverse => (a2, a1),
            };
            let left = self.eval(&g, first);
            if left.is_zero() {
                continue;
            }
            let right = self.eval(&rest, second);
            if !right.is_zero() {
                acc = acc + &(left * &right * c);
            }
        }
        acc
    }

    /// Single generator `g` against `a = b a''`: expand `g`.
    fn peel_minus(&self, g: Letter, a: &Monomial) -> S {
        let b = Monomial::letter(a.letters()[0]);
        let rest = Monomial::new(a.letters()[1..].to_vec());
        let mut acc = S::zero();
        for (g1, g2) in letter_coproduct(g, self.n) {
            let g1 = Monomial::new(g1.into_iter().collect());
            let g2 = Monomial::new(g2.into_iter().collect());
            let (with_rest, with_b) = match self.kind {
                PairingKind::Direct => (&g1, &g2),
                PairingKind::Inverse => (&g2, &g1),
            };
            let left = self.eval(with_b, &b);
            if left.is_zero() {
                continue;
            }
            let right = self.eval(with_rest, &rest);
            if !right.is_zero() {
                acc = acc + &(left * &right);
            }
        }
        acc
    }

    fn generator(&self, g: Letter, a: Letter) -> S {
        let n = self.n;
        match (g, a) {
            (Letter::U(i, j), Letter::T(k, l)) => self.ut.get(i * n + k, j * n + l).clone(),
            (Letter::F(i), Letter::E(j)) if i == j => self.fe.clone(),
            _ => S::zero(),
        }
    }

    /// `<x, a>` by the other expansion order: peel the first letter of `a`
    /// with `<x, b a''> = <Δx, a'' ⊗ b>` until `a` is a single letter, then
    /// expand by `<g x', b> = <g ⊗ x', Δb>`. Direct pairing only; used to
    /// check that the two skew-pairing rules agree.
    pub fn pair_dual_first(&self, x: &Monomial, a: &Monomial) -> Result<S, PairingError> {
        self.validate(x, "first", Side::Plus)?;
        self.validate(a, "second", Side::Minus)?;
        Ok(self.eval_dual_first(x, a))
    }

    fn eval_dual_first(&self, x: &Monomial, a: &Monomial) -> S {
        if x.ef_degree() != a.ef_degree() {
            return S::zero();
        }
        if x.is_unit() {
            return counit(a);
        }
        if a.is_unit() {
            return counit(x);
        }
        if x.len() == 1 && a.len() == 1 {
            return self.generator(x.letters()[0], a.letters()[0]);
        }
        let mut acc = S::zero();
        if a.len() >= 2 {
            let b = Monomial::letter(a.letters()[0]);
            let rest = Monomial::new(a.letters()[1..].to_vec());
            for ((x1, x2), c) in coproduct::<S>(x, self.n).terms() {
                let left = self.eval_dual_first(x2, &b);
                if !left.is_zero() {
                    acc = acc + &(left * &self.eval_dual_first(x1, &rest) * c);
                }
            }
        } else {
            let g = Monomial::letter(x.letters()[0]);
            let rest = Monomial::new(x.letters()[1..].to_vec());
            for ((a1, a2), c) in coproduct::<S>(a, self.n).terms() {
                let left = self.eval_dual_first(&g, a1);
                if !left.is_zero() {
                    acc = acc + &(left * &self.eval_dual_first(&rest, a2) * c);
                }
            }
        }
        acc
    }
}

/// `Σ <x₁, a₁>⁻<x₂, a₂>` (`inverse_first`) or `Σ <x₁, a₁><x₂, a₂>⁻`; both
/// should equal `ε(x)ε(a)`.
pub fn convolution<S: FractionField>(
    direct: &SkewPairing<S>,
    inverse: &SkewPairing<S>,
    x: &Monomial,
    a: &Monomial,
    inverse_first: bool,
) -> Result<S, PairingError> {
    let n = direct.dim();
    let (first, second) = if inverse_first {
        (inverse, direct)
    } else {
        (direct, inverse)
    };
    let dx = coproduct::<S>(x, n);
    let da = coproduct::<S>(a, n);
    let mut acc = S::zero();
    for ((x1, x2), cx) in dx.terms() {
        for ((a1, a2), ca) in da.terms() {
            let left = first.pair(x1, a1)?;
            if left.is_zero() {
                continue;
            }
            let right = second.pair(x2, a2)?;
            if !right.is_zero() {
                acc = acc + &(left * &right * cx * ca);
            }
        }
    }
    Ok(acc)
}
