//! Free monomials over the generators `t^i_j`, `E_i` (minus side) and
//! `u^i_j`, `F^i` (plus side), with coproduct, counit and the two pairings.
//!
//! ```text
//! Δ(t^i_j) = Σ_k t^i_k ⊗ t^k_j        Δ(E_i) = Σ_k E_k ⊗ t^k_i + 1 ⊗ E_i
//! Δ(u^i_j) = Σ_k u^i_k ⊗ u^k_j        Δ(F^i) = F^i ⊗ 1 + Σ_k u^i_k ⊗ F^k
//! ε(t^i_j) = ε(u^i_j) = δ^i_j          ε(E_i) = ε(F^i) = 0
//! ```

mod pairing;
mod parse;
mod relators;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::One;

use crate::field::Field;
use crate::scalars::Scalar;

pub use pairing::{convolution, PairingError, PairingKind, SkewPairing};
pub use parse::{parse_monomial, parse_poly};
pub use relators::{relator_catalog, CatalogRelator, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `u`, `F`
    Plus,
    /// `t`, `E`
    Minus,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "plus",
            Side::Minus => "minus",
        })
    }
}

/// Generator letters. The derived order (`T < U < E < F`, then indices) is
/// the lexicographic order on words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    T(usize, usize),
    U(usize, usize),
    E(usize),
    F(usize),
}

impl Letter {
    pub fn side(&self) -> Side {
        match self {
            Letter::T(..) | Letter::E(_) => Side::Minus,
            Letter::U(..) | Letter::F(_) => Side::Plus,
        }
    }

    pub fn max_index(&self) -> usize {
        match *self {
            Letter::T(i, j) | Letter::U(i, j) => i.max(j),
            Letter::E(i) | Letter::F(i) => i,
        }
    }

    fn counit(&self) -> bool {
        match *self {
            Letter::T(i, j) | Letter::U(i, j) => i == j,
            Letter::E(_) | Letter::F(_) => false,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T(i, j) => write!(f, "t[{i},{j}]"),
            Letter::U(i, j) => write!(f, "u[{i},{j}]"),
            Letter::E(i) => write!(f, "E[{i}]"),
            Letter::F(i) => write!(f, "F[{i}]"),
        }
    }
}

/// Which generators a monomial is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordSide {
    Unit,
    Pure(Side),
    Mixed,
}

/// A word in the generators; the empty word is `1`. Ordered by length,
/// then lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<Letter>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Monomial(letters)
    }

    pub fn letter(l: Letter) -> Self {
        Monomial(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut w = Vec::with_capacity(self.len() + other.len());
        w.extend_from_slice(&self.0);
        w.extend_from_slice(&other.0);
        Monomial(w)
    }

    pub fn side(&self) -> WordSide {
        let mut side = WordSide::Unit;
        for l in &self.0 {
            side = match side {
                WordSide::Unit => WordSide::Pure(l.side()),
                WordSide::Pure(s) if s == l.side() => side,
                _ => return WordSide::Mixed,
            };
        }
        side
    }

    /// Number of `E` plus number of `F` letters.
    pub fn ef_degree(&self) -> usize {
        self.0
            .iter()
            .filter(|l| matches!(l, Letter::E(_) | Letter::F(_)))
            .count()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.iter().map(Letter::max_index).max()
    }

    /// All words of length `len` over `alphabet`, in canonical order when
    /// `alphabet` is sorted.
    pub fn all_words(alphabet: &[Letter], len: usize) -> Vec<Monomial> {
        let mut out = vec![Monomial::unit()];
        for _ in 0..len {
            out = out
                .iter()
                .flat_map(|w| alphabet.iter().map(move |l| w.concat(&Monomial::letter(*l))))
                .collect();
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Generator letters for dimension `n`, sorted.
pub fn alphabet(side: Side, n: usize) -> Vec<Letter> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            out.push(match side {
                Side::Minus => Letter::T(i, j),
                Side::Plus => Letter::U(i, j),
            });
        }
    }
    for i in 0..n {
        out.push(match side {
            Side::Minus => Letter::E(i),
            Side::Plus => Letter::F(i),
        });
    }
    out
}

/// Linear combination of monomials with nonzero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct FreePoly<S> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Field> Default for FreePoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Field> FreePoly<S> {
    pub fn zero() -> Self {
        FreePoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, S::one())
    }

    pub fn term(m: Monomial, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + &c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone() * s);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.concat(m2), c1.clone() * c2);
            }
        }
        out
    }

    /// Common side of all terms.
    pub fn side(&self) -> WordSide {
        let mut side = WordSide::Unit;
        for m in self.terms.keys() {
            side = match (side, m.side()) {
                (s, WordSide::Unit) => s,
                (WordSide::Unit, s) => s,
                (WordSide::Pure(a), WordSide::Pure(b)) if a == b => side,
                _ => return WordSide::Mixed,
            };
        }
        side
    }

    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().filter_map(Monomial::max_index).max()
    }
}

impl fmt::Display for FreePoly<Scalar> {
    /// Terms in canonical order; coefficients that are not a single signed
    /// monomial in `q` are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.leads_negative();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let coeff = if abs.is_simple_factor() {
                abs.to_string()
            } else {
                format!("({abs})")
            };
            if m.is_unit() {
                f.write_str(&coeff)?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{coeff}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Linear combination of `x ⊗ y` with nonzero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorPoly<S> {
    terms: BTreeMap<(Monomial, Monomial), S>,
}

impl<S: Field> TensorPoly<S> {
    pub fn zero() -> Self {
        TensorPoly {
            terms: BTreeMap::new(),
        }
    }

    /// `1 ⊗ 1`
    pub fn unit() -> Self {
        let mut t = Self::zero();
        t.add_term(Monomial::unit(), Monomial::unit(), S::one());
        t
    }

    pub fn add_term(&mut self, left: Monomial, right: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.remove(&key) {
            Some(old) => {
                let sum = old + &c;
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &S)> {
        self.terms.iter()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                out.add_term(a.concat(c), b.concat(d), c1.clone() * c2);
            }
        }
        out
    }
}

impl<S: fmt::Display> fmt::Display for TensorPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{a}⊗{b}")?;
        }
        Ok(())
    }
}

/// `Δ` of one letter as `(left, right)` pairs, each with coefficient 1;
/// `None` stands for the unit.
pub(crate) fn letter_coproduct(l: Letter, n: usize) -> Vec<(Option<Letter>, Option<Letter>)> {
    match l {
        Letter::T(i, j) => (0..n)
            .map(|k| (Some(Letter::T(i, k)), Some(Letter::T(k, j))))
            .collect(),
        Letter::U(i, j) => (0..n)
            .map(|k| (Some(Letter::U(i, k)), Some(Letter::U(k, j))))
            .collect(),
        Letter::E(i) => (0..n)
            .map(|k| (Some(Letter::E(k)), Some(Letter::T(k, i))))
            .chain(std::iter::once((None, Some(Letter::E(i)))))
            .collect(),
        Letter::F(i) => std::iter::once((Some(Letter::F(i)), None))
            .chain((0..n).map(|k| (Some(Letter::U(i, k)), Some(Letter::F(k)))))
            .collect(),
    }
}

/// `Δ(m)`, the multiplicative extension of the generator rules.
pub fn coproduct<S: Field>(m: &Monomial, n: usize) -> TensorPoly<S> {
    let mut acc = TensorPoly::<S>::unit();
    for l in m.letters() {
        let mut next = TensorPoly::zero();
        for ((a, b), c) in acc.terms() {
            for (x, y) in letter_coproduct(*l, n) {
                let mut a2 = a.clone();
                let mut b2 = b.clone();
                a2.0.extend(x);
                b2.0.extend(y);
                next.add_term(a2, b2, c.clone());
            }
        }
        acc = next;
    }
    acc
}

/// `ε(m)`: 1 if every letter is a diagonal `t` or `u`, else 0.
pub fn counit<S: Field>(m: &Monomial) -> S {
    if m.letters().iter().all(Letter::counit) {
        S::one()
    } else {
        S::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{One, Zero};

    fn mono(text: &str) -> Monomial {
        parse_monomial(text).unwrap()
    }

    #[test]
    fn coproduct_of_unit() {
        let d: TensorPoly<Scalar> = coproduct(&Monomial::unit(), 2);
        assert_eq!(d, TensorPoly::unit());
    }

    #[test]
    fn coproduct_of_e0() {
        let d: TensorPoly<Scalar> = coproduct(&mono("E[0]"), 2);
        let mut expected = TensorPoly::zero();
        expected.add_term(mono("E[0]"), mono("t[0,0]"), Scalar::one());
        expected.add_term(mono("E[1]"), mono("t[1,0]"), Scalar::one());
        expected.add_term(Monomial::unit(), mono("E[0]"), Scalar::one());
        assert_eq!(d, expected);
    }

    #[test]
    fn coproduct_of_t01() {
        let d: TensorPoly<Scalar> = coproduct(&mono("t[0,1]"), 2);
        let mut expected = TensorPoly::zero();
        expected.add_term(mono("t[0,0]"), mono("t[0,1]"), Scalar::one());
        expected.add_term(mono("t[0,1]"), mono("t[1,1]"), Scalar::one());
        assert_eq!(d, expected);
    }

    #[test]
    fn coproduct_is_multiplicative() {
        let x = mono("E[1]*t[0,1]");
        let y = mono("F[0]*u[1,0]");
        for (a, b) in [(&x, &x), (&y, &y)] {
            let whole: TensorPoly<Scalar> = coproduct(&a.concat(b), 2);
            let parts = coproduct::<Scalar>(a, 2).mul(&coproduct(b, 2));
            assert_eq!(whole, parts);
        }
    }

    #[test]
    fn counit_values() {
        assert!(counit::<Scalar>(&Monomial::unit()).is_one());
        assert!(counit::<Scalar>(&mono("t[0,0]*t[1,1]")).is_one());
        assert!(counit::<Scalar>(&mono("t[0,1]")).is_zero());
        assert!(counit::<Scalar>(&mono("t[0,0]*E[1]")).is_zero());
    }

    #[test]
    fn counit_axioms_up_to_length_three() {
        let n = 2;
        let mut letters = alphabet(Side::Minus, n);
        letters.extend(alphabet(Side::Plus, n));
        letters.sort();
        for len in 0..=3 {
            for w in Monomial::all_words(&letters, len) {
                let d: TensorPoly<Scalar> = coproduct(&w, n);
                let mut left = FreePoly::<Scalar>::zero();
                let mut right = FreePoly::<Scalar>::zero();
                for ((a, b), c) in d.terms() {
                    left.add_term(b.clone(), counit::<Scalar>(a) * c);
                    right.add_term(a.clone(), counit::<Scalar>(b) * c);
                }
                assert_eq!(left, FreePoly::monomial(w.clone()), "{w}");
                assert_eq!(right, FreePoly::monomial(w.clone()), "{w}");
            }
        }
    }

    #[test]
    fn word_order_is_length_then_lex() {
        let mut words = [mono("E[0]*E[1]"), mono("F[1]"), mono("t[1,1]"), mono("1")];
        words.sort();
        let shown: Vec<String> = words.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["1", "t[1,1]", "F[1]", "E[0]*E[1]"]);
    }

    #[test]
    fn sides() {
        assert_eq!(mono("1").side(), WordSide::Unit);
        assert_eq!(mono("u[0,1]*F[1]").side(), WordSide::Pure(Side::Plus));
        assert_eq!(mono("t[0,1]*E[1]").side(), WordSide::Pure(Side::Minus));
        assert_eq!(mono("E[0]*F[0]").side(), WordSide::Mixed);
    }

    #[test]
    fn polynomial_rendering() {
        let q = Scalar::q();
        let mut p = FreePoly::zero();
        p.add_term(mono("E[0]*E[1]"), q.clone());
        p.add_term(mono("E[1]*E[0]"), -Scalar::one());
        assert_eq!(p.to_string(), "q*E[0]*E[1] - E[1]*E[0]");
        let mut r = FreePoly::zero();
        r.add_term(mono("t[0,0]"), -(&q - &Scalar::q_power(-1)));
        r.add_term(Monomial::unit(), Scalar::from_int(3));
        assert_eq!(r.to_string(), "3 - ((q^2 - 1)/q)*t[0,0]");
        assert_eq!(FreePoly::<Scalar>::zero().to_string(), "0");
    }
}
