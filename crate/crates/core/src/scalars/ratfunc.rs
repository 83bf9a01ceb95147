use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use super::poly::Poly;
use super::ScalarError;

/// An element of Q(q): a reduced quotient of polynomials with a monic
/// denominator. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    /// Builds `num / den` in canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        let (den, lc) = den.monic();
        let num = if lc.is_one() {
            num
        } else {
            num.scale(&lc.recip())
        };
        Scalar { num, den }
    }

    pub fn from_poly(num: Poly) -> Self {
        Scalar { num, den: Poly::one() }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_poly(Poly::from_int(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(v))
    }

    pub fn from_rational(v: BigRational) -> Self {
        Self::from_poly(Poly::constant(v))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(Poly::q())
    }

    /// `c * q^k` for any integer `k`.
    pub fn q_power(k: i32) -> Self {
        let mono = Poly::monomial(BigRational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(mono)
        } else {
            Scalar { num: Poly::one(), den: mono }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Returns the rational value if this scalar does not depend on `q`.
    pub fn as_constant(&self) -> Option<BigRational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, exp: i32) -> Result<Self, ScalarError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        Ok(Scalar {
            num: base.num.pow(exp.unsigned_abs()),
            den: base.den.pow(exp.unsigned_abs()),
        })
    }

    /// Specializes `q` to a rational value.
    pub fn evaluate_at(&self, q0: &BigRational) -> Result<BigRational, ScalarError> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(ScalarError::Pole(q0.clone()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// True when the rendering needs no parentheses to act as a factor.
    pub(crate) fn is_simple_factor(&self) -> bool {
        self.den.is_one() && self.num.term_count() <= 1
    }

    /// Whether the numerator's leading coefficient is negative.
    pub(crate) fn leads_negative(&self) -> bool {
        self.num.leading().is_some_and(|c| c.is_negative())
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return Scalar::from_poly(&self.num + &rhs.num);
            }
            return Scalar::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Scalar::reduce(num, &self.den * &rhs.den)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return Scalar::from_poly(&self.num - &rhs.num);
            }
            return Scalar::reduce(&self.num - &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        Scalar::reduce(num, &self.den * &rhs.den)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel so the product is already reduced
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = rhs.den.div_exact(&g1);
        let n2 = rhs.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        Scalar {
            num: &n1 * &n2,
            den: &d1 * &d2,
        }
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;

    /// Panics on division by zero; use [`Scalar::checked_div`] for input
    /// that is not known to be nonzero.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by the zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        Scalar {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<Poly> for Scalar {
    fn from(p: Poly) -> Self {
        Scalar::from_poly(p)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let multi = |p: &Poly| p.term_count() > 1;
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if multi(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if multi(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn spec_arithmetic_examples() {
        let q = Scalar::q();
        let one = Scalar::one();
        assert_eq!((&q + &one).to_string(), "q + 1");
        let q2m1 = (&q + &one) * (&q - &one);
        assert_eq!(q2m1.to_string(), "q^2 - 1");
        assert_eq!((&q2m1 / &(&q + &one)).to_string(), "q - 1");
    }

    #[test]
    fn canonical_denominator_is_monic() {
        // (2q) / (4q + 2) = (1/2 q) / (q + 1/2)
        let s = Scalar::new(
            Poly::monomial(rat(2, 1), 1),
            Poly::from_coeffs(vec![rat(2, 1), rat(4, 1)]),
        )
        .unwrap();
        assert!(s.denom().is_monic());
        assert_eq!(s.to_string(), "1/2*q/(q + 1/2)");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            Scalar::new(Poly::one(), Poly::zero()),
            Err(ScalarError::DivisionByZero)
        );
        assert!(Scalar::zero().inv().is_err());
    }

    #[test]
    fn evaluation_examples() {
        let q = Scalar::q();
        let one = Scalar::one();
        assert_eq!((&q + &one).evaluate_at(&rat(2, 1)).unwrap(), rat(3, 1));
        let f = (&q * &q - &one) / (&q - &one);
        assert_eq!(f.evaluate_at(&rat(1, 1)).unwrap(), rat(2, 1));
        let pole = (&q - &one).inv().unwrap();
        assert!(matches!(
            pole.evaluate_at(&rat(1, 1)),
            Err(ScalarError::Pole(_))
        ));
    }

    #[test]
    fn laurent_monomials() {
        let qi = Scalar::q_power(-1);
        assert_eq!(&qi * &Scalar::q(), Scalar::one());
        assert_eq!((Scalar::q() - qi).to_string(), "(q^2 - 1)/q");
    }
}
