//! Scalar traits the linear algebra and algebra modules are generic over.
//!
//! [`Field`] is everything matrix products, braided factorials and the pairing
//! evaluator need. Elimination additionally needs [`FractionField`], which
//! exposes a gcd domain the field is the fraction field of, so that it can run
//! fraction-free and only divide back at the end.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::scalars::{Poly, Scalar};

/// Pivot preference key: lower is better. Numerator degree, denominator
/// degree, then total coefficient bit size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PivotWeight(pub usize, pub usize, pub u64);

pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self;
}

/// An integral domain with exact division and gcd.
pub trait GcdDomain:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
{
    /// Quotient of a division known to be exact.
    fn div_exact(&self, divisor: &Self) -> Self;

    /// A normalized gcd (nonnegative integer, monic polynomial).
    fn gcd(&self, other: &Self) -> Self;

    fn weight(&self) -> PivotWeight;

    /// Scales a vector, in place, to its canonical representative up to
    /// units of the fraction field: entries share no common factor and the
    /// first nonzero entry has a positive leading coefficient.
    fn make_primitive(v: &mut [Self]);

    fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        self.div_exact(&g) * other
    }
}

pub trait FractionField: Field {
    type Ring: GcdDomain;

    /// Numerator and denominator, denominator nonzero.
    fn split(&self) -> (Self::Ring, Self::Ring);

    fn from_ring(r: &Self::Ring) -> Self;

    fn pivot_weight(&self) -> PivotWeight {
        let (n, d) = self.split();
        let PivotWeight(nd, _, nb) = n.weight();
        let PivotWeight(dd, _, db) = d.weight();
        PivotWeight(nd, dd, nb + db)
    }
}

impl Field for Scalar {
    fn from_i64(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl GcdDomain for Poly {
    fn div_exact(&self, divisor: &Self) -> Self {
        Poly::div_exact(self, divisor)
    }

    fn gcd(&self, other: &Self) -> Self {
        Poly::gcd(self, other)
    }

    fn weight(&self) -> PivotWeight {
        PivotWeight(self.degree().unwrap_or(0), 0, self.bit_size())
    }

    fn make_primitive(v: &mut [Self]) {
        let g = v.iter().fold(Poly::zero(), |acc, p| acc.gcd(p));
        if g.is_zero() {
            return;
        }
        if !g.is_one() {
            for p in v.iter_mut() {
                *p = p.div_exact(&g);
            }
        }
        // then fix the remaining rational scale: coprime integer coefficients
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in v.iter().flat_map(|p| p.coeffs()).filter(|c| !c.is_zero()) {
            num_gcd = Integer::gcd(&num_gcd, c.numer());
            den_lcm = Integer::lcm(&den_lcm, c.denom());
        }
        let lead_negative = v
            .iter()
            .find_map(|p| p.leading())
            .is_some_and(Signed::is_negative);
        let mut factor = BigRational::new(den_lcm, num_gcd);
        if lead_negative {
            factor = -factor;
        }
        if !factor.is_one() {
            for p in v.iter_mut() {
                *p = p.scale(&factor);
            }
        }
    }
}

impl FractionField for Scalar {
    type Ring = Poly;

    fn split(&self) -> (Poly, Poly) {
        (self.numer().clone(), self.denom().clone())
    }

    fn from_ring(r: &Poly) -> Self {
        Scalar::from_poly(r.clone())
    }
}

impl Field for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
}

impl GcdDomain for BigInt {
    fn div_exact(&self, divisor: &Self) -> Self {
        debug_assert!((self % divisor).is_zero(), "inexact integer division");
        self / divisor
    }

    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }

    fn weight(&self) -> PivotWeight {
        PivotWeight(0, 0, self.bits())
    }

    fn make_primitive(v: &mut [Self]) {
        let g = v.iter().fold(BigInt::zero(), |acc, x| Integer::gcd(&acc, x));
        if g.is_zero() {
            return;
        }
        let negative = v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative);
        let g = if negative { -g } else { g };
        if !g.is_one() {
            for x in v.iter_mut() {
                *x = &*x / &g;
            }
        }
    }
}

impl FractionField for BigRational {
    type Ring = BigInt;

    fn split(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }

    fn from_ring(r: &BigInt) -> Self {
        BigRational::from_integer(r.clone())
    }
}
