//! Coefficient fields: exact rationals by default, prime fields optionally.
//! No floating point anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_int(n: i64) -> Self;

    /// Coefficient action of the involution; the identity for the fields
    /// provided here.
    fn conjugate(&self) -> Self {
        self.clone()
    }

    /// Accepts an integer or a fraction "a/b".
    fn parse(text: &str) -> Result<Self>;
}

fn split_fraction(text: &str) -> (&str, &str) {
    match text.trim().split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text.trim(), "1"),
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn parse(text: &str) -> Result<Self> {
        let (n, d) = split_fraction(text);
        let bad = || Error::Parse(format!("bad rational {text:?}"));
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        Ok(BigRational::new(n, d))
    }
}

/// The field with P elements, P prime. The value is kept reduced mod P.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Gf<const P: u64>(u64);

impl<const P: u64> Gf<P> {
    pub fn new(n: i128) -> Self {
        let p = P as i128;
        Gf((((n % p) + p) % p) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Gf::<P>(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Fermat inversion; relies on P being prime.
    pub fn inverse(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
}

impl<const P: u64> fmt::Display for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Gf<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Gf(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Gf<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<const P: u64> Mul for Gf<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Gf(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Gf<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Gf((P - self.0) % P)
    }
}

impl<const P: u64> Scalar for Gf<P> {
    fn zero() -> Self {
        Gf(0)
    }

    fn one() -> Self {
        Gf(1 % P)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn from_int(n: i64) -> Self {
        Gf::new(n as i128)
    }

    fn parse(text: &str) -> Result<Self> {
        let (n, d) = split_fraction(text);
        let bad = || Error::Parse(format!("bad scalar {text:?}"));
        let n: i128 = n.parse().map_err(|_| bad())?;
        let d: i128 = d.parse().map_err(|_| bad())?;
        let d = Gf::<P>::new(d);
        let inv = d
            .inverse()
            .ok_or_else(|| Error::Parse(format!("zero denominator in {text:?} mod {P}")))?;
        Ok(Gf::<P>::new(n) * inv)
    }
}

pub type Gf7 = Gf<7>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing_and_arithmetic() {
        let half = <BigRational as Scalar>::parse("1/2").unwrap();
        let third = <BigRational as Scalar>::parse("2/6").unwrap();
        assert_eq!(
            half.clone() + third,
            <BigRational as Scalar>::parse("5/6").unwrap()
        );
        assert_eq!(<BigRational as Scalar>::parse("-3").unwrap(), Scalar::from_int(-3));
        assert!(<BigRational as Scalar>::parse("1/0").is_err());
        assert!(<BigRational as Scalar>::parse("x").is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let a = Gf7::new(5);
        let b = Gf7::new(4);
        assert_eq!(a + b, Gf7::new(2));
        assert_eq!(a * b, Gf7::new(6));
        assert_eq!(-a, Gf7::new(2));
        assert_eq!(a.inverse().unwrap() * a, Scalar::one());
        assert!(Gf7::new(0).inverse().is_none());
        assert_eq!(<Gf7 as Scalar>::parse("1/2").unwrap(), Gf7::new(4));
        assert_eq!(Gf7::new(-9), Gf7::new(5));
    }

    #[test]
    fn characteristic_two_edge_cases() {
        type F2 = Gf<2>;
        assert_eq!(F2::new(1) + F2::new(1), Scalar::zero());
        assert_eq!(-F2::new(1), F2::new(1));
        assert_eq!(F2::new(1).inverse(), Some(F2::new(1)));
    }
}
