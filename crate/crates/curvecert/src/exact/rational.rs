use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn pow2_int(k: u32) -> BigInt {
    BigInt::one() << (k as usize)
}

use super::ExactError;

/// Arbitrary-precision rational in canonical form: reduced fraction with a
/// positive denominator. The canonical form is maintained by `BigRational`
/// on every operation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "rational with zero denominator");
        Rational(BigRational::new(numer, denom))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(numer: i64, denom: i64) -> Self {
        Self::new(BigInt::from(numer), BigInt::from(denom))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// 2^k for any integer exponent (negative gives a dyadic fraction).
    pub fn pow2(k: i64) -> Self {
        if k >= 0 {
            Rational(BigRational::from_integer(pow2_int(k as u32)))
        } else {
            Rational(BigRational::new(BigInt::one(), pow2_int((-k) as u32)))
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn square(&self) -> Self {
        Rational(&self.0 * &self.0)
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// True when the denominator is a power of two, i.e. the value is a
    /// dyadic rational `m/2^k`.
    pub fn is_dyadic(&self) -> bool {
        let d = self.0.denom().magnitude();
        // d > 0 always; power of two iff d & (d-1) == 0
        let dm1 = d - BigUint::one();
        (d & &dm1).is_zero()
    }

    /// Largest dyadic `m/2^p` with `m/2^p ≤ self`.
    pub fn floor_dyadic(&self, p: u32) -> Rational {
        let scaled = &self.0 * BigRational::from_integer(pow2_int(p));
        let m = scaled.floor().to_integer();
        Rational(BigRational::new(m, pow2_int(p)))
    }

    /// Smallest dyadic `m/2^p` with `self ≤ m/2^p`.
    pub fn ceil_dyadic(&self, p: u32) -> Rational {
        let scaled = &self.0 * BigRational::from_integer(pow2_int(p));
        let m = scaled.ceil().to_integer();
        Rational(BigRational::new(m, pow2_int(p)))
    }

    /// Exact square root if the value is the square of a rational.
    pub fn exact_sqrt(&self) -> Option<Rational> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Rational::zero());
        }
        let n = self.0.numer().magnitude();
        let d = self.0.denom().magnitude();
        let sn = n.sqrt();
        let sd = d.sqrt();
        if &(&sn * &sn) == n && &(&sd * &sd) == d {
            Some(Rational(BigRational::new(
                BigInt::from_biguint(Sign::Plus, sn),
                BigInt::from_biguint(Sign::Plus, sd),
            )))
        } else {
            None
        }
    }

    /// Render a dyadic value as `m` or `m/2^k` with odd `m` (canonical).
    /// Panics if the value is not dyadic.
    pub fn to_dyadic_string(&self) -> String {
        assert!(self.is_dyadic(), "value {self} is not dyadic");
        let k = self.0.denom().magnitude().trailing_zeros().unwrap_or(0);
        if k == 0 {
            format!("{}", self.0.numer())
        } else {
            format!("{}/2^{}", self.0.numer(), k)
        }
    }

    pub(crate) fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub(crate) fn from_big(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = ExactError;

    /// Accepts `n`, `n/d` and the dyadic form `m/2^k`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExactError::ParseRational(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Rational(BigRational::from_integer(n)))
            }
            Some((ns, ds)) => {
                let n = BigInt::from_str(ns.trim()).map_err(|_| bad())?;
                let ds = ds.trim();
                let d = if let Some(exp) = ds.strip_prefix("2^") {
                    let k: u32 = exp.trim().parse().map_err(|_| bad())?;
                    pow2_int(k)
                } else {
                    BigInt::from_str(ds).map_err(|_| bad())?
                };
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Rational(BigRational::new(n, d)))
            }
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}
