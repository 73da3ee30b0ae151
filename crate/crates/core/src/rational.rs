//! Exact arbitrary-precision rational scalars.
//!
//! Every value is kept in canonical reduced form: positive denominator,
//! `gcd(|numerator|, denominator) = 1`, and zero stored as `0/1`. Sign
//! determination is the heart of everything built on top of this type, so
//! there is no floating point anywhere in the kernel.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational number in canonical reduced form.
///
/// Backed by `num_rational::BigRational`, which reduces on construction and
/// keeps the denominator positive; the wrapper re-checks those invariants in
/// debug builds after every operation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom` in reduced form.
    ///
    /// Panics if `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Self::checked(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::checked(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The sign function: -1, 0, or +1.
    pub fn signum(&self) -> i8 {
        match self.0.numer().sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        Self::checked(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Self::checked(self.0.recip())
    }

    /// True when the backing value is in canonical reduced form.
    pub fn is_canonical(&self) -> bool {
        let n = self.0.numer();
        let d = self.0.denom();
        d.is_positive() && n.gcd(d).is_one()
    }

    fn checked(r: BigRational) -> Self {
        let r = Self(r);
        debug_assert!(r.is_canonical(), "rational left canonical form: {:?}", r.0);
        r
    }

    /// Rounds to `digits` decimal places, half away from zero. The result is
    /// an approximation; the kernel itself never consumes it.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scale = BigInt::from(10u32).pow(digits);
        let num = self.0.numer() * &scale;
        let den = self.0.denom();
        // round(num/den) half away from zero
        let (q, r) = num.div_rem(den);
        let mut scaled = q;
        if &(r.abs() * 2u32) >= den {
            if num.is_negative() {
                scaled -= 1;
            } else {
                scaled += 1;
            }
        }
        let negative = scaled.is_negative();
        let digits_str = scaled.magnitude().to_string();
        let mut s = String::new();
        if negative {
            s.push('-');
        }
        if digits == 0 {
            s.push_str(&digits_str);
            return s;
        }
        let k = digits as usize;
        if digits_str.len() > k {
            let split = digits_str.len() - k;
            s.push_str(&digits_str[..split]);
            s.push('.');
            s.push_str(&digits_str[split..]);
        } else {
            s.push_str("0.");
            for _ in 0..(k - digits_str.len()) {
                s.push('0');
            }
            s.push_str(&digits_str);
        }
        s
    }
}

impl fmt::Display for Rational {
    /// Prints `p/q`, or just `p` when the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Self::from_int(n)
    }
}

/// Error for strings that are not exact rational literals.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {input:?}: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub reason: &'static str,
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Parses `p`, `p/q`, or an exact decimal such as `-1.25`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason| ParseRationalError {
            input: s.to_owned(),
            reason,
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(fail("empty string"));
        }
        if let Some((numer, denom)) = t.split_once('/') {
            let n = BigInt::from_str(numer.trim()).map_err(|_| fail("bad numerator"))?;
            let d = BigInt::from_str(denom.trim()).map_err(|_| fail("bad denominator"))?;
            if d.is_zero() {
                return Err(fail("zero denominator"));
            }
            return Ok(Rational::new(n, d));
        }
        if let Some((int_part, frac_part)) = t.split_once('.') {
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(fail("bad decimal digits"));
            }
            let negative = int_part.trim_start().starts_with('-');
            let whole = if int_part == "-" || int_part.is_empty() {
                BigInt::zero()
            } else {
                BigInt::from_str(int_part).map_err(|_| fail("bad integer part"))?
            };
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let frac = BigUint::from_str(frac_part).map_err(|_| fail("bad decimal digits"))?;
            let mut numer = whole * &scale;
            if negative {
                numer -= BigInt::from(frac);
            } else {
                numer += BigInt::from(frac);
            }
            return Ok(Rational::new(numer, scale));
        }
        let n = BigInt::from_str(t).map_err(|_| fail("not an integer, fraction, or decimal"))?;
        Ok(Rational::from_int(n))
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::one()
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational::checked($imp::$method(self.0, rhs.0))
            }
        }
        impl<'a> $imp<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational::checked($imp::$method(self.0, &rhs.0))
            }
        }
        impl<'a> $imp<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational::checked($imp::$method(&self.0, rhs.0))
            }
        }
        impl<'a, 'b> $imp<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational::checked($imp::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational::checked(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational::checked(-&self.0)
    }
}
