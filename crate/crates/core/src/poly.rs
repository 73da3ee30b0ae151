//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored in ascending order of degree: `coeffs[i]` is the
//! coefficient of `x^i`. The zero polynomial is the empty list, and its
//! degree is `None` rather than a sentinel integer, so it can never leak
//! into degree arithmetic. The representation is deliberately dense:
//! remainder sequences fill in densely anyway, and dense storage keeps
//! division simple and exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, stripping trailing
    /// zeros so the invariant "last stored coefficient is nonzero" holds.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * x^n`.
    pub fn monomial(c: Rational, n: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact evaluation at `c` by Horner's rule.
    pub fn eval(&self, c: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = acc * c + coeff;
        }
        acc
    }

    /// Formal derivative. Constants (and zero) map to the zero polynomial.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| Rational::from_int(i as i64) * c)
            .collect();
        Polynomial::new(coeffs)
    }

    /// Scales so the leading coefficient becomes 1. Panics on zero.
    pub fn monic(&self) -> Polynomial {
        let lc = self
            .leading_coefficient()
            .expect("monic of the zero polynomial");
        if lc == &Rational::one() {
            return self.clone();
        }
        self * &lc.recip()
    }

    /// Division with remainder: `self = quotient * divisor + remainder`,
    /// with the remainder zero or of degree strictly below the divisor's.
    /// Both parts are exact, and the pair is unique.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc = divisor.leading_coefficient().expect("nonzero divisor");
        let mut remainder = self.coeffs.clone();
        if remainder.len() <= dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quotient = vec![Rational::zero(); remainder.len() - dd];
        while remainder.len() > dd {
            let k = remainder.len() - 1 - dd;
            let factor = remainder.last().expect("nonempty") / lc;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let updated = &remainder[k + i] - &(&factor * dc);
                remainder[k + i] = updated;
            }
            debug_assert!(remainder.last().is_some_and(Rational::is_zero));
            remainder.pop();
            while remainder.len() > dd && remainder.last().is_some_and(Rational::is_zero) {
                remainder.pop();
            }
            quotient[k] = factor;
        }
        Ok((Polynomial::new(quotient), Polynomial::new(remainder)))
    }

    /// Exact quotient; fails with `NotDivisible` if a remainder survives.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (quotient, remainder) = self.div_rem(divisor)?;
        if remainder.is_zero() {
            Ok(quotient)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Monic greatest common divisor by Euclidean remainders.
    /// `gcd(p, 0)` is `monic(p)`; both inputs zero is a domain error.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor in gcd loop");
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// The square-free part `p / gcd(p, p')`, normalized to be monic.
    ///
    /// The result has the same distinct complex (hence real) roots as `p`,
    /// all simple. Zero or constant input is a domain error.
    pub fn square_free_part(&self) -> Result<Polynomial> {
        match self.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(0) => Err(Error::ConstantPolynomial),
            Some(_) => {
                let g = self.gcd(&self.derivative())?;
                let q = self.exact_div(&g).expect("gcd(p, p') divides p");
                Ok(q.monic())
            }
        }
    }

    /// Cauchy root bound `B = 1 + max_{i<d} |c_i| / |c_d|`. Every real root
    /// lies in `(-B, B]` (in fact strictly inside). Degree must be >= 1.
    pub fn cauchy_bound(&self) -> Result<Rational> {
        match self.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(0) => Err(Error::ConstantPolynomial),
            Some(d) => {
                let lc = self.coeffs[d].abs();
                let mut max = Rational::zero();
                for c in &self.coeffs[..d] {
                    let a = c.abs();
                    if a > max {
                        max = a;
                    }
                }
                Ok(Rational::one() + max / lc)
            }
        }
    }

    /// Expands `prod (x - r)^m` over the given roots. The empty product is
    /// the constant 1. Multiplicities must be >= 1.
    pub fn from_roots(roots: &[(Rational, u32)]) -> Polynomial {
        let mut acc = Polynomial::one();
        for (root, multiplicity) in roots {
            debug_assert!(*multiplicity >= 1, "multiplicity must be >= 1");
            let factor = Polynomial::new(vec![-root, Rational::one()]);
            for _ in 0..*multiplicity {
                acc = &acc * &factor;
            }
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    /// Renders as an expression in `x`, highest degree first: the Sturm
    /// sequence of `x^3 - 5x^2 + 7x - 3` ends in `8/9x - 8/9`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = magnitude == Rational::one();
            if i == 0 || !unit {
                write!(f, "{magnitude}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let updated = &coeffs[i + j] + &(a * b);
                coeffs[i + j] = updated;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Mul<&Rational> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Rational) -> Polynomial {
        if rhs.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * rhs).collect(),
        }
    }
}
