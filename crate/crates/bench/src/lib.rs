//! Fixture builders shared by the benchmarks.

use sturm_core::{Polynomial, Rational};

/// The product of (x - 1)(x - 2)...(x - n): n well-separated integer roots
/// with rapidly growing coefficients.
pub fn factorial_roots(n: u32) -> Polynomial {
    let entries: Vec<(Rational, u32)> = (1..=n as i64).map(|k| (Rational::from(k), 1)).collect();
    Polynomial::from_roots(&entries)
}

/// n simple roots packed into (0, 1): stresses deep bisection.
pub fn clustered_roots(n: u32) -> Polynomial {
    let entries: Vec<(Rational, u32)> = (1..=n as i64)
        .map(|k| (Rational::new(k, n as i64 + 1), 1))
        .collect();
    Polynomial::from_roots(&entries)
}

/// (x^2 - 2) times a rootless quadratic: refinement target with an
/// irrational root.
pub fn sqrt_two_instance() -> Polynomial {
    let base = Polynomial::new(vec![Rational::from(-2), Rational::zero(), Rational::one()]);
    let rootless = Polynomial::new(vec![Rational::from(3), Rational::one(), Rational::one()]);
    &base * &rootless
}
