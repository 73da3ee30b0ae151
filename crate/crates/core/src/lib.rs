//! Exact real-root counting and isolation for univariate polynomials with
//! rational coefficients.
//!
//! The kernel counts distinct real roots in half-open intervals `(a, b]`
//! by sign-variation differences of a pseudo-remainder sequence, with
//! explicit handling for endpoints that are roots: simple roots are
//! counted correctly as-is, multiple roots are either refused or removed
//! by square-free reduction, depending on the chosen [`EndpointPolicy`].
//! Root isolation and refinement are built on the same counts. All
//! arithmetic is exact; there are no floating-point code paths.
//!
//! ```
//! use sturm_core::{count_roots, EndpointPolicy, Interval, Polynomial, Rational};
//!
//! // x^3 - 5x^2 + 7x - 3 = (x - 1)^2 (x - 3), coefficients low to high
//! let f = Polynomial::new([-3, 7, -5, 1].map(Rational::from).to_vec());
//! let iv = Interval::new(Rational::from(2), Rational::from(3)).unwrap();
//! assert_eq!(count_roots(&f, &iv, EndpointPolicy::Strict).unwrap(), 1);
//! ```

// Domain errors carry the offending rationals inline so callers can match
// on them directly; they are cold-path values, not worth boxing.
#![allow(clippy::result_large_err)]

pub mod error;
pub mod isolation;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod sturm;

pub use error::{EndpointSide, Error, Result};
pub use isolation::{isolate_roots, refine_root, RootReport};
pub use poly::Polynomial;
pub use rational::Rational;
pub use sturm::{
    count_distinct_real_roots, count_roots, is_multiple_root, sign_variations_at, EndpointPolicy,
    Interval, SignSequence, SturmSequence,
};
