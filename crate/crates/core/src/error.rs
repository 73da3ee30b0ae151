use crate::rational::Rational;

/// Which end of a half-open interval an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndpointSide {
    Left,
    Right,
}

impl std::fmt::Display for EndpointSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EndpointSide::Left => write!(f, "left"),
            EndpointSide::Right => write!(f, "right"),
        }
    }
}

/// Errors raised by the kernel.
///
/// Everything here is a domain error: the arithmetic itself is exact and
/// cannot fail, so the only failure modes are inputs outside an operation's
/// domain. `DegenerateEndpoint` is singled out because it is the one error
/// with mathematical content: the variation count at a multiple root carries
/// no information, so a strict count over such an endpoint must be refused
/// rather than answered.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomial division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("not divisible: division leaves a nonzero remainder")]
    NotDivisible,

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("operation requires degree >= 1, got a constant polynomial")]
    ConstantPolynomial,

    #[error("invalid interval: left endpoint {a} exceeds right endpoint {b}")]
    InvalidInterval { a: Rational, b: Rational },

    #[error(
        "degenerate endpoint: {side} endpoint {value} is a multiple root \
         (f and f' both vanish there, so its variation count carries no information)"
    )]
    DegenerateEndpoint { side: EndpointSide, value: Rational },

    #[error("invalid root certificate: V(a) - V(b) = {left} - {right}, expected 1")]
    InvalidCertificate { left: usize, right: usize },

    #[error("refinement width must be positive, got {epsilon}")]
    NonPositiveEpsilon { epsilon: Rational },
}

pub type Result<T> = std::result::Result<T, Error>;
