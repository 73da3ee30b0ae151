//! Sturm sequences, sign-variation counting, and distinct-root counts over
//! half-open intervals.
//!
//! The sequence attached to `f` starts from the seeds `p0 = f`, `p1 = f'`
//! and repeats `p_{i+2} = -(p_i mod p_{i+1})` until the remainder vanishes.
//! Writing `V_f(c)` for the number of sign alternations of the sequence
//! evaluated at `c`, the count of distinct roots of `f` in `(a, b]` is
//! `V_f(a) - V_f(b)` whenever neither endpoint is a *multiple* root of `f`.
//! Simple roots at the endpoints are fine — that refinement is the whole
//! reason this module exposes endpoint policies instead of demanding
//! root-free endpoints.
//!
//! At a multiple root `c` (that is, `f(c) = f'(c) = 0`) every entry of the
//! sequence vanishes, so `V_f(c) = 0` and the variation count carries no
//! information there. [`EndpointPolicy::Strict`] surfaces that situation as
//! [`Error::DegenerateEndpoint`]; [`EndpointPolicy::SquareFree`] removes it
//! by replacing `f` with its square-free part, which has the same distinct
//! roots, all simple.

use std::fmt;

use crate::error::{EndpointSide, Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// A pseudo-remainder (Sturm) sequence.
///
/// Stored entries stop at the last nonzero remainder; conceptually the
/// sequence continues with zeros up to index `deg(p0)`, and
/// [`SturmSequence::padded_len`] reports that conceptual length. Trailing
/// zeros never affect variation counts, so they are not stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SturmSequence {
    polys: Vec<Polynomial>,
}

impl SturmSequence {
    /// The sequence seeded by `(f, f')`. Requires `deg(f) >= 1`; constant
    /// inputs are rejected here and handled by the counting operations.
    pub fn new(f: &Polynomial) -> Result<Self> {
        match f.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(0) => Err(Error::ConstantPolynomial),
            Some(_) => Self::with_seeds(f.clone(), f.derivative()),
        }
    }

    /// The same recurrence from arbitrary seeds `(p0, p1)`, `p1` nonzero.
    ///
    /// This is the generalized form used to state the common-multiple
    /// scaling law: seeding with `(g*a, g*b)` yields `g` times the sequence
    /// seeded with `(a, b)`, entry by entry.
    pub fn with_seeds(p0: Polynomial, p1: Polynomial) -> Result<Self> {
        if p1.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut polys = vec![p0, p1];
        loop {
            let [.., prev, last] = polys.as_slice() else {
                unreachable!("seeded with two entries");
            };
            let (_, remainder) = prev.div_rem(last).expect("last entry is nonzero");
            if remainder.is_zero() {
                break;
            }
            polys.push(-&remainder);
        }
        Ok(Self { polys })
    }

    /// Stored entries `p0, p1, ..., pk` (the last one nonzero).
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The seeds `(p0, p1)` the sequence was built from.
    pub fn seeds(&self) -> (&Polynomial, &Polynomial) {
        (&self.polys[0], &self.polys[1])
    }

    /// Conceptual length `deg(p0) + 1` including implicit trailing zeros
    /// (never less than the stored length).
    pub fn padded_len(&self) -> usize {
        let conceptual = self.polys[0].degree().map_or(0, |d| d + 1);
        conceptual.max(self.polys.len())
    }

    /// Signs of the stored entries evaluated at `c`.
    pub fn sign_sequence(&self, c: &Rational) -> SignSequence {
        SignSequence {
            signs: self.polys.iter().map(|p| p.eval(c).signum()).collect(),
        }
    }

    /// Signs at `c` including the implicit trailing zeros, as the padded
    /// sequence of length `padded_len()` would show them.
    pub fn sign_sequence_padded(&self, c: &Rational) -> SignSequence {
        let mut signs = self.sign_sequence(c);
        signs.signs.resize(self.padded_len(), 0);
        signs
    }

    /// The variation count `V(c)` of this sequence at `c`.
    pub fn variations_at(&self, c: &Rational) -> usize {
        self.sign_sequence(c).variations()
    }
}

impl fmt::Debug for SturmSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.polys).finish()
    }
}

/// A sequence of signs, each -1, 0, or +1.
#[derive(Clone, PartialEq, Eq)]
pub struct SignSequence {
    signs: Vec<i8>,
}

impl SignSequence {
    /// Wraps raw signs. Panics if any entry is outside {-1, 0, +1}.
    pub fn new(signs: Vec<i8>) -> Self {
        assert!(
            signs.iter().all(|s| (-1..=1).contains(s)),
            "sign entries must be -1, 0, or +1"
        );
        Self { signs }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Number of sign alternations: pairs of opposite-sign entries
    /// separated only by zeros. Equivalently, drop every zero and count
    /// adjacent strict sign changes.
    pub fn variations(&self) -> usize {
        let mut count = 0;
        let mut prev: Option<i8> = None;
        for &s in &self.signs {
            if s == 0 {
                continue;
            }
            if let Some(p) = prev {
                if p != s {
                    count += 1;
                }
            }
            prev = Some(s);
        }
        count
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.signs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The half-open interval `(a, b]` with rational endpoints, `a <= b`.
/// `(a, a]` is the empty set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Interval {
    a: Rational,
    b: Rational,
}

impl Interval {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a > b {
            return Err(Error::InvalidInterval { a, b });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_empty(&self) -> bool {
        self.a == self.b
    }

    pub fn width(&self) -> Rational {
        &self.b - &self.a
    }

    pub fn midpoint(&self) -> Rational {
        (&self.a + &self.b) / Rational::from(2)
    }

    /// Membership test: `a < x <= b`.
    pub fn contains(&self, x: &Rational) -> bool {
        &self.a < x && x <= &self.b
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}]", self.a, self.b)
    }
}

/// How counting treats interval endpoints that are multiple roots.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EndpointPolicy {
    /// Count on `f` itself and refuse multiple-root endpoints with
    /// [`Error::DegenerateEndpoint`]. Simple-root endpoints are fine.
    Strict,
    /// Count on the square-free part of `f` instead. Same distinct roots,
    /// no multiple roots anywhere, so any rational endpoints are valid.
    SquareFree,
}

/// The sign function on exact rationals.
pub fn sign(x: &Rational) -> i8 {
    x.signum()
}

/// The variation count `V(c)` for the sequence seeded by `(f, f')`.
pub fn sign_variations_at(f: &Polynomial, c: &Rational) -> Result<usize> {
    Ok(SturmSequence::new(f)?.variations_at(c))
}

/// True iff `c` is a multiple (degenerate) root: `f(c) = f'(c) = 0`.
pub fn is_multiple_root(f: &Polynomial, c: &Rational) -> bool {
    f.eval(c).is_zero() && f.derivative().eval(c).is_zero()
}

/// Counts the distinct roots of `f` in the half-open interval `(a, b]`.
///
/// The empty interval `(a, a]` counts 0 before any policy check, and a
/// nonzero constant `f` counts 0 everywhere. Multiple roots inside the
/// interval are counted once, under either policy.
pub fn count_roots(f: &Polynomial, interval: &Interval, policy: EndpointPolicy) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if interval.is_empty() {
        return Ok(0);
    }
    if f.is_constant() {
        return Ok(0);
    }
    let reduced;
    let counted = match policy {
        EndpointPolicy::Strict => {
            for (side, point) in [
                (EndpointSide::Left, interval.a()),
                (EndpointSide::Right, interval.b()),
            ] {
                if is_multiple_root(f, point) {
                    return Err(Error::DegenerateEndpoint {
                        side,
                        value: point.clone(),
                    });
                }
            }
            f
        }
        EndpointPolicy::SquareFree => {
            reduced = f.square_free_part()?;
            &reduced
        }
    };
    let seq = SturmSequence::new(counted)?;
    let va = seq.variations_at(interval.a());
    let vb = seq.variations_at(interval.b());
    Ok(va
        .checked_sub(vb)
        .expect("variation count cannot increase across non-degenerate endpoints"))
}

/// Total number of distinct real roots of `f`, counted over `(-B, B]` with
/// `B` the Cauchy bound and the square-free policy. Constants have none.
pub fn count_distinct_real_roots(f: &Polynomial) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(0);
    }
    let bound = f.cauchy_bound()?;
    let interval = Interval::new(-&bound, bound).expect("-B <= B");
    count_roots(f, &interval, EndpointPolicy::SquareFree)
}
