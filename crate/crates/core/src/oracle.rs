//! Ground-truth machinery for tests, independent of the counting kernel.
//!
//! Everything here works by direct rational comparison and polynomial
//! expansion; nothing touches remainder sequences or variation counts. That
//! independence is the point: when a count from the kernel matches a count
//! from this module, the two answers were produced by disjoint code paths.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::sturm::Interval;

/// A polynomial described by its rational roots and their multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSpec {
    entries: Vec<(Rational, u32)>,
}

impl RootSpec {
    /// Builds a spec from `(root, multiplicity)` pairs.
    ///
    /// Panics unless the roots are strictly increasing and every
    /// multiplicity is at least 1; a malformed spec is a bug in the test
    /// that wrote it, not a runtime condition.
    pub fn new(entries: Vec<(Rational, u32)>) -> Self {
        assert!(
            entries.windows(2).all(|w| w[0].0 < w[1].0),
            "roots must be strictly increasing"
        );
        assert!(
            entries.iter().all(|(_, m)| *m >= 1),
            "multiplicities must be at least 1"
        );
        Self { entries }
    }

    pub fn entries(&self) -> &[(Rational, u32)] {
        &self.entries
    }

    pub fn roots(&self) -> impl Iterator<Item = &Rational> {
        self.entries.iter().map(|(r, _)| r)
    }

    /// Number of distinct roots.
    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    /// Sum of multiplicities, i.e. the degree of `to_polynomial()` before
    /// any extra factors.
    pub fn total_multiplicity(&self) -> u32 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn has_multiple_root(&self) -> bool {
        self.entries.iter().any(|(_, m)| *m >= 2)
    }

    pub fn is_multiple_root(&self, x: &Rational) -> bool {
        self.entries.iter().any(|(r, m)| *m >= 2 && r == x)
    }

    pub fn is_root(&self, x: &Rational) -> bool {
        self.entries.iter().any(|(r, _)| r == x)
    }

    /// Distinct roots lying in the half-open interval, by comparison.
    pub fn count_in(&self, interval: &Interval) -> usize {
        self.roots().filter(|r| interval.contains(r)).count()
    }

    /// Minimum difference between consecutive roots; 1 when there are
    /// fewer than two roots.
    pub fn min_root_gap(&self) -> Rational {
        self.entries
            .windows(2)
            .map(|w| &w[1].0 - &w[0].0)
            .min()
            .unwrap_or_else(Rational::one)
    }

    /// Expands the product of `(x - r)^m` over the entries. The empty spec
    /// expands to 1.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_roots(&self.entries)
    }
}

/// Distinct roots of `spec` lying in `interval`, counted by direct
/// comparison. The ground truth against which kernel counts are judged.
pub fn oracle_count(spec: &RootSpec, interval: &Interval) -> usize {
    spec.count_in(interval)
}

/// Deterministically generates a root spec and a polynomial vanishing
/// exactly at those roots, as a function of `seed`.
///
/// Roots are rationals with numerator and denominator magnitudes at most
/// 50 (kept small so remainder coefficients stay inspectable in failure
/// output); multiplicities are drawn from {1, 2, 3} and their total never
/// exceeds `degree_budget`. There is always at least one real root. Some
/// instances are multiplied by an irreducible quadratic `x^2 + q` (q > 0)
/// to exercise non-real factors, and every instance gets a nonzero scalar
/// factor so leading coefficients are not always 1.
pub fn generate_instance(seed: u64, degree_budget: u32) -> (RootSpec, Polynomial) {
    assert!(degree_budget >= 1, "degree budget must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let quadratic = degree_budget >= 3 && rng.gen_bool(0.25);
    let mut remaining = if quadratic {
        degree_budget - 2
    } else {
        degree_budget
    };

    let mut entries: Vec<(Rational, u32)> = Vec::new();
    while remaining >= 1 {
        let multiplicity = rng.gen_range(1..=remaining.min(3));
        let root = loop {
            let candidate = random_rational(&mut rng, 50, 50);
            if entries.iter().all(|(r, _)| *r != candidate) {
                break candidate;
            }
        };
        entries.push((root, multiplicity));
        remaining -= multiplicity;
        if remaining >= 1 && rng.gen_bool(0.3) {
            break;
        }
    }
    entries.sort_by(|x, y| x.0.cmp(&y.0));
    let spec = RootSpec::new(entries);

    let mut poly = spec.to_polynomial();
    if quadratic {
        let q = random_rational(&mut rng, 50, 50).abs() + Rational::one();
        poly = &poly * &Polynomial::new(vec![q, Rational::zero(), Rational::one()]);
    }
    let scalar = loop {
        let candidate = random_rational(&mut rng, 5, 5);
        if !candidate.is_zero() {
            break candidate;
        }
    };
    poly = &poly * &scalar;

    (spec, poly)
}

fn random_rational(rng: &mut ChaCha8Rng, max_numer: i64, max_denom: i64) -> Rational {
    let numer = rng.gen_range(-max_numer..=max_numer);
    let denom = rng.gen_range(1..=max_denom);
    Rational::new(numer, denom)
}

/// A radius `h <= initial` such that `g` has no root in `[c - h, c + h]`,
/// certified exactly: `h * M < |g(c)|` where `M` bounds `|g'|` on that
/// interval via the triangle inequality on coefficients.
///
/// This makes "for all sufficiently small epsilon" concrete when the other
/// roots involved are irrational and no gap can be read off a spec.
/// Panics if `g(c) = 0` (no such radius exists) or `initial <= 0`.
pub fn root_free_radius(g: &Polynomial, c: &Rational, initial: &Rational) -> Rational {
    assert!(initial.is_positive(), "initial radius must be positive");
    let value = g.eval(c).abs();
    assert!(!value.is_zero(), "g must not vanish at c");
    let slope = g.derivative();
    if slope.is_zero() {
        return initial.clone();
    }
    let c_abs = c.abs();
    let mut h = initial.clone();
    loop {
        let reach = &c_abs + &h;
        let mut bound = Rational::zero();
        let mut power = Rational::one();
        for coeff in slope.coeffs() {
            bound = bound + coeff.abs() * &power;
            power = power * &reach;
        }
        if &h * &bound < value {
            return h;
        }
        h = h / Rational::from(2);
    }
}
