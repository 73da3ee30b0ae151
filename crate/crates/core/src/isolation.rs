//! Root isolation and refinement driven by variation counts.
//!
//! Isolation runs on the square-free part of the input, so every distinct
//! real root of the original polynomial is covered exactly once and every
//! certificate is a clean variation drop of 1. Intervals are half-open
//! `(a, b]`, which makes bisection exact: splitting at the midpoint `m`
//! partitions `(a, b]` into `(a, m]` and `(m, b]` with no case analysis for
//! a root landing on `m`.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::sturm::{Interval, SturmSequence};

/// An isolating interval together with the variation counts certifying it.
///
/// The certificate is `variations_left - variations_right = 1` for the
/// square-free part of the queried polynomial: exactly one distinct root
/// lies in `interval`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootReport {
    pub interval: Interval,
    pub variations_left: usize,
    pub variations_right: usize,
}

impl RootReport {
    /// The number of roots this report certifies. Always 1 for reports
    /// produced by this module; kept as data so the arithmetic is checkable.
    pub fn certified_count(&self) -> usize {
        self.variations_left - self.variations_right
    }
}

/// Isolates the distinct real roots of `f`.
///
/// Returns one report per distinct real root, sorted by position, each
/// interval containing exactly that root. Multiplicities collapse: the
/// search runs on the square-free part. Zero and constant polynomials are
/// rejected (a constant has nothing to isolate and no Cauchy bound).
pub fn isolate_roots(f: &Polynomial) -> Result<Vec<RootReport>> {
    let reduced = f.square_free_part()?;
    let bound = f.cauchy_bound()?;
    let seq = SturmSequence::new(&reduced)?;
    let start = Interval::new(-&bound, bound).expect("-B <= B");
    let va = seq.variations_at(start.a());
    let vb = seq.variations_at(start.b());
    let mut reports = Vec::with_capacity(va - vb);
    subdivide(&seq, start, va, vb, &mut reports);
    Ok(reports)
}

fn subdivide(
    seq: &SturmSequence,
    interval: Interval,
    va: usize,
    vb: usize,
    out: &mut Vec<RootReport>,
) {
    match va - vb {
        0 => {}
        1 => out.push(RootReport {
            interval,
            variations_left: va,
            variations_right: vb,
        }),
        _ => {
            let m = interval.midpoint();
            let vm = seq.variations_at(&m);
            let (a, b) = (interval.a().clone(), interval.b().clone());
            subdivide(seq, Interval::new(a, m.clone()).unwrap(), va, vm, out);
            subdivide(seq, Interval::new(m, b).unwrap(), vm, vb, out);
        }
    }
}

/// Narrows a certified isolating interval to width at most `epsilon` by
/// bisection, preserving the certificate.
///
/// `report` must carry a valid certificate for (the square-free part of)
/// `f`, as produced by [`isolate_roots`]; anything else is rejected as
/// [`Error::InvalidCertificate`]. A report already narrow enough is
/// returned unchanged.
pub fn refine_root(f: &Polynomial, report: &RootReport, epsilon: &Rational) -> Result<RootReport> {
    if !epsilon.is_positive() {
        return Err(Error::NonPositiveEpsilon {
            epsilon: epsilon.clone(),
        });
    }
    let reduced = f.square_free_part()?;
    let seq = SturmSequence::new(&reduced)?;
    let mut va = seq.variations_at(report.interval.a());
    let mut vb = seq.variations_at(report.interval.b());
    if va - vb != 1 || va != report.variations_left || vb != report.variations_right {
        return Err(Error::InvalidCertificate {
            left: va,
            right: vb,
        });
    }
    let mut interval = report.interval.clone();
    while interval.width() > *epsilon {
        let m = interval.midpoint();
        let vm = seq.variations_at(&m);
        let (a, b) = (interval.a().clone(), interval.b().clone());
        if va - vm == 1 {
            interval = Interval::new(a, m).unwrap();
            vb = vm;
        } else {
            interval = Interval::new(m, b).unwrap();
            va = vm;
        }
    }
    Ok(RootReport {
        interval,
        variations_left: va,
        variations_right: vb,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sturm::EndpointPolicy;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    #[test]
    fn isolates_both_roots_of_the_squared_quadratic() {
        let f = poly(&[1, 0, -2, 0, 1]); // (x^2 - 1)^2, roots -1 and 1
        let reports = isolate_roots(&f).unwrap();
        assert_eq!(reports.len(), 2);
        assert!(reports[0].interval.contains(&Rational::from(-1)));
        assert!(reports[1].interval.contains(&Rational::one()));
        for report in &reports {
            assert_eq!(report.certified_count(), 1);
        }
        // sorted and disjoint
        assert!(reports[0].interval.b() <= reports[1].interval.a());
    }

    #[test]
    fn isolates_the_two_distinct_roots_of_the_cubic() {
        let f = poly(&[-3, 7, -5, 1]); // (x - 1)^2 (x - 3)
        let reports = isolate_roots(&f).unwrap();
        assert_eq!(reports.len(), 2);
        assert!(reports[0].interval.contains(&Rational::one()));
        assert!(reports[1].interval.contains(&Rational::from(3)));
    }

    #[test]
    fn rootless_polynomials_yield_no_reports() {
        assert_eq!(isolate_roots(&poly(&[1, 0, 1])).unwrap(), vec![]);
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        assert_eq!(
            isolate_roots(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(
            isolate_roots(&Polynomial::one()),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn refinement_narrows_around_an_irrational_root() {
        let f = poly(&[-2, 0, 1]); // roots at +-sqrt(2)
        let reports = isolate_roots(&f).unwrap();
        let positive = reports.last().unwrap();
        let eps = r(1, 1_000_000);
        let tight = refine_root(&f, positive, &eps).unwrap();
        assert!(tight.interval.width() <= eps);
        assert_eq!(tight.certified_count(), 1);
        // sqrt(2) = 1.41421356..., so the bracket must straddle it:
        // a^2 < 2 <= b^2 on the positive side, and both ends must sit
        // within eps of the known decimal expansion.
        let a = tight.interval.a();
        let b = tight.interval.b();
        assert!(a * a < Rational::from(2));
        assert!(b * b >= Rational::from(2));
        assert!(a > &r(1_414_212, 1_000_000));
        assert!(a < &r(1_414_214, 1_000_000));
        assert!(b > &r(1_414_213, 1_000_000));
        assert!(b < &r(1_414_215, 1_000_000));
    }

    #[test]
    fn refinement_is_identity_when_already_narrow() {
        let f = poly(&[-2, 0, 1]);
        let reports = isolate_roots(&f).unwrap();
        let narrow = refine_root(&f, &reports[0], &r(1, 1000)).unwrap();
        let again = refine_root(&f, &narrow, &r(1, 1000)).unwrap();
        assert_eq!(narrow, again);
    }

    #[test]
    fn refinement_checks_its_inputs() {
        let f = poly(&[-2, 0, 1]);
        let reports = isolate_roots(&f).unwrap();
        assert_eq!(
            refine_root(&f, &reports[0], &Rational::zero()),
            Err(Error::NonPositiveEpsilon {
                epsilon: Rational::zero()
            })
        );
        // an interval holding both roots is not a certificate for one
        let fake = RootReport {
            interval: Interval::new(Rational::from(-3), Rational::from(3)).unwrap(),
            variations_left: 2,
            variations_right: 0,
        };
        assert_eq!(
            refine_root(&f, &fake, &r(1, 2)),
            Err(Error::InvalidCertificate { left: 2, right: 0 })
        );
        // stale variation counts are rejected even if the drop is 1
        let stale = RootReport {
            variations_left: reports[0].variations_left + 1,
            variations_right: reports[0].variations_right + 1,
            interval: reports[0].interval.clone(),
        };
        assert_eq!(
            refine_root(&f, &stale, &r(1, 2)),
            Err(Error::InvalidCertificate {
                left: reports[0].variations_left,
                right: reports[0].variations_right,
            })
        );
    }

    #[test]
    fn refinement_respects_multiplicity_collapse() {
        // refine on the original (non-square-free) polynomial
        let f = poly(&[1, 0, -2, 0, 1]);
        let reports = isolate_roots(&f).unwrap();
        let tight = refine_root(&f, &reports[1], &r(1, 100)).unwrap();
        assert!(tight.interval.contains(&Rational::one()));
        assert!(tight.interval.width() <= r(1, 100));
    }

    #[test]
    fn isolation_agrees_with_interval_counting() {
        let f = poly(&[0, -6, 11, -6, 1]); // x(x-1)(x-2)(x-3)
        let reports = isolate_roots(&f).unwrap();
        for report in &reports {
            let counted =
                crate::sturm::count_roots(&f, &report.interval, EndpointPolicy::SquareFree)
                    .unwrap();
            assert_eq!(counted, 1);
        }
    }
}
