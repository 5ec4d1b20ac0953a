//! Adaptive series summation with a stall-window truncation criterion.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Truncation policy for the series oracles.
///
/// Summation stops once `stall_window` consecutive terms each satisfy
/// `|t| <= rel_tol * (1 + |partial|) + abs_tol`. A window (rather than a
/// single small term) is used because interleaved even/odd series can have
/// structural zero terms that would otherwise stop the sum early.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_terms: usize,
    pub stall_window: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            abs_tol: 1e-300,
            max_terms: 1000,
            stall_window: 5,
        }
    }
}

impl SeriesControl {
    pub(crate) fn validate(&self) -> Result<()> {
        if !self.rel_tol.is_finite() || self.rel_tol <= 0.0 {
            return Err(Error::Domain(format!(
                "rel_tol must be a positive finite number, got {}",
                self.rel_tol
            )));
        }
        if self.abs_tol.is_nan() || self.abs_tol < 0.0 {
            return Err(Error::Domain(format!(
                "abs_tol must be non-negative, got {}",
                self.abs_tol
            )));
        }
        if self.stall_window < 1 || self.max_terms < self.stall_window {
            return Err(Error::Domain(format!(
                "need max_terms >= stall_window >= 1, got max_terms={} stall_window={}",
                self.max_terms, self.stall_window
            )));
        }
        Ok(())
    }
}

/// A converged partial sum together with the number of terms consumed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: Complex64,
    pub terms_used: usize,
}

/// Accumulate terms `t_0, t_1, ...` until the stall criterion of `control`
/// holds, or fail with [`Error::Truncation`] at `max_terms`.
///
/// A generator that runs out of items is treated as emitting zeros from then
/// on, so finite term sequences sum exactly and stop one stall window later.
/// Any non-finite term or partial sum is reported as [`Error::Overflow`].
pub fn sum_series<I>(terms: I, control: &SeriesControl) -> Result<SeriesSum>
where
    I: IntoIterator<Item = Complex64>,
{
    control.validate()?;
    let mut it = terms.into_iter();
    let mut partial = Complex64::new(0.0, 0.0);
    let mut stalled = 0usize;
    for n in 0..control.max_terms {
        let t = it.next().unwrap_or(Complex64::new(0.0, 0.0));
        partial += t;
        if !partial.re.is_finite() || !partial.im.is_finite() {
            return Err(Error::Overflow(format!(
                "term {n} drove the partial sum out of double range"
            )));
        }
        if t.norm() <= control.rel_tol * (1.0 + partial.norm()) + control.abs_tol {
            stalled += 1;
            if stalled >= control.stall_window {
                return Ok(SeriesSum {
                    value: partial,
                    terms_used: n + 1,
                });
            }
        } else {
            stalled = 0;
        }
    }
    Err(Error::Truncation {
        partial,
        terms_used: control.max_terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    /// 1/n! terms of e, generated independently of any library code.
    struct ExpTerms {
        t: f64,
        n: usize,
    }

    impl Iterator for ExpTerms {
        type Item = Complex64;
        fn next(&mut self) -> Option<Complex64> {
            let out = self.t;
            self.n += 1;
            self.t /= self.n as f64;
            Some(c(out))
        }
    }

    #[test]
    fn sums_exponential_series() {
        let got = sum_series(ExpTerms { t: 1.0, n: 0 }, &SeriesControl::default()).unwrap();
        assert!((got.value.re - 1.0f64.exp()).abs() <= 1e-12);
        assert!(got.value.im == 0.0);
        assert!(got.terms_used < 30, "terms_used={}", got.terms_used);
    }

    #[test]
    fn all_zero_generator_stalls_immediately() {
        let control = SeriesControl::default();
        let got = sum_series(std::iter::repeat(c(0.0)), &control).unwrap();
        assert_eq!(got.value, c(0.0));
        assert_eq!(got.terms_used, control.stall_window);
    }

    #[test]
    fn harmonic_terms_fail_truncation() {
        let control = SeriesControl {
            max_terms: 50,
            ..SeriesControl::default()
        };
        let harmonic = (0..).map(|n| c(1.0 / (n as f64 + 1.0)));
        match sum_series(harmonic, &control) {
            Err(Error::Truncation { terms_used, .. }) => assert_eq!(terms_used, 50),
            other => panic!("expected truncation failure, got {other:?}"),
        }
    }

    #[test]
    fn finite_generator_sums_exactly() {
        let terms = vec![c(1.0), c(0.25), c(-0.5)];
        let got = sum_series(terms, &SeriesControl::default()).unwrap();
        // the three values are exactly representable, so the sum is exact
        assert_eq!(got.value, c(0.75));
    }

    #[test]
    fn truncation_error_carries_partial() {
        let control = SeriesControl {
            max_terms: 10,
            ..SeriesControl::default()
        };
        match sum_series(std::iter::repeat(c(1.0)), &control) {
            Err(Error::Truncation { partial, .. }) => assert_eq!(partial, c(10.0)),
            other => panic!("expected truncation, got {other:?}"),
        }
    }

    #[test]
    fn invalid_control_rejected() {
        let bad = SeriesControl {
            stall_window: 10,
            max_terms: 5,
            ..SeriesControl::default()
        };
        assert!(matches!(
            sum_series(std::iter::empty(), &bad),
            Err(Error::Domain(_))
        ));
        let bad_tol = SeriesControl {
            rel_tol: 0.0,
            ..SeriesControl::default()
        };
        assert!(matches!(
            sum_series(std::iter::empty(), &bad_tol),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn overflow_is_reported() {
        let huge = std::iter::repeat(c(f64::MAX));
        assert!(matches!(
            sum_series(huge, &SeriesControl::default()),
            Err(Error::Overflow(_))
        ));
    }
}
