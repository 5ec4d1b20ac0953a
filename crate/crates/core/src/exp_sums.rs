//! Multisected exponential sums `S(j,k) = Σ_n z^{jn+k}/(jn+k)!`: the
//! roots-of-unity closed form, the defining-series oracle, and the
//! derivative relation connecting neighbouring offsets.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{sum_series, RootsTable, SeriesControl, SeriesSum};

/// Stride `j` and offset `k` selecting the residue-class series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultisectIndex {
    pub j: u32,
    pub k: u32,
}

impl MultisectIndex {
    pub fn new(j: u32, k: u32) -> Self {
        Self { j, k }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.j == 0 {
            return Err(Error::Domain("multisection stride j must be >= 1".into()));
        }
        Ok(())
    }
}

fn check_finite(z: Complex64) -> Result<()> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {z}")));
    }
    Ok(())
}

/// `z^m / m!` evaluated as `Π_{i=1..m} (z/i)`, which also gives `0^0 = 1`.
fn pow_over_factorial(z: Complex64, m: u32) -> Complex64 {
    let mut t = Complex64::new(1.0, 0.0);
    for i in 1..=m {
        t = t * z / i as f64;
    }
    t
}

/// Finite head `Σ z^m/m!` over `m ≡ k (mod j)`, `0 <= m < k`.
///
/// The roots-of-unity average selects *every* index in the residue class,
/// including those below the series' starting offset `k`; subtracting this
/// head keeps the closed form equal to the defining series once `k >= j`.
fn head_sum(idx: MultisectIndex, z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut m = idx.k % idx.j;
    while m < idx.k {
        acc += pow_over_factorial(z, m);
        m += idx.j;
    }
    acc
}

/// Closed form of `S(j,k)`: the phase-weighted exponential average
/// `(1/j) Σ_l exp(z ω_l) / ω_l^k` minus the residue-class head, so the result
/// equals the defining series for every `k >= 0`.
pub fn s_closed(idx: MultisectIndex, z: Complex64) -> Result<Complex64> {
    idx.validate()?;
    check_finite(z)?;
    let table = RootsTable::new(idx.j)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 1..=idx.j {
        let omega = table.root(l);
        // 1/ω^k looked up as the reduced phase ω^{-lk}
        let inv_phase = table.phase(-(l as i128 * idx.k as i128));
        acc += (z * omega).exp() * inv_phase;
    }
    let value = acc / idx.j as f64 - head_sum(idx, z);
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::Overflow(format!("S({},{}) overflowed at z={z}", idx.j, idx.k)));
    }
    Ok(value)
}

struct STermIter {
    z: Complex64,
    j: u32,
    m: u64, // index jn + k of the term currently held
    t: Complex64,
}

impl Iterator for STermIter {
    type Item = Complex64;

    fn next(&mut self) -> Option<Complex64> {
        let out = self.t;
        let mut t = self.t;
        for i in 1..=self.j as u64 {
            t = t * self.z / (self.m + i) as f64;
        }
        self.t = t;
        self.m += self.j as u64;
        Some(out)
    }
}

/// Defining series `Σ_n z^{jn+k}/(jn+k)!`, summed with the stall criterion of
/// `control`. Only the genuinely present terms are generated (stride `j`), so
/// the stall window never sees structural zeros.
pub fn s_series(idx: MultisectIndex, z: Complex64, control: &SeriesControl) -> Result<SeriesSum> {
    idx.validate()?;
    check_finite(z)?;
    let terms = STermIter {
        z,
        j: idx.j,
        m: idx.k as u64,
        t: pow_over_factorial(z, idx.k),
    };
    sum_series(terms, control)
}

/// Residual of the derivative relation `d/dz S(j,k) = S(j,k-1)`.
///
/// The left side differentiates the closed form term by term (each summand
/// `exp(zω)/ω^k` picks up a factor `ω`; each head term `z^m/m!` drops to
/// `z^{m-1}/(m-1)!`), which exercises a different phase-reduction path than
/// evaluating `s_closed` at `k-1` directly.
pub fn s_derivative_check(idx: MultisectIndex, z: Complex64) -> Result<f64> {
    idx.validate()?;
    check_finite(z)?;
    if idx.k == 0 {
        return Err(Error::Domain(
            "derivative relation needs k >= 1; the chain starts at S(j,1)".into(),
        ));
    }
    let table = RootsTable::new(idx.j)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 1..=idx.j {
        let omega = table.root(l);
        let inv_phase = table.phase(-(l as i128 * idx.k as i128));
        acc += omega * (z * omega).exp() * inv_phase;
    }
    let mut derivative = acc / idx.j as f64;
    let mut m = idx.k % idx.j;
    while m < idx.k {
        if m >= 1 {
            derivative -= pow_over_factorial(z, m - 1);
        }
        m += idx.j;
    }
    let reference = s_closed(MultisectIndex::new(idx.j, idx.k - 1), z)?;
    Ok((derivative - reference).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel_ok(got: Complex64, want: Complex64, tol: f64) -> bool {
        (got - want).norm() <= tol * (1.0 + want.norm())
    }

    #[test]
    fn s10_is_exponential() {
        let got = s_closed(MultisectIndex::new(1, 0), c(0.8, 0.0)).unwrap();
        assert!(rel_ok(got, c(2.225540928492468, 0.0), 1e-14), "{got}");
    }

    #[test]
    fn s20_is_cosh() {
        let got = s_closed(MultisectIndex::new(2, 0), c(1.0, 0.0)).unwrap();
        assert!(rel_ok(got, c(1.5430806348152437, 0.0), 1e-14), "{got}");
    }

    #[test]
    fn s22_exercises_head_correction() {
        // Σ_{n>=0} z^{2n+2}/(2n+2)! = cosh z - 1
        let got = s_closed(MultisectIndex::new(2, 2), c(1.0, 0.0)).unwrap();
        assert!(rel_ok(got, c(0.5430806348152438, 0.0), 1e-13), "{got}");
        let series = s_series(MultisectIndex::new(2, 2), c(1.0, 0.0), &SeriesControl::default())
            .unwrap()
            .value;
        assert!(rel_ok(got, series, 1e-13));
    }

    #[test]
    fn s30_matches_three_phase_average() {
        let z = c(0.5, 0.2);
        let w1 = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let w2 = Complex64::from_polar(1.0, 4.0 * std::f64::consts::PI / 3.0);
        let want = ((z * w1).exp() + (z * w2).exp() + z.exp()) / 3.0;
        let got = s_closed(MultisectIndex::new(3, 0), z).unwrap();
        assert!(rel_ok(got, want, 1e-14), "{got} vs {want}");
    }

    #[test]
    fn series_degenerate_offsets_at_zero() {
        let control = SeriesControl::default();
        let got = s_series(MultisectIndex::new(5, 0), c(0.0, 0.0), &control).unwrap();
        assert_eq!(got.value, c(1.0, 0.0));
        let got = s_series(MultisectIndex::new(4, 3), c(0.0, 0.0), &control).unwrap();
        assert_eq!(got.value, c(0.0, 0.0));
    }

    #[test]
    fn series_cross_checks_closed_form() {
        let idx = MultisectIndex::new(3, 1);
        let z = c(1.2, 0.0);
        let closed = s_closed(idx, z).unwrap();
        let series = s_series(idx, z, &SeriesControl::default()).unwrap().value;
        assert!(rel_ok(series, closed, 1e-12));
    }

    #[test]
    fn oracle_agreement_over_grid() {
        let control = SeriesControl::default();
        let re_im = [-3.0, -1.0, 0.0, 1.0, 3.0];
        for j in 1..=6u32 {
            for k in 0..=(j + 2) {
                let idx = MultisectIndex::new(j, k);
                for &a in &re_im {
                    for &b in &re_im {
                        let z = c(a, b);
                        let closed = s_closed(idx, z).unwrap();
                        let series = s_series(idx, z, &control).unwrap().value;
                        assert!(
                            (closed - series).norm() <= 1e-11 * (1.0 + closed.norm()),
                            "j={j} k={k} z={z}: {closed} vs {series}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn residue_classes_partition_the_exponential() {
        for j in 1..=8u32 {
            for &z in &[c(0.7, 0.0), c(-1.3, 0.8), c(2.0, -2.0)] {
                let mut total = c(0.0, 0.0);
                for k in 0..j {
                    total += s_closed(MultisectIndex::new(j, k), z).unwrap();
                }
                let want = z.exp();
                assert!(rel_ok(total, want, 1e-12), "j={j} z={z}");
            }
        }
    }

    #[test]
    fn k_reduction_identity() {
        // S(j,k) == S(j, k mod j) - head
        for &(j, k) in &[(2u32, 5u32), (3, 7), (4, 9), (5, 12)] {
            let z = c(0.9, -0.4);
            let full = s_closed(MultisectIndex::new(j, k), z).unwrap();
            let reduced = s_closed(MultisectIndex::new(j, k % j), z).unwrap();
            let head = super::head_sum(MultisectIndex::new(j, k), z);
            assert!(
                (full - (reduced - head)).norm() <= 1e-12 * (1.0 + full.norm()),
                "j={j} k={k}"
            );
        }
    }

    #[test]
    fn derivative_residual_small() {
        let r = s_derivative_check(MultisectIndex::new(3, 1), c(0.9, 0.0)).unwrap();
        let scale = 1.0 + s_closed(MultisectIndex::new(3, 0), c(0.9, 0.0))
            .unwrap()
            .norm();
        assert!(r <= 1e-12 * scale, "residual {r}");
    }

    #[test]
    fn derivative_residual_exact_at_origin_j2() {
        let r = s_derivative_check(MultisectIndex::new(2, 1), c(0.0, 0.0)).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn derivative_matches_finite_difference_of_series() {
        // secondary oracle: central difference of the defining series
        let idx = MultisectIndex::new(5, 3);
        let z = c(1.0, 0.5);
        let h = 1e-6;
        let control = SeriesControl::default();
        let plus = s_series(idx, z + c(h, 0.0), &control).unwrap().value;
        let minus = s_series(idx, z - c(h, 0.0), &control).unwrap().value;
        let fd = (plus - minus) / (2.0 * h);
        let closed = s_closed(MultisectIndex::new(5, 2), z).unwrap();
        assert!((fd - closed).norm() <= 1e-7, "fd={fd} closed={closed}");
        let r = s_derivative_check(idx, z).unwrap();
        assert!(r <= 1e-12 * (1.0 + closed.norm()));
    }

    #[test]
    fn derivative_rejects_k_zero() {
        assert!(matches!(
            s_derivative_check(MultisectIndex::new(3, 0), c(1.0, 0.0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn zero_stride_rejected() {
        assert!(matches!(
            s_closed(MultisectIndex::new(0, 0), c(1.0, 0.0)),
            Err(Error::Domain(_))
        ));
    }

    proptest! {
        #[test]
        fn conjugation_symmetry(
            j in 1u32..=6,
            k in 0u32..=8,
            re in -3.0f64..3.0,
            im in -3.0f64..3.0,
        ) {
            let idx = MultisectIndex::new(j, k);
            let z = c(re, im);
            let direct = s_closed(idx, z.conj()).unwrap();
            let conjugated = s_closed(idx, z).unwrap().conj();
            prop_assert!((direct - conjugated).norm() <= 1e-13 * (1.0 + direct.norm()));
        }

        #[test]
        fn real_arguments_give_real_values(
            j in 1u32..=6,
            k in 0u32..=8,
            re in -3.0f64..3.0,
        ) {
            let v = s_closed(MultisectIndex::new(j, k), c(re, 0.0)).unwrap();
            prop_assert!(v.im.abs() <= 1e-12 * (1.0 + v.norm()));
        }
    }
}
