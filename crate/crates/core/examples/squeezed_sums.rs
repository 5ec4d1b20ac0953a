//! Hermite sums with the half-index factorial denominator and their closed
//! forms in `1 + 4z²`: the even sum, the odd sum, and the interleaved
//! `Σ z^n H_n(x)/⌊n/2⌋!` identity, plus the tie back to Gaussian smoothing.
//!
//! Run with: `cargo run --example squeezed_sums`

use hermite_multisect::numerics::SeriesControl;
use hermite_multisect::operators::{ij_series, OperatorQuery, TestFunction};
use hermite_multisect::squeezed::{
    k2010_closed, k2110_closed, k_combined_closed, k_series, KPoint, KVariant,
};
use num_complex::Complex64;

fn main() {
    let control = SeriesControl::default();

    println!("closed forms vs series at z = 0.3, x = 1.4:");
    let p = KPoint::new(Complex64::new(0.3, 0.0), 1.4);
    for (label, closed, variant) in [
        ("even    ", k2010_closed(&p).unwrap(), KVariant::Even),
        ("odd     ", k2110_closed(&p).unwrap(), KVariant::Odd),
        ("combined", k_combined_closed(&p).unwrap(), KVariant::Combined),
    ] {
        let series = k_series(variant, &p, &control).unwrap();
        let rel = (closed - series.value).norm() / (1.0 + closed.norm());
        println!(
            "  {label} closed = {:+.12}  series = {:+.12}  rel err {rel:.1e} ({} terms)",
            closed.re, series.value.re, series.terms_used
        );
    }

    // the combined closed form is literally even + odd
    let sum = k2010_closed(&p).unwrap() + k2110_closed(&p).unwrap();
    println!("  even + odd = {:+.15} (combined = {:+.15})", sum.re, k_combined_closed(&p).unwrap().re);

    // complex z inside the convergence disc |z| < 1/2
    println!("\ncomplex arguments (principal branch of (1+4z²)^(1/2)):");
    for z in [Complex64::new(0.0, 0.35), Complex64::new(0.25, 0.25)] {
        let p = KPoint::new(z, -0.8);
        let closed = k_combined_closed(&p).unwrap();
        let series = k_series(KVariant::Combined, &p, &control).unwrap().value;
        println!(
            "  z = {:+.2}{:+.2}i: closed {:+.10}{:+.10}i  series {:+.10}{:+.10}i",
            z.re, z.im, closed.re, closed.im, series.re, series.im
        );
    }

    // the even sum times e^{-x²} is the j = 2 operator acting on e^{-x²}
    println!("\ntie to the smoothing operator (scale z, on e^(-x²)):");
    let gauss = TestFunction::gaussian(1.0).unwrap();
    for &(z, x) in &[(0.2, 0.5), (0.35, 1.1)] {
        let lhs = k2010_closed(&KPoint::new(Complex64::new(z, 0.0), x)).unwrap() * (-x * x).exp();
        let rhs = ij_series(&OperatorQuery::new(gauss.clone(), z, x, 2), &control).unwrap();
        println!("  z={z}, x={x}: even·e^(-x²) = {:.12}  operator = {:.12}", lhs.re, rhs.re);
    }

    // the series oracle refuses arguments outside its validated disc, and
    // the closed form refuses the branch point itself
    println!("\nguard rails:");
    let err = k_series(KVariant::Even, &KPoint::new(Complex64::new(0.45, 0.0), 0.0), &control).unwrap_err();
    println!("  series at |z| = 0.45: {err}");
    let err = k2010_closed(&KPoint::new(Complex64::new(0.0, 0.5), 0.0)).unwrap_err();
    println!("  closed at z = i/2: {err}");
}
